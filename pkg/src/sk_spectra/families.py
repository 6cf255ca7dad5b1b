"""Constructors for the tridiagonal matrix families.

Four related families, all of order n+1 with 0-based rows i = 0..n:

* ``clement(n)``       -- zero diagonal, superdiagonal 1..n, subdiagonal n..1
                          (the classic Clement / Sylvester-Kac test matrix).
* ``j_matrix``         -- Clement bands plus diagonal z0 + (n-2i)*z1.
* ``m_matrix``         -- diagonal x + i*y, superdiagonal (i+1)*u,
                          subdiagonal (n-i)*v.
* ``m_pm_matrix``      -- diagonal ((n-i)*a +/- i*b)*r, superdiagonal (i+1)*b,
                          subdiagonal (n-i)*a.

Every constructor is ring-generic: pass MultiPoly parameters for symbolic
matrices, Fractions for exact numeric ones, floats for benchmarking.  The
j and m_pm families are entrywise reparameterizations of the m family;
``substitution_to_m`` computes the matching m parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .exact_arith import MultiPoly, const_like, variables
from .tridiag import Tridiagonal

SIGNS = ("plus", "minus")

#: Number of scalar parameters per family tag (sign excluded).
FAMILY_ARITY = {"clement": 0, "j": 2, "m": 4, "mpm": 3}


class ParameterCountMismatch(ValueError):
    """Raised when a flat parameter list has the wrong length for a family."""


@dataclass(frozen=True)
class JParams:
    n: int
    z0: object
    z1: object

    def __post_init__(self):
        _check_n(self.n)

    @classmethod
    def symbolic(cls, n: int) -> JParams:
        return cls(n, *variables("z0", "z1"))


@dataclass(frozen=True)
class MParams:
    n: int
    x: object
    y: object
    u: object
    v: object

    def __post_init__(self):
        _check_n(self.n)

    @classmethod
    def symbolic(cls, n: int) -> MParams:
        return cls(n, *variables("x", "y", "u", "v"))


@dataclass(frozen=True)
class PmParams:
    n: int
    a: object
    b: object
    r: object
    sign: str = "plus"

    def __post_init__(self):
        _check_n(self.n)
        if self.sign not in SIGNS:
            raise ValueError(f"sign must be 'plus' or 'minus', got {self.sign!r}")

    @classmethod
    def symbolic(cls, n: int, sign: str = "plus") -> PmParams:
        return cls(n, *variables("a", "b", "r"), sign=sign)


Params = Union[JParams, MParams, PmParams]


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")


def clement(n: int) -> Tridiagonal:
    """Clement matrix of order n+1: integer bands, zero diagonal."""
    _check_n(n)
    return Tridiagonal([0] * (n + 1),
                       [i + 1 for i in range(n)],
                       [n - i for i in range(n)])


def j_matrix(p: JParams) -> Tridiagonal:
    n = p.n
    return Tridiagonal([p.z0 + (n - 2 * i) * p.z1 for i in range(n + 1)],
                       [i + 1 for i in range(n)],
                       [n - i for i in range(n)])


def m_matrix(p: MParams) -> Tridiagonal:
    n = p.n
    return Tridiagonal([p.x + i * p.y for i in range(n + 1)],
                       [(i + 1) * p.u for i in range(n)],
                       [(n - i) * p.v for i in range(n)])


def m_pm_matrix(p: PmParams) -> Tridiagonal:
    n = p.n
    s = 1 if p.sign == "plus" else -1
    return Tridiagonal([((n - i) * p.a + (s * i) * p.b) * p.r for i in range(n + 1)],
                       [(i + 1) * p.b for i in range(n)],
                       [(n - i) * p.a for i in range(n)])


def substitution_to_m(p: JParams | PmParams) -> MParams:
    """Parameters making ``m_matrix`` reproduce the given matrix entrywise."""
    if isinstance(p, JParams):
        one = const_like(p.z1, 1)
        return MParams(p.n, x=p.z0 + p.n * p.z1, y=(-2) * p.z1, u=one, v=one)
    if isinstance(p, PmParams):
        s = 1 if p.sign == "plus" else -1
        return MParams(p.n, x=(p.n * p.a) * p.r, y=(s * p.b - p.a) * p.r, u=p.b, v=p.a)
    raise TypeError(f"no substitution for {type(p).__name__}")


# -- family tag dispatch (shared by verify, bench, and the CLI) --------

def split_family_tag(tag: str, sign: str = "plus") -> tuple[str, str]:
    """Normalize a family tag to (kind, sign); accepts m_plus / m_minus."""
    if tag == "m_plus":
        return "mpm", "plus"
    if tag == "m_minus":
        return "mpm", "minus"
    if tag in FAMILY_ARITY:
        return tag, sign
    raise ValueError(f"unknown family {tag!r}")


def report_family(kind: str, sign: str = "plus") -> str:
    """The family tag used in verification reports."""
    if kind == "mpm":
        return "m_plus" if sign == "plus" else "m_minus"
    return kind


def build_params(family: str, n: int, values: Sequence = (), sign: str = "plus") -> Params:
    """Build a parameter record from a flat value list.

    ``clement`` maps to JParams(n, 0, 0) since the families coincide there.
    """
    kind, sign = split_family_tag(family, sign)
    values = tuple(values)
    arity = FAMILY_ARITY[kind]
    if len(values) != arity:
        raise ParameterCountMismatch(
            f"family {family!r} takes {arity} parameters, got {len(values)}")
    if kind == "clement":
        return JParams(n, Fraction(0), Fraction(0))
    if kind == "j":
        return JParams(n, *values)
    if kind == "m":
        return MParams(n, *values)
    return PmParams(n, *values, sign=sign)


def symbolic_params(family: str, n: int, sign: str = "plus") -> Params:
    kind, sign = split_family_tag(family, sign)
    if kind == "clement":
        return JParams(n, Fraction(0), Fraction(0))
    if kind == "j":
        return JParams.symbolic(n)
    if kind == "m":
        return MParams.symbolic(n)
    return PmParams.symbolic(n, sign=sign)


def matrix_for(p: Params) -> Tridiagonal:
    if isinstance(p, JParams):
        return j_matrix(p)
    if isinstance(p, MParams):
        return m_matrix(p)
    return m_pm_matrix(p)
