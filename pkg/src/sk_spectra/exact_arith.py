"""Exact coefficient domains.

Three layers, each usable as the entry ring of a tridiagonal matrix:

* ``Rational`` -- arbitrary-precision fractions (``fractions.Fraction``),
  always in lowest terms with a positive denominator.
* ``MultiPoly`` -- sparse multivariate polynomials over ``Rational`` in a
  fixed universe of named indeterminates.  A polynomial stores only its
  nonzero terms, keyed by exponent tuples, so two polynomials are equal
  iff their stored representations are equal.
* ``QuadExt`` -- formal elements ``p + q*sqrt(D)`` of a quadratic
  extension of any base ring.  ``D`` is an ordinary ring element and is
  never rooted numerically, so negative or zero discriminants are fine.

All values are immutable after construction and all operations are pure,
so everything here is safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction

#: The fixed, ordered variable universe.  "lam" is the characteristic
#: variable; the rest are family parameters.  Monomial exponent tuples are
#: always aligned with a subsequence of this list.
VARIABLES = ("lam", "z0", "z1", "x", "y", "u", "v", "a", "b", "r")

_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}

Monomial = tuple
Scalar = Union[int, Fraction]


class DiscriminantMismatch(ValueError):
    """Raised when combining quadratic-extension values over different D."""


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact coefficient expected, got {type(value).__name__}")


class MultiPoly:
    """Sparse multivariate polynomial with exact rational coefficients.

    Canonical form: ``variables`` is the sorted tuple of names that occur
    with a positive exponent in at least one term, and ``terms`` maps
    exponent tuples (aligned with ``variables``) to nonzero ``Fraction``
    coefficients.  The zero polynomial has no variables and no terms.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str] = (), terms: Mapping[Monomial, Scalar] | None = None):
        variables = tuple(variables)
        for name in variables:
            if name not in _VAR_INDEX:
                raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")

        cleaned: dict[Monomial, Fraction] = {}
        nvars = len(variables)
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != nvars:
                raise ValueError("exponent tuple length does not match variable list")
            if any(e < 0 for e in mono):
                raise ValueError("negative exponent")
            coeff = _as_fraction(coeff)
            if coeff == 0:
                continue
            cleaned[mono] = cleaned.get(mono, Fraction(0)) + coeff
            if cleaned[mono] == 0:
                del cleaned[mono]

        used = [i for i in range(nvars) if any(mono[i] > 0 for mono in cleaned)]
        order = sorted(used, key=lambda i: _VAR_INDEX[variables[i]])
        if order != list(range(nvars)):
            variables = tuple(variables[i] for i in order)
            cleaned = {tuple(mono[i] for i in order): c for mono, c in cleaned.items()}

        self.variables = variables
        self.terms = cleaned

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> MultiPoly:
        return cls((), {})

    @classmethod
    def constant(cls, value: Scalar) -> MultiPoly:
        return cls((), {(): _as_fraction(value)})

    @classmethod
    def variable(cls, name: str) -> MultiPoly:
        return cls((name,), {(1,): Fraction(1)})

    # -- inspection ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.variables

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial, as a Fraction."""
        if self.variables:
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms.get((), Fraction(0))

    def degree_in(self, name: str) -> int:
        if name not in self.variables:
            return 0
        i = self.variables.index(name)
        return max(mono[i] for mono in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(mono) for mono in self.terms)

    def coefficient(self, monomial: Mapping[str, int]) -> Fraction:
        """Coefficient of the monomial given as a {variable: exponent} map."""
        key = tuple(monomial.get(name, 0) for name in self.variables)
        for name, e in monomial.items():
            if e and name not in self.variables:
                return Fraction(0)
        return self.terms.get(key, Fraction(0))

    def coefficients_in(self, name: str) -> dict[int, MultiPoly]:
        """Split into {degree: coefficient} viewing self as univariate in ``name``."""
        if name not in self.variables:
            return {0: self} if self.terms else {}
        i = self.variables.index(name)
        rest = self.variables[:i] + self.variables[i + 1:]
        buckets: dict[int, dict[Monomial, Fraction]] = {}
        for mono, coeff in self.terms.items():
            d = mono[i]
            rm = mono[:i] + mono[i + 1:]
            buckets.setdefault(d, {})[rm] = coeff
        return {d: MultiPoly(rest, t) for d, t in buckets.items()}

    # -- ring operations ----------------------------------------------

    def _unify(self, other: MultiPoly) -> tuple[tuple[str, ...], dict, dict]:
        if self.variables == other.variables:
            return self.variables, self.terms, other.terms
        merged = tuple(sorted(set(self.variables) | set(other.variables),
                              key=_VAR_INDEX.__getitem__))

        def embed(poly: MultiPoly) -> dict:
            pos = [poly.variables.index(v) if v in poly.variables else -1 for v in merged]
            return {tuple(mono[p] if p >= 0 else 0 for p in pos): c
                    for mono, c in poly.terms.items()}

        return merged, embed(self), embed(other)

    @staticmethod
    def _coerce(value) -> MultiPoly | None:
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return MultiPoly.constant(value)
        return None

    def __add__(self, other) -> MultiPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        variables, a, b = self._unify(other)
        out = dict(a)
        for mono, coeff in b.items():
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return MultiPoly(variables, out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.variables, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> MultiPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            if q == 0:
                return MultiPoly.zero()
            return MultiPoly(self.variables, {m: c * q for m, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        variables, a, b = self._unify(other)
        if len(a) > len(b):
            a, b = b, a
        out: dict[Monomial, Fraction] = {}
        for mono_a, ca in a.items():
            for mono_b, cb in b.items():
                mono = tuple(x + y for x, y in zip(mono_a, mono_b))
                prev = out.get(mono)
                out[mono] = ca * cb if prev is None else prev + ca * cb
        return MultiPoly(variables, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> MultiPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- substitution and evaluation ----------------------------------

    def substitute(self, bindings: Mapping[str, MultiPoly | Scalar]) -> MultiPoly:
        """Replace variables by polynomials; unbound variables are retained."""
        lifted = {}
        for name, value in bindings.items():
            poly = self._coerce(value)
            if poly is None:
                raise TypeError(f"binding for {name!r} is not an exact polynomial or scalar")
            lifted[name] = poly

        bound_pos = [i for i, v in enumerate(self.variables) if v in lifted]
        if not bound_pos:
            return self
        kept = tuple(v for v in self.variables if v not in lifted)
        kept_pos = [i for i, v in enumerate(self.variables) if v not in lifted]

        powers: dict[tuple[str, int], MultiPoly] = {}

        def power(name: str, e: int) -> MultiPoly:
            key = (name, e)
            if key not in powers:
                powers[key] = lifted[name] ** e
            return powers[key]

        total = MultiPoly.zero()
        for mono, coeff in self.terms.items():
            piece = MultiPoly(kept, {tuple(mono[i] for i in kept_pos): coeff})
            for i in bound_pos:
                if mono[i]:
                    piece = piece * power(self.variables[i], mono[i])
            total = total + piece
        return total

    def evaluate(self, assignments: Mapping[str, object]):
        """Evaluate with every variable bound to a number (Fraction or float)."""
        missing = [v for v in self.variables if v not in assignments]
        if missing:
            raise ValueError(f"unbound variables: {missing}")
        total = 0
        for mono, coeff in self.terms.items():
            value = coeff
            for name, e in zip(self.variables, mono):
                if e:
                    value = value * assignments[name] ** e
            total = total + value
        return total

    # -- comparisons and rendering ------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in sorted(self.terms.items(), reverse=True):
            factors = []
            for name, e in zip(self.variables, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                text = str(coeff)
            elif coeff == 1:
                text = "*".join(factors)
            elif coeff == -1:
                text = "-" + "*".join(factors)
            else:
                text = f"{coeff}*" + "*".join(factors)
            parts.append(text)
        out = parts[0]
        for text in parts[1:]:
            out += " - " + text[1:] if text.startswith("-") else " + " + text
        return out


def variables(*names: str) -> tuple[MultiPoly, ...]:
    """Convenience: build several indeterminates at once."""
    return tuple(MultiPoly.variable(n) for n in names)


def const_like(sample, value: Scalar):
    """Lift an exact scalar into the ring that ``sample`` belongs to."""
    if isinstance(sample, MultiPoly):
        return MultiPoly.constant(value)
    if isinstance(sample, Fraction):
        return Fraction(value)
    if isinstance(sample, float):
        return float(value)
    if isinstance(sample, complex):
        return complex(value)
    if isinstance(sample, int):
        return Fraction(value)
    raise TypeError(f"unsupported ring element {type(sample).__name__}")


class QuadExt:
    """Formal quadratic-extension element ``p + q*sqrt(D)`` over a base ring.

    ``D`` stays a base-ring element; no square root is ever taken, so the
    arithmetic is exact over MultiPoly and Fraction parts (and plain IEEE
    arithmetic over float parts).  Values with different discriminants do
    not mix: combining them raises :class:`DiscriminantMismatch`.
    """

    __slots__ = ("rational_part", "radical_part", "discriminant")

    def __init__(self, rational_part, radical_part, discriminant):
        self.rational_part = rational_part
        self.radical_part = radical_part
        self.discriminant = discriminant

    def _lift(self, other) -> QuadExt:
        if isinstance(other, QuadExt):
            if not (other.discriminant == self.discriminant):
                raise DiscriminantMismatch(
                    f"sqrt({other.discriminant}) does not live in the same "
                    f"extension as sqrt({self.discriminant})")
            return other
        zero = self.radical_part * 0
        return QuadExt(other, zero, self.discriminant)

    def __add__(self, other) -> QuadExt:
        other = self._lift(other)
        return QuadExt(self.rational_part + other.rational_part,
                       self.radical_part + other.radical_part,
                       self.discriminant)

    __radd__ = __add__

    def __neg__(self) -> QuadExt:
        return QuadExt(-self.rational_part, -self.radical_part, self.discriminant)

    def __sub__(self, other) -> QuadExt:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> QuadExt:
        return (-self) + other

    def __mul__(self, other) -> QuadExt:
        if not isinstance(other, QuadExt):
            # base-ring scalar: scale both parts
            return QuadExt(self.rational_part * other,
                           self.radical_part * other,
                           self.discriminant)
        other = self._lift(other)
        p, q = self.rational_part, self.radical_part
        s, t = other.rational_part, other.radical_part
        return QuadExt(p * s + q * t * self.discriminant,
                       p * t + q * s,
                       self.discriminant)

    __rmul__ = __mul__

    def conjugate(self) -> QuadExt:
        return QuadExt(self.rational_part, -self.radical_part, self.discriminant)

    @property
    def is_radical_free(self) -> bool:
        return self.radical_part == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadExt):
            return (self.discriminant == other.discriminant
                    and self.rational_part == other.rational_part
                    and self.radical_part == other.radical_part)
        return self.radical_part == 0 and self.rational_part == other

    __hash__ = None

    def __repr__(self) -> str:
        return f"QuadExt({self.rational_part!r}, {self.radical_part!r}, D={self.discriminant!r})"

    def __str__(self) -> str:
        return f"({self.rational_part}) + ({self.radical_part})*sqrt({self.discriminant})"
