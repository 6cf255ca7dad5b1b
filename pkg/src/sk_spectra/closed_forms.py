"""Closed-form determinants and spectra for the matrix families.

Each family has an explicitly known spectrum: an arithmetic progression
of n+1 values, symmetric about a center mu, with spacing sqrt(D) for a
family-specific discriminant D.

* m family:    mu = x + n*y/2,        D = y^2 + 4*u*v,
               eigenvalue_k = mu + (n-2k)/2 * sqrt(D)
* j family:    mu = z0,               D = z1^2 + 1,
               eigenvalue_k = mu + (n-2k) * sqrt(D)
* m_pm family: mu = n*r*(a+-b)/2,     D = 4*a*b + r^2*(a-+b)^2,
               eigenvalue_k = mu + (n-2k)/2 * sqrt(D)

Eigenvalues are kept as formal QuadExt values, in k-order (k = 0..n), so
everything works symbolically.  Because coefficients come in +-c pairs,
the (k, n-k) factors multiply to (lam-mu)^2 - c^2*D, which is how
``charpoly_closed`` expands the whole product without ever leaving the
base ring.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import MultiPoly, QuadExt, const_like
from .families import JParams, MParams, Params, PmParams


@dataclass(frozen=True)
class Spectrum:
    center: object
    step_discriminant: object
    eigenvalues: tuple

    @property
    def n(self) -> int:
        return len(self.eigenvalues) - 1

    def radical_coefficients(self) -> list:
        """The per-eigenvalue multiples of sqrt(D), in k-order."""
        return [e.radical_part for e in self.eigenvalues]

    def numeric_values(self) -> list:
        """Eigenvalues as sorted floats (complex when D < 0)."""
        center = float(self.center)
        disc = float(self.step_discriminant)
        root = math.sqrt(disc) if disc >= 0 else cmath.sqrt(disc)
        values = [center + float(e.radical_part) * root for e in self.eigenvalues]
        return sorted(values, key=lambda v: (v.real, v.imag) if isinstance(v, complex) else (v, 0.0))


def _progression(center, disc, coefficients) -> Spectrum:
    eigs = tuple(QuadExt(center, const_like(disc, c), disc) for c in coefficients)
    return Spectrum(center, disc, eigs)


def spectrum_m(p: MParams) -> Spectrum:
    n = p.n
    center = p.x + p.y * Fraction(n, 2)
    disc = p.y * p.y + 4 * (p.u * p.v)
    return _progression(center, disc, [Fraction(n - 2 * k, 2) for k in range(n + 1)])


def spectrum_j(p: JParams) -> Spectrum:
    n = p.n
    disc = p.z1 * p.z1 + const_like(p.z1, 1)
    return _progression(p.z0, disc, [Fraction(n - 2 * k) for k in range(n + 1)])


def spectrum_mpm(p: PmParams) -> Spectrum:
    n = p.n
    s = 1 if p.sign == "plus" else -1
    center = (p.a + s * p.b) * p.r * Fraction(n, 2)
    opposite = p.a - s * p.b
    disc = 4 * (p.a * p.b) + opposite * opposite * (p.r * p.r)
    return _progression(center, disc, [Fraction(n - 2 * k, 2) for k in range(n + 1)])


def spectrum_for(p: Params) -> Spectrum:
    if isinstance(p, JParams):
        return spectrum_j(p)
    if isinstance(p, MParams):
        return spectrum_m(p)
    return spectrum_mpm(p)


def _as_poly(value) -> MultiPoly:
    poly = MultiPoly._coerce(value)
    if poly is None:
        raise TypeError(f"{type(value).__name__} entries cannot be expanded exactly; "
                        "use an exact (symbolic or rational) spectrum")
    return poly


def charpoly_closed(s: Spectrum) -> MultiPoly:
    """Expand the eigenvalue product into a radical-free monic polynomial.

    Pairs the k and n-k factors so every partial product stays in the
    base polynomial ring.
    """
    n = s.n
    lam = MultiPoly.variable("lam")
    base = lam - _as_poly(s.center)
    disc = _as_poly(s.step_discriminant)
    coeffs = s.radical_coefficients()
    for k in range((n + 1) // 2):
        if not (coeffs[n - k] == -1 * coeffs[k]):
            raise ValueError("spectrum is not symmetric about its center")
    result = MultiPoly.constant(1)
    for k in range((n + 1) // 2):
        q = _as_poly(coeffs[k])
        result = result * (base * base - q * q * disc)
    if n % 2 == 0:
        if not (coeffs[n // 2] == 0):
            raise ValueError("middle eigenvalue of an even-n spectrum must sit at the center")
        result = result * base
    return result


def det_closed(s: Spectrum) -> QuadExt:
    """Exact product of the eigenvalues; its radical part cancels to zero.

    Multiplies conjugate (k, n-k) pairs first so intermediate values stay
    radical-free.
    """
    n = s.n
    eigs = s.eigenvalues
    one = const_like(s.center, 1)
    zero = const_like(s.center, 0)
    product = QuadExt(one, zero, s.step_discriminant)
    for k in range((n + 1) // 2):
        product = product * (eigs[k] * eigs[n - k])
    if n % 2 == 0:
        product = product * eigs[n // 2]
    return product


def eval_in_extension(p: MultiPoly, value: QuadExt) -> QuadExt:
    """Evaluate a polynomial at lam = value inside the quadratic extension.

    Horner's scheme over QuadExt; the polynomial's other variables stay
    symbolic in the parts of the result.
    """
    by_degree = p.coefficients_in("lam")
    if not by_degree:
        return QuadExt(MultiPoly.zero(), MultiPoly.zero(), value.discriminant)
    top = max(by_degree)
    zero = MultiPoly.zero()
    acc = QuadExt(zero, zero, value.discriminant)
    for d in range(top, -1, -1):
        acc = acc * value + by_degree.get(d, zero)
    return acc
