"""Dense complex-coefficient polynomials, ascending by power.

coeffs[k] multiplies x**k.  The zero polynomial is the empty tuple and has
degree None; every nonzero polynomial carries a nonzero trailing coefficient.
All values are immutable and every operation is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import ImaginaryResidue, InvalidInput

__all__ = [
    "Polynomial",
    "ZERO",
    "make_poly",
    "monomial",
    "from_roots",
    "evaluate",
    "evaluate_many",
    "shift_arg",
    "derivative",
    "linear_combine",
    "multiply",
    "reflect",
    "coeff_scale",
    "RealCoeffReport",
    "is_real_coeffs",
    "coerce_real",
    "poly_to_json",
    "poly_from_json",
]


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[complex, ...]

    @property
    def degree(self):
        """Degree as an int, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=complex)


ZERO = Polynomial(())


def make_poly(coeffs: Iterable[complex]) -> Polynomial:
    """Build a polynomial, stripping trailing coefficients that are exactly zero."""
    c = [complex(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return Polynomial(tuple(c))


def monomial(n: int, lead: complex = 1.0) -> Polynomial:
    if n < 0:
        raise InvalidInput("monomial power must be >= 0")
    return make_poly([0.0] * n + [lead])


def from_roots(roots: Sequence[complex], lead: complex = 1.0) -> Polynomial:
    """Expand lead * prod(x - r) by repeated convolution."""
    acc = np.array([complex(lead)])
    for r in roots:
        acc = np.convolve(acc, np.array([-complex(r), 1.0]))
    return Polynomial(tuple(acc))


def evaluate(p: Polynomial, z: complex) -> complex:
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


def evaluate_many(p: Polynomial, zs: np.ndarray) -> np.ndarray:
    zs = np.asarray(zs, dtype=complex)
    acc = np.zeros_like(zs)
    for c in reversed(p.coeffs):
        acc = acc * zs + c
    return acc


def shift_arg(p: Polynomial, lam: complex) -> Polynomial:
    """Coefficients of P(x - lam) via repeated synthetic division.

    Degree is preserved exactly; the leading coefficient is untouched.
    """
    lam = complex(lam)
    if p.is_zero or lam == 0:
        return p
    a = p.as_array().copy()
    n = len(a) - 1
    s = -lam
    for k in range(n):
        for j in range(n - 1, k - 1, -1):
            a[j] += s * a[j + 1]
    return Polynomial(tuple(a))


def derivative(p: Polynomial) -> Polynomial:
    if p.is_zero or p.degree == 0:
        return ZERO
    a = p.as_array()
    return make_poly(a[1:] * np.arange(1, len(a)))


def linear_combine(pairs, trim_tol: float | None = None) -> Polynomial:
    """Sum of scalar * polynomial.

    Trailing exact zeros are always stripped.  When trim_tol is given,
    trailing coefficients are also stripped while they are tiny relative to
    the magnitudes that were summed to produce them, i.e. while the leading
    term is pure cancellation noise.
    """
    length = max((len(p.coeffs) for _, p in pairs), default=0)
    acc = np.zeros(length, dtype=complex)
    mass = np.zeros(length)
    for s, p in pairs:
        if p.coeffs:
            term = complex(s) * p.as_array()
            acc[: len(p.coeffs)] += term
            mass[: len(p.coeffs)] += np.abs(term)
    if trim_tol is not None and length:
        k = length
        while k > 0 and abs(acc[k - 1]) <= trim_tol * mass[k - 1]:
            k -= 1
        acc = acc[:k]
    return make_poly(acc)


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero or q.is_zero:
        return ZERO
    return make_poly(np.convolve(p.as_array(), q.as_array()))


def reflect(p: Polynomial) -> Polynomial:
    """P(-x)."""
    a = p.as_array().copy()
    a[1::2] *= -1
    return Polynomial(tuple(a))


def coeff_scale(p: Polynomial) -> float:
    """Max coefficient magnitude; 0 for the zero polynomial."""
    return float(np.max(np.abs(p.as_array()))) if p.coeffs else 0.0


class RealCoeffReport(NamedTuple):
    is_real: bool
    max_imag: float


def is_real_coeffs(p: Polynomial, tol: float) -> RealCoeffReport:
    """True iff max |Im c_k| <= tol * max(1, max |c_k|)."""
    if tol < 0:
        raise InvalidInput("tolerance must be >= 0")
    if p.is_zero:
        return RealCoeffReport(True, 0.0)
    a = p.as_array()
    max_imag = float(np.max(np.abs(a.imag)))
    bound = tol * max(1.0, float(np.max(np.abs(a))))
    return RealCoeffReport(max_imag <= bound, max_imag)


def coerce_real(p: Polynomial, tol_rel: float) -> Polynomial:
    """Drop imaginary parts, verifying they are roundoff-sized.

    Raises ImaginaryResidue if max |Im c_k| > tol_rel * max |c_k|.
    """
    if p.is_zero:
        return p
    a = p.as_array()
    scale = float(np.max(np.abs(a)))
    max_imag = float(np.max(np.abs(a.imag)))
    if max_imag > tol_rel * scale:
        raise ImaginaryResidue(
            f"imaginary residue {max_imag:.3e} exceeds {tol_rel:.1e} * scale {scale:.3e}"
        )
    return make_poly(a.real.astype(complex))


def poly_to_json(p: Polynomial) -> dict:
    return {"coeffs": [[c.real, c.imag] for c in p.coeffs]}


def _finite_pair(v, where: str) -> complex:
    if (
        not isinstance(v, (list, tuple))
        or len(v) != 2
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in v)
    ):
        raise InvalidInput(f"{where}: expected a [re, im] pair of numbers")
    if not (math.isfinite(v[0]) and math.isfinite(v[1])):
        raise InvalidInput(f"{where}: non-finite number")
    return complex(v[0], v[1])


def poly_from_json(obj) -> Polynomial:
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise InvalidInput("polynomial JSON must be an object with a 'coeffs' field")
    coeffs = obj["coeffs"]
    if not isinstance(coeffs, list):
        raise InvalidInput("coeffs: expected a list")
    return make_poly(
        [_finite_pair(v, f"coeffs[{k}]") for k, v in enumerate(coeffs)]
    )
