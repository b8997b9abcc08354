"""Simultaneous root computation and root-set predicates.

Roots are found by Aberth-Ehrlich iteration (all roots at once, residual
certified).  Degrees 1 and 2 use closed forms.  The predicates below
(realness, mesh, extremes, interlacing) are the language the zero-location
guarantees elsewhere in the package are stated in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    ConstantPolynomial,
    DegreeGapTooLarge,
    InvalidInput,
    NonConvergence,
    NotRealRooted,
    TooFewRoots,
    ZeroPolynomial,
)
from .poly import Polynomial, coeff_scale, evaluate_many, make_poly

__all__ = [
    "RootConfig",
    "RootSet",
    "RealnessVerdict",
    "roots",
    "roots_many",
    "aberth_batch",
    "classify_real",
    "sorted_real_parts",
    "mesh",
    "extremes",
    "interlace",
    "pencil_hyperbolic_sample",
    "rootset_to_json",
    "DEFAULT_REAL_TOL",
]

DEFAULT_REAL_TOL = 1e-8


@dataclass(frozen=True)
class RootConfig:
    max_iter: int = 160
    tol: float = 1e-10


@dataclass(frozen=True)
class RootSet:
    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    scale: float  # max coefficient magnitude of the source polynomial


class RealnessVerdict(NamedTuple):
    is_real_rooted: bool
    max_imag: float
    tol_used: float


def _quadratic(a: np.ndarray) -> np.ndarray:
    c0, c1, c2 = a
    sq = np.sqrt(complex(c1 * c1 - 4.0 * c2 * c0))
    if (np.conj(c1) * sq).real < 0:
        sq = -sq
    q = -(c1 + sq) / 2.0
    if q == 0:
        r = np.sqrt(complex(-c0 / c2))
        return np.array([r, -r])
    return np.array([q / c2, c0 / q])


def _horner_rows(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    # c: (B, m) ascending coefficients, z: (B, n) points
    acc = np.zeros_like(z)
    for k in range(c.shape[1] - 1, -1, -1):
        acc = acc * z + c[:, k, None]
    return acc


def aberth_batch(c: np.ndarray, max_iter: int = 160, tol: float = 1e-10) -> np.ndarray:
    """All roots for a batch of same-degree polynomials.

    c is (B, n+1), ascending, with nonzero leading column.  Returns (B, n)
    roots.  Convergence is judged against the running error bound
    sum_k |a_k| |z|^k, so large-magnitude roots are not held to an
    unattainable absolute residual.
    """
    c = np.asarray(c, dtype=complex)
    B, m = c.shape
    n = m - 1
    if n < 1:
        raise ConstantPolynomial("batch root finding needs degree >= 1")
    if n == 1:
        return -c[:, :1] / c[:, 1:]
    a = c / c[:, -1:]
    dcoef = a[:, 1:] * np.arange(1, n + 1)
    absa = np.abs(a)
    # Fujiwara root bound on the monic form; Cauchy's 1 + max|a_k| overshoots
    # badly when the coefficient range is wide.
    with np.errstate(divide="ignore"):
        radius = 2.0 * np.max(
            np.abs(a[:, :-1]) ** (1.0 / np.arange(n, 0, -1)), axis=1
        )
    radius = np.maximum(radius, 1e-3)
    k = np.arange(n)
    angles = 2.0 * np.pi * (k + 0.25) / n + 0.43
    wobble = 1.0 + 0.05 * np.cos(7.0 * k + 1.0)
    z = radius[:, None] * (np.exp(1j * angles) * wobble)[None, :]
    eye = np.eye(n, dtype=bool)[None, :, :]
    # Iterate to near machine level; certify afterwards at the looser tol.
    eps = np.finfo(float).eps
    iter_tol = max(4.0 * eps, tol * 1e-4)
    cert_tol = max(tol, 64.0 * eps)

    done = np.zeros((B, n), dtype=bool)
    for it in range(max_iter):
        p = _horner_rows(a, z)
        err = _horner_rows(absa.astype(complex), np.abs(z).astype(complex)).real
        done = np.abs(p) <= iter_tol * np.maximum(err, 1.0)
        if done.all():
            break
        dp = _horner_rows(dcoef, z)
        w = np.where(dp != 0, p / np.where(dp != 0, dp, 1.0), 0.1 * (1.0 + np.abs(z)))
        diff = z[:, :, None] - z[:, None, :]
        inv = np.zeros_like(diff)
        mask = ~eye & (diff != 0)
        inv[mask] = 1.0 / diff[mask]
        s = inv.sum(axis=2)
        denom = 1.0 - w * s
        step = np.where(np.abs(denom) > 1e-30, w / np.where(denom != 0, denom, 1.0), w)
        step = np.where(np.isfinite(step), step, 0.05 * (1.0 + np.abs(z)) * np.exp(1j * it))
        step = np.where(done, 0.0, step)
        z = z - step
        if np.max(np.abs(step)) <= 1e-16 * (1.0 + np.max(np.abs(z))):
            break
    p = _horner_rows(a, z)
    err = _horner_rows(absa.astype(complex), np.abs(z).astype(complex)).real
    done = np.abs(p) <= cert_tol * np.maximum(err, 1.0)
    if not done.all():
        raise NonConvergence(
            f"Aberth iteration did not converge within {max_iter} iterations",
            best=z,
            residuals=np.abs(_horner_rows(a, z)),
        )
    # Newton polish: the Aberth stop rule certifies residuals; a few extra
    # steps push simple roots close to machine accuracy.  Oversized steps
    # (clustered roots) are rejected rather than applied.
    for _ in range(3):
        p = _horner_rows(a, z)
        dp = _horner_rows(dcoef, z)
        step = np.where(dp != 0, p / np.where(dp != 0, dp, 1.0), 0.0)
        big = np.abs(step) > 0.5 * (1.0 + np.abs(z))
        step = np.where(big, 0.0, step)
        z = z - step
    return z


def roots(p: Polynomial, cfg: RootConfig | None = None) -> RootSet:
    """All degree-many roots of p, residual-certified.

    Raises ZeroPolynomial / ConstantPolynomial for degenerate input and
    NonConvergence (with the best iterate attached) on budget exhaustion.
    """
    cfg = cfg or RootConfig()
    if p.is_zero:
        raise ZeroPolynomial("cannot root-find the zero polynomial")
    if p.degree == 0:
        raise ConstantPolynomial("cannot root-find a nonzero constant")
    a = p.as_array()
    n = p.degree
    if n == 1:
        z = np.array([-a[0] / a[1]])
    elif n == 2:
        z = _quadratic(a)
    else:
        z = aberth_batch(a[None, :], cfg.max_iter, cfg.tol)[0]
    order = np.lexsort((z.imag, z.real))
    z = z[order]
    res = np.abs(evaluate_many(p, z))
    return RootSet(tuple(z), tuple(float(r) for r in res), coeff_scale(p))


def roots_many(ps, cfg: RootConfig | None = None) -> list[np.ndarray]:
    """Roots for a sequence of polynomials, batching equal degrees together.

    Much faster than looping roots() when many same-degree polynomials are
    processed (property suites, Monte-Carlo checks).  Root arrays come back
    sorted by (real, imag), aligned with the input order.
    """
    cfg = cfg or RootConfig()
    out: list[np.ndarray | None] = [None] * len(ps)
    by_degree: dict[int, list[int]] = {}
    for i, p in enumerate(ps):
        if p.is_zero:
            raise ZeroPolynomial("cannot root-find the zero polynomial")
        if p.degree == 0:
            raise ConstantPolynomial("cannot root-find a nonzero constant")
        by_degree.setdefault(p.degree, []).append(i)
    for n, idxs in by_degree.items():
        if n <= 2:
            for i in idxs:
                out[i] = np.array(roots(ps[i], cfg).roots)
            continue
        mat = np.array([ps[i].as_array() for i in idxs])
        z = aberth_batch(mat, cfg.max_iter, cfg.tol)
        for row, i in enumerate(idxs):
            zi = z[row]
            out[i] = zi[np.lexsort((zi.imag, zi.real))]
    return out  # type: ignore[return-value]


def _root_scale(rs: RootSet) -> float:
    return max(1.0, max((abs(r) for r in rs.roots), default=0.0))


def classify_real(rs: RootSet, tol: float = DEFAULT_REAL_TOL) -> RealnessVerdict:
    max_imag = max((abs(r.imag) for r in rs.roots), default=0.0)
    tol_used = tol * _root_scale(rs)
    return RealnessVerdict(max_imag <= tol_used, max_imag, tol_used)


def sorted_real_parts(rs: RootSet) -> np.ndarray:
    return np.sort(np.array([r.real for r in rs.roots]))


def mesh(rs: RootSet, tol: float = DEFAULT_REAL_TOL) -> float:
    """Minimal gap between consecutive sorted roots (0 for a repeated root)."""
    if len(rs.roots) < 2:
        raise TooFewRoots("mesh needs at least 2 roots")
    if not classify_real(rs, tol).is_real_rooted:
        raise NotRealRooted("mesh is defined for real-rooted input")
    xs = sorted_real_parts(rs)
    return float(np.min(np.diff(xs)))


def extremes(rs: RootSet, tol: float = DEFAULT_REAL_TOL) -> tuple[float, float]:
    """(maximal root, minimal root) of a real-rooted root set."""
    if not rs.roots:
        raise TooFewRoots("extremes need at least 1 root")
    if not classify_real(rs, tol).is_real_rooted:
        raise NotRealRooted("extremes are defined for real-rooted input")
    xs = sorted_real_parts(rs)
    return float(xs[-1]), float(xs[0])


def _weakly_alternates(a: np.ndarray, b: np.ndarray, slack: float) -> bool:
    # a leads; len(a) == len(b) or len(a) == len(b) + 1
    for i in range(len(b)):
        if a[i] > b[i] + slack:
            return False
        if i + 1 < len(a) and b[i] > a[i + 1] + slack:
            return False
    return True


def interlace(p: Polynomial, q: Polynomial, tol: float = DEFAULT_REAL_TOL,
              cfg: RootConfig | None = None) -> bool:
    """Non-strict interlacing of the sorted root lists, with ties within slack."""
    rp, rq = roots(p, cfg), roots(q, cfg)
    for rs, name in ((rp, "first"), (rq, "second")):
        if not classify_real(rs, tol).is_real_rooted:
            raise NotRealRooted(f"{name} polynomial is not real-rooted at tol {tol}")
    if abs(p.degree - q.degree) > 1:
        raise DegreeGapTooLarge("degrees must be equal or differ by one")
    a, b = sorted_real_parts(rp), sorted_real_parts(rq)
    if len(a) < len(b):
        a, b = b, a
    slack = tol * max(_root_scale(rp), _root_scale(rq))
    if len(a) == len(b):
        return _weakly_alternates(a, b, slack) or _weakly_alternates(b, a, slack)
    return _weakly_alternates(a, b, slack)


def pencil_hyperbolic_sample(p: Polynomial, q: Polynomial, n_samples: int = 200,
                             seed: int = 0, tol: float = 1e-7,
                             cfg: RootConfig | None = None) -> bool:
    """Monte-Carlo check that c*P + d*Q is real-rooted along the unit circle.

    Serves as an independent oracle for interlace; returns False as soon as
    any sampled direction yields a non-real-rooted combination.
    """
    if p.degree is None or q.degree is None or p.degree != q.degree or p.degree < 1:
        raise InvalidInput("pencil sampling needs equal degrees >= 1")
    cfg = cfg or RootConfig()
    n = p.degree
    rng = np.random.default_rng(seed)
    phi = rng.uniform(0.0, 2.0 * np.pi, n_samples)
    pa, qa = p.as_array(), q.as_array()
    rows = np.cos(phi)[:, None] * pa[None, :] + np.sin(phi)[:, None] * qa[None, :]
    rowmax = np.max(np.abs(rows), axis=1)
    trivial = rowmax == 0.0
    dropped = (~trivial) & (np.abs(rows[:, -1]) <= 1e-12 * rowmax)
    full = ~trivial & ~dropped
    if full.any():
        z = aberth_batch(rows[full], cfg.max_iter, cfg.tol)
        scale = np.maximum(1.0, np.max(np.abs(z), axis=1))
        if np.any(np.max(np.abs(z.imag), axis=1) > tol * scale):
            return False
    for row in rows[dropped]:
        pr = make_poly(row)
        if pr.is_zero or pr.degree == 0:
            continue
        if not classify_real(roots(pr, cfg), tol).is_real_rooted:
            return False
    return True


def rootset_to_json(rs: RootSet) -> dict:
    return {
        "roots": [[r.real, r.imag] for r in rs.roots],
        "residuals": list(rs.residuals),
    }
