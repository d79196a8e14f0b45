"""The complete n=2 harmonic analysis: basis, coefficients, reconstruction,
and the five constraint equations on the seed matrix m.

Basis elements are enumerated in the fixed order ("1", "pi", "rho_x",
"rho_y"); the 64-entry coefficient table is keyed by name triples in that
order, which is also the export order.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .tensor import exact_matrix, frobenius_inner, is_exact, rank1_tensor

__all__ = [
    "BASIS_NAMES",
    "basis_matrices",
    "fourier_coefficients",
    "reconstruct",
    "strassen_equations",
    "det_identities",
]

BASIS_NAMES = ("1", "pi", "rho_x", "rho_y")

_BASIS_ROWS = {
    "1": [[1, 0], [0, 1]],
    "pi": [[0, -1], [1, 0]],
    "rho_x": [[1, 0], [0, -1]],
    "rho_y": [[0, -1], [-1, 0]],
}


def basis_matrices(exact: bool = True) -> dict[str, np.ndarray]:
    """The four pairwise-orthogonal basis matrices, each with <a, a> = 2."""
    if exact:
        return {k: exact_matrix(v) for k, v in _BASIS_ROWS.items()}
    return {k: np.array(v, dtype=np.float64) for k, v in _BASIS_ROWS.items()}


def fourier_coefficients(T: np.ndarray) -> dict[tuple[str, str, str], Fraction]:
    """All 64 coefficients c(alpha, beta, gamma) = <T, a (x) b (x) c> / 8.

    Exact for object-dtype tensors, float for float tensors.
    """
    if T.shape != (2,) * 6:
        raise ValueError("fourier_coefficients requires an n=2 tensor")
    exact = is_exact(T)
    basis = basis_matrices(exact=exact)
    eighth = Fraction(1, 8) if exact else 0.125
    out = {}
    for na in BASIS_NAMES:
        for nb in BASIS_NAMES:
            for nc in BASIS_NAMES:
                t = rank1_tensor(basis[na], basis[nb], basis[nc])
                out[(na, nb, nc)] = frobenius_inner(T, t) * eighth
    return out


def reconstruct(coeffs: dict[tuple[str, str, str], Fraction]) -> np.ndarray:
    """Sum c(a,b,c) * a (x) b (x) c over the full 64-entry table."""
    missing = [
        (a, b, c)
        for a in BASIS_NAMES
        for b in BASIS_NAMES
        for c in BASIS_NAMES
        if (a, b, c) not in coeffs
    ]
    if missing:
        raise ValueError(f"coefficient table incomplete, e.g. missing {missing[0]}")
    exact = any(isinstance(v, Fraction) for v in coeffs.values())
    basis = basis_matrices(exact=exact)
    if exact:
        T = np.full((2,) * 6, Fraction(0), dtype=object)
    else:
        T = np.zeros((2,) * 6)
    for (na, nb, nc), c in coeffs.items():
        if c == 0:
            continue
        T = T + c * rank1_tensor(basis[na], basis[nb], basis[nc])
    return T


def _traces(m: np.ndarray):
    b = basis_matrices(exact=is_exact(m))
    tr = np.trace
    return (
        tr(m),
        tr(np.dot(b["pi"], m)),
        tr(np.dot(b["rho_x"], m)),
        tr(np.dot(b["rho_y"], m)),
    )


def strassen_equations(m: np.ndarray) -> tuple[float, float, float, float, float]:
    """Left-minus-right residuals of the five simplified constraint equations
    on a 2x2 seed matrix m.  All five vanish iff the S3 orbit of |u><v| = m
    completes the identity term to MM_2."""
    if m.shape != (2, 2):
        raise ValueError("strassen_equations requires a 2x2 matrix")
    t1, tpi, tx, ty = (float(x) for x in _traces(m))
    rr = tx * tx + ty * ty
    return (
        t1**3 + 1.0,
        t1 * tpi**2 + 1.0 / 3.0,
        t1 * (-0.5) * rr - 2.0 / 3.0,
        tpi * (-math.sqrt(3.0) / 2.0) * rr + 2.0 / 3.0,
        tx**3 - 3.0 * tx * ty**2,
    )


def det_identities(m: np.ndarray):
    """Residuals of the two algebraic identities
    (tr m)^2 + (tr pi m)^2 = |m|^2 + 2 det m  and
    (tr rho_x m)^2 + (tr rho_y m)^2 = |m|^2 - 2 det m.
    Both are exactly zero for every 2x2 matrix; exact when m is exact."""
    if m.shape != (2, 2):
        raise ValueError("det_identities requires a 2x2 matrix")
    t1, tpi, tx, ty = _traces(m)
    frob = (m * m).sum()
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    r1 = t1 * t1 + tpi * tpi - (frob + 2 * det)
    r2 = tx * tx + ty * ty - (frob - 2 * det)
    return r1, r2
