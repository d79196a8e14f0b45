"""Simplex frames: n+1 unit vectors in R^n at the corners of a regular simplex.

A simplex frame satisfies <w_i, w_j> = -1/n for i != j, sum_i w_i = 0, and the
tight-frame identity (n/(n+1)) sum_i |w_i><w_i| = 1.  Coordinates are float64
(they involve square roots); the Gram matrix is carried exactly as Fractions,
and every exactness claim in the package routes through the Gram, never
through coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import permutations

import numpy as np

from .tensor import exact_matrix

__all__ = [
    "Frame",
    "TightReport",
    "simplex_frame",
    "fixture_frame",
    "check_tight",
    "lift_permutation",
    "FIXTURE_NAMES",
]

SQ2, SQ3, SQ5 = math.sqrt(2), math.sqrt(3), math.sqrt(5)


@dataclass(frozen=True)
class Frame:
    """A set of unit vectors with exact rational Gram data.

    kind "simplex": n+1 vectors, Gram diag 1 / off-diag -1/n.
    kind "pair": the two explicit S5 vectors w1, w2 = sigma w1 plus sigma
    itself; not a simplex frame, and rejected by simplex-only operations.
    """

    n: int
    vectors: np.ndarray  # shape (k, n), float64, rows are the w_i
    gram: np.ndarray  # shape (k, k), object dtype of Fractions
    label: str = "generic"
    kind: str = "simplex"
    sigma: np.ndarray | None = None

    @property
    def size(self) -> int:
        return self.vectors.shape[0]

    def require_simplex(self):
        if self.kind != "simplex":
            raise ValueError(f"frame {self.label!r} is not a simplex frame")


def _simplex_gram(n: int) -> np.ndarray:
    g = np.empty((n + 1, n + 1), dtype=object)
    off = Fraction(-1, n)
    for i in range(n + 1):
        for j in range(n + 1):
            g[i, j] = Fraction(1) if i == j else off
    return g


def simplex_frame(n: int) -> Frame:
    """Corners of a regular simplex: project the n+1 standard basis vectors of
    R^{n+1} onto the hyperplane orthogonal to the all-ones vector, normalize."""
    if n < 1:
        raise ValueError("n must be >= 1")
    # orthonormal (Helmert) basis of the hyperplane 1^perp in R^{n+1}
    basis = np.zeros((n, n + 1))
    for k in range(1, n + 1):
        basis[k - 1, :k] = 1.0
        basis[k - 1, k] = -k
        basis[k - 1] /= math.sqrt(k * (k + 1))
    proj = np.eye(n + 1) - np.full((n + 1, n + 1), 1.0 / (n + 1))
    vecs = (basis @ proj.T).T  # rows: images of e_i, squared norm n/(n+1)
    vecs *= math.sqrt((n + 1) / n)
    return Frame(n=n, vectors=vecs, gram=_simplex_gram(n), label=f"generic-{n}")


# Explicit coordinate fixtures.  The tetrahedron vertices (+-1,+-1,+-1) are
# normalized by 1/sqrt(3) so that all frames follow the unit-norm convention.

_S5P = math.sqrt(5 + SQ5)
_S5M = math.sqrt(5 - SQ5)

_FIXTURES = {
    "triangle-2": [
        (1.0, 0.0),
        (-0.5, SQ3 / 2),
        (-0.5, -SQ3 / 2),
    ],
    "tetrahedron-3": [
        (-1 / SQ3, 1 / SQ3, 1 / SQ3),
        (1 / SQ3, -1 / SQ3, 1 / SQ3),
        (1 / SQ3, 1 / SQ3, -1 / SQ3),
        (-1 / SQ3, -1 / SQ3, -1 / SQ3),
    ],
    "simplex-4": [
        (1 / SQ2, 0.0, 1 / SQ2, 0.0),
        ((SQ5 - 1) / (4 * SQ2), _S5P / 4, -(SQ5 + 1) / (4 * SQ2), _S5M / 4),
        (-(SQ5 + 1) / (4 * SQ2), _S5M / 4, (SQ5 - 1) / (4 * SQ2), -_S5P / 4),
        (-(SQ5 + 1) / (4 * SQ2), -_S5M / 4, (SQ5 - 1) / (4 * SQ2), _S5P / 4),
        ((SQ5 - 1) / (4 * SQ2), -_S5P / 4, -(SQ5 + 1) / (4 * SQ2), -_S5M / 4),
    ],
}

FIXTURE_NAMES = ("triangle-2", "tetrahedron-3", "simplex-4", "s5-pair-5")

_S5_SIGMA = np.array(
    [
        [1, 0, 0, 0, 0],
        [0, -0.5, 0, SQ3 / 2, 0],
        [0, 0, -0.5, 0, SQ3 / 2],
        [0, -SQ3 / 2, 0, -0.5, 0],
        [0, 0, -SQ3 / 2, 0, -0.5],
    ]
)

_S5_W1 = np.array([1.0, SQ2, 0.0, 0.0, SQ2]) / SQ5


def fixture_frame(name: str) -> Frame:
    """Explicit coordinate fixtures for n = 2, 3, 4, plus the S5 pair for n = 5."""
    if name == "s5-pair-5":
        w1 = _S5_W1
        w2 = _S5_SIGMA @ w1
        gram = exact_matrix([[1, Fraction(-1, 5)], [Fraction(-1, 5), 1]])
        return Frame(
            n=5,
            vectors=np.vstack([w1, w2]),
            gram=gram,
            label=name,
            kind="pair",
            sigma=_S5_SIGMA,
        )
    if name not in _FIXTURES:
        raise ValueError(f"unknown fixture {name!r}; known: {FIXTURE_NAMES}")
    vecs = np.array(_FIXTURES[name])
    n = vecs.shape[1]
    return Frame(n=n, vectors=vecs, gram=_simplex_gram(n), label=name)


@dataclass(frozen=True)
class TightReport:
    max_sum_deviation: float  # |sum_i w_i|_max
    max_identity_deviation: float  # |(n/(n+1)) sum w_i w_i^T - 1|_max
    gram_row_sums: tuple  # exact Fractions, all zero for a true simplex Gram
    exact_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.exact_ok
            and self.max_sum_deviation < 1e-12
            and self.max_identity_deviation < 1e-12
        )


def check_tight(frame: Frame) -> TightReport:
    """Measure the two tight-frame identities, float and exact (via Gram rows)."""
    frame.require_simplex()
    n = frame.n
    w = frame.vectors
    sum_dev = float(np.abs(w.sum(axis=0)).max())
    outer = sum(np.outer(v, v) for v in w)
    id_dev = float(np.abs(n / (n + 1) * outer - np.eye(n)).max())
    row_sums = tuple(sum(frame.gram[i]) for i in range(frame.size))
    exact_ok = all(s == 0 for s in row_sums)
    return TightReport(sum_dev, id_dev, row_sums, exact_ok)


def lift_permutation(frame: Frame, perm) -> np.ndarray:
    """Orthogonal matrix rho with rho w_i = w_{perm(i)} for all frame indices.

    Uses the closed form rho = (n/(n+1)) sum_i |w_{perm(i)}><w_i| that follows
    from the tight-frame identity; perm is a 0-based tuple of images.
    """
    frame.require_simplex()
    k = frame.size
    if sorted(perm) != list(range(k)):
        raise ValueError("perm must be a bijection on frame indices")
    w = frame.vectors
    n = frame.n
    rho = np.zeros((n, n))
    for i in range(k):
        rho += np.outer(w[perm[i]], w[i])
    return n / (n + 1) * rho


def corrupt(frame: Frame, index: int = 0, scale: float = 1.01) -> Frame:
    """A copy of the frame with one vector rescaled; for negative testing."""
    vecs = frame.vectors.copy()
    vecs[index] *= scale
    return replace(frame, vectors=vecs, label=frame.label + "-corrupted")
