"""Builders for the decomposition families.

Every builder returns a Decomposition of exactly n^3 - n + 1 terms: the
identity term 1 (x) 1 (x) 1 first, then either the lattice triple sum or a
group orbit.  Enumeration orders are lexicographic throughout (permutations
and index triples), so term lists are reproducible byte-for-byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .frames import Frame, fixture_frame, lift_permutation
from .tensor import Decomposition, Rank1Term

__all__ = [
    "OrbitSpec",
    "symmetric_group",
    "alternating_group",
    "standard_group",
    "standard_sigma_perm",
    "standard_uv",
    "lattice_decomposition",
    "orbit_decomposition",
    "orbit_spec_for",
    "strassen_theta",
    "strassen_theta_sixths",
    "s4_family",
    "S5Fixture",
    "s5_fixture",
]


def symmetric_group(k: int) -> tuple:
    """All permutations of 0..k-1 in lexicographic order, as image tuples."""
    return tuple(permutations(range(k)))


def _parity(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def alternating_group(k: int) -> tuple:
    return tuple(p for p in permutations(range(k)) if _parity(p) == 1)


def compose(p, q) -> tuple:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(p)))


def standard_group(n: int) -> tuple:
    """The size n^3 - n permutation group acting 3-transitively on n+1 frame
    indices: S3, S4, A5 for n = 2, 3, 4."""
    if n == 2:
        return symmetric_group(3)
    if n == 3:
        return symmetric_group(4)
    if n == 4:
        return alternating_group(5)
    raise ValueError(f"no standard orbit group for n={n}")


def standard_sigma_perm(k: int) -> tuple:
    """The 3-cycle sending w1 -> w2 -> w3 -> w1 on k frame indices."""
    return (1, 2, 0) + tuple(range(3, k))


@dataclass(frozen=True)
class OrbitSpec:
    """Data for one group-orbit decomposition: a frame, a permutation group of
    its indices with |G| = n^3 - n, the order-3 cycle defining the slot orbit,
    and the seed vectors u, v of the rank-1 matrix m = |u><v|."""

    frame: Frame
    group: tuple
    sigma_perm: tuple
    u: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        n = self.frame.n
        if len(self.group) != n**3 - n:
            raise ValueError(f"group size {len(self.group)} != n^3-n = {n**3 - n}")
        ident = tuple(range(self.frame.size))
        if compose(self.sigma_perm, compose(self.sigma_perm, self.sigma_perm)) != ident:
            raise ValueError("sigma_perm must have order dividing 3")


def standard_uv(frame: Frame) -> tuple[np.ndarray, np.ndarray]:
    """Seed vectors for the standard orbit solutions, in frame coordinates:
    u = alpha w1 and v = beta (w2 - w1) with alpha*beta = n/(n+1)."""
    n = frame.n
    scales = {
        2: (1.0, 2.0 / 3.0),
        3: (3.0 / (2.0 * SQ2), 1.0 / SQ2),
        4: (math.sqrt(6.0 / 5.0), 2.0 * math.sqrt(2.0 / 15.0)),
    }
    if n not in scales:
        raise ValueError(f"no standard (u, v) seed for n={n}")
    alpha, beta = scales[n]
    w = frame.vectors
    return alpha * w[0], beta * (w[1] - w[0])


SQ2, SQ3 = math.sqrt(2), math.sqrt(3)


def lattice_decomposition(frame: Frame) -> Decomposition:
    """The triple-sum construction over a simplex frame.

    1 (x) 1 (x) 1 plus, for every ordered triple (i, j, k) of distinct frame
    indices, c|w_i><w_j - w_i| (x) c|w_j><w_k - w_j| (x) c|w_k><w_i - w_k|
    with c = n/(n+1) (the global c^3 split one factor per slot).
    """
    frame.require_simplex()
    n = frame.n
    w = frame.vectors
    c = n / (n + 1)
    eye = np.eye(n)
    terms = [Rank1Term(eye, eye, eye)]
    k_ = frame.size
    for i in range(k_):
        for j in range(k_):
            for k in range(k_):
                if i == j or j == k or k == i:
                    continue
                terms.append(
                    Rank1Term(
                        c * np.outer(w[i], w[j] - w[i]),
                        c * np.outer(w[j], w[k] - w[j]),
                        c * np.outer(w[k], w[i] - w[k]),
                    )
                )
    return Decomposition(n, tuple(terms), "lattice", {"frame": frame.label})


def orbit_decomposition(spec: OrbitSpec, scheme: str = "orbit", params: dict | None = None) -> Decomposition:
    """1 (x) 1 (x) 1 plus the orbit of m1 (x) m2 (x) m3 under diagonal
    conjugation by the group, where m1 = u v^T and m2, m3 are its conjugates
    by the lifted order-3 element."""
    frame = spec.frame
    n = frame.n
    sigma = lift_permutation(frame, spec.sigma_perm)
    m1 = np.outer(spec.u, spec.v)
    m2 = sigma @ m1 @ sigma.T
    m3 = sigma @ m2 @ sigma.T
    eye = np.eye(n)
    terms = [Rank1Term(eye, eye, eye)]
    for g in spec.group:
        rho = lift_permutation(frame, g)
        terms.append(
            Rank1Term(rho @ m1 @ rho.T, rho @ m2 @ rho.T, rho @ m3 @ rho.T)
        )
    p = {"frame": frame.label}
    if params:
        p.update(params)
    return Decomposition(n, tuple(terms), scheme, p)


_STANDARD_FIXTURES = {2: "triangle-2", 3: "tetrahedron-3", 4: "simplex-4"}


def orbit_spec_for(n: int, frame: Frame | None = None) -> OrbitSpec:
    """The standard orbit construction for n in {2, 3, 4} on the given frame
    (default: the explicit coordinate fixture for that n)."""
    if frame is None:
        frame = fixture_frame(_STANDARD_FIXTURES[n])
    u, v = standard_uv(frame)
    return OrbitSpec(frame, standard_group(n), standard_sigma_perm(frame.size), u, v)


# Exact values of cos(k*pi/6) for k = 0..11; avoids pi rounding in goldens.
_COS_SIXTHS = [1.0, SQ3 / 2, 0.5, 0.0, -0.5, -SQ3 / 2, -1.0, -SQ3 / 2, -0.5, 0.0, 0.5, SQ3 / 2]


def strassen_theta(theta: float) -> Decomposition:
    """The one-parameter n=2 family: u = (cos t, sin t), v = (2/3)(sigma u - u),
    orbit over S3 on the triangle frame.  Valid iff sin 6t = 0."""
    frame = fixture_frame("triangle-2")
    u = np.array([math.cos(theta), math.sin(theta)])
    return _strassen_from_u(frame, u, {"theta": theta})


def strassen_theta_sixths(k: int) -> Decomposition:
    """strassen_theta at theta = k*pi/6, built from exact trig values."""
    u = np.array([_COS_SIXTHS[k % 12], _COS_SIXTHS[(k - 3) % 12]])
    return _strassen_from_u(fixture_frame("triangle-2"), u, {"theta_sixths": k})


def _strassen_from_u(frame: Frame, u: np.ndarray, params: dict) -> Decomposition:
    sigma_perm = standard_sigma_perm(3)
    sigma = lift_permutation(frame, sigma_perm)
    v = 2.0 / 3.0 * (sigma @ u - u)
    spec = OrbitSpec(frame, symmetric_group(3), sigma_perm, u, v)
    return orbit_decomposition(spec, "strassen-theta", params)


def _y_of(theta: float) -> np.ndarray:
    return -math.sqrt(2.0 / 3.0) * np.array(
        [
            math.cos(theta),
            math.cos(theta - 2 * math.pi / 3),
            math.cos(theta - 4 * math.pi / 3),
        ]
    )


def s4_family(which: str, sign: int, theta: float) -> Decomposition:
    """The two-parameter n=3 families on the tetrahedron.

    which "u": u = y(theta) + a*(-1,-1,-1), v = z, a = sign/(2 sqrt 6);
    which "v": u = y(theta), v = z + b*(-1,-1,-1), b = sign/(3 sqrt 2);
    where z = (2/3)(sigma y - y).  Valid only at the discrete theta values
    singled out by the constraint equations (e.g. sign=-1, which="u":
    theta in (2 pi/3) Z).
    """
    if which not in ("u", "v"):
        raise ValueError("which must be 'u' or 'v'")
    if sign not in (-1, 1):
        raise ValueError("sign must be +1 or -1")
    frame = fixture_frame("tetrahedron-3")
    sigma_perm = standard_sigma_perm(4)
    sigma = lift_permutation(frame, sigma_perm)
    y = _y_of(theta)
    z = 2.0 / 3.0 * (sigma @ y - y)
    w4_raw = np.array([-1.0, -1.0, -1.0])  # unnormalized tetrahedron vertex
    if which == "u":
        u = y + sign / (2 * SQ2 * SQ3) * w4_raw
        v = z
    else:
        u = y
        v = z + sign / (3 * SQ2) * w4_raw
    spec = OrbitSpec(frame, symmetric_group(4), sigma_perm, u, v)
    return orbit_decomposition(
        spec, "s4-family", {"which": which, "sign": sign, "theta": theta}
    )


@dataclass(frozen=True)
class S5Fixture:
    """The explicit n=5 data: the order-3 sigma, the vectors w1, w2 = sigma w1,
    and the seed pair u = w1, v = (5/6)(w2 - w1).  Used for constraint checks
    only; the n=5 decomposition itself comes from the lattice construction."""

    sigma: np.ndarray
    w1: np.ndarray
    w2: np.ndarray
    u: np.ndarray
    v: np.ndarray


def s5_fixture() -> S5Fixture:
    frame = fixture_frame("s5-pair-5")
    w1, w2 = frame.vectors
    return S5Fixture(
        sigma=frame.sigma, w1=w1, w2=w2, u=w1.copy(), v=5.0 / 6.0 * (w2 - w1)
    )
