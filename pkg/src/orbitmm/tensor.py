"""Dense order-3 tensors over n x n matrix slots, and separable-sum decompositions.

A Tensor3 over dimension n is a dense numpy array of shape (n,)*6.  The index
convention, fixed here once and for all, is

    T[a, b, c, d, e, f]

where (a, b, c) are the row indices of the three matrix slots and (d, e, f)
the column indices.  The matrix multiplication tensor chains the slots:
entry 1 exactly when d = b, e = c, f = a (the column index of each slot
equals the row index of the next, cyclically), which is what makes the
pairing <MM, A (x) B (x) C> = sum MM[a..f] A[a,d] B[b,e] C[c,f] equal
tr ABC.  This orientation is fixed here, in this one place.

Two scalar kinds are supported: float64 arrays, and object arrays holding
`fractions.Fraction` values for exact work.  A decomposition is homogeneous
in scalar kind; conversion is explicit (`to_float`, `to_exact`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

__all__ = [
    "Rank1Term",
    "Decomposition",
    "exact_matrix",
    "exact_identity",
    "is_exact",
    "mm_tensor",
    "triple_trace",
    "rank1_tensor",
    "tensor_of",
    "frobenius_inner",
    "operator_trace",
]


def is_exact(arr: np.ndarray) -> bool:
    """True if the array holds exact (Fraction/int) scalars rather than floats."""
    return arr.dtype == object


def exact_matrix(rows) -> np.ndarray:
    """Build an object-dtype matrix of Fractions from nested ints/Fractions/strings."""
    out = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i, j] = Fraction(x)
    return out


def exact_identity(n: int) -> np.ndarray:
    out = np.full((n, n), Fraction(0), dtype=object)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


@dataclass(frozen=True)
class Rank1Term:
    """One separable summand a (x) b (x) c; all three factors are n x n."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        n = self.a.shape[0]
        for m in (self.a, self.b, self.c):
            if m.shape != (n, n):
                raise ValueError("all three factors must be square of the same size")

    @property
    def n(self) -> int:
        return self.a.shape[0]


@dataclass(frozen=True)
class Decomposition:
    """An ordered list of separable terms claimed to sum to MM_n."""

    n: int
    terms: tuple[Rank1Term, ...]
    scheme: str = "imported"
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        for t in self.terms:
            if t.n != self.n:
                raise ValueError("term dimension does not match decomposition")
        object.__setattr__(self, "terms", tuple(self.terms))

    @property
    def rank(self) -> int:
        return len(self.terms)

    @property
    def exact(self) -> bool:
        return bool(self.terms) and is_exact(self.terms[0].a)

    def to_float(self) -> "Decomposition":
        terms = tuple(
            Rank1Term(
                t.a.astype(np.float64), t.b.astype(np.float64), t.c.astype(np.float64)
            )
            for t in self.terms
        )
        return Decomposition(self.n, terms, self.scheme, dict(self.params))


def mm_tensor(n: int, exact: bool = False) -> np.ndarray:
    """The n x n matrix multiplication tensor: entry 1 iff d=b, e=c, f=a."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if exact:
        T = np.full((n,) * 6, Fraction(0), dtype=object)
        one = Fraction(1)
    else:
        T = np.zeros((n,) * 6)
        one = 1.0
    for a, b, c in product(range(n), repeat=3):
        T[a, b, c, b, c, a] = one
    return T


def triple_trace(A: np.ndarray, B: np.ndarray, C: np.ndarray):
    """tr(ABC), the pairing of MM with A (x) B (x) C."""
    if not (A.shape == B.shape == C.shape) or A.shape[0] != A.shape[1]:
        raise ValueError("triple_trace needs three square matrices of equal size")
    return np.trace(np.dot(np.dot(A, B), C))


def rank1_tensor(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Dense tensor of a single separable term: T[a,b,c,d,e,f] = a[a,d] b[b,e] c[c,f]."""
    # outer products give axis order (a,d,b,e,c,f); permute to (a,b,c,d,e,f)
    t = np.multiply.outer(np.multiply.outer(a, b), c)
    return t.transpose(0, 2, 4, 1, 3, 5)


def tensor_of(dec: Decomposition, include_identity: bool = True) -> np.ndarray:
    """Materialize the dense sum of a decomposition's separable terms.

    With include_identity=False, a leading identity term 1 (x) 1 (x) 1 is
    skipped, leaving only the orbit/lattice part of the sum.
    """
    n = dec.n
    if dec.exact:
        T = np.full((n,) * 6, Fraction(0), dtype=object)
    else:
        T = np.zeros((n,) * 6)
    terms = dec.terms
    if not include_identity and terms and _is_identity_term(terms[0]):
        terms = terms[1:]
    for t in terms:
        T = T + rank1_tensor(t.a, t.b, t.c)
    return T


def _is_identity_term(t: Rank1Term) -> bool:
    n = t.n
    eye = exact_identity(n) if is_exact(t.a) else np.eye(n)
    return all(np.array_equal(m, eye) for m in (t.a, t.b, t.c))


def frobenius_inner(T1: np.ndarray, T2: np.ndarray):
    """Entrywise inner product of two tensors (real case, no conjugation)."""
    if T1.shape != T2.shape:
        raise ValueError("tensor dimensions do not match")
    return (T1 * T2).sum()


def operator_trace(T: np.ndarray):
    """Trace of the tensor viewed as an operator: sum of T[a,b,c,a,b,c]."""
    n = T.shape[0]
    total = Fraction(0) if is_exact(T) else 0.0
    for a, b, c in product(range(n), repeat=3):
        total = total + T[a, b, c, a, b, c]
    return total
