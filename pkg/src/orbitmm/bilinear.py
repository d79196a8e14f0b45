"""Execute a decomposition as a (recursive) matrix multiplication algorithm.

The combination rule is fixed once, derived from the pairing convention
<MM, A (x) B (x) C> = tr ABC:

    AB = sum_r <a_r, A> <b_r, B> c_r^T,   <X, Y> = tr(X^T Y).

Recursion replaces the scalar inner products by block-weighted sums, padding
inputs with zeros to the next power of dec.n and switching to the naive
product at or below the cutoff size.  Scalar multiplication counts are exact:
only the multiplications of the base-case products are counted (s^3 for an
s x s base block), giving rank^depth * cutoff_cost overall.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .tensor import Decomposition

__all__ = [
    "MulReport",
    "BenchRow",
    "naive_multiply",
    "multiply_via",
    "multiply_recursive",
    "predicted_mult_count",
    "benchmark",
    "format_bench_table",
]


def naive_multiply(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Textbook triple loop; the reference oracle for all multiplication tests."""
    if A.ndim != 2 or B.ndim != 2 or A.shape[1] != B.shape[0]:
        raise ValueError("dimension mismatch")
    rows, inner, cols = A.shape[0], A.shape[1], B.shape[1]
    C = np.zeros((rows, cols), dtype=np.result_type(A.dtype, B.dtype, np.float64))
    for i in range(rows):
        for j in range(cols):
            acc = 0.0
            for k in range(inner):
                acc += A[i, k] * B[k, j]
            C[i, j] = acc
    return C


def multiply_via(dec: Decomposition, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """One application of the bilinear rule at the decomposition's own size."""
    n = dec.n
    if A.shape != (n, n) or B.shape != (n, n):
        raise ValueError(f"multiply_via needs {n}x{n} inputs")
    d = dec.to_float() if dec.exact else dec
    C = np.zeros((n, n))
    for t in d.terms:
        C += float((t.a * A).sum()) * float((t.b * B).sum()) * t.c.T
    return C


@dataclass(frozen=True)
class MulReport:
    result: np.ndarray
    scalar_multiplications: int
    wall_time: float
    recursion_depth: int


def _next_power(n: int, size: int) -> int:
    p = 1
    while p < size:
        p *= n
    return p


def multiply_recursive(
    dec: Decomposition, A: np.ndarray, B: np.ndarray, cutoff: int = 1
) -> MulReport:
    """Recursive block multiplication driven by the decomposition."""
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    if A.shape != B.shape or A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("multiply_recursive needs square matrices of equal size")
    n = dec.n
    d = dec.to_float() if dec.exact else dec
    size = A.shape[0]
    padded = _next_power(n, max(size, 1))
    Ap = np.zeros((padded, padded))
    Bp = np.zeros((padded, padded))
    Ap[:size, :size] = A
    Bp[:size, :size] = B
    mults = 0
    depth = 0

    def rec(X: np.ndarray, Y: np.ndarray, level: int) -> np.ndarray:
        nonlocal mults, depth
        depth = max(depth, level)
        s = X.shape[0]
        if s <= cutoff or s % n != 0:
            mults += s**3
            return X @ Y  # naive product of the base block
        h = s // n
        Xb = [[X[i * h : (i + 1) * h, j * h : (j + 1) * h] for j in range(n)] for i in range(n)]
        Yb = [[Y[i * h : (i + 1) * h, j * h : (j + 1) * h] for j in range(n)] for i in range(n)]
        C = np.zeros((s, s))
        for t in d.terms:
            P = np.zeros((h, h))
            Q = np.zeros((h, h))
            for i in range(n):
                for j in range(n):
                    if t.a[i, j] != 0.0:
                        P += t.a[i, j] * Xb[i][j]
                    if t.b[i, j] != 0.0:
                        Q += t.b[i, j] * Yb[i][j]
            M = rec(P, Q, level + 1)
            for i in range(n):
                for j in range(n):
                    coef = t.c[i, j]
                    if coef != 0.0:
                        # c^T places block (i, j) of c at block position (j, i)
                        C[j * h : (j + 1) * h, i * h : (i + 1) * h] += coef * M
        return C

    t0 = time.perf_counter()
    Cp = rec(Ap, Bp, 0)
    wall = time.perf_counter() - t0
    return MulReport(
        result=Cp[:size, :size],
        scalar_multiplications=mults,
        wall_time=wall,
        recursion_depth=depth,
    )


def predicted_mult_count(n: int, rank: int, size: int, cutoff: int = 1) -> int:
    """Exact multiplication count of multiply_recursive for the given shape."""
    padded = _next_power(n, max(size, 1))
    depth = 0
    s = padded
    while s > cutoff and s % n == 0:
        s //= n
        depth += 1
    return rank**depth * s**3


@dataclass(frozen=True)
class BenchRow:
    size: int
    recursive_time: float
    naive_time: float
    scalar_multiplications: int
    count_at_cutoff_1: int
    exponent_estimate: float
    max_error: float

    def to_record(self) -> dict:
        return {
            "size": self.size,
            "recursive_time": self.recursive_time,
            "naive_time": self.naive_time,
            "scalar_multiplications": self.scalar_multiplications,
            "count_at_cutoff_1": self.count_at_cutoff_1,
            "exponent_estimate": self.exponent_estimate,
            "max_error": self.max_error,
        }


def benchmark(
    dec: Decomposition, sizes, cutoff: int = 1, rng=None
) -> list[BenchRow]:
    """Time the recursive algorithm against the plain product per size.

    Reports the executed multiplication count at the given cutoff, the exact
    count the recursion would use at cutoff 1, and the exponent estimate
    log_size(count at cutoff 1); the estimate is count-based, not time-based.
    """
    rng = rng or np.random.default_rng(0)
    rows = []
    for size in sizes:
        A = rng.standard_normal((size, size))
        B = rng.standard_normal((size, size))
        rep = multiply_recursive(dec, A, B, cutoff=cutoff)
        t0 = time.perf_counter()
        ref = A @ B
        naive_time = time.perf_counter() - t0
        c1 = predicted_mult_count(dec.n, dec.rank, size, cutoff=1)
        scale = float(np.abs(ref).max()) or 1.0
        rows.append(
            BenchRow(
                size=size,
                recursive_time=rep.wall_time,
                naive_time=naive_time,
                scalar_multiplications=rep.scalar_multiplications,
                count_at_cutoff_1=c1,
                exponent_estimate=np.log(c1) / np.log(size),
                max_error=float(np.abs(rep.result - ref).max()) / scale,
            )
        )
    return rows


def format_bench_table(rows: list[BenchRow]) -> str:
    header = f"{'size':>6} {'rec time':>10} {'mat time':>10} {'mults':>14} {'mults@1':>14} {'exponent':>9} {'max err':>10}"
    lines = [header, "-" * len(header)]
    for r in rows:
        lines.append(
            f"{r.size:>6} {r.recursive_time:>10.4f} {r.naive_time:>10.4f} "
            f"{r.scalar_multiplications:>14} {r.count_at_cutoff_1:>14} "
            f"{r.exponent_estimate:>9.4f} {r.max_error:>10.2e}"
        )
    return "\n".join(lines)
