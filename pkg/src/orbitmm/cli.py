"""Command-line entry point.

Subcommands: gen, verify, analyze, multiply, bench.  Exit codes are stable:
0 = success / mathematically valid, 1 = mathematically invalid, 2 = usage,
I/O, or schema error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import constraints, fourier2
from .bilinear import benchmark, format_bench_table, multiply_recursive, multiply_via
from .constructions import (
    lattice_decomposition,
    orbit_decomposition,
    orbit_spec_for,
    s4_family,
    s5_fixture,
    strassen_theta,
    strassen_theta_sixths,
)
from .frames import fixture_frame, simplex_frame
from .serialize import (
    SchemaError,
    load_decomposition,
    load_matrix,
    save_decomposition,
    save_matrix,
)
from .tensor import mm_tensor
from .verify import invariants_report, verify_exact_gram, verify_float

SCHEMES = ("lattice", "orbit", "strassen-theta", "s4-family")
BUILTINS = ("strassen", "s4-first", "s4-second", "s5")


class UsageError(Exception):
    pass


def _theta_from_args(args) -> float:
    if args.theta is not None and args.theta_sixths is not None:
        raise UsageError("pass --theta or --theta-sixths, not both")
    if args.theta_sixths is not None:
        return args.theta_sixths * math.pi / 6
    return args.theta if args.theta is not None else 0.0


def _gen(args) -> int:
    n, scheme = args.n, args.scheme
    if scheme == "lattice":
        if n < 1:
            raise UsageError("lattice requires n >= 1")
        dec = lattice_decomposition(simplex_frame(n))
    elif scheme == "orbit":
        if n not in (2, 3, 4):
            raise UsageError("orbit scheme requires n in {2, 3, 4}")
        dec = orbit_decomposition(orbit_spec_for(n))
    elif scheme == "strassen-theta":
        if n != 2:
            raise UsageError("strassen-theta requires n = 2")
        if args.theta_sixths is not None and args.theta is None:
            dec = strassen_theta_sixths(args.theta_sixths)
        else:
            dec = strassen_theta(_theta_from_args(args))
    elif scheme == "s4-family":
        if n != 3:
            raise UsageError("s4-family requires n = 3")
        which, signch = args.variant.split("-")
        dec = s4_family(which, 1 if signch == "plus" else -1, _theta_from_args(args))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown scheme {scheme}")
    save_decomposition(dec, args.output)
    print(f"wrote {args.output}: n={dec.n} scheme={dec.scheme} rank={dec.rank} params={dec.params}")
    return 0


def _verify(args) -> int:
    dec = load_decomposition(args.file)
    rep = verify_float(dec, tol=args.tol)
    inv = invariants_report(dec)
    if args.mode == "exact-gram":
        if dec.scheme != "lattice":
            raise UsageError("exact-gram mode applies to lattice decompositions only")
        label = dec.params.get("frame", f"generic-{dec.n}")
        frame = (
            simplex_frame(dec.n) if label.startswith("generic") else fixture_frame(label)
        )
        residual = verify_exact_gram(frame)
        # tie the certificate to the file: the file's terms must match the frame
        regen = lattice_decomposition(frame)
        from .tensor import tensor_of

        file_dev = float(
            np.abs(tensor_of(dec.to_float() if dec.exact else dec) - tensor_of(regen)).max()
        )
        valid = residual == 0 and file_dev < args.tol
        if args.json:
            print(json.dumps({"mode": "exact-gram", "residual": str(residual), "file_deviation": file_dev, "valid": valid, "invariants": _inv_record(inv)}))
        else:
            shown = "0 (exact)" if residual == 0 else str(residual)
            print(f"exact |D - MM|^2 residual: {shown}")
            print(f"file vs regenerated lattice deviation: {file_dev:.3e}")
            for line in inv.lines():
                print(line)
        return 0 if valid else 1
    if args.json:
        print(json.dumps({"mode": "float", "residual": rep.max_residual, "valid": rep.valid, "invariants": _inv_record(inv)}))
    else:
        for line in rep.lines():
            print(line)
        for line in inv.lines():
            print(line)
    return 0 if rep.valid else 1


def _inv_record(inv) -> dict:
    return {
        "n": inv.n,
        "rank": inv.rank,
        "operator_trace": inv.operator_trace,
        "frobenius_sq": inv.frobenius_sq,
        "inner_with_mm": inv.inner_with_mm,
    }


def _print_fourier_table(coeffs):
    print("Fourier coefficients (nonzero):")
    for key in sorted(coeffs):
        if coeffs[key] != 0:
            a, b, c = key
            print(f"  c({a:>5}, {b:>5}, {c:>5}) = {coeffs[key]}")


def _analyze(args) -> int:
    target = args.target
    if target == "strassen":
        k = args.theta_sixths if args.theta_sixths is not None else 0
        dec = strassen_theta_sixths(k) if args.theta is None else strassen_theta(args.theta)
        theta = (k * math.pi / 6) if args.theta is None else args.theta
        frame = fixture_frame("triangle-2")
        from .constructions import standard_sigma_perm
        from .frames import lift_permutation

        sigma = lift_permutation(frame, standard_sigma_perm(3))
        u = np.array([math.cos(theta), math.sin(theta)])
        v = 2.0 / 3.0 * (sigma @ u - u)
        m = np.outer(u, v)
        _print_fourier_table(fourier_coefficients_exact_mm())
        res = fourier2.strassen_equations(m)
        print("constraint residuals:", ", ".join(f"{r:.3e}" for r in res))
        print("necessary conditions (<v,u>, <v,su>, <v,s2u>):",
              constraints.necessary_conditions(u, v, sigma))
        return 0
    if target in ("s4-first", "s4-second"):
        if target == "s4-first":
            dec = s4_family("u", -1, 0.0)
        else:
            dec = s4_family("v", -1, 2 * math.pi / 3 * 0.75)
        u, v = _s4_uv(target)
        print("S4 constraint values (expect -1/4, 1/4, 1/32):", constraints.s4_constraints(u, v))
        print("necessary conditions (<v,u>, <v,su>, <v,s2u>):",
              constraints.necessary_conditions(u, v, constraints.S4_SIGMA))
        return 0
    if target == "s5":
        fx = s5_fixture()
        print("necessary conditions (<v,u>, <v,su>, <v,s2u>):",
              constraints.necessary_conditions(fx.u, fx.v, fx.sigma))
        return 0
    # otherwise treat as a decomposition file
    dec = load_decomposition(target)
    if dec.n == 2:
        from .tensor import tensor_of

        _print_fourier_table(fourier2.fourier_coefficients(tensor_of(dec.to_float() if dec.exact else dec)))
    for line in invariants_report(dec).lines():
        print(line)
    return 0


def _s4_uv(which: str):
    from .constructions import _y_of, s4_family as _  # noqa: F401

    sigma = constraints.S4_SIGMA
    if which == "s4-first":
        theta = 0.0
        y = _y_of(theta)
        u = y - 1 / (2 * math.sqrt(6)) * np.array([-1.0, -1.0, -1.0])
        v = constraints.z_from_y(y, sigma)
    else:
        theta = 2 * math.pi / 3 * 0.75
        y = _y_of(theta)
        u = y
        v = constraints.z_from_y(y, sigma) - 1 / (3 * math.sqrt(2)) * np.array([-1.0, -1.0, -1.0])
    return u, v


def fourier_coefficients_exact_mm():
    return fourier2.fourier_coefficients(mm_tensor(2, exact=True))


def _multiply(args) -> int:
    dec = load_decomposition(args.file)
    A = load_matrix(args.a_file)
    B = load_matrix(args.b_file)
    if A.shape != B.shape or A.shape[0] != A.shape[1]:
        raise UsageError("A and B must be square and of equal size")
    rep = verify_float(dec)
    if not rep.valid:
        print(
            f"warning: decomposition residual {rep.max_residual:.3e} exceeds tolerance",
            file=sys.stderr,
        )
        if not args.force:
            return 1
    if A.shape == (dec.n, dec.n):
        C = multiply_via(dec, A, B)
    else:
        C = multiply_recursive(dec, A, B, cutoff=args.cutoff).result
    if args.output:
        save_matrix(C, args.output)
        print(f"wrote {args.output}")
    else:
        for row in C:
            print(" ".join(format(x, ".12g") for x in row))
    return 0


def _bench(args) -> int:
    dec = load_decomposition(args.file)
    sizes = [int(s) for s in args.sizes.split(",")]
    rows = benchmark(dec, sizes, cutoff=args.cutoff)
    if args.json:
        print(json.dumps([r.to_record() for r in rows]))
    else:
        print(format_bench_table(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="orbitmm",
        description="Construct, verify, analyze, and execute symmetric rank "
        "decompositions of the matrix multiplication tensor.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a decomposition file")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--scheme", choices=SCHEMES, required=True)
    g.add_argument("--theta", type=float, default=None)
    g.add_argument("--theta-sixths", type=int, default=None, help="theta as k*pi/6")
    g.add_argument(
        "--variant",
        choices=("u-minus", "u-plus", "v-minus", "v-plus"),
        default="u-minus",
        help="s4-family variant: which of u/v carries the w4 component, and the sign",
    )
    g.add_argument("--output", "-o", required=True)
    g.set_defaults(func=_gen)

    v = sub.add_parser("verify", help="verify a decomposition file")
    v.add_argument("file")
    v.add_argument("--mode", choices=("float", "exact-gram"), default="float")
    v.add_argument("--tol", type=float, default=1e-9)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=_verify)

    a = sub.add_parser("analyze", help="constraint/Fourier analysis of a builtin or file")
    a.add_argument("target", help=f"decomposition file or one of {BUILTINS}")
    a.add_argument("--theta", type=float, default=None)
    a.add_argument("--theta-sixths", type=int, default=None)
    a.set_defaults(func=_analyze)

    m = sub.add_parser("multiply", help="multiply two matrices via a decomposition")
    m.add_argument("file")
    m.add_argument("a_file")
    m.add_argument("b_file")
    m.add_argument("--cutoff", type=int, default=16)
    m.add_argument("--force", action="store_true")
    m.add_argument("--output", "-o", default=None)
    m.set_defaults(func=_multiply)

    b = sub.add_parser("bench", help="benchmark recursive multiplication")
    b.add_argument("file")
    b.add_argument("--sizes", required=True, help="comma-separated sizes")
    b.add_argument("--cutoff", type=int, default=16)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SchemaError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
