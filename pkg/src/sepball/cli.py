"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource limit.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import bounds, cone, designs, export, quantum, tensors
from .tensors import ResourceLimitError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

PSD_TOL = 1e-9
PRODUCT_TOL = 1e-10
WITNESS_NEG_TOL = 1e-6
DISTANCE_TOL = 1e-12


class UsageError(ValueError):
    pass


def _emit(text: str, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _grid(a) -> str:
    width = max(len(str(int(x))) for x in a.ravel())
    return "\n".join(" ".join(str(int(x)).rjust(width) for x in row) for row in a) + "\n"


def _check_lines(checks) -> str:
    return "".join(f"{'PASS' if ok else 'FAIL'} {name}: {detail}\n" for name, ok, detail in checks)


def cmd_design(args) -> int:
    d = designs.make_design(args.n)
    report = designs.verify_design(d)
    if args.format == "json":
        text = export.dumps(export.design_to_dict(d, report))
    else:
        parts = []
        for k, mat in enumerate(d.matrices, start=1):
            parts.append(f"U_{k}:\n" + _grid(mat))
        parts.append(_check_lines((c.name, c.passed, c.detail) for c in report))
        text = "\n".join(parts)
    _emit(text, args.out)
    return EXIT_OK if designs.all_passed(report) else EXIT_FAIL


def _state_summary(m, rho) -> dict:
    return {
        "m": m,
        "trace": str(rho.trace()),
        "min_eigenvalue": quantum.min_eigenvalue(rho),
        "distance_to_maximally_mixed": quantum.frobenius_distance(rho, quantum.maximally_mixed(m)),
        "upper_bound": bounds.upper_bound(m),
    }


def cmd_state(args) -> int:
    rho = quantum.build_state(args.m)
    summary = _state_summary(args.m, rho)
    if args.format == "json":
        text = export.dumps(export.matrix_to_dict(rho, exact=args.exact, summary=summary))
    elif args.format == "csv":
        text = export.matrix_to_csv(rho, exact=args.exact)
    else:
        if args.exact:
            red = rho.reduced()
            text = f"denominator: {red.denominator}\n" + _grid(red.re)
            if red.im.any():
                text += "imaginary part:\n" + _grid(red.im)
        else:
            text = np.array2string(rho.to_numpy().real if not rho.im.any() else rho.to_numpy(),
                                   max_line_width=200, precision=6) + "\n"
        text += "".join(f"{k}: {v}\n" for k, v in summary.items())
    _emit(text, args.out)
    return EXIT_OK


def _load_state(path):
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    return export.matrix_from_dict(payload)


def verify_checks(m: int, samples: int, seed: int, rho=None):
    """(name, passed, detail) triples for the boundary-state certificate."""
    given = rho is not None
    if rho is None:
        rho = quantum.build_state(m)
    exact = isinstance(rho, quantum.HermitianMatrix)
    dense = rho.to_numpy() if exact else np.asarray(rho)
    checks = []

    herm = rho.is_hermitian() if exact else bool(np.allclose(dense, dense.conj().T, atol=1e-14))
    checks.append(("hermitian", herm, "H = H^*"))

    tr = rho.trace() if exact else complex(np.trace(dense))
    tr_ok = tr == 1 if exact else abs(tr - 1) <= 1e-12
    checks.append(("trace_one", tr_ok, f"trace = {tr}"))

    lam = quantum.min_eigenvalue(dense)
    checks.append(("psd", lam >= -PSD_TOL, f"min eigenvalue = {lam:.3e}"))

    w = quantum.witness_operator(m)
    pair = quantum.trace_product(w, rho) if exact else float(np.real(np.trace(w.to_numpy() @ dense)))
    pair_ok = pair == 0 if exact else abs(pair) <= 1e-12
    checks.append(("witness_zero_pairing", pair_ok, f"tr(W rho) = {pair}"))

    low = quantum.min_product_expectation(w, m, samples, seed)
    checks.append(("witness_product_nonnegative", low >= -PRODUCT_TOL,
                   f"min tr(W P) over {samples} product states = {low:.3e}"))

    if m >= 2:
        wl = quantum.min_eigenvalue(w)
        checks.append(("witness_negative_eigenvalue", wl < -WITNESS_NEG_TOL,
                       f"min eigenvalue of W = {wl:.6g}"))

    dist = quantum.frobenius_distance(rho, quantum.maximally_mixed(m))
    ub = bounds.upper_bound(m)
    checks.append(("distance_equals_upper_bound", abs(dist - ub) <= DISTANCE_TOL,
                   f"distance = {dist!r}, upper bound = {ub!r}"))

    dec = cone.separable_decomposition(m)
    rec = quantum.reconstruct_from_decomposition(dec)
    same = rec == rho if exact else bool(np.allclose(rec.to_numpy(), dense, atol=1e-12))
    checks.append(("decomposition_reconstructs", same and dec.is_valid(),
                   f"{len(dec)} product terms" + (" vs input state" if given else "")))
    return checks


def cmd_verify(args) -> int:
    rho = None
    m = args.m
    if args.input:
        rho = _load_state(args.input)
        dim = rho.dim if isinstance(rho, quantum.HermitianMatrix) else rho.shape[0]
        m = int(round(math.log2(dim)))
        if 2 ** m != dim:
            raise UsageError(f"matrix dimension {dim} is not a power of two")
    if m is None:
        raise UsageError("verify needs --m or --input")
    checks = verify_checks(m, args.samples, args.seed, rho)
    _emit(_check_lines(checks), args.out)
    return EXIT_OK if all(ok for _, ok, _ in checks) else EXIT_FAIL


def cmd_bounds(args) -> int:
    if args.max < 1:
        raise UsageError("--max must be at least 1")
    reports = [bounds.bounds_report(m) for m in range(1, args.max + 1)]
    if args.format == "csv":
        text = export.bounds_to_csv(reports, bounds.RATIO_LIMIT)
    elif args.format == "json":
        text = export.dumps({
            "schema": export.SCHEMA,
            "rows": [{"m": r.m, "r_lower": r.r_lower, "r_upper": r.r_upper, "ratio": r.ratio}
                     for r in reports],
            "asymptote": bounds.RATIO_LIMIT,
        })
    else:
        lines = [f"{'m':>3} {'r_lower':>22} {'r_upper':>22} {'ratio':>10}"]
        lines += [f"{r.m:>3} {r.r_lower:>22.15e} {r.r_upper:>22.15e} {r.ratio:>10.7f}" for r in reports]
        lines.append(f"{'inf':>3} {'':>22} {'':>22} {bounds.RATIO_LIMIT:>10.7f}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _build_tensor(kind, m, n):
    if kind in ("tilde", "hat"):
        if m is None:
            raise UsageError(f"--kind {kind} needs --m")
        return tensors.restricted_tensor(m, kind)
    if kind == "t4":
        return tensors.t4_tensor()
    if kind == "m3":
        return tensors.m3_tensor()
    if kind == "design":
        if m is None or n is None:
            raise UsageError("--kind design needs --n and --m")
        d = designs.make_design(n)
        e = np.zeros(n, dtype=np.int64)
        e[-1] = 1
        return tensors.design_tensor(d, e, e, m)
    raise UsageError(f"unknown tensor kind {kind!r}")


def cmd_tensor(args) -> int:
    t = _build_tensor(args.kind, args.m, args.n)
    if args.format == "csv":
        text = export.tensor_to_csv(t)
    elif args.format == "json":
        text = export.dumps(export.tensor_to_dict(t))
    else:
        text = (f"order: {t.order}\naxis: {t.axis}\nnonzero: {t.nonzero_count()}\n"
                f"norm_sq: {tensors.frobenius_norm_sq(t)}\n")
    _emit(text, args.out)
    return EXIT_OK


def cmd_decompose(args) -> int:
    dec = cone.separable_decomposition(args.m)
    if args.format == "json":
        text = export.dumps(export.decomposition_to_dict(dec))
    else:
        lines = [f"terms: {len(dec)}", f"weight_sum: {dec.total_weight()}"]
        lines += [f"{t.weight} {' '.join(f'{s:+d}' for s in t.factors)}" for t in dec.terms]
        ok = quantum.reconstruct_from_decomposition(dec) == quantum.build_state(args.m)
        lines.append(f"reconstructs_state: {ok}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_injnorm(args) -> int:
    base, _, suffix = args.kind.partition("-")
    if suffix not in ("", "normalized"):
        raise UsageError(f"unknown tensor kind {args.kind!r}")
    t = _build_tensor(base, args.m, args.n)
    norm_sq = tensors.frobenius_norm_sq(t)
    if suffix:
        t = t / norm_sq
    res = tensors.injective_norm(t, restarts=args.restarts, tol=args.tol, seed=args.seed,
                                 threads=args.threads)
    payload = {
        "schema": export.SCHEMA,
        "kind": args.kind,
        "value": res.value,
        "norm_sq": norm_sq,
        "value_times_norm_sq": res.value * norm_sq if suffix else res.value,
        "iterations": res.iterations,
        "converged": res.converged,
        "restarts": res.restarts,
        "maximizers": [v.tolist() for v in res.maximizers],
    }
    if args.format == "json":
        text = export.dumps(payload)
    else:
        text = f"value: {res.value:.6f}\nnorm_sq: {norm_sq}\niterations: {res.iterations}\n" \
               f"converged: {res.converged}\n"
        if suffix:
            # injective norm of the unnormalized tensor
            text += f"value_times_norm_sq: {res.value * norm_sq:.6f}\n"
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sepball", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json", "csv")):
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--out", help="write to this file instead of stdout")

    sp = sub.add_parser("design", help="print and verify a rate-1 orthogonal design")
    sp.add_argument("--n", type=int, required=True, choices=designs.SUPPORTED_ORDERS)
    common(sp, ("text", "json"))
    sp.set_defaults(func=cmd_design)

    sp = sub.add_parser("state", help="boundary separable state of m qubits")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--exact", action="store_true", help="integer matrix over a common denominator")
    common(sp)
    sp.set_defaults(func=cmd_state)

    sp = sub.add_parser("verify", help="check the separability/boundary certificate")
    sp.add_argument("--m", type=int)
    sp.add_argument("--input", help="state matrix JSON to check instead of the built state")
    sp.add_argument("--samples", type=int, default=10000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bounds", help="table of lower/upper radius bounds")
    sp.add_argument("--max", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("tensor", help="build and export a tensor")
    sp.add_argument("--kind", required=True, choices=("tilde", "hat", "t4", "m3", "design"))
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)
    common(sp)
    sp.set_defaults(func=cmd_tensor)

    sp = sub.add_parser("decompose", help="explicit product decomposition of the boundary state")
    sp.add_argument("--m", type=int, required=True)
    common(sp, ("text", "json"))
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("injnorm", help="alternating-maximization lower bound on the injective norm")
    sp.add_argument("--kind", required=True)
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--restarts", type=int, default=32)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--tol", type=float, default=1e-12)
    sp.add_argument("--threads", type=int, default=1)
    common(sp, ("text", "json"))
    sp.set_defaults(func=cmd_injnorm)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
