"""``qgk`` command line: reproducible verification runs with JSON reports.

Exit status: 0 when every residual is within ``--tol``, 1 otherwise, 2 on
bad input.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys

import numpy as np

SCHEMA = "qgk/1"


class InputError(Exception):
    pass


def _z_arg(text):
    from .scalar import parse_complex

    try:
        return parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _points(args, count: int) -> list:
    """The explicit --z, or ``count`` seeded samples away from 0 and k*pi*i."""
    from .uqnum import random_points

    if args.z is not None:
        return [args.z]
    return random_points(np.random.default_rng(args.seed), count)


def _cjson(z: complex) -> list:
    return [z.real, z.imag]


def _worst(values) -> float:
    return max((float(v) for v in values), default=0.0)


# -- commands ---------------------------------------------------------------------


def cmd_frt_gen(args):
    from .frt import centrality_check, sl_quotient

    alg = sl_quotient(args.N)
    return {"algebra": alg.to_json(), "detq_central": centrality_check(args.N)}, True


def _load_presentation(args):
    from .frt import frt_algebra, sl_quotient
    from .rewrite import Presentation, builtin_presentation

    if args.presentation:
        with open(args.presentation) as fh:
            return Presentation.from_json(json.load(fh))
    if args.preset in ("quantum_plane", "quantum_exterior"):
        return builtin_presentation(args.preset, args.n)
    if args.preset == "frt":
        return frt_algebra(args.N).pres
    if args.preset == "sl":
        return sl_quotient(args.N).pres
    raise InputError(f"unknown preset {args.preset!r}")


def cmd_reduce(args):
    from .freealg import NCPoly
    from .rewrite import reduce

    pres = _load_presentation(args)
    if args.input in (None, "-"):
        obj = json.load(sys.stdin)
    else:
        with open(args.input) as fh:
            obj = json.load(fh)
    p = NCPoly.from_json(pres.gens, obj)
    nf = reduce(p, pres)
    return {"presentation": pres.name, "input": p.to_json(), "normal_form": nf.to_json(), "is_zero": nf.is_zero()}, True


def cmd_qybe(args):
    from .rmatrix import eval_rmatrix, numeric_qybe_residual, qybe_check, standard_sln_rmatrix

    R = standard_sln_rmatrix(args.N)
    res = qybe_check(R)
    numeric = []
    for z in _points(args, 3):
        numeric.append({"z": _cjson(z), "residual": numeric_qybe_residual(eval_rmatrix(R, z), args.N)})
    ok = res.holds and _worst(r["residual"] for r in numeric) <= args.tol
    report = {
        "symbolic": "exact" if res.holds else "fails",
        "witness": None if res.holds else [res.witness[0], res.witness[1], str(res.witness[2]), str(res.witness[3])],
        "numeric": numeric,
    }
    return report, ok


def cmd_hopf_check(args):
    from .frt import antipode_residual_numeric, centrality_check, hopf_axiom_check, sl_quotient

    alg = sl_quotient(args.N)
    exact = hopf_axiom_check(alg)
    numeric = [{"z": _cjson(z), "antipode_residual": antipode_residual_numeric(alg, z)} for z in _points(args, 5)]
    ok = exact["all"] and _worst(r["antipode_residual"] for r in numeric) <= args.tol
    exact = {k: v for k, v in exact.items() if k != "failures"} | {"failures": [list(f) for f in exact["failures"]]}
    return {"exact": exact, "detq_central": centrality_check(args.N), "numeric": numeric}, ok


def cmd_uq_check(args):
    from .uqnum import fundamental_rep, uq_report

    rows = []
    for z in _points(args, 20):
        rows.append({"z": _cjson(z), "residuals": uq_report(fundamental_rep(args.N, z))})
    limit = uq_report(fundamental_rep(args.N, 0))
    worst = _worst([v for r in rows for v in r["residuals"].values()] + list(limit.values()))
    return {"points": rows, "classical_limit": limit, "max_residual": worst}, worst <= args.tol


def cmd_pair_check(args):
    from .duality import calibrate, nondegeneracy_probe, pairing_axiom_check
    from .uqnum import random_points

    if args.z is not None:
        z = args.z
    else:
        z = random_points(np.random.default_rng(args.seed), 1)[0]
    ctx = calibrate(args.N, z)
    axioms = pairing_axiom_check(ctx, max_len=min(args.max_deg, 3) if args.max_deg else 3)
    report = {"z": _cjson(z), "scale": ctx.scale, "convention": ctx.convention, "axioms": axioms}
    if args.N == 2:
        report["nondegeneracy"] = nondegeneracy_probe(ctx)
    ok = _worst(axioms.values()) <= args.tol
    return report, ok


def cmd_twist_check(args):
    from .twist import load_scenario, quasitriangular_branch_check, twist_report

    t = load_scenario(args.scenario)
    rep = twist_report(t)
    branch = quasitriangular_branch_check(t)
    keys = ("cocycle", "counit", "triangularity", "intertwining", "twisted_coassociativity", "flip_involution")
    ok = _worst(rep[k] for k in keys) <= args.tol
    return {"scenario": args.scenario, "residuals": rep, "quasitriangular_branch": branch}, ok


def cmd_moyal_check(args):
    from .moyal import quantization_check, random_symbol

    rng = random.Random(args.seed)
    failures = []
    for trial in range(args.count):
        a, b, c = (random_symbol(rng, args.n, args.max_deg) for _ in range(3))
        res = quantization_check(a, b, c)
        if not all(res.values()):
            failures.append({"trial": trial, "checks": res, "a": a.to_json(), "b": b.to_json(), "c": c.to_json()})
    return {"trials": args.count, "n": args.n, "max_deg": args.max_deg, "failures": failures}, not failures


def classical_dims(preset: str, n: int, N: int, max_deg: int) -> list:
    if preset == "quantum_plane":
        return [math.comb(n + d - 1, d) for d in range(max_deg + 1)]
    if preset == "quantum_exterior":
        return [math.comb(n, d) for d in range(max_deg + 1)]
    if preset == "frt":
        return [math.comb(N * N + d - 1, d) for d in range(max_deg + 1)]
    if preset == "sl":
        m = N * N
        return [math.comb(m + d - 1, d) - (math.comb(m + d - N - 1, d - N) if d >= N else 0) for d in range(max_deg + 1)]
    raise InputError(f"no classical count for preset {preset!r}")


def cmd_dims(args):
    from .rewrite import graded_dimension

    pres = _load_presentation(args)
    dims = [graded_dimension(pres, d) for d in range(args.max_deg + 1)]
    report = {"presentation": pres.name, "dims": dims}
    if args.presentation:
        return report, True
    classical = classical_dims(args.preset, args.n, args.N, args.max_deg)
    report["classical"] = classical
    return report, dims == classical


COMMANDS = {
    "frt-gen": cmd_frt_gen,
    "reduce": cmd_reduce,
    "qybe": cmd_qybe,
    "hopf-check": cmd_hopf_check,
    "uq-check": cmd_uq_check,
    "pair-check": cmd_pair_check,
    "twist-check": cmd_twist_check,
    "moyal-check": cmd_moyal_check,
    "dims": cmd_dims,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--N", type=int, default=2, help="matrix size / rank parameter")
    common.add_argument("--z", type=_z_arg, default=None, help='parameter value, e.g. "0.7+0.2i"')
    common.add_argument("--max-deg", type=int, default=3)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float, default=1e-10)
    common.add_argument("--out", default=None, help="write the JSON report here instead of stdout")

    p = argparse.ArgumentParser(prog="qgk", description="Quantum group verification toolkit")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name in ("reduce", "dims"):
            sp.add_argument("--preset", default="quantum_plane", choices=["quantum_plane", "quantum_exterior", "frt", "sl"])
            sp.add_argument("--n", type=int, default=2, help="number of generators for plane/exterior presets")
            sp.add_argument("--presentation", default=None, help="presentation JSON file (overrides --preset)")
        if name == "reduce":
            sp.add_argument("--input", default=None, help="NCPoly JSON file, '-' or omitted for stdin")
        if name == "twist-check":
            sp.add_argument("--scenario", default="sl3_abelian", help="builtin scenario name or JSON file")
        if name == "moyal-check":
            sp.add_argument("--n", type=int, default=1)
            sp.add_argument("--count", type=int, default=20)
    return p


def run(argv=None) -> tuple:
    """Parse, dispatch and return (exit code, report dict or None)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None
    if args.N < 1 or args.max_deg < 0:
        print("qgk: --N must be >= 1 and --max-deg >= 0", file=sys.stderr)
        return 2, None
    try:
        results, ok = COMMANDS[args.command](args)
    except (InputError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"qgk: {exc}", file=sys.stderr)
        return 2, None
    config = {k: (_cjson(v) if isinstance(v, complex) else v) for k, v in sorted(vars(args).items()) if k != "out"}
    report = {"schema": SCHEMA, "command": args.command, "config": config, "ok": bool(ok), "results": results}
    text = json.dumps(report, indent=2, sort_keys=True, default=_json_default)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return (0 if ok else 1), report


def _json_default(o):
    if isinstance(o, (np.floating, np.integer, np.bool_)):
        return o.item()
    if isinstance(o, complex):
        return _cjson(o)
    raise TypeError(f"not JSON serializable: {type(o).__name__}")


def main(argv=None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
