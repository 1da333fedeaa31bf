"""Command-line front end.

Exit codes: 0 success, 1 input error (bad spec, guard exceeded, bad flags),
2 verification failure (a failing check or an expected/computed mismatch).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from . import __version__
from .algebra import matrix_algebra, quadratic_algebra, split_algebra, dual_numbers, quaternion_algebra
from .algebra import Product, cyclic3_algebra, trivial_algebra
from .checks import (
    ClosureCache,
    IsoReport,
    check_csa_dimension,
    check_cubic_split,
    check_endv,
    check_group_ring,
    check_product_formula,
    check_quadratic,
)
from .closure import DEFAULT_CAP, base_change_check, closure_report, galois_closure
from .errors import GCloseError, IdealNotStable
from .fields import QuadraticField
from .hermitian import hermitian_space, vinberg_catalog
from .specs import PRESETS, load_spec, normalize_spec, parse_preset_string, read_spec_file

log = logging.getLogger("gclose")

CHECKS = ("quadratic", "cubic", "endv", "product", "groupring", "csa", "basechange", "all")


class UsageError(GCloseError):
    pass


@dataclass
class RunConfig:
    command: str
    spec: Any
    output: str | None
    cap: int
    force: bool
    threads: int
    seed: int
    tier: str
    dump_actions: bool


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"environment variable {name} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gclose", description="Galois closures of finite-rank algebras and Hermitian spaces.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, algebra=True):
        if algebra:
            sp.add_argument("--preset", help="preset name or full preset string (see `gclose presets`)")
            sp.add_argument("--spec", help="path to a JSON algebra spec")
            sp.add_argument("--n", type=int, help="size parameter for split/trivial/matrix presets")
            sp.add_argument("--d", help="parameter d for quadratic/quaternion presets")
            sp.add_argument("--gamma", help="parameter gamma for the quaternion preset")
            sp.add_argument("--dims", help="comma-separated dims for the groupring preset")
        sp.add_argument("--output", "-o", help="write the JSON report here (default stdout)")
        sp.add_argument("--cap", type=int, help=f"ambient dimension cap (default {DEFAULT_CAP}, env GCLOSE_DIM_CAP)")
        sp.add_argument("--force", action="store_true", help="ignore the dimension cap")
        sp.add_argument("--threads", type=int, help="saturation worker threads (env GCLOSE_THREADS)")
        sp.add_argument("--seed", type=int, default=0, help="random seed for sampled checks (default 0)")
        sp.add_argument("--verbose", "-v", action="store_true")

    c = sub.add_parser("closure", help="compute G(A) and its S_n character")
    common(c)
    c.add_argument("--dump-actions", action="store_true", help="include every descended action matrix")

    h = sub.add_parser("hermitian", help="compute the Hermitian space H(A, U)")
    common(h)
    h.add_argument("--m", type=int, required=True, help="rank of U")
    h.add_argument("--expect", type=int, help="expected dimension (exit 2 on mismatch)")

    k = sub.add_parser("check", help="run isomorphism verifiers")
    common(k)
    k.add_argument("name", choices=CHECKS)

    g = sub.add_parser("catalog", help="Vinberg catalog rows: expected vs computed dimensions")
    common(g, algebra=False)
    g.add_argument("--tier", choices=("desk", "stretch"), default="desk")
    g.add_argument("--reuse", action="store_true", help="share closures between rows")
    g.add_argument("--expect", action="append", default=[], metavar="ROW=DIM", help="override an expected dimension")

    sub.add_parser("presets", help="list preset algebras")
    return p


def _spec_from_args(args) -> Any:
    if args.spec and args.preset:
        raise UsageError("give either --preset or --spec, not both")
    if args.spec:
        return read_spec_file(args.spec)
    if not args.preset:
        raise UsageError("an algebra is required: --preset NAME or --spec FILE")
    name = args.preset
    if ":" in name or name in ("dual", "cyclic3"):
        return parse_preset_string(name)
    if name in ("split", "trivial", "matrix"):
        if args.n is None:
            raise UsageError(f"preset {name} needs --n")
        return parse_preset_string(f"{name}:{args.n}")
    if name == "quadratic":
        if args.d is None:
            raise UsageError("preset quadratic needs --d")
        return parse_preset_string(f"quadratic:{args.d}")
    if name == "quaternion":
        return parse_preset_string(f"quaternion:{args.d or -1},{args.gamma or -1}")
    if name == "groupring":
        if not args.dims:
            raise UsageError("preset groupring needs --dims")
        return parse_preset_string(f"groupring:{args.dims}")
    return parse_preset_string(name)


def _config(args) -> RunConfig:
    cap = args.cap if args.cap is not None else _env_int("GCLOSE_DIM_CAP", DEFAULT_CAP)
    threads = args.threads if args.threads is not None else _env_int("GCLOSE_THREADS", os.cpu_count() or 1)
    if cap <= 0:
        raise UsageError("--cap must be positive")
    if threads <= 0:
        raise UsageError("--threads must be positive")
    return RunConfig(
        command=args.command,
        spec=None,
        output=args.output,
        cap=cap,
        force=args.force,
        threads=threads,
        seed=args.seed,
        tier=getattr(args, "tier", "desk"),
        dump_actions=getattr(args, "dump_actions", False),
    )


def _emit(report: dict, path: str | None) -> None:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_closure(args, cfg: RunConfig) -> int:
    spec = _spec_from_args(args)
    A, D = load_spec(spec)
    gc = galois_closure(A, D, cap=cfg.cap, force=cfg.force, threads=cfg.threads)
    _emit(closure_report(gc, normalize_spec(spec), cfg.dump_actions), cfg.output)
    return 0


def _cmd_hermitian(args, cfg: RunConfig) -> int:
    spec = _spec_from_args(args)
    A, D = load_spec(spec)
    gc = galois_closure(A, D, cap=cfg.cap, force=cfg.force, threads=cfg.threads)
    H = hermitian_space(gc, args.m, cap=cfg.cap, force=cfg.force)
    report = {
        "algebra": normalize_spec(spec),
        "n": gc.n,
        "m": args.m,
        "closure_dim": gc.closure_dim,
        "ambient_dim": H.ambient_dim,
        "computed_dim": H.dim,
        "expected_dim": args.expect,
        "timings_ms": {k: round(v, 3) for k, v in gc.timings_ms.items()},
    }
    ok = args.expect is None or args.expect == H.dim
    report["passed"] = ok
    _emit(report, cfg.output)
    return 0 if ok else 2


def _default_check_suite(name: str, cfg: RunConfig, cache: ClosureCache) -> list[IsoReport]:
    seed = cfg.seed
    out: list[IsoReport] = []
    if name in ("quadratic", "all"):
        for A, D in (split_algebra(2), quadratic_algebra(2), quaternion_algebra()):
            out.append(check_quadratic(A, D, seed=seed, cache=cache))
    if name in ("cubic", "all"):
        for B, DB in (split_algebra(2), quadratic_algebra(2), dual_numbers()):
            out.append(check_cubic_split(B, DB, seed=seed, cache=cache))
    if name in ("endv", "all"):
        for n in (2, 3):
            out.append(check_endv(n, seed=seed, cache=cache))
    if name in ("product", "all"):
        k = trivial_algebra(1)
        for factors in ([k, k], [k, matrix_algebra(2)], [matrix_algebra(2), quadratic_algebra(2)], [k, k, matrix_algebra(2)]):
            out.append(check_product_formula(factors, cache=cache, seed=seed))
    if name in ("groupring", "all"):
        for dims in ([1], [1, 1], [1, 1, 2]):
            out.append(check_group_ring(dims, cache=cache))
    if name in ("csa", "all"):
        for A, D in (quaternion_algebra(), cyclic3_algebra(), matrix_algebra(2)):
            out.append(check_csa_dimension(A, D, cache=cache, seed=seed))
    if name in ("basechange", "all"):
        for (A, D), d in ((quadratic_algebra(2), 2), (matrix_algebra(2), 5), (trivial_algebra(3), 2)):
            bc = base_change_check(A, D, QuadraticField(d), gc=cache.get(A, D), cap=cfg.cap, force=cfg.force)
            rep = IsoReport(f"base_change:{A.name}:Q(sqrt({d}))", dims={"source": bc.source_dim, "target": bc.target_dim})
            rep.record("dimension", bc.source_dim == bc.target_dim)
            rep.record("ideal_span", bc.ideal_equal)
            out.append(rep)
    return out


def _targeted_check(name: str, spec: Any, cfg: RunConfig, cache: ClosureCache, args) -> list[IsoReport]:
    A, D = load_spec(spec)
    if name == "quadratic":
        return [check_quadratic(A, D, seed=cfg.seed, cache=cache)]
    if name == "cubic":
        return [check_cubic_split(A, D, seed=cfg.seed, cache=cache)]
    if name == "csa":
        return [check_csa_dimension(A, D, cache=cache, seed=cfg.seed)]
    if name == "product":
        if not isinstance(D, Product):
            raise UsageError("check product needs a product algebra (e.g. --preset product:trivial:1+matrix:2)")
        return [check_product_formula(D.factors, cache=cache, seed=cfg.seed)]
    if name == "basechange":
        d = int(args.d) if args.d is not None else 2
        bc = base_change_check(A, D, QuadraticField(d), gc=cache.get(A, D), cap=cfg.cap, force=cfg.force)
        rep = IsoReport(f"base_change:{A.name}:Q(sqrt({d}))", dims={"source": bc.source_dim, "target": bc.target_dim})
        rep.record("dimension", bc.source_dim == bc.target_dim)
        rep.record("ideal_span", bc.ideal_equal)
        return [rep]
    raise UsageError(f"check {name} does not take an algebra")


def _cmd_check(args, cfg: RunConfig) -> int:
    cache = ClosureCache(cap=cfg.cap, force=cfg.force, threads=cfg.threads)
    name = args.name
    inputs: dict[str, Any] = {}
    if name == "endv" and args.n is not None:
        inputs["n"] = args.n
        reports = [check_endv(args.n, seed=cfg.seed, cache=cache)]
    elif name == "groupring" and args.dims:
        dims = [int(x) for x in args.dims.split(",")]
        inputs["dims"] = dims
        reports = [check_group_ring(dims, cache=cache)]
    elif args.preset or args.spec:
        spec = _spec_from_args(args)
        inputs["algebra"] = normalize_spec(spec)
        reports = _targeted_check(name, spec, cfg, cache, args)
    else:
        inputs["suite"] = "default"
        reports = _default_check_suite(name, cfg, cache)
    ok = all(r.passed for r in reports)
    report = {"check": name, "input": inputs, "seed": cfg.seed, "passed": ok, "reports": [r.to_json() for r in reports]}
    _emit(report, cfg.output)
    return 0 if ok else 2


def _cmd_catalog(args, cfg: RunConfig) -> int:
    overrides = {}
    for item in args.expect:
        row, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"--expect takes ROW=DIM, got {item!r}")
        try:
            overrides[row.strip()] = int(val)
        except ValueError:
            raise UsageError(f"--expect {item!r}: dimension must be an integer") from None
    cache = ClosureCache(cap=cfg.cap, force=cfg.force or cfg.tier == "stretch", threads=cfg.threads) if args.reuse else None
    try:
        report = vinberg_catalog(cfg.tier, cache=cache, expected_override=overrides, cap=cfg.cap, force=cfg.force, threads=cfg.threads)
    except ValueError as exc:
        if isinstance(exc, GCloseError):
            raise
        raise UsageError(str(exc)) from None
    report["expected_override"] = overrides
    _emit(report, cfg.output)
    return 0 if report["passed"] else 2


def _cmd_presets(args) -> int:
    for name in PRESETS:
        print(PRESETS[name])
    return 0


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    logging.basicConfig(level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING, format="%(message)s")
    if args.command == "presets":
        return _cmd_presets(args)
    try:
        cfg = _config(args)
        handler = {"closure": _cmd_closure, "hermitian": _cmd_hermitian, "check": _cmd_check, "catalog": _cmd_catalog}
        return handler[args.command](args, cfg)
    except IdealNotStable as exc:
        print(f"gclose: verification failure: {exc}", file=sys.stderr)
        return 2
    except GCloseError as exc:
        print(f"gclose: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"gclose: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
