"""Command-line entry point.

Exit codes: 0 when every requested check passes, 1 on a check failure,
2 on malformed input, 3 when a resource bound is hit.  JSON goes to stdout,
a one-line human summary to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import checks, dihedral, kernel, symmetric, tables
from .families import FAMILIES, MorphismSpec, SpecError, build_images, check_coxeter_relations

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _emit(obj, summary: str) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    sys.stderr.write(summary + "\n")


def parse_spec(text: str) -> MorphismSpec:
    raw = text
    if not text.lstrip().startswith("{"):
        path = Path(text)
        if not path.exists():
            raise InputError(f"--spec is neither JSON nor an existing file: {text!r}")
        raw = path.read_text()
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON spec: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError("spec must be a JSON object")
    try:
        return MorphismSpec.from_json(obj)
    except (SpecError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def parse_params(text: str) -> tuple[int, ...] | None:
    if text.strip().lower() == "symbolic":
        return None
    try:
        vals = json.loads(text) if text.strip().startswith("[") else [int(x) for x in text.split(",") if x.strip()]
        return tuple(int(v) for v in vals)
    except (ValueError, TypeError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot parse params {text!r}") from exc


# --- subcommands ------------------------------------------------------------------


def cmd_verify(args) -> int:
    spec = parse_spec(args.spec)
    rep = check_coxeter_relations(build_images(spec))
    violations = [{"i": i, "j": j, "m": m, "lhs": a.to_json(), "rhs": b.to_json()} for i, j, m, a, b in rep.failures]
    _emit({"spec": spec.to_json(), "violations": violations}, f"{spec.family} n={spec.n}: {len(violations)} relation violations")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_is_epi(args) -> int:
    spec = parse_spec(args.spec)
    verdict = kernel.is_epimorphism(spec, args.set)
    out = verdict.to_json()
    out["spec"] = spec.to_json()
    try:
        out["predicted"] = kernel.predicted_is_epi(spec)
    except ValueError:
        out["predicted"] = None
    _emit(out, f"{spec.family} n={spec.n} params={list(spec.params)}: {'epimorphism' if verdict.is_epi else 'not an epimorphism'}")
    return EXIT_OK if verdict.is_epi else EXIT_FAIL


def cmd_kernel(args) -> int:
    spec = parse_spec(args.spec)
    m = kernel.kernel_matrix(spec, args.set)
    full, inv = kernel.lattice_is_full(m)
    out = {"spec": spec.to_json(), "generator_set": args.set.upper(), **m.to_json(), "invariant_factors": inv, "lattice_full": full}
    _emit(out, f"{len(m.rows)} kernel rows, invariant factors {inv}")
    return EXIT_OK


def cmd_classify_sn(args) -> int:
    if args.n < 3:
        raise InputError("classify-sn needs n >= 3")
    res = symmetric.enumerate_surjective_homs(args.n, budget=args.budget, nondegenerate=not args.allow_degenerate)
    out = {"n": args.n, "classes": [c.to_json() for c in res.classes], "nodes": res.nodes, "complete": res.complete}
    _emit(out, f"n={args.n}: {len(res.classes)} classes ({'complete' if res.complete else 'budget exhausted'})")
    return EXIT_OK if res.complete else EXIT_BOUND


def cmd_tables(args) -> int:
    family = args.family.upper()
    if family not in tables.FAMILY_TABLES:
        raise InputError(f"no automorphism tables for family {family}; expected one of {tables.FAMILY_TABLES}")
    params = parse_params(args.params)
    if params is None:
        fixture = tables.load_table(family, None)
        report = tables.compare_table(fixture)
        out = {"family": family, "params": "symbolic", "comparison": report.to_json()}
        _emit(out, f"{family} symbolic table: {len(report.mismatches)} mismatching cells of {report.cells}")
        return EXIT_OK if report.ok else EXIT_FAIL
    try:
        spec = MorphismSpec(family, 4, params)
    except SpecError as exc:
        raise InputError(str(exc)) from exc
    generated = tables.generate_table(family, spec.params)
    out = {
        "family": family,
        "params": list(spec.params),
        "rows": [{"auto": c.auto, "generator": c.generator, "t": [int(t) for t in c.trans], "perm": list(c.perm)} for c in generated.cells],
    }
    path = tables.table_path(family, spec.params)
    ok = True
    if path.exists():
        report = tables.compare_table(tables.read_table(path, family, spec.params))
        out["comparison"] = report.to_json()
        ok = report.ok
        summary = f"{family} {list(spec.params)}: {len(report.mismatches)} mismatching cells against the fixture"
    else:
        summary = f"{family} {list(spec.params)}: generated {len(generated.cells)} cells (no fixture to compare)"
    _emit(out, summary)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_a1(args) -> int:
    if args.action != "classify":
        raise InputError(f"unknown a1 action {args.action!r}")
    res = dihedral.classify_bounded(args.max_len, args.conj_bound)
    _emit(res.to_json(), f"{res.epis} surjective pairs in {len(res.classes)} classes; {len(res.extras)} outside the known families")
    return EXIT_OK if not res.extras and not res.missing else EXIT_FAIL


def cmd_check(args) -> int:
    try:
        report = checks.run_suite(args.suite, jobs=args.jobs)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from exc
    _emit(report.to_json(timings=args.timings), " ".join(f"{k}={v}" for k, v in report.counts().items()))
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="artin-epi", description="Morphisms from affine braid groups onto affine Coxeter groups.")
    sub = p.add_subparsers(dest="command", required=True)

    spec_help = f'JSON object like {{"family":"YP","n":5,"params":[2,3]}} or a path to one; families: {", ".join(FAMILIES)}'
    s = sub.add_parser("verify", help="check the braid and commutation relations")
    s.add_argument("--spec", required=True, help=spec_help)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("is-epi", help="decide surjectivity")
    s.add_argument("--spec", required=True, help=spec_help)
    s.add_argument("--set", default="ALL", choices=kernel.GENERATOR_SETS)
    s.set_defaults(func=cmd_is_epi)

    s = sub.add_parser("kernel", help="kernel-generator translation images")
    s.add_argument("--spec", required=True, help=spec_help)
    s.add_argument("--set", default="ALL", choices=kernel.GENERATOR_SETS)
    s.set_defaults(func=cmd_kernel)

    s = sub.add_parser("classify-sn", help="surjections onto S_n up to conjugacy")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--budget", type=int, default=10**7, help="search node budget")
    s.add_argument("--allow-degenerate", action="store_true", help="keep tuples where adjacent generators share an image")
    s.set_defaults(func=cmd_classify_sn)

    s = sub.add_parser("tables", help="automorphism table of a rank-four morphism")
    s.add_argument("--family", required=True)
    s.add_argument("--params", required=True, help="comma list, JSON list, or 'symbolic' for the L5 fixture")
    s.set_defaults(func=cmd_tables)

    s = sub.add_parser("a1", help="rank-two case")
    s.add_argument("action", choices=["classify"])
    s.add_argument("--max-len", type=int, default=7)
    s.add_argument("--conj-bound", type=int, default=6)
    s.add_argument("--format", choices=["json"], default="json")
    s.set_defaults(func=cmd_a1)

    s = sub.add_parser("check-paper", help="run the registered verification checks")
    s.add_argument("--suite", default="ALL", help="suite name or check id (default ALL)")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--timings", action="store_true", help="include per-check seconds (output is then not byte-stable)")
    s.set_defaults(func=cmd_check)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, SpecError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except tables.FixtureError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (dihedral.BoundExceeded, symmetric.BudgetExhausted) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BOUND


if __name__ == "__main__":
    raise SystemExit(main())
