"""Command-line verifier and table emitter.

Commands: verify (run the whole pipeline and check every identity), report
(one classification row), table (the full classification), roots (root-system
facts). Output is deterministic for a fixed configuration; timings are only
included when explicitly requested. Exit codes: 0 pass, 1 verification
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .chevalley import build_chevalley, compact_real_form
from .datum import build_complex_datum, g2_short_root_probe, verify_module_iso
from .dynkin import (classification_table, isotropy_report, render_csv,
                     render_json, render_markdown, report_for_type)
from .errors import InvalidLieTypeError, VerificationError
from .roots import LieType, build_root_system, highest_root
from .tensors import (build_model, compact_split, curvature_checks, nomizu,
                      verify_sasaki_identities)

FULL_MODE_DIM_LIMIT = 78          # largest dim g that is still contracted in full
ALL_CHECKS = ("datum", "identities", "nomizu", "curvature")


@dataclass
class RunConfig:
    command: str
    type_name: str = ""
    fmt: str = "md"
    checks: tuple = ALL_CHECKS
    mode: str = "auto"
    seed: int = 0
    max_rank: int = 8
    timing: bool = False


def _resolve_mode(mode: str, dim_g: int) -> str:
    if mode == "auto":
        return "full" if dim_g <= FULL_MODE_DIM_LIMIT else "sampled"
    return mode


def verify_type(type_name: str, checks=ALL_CHECKS, mode: str = "auto",
                seed: int = 0, timing: bool = False) -> dict:
    """Run the pipeline root system -> Chevalley -> datum -> tensors ->
    curvature for one type and record each check."""
    t = LieType.parse(type_name)
    results = []
    started = time.perf_counter()

    def record(name, **extra):
        entry = {"name": name, "status": "pass"}
        entry.update(extra)
        results.append(entry)

    rs = build_root_system(t)
    mode = _resolve_mode(mode, rs.dim_algebra)
    cb = build_chevalley(rs)  # Jacobi verified at construction
    record("chevalley-structure", dim=cb.dim)
    d = build_complex_datum(cb, highest_root(rs))
    if "datum" in checks:
        record("grading-and-datum", n=d.n, dim_M=d.dim_m)
        iso = verify_module_iso(d)
        record("module-isomorphism", dim_W=iso.dim_w,
               equivariance_checks=iso.equivariance_checks)
        if str(t) == "G2":
            probe = g2_short_root_probe(cb)
            record("g2-short-root-probe", maximal_long_roots=probe.maximal_long)
    cf = compact_real_form(cb)
    record("compact-form-killing", dim=cf.dim)
    split = compact_split(d, cf)
    record("reductive-splitting", dim_m=split.dim_m)
    model = build_model(split)
    if "identities" in checks:
        idrep = verify_sasaki_identities(model)
        record("sasaki-identities", families=len(idrep.checks))
    if "nomizu" in checks or "curvature" in checks:
        nt = nomizu(model)
        if "nomizu" in checks:
            record("nomizu-operator", checks=list(nt.checks))
        if "curvature" in checks:
            crep = curvature_checks(model, nt, mode=mode, seed=seed)
            record("curvature", mode=crep.mode, seed=crep.seed,
                   tuples=crep.tuples_checked,
                   einstein_constant=crep.einstein_constant)
    out = {
        "type": str(t),
        "dim_g": rs.dim_algebra,
        "dim_h": d.dim_v,
        "n": d.n,
        "dim_M": d.dim_m,
        "einstein_constant": 2 * (2 * d.n + 1),
        "mode": mode,
        "seed": seed if mode == "sampled" else None,
        "status": "pass",
        "checks": results,
    }
    if timing:
        out["elapsed_seconds"] = round(time.perf_counter() - started, 3)
    return out


def _all_types_up_to(max_rank: int):
    names = [f"A{r}" for r in range(1, max_rank + 1)]
    names += [f"B{r}" for r in range(2, max_rank + 1)]
    names += [f"C{r}" for r in range(2, max_rank + 1)]
    names += [f"D{r}" for r in range(4, max_rank + 1)]
    names += [f"E{r}" for r in (6, 7, 8) if r <= max_rank]
    if max_rank >= 4:
        names.append("F4")
    if max_rank >= 2:
        names.append("G2")
    return names


def _emit_verify(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    lines = [f"verify {report['type']}: {report['status']}"]
    lines.append(f"  dim g = {report['dim_g']}, dim h = {report['dim_h']}, "
                 f"n = {report['n']}, dim M = {report['dim_M']}, "
                 f"Ric = {report['einstein_constant']} g  [mode: {report['mode']}]")
    for c in report["checks"]:
        extra = {k: v for k, v in c.items() if k not in ("name", "status")}
        suffix = f"  {extra}" if extra else ""
        lines.append(f"  [{c['status']}] {c['name']}{suffix}")
    if "elapsed_seconds" in report:
        lines.append(f"  elapsed: {report['elapsed_seconds']}s")
    return "\n".join(lines) + "\n"


def _emit_report(type_name: str, fmt: str) -> str:
    rep = report_for_type(type_name)
    if fmt == "json":
        return json.dumps(rep.to_dict(), indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return render_csv([rep])
    return render_markdown([rep])


def _emit_roots(type_name: str, fmt: str) -> str:
    rs = build_root_system(type_name)
    doc = {
        "type": str(rs.type),
        "rank": rs.rank,
        "num_roots": rs.num_roots,
        "dim_g": rs.dim_algebra,
        "highest_root": list(highest_root(rs)),
        "cartan_matrix": rs.cartan,
    }
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    lines = [f"root system {doc['type']}: rank {doc['rank']}, "
             f"{doc['num_roots']} roots, dim g = {doc['dim_g']}",
             f"highest root: {tuple(doc['highest_root'])}",
             "cartan matrix:"]
    for row in rs.cartan:
        lines.append("  " + " ".join(f"{x:3d}" for x in row))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sasakian",
                                 description="Exact verifier for homogeneous "
                                             "3-Sasakian structure tensors")
    sub = ap.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run the full identity suite for one type or all")
    pv.add_argument("type", help="Lie type, e.g. G2 or E8, or 'all'")
    pv.add_argument("--checks", default="all",
                    help="comma list from {datum,identities,nomizu,curvature,all}")
    pv.add_argument("--mode", choices=("full", "sampled", "auto"), default="auto")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--max-rank", type=int, default=8, dest="max_rank")
    pv.add_argument("--format", choices=("md", "json"), default="md", dest="fmt")
    pv.add_argument("--timing", action="store_true")

    pr = sub.add_parser("report", help="classification row for one type")
    pr.add_argument("type")
    pr.add_argument("--format", choices=("md", "json", "csv"), default="md", dest="fmt")

    pt = sub.add_parser("table", help="emit the classification table")
    pt.add_argument("--max-rank", type=int, default=8, dest="max_rank")
    pt.add_argument("--format", choices=("md", "json", "csv"), default="md", dest="fmt")

    ps = sub.add_parser("roots", help="root-system facts for one type")
    ps.add_argument("type")
    ps.add_argument("--format", choices=("md", "json"), default="md", dest="fmt")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code else 0
    try:
        if ns.command == "verify":
            checks = ALL_CHECKS if ns.checks == "all" else tuple(
                c.strip() for c in ns.checks.split(","))
            bad = [c for c in checks if c not in ALL_CHECKS]
            if bad:
                print(f"unknown checks: {', '.join(bad)}", file=sys.stderr)
                return 2
            names = (_all_types_up_to(ns.max_rank) if ns.type.lower() == "all"
                     else [ns.type])
            for name in names:
                rep = verify_type(name, checks=checks, mode=ns.mode,
                                  seed=ns.seed, timing=ns.timing)
                sys.stdout.write(_emit_verify(rep, ns.fmt))
            return 0
        if ns.command == "report":
            sys.stdout.write(_emit_report(ns.type, ns.fmt))
            return 0
        if ns.command == "table":
            reports = classification_table(ns.max_rank)
            render = {"md": render_markdown, "json": render_json,
                      "csv": render_csv}[ns.fmt]
            sys.stdout.write(render(reports))
            return 0
        if ns.command == "roots":
            sys.stdout.write(_emit_roots(ns.type, ns.fmt))
            return 0
        return 2
    except InvalidLieTypeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except VerificationError as e:
        print(f"verification failure in {e.check}: {e.detail}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
