"""Command-line front end: analyze / enumerate / verify / pattern / diagram.

JSON is the output contract; text renderings are conveniences.  Every
failure path exits nonzero and reports a machine-parsable error code.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field as dc_field

from .asm import (
    Asm,
    asm_from_json,
    ascii_diagram,
    check_containment_constraints,
    dominant_part,
    essential_set,
    find_pattern,
    rank_matrix,
    rothe_diagram,
)
from .complexes import km_vertex_decomposable, sr_complex_from_ideal
from .enumeration import (
    ALL_CHECKS,
    CENSUS_COLUMNS,
    STATEMENT_NAMES,
    tabulate,
    verify_statement,
)
from .errors import AsmlabError
from .homology import is_cohen_macaulay
from .ideals import cell_label, init_ideal, perm_set_via_primes


@dataclass
class CliConfig:
    command: str
    input_path: str | None = None
    pattern_path: str | None = None
    target_path: str | None = None
    n: int | None = None
    field: object = "rational"
    backend: str = "reisner"
    checks: tuple = ALL_CHECKS
    filter_spec: str | None = None
    statement: str | None = None
    out_format: str = "text"
    jobs: int = 1
    cache_dir: str | None = None
    out_path: str | None = None
    strict_badblock: bool = False
    seed: int = 0


def _parse_field(text: str):
    if text == "rational":
        return "rational"
    if text.startswith("p="):
        return int(text[2:])
    raise AsmlabError(f"field must be 'rational' or 'p=<prime>', got {text!r}")


def _load_asm(path: str) -> Asm:
    with open(path) as fh:
        return asm_from_json(json.load(fh))


def _emit(config: CliConfig, text: str) -> None:
    if config.out_path:
        with open(config.out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(config: CliConfig) -> int:
    A = _load_asm(config.input_path)
    pa = perm_set_via_primes(A)
    cm = is_cohen_macaulay(A, field=config.field, backend=config.backend, bound=A.n)
    I = init_ideal(A)
    report = {
        "asm": A.to_json_dict(),
        "a11_is_one": A.a11_is_one,
        "rank_matrix": [list(row) for row in rank_matrix(A)],
        "rothe_diagram": sorted(map(list, rothe_diagram(A))),
        "essential_set": sorted(map(list, essential_set(A))),
        "dominant_part": sorted(map(list, dominant_part(A))),
        "init_ideal": I.to_json_list(),
        "perms": [
            {"one_line": list(w.one_line), "word": str(w), "length": w.length}
            for w in sorted(pa.perms, key=lambda w: w.one_line)
        ],
        "codim": pa.codim,
        "perm_count": len(pa.perms),
        "equidimensional": pa.equidimensional,
        "cm": cm,
        "diagram": ascii_diagram(A),
    }
    if I.is_zero:
        report["km_vd"] = True
    else:
        trace = km_vertex_decomposable(sr_complex_from_ideal(I))
        report["km_vd"] = trace.result
        if not trace.result:
            report["km_vd_trace"] = trace.to_json_dict()
            report["km_vd_failure_vertex"] = (
                cell_label(trace.failure_vertex) if trace.failure_vertex else None
            )
    if config.out_format == "text":
        lines = [report["diagram"], ""]
        lines += [
            f"codim {report['codim']}  perms {report['perm_count']}  "
            f"equidimensional {report['equidimensional']}",
            f"cm {report['cm']}  km_vd {report['km_vd']}",
        ]
        _emit(config, "\n".join(lines) + "\n")
    else:
        _emit(config, json.dumps(report, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_enumerate(config: CliConfig) -> int:
    table = tabulate(
        config.n,
        checks=config.checks,
        filter_spec=config.filter_spec,
        jobs=config.jobs,
        cache_dir=config.cache_dir,
        field=config.field,
    )
    if config.out_format == "json":
        _emit(config, json.dumps(table.to_json_dict(), sort_keys=True) + "\n")
    else:
        _emit(config, table.to_csv())
    return 0


def cmd_verify(config: CliConfig) -> int:
    report = verify_statement(config.statement, config.n, seed=config.seed)
    if config.out_format == "json":
        _emit(config, json.dumps(report.to_json_dict(), sort_keys=True) + "\n")
    else:
        status = "PASS" if report.passed else "FAIL"
        good = report.cases - len(report.failures)
        _emit(config, f"{status} {good}/{report.cases}\n")
    return 0 if report.passed else 1


def cmd_pattern(config: CliConfig) -> int:
    target = _load_asm(config.target_path)
    pattern = _load_asm(config.pattern_path)
    witness = find_pattern(target, pattern)
    if witness is None:
        _emit(config, json.dumps({"contains": False}) + "\n")
        return 1
    cr = check_containment_constraints(target, pattern, witness)
    out = {
        "contains": True,
        "kept_rows": list(witness.kept_rows),
        "kept_cols": list(witness.kept_cols),
        "deleted_rows": list(cr.deleted_rows),
        "deleted_cols": list(cr.deleted_cols),
        "entry_sum": cr.entry_sum,
        "constraints_ok": cr.ok,
    }
    _emit(config, json.dumps(out, sort_keys=True) + "\n")
    return 0


def cmd_diagram(config: CliConfig) -> int:
    A = _load_asm(config.input_path)
    _emit(config, ascii_diagram(A) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="asmlab")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", dest="out_path")
        p.add_argument("--format", dest="out_format", choices=["json", "csv", "text"])
        p.add_argument("--field", default="rational")

    p = sub.add_parser("analyze")
    p.add_argument("--input", dest="input_path", required=True)
    p.add_argument("--backend", choices=["reisner", "hochster"], default="reisner")
    common(p)

    p = sub.add_parser("enumerate")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--checks", default=",".join(ALL_CHECKS))
    p.add_argument("--filter", dest="filter_spec")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache", dest="cache_dir")
    common(p)

    p = sub.add_parser("verify")
    p.add_argument("--statement", required=True, choices=STATEMENT_NAMES)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    common(p)

    p = sub.add_parser("pattern")
    p.add_argument("--pattern", dest="pattern_path", required=True)
    p.add_argument("--target", dest="target_path", required=True)
    p.add_argument("--strict-badblock", action="store_true")
    common(p)

    p = sub.add_parser("diagram")
    p.add_argument("--input", dest="input_path", required=True)
    common(p)
    return parser


_DEFAULT_FORMATS = {
    "analyze": "json",
    "enumerate": "csv",
    "verify": "text",
    "pattern": "json",
    "diagram": "text",
}

_COMMANDS = {
    "analyze": cmd_analyze,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "pattern": cmd_pattern,
    "diagram": cmd_diagram,
}


def config_from_args(args) -> CliConfig:
    config = CliConfig(command=args.command)
    for name in vars(config):
        if hasattr(args, name) and getattr(args, name) is not None:
            setattr(config, name, getattr(args, name))
    if getattr(args, "out_format", None) is None:
        config.out_format = _DEFAULT_FORMATS[args.command]
    if hasattr(args, "field"):
        config.field = _parse_field(args.field)
    if getattr(args, "checks", None):
        config.checks = tuple(c for c in args.checks.split(",") if c)
    env_cache = os.environ.get("ASMLAB_CACHE")
    if env_cache:
        config.cache_dir = env_cache
    return config


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
        return _COMMANDS[config.command](config)
    except AsmlabError as exc:
        sys.stderr.write(json.dumps({"error": exc.code, "message": str(exc)}) + "\n")
        return 2
    except FileNotFoundError as exc:
        sys.stderr.write(
            json.dumps({"error": "file-not-found", "message": str(exc)}) + "\n"
        )
        return 2


if __name__ == "__main__":
    sys.exit(main())
