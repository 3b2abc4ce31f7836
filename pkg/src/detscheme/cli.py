"""Command-line front end.

Subcommands::

    dim     closed-form dimension report for one degree datum
    ft      table of twisted section counts f(t) over a window
    verify  finite-field oracle verification of one instance
    corpus  batch runner emitting JSON-lines records
    export  ideal presentation for cross-checking in other systems

Exit codes: 0 success, 1 assertion failure in a batch, 2 structural or
configuration errors, 3 failed expected-codimension condition, 4 section
table requested for codimension 1, 5 resampling exhausted, 6 stabilization
or window verification failure.

Per-instance seeds in a corpus are master_seed + 1000003 * index, so any
line can be rerun alone with ``verify --seed``.  The DETSCHEME_THREADS
environment variable caps the corpus worker pool.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import corpus as corpus_mod
from .degrees import ConditionError, DegreeData, DegreeDataError, parse_degree_data, validate_main, validate_standard
from .dimension import family_dimension
from .oracle import ResampleError, StabilizationError, WindowError, verify_instance
from .polyff import PrimeField, maximal_minors, random_matrix
from .sections import identity_line, section_table

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_STRUCTURAL = 2
EXIT_CONDITION = 3
EXIT_HYPERSURFACE = 4
EXIT_RESAMPLE = 5
EXIT_STABILIZATION = 6


@dataclass(frozen=True)
class RunConfig:
    """Validated knobs shared by the oracle-facing commands."""

    prime: int = 32003
    seed: int = 0
    syzygy_bound: int | None = None
    hf_window: int | None = None
    out: str | None = None
    fmt: str = "text"
    suite_size: int = 200
    max_n: int = 8
    max_a: int = 7
    max_spread: int = 4

    def __post_init__(self):
        PrimeField(self.prime)  # rejects tiny or composite primes
        for name in ("suite_size", "max_n", "max_a", "max_spread"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        for name in ("syzygy_bound", "hf_window"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} override must be positive")


def _config_from_args(args) -> RunConfig:
    return RunConfig(
        prime=args.prime,
        seed=args.seed,
        syzygy_bound=getattr(args, "bound", None),
        hf_window=getattr(args, "window", None),
        out=getattr(args, "out", None),
        fmt=getattr(args, "format", "text"),
        suite_size=getattr(args, "suite_size", 200),
        max_n=getattr(args, "max_n", 8),
        max_a=getattr(args, "max_a", 7),
        max_spread=getattr(args, "max_spread", 4),
    )


def _standard_failure_clause(d: DegreeData) -> str:
    pairs = list(zip(d.alphas[: d.b], d.betas))
    if not all(x >= y for x, y in pairs):
        return "alpha_i >= beta_i for all i = 1..b"
    return "alpha_i > beta_i for some i"


def cmd_dim(args) -> int:
    d = parse_degree_data(args.data)
    standard = validate_standard(d)
    main_cond = validate_main(d)
    lines = [
        f"instance: {d.compact()}",
        f"condition standard (alpha_i >= beta_i for all i, strict for some i): "
        f"{'satisfied' if standard else 'FAILED'}",
        f"condition interlacing (alpha_i >= beta_(i+1) for i < b, strict for some i): "
        f"{'satisfied' if main_cond else 'FAILED'}",
        f"c: {d.codim}  dim_x: {d.dim_x}  ell: {d.ell}",
    ]
    if not standard:
        lines.append(f"failed clause: {_standard_failure_clause(d)}")
        print("\n".join(lines))
        return EXIT_CONDITION
    report = family_dimension(d)
    if args.format == "json":
        print(report.to_json())
    else:
        lines += [
            f"lambda_c: {report.lambda_c}",
            f"k_terms: {list(report.k_terms)}",
            f"dim_y: {report.dim_y}",
        ]
        if report.corollary_value is not None:
            lines.append(f"corollary_value: {report.corollary_value}")
        lines.append(
            f"canonical class: {report.canonical_h} H + {report.canonical_p} P"
        )
        if d.codim == 1:
            lines.append(
                "note: codimension 1 (hypersurface); the smoothness and "
                "birationality conclusions need c >= 2"
            )
        print("\n".join(lines))
    return EXIT_OK


def cmd_ft(args) -> int:
    d = parse_degree_data(args.data)
    if not validate_standard(d):
        print(f"error: {_standard_failure_clause(d)} fails", file=sys.stderr)
        return EXIT_CONDITION
    if d.codim < 2:
        print(
            "error: codimension 1 has no resolution tail; "
            "the section-count expression needs c >= 2",
            file=sys.stderr,
        )
        return EXIT_HYPERSURFACE
    rows = section_table(d, args.t_min, args.t_max)
    for t, value in rows:
        print(f"{t}\t{value}")
    if d.dim_x >= 2:
        print(identity_line(d))
    return EXIT_OK


def _verify_text(record) -> str:
    lines = [
        f"instance: {record.data.compact()}",
        f"prime: {record.prime}  seed: {record.seed}  resamples: {record.resamples}",
        f"hf_window: {record.hf_window}  syzygy_bound: {record.syzygy_bound} "
        f"(stability re-checked at {record.syzygy_bound + 1})",
        "hf_table: " + "  ".join(f"HF({t})={v}" for t, v in record.hf_table),
        f"fitted_dim: {record.fitted_dim} (expected {record.data.dim_x})  "
        f"fitted_degree: {record.fitted_degree}",
        f"formula dim_y: {record.formula_dim}",
        f"tangent_dim: {record.tangent_dim}",
        f"orbit_space_dim: {record.orbit_space_dim}  (stabilizer {record.stab_dim})",
    ]
    for name, value in record.matches.items():
        status = "recorded only" if value is None else ("OK" if value else "MISMATCH")
        lines.append(f"check {name}: {status}")
    lines.append(f"RESULT: {'PASS' if record.all_pass else 'FAIL'}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    d = parse_degree_data(args.data)
    config = _config_from_args(args)
    if not validate_standard(d):
        print(f"error: {_standard_failure_clause(d)} fails", file=sys.stderr)
        return EXIT_CONDITION
    record = verify_instance(
        d,
        prime=config.prime,
        seed=config.seed,
        syzygy_bound=config.syzygy_bound,
        hf_window=config.hf_window,
    )
    if config.fmt == "json":
        print(record.to_json())
    else:
        print(_verify_text(record))
    if config.out:
        with open(config.out, "w", encoding="utf-8") as handle:
            handle.write(record.to_json() + "\n")
    return EXIT_OK if record.all_pass else EXIT_ASSERTION


def cmd_corpus(args) -> int:
    config = _config_from_args(args)
    lines: list[str] = []
    failures = 0
    summary: list[str] = []
    if args.kind == "formulas":
        instances = corpus_mod.random_standard_instances(
            config.suite_size,
            seed=config.seed,
            max_n=config.max_n,
            max_a=config.max_a,
            max_spread=config.max_spread,
        )
        for index, d in enumerate(instances):
            record = corpus_mod.formula_identity_record(index, d)
            lines.append(json.dumps(record))
            failures += 0 if record["identity"] else 1
        summary.append(
            f"{len(instances) - failures}/{len(instances)} identity passes"
        )
    else:
        if args.instance:
            chosen = [(parse_degree_data(text), config.hf_window, config.syzygy_bound)
                      for text in args.instance]
        elif config.suite_size == 0:
            chosen = []
        else:
            chosen = list(corpus_mod.ORACLE_FIXTURES)
        tasks = [
            corpus_mod.OracleTask(
                index=index,
                data=d,
                prime=config.prime,
                seed=corpus_mod.instance_seed(config.seed, index),
                syzygy_bound=bound,
                hf_window=window,
            )
            for index, (d, window, bound) in enumerate(chosen)
        ]
        records = corpus_mod.run_oracle_tasks(tasks)
        summary.append("instance\tformula\ttangent\torbit\tmatch")
        for record in records:
            lines.append(record.to_json())
            failures += 0 if record.all_pass else 1
            summary.append(
                f"{record.data.compact()}\t{record.formula_dim}\t{record.tangent_dim}"
                f"\t{record.orbit_space_dim}\t{'pass' if record.all_pass else 'FAIL'}"
            )
        summary.append(f"{len(records) - failures}/{len(records)} oracle passes")
    if config.out:
        with open(config.out, "w", encoding="utf-8") as handle:
            for line in lines:
                handle.write(line + "\n")
    else:
        for line in lines:
            print(line)
    for line in summary:
        print(line)
    return EXIT_OK if failures == 0 else EXIT_ASSERTION


def cmd_export(args) -> int:
    d = parse_degree_data(args.data)
    config = _config_from_args(args)
    if not validate_standard(d):
        print(f"error: {_standard_failure_clause(d)} fails", file=sys.stderr)
        return EXIT_CONDITION
    fieldp = PrimeField(config.prime)
    matrix = random_matrix(d, fieldp, config.seed)
    ideal = maximal_minors(matrix)
    text = ideal.to_text()
    sidecar = {
        "degree_data": {"n": d.n, "alphas": list(d.alphas), "betas": list(d.betas)},
        "p": fieldp.p,
        "seed": config.seed,
        "minor_degrees": list(ideal.degrees),
        "expected_dim_y": family_dimension(d).dim_y,
    }
    sidecar_text = json.dumps(sidecar, sort_keys=True, indent=2) + "\n"
    if config.out:
        with open(config.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        with open(config.out + ".json", "w", encoding="utf-8") as handle:
            handle.write(sidecar_text)
    else:
        sys.stdout.write(text)
        sys.stdout.write(sidecar_text)
    return EXIT_OK


def _add_common(parser, *, window_flags: bool = True):
    parser.add_argument("--prime", type=int, default=32003, help="odd prime modulus (> 1000)")
    parser.add_argument("--seed", type=int, default=0, help="RNG seed / corpus master seed")
    if window_flags:
        parser.add_argument("--bound", type=int, default=None, help="syzygy internal-degree bound override")
        parser.add_argument("--window", type=int, default=None, help="Hilbert-function window start override")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="detscheme",
        description="Exact dimension counts for determinantal families, with finite-field verification.",
        epilog="Corpus seeds: instance i uses master_seed + 1000003*i.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dim = sub.add_parser("dim", help="closed-form dimension report")
    p_dim.add_argument("data", help='degree data, e.g. "n=4 a=1,1,1 b=0,0" or JSON')
    p_dim.add_argument("--format", choices=("text", "json"), default="text")
    p_dim.set_defaults(func=cmd_dim)

    p_ft = sub.add_parser("ft", help="section-count table f(t) as TSV")
    p_ft.add_argument("data")
    p_ft.add_argument("t_min", type=int)
    p_ft.add_argument("t_max", type=int)
    p_ft.set_defaults(func=cmd_ft)

    p_verify = sub.add_parser("verify", help="oracle verification of one instance")
    p_verify.add_argument("data")
    _add_common(p_verify)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--out", default=None, help="also write the JSON record here")
    p_verify.set_defaults(func=cmd_verify)

    p_corpus = sub.add_parser("corpus", help="batch suite, JSON-lines output")
    p_corpus.add_argument("--kind", choices=("formulas", "oracle"), default="formulas")
    _add_common(p_corpus)
    p_corpus.add_argument("--format", choices=("jsonl",), default="jsonl")
    p_corpus.add_argument("--out", default=None)
    p_corpus.add_argument("--suite-size", dest="suite_size", type=int, default=200)
    p_corpus.add_argument("--max-n", dest="max_n", type=int, default=8)
    p_corpus.add_argument("--max-a", dest="max_a", type=int, default=7)
    p_corpus.add_argument("--max-spread", dest="max_spread", type=int, default=4)
    p_corpus.add_argument(
        "--instance",
        action="append",
        default=None,
        help="explicit instance (repeatable); replaces the built-in oracle fixtures",
    )
    p_corpus.set_defaults(func=cmd_corpus)

    p_export = sub.add_parser("export", help="ideal presentation + JSON sidecar")
    p_export.add_argument("data")
    _add_common(p_export, window_flags=False)
    p_export.add_argument("--out", default=None, help="text file path; sidecar gets .json appended")
    p_export.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DegreeDataError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL
    except ConditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONDITION
    except ResampleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESAMPLE
    except (StabilizationError, WindowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STABILIZATION


if __name__ == "__main__":
    sys.exit(main())
