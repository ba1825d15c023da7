"""Command-line entry point: ``coxlab {verify,enumerate,inspect,roots}``.

Exit status is 0 when every check passes, 1 when a mathematical disagreement
is found, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from .enumeration import (
    avoider_polynomial,
    bfs_by_length,
    degenerate_isomorphism_check,
    element_budget,
    spec_json,
    verify_main_theorem,
    verify_recurrence,
)
from .errors import CoxlabError
from .groups import Family, GroupSpec, format_window, from_window, parse_window
from .patterns import contains_global_321
from .roots import (
    VARIANTS,
    check_dis_equals_height,
    check_prop_4_3,
    min_height_cost,
    positive_roots_up_to_height,
    root_system_for,
)
from .statistics import disarray, gap
from .words import (
    condition_B,
    condition_Bprime,
    coxeter_length,
    format_word,
    is_fully_commutative,
    parse_word,
    reduced_words,
    right_descents,
    word_to_element,
)

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    family: str
    n: int
    max_length: Optional[int] = None
    max_height: Optional[int] = None
    format: str = "text"
    budget: Optional[int] = None
    variant: str = "default"
    out: Optional[str] = None

    def __post_init__(self):
        if self.family not in {f.value for f in Family}:
            raise UsageError(f"unknown family {self.family!r}")
        for name in ("max_length", "max_height", "budget"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")
        if self.format not in ("json", "csv", "text"):
            raise UsageError(f"unknown format {self.format!r}")

    @property
    def spec(self) -> GroupSpec:
        try:
            return GroupSpec(Family(self.family), self.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc


def dumps(report: dict) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _emit(cfg: RunConfig, report: dict, csv_rows: list[dict], text_lines: list[str]) -> None:
    if cfg.format == "json":
        payload = dumps(report)
    elif cfg.format == "csv":
        payload = _csv(csv_rows)
    else:
        payload = "\n".join(text_lines) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _affine_needs_length(cfg: RunConfig) -> None:
    if cfg.spec.is_affine and cfg.max_length is None:
        raise UsageError(f"{cfg.spec} is infinite; pass --max-length")


def cmd_verify(cfg: RunConfig) -> int:
    _affine_needs_length(cfg)
    spec = cfg.spec
    theorem = verify_main_theorem(spec, cfg.max_length, budget=element_budget(cfg.budget))
    report = theorem.to_json()
    report["config"] = asdict(cfg)
    passed = theorem.passed
    text = [
        f"{spec}: {sum(r['count'] for r in theorem.layers)} elements, lengths 0..{len(theorem.layers) - 1}",
        f"disagreements: {len(theorem.disagreements)}",
    ]
    if spec.is_degenerate:
        iso = degenerate_isomorphism_check(len(theorem.layers) - 1, element_budget(cfg.budget))
        report["isomorphism"] = iso
        passed = passed and iso["passed"]
        text.append(f"affc1 -> affa2 conjugation preserves length, disarray, 321: {iso['passed']}")
    if "note" in report:
        text.append(report["note"])
    for d in theorem.disagreements[:20]:
        text.append(f"  disagreement at {d['window']}: {d}")
    text.append("PASS" if passed else "FAIL")
    rows = [dict(row) for row in theorem.layers]
    _emit(cfg, report, rows, text)
    return EXIT_OK if passed else EXIT_DISAGREE


def cmd_enumerate(cfg: RunConfig) -> int:
    _affine_needs_length(cfg)
    spec = cfg.spec
    census = bfs_by_length(spec, cfg.max_length, element_budget(cfg.budget))
    poly, truncated = avoider_polynomial(spec, census=census)
    avoiding = [0] * len(census.layers)
    for length, w in census.with_lengths():
        if contains_global_321(w) is None:
            avoiding[length] += 1
    rows = [
        {"length": length, "count": len(layer), "avoiding": avoiding[length]}
        for length, layer in enumerate(census.layers)
    ]
    report = {
        "config": asdict(cfg),
        "spec": spec_json(spec),
        "L": cfg.max_length,
        "layers": rows,
        "total": len(census),
        "avoider_polynomial": list(poly.coeffs),
        "avoiders_at_q1": poly(1),
        "truncated": truncated,
    }
    passed = True
    if spec.is_finite and not truncated:
        rec = verify_recurrence(spec, census)
        report["recurrence"] = rec
        passed = rec["passed"]
    text = [
        f"{spec}: layer sizes {census.sizes}" + (" (truncated)" if truncated else ""),
        f"avoider polynomial: {poly}" + (f"  [truncated at length {len(census.layers) - 1}]" if truncated else ""),
        f"avoiders at q=1: {poly(1)}",
    ]
    if "recurrence" in report:
        text.append(f"recurrence matches enumeration: {report['recurrence']['passed']}")
    _emit(cfg, report, rows, text)
    return EXIT_OK if passed else EXIT_DISAGREE


def cmd_inspect(cfg: RunConfig, window: Optional[str], word: Optional[list[str]], cap: int) -> int:
    spec = cfg.spec
    if (window is None) == (word is None):
        raise UsageError("give exactly one of --window or --word")
    if window is not None:
        w = from_window(spec, parse_window(window))
    else:
        w = word_to_element(spec, parse_word(spec, word))
    length = coxeter_length(w)
    dis = disarray(w)
    witness = contains_global_321(w)
    words = reduced_words(w, cap=cap)
    report = {
        "config": asdict(cfg),
        "spec": spec_json(spec),
        "window": format_window(w.window),
        "length": length,
        "disarray": dis,
        "half_disarray": dis // 2,
        "gap": gap(w),
        "tight": length == dis // 2,
        "descents": sorted(right_descents(w)),
        "condition_b": condition_B(w),
        "condition_bprime": None if spec.is_degenerate else condition_Bprime(w),
        "fully_commutative": is_fully_commutative(w),
        "witness_321": None if witness is None else witness.to_json(),
        "reduced_word_count": len(words),
        "reduced_words_truncated": words.truncated,
        "sample_reduced_word": format_word(min(words)) if words else "",
    }
    text = [f"{k}: {report[k]}" for k in sorted(report) if k != "config"]
    rows = [{k: report[k] for k in ("window", "length", "disarray", "gap", "tight")}]
    _emit(cfg, report, rows, text)
    return EXIT_OK


def cmd_roots(
    cfg: RunConfig,
    check_dis: bool,
    cost_tight: bool,
    cost_of: Optional[str],
    cost_of_word: Optional[list[str]] = None,
) -> int:
    spec = cfg.spec
    H = cfg.max_height or 8
    try:
        rs = root_system_for(spec, cfg.variant)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report: dict = {"config": asdict(cfg), "spec": spec_json(spec), "variant": cfg.variant, "H": H}
    passed = True
    text = [f"{spec} ({cfg.variant}): d-matrix {[list(r) for r in rs.d]}"]
    if check_dis:
        dis_report = check_dis_equals_height(spec, H, cfg.variant)
        rows = dis_report["roots"]
        report["roots"] = rows
        report["mismatches"] = dis_report["mismatches"]
        passed = dis_report["passed"]
        text.append(f"{len(rows)} positive roots of height <= {H}; dis/2 = height mismatches: {len(dis_report['mismatches'])}")
    else:
        rows = [r.to_json() for r in positive_roots_up_to_height(rs, H)]
        report["roots"] = rows
        text.append(f"{len(rows)} positive roots of height <= {H}")
    if cost_tight:
        _affine_needs_length(cfg)
        p = check_prop_4_3(spec, cfg.max_length, cfg.variant)
        report["cost_tight"] = p
        passed = passed and p["passed"]
        text.append(
            f"cost-tight elements: {p['cost_tight']}, failures: {len(p['failures'])}, "
            f"fully commutative but cheaper: {len(p['converse_candidates'])}"
        )
    if cost_of is not None or cost_of_word is not None:
        if cost_of is not None:
            w = from_window(spec, parse_window(cost_of))
        else:
            w = word_to_element(spec, parse_word(spec, cost_of_word))
        report["min_height_cost"] = {"window": format_window(w.window), "cost": min_height_cost(w, rs)}
        text.append(f"min height-cost of {format_window(w.window)}: {report['min_height_cost']['cost']}")
    for r in rows[:50]:
        text.append(f"  {r['coeffs']} h={r['height']} t={r['reflection_window']} word={r['witness_word']}")
    text.append("PASS" if passed else "FAIL")
    csv_rows = [
        {k: (" ".join(map(str, v)) if isinstance(v, list) else v) for k, v in r.items()} for r in rows
    ]
    _emit(cfg, report, csv_rows, text)
    return EXIT_OK if passed else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", required=True, choices=[f.value for f in Family])
    common.add_argument("--n", type=int, required=True)
    common.add_argument("--max-length", type=int)
    common.add_argument("--format", choices=["json", "csv", "text"], default="text")
    common.add_argument("--out")
    common.add_argument("--budget", type=int, help="element budget (default $COXLAB_BUDGET or 10^6)")

    sub.add_parser("verify", parents=[common], help="check the equivalent conditions on every element")
    sub.add_parser("enumerate", parents=[common], help="layer counts and 321-avoider polynomial")

    p = sub.add_parser("inspect", parents=[common], help="everything about one element")
    p.add_argument("--window")
    p.add_argument("--word", nargs="+")
    p.add_argument("--cap", type=int, default=10000, help="reduced-word count cap")

    p = sub.add_parser("roots", parents=[common], help="positive roots and height checks")
    p.add_argument("--max-height", type=int)
    p.add_argument("--variant", choices=VARIANTS, default="default")
    p.add_argument("--check-dis", action="store_true")
    p.add_argument(
        "--cost-tight",
        action="store_true",
        help="check factor condition and full commutativity on elements whose height-cost equals their length",
    )
    cost = p.add_mutually_exclusive_group()
    cost.add_argument("--cost-of", metavar="WINDOW", help="min height-cost of one element")
    cost.add_argument("--cost-of-word", nargs="+", metavar="LETTER", help="same, element given as a word")
    return parser


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    # "--window -1,-2" would otherwise be read as an unknown option
    out = list(argv)
    for idx, tok in enumerate(out[:-1]):
        if tok in ("--window", "--cost-of") and out[idx + 1].startswith("-"):
            out[idx : idx + 2] = [f"{tok}={out[idx + 1]}", ""]
    return [t for t in out if t != ""]


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = _glue_negative_values(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(
            command=args.command,
            family=args.family,
            n=args.n,
            max_length=args.max_length,
            max_height=getattr(args, "max_height", None),
            format=args.format,
            budget=args.budget,
            variant=getattr(args, "variant", "default"),
            out=args.out,
        )
        cfg.spec  # validates the rank
        if args.command == "verify":
            return cmd_verify(cfg)
        if args.command == "enumerate":
            return cmd_enumerate(cfg)
        if args.command == "inspect":
            return cmd_inspect(cfg, args.window, args.word, args.cap)
        return cmd_roots(cfg, args.check_dis, args.cost_tight, args.cost_of, args.cost_of_word)
    except (UsageError, ValueError, CoxlabError) as exc:
        print(f"coxlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
