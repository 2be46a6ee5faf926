"""Command-line front end: ``oachar compute|strength|verify|chartable``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass

import numpy as np

from .characters import TOL, CharacterTableError, character_table
from .design import Design, DesignParseError, NotClassFunctionError, is_class_function, load_design
from .groups import GroupError, direct_product, parse_group_spec
from .gwlp import (
    DEFAULT_TOL,
    LEMMA_TOL,
    GwlpReport,
    StrengthResult,
    gwlp,
    strength_oracle,
    verify_projection_lemma_all,
    verify_theorem,
)

log = logging.getLogger("oachar")

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_CLASS_FUNCTION = 3
EXIT_DISAGREE = 4

ENV_PREFIX = "OACHAR_"

EPILOG = """\
exit status:
  0  success
  2  unreadable design file, bad group spec or usage error
  3  nonabelian design whose counting function is not a class function
  4  verify: strengths disagree or a projection residual is too large

environment (flags take precedence):
  OACHAR_TOL                      default for --tol
  OACHAR_SEED                     default for --seed
  OACHAR_JSON=1                   same as --json
  OACHAR_ALLOW_NON_CLASS_FUNCTION=1  same as --allow-non-class-function
  OACHAR_MAX_RANK                 default for --max-rank
"""


@dataclass
class CliConfig:
    command: str
    inputs: list[str]
    tol: float = DEFAULT_TOL
    json: bool = False
    seed: int = 0
    allow_non_class_function: bool = False
    max_rank: int = 3
    characters: bool = False
    verbosity: int = 0

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError(f"tolerance must be positive, got {self.tol}")


def _num(x: float) -> float:
    return round(float(x), 12) + 0.0


def _env_flag(name: str) -> bool:
    return os.environ.get(ENV_PREFIX + name, "").lower() in {"1", "true", "yes", "on"}


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def report_to_dict(report: GwlpReport, oracle: StrengthResult | None, characters: bool = False) -> dict:
    out = {
        "N": report.N,
        "k": report.k,
        "groups": list(report.groups),
        "A": [_num(a) for a in report.A],
        "class_function": report.class_function,
        "strength_gwlp": report.strength,
        "strength_oracle": oracle.t if oracle is not None else None,
        "tol": report.tol,
    }
    if characters:
        out["characters"] = [
            {
                "id": r.index,
                "label": r.label,
                "weight": r.weight,
                "degree": r.degree,
                "jchar_re": _num(r.jchar.real),
                "jchar_im": _num(r.jchar.imag),
            }
            for r in report.records
        ]
    return out


def _fmt_A(A) -> str:
    return "(" + ", ".join(f"{_num(a):.12g}" for a in A) + ")"


def _witness_dict(d: Design, cert: StrengthResult) -> dict | None:
    if cert.witness is None:
        return None
    h = d.group.subgroup(cert.witness)
    return {
        "factors": list(cert.witness.indices),
        "runs": [h.format(y).split() for y in cert.runs],
        "counts": list(cert.counts),
    }


def cmd_compute(path: str, config: CliConfig) -> tuple[int, str]:
    d = load_design(path)
    report = gwlp(
        d, tol=config.tol, allow_non_class_function=config.allow_non_class_function, seed=config.seed
    )
    oracle = strength_oracle(d)
    if config.json:
        return EXIT_OK, _dump(report_to_dict(report, oracle, config.characters))
    lines = [
        f"design: {path}",
        f"groups: {' x '.join(report.groups)}  (|G| = {report.group_order})",
        f"N = {report.N}, k = {report.k}",
        f"class function: {'yes' if report.class_function else 'no'}",
        f"A = {_fmt_A(report.A)}",
        f"strength (projections) = {oracle.t}",
        "strength (GWLP) = "
        + (str(report.strength) if report.strength is not None else "withheld, not a class function"),
    ]
    if config.characters:
        lines.append("")
        lines.append(f"{'id':>4} {'character':<24} {'deg':>3} {'wt':>2}  J-characteristic")
        for r in report.records:
            lines.append(
                f"{r.index:>4} {r.label:<24} {r.degree:>3} {r.weight:>2}  "
                f"{_num(r.jchar.real):.6g}{_num(r.jchar.imag):+.6g}i"
            )
    return EXIT_OK, "\n".join(lines)


def cmd_strength(path: str, config: CliConfig) -> tuple[int, str]:
    d = load_design(path)
    cert = strength_oracle(d)
    if config.json:
        return EXIT_OK, _dump({"strength": cert.t, "k": d.k, "N": d.N, "witness": _witness_dict(d, cert)})
    lines = [f"strength {cert.t}"]
    w = _witness_dict(d, cert)
    if w is not None:
        factors = "{" + ",".join(map(str, w["factors"])) + "}"
        (r1, r2), (c1, c2) = w["runs"], w["counts"]
        lines.append(
            f"not strength {cert.t + 1}: projection on factors {factors} has "
            f"({' '.join(r1)}) x{c1} but ({' '.join(r2)}) x{c2}"
        )
    return EXIT_OK, "\n".join(lines)


def cmd_verify(path: str, config: CliConfig) -> tuple[int, str]:
    d = load_design(path)
    if not is_class_function(d):
        raise NotClassFunctionError("verify needs a design whose counting function is a class function")
    verdict = verify_theorem(d, tol=config.tol, seed=config.seed)
    lemma = verify_projection_lemma_all(d, max_rank=config.max_rank, seed=config.seed)
    worst = max((r.max_residual for r in lemma), default=0.0)
    ok = verdict.agree and worst <= LEMMA_TOL
    out = {
        "N": d.N,
        "k": d.k,
        "groups": list(d.group.specs),
        "A": [_num(a) for a in verdict.report.A],
        "strength_oracle": verdict.oracle,
        "strength_gwlp": verdict.gwlp,
        "strength_mu": verdict.mu,
        "agree": verdict.agree,
        "lemma_max_rank": config.max_rank,
        "lemma_max_residual": float(f"{worst:.3e}"),
        "lemma_checks": [
            {"factors": list(r.indices.indices), "characters": r.checked, "residual": float(f"{r.max_residual:.3e}")}
            for r in lemma
        ],
        "ok": ok,
    }
    if config.json:
        text = _dump(out)
    else:
        text = "\n".join(
            [
                f"design: {path}",
                f"strength: projections {verdict.oracle}, GWLP {verdict.gwlp}, Fourier {verdict.mu}"
                f" -> {'agree' if verdict.agree else 'DISAGREE'}",
                f"A = {_fmt_A(verdict.report.A)}",
                f"projection identity: {len(lemma)} factor sets up to rank {config.max_rank}, "
                f"max residual {worst:.3e}",
                "OK" if ok else "FAILED",
            ]
        )
    if not ok:
        sys.stderr.write(_dump({**out, "certificate": _witness_dict(d, verdict.certificate)}) + "\n")
        return EXIT_DISAGREE, text
    return EXIT_OK, text


def chartable_to_dict(specs: list[str], seed: int = 0) -> dict:
    g = direct_product([parse_group_spec(s) for s in specs])
    table = character_table(g, seed)
    sizes = np.asarray(g.classes.sizes)
    chars = []
    for i, (c, w) in enumerate(zip(table, table.weights)):
        in_ker = np.abs(c.values - c.values[0]) <= TOL * max(1.0, abs(c.values[0]))
        chars.append(
            {
                "id": i,
                "label": c.label,
                "degree": int(round(c.degree)),
                "weight": int(w),
                "kernel_size": int(sizes[in_ker].sum()),
                "values": [[_num(v.real), _num(v.imag)] for v in c.values],
            }
        )
    return {
        "groups": specs,
        "order": g.order,
        "classes": [{"representative": g.format(r), "size": int(s)} for r, s in zip(g.classes.representatives, sizes)],
        "characters": chars,
    }


def _fmt_value(re: float, im: float) -> str:
    if abs(im) < 1e-9:
        return f"{re:.4g}"
    if abs(re) < 1e-9:
        return f"{im:.4g}i"
    return f"{re:.4g}{im:+.4g}i"


def cmd_chartable(specs: list[str], config: CliConfig) -> tuple[int, str]:
    data = chartable_to_dict(specs, seed=config.seed)
    if config.json:
        return EXIT_OK, _dump(data)
    heads = [c["representative"].replace(" ", "") for c in data["classes"]]
    cells = [[_fmt_value(*v) for v in ch["values"]] for ch in data["characters"]]
    width = max([len(h) for h in heads] + [len(x) for row in cells for x in row]) + 1
    label_w = max(len("character"), *(len(c["label"]) for c in data["characters"]))
    lines = [
        f"character table of {' x '.join(specs)} (order {data['order']}, {len(heads)} classes)",
        f"{'character':<{label_w}} {'deg':>3} {'wt':>2} {'|ker|':>5} |" + "".join(f"{h:>{width}}" for h in heads),
        f"{'class size':<{label_w}} {'':>3} {'':>2} {'':>5} |"
        + "".join(f"{c['size']:>{width}}" for c in data["classes"]),
    ]
    for ch, row in zip(data["characters"], cells):
        lines.append(
            f"{ch['label']:<{label_w}} {ch['degree']:>3} {ch['weight']:>2} {ch['kernel_size']:>5} |"
            + "".join(f"{x:>{width}}" for x in row)
        )
    return EXIT_OK, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help=f"zero tolerance on A_j (default {DEFAULT_TOL:g})")
    common.add_argument("--json", action="store_true", default=None, help="structured JSON output")
    common.add_argument("--seed", type=int, default=None, help="seed for generic character tables (default 0)")
    common.add_argument(
        "--allow-non-class-function",
        action="store_true",
        default=None,
        help="compute the GWLP even when O is not a class function (strength is withheld)",
    )
    common.add_argument("--max-rank", type=int, default=None, help="largest projection rank checked by verify (default 3)")
    common.add_argument("--characters", action="store_true", help="include per-character J-characteristics")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(
        prog="oachar",
        description="Generalized wordlength patterns and strength of designs over products of finite groups.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("compute", "print the GWLP report of a design file"),
        ("strength", "strength by projections, with a witness for t+1"),
        ("verify", "compare projection, GWLP and Fourier strengths and check projected inner products"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_, epilog=EPILOG,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.add_argument("inputs", nargs=1, metavar="file")
    p = sub.add_parser("chartable", parents=[common], help="print a character table with weights",
                       epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("inputs", nargs="+", metavar="spec", help="group specs: Z<s>, S3 or FILE:<path>")
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    env = os.environ

    def pick(flag, name, conv, default):
        if flag is not None:
            return flag
        if ENV_PREFIX + name in env:
            return conv(env[ENV_PREFIX + name])
        return default

    return CliConfig(
        command=args.command,
        inputs=list(args.inputs),
        tol=pick(args.tol, "TOL", float, DEFAULT_TOL),
        json=bool(args.json) or _env_flag("JSON"),
        seed=pick(args.seed, "SEED", int, 0),
        allow_non_class_function=bool(args.allow_non_class_function) or _env_flag("ALLOW_NON_CLASS_FUNCTION"),
        max_rank=pick(args.max_rank, "MAX_RANK", int, 3),
        characters=args.characters,
        verbosity=args.verbose,
    )


COMMANDS = {
    "compute": lambda c: cmd_compute(c.inputs[0], c),
    "strength": lambda c: cmd_strength(c.inputs[0], c),
    "verify": lambda c: cmd_verify(c.inputs[0], c),
    "chartable": lambda c: cmd_chartable(c.inputs, c),
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
    except ValueError as exc:
        parser.error(str(exc))
    logging.basicConfig(
        level=logging.WARNING - 10 * min(config.verbosity, 2), format="%(levelname)s %(message)s"
    )
    start = time.perf_counter()
    try:
        code, text = COMMANDS[config.command](config)
    except (DesignParseError, GroupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotClassFunctionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CLASS_FUNCTION
    except CharacterTableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(text)
    log.info("%s finished in %.3fs", config.command, time.perf_counter() - start)
    return code


if __name__ == "__main__":
    sys.exit(main())
