"""Command-line front end.

Subcommands: analyze, recognize, enumerate, count, verify.  Reports are
built as JSON dictionaries first; the human-readable view is rendered from
the same dictionary, so the two can never disagree.  Exit codes: 0 success,
1 usage or parse error, 2 verification failure, 3 cap exceeded.

Function inputs are accepted as a positional argument or, when omitted,
one per line on stdin (batch mode).  Formats: "table" (binary string,
row j = value at the word whose bits spell j, x_1 least significant),
"hex" ("0x" + most-significant-nibble-first), "anf" ("x1*x3 + x2 + 1"),
"layers" ("[x1:0 | x2:0 x3:0] b=0").
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import __version__
from ._kernels import backend_name
from .anf import parse_anf, table_to_anf
from .enumeration import (
    count_mncf,
    count_ncf,
    enumerate_mncf,
    enumerate_ncf,
    layer_compositions,
    multinomial,
)
from .errors import CapExceededError, ParseError
from .ncf import (
    NcfLayerSpec,
    NotNcf,
    Profile,
    construct,
    parse_layer_spec,
    recognize,
    sensitivity_formula,
)
from .sensitivity import (
    BLOCK_CAP,
    SENSITIVITY_CAP,
    full_report,
    sensitivity_with_witness,
)
from .truthtable import TruthTable
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2
EXIT_CAP = 3

FORMATS = ("table", "hex", "anf", "layers")


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_function(text: str, fmt: str) -> TruthTable:
    if fmt == "table":
        return TruthTable.from_string(text)
    if fmt == "hex":
        return TruthTable.from_hex(text)
    if fmt == "anf":
        return parse_anf(text).to_table()
    if fmt == "layers":
        return construct(parse_layer_spec(text))
    raise ValueError(f"unknown format {fmt!r}")


def _ncf_section(table: TruthTable):
    """(report dict, NcfLayerSpec or None) for the recognition outcome."""
    if table.n == 1:
        if table.is_constant():
            return {"is_ncf": False, "stage": "constant", "layer": None,
                    "detail": "constant function"}, None
        return {
            "is_ncf": False,
            "stage": "out_of_scope",
            "layer": None,
            "detail": "canalyzing, out of NCF scope (layered form needs n >= 2)",
        }, None
    outcome = recognize(table)
    if isinstance(outcome, NotNcf):
        return {
            "is_ncf": False,
            "stage": outcome.stage.value,
            "layer": outcome.layer,
            "detail": outcome.detail,
        }, None
    return {
        "is_ncf": True,
        "layers": outcome.to_string(),
        "b": outcome.b,
        "canalyzed_values": list(outcome.canalyzed_values()),
    }, outcome


def build_report(
    text: str,
    fmt: str,
    max_n: Optional[int] = None,
    l: Optional[int] = None,
) -> dict:
    """Full analysis of one function; the single source for all output.

    ``l`` restricts the size-capped block sensitivity section to one cap
    instead of reporting every value from 1 to n.
    """
    table = parse_function(text, fmt)
    n = table.n
    if l is not None and not 1 <= l <= n:
        raise ValueError(f"--l must be in 1..{n}, got {l}")
    sens_cap = max(SENSITIVITY_CAP, max_n or 0)
    block_cap = max(BLOCK_CAP, max_n or 0)

    ncf_info, spec = _ncf_section(table)

    report = {
        "input": {"format": fmt, "text": text.strip()},
        "n": n,
        "table": table.to_bitstring(),
        "hex": table.to_hex() if n >= 2 else None,
        "anf": table_to_anf(table).to_string(),
        "essential_variables": sorted(table.essential_variables()),
        "monotone": table.monotonicity().value,
        "ncf": ncf_info,
        "profile": list(spec.profile().ks) if spec else None,
        "layer_number": spec.r if spec else None,
    }

    formula = sensitivity_formula(spec.profile()) if spec else None
    if n <= sens_cap:
        s, witness = sensitivity_with_witness(table, max_n=sens_cap)
        report["sensitivity"] = {
            "formula": formula,
            "oracle": s,
            "agree": (formula == s) if formula is not None else None,
            "witness": list(witness),
        }
    else:
        report["sensitivity"] = {
            "formula": formula,
            "oracle": None,
            "agree": None,
            "skipped": "cap",
        }

    if n <= block_cap:
        full = full_report(table, max_n=block_cap)
        report["block_sensitivity"] = {
            "value": full.bs,
            "witness": {
                "word": list(full.bs_witness_word),
                "blocks": [sorted(b) for b in full.bs_witness_blocks],
            },
        }
        wanted = full.bs_l if l is None else {l: full.bs_l[l]}
        report["l_block_sensitivity"] = {
            str(k): v for k, v in sorted(wanted.items())
        }
    else:
        report["block_sensitivity"] = {"skipped": "cap"}
        report["l_block_sensitivity"] = {"skipped": "cap"}
    return report


def render_report(report: dict) -> str:
    """Human view, derived from the JSON dictionary only."""
    lines = []
    lines.append(f"n = {report['n']}   table = {report['table']}"
                 + (f"   hex = {report['hex']}" if report["hex"] else ""))
    lines.append(f"anf: {report['anf']}")
    ess = report["essential_variables"]
    lines.append(
        "essential variables: "
        + (", ".join(f"x{v}" for v in ess) if ess else "(none)")
    )
    lines.append(f"monotone: {report['monotone']}")
    ncf = report["ncf"]
    if ncf["is_ncf"]:
        lines.append(f"nested canalyzing: yes   {ncf['layers']}")
        lines.append(
            f"profile: {report['profile']}   layer number: "
            f"{report['layer_number']}"
        )
    else:
        where = f" at layer {ncf['layer']}" if ncf.get("layer") else ""
        detail = f" ({ncf['detail']})" if ncf.get("detail") else ""
        lines.append(
            f"nested canalyzing: no ({ncf['stage']}{where}){detail}"
        )
    s_info = report["sensitivity"]
    if s_info.get("skipped"):
        lines.append("sensitivity: skipped (cap)"
                     + (f", formula = {s_info['formula']}"
                        if s_info["formula"] is not None else ""))
    else:
        line = f"sensitivity: {s_info['oracle']} at word {s_info['witness']}"
        if s_info["formula"] is not None:
            line += (f"   formula: {s_info['formula']}"
                     f" ({'agrees' if s_info['agree'] else 'DISAGREES'})")
        lines.append(line)
    b_info = report["block_sensitivity"]
    if b_info.get("skipped"):
        lines.append("block sensitivity: skipped (cap)")
    else:
        wit = b_info["witness"]
        lines.append(
            f"block sensitivity: {b_info['value']} at word {wit['word']} "
            f"blocks {wit['blocks']}"
        )
        ls = report["l_block_sensitivity"]
        lines.append(
            "size-capped: "
            + "  ".join(f"l={l}: {ls[l]}" for l in sorted(ls, key=int))
        )
    return "\n".join(lines)


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2)


def _iter_inputs(arg: Optional[str]):
    if arg is not None:
        yield arg
        return
    for line in sys.stdin:
        line = line.strip()
        if line:
            yield line


def _cmd_analyze(args) -> int:
    first = True
    for text in _iter_inputs(args.input):
        report = build_report(text, args.format, max_n=args.max_n, l=args.l)
        if args.json:
            print(_dump_json(report))
        else:
            if not first:
                print()
            print(render_report(report))
        first = False
    return EXIT_OK


def _cmd_recognize(args) -> int:
    for text in _iter_inputs(args.input):
        table = parse_function(text, args.format)
        info, _spec = _ncf_section(table)
        if args.json:
            print(_dump_json(info))
        elif info["is_ncf"]:
            print(info["layers"])
        else:
            where = f" at layer {info['layer']}" if info.get("layer") else ""
            detail = f": {info['detail']}" if info.get("detail") else ""
            print(f"not nested canalyzing ({info['stage']}{where}){detail}")
    return EXIT_OK


def _parse_profile(text: Optional[str]) -> Optional[Profile]:
    if text is None:
        return None
    try:
        return Profile(tuple(int(part) for part in text.split(",")))
    except ValueError as exc:
        raise ParseError(f"bad profile {text!r}: {exc}", 0, text) from None


def _cmd_enumerate(args) -> int:
    profile = _parse_profile(args.profile)
    if args.kind == "mncf":
        stream = enumerate_mncf(args.n, profile=profile, max_n=args.max_n)
        specs = (spec.to_layer_spec() for spec in stream)
    else:
        specs = enumerate_ncf(args.n, profile=profile, max_n=args.max_n)
    if args.count_only:
        total = sum(1 for _ in specs)
        print(total)
    else:
        for spec in specs:
            print(spec.to_string())
    return EXIT_OK


def _cmd_count(args) -> int:
    profile = _parse_profile(args.profile)
    if args.kind == "mncf":
        table = count_mncf(args.n)
        payload = table.to_json_dict()
        if profile is not None:
            term = payload["per_profile"].get(
                ",".join(str(k) for k in profile.ks), 0
            )
            payload = {
                "n": args.n,
                "profile": list(profile.ks),
                "partitions": term,
                "total": 4 * term,
            }
    else:
        if profile is None:
            per = {
                ",".join(str(k) for k in ks):
                    multinomial(args.n, ks) * (1 << (args.n + 1))
                for ks in layer_compositions(args.n)
            }
            payload = {
                "n": args.n,
                "total": count_ncf(args.n),
                "per_profile": per,
            }
        else:
            payload = {
                "n": args.n,
                "profile": list(profile.ks),
                "total": count_ncf(args.n, profile=profile),
            }
    print(_dump_json(payload))
    return EXIT_OK


def _cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        result = run_suite(
            name, max_n=args.max_n, sample=args.sample, seed=args.seed
        )
        results.append(result)
        if not args.json:
            print(result.summary())
            for failure in result.failures[:10]:
                print(f"  counterexample: {failure}")
    if args.json:
        print(_dump_json([r.to_json_dict() for r in results]))
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY_FAILED


def make_parser() -> _Parser:
    parser = _Parser(
        prog="ncfkit",
        description="Analyze Boolean functions for nested canalyzing "
        "structure, exact sensitivity measures, and monotone-NCF counts.",
    )
    parser.add_argument(
        "--version", action="version",
        version=f"ncfkit {__version__} ({backend_name()} kernels)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_opts(p):
        p.add_argument("input", nargs="?", default=None,
                       help="function text; omit to read one per line "
                            "from stdin")
        p.add_argument("--format", choices=FORMATS, default="table")
        p.add_argument("--json", action="store_true",
                       help="emit the JSON report")

    p_an = sub.add_parser("analyze", help="full report on one function")
    add_input_opts(p_an)
    p_an.add_argument("--max-n", type=int, default=None,
                      help="raise the oracle caps up to this many variables")
    p_an.add_argument("--l", type=int, default=None,
                      help="report the size-capped block sensitivity for "
                           "this cap only")
    p_an.set_defaults(fn=_cmd_analyze)

    p_rec = sub.add_parser("recognize",
                           help="layered description or rejection reason")
    add_input_opts(p_rec)
    p_rec.set_defaults(fn=_cmd_recognize)

    p_enum = sub.add_parser("enumerate", help="stream layered functions")
    p_enum.add_argument("kind", choices=("ncf", "mncf"))
    p_enum.add_argument("-n", type=int, required=True)
    p_enum.add_argument("--profile", default=None,
                        help="restrict to one profile, e.g. 1,2")
    p_enum.add_argument("--count-only", action="store_true")
    p_enum.add_argument("--max-n", type=int, default=None,
                        help="raise the enumeration cap")
    p_enum.set_defaults(fn=_cmd_enumerate)

    p_cnt = sub.add_parser("count", help="closed-form counts as JSON")
    p_cnt.add_argument("kind", choices=("ncf", "mncf"))
    p_cnt.add_argument("-n", type=int, required=True)
    p_cnt.add_argument("--profile", default=None)
    p_cnt.set_defaults(fn=_cmd_count)

    p_ver = sub.add_parser("verify", help="run the verification suites")
    p_ver.add_argument("--suite", choices=tuple(SUITES) + ("all",),
                       default="all")
    p_ver.add_argument("--max-n", type=int, default=None)
    p_ver.add_argument("--sample", type=int, default=None,
                       help="random draws per size (trials for invariance)")
    p_ver.add_argument("--seed", type=int, default=None)
    p_ver.add_argument("--json", action="store_true")
    p_ver.set_defaults(fn=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"ncfkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"ncfkit: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"ncfkit: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
