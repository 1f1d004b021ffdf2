"""Command-line surface: analyze, generate, census, verify, convert.

Exit codes: 0 success / property pass, 1 property failure or census mismatch,
2 usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from typing import Optional

from .census import census, verify_appendix_a
from .core import Digraph, Tournament, bits, parse_graph, strong_components
from .domination import domination_report
from .errors import WatchwalkError
from .families import (FIXTURES, circulant, paley, random_tournament,
                       transitive)
from .properties import SUITES, run_suite
from .watchman import watchman_number, watchman_number_tournament

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _reference_path() -> str:
    return str(resources.files("watchwalk").joinpath("data/appendixA.csv"))


def _build_generator(spec: str) -> Digraph:
    kind, _, rest = spec.partition(":")
    if kind == "fixture":
        if rest not in FIXTURES:
            raise WatchwalkError(
                f"unknown fixture {rest!r}; choose from {', '.join(sorted(FIXTURES))}")
        return FIXTURES[rest]()
    if kind == "transitive":
        return transitive(int(rest))
    if kind == "paley":
        return paley(int(rest))
    if kind == "circulant":
        n_str, _, conn = rest.partition(":")
        return circulant(int(n_str), {int(s) for s in conn.split(",")})
    if kind == "random":
        n_str, _, seed = rest.partition(":")
        return random_tournament(int(n_str), int(seed))
    raise WatchwalkError(f"unknown generator {kind!r}")


def load_input(arg: str) -> Digraph:
    """File path, `fixture:NAME`, or a generator spec, with an optional
    `generator:` prefix."""
    spec = arg
    if spec.startswith("generator:"):
        spec = spec[len("generator:"):]
    head = spec.partition(":")[0]
    if head in ("fixture", "transitive", "paley", "circulant", "random"):
        return _build_generator(spec)
    try:
        with open(arg, "r", encoding="ascii") as handle:
            text = handle.read()
    except OSError as exc:
        raise WatchwalkError(f"cannot read {arg}: {exc.strerror}") from exc
    return parse_graph(text)


def _vertex_list(mask: Optional[int]) -> Optional[list[int]]:
    return None if mask is None else list(bits(mask))


def _analyze_payload(d: Digraph) -> dict:
    cond = strong_components(d)
    dom = domination_report(d)
    if d.is_semicomplete():
        walk = watchman_number_tournament(d)
    else:
        walk = watchman_number(d)
    return {
        "n": d.n,
        "arc_count": d.arc_count,
        "is_tournament": d.is_tournament(),
        "strong_components": [list(bits(comp)) for comp in cond.components],
        "condensation": {
            "components": len(cond.components),
            "arcs": sorted(cond.quotient.arcs()),
        },
        "domination": {
            "gamma": dom.gamma,
            "gamma_witness": _vertex_list(dom.gamma_witness),
            "gamma_t": dom.gamma_t,
            "gamma_t_witness": _vertex_list(dom.gamma_t_witness),
            "gamma_cyc": dom.gamma_cyc,
            "gamma_cyc_witness": dom.gamma_cyc_witness,
            "gamma_wc": dom.gamma_wc,
            "gamma_wc_witness": _vertex_list(dom.gamma_wc_witness),
            "gamma_sc": dom.gamma_sc,
            "gamma_sc_witness": _vertex_list(dom.gamma_sc_witness),
        },
        "watchman": {
            "exists": walk.exists,
            "w": walk.w,
            "witness": list(walk.witness.vertices) if walk.witness else None,
            "multiplicity": walk.multiplicity,
        },
    }


def _render_human(payload: dict) -> str:
    def fmt(value) -> str:
        if value is None:
            return "absent"
        if isinstance(value, list):
            return ",".join(str(x) for x in value)
        return str(value)

    dom = payload["domination"]
    walk = payload["watchman"]
    rows = [
        ("vertices", payload["n"]),
        ("arcs", payload["arc_count"]),
        ("tournament", payload["is_tournament"]),
        ("strong components", payload["condensation"]["components"]),
        ("gamma", f'{dom["gamma"]}  witness {fmt(dom["gamma_witness"])}'),
        ("gamma_t", fmt(dom["gamma_t"])),
        ("gamma_cyc", fmt(dom["gamma_cyc"])),
        ("gamma_wc", fmt(dom["gamma_wc"])),
        ("gamma_sc", fmt(dom["gamma_sc"])),
        ("walk exists", walk["exists"]),
        ("w", fmt(walk["w"])),
        ("witness walk", fmt(walk["witness"])),
        ("multiplicity", fmt(walk["multiplicity"])),
    ]
    width = max(len(name) for name, _ in rows)
    return "\n".join(f"{name:<{width}}  {value}" for name, value in rows)


def _cmd_analyze(args) -> int:
    d = load_input(args.input)
    payload = _analyze_payload(d)
    if args.human:
        print(_render_human(payload))
    else:
        print(json.dumps(payload, indent=2))
    return EXIT_OK


def _write_out(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="ascii") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _serialize(d: Digraph, fmt: str) -> str:
    if fmt == "tcode":
        if not d.is_tournament():
            raise WatchwalkError("tournament code requires a tournament input")
        if not isinstance(d, Tournament):
            d = Tournament(d.n, d.out)
        return d.tcode() + "\n"
    return d.to_edge_list()


def _cmd_generate(args) -> int:
    d = _build_generator(args.spec)
    _write_out(_serialize(d, args.to), args.out)
    return EXIT_OK


def _cmd_convert(args) -> int:
    d = load_input(args.input)
    _write_out(_serialize(d, args.to), args.out)
    return EXIT_OK


def _cmd_census(args) -> int:
    table = census(args.n, jobs=args.jobs, checkpoint_path=args.checkpoint,
                   allow_large=args.allow_large)
    text = table.to_json() if args.format == "json" else table.to_csv()
    _write_out(text, args.out)
    if args.verify is None:
        return EXIT_OK
    reference = args.verify if args.verify != "" else _reference_path()
    diffs = verify_appendix_a(table, reference)
    hard = [d for d in diffs if not d.advisory]
    for diff in diffs:
        tag = "advisory" if diff.advisory else "MISMATCH"
        print(f"{tag} {diff.key}: computed={diff.computed} "
              f"reference={diff.reference}", file=sys.stderr)
    if hard:
        return EXIT_FAIL
    print(f"verified against {reference}: no mismatches", file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args) -> int:
    result = run_suite(args.suite, n=args.n, seed=args.seed,
                       samples=args.samples)
    if args.json:
        print(json.dumps({
            "suite": result.name,
            "passed": result.passed,
            "checked": result.checked,
            "counterexample": result.counterexample,
            "detail": result.detail,
        }, indent=2))
    else:
        print(result.summary())
    return EXIT_OK if result.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="watchwalk",
        description="Watchman numbers, domination variants, and the tournament census.")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="full report for one digraph")
    analyze.add_argument("input", help="file path, fixture:NAME, or generator spec")
    analyze.add_argument("--human", action="store_true",
                         help="text table instead of JSON")
    analyze.set_defaults(func=_cmd_analyze)

    generate = sub.add_parser("generate", help="emit a family member")
    generate.add_argument("spec", help="e.g. transitive:6, paley:7, "
                                       "circulant:7:1,2,3, random:9:42, fixture:NAME")
    generate.add_argument("--to", choices=["edge-list", "tcode"], default="edge-list")
    generate.add_argument("--out", help="output file (default stdout)")
    generate.set_defaults(func=_cmd_generate)

    census_p = sub.add_parser("census", help="(n, w, gamma, m) class counts")
    census_p.add_argument("-n", type=int, required=True)
    census_p.add_argument("--jobs", type=int, default=1)
    census_p.add_argument("--checkpoint", help="resumable work-unit log")
    census_p.add_argument("--out", help="output file (default stdout)")
    census_p.add_argument("--format", choices=["csv", "json"], default="csv")
    census_p.add_argument("--allow-large", action="store_true",
                          help="permit order 10 (~9.7M classes)")
    census_p.add_argument("--verify", nargs="?", const="", default=None,
                          metavar="REF",
                          help="diff against a reference CSV (default: bundled table)")
    census_p.set_defaults(func=_cmd_census)

    verify = sub.add_parser("verify", help="run a theorem property suite")
    verify.add_argument("suite", choices=sorted(SUITES))
    verify.add_argument("--n", type=int, default=None,
                        help="exhaustive corpus order cap")
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--samples", type=int, default=None)
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=_cmd_verify)

    convert = sub.add_parser("convert", help="translate between formats")
    convert.add_argument("input", help="file path, fixture:NAME, or generator spec")
    convert.add_argument("--to", choices=["edge-list", "tcode"], required=True)
    convert.add_argument("--out", help="output file (default stdout)")
    convert.set_defaults(func=_cmd_convert)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WatchwalkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
