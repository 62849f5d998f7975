"""Command line front end: single queries and verification campaigns.

Every subcommand prints one JSON object.  Exit codes: 0 when the run
reached a verdict and nothing was refuted, 1 on a falsification-grade
event, 2 on usage or input errors, 3 when a budget ran out before a
verdict.  A graph argument is a path to an edge-list file (header
``n=<count>``, one ``u v`` pair per line); patterns are named inline
or loaded from a file with an ``m=<count>`` header and repeatable
pairs.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .campaigns import DEFAULT_BUDGET, SCHEMA, THEOREMS, run_campaign
from .connectivity import sharpness_gadget, vertex_connectivity
from .core import (
    Placement,
    PatternMultigraph,
    SimpleGraph,
    bond,
    cycle_pattern,
    emit_graph,
    fat_triangle,
    graph_hash,
    kite,
    matching,
    parse_graph,
    path_pattern,
)
from .errors import (
    CaseAnalysisIncomplete,
    HlinkError,
    ParseError,
    SearchBudgetExceeded,
    WitnessNotFound,
)
from .flowers import find_flower, verify_flower
from .linkage import (
    EXHAUSTED,
    find_fat_triangle_linkage,
    find_kite_linkage,
    find_subdivision,
    is_H_linked,
)
from .mader import GroupedTerminals, find_certificate, max_good_paths, verify_certificate
from .search import SearchBudget

_USAGE_EXIT = 2
_BUDGET_EXIT = 3


class _CliError(Exception):
    """Input problem surfaced to the user; maps to exit 2."""


def _ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise _CliError(f"{what} must be comma-separated integers, got {text!r}")


def _load_graph(path: str) -> SimpleGraph:
    try:
        with open(path, "rb") as fh:
            return parse_graph(fh.read())
    except OSError as e:
        raise _CliError(f"cannot read graph file {path}: {e.strerror or e}")


def _load_pattern_file(path: str) -> PatternMultigraph:
    try:
        with open(path) as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    except OSError as e:
        raise _CliError(f"cannot read pattern file {path}: {e.strerror or e}")
    if not lines or not lines[0].startswith("m="):
        raise _CliError(f"pattern file {path} must start with an m=<count> header")
    try:
        m = int(lines[0][2:])
        pairs = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
    except ValueError:
        raise _CliError(f"pattern file {path} has a malformed line")
    if any(len(p) != 2 for p in pairs):
        raise _CliError(f"pattern file {path} needs one 'u v' pair per line")
    return PatternMultigraph.from_pairs(m, pairs)


def _pattern(spec: str) -> PatternMultigraph:
    """Named pattern, or a file path when no name matches."""
    name = spec.strip()
    hit = re.fullmatch(r"F\((\d+),(\d+),(\d+)\)", name)
    if hit:
        return fat_triangle(*(int(g) for g in hit.groups()))
    hit = re.fullmatch(r"([BCM])\((\d+)\)", name)
    if hit:
        maker = {"B": bond, "C": cycle_pattern, "M": matching}[hit.group(1)]
        return maker(int(hit.group(2)))
    if name == "kite":
        return kite()
    if name == "P4":
        return path_pattern(4)
    return _load_pattern_file(name)


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _linkage_exit(status: str) -> int:
    return _BUDGET_EXIT if status == EXHAUSTED else 0


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_connectivity(args) -> int:
    G = _load_graph(args.graph)
    _emit({
        "schema": SCHEMA,
        "command": "connectivity",
        "graph": graph_hash(G),
        "n": G.n,
        "edges": len(G.edges),
        "kappa": vertex_connectivity(G),
    })
    return 0


def _cmd_link(args) -> int:
    G = _load_graph(args.graph)
    H = _pattern(args.pattern)
    base = {
        "schema": SCHEMA,
        "command": "link",
        "graph": graph_hash(G),
        "pattern": args.pattern,
        "budget": args.budget,
    }
    if args.placement is not None:
        images = _ints(args.placement, "--placement")
        res = find_subdivision(G, H, Placement(images), args.budget)
        _emit({**base, "placement": list(images), "result": res.to_json()})
        return _linkage_exit(res.status)
    mode = "sample" if args.sample is not None else "all"
    count = args.sample if args.sample is not None else 0
    survey = is_H_linked(
        G, H, mode=mode, count=count, seed=args.seed, budget=args.budget
    )
    _emit({**base, "mode": mode, "survey": survey.to_json()})
    return 0 if survey.linked is not None else _BUDGET_EXIT


def _cmd_fat_triangle(args) -> int:
    G = _load_graph(args.graph)
    terms = _ints(args.terminals, "--terminals")
    ks = _ints(args.k, "--k")
    if len(terms) != 3 or len(ks) != 3:
        raise _CliError("fat-triangle needs three terminals and three multiplicities")
    res = find_fat_triangle_linkage(G, *terms, *ks, budget=args.budget)
    _emit({
        "schema": SCHEMA,
        "command": "fat-triangle",
        "graph": graph_hash(G),
        "terminals": list(terms),
        "k": list(ks),
        "budget": args.budget,
        "result": res.to_json(),
    })
    return _linkage_exit(res.status)


def _cmd_kite(args) -> int:
    G = _load_graph(args.graph)
    terms = _ints(args.terminals, "--terminals")
    if len(terms) != 4:
        raise _CliError("kite needs four terminals: u2,u1,u3,u4")
    res = find_kite_linkage(G, *terms, budget=args.budget)
    _emit({
        "schema": SCHEMA,
        "command": "kite",
        "graph": graph_hash(G),
        "terminals": list(terms),
        "budget": args.budget,
        "result": res.to_json(),
    })
    return _linkage_exit(res.status)


def _parse_groups(text: str) -> GroupedTerminals:
    parts = [
        _ints(chunk, "--groups") for chunk in text.split(";") if chunk.strip()
    ]
    if len(parts) < 2:
        raise _CliError("--groups needs at least two ';'-separated groups")
    return GroupedTerminals.of(*parts)


def _cmd_mader(args) -> int:
    G = _load_graph(args.graph)
    groups = _parse_groups(args.groups)
    payload = {
        "schema": SCHEMA,
        "command": "mader",
        "graph": graph_hash(G),
        "groups": [sorted(g) for g in groups.groups],
        "k": args.k,
        "budget": args.budget,
    }
    good = max_good_paths(G, groups, budget=SearchBudget(args.budget), target=args.k)
    payload["good_paths"] = good.count
    payload["reached_target"] = good.count >= args.k
    incomplete = good.count < args.k and not good.complete
    if args.certify:
        search = find_certificate(G, groups, args.k, budget=SearchBudget(args.budget))
        cert = search.certificate
        payload["certificate"] = None if cert is None else cert.to_json()
        payload["certificate_verified"] = (
            None if cert is None else verify_certificate(G, groups, cert)
        )
        if cert is None and not search.complete:
            incomplete = True
        if cert is not None and payload["certificate_verified"] is False:
            _emit(payload)
            return 1
    _emit(payload)
    return _BUDGET_EXIT if incomplete else 0


def _cmd_flower(args) -> int:
    G = _load_graph(args.graph)
    terms = _ints(args.terminals, "--terminals")
    if len(terms) != 4:
        raise _CliError("flower needs four terminals: u1,u2,u3,u4")
    F = find_flower(G, *terms, budget=args.budget)
    payload = {
        "schema": SCHEMA,
        "command": "flower",
        "graph": graph_hash(G),
        "terminals": list(terms),
        "budget": args.budget,
        "found": F is not None,
        "flower": None if F is None else F.to_json(),
    }
    if F is not None:
        payload["verified"] = verify_flower(G, F)
        if not payload["verified"]:
            _emit(payload)
            return 1
    _emit(payload)
    return 0


def _cmd_gadget(args) -> int:
    ks = _ints(args.k, "--k")
    if len(ks) != 3:
        raise _CliError("--k needs the three multiplicities k1,k2,k3")
    G, phi = sharpness_gadget(*ks, args.m)
    if args.out is not None:
        try:
            with open(args.out, "wb") as fh:
                fh.write(emit_graph(G))
        except OSError as e:
            raise _CliError(f"cannot write {args.out}: {e.strerror or e}")
    _emit({
        "schema": SCHEMA,
        "command": "gadget",
        "k": list(ks),
        "m": args.m,
        "graph": graph_hash(G),
        "n": G.n,
        "edges": [list(e) for e in G.edges],
        "placement": list(phi),
        "kappa": vertex_connectivity(G),
        "out": args.out,
    })
    return 0


def _cmd_verify(args) -> int:
    report = run_campaign(
        args.theorem,
        n=args.n,
        count=args.count,
        seed=args.seed,
        jobs=args.jobs,
        budget=args.budget,
    )
    _emit(report.to_json())
    return report.exit_code


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hlink",
        description="Exact linkage, obstruction, and certificate checks on small graphs.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def budget_flag(p):
        p.add_argument(
            "--budget", type=int, default=DEFAULT_BUDGET,
            help="search nodes per placement (default %(default)s)",
        )

    p = sub.add_parser("connectivity", help="vertex connectivity of a graph")
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_connectivity)

    p = sub.add_parser("link", help="subdivision linkage for a pattern")
    p.add_argument("graph")
    p.add_argument("--pattern", required=True,
                   help="F(a,b,c), kite, B(k), C(k), M(k), P4, or a pattern file")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--placement", help="comma-separated host vertices")
    grp.add_argument("--all", action="store_true", help="every placement (default)")
    grp.add_argument("--sample", type=int, help="sample this many placements")
    p.add_argument("--seed", type=int, default=0)
    budget_flag(p)
    p.set_defaults(fn=_cmd_link)

    p = sub.add_parser("fat-triangle", help="triangle linkage with side multiplicities")
    p.add_argument("graph")
    p.add_argument("--terminals", required=True, help="a,b,c")
    p.add_argument("--k", required=True, help="k1,k2,k3")
    budget_flag(p)
    p.set_defaults(fn=_cmd_fat_triangle)

    p = sub.add_parser("kite", help="kite subdivision at four terminals")
    p.add_argument("graph")
    p.add_argument("--terminals", required=True, help="u2,u1,u3,u4")
    budget_flag(p)
    p.set_defaults(fn=_cmd_kite)

    p = sub.add_parser("mader", help="good paths and obstruction certificates")
    p.add_argument("graph")
    p.add_argument("--groups", required=True, help="e.g. 0,1;2;3,4")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--certify", action="store_true",
                   help="also search for an obstruction certificate")
    budget_flag(p)
    p.set_defaults(fn=_cmd_mader)

    p = sub.add_parser("flower", help="flower anchored at four terminals")
    p.add_argument("graph")
    p.add_argument("--terminals", required=True, help="u1,u2,u3,u4")
    budget_flag(p)
    p.set_defaults(fn=_cmd_flower)

    p = sub.add_parser("gadget", help="sharpness gadget for given multiplicities")
    p.add_argument("--k", required=True, help="k1,k2,k3")
    p.add_argument("--m", type=int, default=None, help="peripheral clique size")
    p.add_argument("--out", default=None, help="also write the edge list here")
    p.set_defaults(fn=_cmd_gadget)

    p = sub.add_parser("verify", help="run a seeded verification campaign")
    p.add_argument("theorem", choices=THEOREMS)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    budget_flag(p)
    p.set_defaults(fn=_cmd_verify)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return _USAGE_EXIT if e.code else 0
    try:
        return args.fn(args)
    except _CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return _USAGE_EXIT
    except (CaseAnalysisIncomplete, WitnessNotFound) as e:
        print(f"refuted: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except SearchBudgetExceeded as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return _BUDGET_EXIT
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return _USAGE_EXIT
    except HlinkError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return _USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
