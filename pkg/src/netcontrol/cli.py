"""Batch command-line front door.

Exit codes: 0 success, 1 usage error, 2 unreadable/invalid input,
3 infeasible alteration or exchange, 4 oracle guard exceeded.
Data goes to stdout (or ``-o``); timing notes go to stderr so repeated runs
with the same seed stay byte-identical.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import reports
from .alteration import (alteration_report, apply_plan, ic_to_smc,
                         plan_attains_goal, smc_to_ic_full, smc_to_ic_single,
                         umc_to_smc)
from .components import ComponentKind
from .errors import (AlterationError, EdgeListParseError, ExchangeError,
                     GenerationError, NetcontrolError, OracleInfeasibleError)
from .generators import GenSpec, generate
from .matching import exchange, maximum_matching
from .network import DirectedNetwork, load_edge_list, write_edge_list
from .oracle import OracleGuard, classify_exhaustive, enumerate_maximum_matchings
from .pipeline import NetworkAnalysis, analyze

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_ORACLE = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="netcontrol",
                     description="Structural-controllability toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-o", "--output", metavar="PATH",
                       help="write output here instead of stdout")
        return p

    p = add("generate", "write a synthetic network as an edge list")
    p.add_argument("--model", choices=("er", "sf"), required=True)
    p.add_argument("-n", "--nodes", type=int, required=True)
    p.add_argument("-k", "--avg-degree", type=float, required=True)
    p.add_argument("--gamma-in", type=float, default=3.0)
    p.add_argument("--gamma-out", type=float, default=3.0)
    p.add_argument("--seed", type=int, default=0)

    for name, help_text in (
            ("analyze", "full analysis record for an edge-list file"),
            ("classify", "per-node control classes"),
            ("inputgraph", "control-adjacency edges as TSV"),
            ("components", "control components and kinds")):
        p = add(name, help_text)
        p.add_argument("path")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("json", "tsv"),
                       default="json" if name == "analyze" else "tsv")
        p.add_argument("--members", action="store_true",
                       help="include member lists even on large networks")

    p = add("alter", "plan edge additions that flip a component's type")
    p.add_argument("path")
    p.add_argument("--component", default="largest",
                   help="component id, or largest[-ic|-mc|-umc|-smc]")
    p.add_argument("--to", choices=("smc", "ic"), required=True)
    p.add_argument("--mode", choices=("single", "full"), default="single")
    p.add_argument("--seed", type=int, default=0)

    p = add("exchange", "swap one input node for a control-adjacent one")
    p.add_argument("path")
    p.add_argument("--node", required=True, help="label of the input node")
    p.add_argument("--via", help="label of the in-edge source (default: lowest id)")
    p.add_argument("--seed", type=int, default=0)

    p = add("oracle-check", "compare exhaustive and pipeline classifications")
    p.add_argument("path")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-nodes", type=int, default=16)
    p.add_argument("--max-count", type=int, default=10 ** 6)

    p = add("sweep", "generate/analyze a grid of synthetic networks to CSV")
    p.add_argument("--model", choices=("er", "sf"), required=True)
    p.add_argument("-n", "--nodes", type=int, required=True)
    p.add_argument("--k-list", required=True,
                   help="comma-separated average degrees, e.g. 2,4,6")
    p.add_argument("--replicates", type=int, default=10)
    p.add_argument("--seed-base", type=int, default=0)
    p.add_argument("--gamma-in", type=float, default=3.0)
    p.add_argument("--gamma-out", type=float, default=3.0)

    return parser


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load(path: str) -> DirectedNetwork:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return load_edge_list(fh)
    except OSError as exc:
        raise EdgeListParseError(f"cannot read {path}: {exc}") from exc


def _select_component(analysis: NetworkAnalysis, selector: str):
    comps = analysis.report.components
    if selector.isdigit():
        ident = int(selector)
        for comp in comps:
            if comp.id == ident:
                return comp
        raise AlterationError(f"no component with id {ident}")
    pools = {
        "largest": comps,
        "largest-ic": [c for c in comps if c.kind is ComponentKind.IC],
        "largest-mc": [c for c in comps if c.kind is not ComponentKind.IC],
        "largest-umc": [c for c in comps if c.kind is ComponentKind.UMC],
        "largest-smc": [c for c in comps if c.kind is ComponentKind.SMC],
    }
    if selector not in pools:
        raise AlterationError(f"unknown component selector {selector!r}")
    pool = pools[selector]
    if not pool:
        raise AlterationError(f"no component matches {selector!r}")
    return min(pool, key=lambda c: (-c.size, c.id))


def _cmd_generate(args) -> int:
    spec = GenSpec(model=args.model, n=args.nodes, avg_degree=args.avg_degree,
                   gamma_in=args.gamma_in, gamma_out=args.gamma_out,
                   seed=args.seed)
    net = generate(spec)
    header = [f"# model: {spec.model}",
              f"# avg_degree: {spec.avg_degree:g}",
              f"# seed: {spec.seed}"]
    if spec.model == "sf":
        header.append(f"# gamma_in: {spec.gamma_in:g}")
        header.append(f"# gamma_out: {spec.gamma_out:g}")
    header.append(f"# nodes: {net.n}")
    _emit("\n".join(header) + "\n" + write_edge_list(net), args.output)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    analysis = analyze(_load(args.path), args.seed)
    include = True if args.members else None
    record = reports.analysis_record(analysis, include_members=include)
    if args.format == "json":
        _emit(reports.to_json(record), args.output)
    else:
        flat = {k: v for k, v in record.items() if not isinstance(v, dict)}
        flat["n_mis_percent"] = record["mis"]["n_mis_percent"]
        flat["cc_max_percent"] = record["components"]["cc_max"]["percent"]
        flat["cc_max_kind"] = record["components"]["cc_max"]["kind"]
        lines = [f"{key}\t{flat[key]}" for key in sorted(flat)]
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_classify(args) -> int:
    analysis = analyze(_load(args.path), args.seed)
    if args.format == "json":
        labels = analysis.network.labels
        payload = {labels[v]: analysis.classes[v].value
                   for v in range(analysis.network.n)}
        _emit(reports.to_json(payload), args.output)
    else:
        _emit(reports.classes_tsv(analysis), args.output)
    return EXIT_OK


def _cmd_inputgraph(args) -> int:
    analysis = analyze(_load(args.path), args.seed)
    if args.format == "json":
        labels = analysis.network.labels
        payload = {
            phase: [{"src": labels[e.src], "dst": labels[e.dst],
                     "witness": labels[e.witness]} for e in sorted(edges)]
            for phase, edges in (("Di", analysis.input_graph.possible_edges),
                                 ("Dr", analysis.input_graph.redundant_edges))
        }
        _emit(reports.to_json(payload), args.output)
    else:
        _emit(reports.input_graph_tsv(analysis.input_graph), args.output)
    return EXIT_OK


def _cmd_components(args) -> int:
    analysis = analyze(_load(args.path), args.seed)
    include = args.members or analysis.network.n <= reports.MEMBER_LIST_LIMIT
    if args.format == "json":
        payload = reports.component_report_dict(
            analysis.report, analysis.network.labels, include)
        _emit(reports.to_json(payload), args.output)
    else:
        _emit(reports.components_tsv(
            analysis.report, analysis.network.labels, include), args.output)
    return EXIT_OK


def _cmd_alter(args) -> int:
    net = _load(args.path)
    before = analyze(net, args.seed)
    comp = _select_component(before, args.component)
    if args.to == "smc" and comp.kind is ComponentKind.IC:
        plan = ic_to_smc(net, before.matching, comp)
    elif args.to == "smc" and comp.kind is ComponentKind.UMC:
        plan = umc_to_smc(net, before.matching, comp)
    elif args.to == "ic" and comp.kind is ComponentKind.SMC:
        build = smc_to_ic_full if args.mode == "full" else smc_to_ic_single
        plan = build(net, before.matching, comp, ig=before.input_graph)
    else:
        raise AlterationError(
            f"cannot alter a {comp.kind.value} component to {args.to.upper()}"
            + ("; saturate it to SMC first" if args.to == "ic" else ""))
    after = analyze(apply_plan(net, plan), args.seed)
    plan = alteration_report(before, after, plan)

    labels = net.labels
    include = net.n <= reports.MEMBER_LIST_LIMIT
    payload = {
        "plan": reports.plan_dict(plan, labels),
        "goal_attained": plan_attains_goal(plan, after),
        "before": reports.analysis_record(before, include_members=include),
        "after": reports.analysis_record(after, include_members=include),
    }
    if args.output:
        prefix = Path(args.output)
        prefix.with_suffix(".plan.json").write_text(
            reports.to_json(payload["plan"]), encoding="utf-8")
        prefix.with_suffix(".added.tsv").write_text(
            reports.additions_tsv(plan, labels), encoding="utf-8")
        prefix.with_suffix(".before.json").write_text(
            reports.to_json(payload["before"]), encoding="utf-8")
        prefix.with_suffix(".after.json").write_text(
            reports.to_json(payload["after"]), encoding="utf-8")
    else:
        sys.stdout.write(reports.to_json(payload))
    return EXIT_OK


def _cmd_exchange(args) -> int:
    net = _load(args.path)
    try:
        node = net.id_of(args.node)
        via = net.id_of(args.via) if args.via else None
    except KeyError as exc:
        raise EdgeListParseError(f"unknown node label {exc}") from exc
    m = maximum_matching(net, args.seed)
    if via is None:
        candidates = net.in_adj[node]
        if not candidates:
            raise ExchangeError(
                f"node {args.node} has no in-edge and is in every input set")
        via = candidates[0]
    result = exchange(net, m, node, via)
    labels = net.labels
    before = sorted(v for v in range(net.n) if v not in m.matched_in)
    after = sorted(v for v in range(net.n)
                   if v not in result.matching.matched_in)
    payload = {
        "node": labels[node],
        "via": labels[via],
        "replaced": labels[result.replaced],
        "mis_before": [labels[v] for v in before],
        "mis_after": [labels[v] for v in after],
        "matching_size": result.matching.size,
    }
    _emit(reports.to_json(payload), args.output)
    return EXIT_OK


def _cmd_oracle_check(args) -> int:
    net = _load(args.path)
    guard = OracleGuard(max_nodes=args.max_nodes, max_count=args.max_count)
    truth = classify_exhaustive(net, guard)
    enum = enumerate_maximum_matchings(net, guard)
    analysis = analyze(net, args.seed)
    diffs = [
        {"node": net.labels[v], "oracle": truth[v].value,
         "pipeline": analysis.classes[v].value}
        for v in range(net.n) if truth[v] is not analysis.classes[v]
    ]
    union = frozenset().union(*enum.input_sets) if enum.input_sets else frozenset()
    payload = {
        "agree": not diffs,
        "diffs": diffs,
        "matching_count": enum.matching_count,
        "distinct_input_sets": len(enum.input_sets),
        "possible_inputs_match_union":
            union == analysis.input_graph.possible_inputs,
    }
    _emit(reports.to_json(payload), args.output)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    try:
        k_values = [float(tok) for tok in args.k_list.split(",") if tok]
    except ValueError:
        raise GenerationError(f"bad k list {args.k_list!r}")
    rows = [reports.SWEEP_HEADER]
    for k in k_values:
        for seed in range(args.seed_base, args.seed_base + args.replicates):
            spec = GenSpec(model=args.model, n=args.nodes, avg_degree=k,
                           gamma_in=args.gamma_in, gamma_out=args.gamma_out,
                           seed=seed)
            analysis = analyze(generate(spec), seed=0)
            rows.append(reports.sweep_row(args.model, args.nodes, k, seed,
                                          analysis))
    _emit("\n".join(rows) + "\n", args.output)
    return EXIT_OK


_COMMANDS = {
    "generate": _cmd_generate,
    "analyze": _cmd_analyze,
    "classify": _cmd_classify,
    "inputgraph": _cmd_inputgraph,
    "components": _cmd_components,
    "alter": _cmd_alter,
    "exchange": _cmd_exchange,
    "oracle-check": _cmd_oracle_check,
    "sweep": _cmd_sweep,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        code = _COMMANDS[args.command](args)
    except (EdgeListParseError, GenerationError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (AlterationError, ExchangeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INFEASIBLE
    except OracleInfeasibleError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ORACLE
    except NetcontrolError as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_INPUT
    elapsed_ms = (time.perf_counter() - started) * 1000
    sys.stderr.write(f"# {args.command} completed in {elapsed_ms:.1f} ms\n")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
