"""Stable serialization of analyses, plans, and sweep rows.

All numbers are rounded the same way everywhere: percentages to two
decimals (half away from zero), plain ratios to six significant digits.
JSON is dumped with sorted keys so equal inputs give byte-equal output.
"""

from __future__ import annotations

import json
from decimal import ROUND_HALF_UP, Decimal

from .alteration import AlterationPlan
from .components import ComponentReport
from .input_graph import InputGraph
from .pipeline import NetworkAnalysis

MEMBER_LIST_LIMIT = 10_000  # suppress per-node listings above this size


def round_percent(fraction: float) -> float:
    """``fraction`` as a percentage with two decimals, half away from zero."""
    quant = (Decimal(repr(fraction)) * 100).quantize(
        Decimal("0.01"), rounding=ROUND_HALF_UP)
    return float(quant)


def round_ratio(value: float) -> float:
    return float(f"{value:.6g}")


def to_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def component_report_dict(report: ComponentReport, labels,
                          include_members: bool) -> dict:
    comps = []
    for comp in report.components:
        entry = {"id": comp.id, "size": comp.size, "kind": comp.kind.value}
        if include_members:
            entry["members"] = [labels[v] for v in comp.sorted_members()]
        comps.append(entry)
    return {
        "n": report.n,
        "l": report.edge_count,
        "avg_degree": round_ratio(report.avg_degree),
        "n_mis_percent": round_percent(report.n_mis_fraction),
        "mis_size": report.mis_size,
        "perfectly_matched": report.perfectly_matched,
        "component_count": len(report.components),
        "kind_counts": report.kind_counts(),
        "components": comps,
        "cc_max": {
            "id": report.cc_max.id,
            "size": report.cc_max.size,
            "percent": round_percent(report.cc_max_fraction),
            "kind": report.cc_max.kind.letter,
        },
    }


def analysis_record(analysis: NetworkAnalysis,
                    include_members: bool | None = None) -> dict:
    net = analysis.network
    if include_members is None:
        include_members = net.n <= MEMBER_LIST_LIMIT
    record = {
        "n": net.n,
        "l": net.edge_count,
        "avg_degree": round_ratio(analysis.report.avg_degree),
        "self_loops": net.self_loop_count(),
        "seed": analysis.seed,
        "matching_size": analysis.matching.size,
        "mis": {
            "size": analysis.report.mis_size,
            "n_mis_percent": round_percent(analysis.report.n_mis_fraction),
            "perfectly_matched": analysis.input_set.perfectly_matched,
        },
        "input_graph_edges": analysis.input_graph.edge_count,
        "possible_input_percent": round_percent(
            len(analysis.input_graph.possible_inputs) / net.n),
        "components": component_report_dict(
            analysis.report, net.labels, include_members),
    }
    if include_members:
        record["mis"]["members"] = [net.labels[v] for v in analysis.input_set]
        record["node_classes"] = {
            net.labels[v]: analysis.classes[v].value for v in range(net.n)}
    return record


def plan_dict(plan: AlterationPlan, labels) -> dict:
    payload = {
        "target_component_id": plan.target_component_id,
        "requested_kind": plan.requested_kind.value,
        "additions": [
            {"src": labels[a.src], "dst": labels[a.dst], "reason": a.reason}
            for a in plan.additions
        ],
        "edge_count": len(plan.additions),
        "mis_before": plan.mis_before,
        "mis_after": plan.mis_after,
    }
    if plan.p is not None:
        payload["p_percent"] = round_percent(plan.p)
    if plan.delta_n_d is not None:
        payload["delta_n_d_percent"] = round_percent(plan.delta_n_d)
    return payload


def additions_tsv(plan: AlterationPlan, labels) -> str:
    lines = ["# src\tdst\treason"]
    lines += [f"{labels[a.src]}\t{labels[a.dst]}\t{a.reason}"
              for a in plan.additions]
    return "\n".join(lines) + "\n"


def input_graph_tsv(ig: InputGraph) -> str:
    labels = ig.network.labels
    lines = ["# from\tto\twitness\tphase"]
    for phase, edges in (("Di", ig.possible_edges), ("Dr", ig.redundant_edges)):
        for e in sorted(edges):
            lines.append(
                f"{labels[e.src]}\t{labels[e.dst]}\t{labels[e.witness]}\t{phase}")
    return "\n".join(lines) + "\n"


def components_tsv(report: ComponentReport, labels,
                   include_members: bool) -> str:
    lines = ["# id\tsize\tkind" + ("\tmembers" if include_members else "")]
    for comp in report.components:
        row = f"{comp.id}\t{comp.size}\t{comp.kind.value}"
        if include_members:
            row += "\t" + ",".join(labels[v] for v in comp.sorted_members())
        lines.append(row)
    return "\n".join(lines) + "\n"


def classes_tsv(analysis: NetworkAnalysis) -> str:
    labels = analysis.network.labels
    lines = ["# node\tclass\tpossible_input"]
    for v in range(analysis.network.n):
        cls = analysis.classes[v]
        lines.append(
            f"{labels[v]}\t{cls.value}\t{'yes' if cls.possible_input else 'no'}")
    return "\n".join(lines) + "\n"


SWEEP_HEADER = "model,N,k,seed,cc_max_frac,cc_count,n_p,cc_kind"


def sweep_row(model: str, n: int, k: float, seed: int,
              analysis: NetworkAnalysis) -> str:
    report = analysis.report
    n_p = len(analysis.input_graph.possible_inputs) / n
    return ",".join([
        model,
        str(n),
        f"{k:g}",
        str(seed),
        f"{round_ratio(report.cc_max_fraction):g}",
        str(len(report.components)),
        f"{round_ratio(n_p):g}",
        report.cc_max.kind.letter,
    ])
