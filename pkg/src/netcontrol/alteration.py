"""Edge additions that flip the control type of a component.

Three procedures, all returning a plan of new edges rather than mutating
the network:

* IC -> SMC: match every input node of the component by adding one edge
  from a distinct unsaturated node to each of them.
* UMC -> SMC: saturate every unsaturated node with an edge into the
  component by pointing one new edge from each of them to a distinct input
  node.
* SMC -> IC: link the matched predecessor of a well-chosen member to an
  input node; the input node becomes control adjacent to that member, so
  its whole forward closure flips to possible input. The full variant
  covers every member with a greedy choice of closure sets.

Saturation plans grow the matching by one edge per addition and keep it
maximum; adjacency links leave the matching untouched (for a saturated
component no alternating path can reach an unsaturated node, so no
augmenting path appears).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple

from .components import ComponentKind, ControlComponent
from .errors import (AlterationError, InsufficientInputNodesError,
                     InternalInvariantError)
from .input_graph import InputGraph, build_input_graph
from .matching import Matching, input_nodes, unsaturated_nodes
from .network import DirectedNetwork, NodeId


class EdgeAddition(NamedTuple):
    src: NodeId
    dst: NodeId
    reason: str  # saturate_input | saturate_unsaturated | adjacency_link


@dataclass(frozen=True)
class AlterationPlan:
    """Ordered edge additions plus before/after bookkeeping.

    ``affected`` holds the nodes whose class the plan is meant to change:
    the component members for saturation plans, the covered closure for
    adjacency links. ``p`` and ``delta_n_d`` stay unset until
    :func:`alteration_report` fills them from full re-analyses.
    """

    target_component_id: int
    requested_kind: ComponentKind
    additions: tuple[EdgeAddition, ...]
    matching_after: Matching
    affected: frozenset[NodeId]
    mis_before: int
    mis_after: int
    p: float | None = None
    delta_n_d: float | None = None

    @property
    def edge_labels(self) -> tuple[tuple[NodeId, NodeId], ...]:
        return tuple((a.src, a.dst) for a in self.additions)


def apply_plan(net: DirectedNetwork, plan: AlterationPlan) -> DirectedNetwork:
    return net.with_edges(plan.edge_labels)


def _require_kind(comp: ControlComponent, kind: ComponentKind) -> None:
    if comp.kind is not kind:
        raise AlterationError(
            f"component {comp.id} is {comp.kind.value if comp.kind else 'unclassified'},"
            f" expected {kind.value}")


def ic_to_smc(net: DirectedNetwork, m: Matching,
              comp: ControlComponent) -> AlterationPlan:
    """Plan edges that match every input node of an input component.

    Each input node of the component receives one new edge from a distinct
    unsaturated node. Afterwards all former members are redundant and no
    unsaturated node points at them.
    """
    _require_kind(comp, ComponentKind.IC)
    inputs = input_nodes(net, m)
    targets = sorted(comp.members & inputs.nodes)
    if not targets:
        raise AlterationError(f"IC {comp.id} has no input node")
    # Donors with out-edges go first: every unsaturated node left over is
    # then a sink and cannot keep any matched component unsaturated-linked.
    donors = sorted(unsaturated_nodes(net, m),
                    key=lambda u: (net.out_degree(u) == 0, u))
    if len(donors) < len(targets):
        raise InternalInvariantError(
            "fewer unsaturated nodes than input nodes; the split is unbalanced")

    additions: list[EdgeAddition] = []
    added: set[tuple[int, int]] = set()
    new_out = dict(m.matched_out)
    available = list(donors)
    for node in targets:
        src = _take(available, lambda s: s != node
                    and not net.has_edge(s, node) and (s, node) not in added)
        if src is None:
            raise AlterationError("no feasible addition for input node "
                                  f"{node}")
        additions.append(EdgeAddition(src, node, "saturate_input"))
        added.add((src, node))
        new_out[src] = node

    after = Matching(new_out)
    return AlterationPlan(
        target_component_id=comp.id,
        requested_kind=ComponentKind.SMC,
        additions=tuple(additions),
        matching_after=after,
        affected=comp.members,
        mis_before=net.n - m.size,
        mis_after=net.n - after.size,
    )


def umc_to_smc(net: DirectedNetwork, m: Matching,
               comp: ControlComponent) -> AlterationPlan:
    """Plan edges that saturate every unsaturated node linking the component.

    Each unsaturated node with an edge into a member gets one new edge to a
    distinct input node (lowest ids first). Raises
    :class:`InsufficientInputNodesError` with the partial plan when the
    input nodes run out.
    """
    _require_kind(comp, ComponentKind.UMC)
    linkers = sorted(
        u for u in unsaturated_nodes(net, m)
        if any(x in comp.members for x in net.out_adj[u]))
    if not linkers:
        raise InternalInvariantError(
            f"UMC {comp.id} has no linking unsaturated node")
    receivers = sorted(input_nodes(net, m).nodes)

    additions: list[EdgeAddition] = []
    added: set[tuple[int, int]] = set()
    new_out = dict(m.matched_out)
    available = list(receivers)
    for u in linkers:
        dst = _take(available, lambda d: d != u
                    and not net.has_edge(u, d) and (u, d) not in added)
        if dst is None:
            raise InsufficientInputNodesError(
                f"insufficient input nodes to saturate {len(linkers)} "
                f"linking nodes", partial_additions=additions)
        additions.append(EdgeAddition(u, dst, "saturate_unsaturated"))
        added.add((u, dst))
        new_out[u] = dst

    after = Matching(new_out)
    return AlterationPlan(
        target_component_id=comp.id,
        requested_kind=ComponentKind.SMC,
        additions=tuple(additions),
        matching_after=after,
        affected=comp.members,
        mis_before=net.n - m.size,
        mis_after=net.n - after.size,
    )


def smc_to_ic_single(net: DirectedNetwork, m: Matching,
                     comp: ControlComponent,
                     ig: InputGraph | None = None) -> AlterationPlan:
    """Link one input node to the member with the widest forward closure."""
    _require_kind(comp, ComponentKind.SMC)
    if ig is None:
        ig = build_input_graph(net, m)
    closures = _closure_masks(ig, comp)
    members = sorted(comp.members)
    best = max(members, key=lambda v: (closures[v].bit_count(), -v))
    additions, covered = _link_edges(net, m, comp, [best], closures, members)
    return _adjacency_plan(net, m, comp, additions, covered)


def smc_to_ic_full(net: DirectedNetwork, m: Matching,
                   comp: ControlComponent,
                   ig: InputGraph | None = None) -> AlterationPlan:
    """Cover every member with links, greedily by uncovered closure size."""
    _require_kind(comp, ComponentKind.SMC)
    if ig is None:
        ig = build_input_graph(net, m)
    closures = _closure_masks(ig, comp)
    members = sorted(comp.members)
    uncovered = (1 << len(members)) - 1
    chosen: list[NodeId] = []
    while uncovered:
        best = max(members,
                   key=lambda v: ((closures[v] & uncovered).bit_count(), -v))
        gain = (closures[best] & uncovered).bit_count()
        if gain == 0:
            raise InternalInvariantError("greedy cover made no progress")
        chosen.append(best)
        uncovered &= ~closures[best]
    additions, covered = _link_edges(net, m, comp, chosen, closures, members)
    return _adjacency_plan(net, m, comp, additions, covered)


def _adjacency_plan(net, m, comp, additions, covered) -> AlterationPlan:
    mis = net.n - m.size
    return AlterationPlan(
        target_component_id=comp.id,
        requested_kind=ComponentKind.IC,
        additions=tuple(additions),
        matching_after=m,  # adjacency links never touch the matching
        affected=frozenset(covered),
        mis_before=mis,
        mis_after=mis,
    )


def _link_edges(net: DirectedNetwork, m: Matching, comp: ControlComponent,
                chosen: list[NodeId], closures: dict[NodeId, int],
                members: list[NodeId]):
    """One adjacency-link edge per chosen member, all to input nodes."""
    receivers = sorted(input_nodes(net, m).nodes)
    if not receivers:
        raise AlterationError("no input node available (perfect matching)")
    additions: list[EdgeAddition] = []
    added: set[tuple[int, int]] = set()
    covered: set[NodeId] = set()
    for node in chosen:
        pred = m.matched_in.get(node)
        if pred is None:
            raise InternalInvariantError(
                f"member {node} of a matched component has no matched in-edge")
        dst = next((d for d in receivers
                    if d != pred and not net.has_edge(pred, d)
                    and (pred, d) not in added), None)
        if dst is None:
            raise AlterationError(f"no feasible addition for member {node}")
        additions.append(EdgeAddition(pred, dst, "adjacency_link"))
        added.add((pred, dst))
        covered.update(_mask_nodes(closures[node], members))
    return additions, covered


def _mask_nodes(mask: int, members: list[NodeId]) -> list[NodeId]:
    return [members[i] for i in range(len(members)) if mask >> i & 1]


def _closure_masks(ig: InputGraph, comp: ControlComponent) -> dict[NodeId, int]:
    """Forward-closure bitmasks (over member indices) for every member.

    Members in the same strongly connected piece share a closure, so the
    masks are computed once per SCC of the component subgraph and combined
    along the condensation in reverse topological order.
    """
    members = sorted(comp.members)
    index = {v: i for i, v in enumerate(members)}
    adj: list[list[int]] = [[] for _ in members]
    for e in ig.all_edges():
        si, di = index.get(e.src), index.get(e.dst)
        if si is not None and di is not None:
            adj[si].append(di)

    n = len(members)
    scc_of = [-1] * n
    low = [0] * n
    order = [0] * n
    on_stack = [False] * n
    visited = [False] * n
    stack: list[int] = []
    sccs: list[list[int]] = []
    counter = 0
    for root in range(n):
        if visited[root]:
            continue
        work = [(root, 0)]
        while work:
            v, ei = work.pop()
            if ei == 0:
                visited[v] = True
                low[v] = order[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while ei < len(adj[v]):
                w = adj[v][ei]
                ei += 1
                if not visited[w]:
                    work.append((v, ei))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], order[w])
            if advanced:
                continue
            if low[v] == order[v]:
                group = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    scc_of[w] = len(sccs)
                    group.append(w)
                    if w == v:
                        break
                sccs.append(group)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])

    # Tarjan emits SCCs sinks-first, so successors are already final.
    closure = [0] * len(sccs)
    for sid, group in enumerate(sccs):
        mask = 0
        for v in group:
            mask |= 1 << v
            for w in adj[v]:
                if scc_of[w] != sid:
                    mask |= closure[scc_of[w]]
        closure[sid] = mask

    return {members[v]: closure[scc_of[v]] for v in range(n)}


def _take(available: list[int], ok) -> int | None:
    for i, cand in enumerate(available):
        if ok(cand):
            return available.pop(i)
    return None


def alteration_report(before, after, plan: AlterationPlan) -> AlterationPlan:
    """Fill ``p`` and ``delta_n_d`` from before/after pipeline analyses.

    ``before``/``after`` are :class:`~netcontrol.pipeline.NetworkAnalysis`
    values for the original and augmented network. A node counts toward
    ``delta_n_d`` when it moved between possible-input and redundant.
    """
    n = before.network.n
    if after.network.n != n:
        raise ValueError("before/after analyses cover different networks")
    changed = sum(
        1 for v in range(n)
        if before.classes[v].possible_input != after.classes[v].possible_input)
    mis_before = before.report.mis_size
    mis_after = after.report.mis_size
    if mis_after != plan.mis_after:
        raise InternalInvariantError(
            f"re-analysis found {mis_after} input nodes, plan expected "
            f"{plan.mis_after}")
    return replace(plan,
                   p=len(plan.additions) / before.report.edge_count,
                   delta_n_d=changed / n,
                   mis_before=mis_before,
                   mis_after=mis_after)


def plan_attains_goal(plan: AlterationPlan, after) -> bool:
    """Check the plan's outcome against the re-analysis ``after``.

    Saturation plans must leave every former member redundant with no
    unsaturated node pointing at it; adjacency plans must turn the whole
    covered closure into possible inputs.
    """
    if plan.requested_kind is ComponentKind.SMC:
        if any(after.classes[v].possible_input for v in plan.affected):
            return False
        net = after.network
        for u in unsaturated_nodes(net, after.matching):
            if any(x in plan.affected for x in net.out_adj[u]):
                return False
        return True
    return all(after.classes[v].possible_input for v in plan.affected)
