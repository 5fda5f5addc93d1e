"""Perfect-code predicates and an exact-cover search over induced graphs.

A perfect code is a vertex set whose closed neighborhoods partition the
vertex set.  Deciding or enumerating perfect codes is an exact-cover
problem: the universe is V(G) and the candidate blocks are the closed
neighborhoods N[v].  The search below is backtracking with the
minimum-remaining-values rule: it always branches on the uncovered vertex
with the fewest usable covering blocks (ties to the lowest vertex id) and
eliminates conflicting blocks with bitmap arithmetic.  Forced moves
(a single usable block) are applied iteratively, not recursively.

Verdicts are three-valued: a search that hits its node or time budget
reports budget-exceeded and never masquerades as an exhaustion proof.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from .limits import ResourceLimitError, default_node_budget, default_time_budget, engine_cap
from .words import BitWord
from .graphs import InducedGraph, VertexSet

# A code is just a vertex set used as one.
CodeSet = VertexSet

MODE_FIRST = "first"
MODE_PROVE_NONE = "prove_none"
MODE_ENUMERATE = "enumerate"

STATUS_FOUND = "found"
STATUS_EXHAUSTED = "exhausted"
STATUS_ENUMERATED = "enumerated"
STATUS_BUDGET = "budget-exceeded"


def _as_code(graph: InducedGraph, code) -> VertexSet:
    if isinstance(code, VertexSet):
        if code.graph is not graph:
            raise ValueError("code belongs to a different graph")
        return code
    return VertexSet.from_words(graph, code)


def is_code(graph: InducedGraph, code) -> bool:
    """True iff the members' closed neighborhoods are pairwise disjoint."""
    code = _as_code(graph, code)
    cover = 0
    for i in code.ids():
        nb = graph.closed_mask(i)
        if cover & nb:
            return False
        cover |= nb
    return True


def is_dominating(graph: InducedGraph, code) -> bool:
    """True iff every vertex lies in some member's closed neighborhood."""
    code = _as_code(graph, code)
    cover = 0
    for i in code.ids():
        cover |= graph.closed_mask(i)
    return cover == (1 << len(graph)) - 1


def is_perfect_code(graph: InducedGraph, code) -> bool:
    """True iff the closed neighborhoods of the members partition V(G)."""
    code = _as_code(graph, code)
    cover = 0
    disjoint = True
    for i in code.ids():
        nb = graph.closed_mask(i)
        if cover & nb:
            disjoint = False
            break
        cover |= nb
    partitions = disjoint and cover == (1 << len(graph)) - 1
    # The definitional route and the code+domination route must agree.
    both = is_code(graph, code) and is_dominating(graph, code)
    assert partitions == both, "partition check disagrees with code+domination check"
    return partitions


@dataclass
class SearchOutcome:
    """Result of a perfect-code search.

    status is one of found, exhausted, enumerated, budget-exceeded;
    exhausted is only ever reported after a provably complete search.
    """

    status: str
    witness: VertexSet | None = None
    count: int | None = None
    witnesses: list[VertexSet] | None = None
    nodes: int = 0
    millis: int = 0
    seed: int = 0

    def to_json_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.witness is not None:
            out["witness"] = [str(w) for w in self.witness.words()]
        if self.count is not None:
            out["count"] = self.count
        out["nodes"] = self.nodes
        out["millis"] = self.millis
        out["seed"] = self.seed
        return out


class _BudgetHit(Exception):
    pass


class _Found(Exception):
    def __init__(self, chosen: tuple[int, ...]):
        self.chosen = chosen


class _CoverSearch:
    """One backtracking run over a fixed block table."""

    def __init__(self, masks, order, node_budget, deadline, stop_at_first, collect):
        self.masks = masks
        self.order = order
        self.node_budget = node_budget
        self.deadline = deadline
        self.stop_at_first = stop_at_first
        self.nodes = 0
        self.count = 0
        self.solutions: list[tuple[int, ...]] | None = [] if collect else None
        self.chosen: list[int] = []
        self._ball2: dict[int, int] = {}

    def conflicts(self, v: int) -> int:
        """Vertices whose block overlaps N[v] (the radius-2 ball around v)."""
        m = self._ball2.get(v)
        if m is None:
            m = 0
            mm = self.masks[v]
            while mm:
                low = mm & -mm
                m |= self.masks[low.bit_length() - 1]
                mm ^= low
            self._ball2[v] = m
        return m

    def _tick(self):
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise _BudgetHit()
        if self.deadline is not None and self.nodes % 1024 == 0:
            if time.monotonic() > self.deadline:
                raise _BudgetHit()

    def run(self, uncovered: int, available: int):
        masks = self.masks
        pushed = 0
        while True:
            self._tick()
            if uncovered == 0:
                self.count += 1
                if self.solutions is not None:
                    self.solutions.append(tuple(self.chosen))
                if self.stop_at_first:
                    raise _Found(tuple(self.chosen))
                break
            # MRV scan over uncovered vertices; stop early on a forced block.
            best_count = None
            best_cands = 0
            m = uncovered
            while m:
                low = m & -m
                u = low.bit_length() - 1
                m ^= low
                cands = masks[u] & available
                c = cands.bit_count()
                if c == 0:
                    best_count = 0
                    break
                if best_count is None or c < best_count:
                    best_count = c
                    best_cands = cands
                    if c == 1:
                        break
            if best_count == 0:
                break  # some vertex can no longer be covered
            if best_count == 1:
                v = best_cands.bit_length() - 1
                self.chosen.append(v)
                pushed += 1
                uncovered &= ~masks[v]
                available &= ~self.conflicts(v)
                continue
            for v in self._ordered(best_cands):
                self.chosen.append(v)
                self.run(uncovered & ~masks[v], available & ~self.conflicts(v))
                self.chosen.pop()
            break
        for _ in range(pushed):
            self.chosen.pop()

    def _ordered(self, cands: int) -> list[int]:
        out = []
        while cands:
            low = cands & -cands
            out.append(low.bit_length() - 1)
            cands ^= low
        if self.order is not None:
            out.sort(key=self.order.__getitem__)
        return out


def _closed_masks(graph: InducedGraph) -> list[int]:
    cap = engine_cap()
    if len(graph) > cap:
        raise ResourceLimitError(
            f"search on {len(graph)} vertices exceeds the engine cap of {cap}"
            " (raise CUBECODES_ENGINE_CAP to override)",
            "engine_cap",
            cap,
        )
    return [graph.closed_mask(i) for i in range(len(graph))]


def _normalize_mode(mode: str) -> str:
    mode = mode.replace("-", "_")
    if mode not in (MODE_FIRST, MODE_PROVE_NONE, MODE_ENUMERATE):
        raise ValueError(f"unknown search mode {mode!r}")
    return mode


def _candidate_order(n_vertices: int, seed: int) -> list[int] | None:
    if seed == 0:
        return None
    ranks = list(range(n_vertices))
    random.Random(seed).shuffle(ranks)
    return ranks


def search_constrained(
    graph: InducedGraph,
    forbidden: Callable[[BitWord], bool] | None,
    mode: str = MODE_FIRST,
    *,
    node_budget: int | None = None,
    time_budget: float | None = None,
    seed: int = 0,
    threads: int = 1,
    collect_witnesses: bool = False,
) -> SearchOutcome:
    """Search perfect codes whose codewords all avoid the forbidden predicate.

    Blocks N[v] with forbidden(v) are removed from the cover; the universe
    to dominate is still all of V(G).  Budgets default to the
    CUBECODES_BUDGET_NODES / CUBECODES_BUDGET_SECONDS environment caps.
    With threads > 1 the top-level branches run on a thread pool and any
    node budget applies to each branch separately; verdicts and counts do
    not depend on the pool size.
    """
    mode = _normalize_mode(mode)
    masks = _closed_masks(graph)
    n_vertices = len(masks)
    if node_budget is None:
        node_budget = default_node_budget()
    if time_budget is None:
        time_budget = default_time_budget()

    allowed = 0
    if forbidden is None:
        allowed = (1 << n_vertices) - 1
    else:
        for i in range(n_vertices):
            if not forbidden(graph.word(i)):
                allowed |= 1 << i

    order = _candidate_order(n_vertices, seed)
    full = (1 << n_vertices) - 1
    deadline = time.monotonic() + time_budget if time_budget is not None else None
    started = time.monotonic()
    stop_at_first = mode in (MODE_FIRST, MODE_PROVE_NONE)
    collect = collect_witnesses and mode == MODE_ENUMERATE

    def finish(status, *, chosen=None, count=None, solutions=None, nodes=0):
        millis = int((time.monotonic() - started) * 1000)
        witness = VertexSet.from_ids(graph, chosen) if chosen is not None else None
        witnesses = None
        if solutions is not None:
            witnesses = [VertexSet.from_ids(graph, sol) for sol in sorted(solutions)]
        return SearchOutcome(
            status=status,
            witness=witness,
            count=count,
            witnesses=witnesses,
            nodes=nodes,
            millis=millis,
            seed=seed,
        )

    if threads <= 1 or mode == MODE_FIRST:
        search = _CoverSearch(masks, order, node_budget, deadline, stop_at_first, collect)
        try:
            search.run(full, allowed)
        except _Found as hit:
            return finish(STATUS_FOUND, chosen=hit.chosen, nodes=search.nodes)
        except _BudgetHit:
            return finish(STATUS_BUDGET, nodes=search.nodes)
        if mode == MODE_ENUMERATE:
            return finish(
                STATUS_ENUMERATED,
                count=search.count,
                solutions=search.solutions,
                nodes=search.nodes,
            )
        return finish(STATUS_EXHAUSTED, nodes=search.nodes)

    # Top-level fan-out: branch once on the root MRV vertex, then run each
    # branch as an independent search.
    root = _CoverSearch(masks, order, None, None, False, False)
    if full == 0:
        return finish(STATUS_ENUMERATED if mode == MODE_ENUMERATE else STATUS_FOUND,
                      chosen=None if mode == MODE_ENUMERATE else (),
                      count=1 if mode == MODE_ENUMERATE else None,
                      nodes=1)
    best_count = None
    best_cands = 0
    m = full
    while m:
        low = m & -m
        u = low.bit_length() - 1
        m ^= low
        cands = masks[u] & allowed
        c = cands.bit_count()
        if best_count is None or c < best_count:
            best_count = c
            best_cands = cands
            if c <= 1:
                break
    branches = root._ordered(best_cands)

    def run_branch(v: int):
        sub = _CoverSearch(masks, order, node_budget, deadline, stop_at_first, collect)
        try:
            sub.run(full & ~masks[v], allowed & ~root.conflicts(v))
        except _Found as hit:
            return ("found", (v,) + hit.chosen, sub)
        except _BudgetHit:
            return ("budget", None, sub)
        return ("done", None, sub)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(run_branch, branches))

    nodes = 1 + sum(sub.nodes for _, _, sub in results)
    for status, chosen, _ in results:
        if status == "found":
            return finish(STATUS_FOUND, chosen=chosen, nodes=nodes)
    if any(status == "budget" for status, _, _ in results):
        return finish(STATUS_BUDGET, nodes=nodes)
    if mode == MODE_ENUMERATE:
        count = sum(sub.count for _, _, sub in results)
        solutions = None
        if collect:
            solutions = []
            for v, (_, _, sub) in zip(branches, results):
                solutions.extend((v,) + sol for sol in sub.solutions)
        return finish(STATUS_ENUMERATED, count=count, solutions=solutions, nodes=nodes)
    return finish(STATUS_EXHAUSTED, nodes=nodes)


def find_perfect_code(graph: InducedGraph, mode: str = MODE_FIRST, **kwargs) -> SearchOutcome:
    """Decide, refute, or enumerate perfect codes of the graph."""
    return search_constrained(graph, None, mode, **kwargs)


# ---------------------------------------------------------------------------
# Independent oracles (used to cross-check the engine, never by it)
# ---------------------------------------------------------------------------

def enumerate_perfect_codes_naive(graph: InducedGraph, limit: int = 24) -> int:
    """Count perfect codes by scanning all 2^|V| vertex subsets."""
    n_vertices = len(graph)
    if n_vertices > limit:
        raise ResourceLimitError(
            f"naive scan over 2^{n_vertices} subsets refused (limit 2^{limit})",
            "naive_subset_limit",
            limit,
        )
    masks = [graph.closed_mask(i) for i in range(n_vertices)]
    full = (1 << n_vertices) - 1
    count = 0
    for subset in range(1 << n_vertices):
        cover = 0
        m = subset
        ok = True
        while m:
            low = m & -m
            nb = masks[low.bit_length() - 1]
            if cover & nb:
                ok = False
                break
            cover |= nb
            m ^= low
        if ok and cover == full:
            count += 1
    return count


def count_perfect_codes_dfs(
    graph: InducedGraph,
    forbidden: Callable[[BitWord], bool] | None = None,
) -> int:
    """Count perfect codes by always covering the lowest uncovered vertex.

    Structurally unlike the engine: no candidate ordering, no conflict
    propagation, no forced-move handling; disjointness is re-checked
    against the covered set at every step.
    """
    masks = [graph.closed_mask(i) for i in range(len(graph))]
    allowed = 0
    for i in range(len(graph)):
        if forbidden is None or not forbidden(graph.word(i)):
            allowed |= 1 << i
    full = (1 << len(graph)) - 1

    def rec(covered: int) -> int:
        if covered == full:
            return 1
        low = (~covered & full) & -(~covered & full)
        u = low.bit_length() - 1
        total = 0
        cands = masks[u] & allowed
        while cands:
            lowc = cands & -cands
            v = lowc.bit_length() - 1
            cands ^= lowc
            nb = masks[v]
            if not covered & nb:
                total += rec(covered | nb)
        return total

    return rec(0)
