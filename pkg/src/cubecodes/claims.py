"""Runnable checks for the mathematical claims this library is built around.

Each runner exercises one claim at configurable desk-scale bounds and
returns a structured report: the parameters actually used, a verdict, and
the evidence counts.  A runner never reports pass when its search budget
was exhausted; that outcome is a skip, recorded as such.

Claim ids (stable, used by the command line):
  prop-count        weight-level counting formulas for the cube families
  thm-main          Lucas cubes admit a perfect code iff n <= 3
  lemma-0n          low-weight neighbor structure behind the n >= 6 argument
  arith-lemma       no odd n has 6 dividing n^2 + 1
  arith-thm         counting arithmetic behind the final divisibility clash
  prop-qn-avoid     no perfect code of Q_n avoids cyclic runs 1^s, 2 <= s <= n-1
  prop-1n           coset construction in the graph missing only 1^n
  prop-1n12         punctured-code constructions two graphs further down
  fib-nonexistence  Fibonacci cubes admit a perfect code iff n <= 3
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .words import (
    BitWord,
    FIBONACCI,
    LUCAS,
    HYPERCUBE,
    count_weight_level,
    enumerate_family,
    has_circular_ones_run,
)
from .graphs import build_graph
from .codes import (
    STATUS_EXHAUSTED,
    STATUS_FOUND,
    find_perfect_code,
    is_perfect_code,
    search_constrained,
)
from .hamming import S_KIND_FULL, S_KIND_MINUS_1, S_KIND_MINUS_2, construct_gen_lucas_code

VERDICT_PASS = "pass"
VERDICT_FAIL = "fail"
VERDICT_SKIPPED = "skipped"


@dataclass
class ClaimReport:
    claim: str
    params: dict
    verdict: str
    evidence: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": self.params,
            "verdict": self.verdict,
            "evidence": self.evidence,
        }


class _Failure(Exception):
    def __init__(self, **evidence):
        self.evidence = evidence


class _BudgetSkip(Exception):
    def __init__(self, **evidence):
        self.evidence = evidence


def _report(claim: str, params: dict, body) -> ClaimReport:
    evidence: dict = {}
    try:
        body(evidence)
    except _Failure as f:
        evidence.update(f.evidence)
        return ClaimReport(claim, params, VERDICT_FAIL, evidence)
    except _BudgetSkip as s:
        evidence.update(s.evidence)
        evidence["reason"] = "budget"
        return ClaimReport(claim, params, VERDICT_SKIPPED, evidence)
    return ClaimReport(claim, params, VERDICT_PASS, evidence)


def _require(condition: bool, **evidence):
    if not condition:
        raise _Failure(**evidence)


def _search_verdict(outcome, expect: str, **evidence):
    """Map an engine outcome onto claim bookkeeping, honoring budgets."""
    if outcome.status == "budget-exceeded":
        raise _BudgetSkip(nodes=outcome.nodes, **evidence)
    _require(outcome.status == expect, status=outcome.status, **evidence)
    return outcome


# ---------------------------------------------------------------------------
# prop-count
# ---------------------------------------------------------------------------

def check_weight_counts(n_max: int = 14) -> ClaimReport:
    """Closed-form weight-level counts match enumeration, plus spot formulas."""
    params = {"n_max": n_max, "spot_n_range": [6, 20]}

    def body(evidence):
        levels = 0
        for n in range(n_max + 1):
            lucas = enumerate_family(LUCAS, n)
            fib = enumerate_family(FIBONACCI, n)
            for k in range(n + 1):
                by_weight = sum(1 for w in lucas if w.weight() == k)
                _require(count_weight_level(LUCAS, n, k) == by_weight, family="lucas", n=n, k=k)
                by_weight = sum(1 for w in fib if w.weight() == k)
                _require(count_weight_level(FIBONACCI, n, k) == by_weight, family="fib", n=n, k=k)
                lead = sum(1 for w in lucas if w.weight() == k and n and w.bit(1) == 1)
                _require(
                    count_weight_level(LUCAS, n, k, leading_one=True) == lead,
                    family="lucas^1", n=n, k=k,
                )
                levels += 3
        for n in range(6, 21):
            _require(count_weight_level(LUCAS, n, 2) == n * (n - 3) // 2, spot="k2", n=n)
            _require(count_weight_level(LUCAS, n, 3) == n * (n - 4) * (n - 5) // 6, spot="k3", n=n)
            _require(count_weight_level(LUCAS, n, 2, leading_one=True) == n - 3, spot="k2lead", n=n)
        _require(count_weight_level(LUCAS, 5, 2) == 5, spot="lambda_5_2")
        evidence["levels_checked"] = levels
        evidence["spot_checks"] = 3 * 15 + 1

    return _report("prop-count", params, body)


# ---------------------------------------------------------------------------
# thm-main / fib-nonexistence
# ---------------------------------------------------------------------------

def _nonexistence_scan(claim, family, family_name, n_max, node_budget, time_budget):
    params = {"family": family_name, "n_max": n_max}

    def body(evidence):
        nodes = 0
        for n in range(min(3, n_max) + 1):
            graph = build_graph(family, n)
            outcome = _search_verdict(
                find_perfect_code(
                    graph, "first", node_budget=node_budget, time_budget=time_budget
                ),
                STATUS_FOUND,
                n=n,
            )
            _require(is_perfect_code(graph, outcome.witness), n=n, stage="revalidate")
            if family is LUCAS:
                _require(
                    [str(w) for w in outcome.witness.words()] == ["0" * n],
                    n=n,
                    witness=[str(w) for w in outcome.witness.words()],
                )
            nodes += outcome.nodes
        for n in range(4, n_max + 1):
            graph = build_graph(family, n)
            outcome = _search_verdict(
                find_perfect_code(
                    graph, "prove_none", node_budget=node_budget, time_budget=time_budget
                ),
                STATUS_EXHAUSTED,
                n=n,
            )
            nodes += outcome.nodes
        evidence["found_up_to"] = min(3, n_max)
        evidence["exhausted_range"] = [4, n_max]
        evidence["nodes"] = nodes

    return _report(claim, params, body)


def check_lucas_nonexistence(
    n_max: int = 16,
    node_budget: int | None = None,
    time_budget: float | None = None,
) -> ClaimReport:
    """Lucas cubes: perfect code found for n <= 3, none exists for 4..n_max."""
    return _nonexistence_scan("thm-main", LUCAS, "lucas", n_max, node_budget, time_budget)


def check_fibonacci_nonexistence(
    n_max: int = 14,
    node_budget: int | None = None,
    time_budget: float | None = None,
) -> ClaimReport:
    """Fibonacci cubes: perfect code found for n <= 3, none exists for 4..n_max."""
    return _nonexistence_scan("fib-nonexistence", FIBONACCI, "fib", n_max, node_budget, time_budget)


# ---------------------------------------------------------------------------
# lemma-0n
# ---------------------------------------------------------------------------

def check_low_weight_structure(n_set=tuple(range(6, 15))) -> ClaimReport:
    """Neighbor counts between low weight levels of the Lucas cube."""
    params = {"n_set": list(n_set)}

    def body(evidence):
        for n in n_set:
            if n < 6:
                raise _Failure(n=n, stage="precondition n >= 6")
            graph = build_graph(LUCAS, n)
            starts_with_one = lambda w: w.bit(1) == 1
            # Subset comparisons: an empty weight level (e.g. level 4 at
            # n = 6, 7) satisfies the claim vacuously.
            _require(set(graph.level_degree_profile(2, 1)) <= {2}, n=n, check="a")
            top = graph.id_of(BitWord(n, 1 << (n - 1)))
            weight2 = sum(
                1 for j in graph.neighbor_ids(top) if graph.vertices[j].bit_count() == 2
            )
            _require(weight2 == n - 3, n=n, check="b", got=weight2)
            _require(set(graph.level_degree_profile(3, 2)) <= {3}, n=n, check="c")
            _require(set(graph.level_degree_profile(4, 3)) <= {4}, n=n, check="d")
            _require(
                set(graph.level_degree_profile(3, 2, restrict=starts_with_one)) <= {2},
                n=n,
                check="e",
            )
            if n % 2 == 1:
                level2 = count_weight_level(LUCAS, n, 2)
                _require(
                    level2 - (n - 3) - (n - 1) // 2 == (n * n - 6 * n + 7) // 2,
                    n=n,
                    check="f",
                )
        evidence["n_set"] = list(n_set)
        evidence["checks"] = ["a", "b", "c", "d", "e", "f(odd n)"]

    return _report("lemma-0n", params, body)


# ---------------------------------------------------------------------------
# arith-lemma / arith-thm
# ---------------------------------------------------------------------------

def check_odd_square_arithmetic(n_max: int = 10**6) -> ClaimReport:
    """No odd integer n has 6 dividing n^2 + 1."""
    params = {"n_max": n_max}

    def body(evidence):
        checked = 0
        for n in range(1, n_max + 1, 2):
            _require((n * n + 1) % 6 != 0, n=n)
            checked += 1
        evidence["odd_integers_checked"] = checked

    return _report("arith-lemma", params, body)


def check_cover_count_arithmetic(n_max: int = 10**6) -> ClaimReport:
    """The counting arithmetic behind the divisibility contradiction.

    For n = 6p + 3 the putative weight-3 leftover count n(n^2 - 10n + 23)/6
    is an odd integer, so never divisible by 4; 3 divides n(n - 3) exactly
    when 3 divides n; and the leftover count equals the difference of the
    closed-form level sizes.
    """
    params = {"n_max": n_max}

    def body(evidence):
        values = 0
        for n in range(9, n_max + 1, 6):
            product = n * (n * n - 10 * n + 23)
            _require(product % 6 == 0, n=n, stage="integrality")
            e_size = product // 6
            _require(e_size % 2 == 1, n=n, stage="oddness", value=e_size)
            p = (n - 3) // 6
            _require(
                (2 * p + 1) * (18 * p * p - 12 * p + 1) == e_size,
                n=n,
                stage="factored form",
            )
            values += 1
        for n in range(n_max + 1):
            _require((n * (n - 3) % 3 == 0) == (n % 3 == 0), n=n, stage="mult of 3")
        for n in range(6, 21):
            lhs = Fraction(count_weight_level(LUCAS, n, 3)) - Fraction(
                count_weight_level(LUCAS, n, 2), 3
            )
            _require(
                lhs == Fraction(n * (n * n - 10 * n + 23), 6),
                n=n,
                stage="level difference",
            )
        evidence["values_checked"] = values

    return _report("arith-thm", params, body)


# ---------------------------------------------------------------------------
# prop-qn-avoid
# ---------------------------------------------------------------------------

def check_hypercube_avoidance(
    n_set=(3, 7),
    node_budget: int | None = None,
    time_budget: float | None = None,
) -> ClaimReport:
    """No perfect code of Q_n has all codewords free of cyclic runs 1^s."""
    params = {"n_set": list(n_set)}

    def body(evidence):
        counts = {}
        for n in n_set:
            graph = build_graph(HYPERCUBE, n)
            for s in range(2, n):
                outcome = search_constrained(
                    graph,
                    lambda w, s=s: has_circular_ones_run(w, s),
                    "prove_none",
                    node_budget=node_budget,
                    time_budget=time_budget,
                )
                _search_verdict(outcome, STATUS_EXHAUSTED, n=n, s=s)
            # Mechanism: in every perfect code the dominator of the all-ones
            # word is the all-ones word or a weight n-1 word (whose cyclic
            # run is 1^{n-1}).
            enumeration = find_perfect_code(
                graph,
                "enumerate",
                collect_witnesses=True,
                node_budget=node_budget,
                time_budget=time_budget,
            )
            if enumeration.status == "budget-exceeded":
                raise _BudgetSkip(n=n, stage="enumeration")
            all_ones = (1 << n) - 1
            for witness in enumeration.witnesses:
                dominators = [
                    w for w in witness.words() if (w.bits ^ all_ones).bit_count() <= 1
                ]
                _require(len(dominators) == 1, n=n, stage="unique dominator")
                _require(dominators[0].weight() >= n - 1, n=n, stage="dominator weight")
            counts[str(n)] = enumeration.count
        evidence["perfect_code_counts"] = counts
        evidence["s_checked"] = {str(n): [2, n - 1] for n in n_set}

    return _report("prop-qn-avoid", params, body)


# ---------------------------------------------------------------------------
# prop-1n / prop-1n12
# ---------------------------------------------------------------------------

def check_full_run_construction(p_set=(2, 3, 4)) -> ClaimReport:
    """The translated Hamming code is perfect in the graph missing only 1^n."""
    params = {"p_set": list(p_set)}

    def body(evidence):
        orders = {}
        for p in p_set:
            code = construct_gen_lucas_code(p, S_KIND_FULL)
            graph = code.graph
            n = graph.n
            _require(len(graph) == (1 << n) - 1, p=p, stage="graph order")
            _require(len(code) == (1 << n) // (n + 1), p=p, stage="code order")
            _require(is_perfect_code(graph, code), p=p, stage="perfect")
            orders[str(p)] = {
                "code": len(code),
                "graph": len(graph),
                "connected": graph.is_connected(),
            }
        evidence["orders"] = orders

    return _report("prop-1n", params, body)


def check_punctured_constructions(p_set=(2, 3, 4)) -> ClaimReport:
    """The Hamming code minus 1^n is perfect two forbidden-run lengths down."""
    params = {"p_set": list(p_set)}

    def body(evidence):
        from .hamming import build_hamming

        orders = {}
        for p in p_set:
            for s_kind in (S_KIND_MINUS_1, S_KIND_MINUS_2):
                code = construct_gen_lucas_code(p, s_kind)
                graph = code.graph
                n = graph.n
                _require(
                    len(code) == (1 << n) // (n + 1) - 1, p=p, s_kind=s_kind, stage="order"
                )
                _require(is_perfect_code(graph, code), p=p, s_kind=s_kind, stage="perfect")
                # Decoding any vertex of the graph lands inside the graph.
                hamming = build_hamming(p)
                for bits in graph.vertices:
                    decoded = hamming.decode(BitWord(n, bits))
                    _require(
                        decoded.bits in graph.index,
                        p=p,
                        s_kind=s_kind,
                        stage="decode closure",
                        vertex=str(BitWord(n, bits)),
                    )
                orders[f"p{p},{s_kind}"] = {
                    "code": len(code),
                    "graph": len(graph),
                    "connected": graph.is_connected(),
                }
        evidence["orders"] = orders

    return _report("prop-1n12", params, body)


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

CLAIM_RUNNERS = {
    "prop-count": check_weight_counts,
    "thm-main": check_lucas_nonexistence,
    "lemma-0n": check_low_weight_structure,
    "arith-lemma": check_odd_square_arithmetic,
    "arith-thm": check_cover_count_arithmetic,
    "prop-qn-avoid": check_hypercube_avoidance,
    "prop-1n": check_full_run_construction,
    "prop-1n12": check_punctured_constructions,
    "fib-nonexistence": check_fibonacci_nonexistence,
}

CLAIM_IDS = tuple(CLAIM_RUNNERS)


def run_claim(claim_id: str, **params) -> ClaimReport:
    """Run one claim check by id, forwarding only the given parameters."""
    try:
        runner = CLAIM_RUNNERS[claim_id]
    except KeyError:
        raise ValueError(
            f"unknown claim id {claim_id!r}; valid ids: {', '.join(CLAIM_IDS)}"
        ) from None
    return runner(**params)


def run_all(**params) -> list[ClaimReport]:
    """Run every claim check; parameters are forwarded where they apply."""
    import inspect

    reports = []
    for claim_id, runner in CLAIM_RUNNERS.items():
        accepted = inspect.signature(runner).parameters
        kwargs = {k: v for k, v in params.items() if k in accepted}
        reports.append(runner(**kwargs))
    return reports
