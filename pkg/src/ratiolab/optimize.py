"""Exact and heuristic optimization of the ratio objective over nonempty sets.

Brute force is the ground truth at small n.  The two heuristics exist as
representative polynomial-query algorithms for the indistinguishability
game; neither carries any guarantee, and on the adversarial families they
reliably fail, which is the point.

Tie-breaking is global and fixed: optimal value first, then smaller
cardinality, then ascending mask.  Dualization relies on it being identical
on both sides of the min/max reduction.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import ParameterError
from .oracles import CountingOracle, ratio
from .sampling import SeededStream
from .sets import Subset, check_guard, unchecked_subset, validate_ground_size

OPT_CSV_COLUMNS = ["method", "n", "family", "value_p", "value_q", "argset_hex", "queries", "seed"]


@dataclass(frozen=True, slots=True)
class OptResult:
    """Outcome of one optimization run: the returned set and its exact value."""

    argset: Subset
    value: Fraction
    queries_used: int
    method: str


@dataclass(frozen=True, slots=True)
class RatioProblem:
    """A ratio optimization task: optimize f/g over nonempty subsets of {0..n-1}."""

    f: CountingOracle
    g: CountingOracle
    n: int
    sense: str = "min"

    def __post_init__(self):
        validate_ground_size(self.n)
        if self.sense not in ("min", "max"):
            raise ParameterError(f"sense must be 'min' or 'max', got {self.sense!r}")


def dualize(problem: RatioProblem) -> RatioProblem:
    """Swap numerator and denominator and flip the sense.

    argmin of f/g equals argmax of g/f under the shared tie-break order, so
    solving the dual solves the original.  Evaluation raises an
    undefined-ratio error if the new denominator hits zero.
    """
    return replace(problem, f=problem.g, g=problem.f, sense="max" if problem.sense == "min" else "min")


def _search_masks(f_oracle, g_oracle, n: int, better) -> OptResult:
    best_mask = None
    best_value = None
    best_card = None
    for mask in range(1, 1 << n):
        value = ratio(unchecked_subset(mask, n), f_oracle, g_oracle)
        card = mask.bit_count()
        if best_mask is None or better(value, best_value) or (
            value == best_value and card < best_card
        ):
            best_mask, best_value, best_card = mask, value, card
    return OptResult(Subset(best_mask, n), best_value, 2 * ((1 << n) - 1), "brute")


def brute_force_min_ratio(f_oracle, g_oracle, n: int) -> OptResult:
    """Exact minimizer of f/g over all nonempty subsets, ascending-mask scan."""
    validate_ground_size(n)
    check_guard(n, "exhaustive ratio search")
    return _search_masks(f_oracle, g_oracle, n, lambda v, b: v < b)


def brute_force_max_ratio(f_oracle, g_oracle, n: int) -> OptResult:
    """Exact maximizer of f/g over all nonempty subsets, same tie-break as min."""
    validate_ground_size(n)
    check_guard(n, "exhaustive ratio search")
    return _search_masks(f_oracle, g_oracle, n, lambda v, b: v > b)


def local_search(f_oracle, g_oracle, n: int, budget: int, seed: int) -> OptResult:
    """Best-move strict-improvement descent on f/g from a seeded random start.

    Moves are add-one, drop-one (keeping the set nonempty), and swap-one.
    Every h evaluation charges two queries against `budget`; the search stops
    at a local minimum or when the next evaluation would overrun the budget,
    and returns the best point it ever evaluated.
    """
    validate_ground_size(n)
    if budget < max(n, 2):
        raise ParameterError(f"local search needs budget >= max(n, 2) = {max(n, 2)}, got {budget}")
    start_queries = f_oracle.count + g_oracle.count
    remaining = budget
    stream = SeededStream(seed, "local-search", n)

    def evaluate(mask: int) -> Fraction:
        nonlocal remaining
        remaining -= 2
        return ratio(unchecked_subset(mask, n), f_oracle, g_oracle)

    current = stream.nonempty_mask(n)
    current_value = evaluate(current)
    best = (current_value, current.bit_count(), current)

    improved = True
    while improved and remaining >= 2:
        improved = False
        inside = [i for i in range(n) if current >> i & 1]
        outside = [i for i in range(n) if not current >> i & 1]
        neighbors = [current | (1 << j) for j in outside]
        if len(inside) > 1:
            neighbors += [current & ~(1 << i) for i in inside]
        neighbors += [
            (current & ~(1 << i)) | (1 << j) for i in inside for j in outside
        ]
        move = None
        for mask in neighbors:
            if remaining < 2:
                break
            value = evaluate(mask)
            key = (value, mask.bit_count(), mask)
            if key < best:
                best = key
            if value < current_value and (move is None or key < move):
                move = key
        if move is not None:
            current_value, _, current = move
            improved = True

    used = (f_oracle.count + g_oracle.count) - start_queries
    return OptResult(Subset(best[2], n), best[0], used, "local")


def random_search(f_oracle, g_oracle, n: int, budget: int, seed: int) -> OptResult:
    """Evaluate f/g at `budget` seeded uniform nonempty subsets; keep the best."""
    validate_ground_size(n)
    if budget < 1:
        raise ParameterError(f"random search needs budget >= 1, got {budget}")
    start_queries = f_oracle.count + g_oracle.count
    stream = SeededStream(seed, "random-search", n)
    best = None
    for _ in range(budget):
        mask = stream.nonempty_mask(n)
        value = ratio(unchecked_subset(mask, n), f_oracle, g_oracle)
        key = (value, mask.bit_count(), mask)
        if best is None or key < best:
            best = key
    used = (f_oracle.count + g_oracle.count) - start_queries
    return OptResult(Subset(best[2], n), best[0], used, "random")


def solve(problem: RatioProblem, method: str = "brute", budget: int | None = None, seed: int = 0) -> OptResult:
    """Run one method on a problem; max-sense problems go through the dual.

    For max sense the heuristics minimize g/f and the value is inverted,
    which is exactly the min/max reduction.
    """
    if method not in ("brute", "local", "random"):
        raise ParameterError(f"method must be brute, local, or random, got {method!r}")
    if problem.sense == "min":
        if method == "brute":
            return brute_force_min_ratio(problem.f, problem.g, problem.n)
        if budget is None:
            raise ParameterError(f"{method} search needs a budget")
        if method == "local":
            return local_search(problem.f, problem.g, problem.n, budget, seed)
        return random_search(problem.f, problem.g, problem.n, budget, seed)
    if method == "brute":
        return brute_force_max_ratio(problem.f, problem.g, problem.n)
    dual = dualize(problem)
    res = solve(dual, method, budget, seed)
    return OptResult(res.argset, 1 / res.value, res.queries_used, res.method)


def make_algorithm(method: str, budget: int):
    """Bind a method and budget into the handle shape the game harness runs.

    The handle signature is (f_oracle, g_oracle, n, seed) -> OptResult;
    brute force ignores budget and seed.
    """
    if method not in ("brute", "local", "random"):
        raise ParameterError(f"method must be brute, local, or random, got {method!r}")

    def handle(f_oracle, g_oracle, n, seed):
        if method == "brute":
            return brute_force_min_ratio(f_oracle, g_oracle, n)
        if method == "local":
            return local_search(f_oracle, g_oracle, n, budget, seed)
        return random_search(f_oracle, g_oracle, n, budget, seed)

    return handle


def opt_result_row(result: OptResult, n: int, family: str, seed) -> tuple:
    """One OptResult as a CSV row matching OPT_CSV_COLUMNS."""
    return (
        result.method,
        n,
        family,
        result.value.numerator,
        result.value.denominator,
        result.argset.hex_mask(),
        result.queries_used,
        seed if seed is not None else "",
    )
