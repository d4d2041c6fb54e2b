"""Batch checks over generated instances.

Each instance is generated from its own seed and checked independently,
so ``jobs > 1`` spreads instances over a process pool without changing the
report.
"""

import logging
import multiprocessing as mp
from typing import Any, Optional

from evenpair.coloring import color
from evenpair.config import get_settings
from evenpair.generators import generate
from evenpair.graph import is_clique
from evenpair.models import EvenPairCase, GenFamily, GenSpec
from evenpair.oracles import (
    chromatic_number_exact,
    class_a_witness,
    is_special_even_pair,
    is_two_pair,
    max_clique,
)
from evenpair.schemas import CorpusOutcome
from evenpair.special_pair import find_special_even_pair
from exceptions.exceptions import EvenPairException

logger = logging.getLogger(__name__)


def check_instance(spec: GenSpec, two_pair: bool) -> dict[str, Any]:
    """Soundness and optimality checks on one generated instance.

    The 2-pair check is skipped when the pair comes straight from a disjoint
    union of cliques, where the two vertices share no path.
    """
    g = generate(spec)
    if g is None:
        return {"seed": spec.seed, "status": "skipped", "reason": "generator gave up"}
    # bipartite graphs have no odd hole, no triangle and so no long antihole or prism
    if spec.family != GenFamily.BIPARTITE and class_a_witness(g) is not None:
        return {"seed": spec.seed, "status": "skipped", "reason": "not in class"}

    settings = get_settings()
    problems = []
    try:
        if not is_clique(g, g.vertices):
            result = find_special_even_pair(g)
            a, b = result.pair
            if g.n <= settings.snake_oracle_max_n and not is_special_even_pair(g, a, b):
                problems.append(f"pair {result.pair} is not a special even pair")
            if two_pair and result.case != EvenPairCase.DISJOINT_CLIQUES and not is_two_pair(g, a, b):
                problems.append(f"pair {result.pair} is not a 2-pair")

        coloring, _trace = color(g)
        omega = len(max_clique(g))
        if coloring.num_colors != omega:
            problems.append(f"{coloring.num_colors} colors used, clique number {omega}")
        if g.n <= settings.chromatic_oracle_max_n:
            chi = chromatic_number_exact(g)
            if chi != coloring.num_colors:
                problems.append(f"{coloring.num_colors} colors used, chromatic number {chi}")
    except EvenPairException as e:
        problems.append(f"{type(e).__name__}: {e}")

    return {"seed": spec.seed, "status": "checked", "n": g.n, "problems": problems}


def _check(args: tuple[GenSpec, bool]) -> dict[str, Any]:
    return check_instance(*args)


def run_corpus(
    spec: GenSpec, count: int, jobs: int = 1, two_pair: Optional[bool] = None
) -> CorpusOutcome:
    if two_pair is None:
        two_pair = spec.family == GenFamily.WEAKLY_TRIANGULATED_PRISM_FREE
    arguments = [(spec.model_copy(update={"seed": spec.seed + i}), two_pair) for i in range(count)]

    if jobs > 1:
        with mp.Pool(jobs) as pool:
            reports = pool.map(_check, arguments)
    else:
        reports = [_check(a) for a in arguments]

    failures = [
        {"seed": r["seed"], "problems": r["problems"]}
        for r in reports
        if r["status"] == "checked" and r["problems"]
    ]
    checked = sum(1 for r in reports if r["status"] == "checked")
    logger.info(f"Corpus of {count}: {checked} checked, {len(failures)} failed")
    return CorpusOutcome(
        instances=count,
        checked=checked,
        skipped=count - checked,
        failures=failures,
    )
