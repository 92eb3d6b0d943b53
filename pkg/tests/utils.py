import logging
import random
from itertools import combinations, combinations_with_replacement
from typing import List

from tabulate import tabulate

from hck.epoly import EPoly


def random_epoly(rng: random.Random, max_exp=3, max_terms=5, max_coeff=4):
    terms = [
        (
            rng.randint(0, max_exp),
            rng.randint(0, max_exp),
            rng.randint(-max_coeff, max_coeff),
        )
        for _ in range(rng.randint(0, max_terms))
    ]
    return EPoly.from_terms(terms)


def cheah_poincare(n, d) -> List[int]:
    """Coefficient of t^d in prod_{j=0..n} (1 - t x^{2j})^{-1}, as a list in x."""
    coeffs = [0] * (2 * n * d + 1)
    for multiset in combinations_with_replacement(range(n + 1), d):
        coeffs[2 * sum(multiset)] += 1
    return coeffs


def sym_projective_oracle(n, d) -> EPoly:
    """E(Sp^d P^n) from the multisets of d fixed points among n + 1."""
    counts = [0] * (n * d + 1)
    for multiset in combinations_with_replacement(range(n + 1), d):
        counts[sum(multiset)] += 1
    return EPoly.from_uv(counts)


def brute_force_faces(fan, k):
    """Subsets of k rays that lie in some maximal cone."""
    faces = []
    for subset in combinations(range(len(fan.rays)), k):
        if any(set(subset) <= set(cone) for cone in fan.max_cones):
            faces.append(subset)
    return faces


def log_series(series, msg="Series"):
    data_as_str = tabulate(
        [{"class": list(cls), "chi": chi} for cls, chi in series.entries()],
        headers="keys",
        tablefmt="presto",
        disable_numparse=True,
    )
    logging.info(f"{msg} E_{series.p}: \n{data_as_str}")
