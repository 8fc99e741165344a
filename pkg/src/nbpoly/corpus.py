"""Seeded graph corpora. Every graph carries a family expression that rebuilds it."""

from __future__ import annotations

import random
from typing import Sequence

from .graph import Graph, family

Corpus = list[tuple[str, Graph]]

DEFAULT_PROBABILITIES = (0.2, 0.5, 0.8)


def _entry(name: str, *params) -> tuple[str, Graph]:
    label = f"{name}:{','.join(map(str, params))}"
    return label, family(name, *params)


def random_corpus(
    count: int,
    n_max: int,
    seed: int,
    probabilities: Sequence[float] = DEFAULT_PROBABILITIES,
    n_min: int = 1,
) -> Corpus:
    """``count`` Erdos-Renyi graphs; orders uniform in ``[n_min, n_max]``, p cycling."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(n_min, n_max)
        p = probabilities[i % len(probabilities)]
        out.append(_entry("random", n, p, rng.randrange(2**31)))
    return out


def tree_corpus(count: int, n_max: int, seed: int, n_min: int = 2) -> Corpus:
    rng = random.Random(seed)
    return [_entry("tree", rng.randint(n_min, n_max), rng.randrange(2**31)) for _ in range(count)]


def path_star_corpus(n_max: int, n_min: int = 2) -> Corpus:
    out = [_entry("path", n) for n in range(n_min, n_max + 1)]
    out += [_entry("star", n) for n in range(max(n_min, 2), n_max + 1)]
    return out


def cycle_corpus(n_max: int, n_min: int = 4) -> Corpus:
    return [_entry("cycle", n) for n in range(n_min, n_max + 1)]


def complete_corpus(n_max: int, n_min: int = 1) -> Corpus:
    return [_entry("complete", n) for n in range(n_min, n_max + 1)]
