"""Shared helpers for the test suite: seeded random expression and
puzzle generators, and tiny formula/graph factories."""

from __future__ import annotations

import random

from rxc.oracle import CnfFormula, GraphInstance
from rxc.puzzle import Puzzle, uniform_puzzle
from rxc.rex import (
    Alphabet,
    Regex,
    concat,
    epsilon,
    inter,
    lit,
    opt,
    plus,
    star,
    union_,
)

AB = Alphabet(("0", "1"))
ABC = Alphabet(("0", "1", "2"))


def random_regex(rng: random.Random, alphabet: Alphabet, depth: int,
                 allow_intersection: bool = True) -> Regex:
    if depth <= 0 or rng.random() < 0.3:
        if rng.random() < 0.08:
            return epsilon(alphabet)
        return lit(alphabet, rng.choice(alphabet.tokens))
    ops = ["union", "union", "concat", "concat", "concat", "star", "plus", "opt"]
    if allow_intersection:
        ops.append("inter")
    op = rng.choice(ops)
    if op in ("union", "inter"):
        width = rng.choice([2, 2, 3])
        parts = [random_regex(rng, alphabet, depth - 1, allow_intersection)
                 for _ in range(width)]
        return union_(parts) if op == "union" else inter(parts)
    if op == "concat":
        width = rng.choice([2, 2, 3])
        return concat([random_regex(rng, alphabet, depth - 1, allow_intersection)
                       for _ in range(width)])
    body = random_regex(rng, alphabet, depth - 1, allow_intersection)
    return {"star": star, "plus": plus, "opt": opt}[op](body)


def random_puzzle(rng: random.Random, max_symbols: int = 3, depth: int = 4) -> Puzzle:
    size = rng.randint(1, max_symbols)
    alphabet = Alphabet(tuple("012"[:size]))
    return uniform_puzzle(
        random_regex(rng, alphabet, depth),
        random_regex(rng, alphabet, depth),
    )


def all_words(alphabet: Alphabet, length: int):
    """All words of exactly this length, in lexicographic symbol-id order."""
    if length == 0:
        yield ()
        return
    for s in alphabet.symbols:
        for rest in all_words(alphabet, length - 1):
            yield (s,) + rest


def grid_set(grids) -> set:
    return {g.cells for g in grids}


def formula(var_count: int, *clauses) -> CnfFormula:
    return CnfFormula(var_count, tuple(tuple(c) for c in clauses))


def triangle(k: int) -> GraphInstance:
    return GraphInstance(3, ((1, 2), (2, 3), (1, 3)), k)
