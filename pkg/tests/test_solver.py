"""Grid solver: verification, enumeration, counting, plurality, width."""

import random

import pytest

from rxc.grids import Grid
from rxc.oracle import brute_force_crosswords
from rxc.puzzle import Puzzle, uniform_puzzle
from rxc.rex import is_positive, parse, regex_matches
from rxc.solver import (
    DimensionError,
    count_grids,
    decide_unbounded_width,
    enumerate_grids,
    is_plural,
    is_unique,
    solve,
    verify,
)

from util import AB, all_words, random_puzzle, random_regex


def test_verify_uniform_zeroes():
    p = uniform_puzzle(parse("0+", AB), parse("0+", AB))
    g = Grid.from_strings(AB, ["00", "00"])
    assert verify(p, g)
    bad = Grid.from_strings(AB, ["00", "01"])
    assert not verify(p, bad)


def test_verify_dimension_mismatch():
    p = uniform_puzzle(parse("0+", AB), parse("0+", AB), fixed_rows=2, fixed_cols=2)
    with pytest.raises(DimensionError):
        verify(p, Grid.from_strings(AB, ["0"]))


def test_solve_forced_and_least():
    p = uniform_puzzle(parse("0+", AB), parse("0+", AB))
    assert solve(p, 2, 2).cells == ((0, 0), (0, 0))
    p2 = uniform_puzzle(parse("01|10", AB), parse("01|10", AB))
    assert solve(p2, 2, 2).cells == ((0, 1), (1, 0))
    p3 = uniform_puzzle(parse("00", AB), parse("00", AB))
    assert solve(p3, 1, 1) is None


def test_enumerate_examples():
    p = uniform_puzzle(parse("01|10", AB), parse("01|10", AB))
    assert len(enumerate_grids(p, 2, 2)) == 2
    p2 = uniform_puzzle(parse("(0|1)(0|1)", AB), parse("0*|1*", AB))
    got = enumerate_grids(p2, 2, 2)
    assert len(got) == 4
    assert all(g.col_tokens(j)[0] == g.col_tokens(j)[1] for g in got for j in range(2))
    p3 = uniform_puzzle(parse("0&1", AB), parse("0&1", AB))
    assert enumerate_grids(p3, 2, 2) == []


def test_enumerate_cap_truncates():
    p = uniform_puzzle(parse("(0|1)+", AB), parse("(0|1)+", AB))
    full = enumerate_grids(p, 2, 2)
    assert len(full) == 16
    assert enumerate_grids(p, 2, 2, cap=5) == full[:5]


def test_count_and_unique():
    p = uniform_puzzle(parse("01|10", AB), parse("01|10", AB))
    assert count_grids(p, 2, 2) == 2
    assert not is_unique(p, 2, 2)
    p2 = uniform_puzzle(parse("0+", AB), parse("0+", AB))
    assert count_grids(p2, 3, 3) == 1
    assert is_unique(p2, 2, 2)
    p3 = uniform_puzzle(parse("0&1", AB), parse("0&1", AB))
    assert not is_unique(p3, 2, 2)


def test_solver_matches_oracle_on_random_puzzles():
    rng = random.Random(1234)
    for _ in range(150):
        p = random_puzzle(rng)
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        fast = enumerate_grids(p, m, n)
        slow = brute_force_crosswords(p, m, n)
        assert [g.cells for g in fast] == [g.cells for g in slow]
        assert count_grids(p, m, n) == len(slow)
        assert (solve(p, m, n) is not None) == (len(slow) >= 1)
        assert is_unique(p, m, n) == (len(slow) == 1)
        for g in fast:
            assert verify(p, g)


def test_transpose_duality():
    rng = random.Random(77)
    for _ in range(60):
        r = random_regex(rng, AB, depth=3)
        c = random_regex(rng, AB, depth=3)
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        a = count_grids(uniform_puzzle(r, c), m, n)
        b = count_grids(uniform_puzzle(c, r), n, m)
        assert a == b


def test_per_row_lists():
    rows = (parse("0+", AB), parse("1+", AB))
    cols = (parse("01", AB), parse("01", AB))
    p = Puzzle(AB, rows, cols, 2, 2)
    assert solve(p, 2, 2).cells == ((0, 0), (1, 1))


def test_plural_examples():
    assert is_plural(parse("00", AB), parse("00", AB))
    assert not is_plural(parse("0+", AB), parse("0+", AB))
    assert not is_plural(parse("0*", AB), parse("00", AB))  # not positive


def _brute_plural(r, c, bound=6):
    if not is_positive(r) or not is_positive(c):
        return False
    for n in range(1, bound + 1):
        for w in all_words(AB, n):
            if regex_matches(r, w) and all(regex_matches(c, (s,)) for s in w):
                return False
    for m in range(1, bound + 1):
        for w in all_words(AB, m):
            if regex_matches(c, w) and all(regex_matches(r, (s,)) for s in w):
                return False
    return True


def test_plural_against_definition():
    rng = random.Random(4321)
    checked = 0
    while checked < 120:
        r = random_regex(rng, AB, depth=4)
        c = random_regex(rng, AB, depth=4)
        # Keep only instances the bounded definitional check can settle:
        # if a single-line solution exists, one must exist within the bound.
        if is_plural(r, c) != _brute_plural(r, c):
            shortest = _shortest_single_line(r, c)
            assert shortest is not None and shortest > 6
            continue
        checked += 1


def _shortest_single_line(r, c, limit=12):
    for n in range(1, limit + 1):
        for w in all_words(AB, n):
            if regex_matches(r, w) and all(regex_matches(c, (s,)) for s in w):
                return n
            if regex_matches(c, w) and all(regex_matches(r, (s,)) for s in w):
                return n
    return None


def test_decide_width_single_column():
    res = decide_unbounded_width([parse("0*1", AB), parse("1*", AB)],
                                 parse("(0|1)(0|1)", AB))
    assert res.exists and res.width == 1
    assert res.grid.cells == ((1,), (1,))


def test_decide_width_negative():
    res = decide_unbounded_width([parse("01", AB), parse("10", AB)],
                                 parse("00|11", AB))
    assert not res.exists
    for m in range(1, 5):
        p = Puzzle(AB, (parse("01", AB), parse("10", AB)), parse("00|11", AB))
        assert solve(p, 2, m) is None


def test_decide_width_agrees_with_bounded_search():
    rng = random.Random(555)
    for _ in range(60):
        m = rng.randint(1, 3)
        rows = [random_regex(rng, AB, depth=3) for _ in range(m)]
        col = random_regex(rng, AB, depth=3)
        res = decide_unbounded_width(rows, col)
        p = Puzzle(AB, tuple(rows), col)
        bounded = [n for n in range(1, 9) if solve(p, m, n) is not None]
        if res.exists and res.width <= 8:
            assert bounded and bounded[0] == res.width
            assert verify(p, res.grid)
        elif not res.exists:
            assert not bounded
