"""Vertex-cover and exactly-3-CNF puzzle generators."""

import itertools
import random

import pytest

from rxc.oracle import (
    CnfFormula,
    GraphInstance,
    brute_force_sat_count,
    brute_force_vertex_cover,
)
from rxc.reductions import threesat_reduce, vc_reduce
from rxc.rex import format_regex
from rxc.solver import solve, verify

from util import formula, triangle


def test_vc_triangle():
    p2 = vc_reduce(triangle(2))
    got = solve(p2, 3, 4)
    assert got is not None and verify(p2, got)
    assert solve(vc_reduce(triangle(1)), 3, 4) is None
    single = GraphInstance(2, ((1, 2),), 1)
    assert solve(vc_reduce(single), 2, 2) is not None


def test_vc_expressions_shape():
    p = vc_reduce(triangle(2))
    assert format_regex(p.cols[0]) == "0*1(0|1)*"
    assert format_regex(p.cols[-1]) == "0*1?0*1?0*"
    assert format_regex(p.rows[0]) == "1011|0*"


def test_vc_agrees_with_oracle_small():
    rng = random.Random(10)
    for _ in range(15):
        v = rng.randint(2, 5)
        possible = list(itertools.combinations(range(1, v + 1), 2))
        rng.shuffle(possible)
        edges = tuple(possible[: rng.randint(1, len(possible))])
        for k in range(1, v + 1):
            g = GraphInstance(v, edges, k)
            puzzle = vc_reduce(g)
            found = solve(puzzle, v, len(edges) + 1)
            assert (found is not None) == brute_force_vertex_cover(g)


def test_threesat_satisfiable_example():
    f = formula(3, (1, 2, 3))
    p = threesat_reduce(f)
    expected = "1(0|1)(0|1)|(0|1)1(0|1)|(0|1)(0|1)1"
    assert format_regex(p.rows[0]) == expected
    got = solve(p, 1, 3)
    assert got is not None and verify(p, got)


def test_threesat_unsat_exhausts():
    clauses = [
        tuple((v + 1) * (1 if (bits >> v) & 1 else -1) for v in range(3))
        for bits in range(8)
    ]
    f = CnfFormula(3, tuple(tuple(sorted(c, key=abs)) for c in clauses))
    p = threesat_reduce(f)
    assert solve(p, 8, 3) is None


def test_threesat_columns_encode_assignment():
    f = formula(4, (1, 2, 4), (-1, 3, 4))
    p = threesat_reduce(f)
    got = solve(p, 2, 4)
    assert got is not None
    bits = tuple(int(got.col_tokens(j)[0]) for j in range(4))
    assert all(tok == str(bits[j]) for j in range(4) for tok in got.col_tokens(j))
    assert f.satisfied_by(bits)


def test_threesat_rejects_bad_clauses():
    with pytest.raises(ValueError):
        threesat_reduce(formula(3, (1, 2)))
    with pytest.raises(ValueError):
        threesat_reduce(formula(3, (2, 1, 3)))


def test_threesat_agrees_with_satisfiability():
    rng = random.Random(20)
    for _ in range(15):
        n = rng.randint(3, 4)
        m = rng.randint(1, 4)
        clauses = []
        for _ in range(m):
            vs = sorted(rng.sample(range(1, n + 1), 3))
            clauses.append(tuple(v * rng.choice((1, -1)) for v in vs))
        f = CnfFormula(n, tuple(clauses))
        p = threesat_reduce(f)
        assert (solve(p, m, n) is not None) == (brute_force_sat_count(f) > 0)
