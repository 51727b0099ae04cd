"""Per-line puzzle generators for two classic NP-hard problems.

Vertex cover: rows pick covering vertices (a vertex row is either its
incidence string followed by 1, or all zeros), edge columns demand a
covering 1, and a final budget column allows at most k ones.

Exactly-3 CNF: each column is constant (all ones = true, all zeros =
false) and each clause row demands a satisfying value at one of its
three literal positions.
"""

from __future__ import annotations

from ..oracle import CnfFormula, GraphInstance
from ..puzzle import Puzzle
from ..rex import concat, lit, opt, star, union_, word
from .binary import BINARY


def vc_reduce(graph: GraphInstance) -> Puzzle:
    """Rows: one per vertex; columns: one per edge plus the budget column."""
    zero = lit(BINARY, "0")
    one = lit(BINARY, "1")
    either = union_([zero, one])
    rows = []
    for v in range(1, graph.vertex_count + 1):
        incidence = "".join(
            "1" if v in edge else "0" for edge in graph.edges
        )
        rows.append(union_([word(BINARY, incidence + "1"), star(zero)]))
    edge_col = concat([star(zero), one, star(either)])
    budget_col = concat([concat([star(zero), opt(one)])] * graph.k + [star(zero)])
    cols = [edge_col] * len(graph.edges) + [budget_col]
    return Puzzle(
        BINARY,
        tuple(rows),
        tuple(cols),
        fixed_rows=graph.vertex_count,
        fixed_cols=len(graph.edges) + 1,
    )


def threesat_reduce(formula: CnfFormula) -> Puzzle:
    """Rows: one per clause; columns: uniform constant columns."""
    n = formula.var_count
    zero = lit(BINARY, "0")
    one = lit(BINARY, "1")
    either = union_([zero, one])
    rows = []
    for clause in formula.clauses:
        if len(clause) != 3:
            raise ValueError(f"clause {clause} does not have exactly 3 literals")
        positions = [abs(l) for l in clause]
        if not (positions[0] < positions[1] < positions[2]):
            raise ValueError(f"clause {clause} must list strictly increasing variables")
        alternatives = []
        for literal in clause:
            pos = abs(literal)  # 1-based position in the row
            bit = one if literal > 0 else zero
            alternatives.append(concat(
                [either] * (pos - 1) + [bit] + [either] * (n - pos)
            ))
        rows.append(union_(alternatives))
    constant_col = union_([star(zero), star(one)])
    return Puzzle(
        BINARY,
        tuple(rows),
        constant_col,
        fixed_rows=len(formula.clauses),
        fixed_cols=n,
    )
