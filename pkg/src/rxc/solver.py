"""Exact crossword solving over fixed dimensions, plus two decision tests.

The search fills cells in row-major order.  A symbol is tried only if
both the row's and the column's automaton state sets stay nonempty and
can still reach acceptance within the exact number of cells remaining
on their line; this makes the output order deterministic (grids sorted
by their row-major id sequence) and prunes hard.

``decide_unbounded_width`` answers existence when the number of rows is
fixed but the number of columns is not: a breadth-first search over
profiles (the tuple of per-row state sets), guessing one full column at
a time, with a visited set guaranteeing termination.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass
from typing import Callable, Sequence

from .grids import Grid
from .puzzle import Puzzle
from .rex import Regex, is_positive, regex_matches
from .nfa import Automaton, compile_regex, is_empty_restricted, matches


class DimensionError(ValueError):
    pass


def _compiled(exprs: Sequence[Regex], cache: dict[int, Automaton]) -> list[Automaton]:
    out = []
    for e in exprs:
        auto = cache.get(id(e))
        if auto is None:
            auto = compile_regex(e)
            cache[id(e)] = auto
        out.append(auto)
    return out


def verify(puzzle: Puzzle, grid: Grid) -> bool:
    """True iff every row and column of the grid matches its expression."""
    if not grid.alphabet.compatible(puzzle.alphabet):
        raise DimensionError("grid alphabet differs from puzzle alphabet")
    if puzzle.fixed_rows is not None and grid.m != puzzle.fixed_rows:
        raise DimensionError(f"grid has {grid.m} rows, puzzle fixes {puzzle.fixed_rows}")
    if puzzle.fixed_cols is not None and grid.n != puzzle.fixed_cols:
        raise DimensionError(f"grid has {grid.n} columns, puzzle fixes {puzzle.fixed_cols}")
    cache: dict[int, Automaton] = {}
    rows = _compiled(puzzle.row_exprs(grid.m), cache)
    cols = _compiled(puzzle.col_exprs(grid.n), cache)
    for i, auto in enumerate(rows):
        if not matches(auto, grid.row(i)):
            return False
    for j, auto in enumerate(cols):
        if not matches(auto, grid.col(j)):
            return False
    return True


def _search(puzzle: Puzzle, m: int, n: int, emit: Callable[[Grid], bool]) -> None:
    """Run the row-major search; ``emit`` returns False to stop early."""
    if m < 1 or n < 1:
        raise DimensionError("dimensions must be positive")
    alphabet = puzzle.alphabet
    cache: dict[int, Automaton] = {}
    row_autos = _compiled(puzzle.row_exprs(m), cache)
    col_autos = _compiled(puzzle.col_exprs(n), cache)
    sym_ids = range(len(alphabet))
    cells = [[0] * n for _ in range(m)]
    col_sets = [a.start_set() for a in col_autos]
    stop = False

    def place(i: int, j: int, row_set) -> None:
        nonlocal stop
        row_auto = row_autos[i]
        col_auto = col_autos[j]
        row_left = n - j - 1
        col_left = m - i - 1
        saved = col_sets[j]
        for sym in sym_ids:
            rs = row_auto.step(row_set, sym)
            if row_auto.is_dead(rs) or not row_auto.feasible(rs, row_left):
                continue
            cs = col_auto.step(saved, sym)
            if col_auto.is_dead(cs) or not col_auto.feasible(cs, col_left):
                continue
            cells[i][j] = sym
            col_sets[j] = cs
            if j + 1 < n:
                place(i, j + 1, rs)
            elif i + 1 < m:
                place(i + 1, 0, row_autos[i + 1].start_set())
            else:
                grid = Grid(alphabet, tuple(tuple(r) for r in cells))
                if not emit(grid):
                    stop = True
            if stop:
                break
        col_sets[j] = saved

    # one recursion frame per cell
    needed = m * n + 500
    old_limit = sys.getrecursionlimit()
    if old_limit < needed:
        sys.setrecursionlimit(needed)
    try:
        place(0, 0, row_autos[0].start_set())
    finally:
        if old_limit < needed:
            sys.setrecursionlimit(old_limit)


def enumerate_grids(puzzle: Puzzle, m: int, n: int, cap: int | None = None) -> list[Grid]:
    """All solutions in row-major lexicographic order, truncated at ``cap``."""
    out: list[Grid] = []

    def emit(g: Grid) -> bool:
        out.append(g)
        return cap is None or len(out) < cap

    _search(puzzle, m, n, emit)
    return out


def solve(puzzle: Puzzle, m: int, n: int) -> Grid | None:
    """The lexicographically least solution, or None."""
    got = enumerate_grids(puzzle, m, n, cap=1)
    return got[0] if got else None


def count_grids(puzzle: Puzzle, m: int, n: int) -> int:
    """Exact number of solutions."""
    total = 0

    def emit(_g: Grid) -> bool:
        nonlocal total
        total += 1
        return True

    _search(puzzle, m, n, emit)
    return total


def is_unique(puzzle: Puzzle, m: int, n: int) -> bool:
    """True iff exactly one solution exists."""
    return len(enumerate_grids(puzzle, m, n, cap=2)) == 1


def is_plural(row_expr: Regex, col_expr: Regex) -> bool:
    """Both expressions positive and no single-row or single-column solution.

    A 1 x n solution exists iff the row language meets ``A1+``, where
    ``A1`` holds the symbols that match the column expression as a
    length-1 string (and symmetrically for n x 1), so both checks reduce
    to restricted emptiness.  Length-1 membership is decided on the
    tree, which keeps this cheap even for very large expressions.
    """
    if not is_positive(row_expr) or not is_positive(col_expr):
        return False
    alphabet = row_expr.alphabet
    col_singles = [s.id for s in alphabet if regex_matches(col_expr, (s,))]
    if col_singles and not is_empty_restricted(compile_regex(row_expr), col_singles):
        return False
    row_singles = [s.id for s in alphabet if regex_matches(row_expr, (s,))]
    if row_singles and not is_empty_restricted(compile_regex(col_expr), row_singles):
        return False
    return True


@dataclass(frozen=True)
class WidthResult:
    exists: bool
    width: int | None = None
    grid: Grid | None = None


def decide_unbounded_width(rows: Sequence[Regex], col_expr: Regex) -> WidthResult:
    """Does a grid with these rows and uniform columns exist for some width?

    Decides existence over all widths n >= 1 for the fixed list of row
    expressions.  Columns are generated symbol by symbol under the
    column automaton; profiles already seen are never revisited, which
    bounds the search by the finite profile space.  On success the
    least witness width and one witness grid are returned.
    """
    if not rows:
        raise ValueError("need at least one row expression")
    alphabet = rows[0].alphabet
    cache: dict[int, Automaton] = {}
    row_autos = _compiled(rows, cache)
    col_auto = compile_regex(col_expr)
    m = len(rows)

    start = tuple(a.start_set() for a in row_autos)
    parents: dict[tuple, tuple[tuple, tuple[int, ...]] | None] = {start: None}
    queue: deque[tuple[tuple, int]] = deque([(start, 0)])

    def rebuild(profile: tuple, last_column: tuple[int, ...]) -> Grid:
        columns = [last_column]
        node = profile
        while parents[node] is not None:
            node, column = parents[node]
            columns.append(column)
        columns.reverse()
        cells = tuple(tuple(col[i] for col in columns) for i in range(m))
        return Grid(alphabet, cells)

    column = [0] * m

    while queue:
        profile, depth = queue.popleft()
        found: list[tuple[tuple, tuple[int, ...], bool]] = []

        def extend(level: int, col_set, sets: tuple) -> None:
            for sym in range(len(alphabet)):
                cs = col_auto.step(col_set, sym)
                if col_auto.is_dead(cs) or not col_auto.feasible(cs, m - level - 1):
                    continue
                rs = row_autos[level].step(sets[level], sym)
                if row_autos[level].is_dead(rs) or not row_autos[level].alive(rs):
                    continue
                column[level] = sym
                nxt = sets[:level] + (rs,) + sets[level + 1:]
                if level + 1 == m:
                    accepted = all(a.accepts(s) for a, s in zip(row_autos, nxt))
                    found.append((nxt, tuple(column), accepted))
                else:
                    extend(level + 1, cs, nxt)

        extend(0, col_auto.start_set(), profile)
        for nxt, col, accepted in found:
            if accepted:
                return WidthResult(True, depth + 1, rebuild(profile, col))
            if nxt not in parents:
                parents[nxt] = (profile, col)
                queue.append((nxt, depth + 1))
    return WidthResult(False)
