"""Command line interface and file format round-trips."""

import pytest

from rxc.cli import run
from rxc.grids import dump_grid, parse_grid, read_grid
from rxc.machines import demo_machine
from rxc.oracle import dump_dimacs
from rxc.puzzle import dump_puzzle, parse_puzzle, read_puzzle, uniform_puzzle
from rxc.rex import Alphabet, parse
from rxc.turing import dump_machine

from util import AB, formula


@pytest.fixture
def puzzle_file(tmp_path):
    path = tmp_path / "p.rxc"
    path.write_text("alphabet = 0 1\nR* = (01|10)\nC* = (01|10)\n")
    return str(path)


def test_solve_count_verify(puzzle_file, tmp_path, capsys):
    out = str(tmp_path / "g.grid")
    assert run(["solve", puzzle_file, "-m", "2", "-n", "2", "--out", out]) == 0
    puzzle = read_puzzle(puzzle_file)
    grid = read_grid(out, puzzle.alphabet)
    assert grid.cells == ((0, 1), (1, 0))  # the least of the two solutions

    assert run(["count", puzzle_file, "-m", "2", "-n", "2"]) == 0
    assert capsys.readouterr().out.strip() == "2"

    assert run(["verify", puzzle_file, out]) == 0
    assert run(["unique", puzzle_file, "-m", "2", "-n", "2"]) == 1


def test_solve_no_solution(tmp_path):
    p = tmp_path / "p.rxc"
    p.write_text("alphabet = 0\nR* = 00\nC* = 00\n")
    assert run(["solve", str(p), "-m", "1", "-n", "1"]) == 1


def test_enum_cap(puzzle_file, capsys):
    assert run(["enum", puzzle_file, "-m", "2", "-n", "2", "--cap", "1"]) == 0
    out = capsys.readouterr().out
    assert out.count("2 2") == 1


def test_plural_verb(tmp_path):
    p = tmp_path / "p.rxc"
    p.write_text("alphabet = 0\nR* = 00\nC* = 00\n")
    assert run(["plural", str(p)]) == 0
    p.write_text("alphabet = 0\nR* = 0+\nC* = 0+\n")
    assert run(["plural", str(p)]) == 1


def test_decide_width_verb(tmp_path, capsys):
    p = tmp_path / "p.rxc"
    p.write_text("alphabet = 0 1\nR = 0*1\nR = 1*\nC* = (0|1)(0|1)\n")
    assert run(["decide-width", str(p)]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "1"
    p.write_text("alphabet = 0 1\nR = 01\nR = 10\nC* = 00|11\n")
    assert run(["decide-width", str(p)]) == 1


def test_usage_errors(tmp_path, puzzle_file):
    assert run(["solve", puzzle_file]) == 2            # missing dimensions
    assert run(["solve", str(tmp_path / "nope.rxc"), "-m", "1", "-n", "1"]) == 2
    assert run(["bogus-verb"]) == 2


def test_tm_verbs(tmp_path, capsys):
    mpath = tmp_path / "demo.tm"
    mpath.write_text(dump_machine(demo_machine()))
    assert run(["tm", "simulate", str(mpath), "-w", "a"]) == 0
    assert "halts after 5 steps" in capsys.readouterr().out
    assert run(["tm", "validate", str(mpath), "-w", "a"]) == 0

    tpath = tmp_path / "t.grid"
    assert run(["tm", "tableau", str(mpath), "-w", "a", "--out", str(tpath)]) == 0

    ppath = tmp_path / "demo.rxc"
    assert run(["tm", "reduce", str(mpath), "-w", "a", "--out", str(ppath)]) == 0
    puzzle = read_puzzle(str(ppath))
    assert run(["verify", str(ppath), str(tpath)]) == 0


def test_pipeline_composition(tmp_path):
    # reduce -> solve -> verify -> tableau: the two grid files are identical
    mpath = tmp_path / "demo.tm"
    mpath.write_text(dump_machine(demo_machine()))
    ppath = tmp_path / "demo.rxc"
    spath = tmp_path / "solved.grid"
    tpath = tmp_path / "tab.grid"
    assert run(["tm", "reduce", str(mpath), "-w", "a", "--out", str(ppath)]) == 0
    assert run(["solve", str(ppath), "-m", "6", "-n", "4", "--out", str(spath)]) == 0
    assert run(["verify", str(ppath), str(spath)]) == 0
    assert run(["tm", "tableau", str(mpath), "-w", "a", "--out", str(tpath)]) == 0
    assert spath.read_text() == tpath.read_text()


def test_merge_and_binarize_verbs(tmp_path, capsys):
    p = tmp_path / "p.rxc"
    p.write_text("alphabet = 0 1\nR* = 00\nC* = 00\n")
    merged = tmp_path / "m.rxc"
    assert run(["merge", str(p), "--out", str(merged)]) == 0
    mp = read_puzzle(str(merged))
    assert mp.alphabet.tokens == ("0", "1", "hrt", "dmd", "spd")

    binp = tmp_path / "b.rxc"
    assert run(["binarize", str(p), "-k", "2", "--out", str(binp)]) == 0
    bp = read_puzzle(str(binp))
    assert bp.alphabet.tokens == ("0", "1")


def test_encode_decode_grid_verbs(tmp_path):
    gpath = tmp_path / "g.grid"
    gpath.write_text("1 1\n1\n")
    epath = tmp_path / "e.grid"
    assert run(["encode-grid", str(gpath), "-k", "2", "--out", str(epath)]) == 0
    enc = read_grid(str(epath), Alphabet(("0", "1")))
    assert (enc.m, enc.n) == (13, 13)
    dpath = tmp_path / "d.grid"
    assert run(["decode-grid", str(epath), "-k", "2", "--out", str(dpath)]) == 0
    assert dpath.read_text() == "1 1\n1\n"
    # corrupting the encoding is an input error
    bad = tmp_path / "bad.grid"
    bad.write_text("13 13\n" + "\n".join(" ".join("0" * 13) for _ in range(13)) + "\n")
    assert run(["decode-grid", str(bad), "-k", "2"]) == 2


def test_sat_verbs(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text(dump_dimacs(formula(1, (1,))))
    assert run(["sat", "count", str(cnf)]) == 0
    assert capsys.readouterr().out.strip() == "1"
    rpath = tmp_path / "r.rxc"
    assert run(["sat", "reduce", str(cnf), "--out", str(rpath)]) == 0
    pz = read_puzzle(str(rpath))
    assert pz.fixed_rows == pz.fixed_cols == 8


def test_vc_and_3sat_verbs(tmp_path):
    gpath = tmp_path / "g.graph"
    gpath.write_text("3 3\n1 2\n2 3\n1 3\n")
    out = tmp_path / "vc.rxc"
    assert run(["vc", "reduce", str(gpath), "-k", "2", "--out", str(out)]) == 0
    pz = read_puzzle(str(out))
    assert run(["solve", str(out), "-m", "3", "-n", "4"]) == 0

    cnf = tmp_path / "f3.cnf"
    cnf.write_text(dump_dimacs(formula(3, (1, 2, 3))))
    tsp = tmp_path / "ts.rxc"
    assert run(["3sat", "reduce", str(cnf), "--out", str(tsp)]) == 0
    assert run(["solve", str(tsp), "-m", "1", "-n", "3"]) == 0


def test_puzzle_file_roundtrip():
    p = uniform_puzzle(parse("(01|10)*1", AB), parse("0?1+", AB), 2, 3)
    assert parse_puzzle(dump_puzzle(p)) == p


def test_grid_file_roundtrip():
    from rxc.grids import Grid

    g = Grid.from_strings(AB, ["01", "10"])
    assert parse_grid(dump_grid(g), AB).cells == g.cells
    mk = Alphabet(("[B]", "[B,q0]", "<B|q1>"))
    g2 = Grid.from_tokens(mk, [["[B]", "<B|q1>"], ["[B,q0]", "[B]"]])
    assert parse_grid(dump_grid(g2), mk).cells == g2.cells
