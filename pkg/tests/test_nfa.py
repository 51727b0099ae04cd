"""Automata layer: compilation, stepping, emptiness, enumeration."""

import random

from rxc.nfa import (
    compile_regex,
    enumerate_language,
    is_empty,
    is_empty_restricted,
    matches,
    step,
)
from rxc.rex import Alphabet, parse, regex_matches

from util import AB, all_words, random_regex


def test_matches_examples():
    ab = Alphabet(("a", "b"))
    assert matches(compile_regex(parse("a*b*", ab)), "abb")
    assert not matches(compile_regex(parse("0*&1*", AB)), "01")


def test_compile_union_small():
    auto = compile_regex(parse("0|1", AB))
    accepted = [
        "".join(s.token for s in w)
        for n in range(4)
        for w in all_words(AB, n)
        if matches(auto, w)
    ]
    assert accepted == ["0", "1"]


def test_intersection_of_stars_is_epsilon():
    auto = compile_regex(parse("0*&1*", AB))
    assert enumerate_language(auto, 4) == [""]


def test_step_examples():
    auto = compile_regex(parse("0+", AB))
    s = auto.start_set()
    s = step(auto, s, "0")
    assert auto.accepts(s)
    assert auto.step(0, 0) == 0  # dead set stays dead

    auto2 = compile_regex(parse("01|10", AB))
    s = auto2.start_set()
    s = step(auto2, s, "0")
    s = step(auto2, s, "1")
    assert auto2.accepts(s)
    s = auto2.start_set()
    s = step(auto2, s, "0")
    s = step(auto2, s, "0")
    assert not auto2.accepts(s)


def test_is_empty_examples():
    assert is_empty(compile_regex(parse("0&1", AB)))
    assert not is_empty(compile_regex(parse("0*", AB)))
    assert is_empty(compile_regex(parse("0+&1+", AB)))


def test_is_empty_restricted():
    auto = compile_regex(parse("0*1", AB))
    assert is_empty_restricted(auto, [0])       # needs a 1
    assert not is_empty_restricted(auto, [0, 1])


def test_enumerate_language_order():
    assert enumerate_language(compile_regex(parse("0|1", AB)), 2) == ["0", "1"]
    assert enumerate_language(compile_regex(parse("(01)*", AB)), 4) == ["", "01", "0101"]


def test_enumerate_composite_union_of_intersection():
    auto = compile_regex(parse("0*&1*|00", AB))
    assert enumerate_language(auto, 4) == ["", "00"]
    assert not is_empty(auto)


def test_enumerate_alignment_block():
    from rxc.reductions.binary import binary_code
    from rxc.rex import concat, plus, word

    code = binary_code(2)
    a = concat([word(AB, "1" * code.ell), plus(word(AB, "0" * code.ell))])
    assert enumerate_language(compile_regex(a), 12) == ["111111000000"]


def test_differential_membership_against_reference():
    rng = random.Random(2024)
    for _ in range(500):
        r = random_regex(rng, AB, depth=5)
        auto = compile_regex(r)
        for length in range(0, 7):
            for w in all_words(AB, length):
                assert matches(auto, w) == regex_matches(r, w), (r, w)


def test_product_correctness():
    rng = random.Random(99)
    for _ in range(120):
        r = random_regex(rng, AB, depth=3, allow_intersection=False)
        s = random_regex(rng, AB, depth=3, allow_intersection=False)
        both = compile_regex(r & s)
        ra, sa = compile_regex(r), compile_regex(s)
        for length in range(0, 7):
            for w in all_words(AB, length):
                assert matches(both, w) == (matches(ra, w) and matches(sa, w))


def test_step_composition_equals_matches():
    rng = random.Random(5)
    for _ in range(150):
        r = random_regex(rng, AB, depth=4)
        auto = compile_regex(r)
        for length in range(0, 5):
            for w in all_words(AB, length):
                s = auto.start_set()
                for sym in w:
                    s = auto.step(s, sym.id)
                assert auto.accepts(s) == matches(auto, w)


def test_nested_intersection_compiles():
    # Intersections under closure operators go through the explicit product.
    r = parse("(0*&(01|0)*)1", AB)
    auto = compile_regex(r)
    assert matches(auto, "01")
    assert matches(auto, "001")
    assert not matches(auto, "011")
    rng = random.Random(31)
    for _ in range(60):
        r = random_regex(rng, AB, depth=4)
        nested = parse(f"({r})*1" if rng.random() < 0.5 else f"0({r})?", AB)
        auto = compile_regex(nested)
        for length in range(0, 5):
            for w in all_words(AB, length):
                assert matches(auto, w) == regex_matches(nested, w)
