import itertools
from math import comb

import pytest

import walks


def catalan(i):
    return comb(2 * i, i) // (i + 1)


def test_halfplane_counts_are_catalan():
    assert [walks.count_dp("ae", n) for n in range(13)] == [catalan(n + 1) for n in range(13)]
    assert walks.sequence_dp("ea", 5) == [1, 2, 5, 14, 42, 132]


def test_big_values_come_back_as_python_ints():
    value = walks.count_dp("ae", 200)
    assert isinstance(value, int)
    assert value == catalan(201)


def test_enumerate_matches_brute_force():
    found = walks.enumerate("ae", 4)
    assert len(found) == 42
    assert found == sorted(found)
    brute = []
    for steps in itertools.product("ENSW", repeat=4):
        h = 0
        ok = True
        for s in steps:
            h += {"N": 1, "S": -1}.get(s, 0)
            ok = ok and h >= 0
        if ok and h == 0:
            brute.append("".join(steps))
    assert found == sorted(brute)


def test_validate():
    assert walks.validate("ae", "NESW") is None
    assert walks.validate("ae", "SEWN") == (0, "height below zero in dimension 0")
    assert walks.validate("ae", "NEE") == (3, "nonzero final height in dimension 0")


def test_canonicalize_type():
    assert walks.canonicalize_type("EA") == ("ae", 2)
    assert walks.canonicalize_type("cde") == ("cde", 3)
    with pytest.raises(ValueError):
        walks.canonicalize_type("abcde")
    with pytest.raises(ValueError):
        walks.canonicalize_type("af")


def test_exact_math():
    assert walks.binomial(10, 3) == 120
    assert walks.multinomial(4, [2, 1, 1]) == 12
    with pytest.raises(ValueError):
        walks.multinomial(4, [2, 1])
    assert [walks.motzkin(n) for n in range(8)] == [1, 1, 2, 4, 9, 21, 51, 127]


def test_touchard_and_closed_forms():
    assert walks.touchard_terms(4) == [(0, 16), (1, 24), (2, 2)]
    for n in range(0, 21, 2):
        assert walks.ab_closed(n) == walks.count_dp("ab", n)
        assert walks.aa_closed(n) == walks.count_dp("aa", n)
        assert len(set(walks.vandermonde_chain(n))) == 1
    assert [walks.ace3d_count(n) for n in range(6)] == walks.sequence_dp("ace", 5)
    with pytest.raises(ValueError):
        walks.ab_closed(3)


def test_bijection_round_trip():
    walk = "NEWWNNEESENNSSSSEE"
    word = walks.touchard_to_dyck(walk)
    assert len(word) == 2 * len(walk) + 2
    assert walks.dyck_to_touchard(word) == walk
    assert len(walks.enumerate_dyck(10)) == catalan(5)
    assert walks.to_two_colored_motzkin("NESW") == ["up", "flat1", "down", "flat2"]


def test_golden_table_and_verify():
    rows = {row["type"]: row for row in walks.golden_table3()}
    assert len(rows) == 25
    assert rows["aaa"]["terms"][:5] == [1, 0, 3, 0, 24]
    report = walks.verify("ac", 6)
    assert not report["mismatch"]
    assert any("binom(2n+1,n)" in note for note in report["notes"])


def test_guards_raise_runtime_error():
    with pytest.raises(RuntimeError):
        walks.enumerate("eee", 12, max_candidates=1000)
    with pytest.raises(RuntimeError):
        walks.count_dp("aaa", 40, max_states=10)


def test_render_is_deterministic():
    a = walks.render_walk("ae", "NEWWNNEESENNSSSSEE", "svg")
    assert a == walks.render_walk("ae", "NEWWNNEESENNSSSSEE", "svg")
    assert a.startswith("<?xml")
