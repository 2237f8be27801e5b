import os
from pathlib import Path

import pytest

import wheeler

DATA = Path(os.environ.get("WHEELER_TEST_DATA", Path(__file__).resolve().parents[1] / "data"))


def read(name):
    return (DATA / name).read_text()


def test_colex_reads_from_the_right():
    assert wheeler.colex_compare("ab", "ba", "ab") == -1
    assert wheeler.colex_compare("ab", "b", "ab") == -1
    assert wheeler.colex_compare("ab", "b", "aa") == 1
    assert wheeler.colex_compare("ab", "", "a") == -1
    assert wheeler.colex_compare("ab", "aab", "aab") == 0


def test_canonical_round_trip():
    text = read("exw.aut")
    assert wheeler.canonicalize(text) == text
    assert wheeler.validate(text) == []
    assert wheeler.check_order(text) == []


def test_parse_error_carries_position():
    with pytest.raises(wheeler.ParseError, match="line 11"):
        wheeler.canonicalize(read("bad_state.aut"))


def test_language_verdicts():
    yes = wheeler.is_wheeler_language(wheeler.regex("abdxz", "ax*b|zx*d"))
    assert yes["wheeler"] and yes["witness"] is None

    no = wheeler.is_wheeler_language(wheeler.regex("abcdx", "ax*b|cx*d"))
    assert not no["wheeler"]
    w = no["witness"]
    assert set(w) == {"u", "v", "mu", "nu", "gamma"}
    assert w["gamma"] and set(w["gamma"]) <= set("abcdx")


def test_determinize_keeps_language():
    nfa = read("exw.aut")
    dfa = wheeler.determinize(nfa)
    assert wheeler.check_order(dfa) == []
    assert wheeler.enumerate_language(dfa, 5) == wheeler.enumerate_language(nfa, 5)


def test_min_wdfa_matches_lm_family():
    dfa, wdfa = wheeler.gen_lm(1)
    built = wheeler.min_wdfa_from_dfa(dfa)
    assert wheeler.check_order(built) == []
    assert wheeler.enumerate_language(built, 4) == wheeler.enumerate_language(dfa, 4)
    # the family's WDFA is already minimum
    count = lambda t: int(next(l for l in t.splitlines() if l.startswith("states:")).split()[1])
    assert count(built) == count(wdfa) == 9


def test_interval_and_words():
    aut = wheeler.gen_interval("closed", "a", "ab", "ab")
    # every word ending in a, then b and ab
    for word in ["a", "ba", "bba", "b", "ab"]:
        assert wheeler.accepts(aut, word)
    for word in ["", "aab", "bb", "bab"]:
        assert not wheeler.accepts(aut, word)
    assert wheeler.is_wheeler_language(aut)["wheeler"]


def test_path_and_primitive():
    path = wheeler.gen_path("banana", "abn")
    assert wheeler.check_order(path) == []
    assert wheeler.is_primitive("abab") is False
    assert wheeler.is_primitive("aab") is True


def test_dot_export():
    assert wheeler.export_dot(read("exw.aut")).startswith("digraph")
