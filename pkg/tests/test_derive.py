import random

import pytest

from curvepi import parse_presentation, parse_word
from curvepi.derive import (
    DerivationBudget,
    Inconclusive,
    ProofTrace,
    derive_relator,
    replay_trace,
)
from curvepi.words import Word


def test_relator_itself_is_one_insertion():
    p = parse_presentation("<a,b | aba=bab>")
    w = parse_word(p, "a b a b^-1 a^-1 b^-1")
    trace = derive_relator(p, w)
    assert isinstance(trace, ProofTrace)
    assert trace.insertions == 1
    assert replay_trace(p, trace)


def test_already_trivial_word():
    p = parse_presentation("<a | a^2>")
    trace = derive_relator(p, parse_word(p, "a a^-1"))
    assert isinstance(trace, ProofTrace)
    assert trace.insertions == 0
    assert replay_trace(p, trace)


def test_free_group_is_inconclusive_quickly():
    p = parse_presentation("<a |>")
    res = derive_relator(p, parse_word(p, "a"))
    assert isinstance(res, Inconclusive)


def test_budget_exhaustion_is_inconclusive():
    p = parse_presentation("<a,b | a^2, b^3, (ab)^7>")
    w = parse_word(p, "(ab)^21")
    res = derive_relator(p, w, DerivationBudget(max_states=5, max_word_length=64))
    assert isinstance(res, Inconclusive)
    # and a sane budget succeeds on the same input
    ok = derive_relator(p, w)
    assert isinstance(ok, ProofTrace)
    assert replay_trace(p, ok)


def test_rewriting_chain_via_substitution():
    # the braid relator in b, c maps under c -> b^-1 x b to a word that the
    # bounded search reduces using the target's own braid relator
    art = parse_presentation("<a,b,x | aba=bab, bxb=xbx, axa=xax>")
    image = parse_word(art, "x b^2 (b^-1 x b x b)^-1")
    trace = derive_relator(art, image)
    assert isinstance(trace, ProofTrace)
    assert replay_trace(art, trace)


def test_word_length_budget_respected():
    p = parse_presentation("<a,b | a^2, b^3, (ab)^7>")
    res = derive_relator(
        p, parse_word(p, "(ab)^21"), DerivationBudget(max_word_length=10)
    )
    assert isinstance(res, Inconclusive)


def test_replay_rejects_corrupt_traces():
    p = parse_presentation("<a | a^3>")
    good = derive_relator(p, parse_word(p, "a^3"))
    assert replay_trace(p, good)
    # tamper: wrong relator index
    bad = ProofTrace(good.start, [("insert", 5, False, 0)])
    assert not replay_trace(p, bad)
    # tamper: trace that does not reach the empty word
    stuck = ProofTrace(good.start, [])
    assert not replay_trace(p, stuck)
    # tamper: rotate-only trace on a nontrivial word
    spin = ProofTrace(good.start, [("rotate", 1), ("rotate", 2)])
    assert not replay_trace(p, spin)


def test_traces_replay_on_random_consequences():
    # products of conjugates of relators are derivable and replayable
    p = parse_presentation("<a,b | a^2, (ab)^3>")
    rng = random.Random(21)
    for _ in range(40):
        w = Word(())
        for _ in range(rng.randint(1, 2)):
            rel = p.relators[rng.randrange(len(p.relators))]
            conj = Word(
                [rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(0, 2))]
            )
            piece = conj * (rel if rng.random() < 0.5 else ~rel) * ~conj
            w = w * piece
        res = derive_relator(p, w)
        assert isinstance(res, ProofTrace), w
        assert replay_trace(p, res)


def test_budget_validation():
    with pytest.raises(ValueError):
        DerivationBudget(max_states=0)
