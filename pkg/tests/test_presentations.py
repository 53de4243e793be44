import random

import pytest

from curvepi import (
    Presentation,
    SubstitutionMap,
    format_word,
    parse_presentation,
    parse_word,
    substitute,
)
from curvepi.presentations import compose, identity_map
from curvepi.words import Word


def test_relators_cyclically_reduced():
    # a conjugated relator loses its conjugator on ingestion
    p = Presentation(["a", "b"], [Word([1, 2, 2, -1])])
    assert p.relators[0].letters == (2, 2)


def test_undeclared_generator_rejected():
    with pytest.raises(ValueError):
        Presentation(["a"], [Word([2])])


def test_duplicate_names_rejected():
    with pytest.raises(ValueError):
        Presentation(["a", "a"])


def test_substitute_examples():
    # c -> b^-1 x b turns b c b into x b^2
    pi = parse_presentation("<a,b,c | bcb = cbc>")
    art = parse_presentation("<a,b,x | bxb = xbx>")
    m = SubstitutionMap(
        pi, art, [parse_word(art, "a"), parse_word(art, "b"), parse_word(art, "b^-1 x b")]
    )
    image = substitute(m, parse_word(pi, "b c b"))
    assert image == parse_word(art, "x b^2")

    # a -> u v^2, b -> u sends ab to u v^2 u
    src = parse_presentation("<a,b |>")
    dst = parse_presentation("<u,v |>")
    m2 = SubstitutionMap(src, dst, [parse_word(dst, "u v^2"), parse_word(dst, "u")])
    assert substitute(m2, parse_word(src, "a b")) == parse_word(dst, "u v^2 u")


def test_identity_substitution():
    p = parse_presentation("<a,b | aba=bab>")
    m = identity_map(p)
    rng = random.Random(0)
    for _ in range(50):
        w = Word([rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(0, 10))])
        assert substitute(m, w) == w


def test_substitute_distributes_over_concatenation():
    src = parse_presentation("<a,b |>")
    dst = parse_presentation("<u,v |>")
    rng = random.Random(1)
    m = SubstitutionMap(
        src, dst, [parse_word(dst, "u v^-1"), parse_word(dst, "v u v")]
    )
    for _ in range(200):
        u = Word([rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(0, 8))])
        v = Word([rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(0, 8))])
        assert substitute(m, u * v) == substitute(m, u) * substitute(m, v)


def test_compose():
    a = parse_presentation("<a |>")
    b = parse_presentation("<b |>")
    c = parse_presentation("<c |>")
    f = SubstitutionMap(a, b, [parse_word(b, "b^2")])
    g = SubstitutionMap(b, c, [parse_word(c, "c^-1")])
    gf = compose(g, f)
    assert substitute(gf, parse_word(a, "a")) == parse_word(c, "c^-2")


def test_image_validation():
    src = parse_presentation("<a |>")
    dst = parse_presentation("<u |>")
    with pytest.raises(ValueError):
        SubstitutionMap(src, dst, [Word([2])])
    with pytest.raises(ValueError):
        SubstitutionMap(src, dst, [])


def test_format_word_collapses_powers():
    p = parse_presentation("<a,b |>")
    w = parse_word(p, "a a a b^-1 b^-1")
    assert format_word(p, w) == "a^3 b^-2"
