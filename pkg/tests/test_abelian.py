import random

import pytest

from curvepi import parse_presentation
from curvepi.abelian import (
    IntMatrix,
    InvariantFactors,
    abelian_invariants,
    abelian_presentation,
    curve_abelianization,
    invariants_of_matrix,
    relator_matrix,
    smith_normal_form,
)
from curvepi.presentations import Presentation
from curvepi.words import Word


def snf_checked(A):
    """Run SNF and assert every structural postcondition."""
    D, U, V = smith_normal_form(A)
    assert (U @ A @ V) == D
    assert abs(U.determinant()) == 1
    assert abs(V.determinant()) == 1
    n = min(D.rows, D.cols)
    diag = [D[i, i] for i in range(n)]
    for i in range(D.rows):
        for j in range(D.cols):
            if i != j:
                assert D[i, j] == 0
    assert all(d >= 0 for d in diag)
    nonzero = [d for d in diag if d]
    assert diag[: len(nonzero)] == nonzero  # zeros trail
    for x, y in zip(nonzero, nonzero[1:]):
        assert y % x == 0
    return diag


def test_snf_examples():
    assert snf_checked(IntMatrix([[2, 3], [-1, -4]])) == [1, 5]
    assert snf_checked(IntMatrix([[0, 0], [0, 0]])) == [0, 0]
    assert snf_checked(IntMatrix([[1, 0], [0, 1]])) == [1, 1]


def test_snf_determinantal_divisors_500_random():
    # gcd of k x k minors equals d1 ... dk, against a brute-force oracle
    rng = random.Random(99)
    for _ in range(500):
        rows = rng.randint(0, 6)
        cols = rng.randint(1, 6)
        A = IntMatrix(
            [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)], cols=cols
        )
        diag = snf_checked(A)
        prod = 1
        for k in range(1, min(rows, cols) + 1):
            prod *= diag[k - 1]
            assert A.minors_gcd(k) == prod


def test_relator_matrix_examples():
    p = parse_presentation("<a,b | b^-1 a b^4 a, a^2 b^-2 a^-3 b^-2>")
    assert relator_matrix(p).entries == [[2, 3], [-1, -4]]
    assert abelian_invariants(p).display() == "Z/5"

    free = parse_presentation("<a,b,c |>")
    m = relator_matrix(free)
    assert (m.rows, m.cols) == (0, 3)

    b3 = parse_presentation("<a,b | a b a b^-1 a^-1 b^-1>")
    assert relator_matrix(b3).entries == [[1, -1]]


def test_abelian_invariants_examples():
    assert abelian_invariants(parse_presentation("<g1,g2,g3,g4 | g4 g3 g2 g1>")).display() == "Z^3"
    assert abelian_invariants(parse_presentation("<a |>")).display() == "Z"
    assert abelian_invariants(parse_presentation("<a | a^5>")).display() == "Z/5"
    # relators a^n, t a t^-1 a: gcd(n, 2) torsion kills nothing for odd n
    for n in (3, 5):
        p = parse_presentation(f"<a,t | a^{n}, t a t^-1 a>")
        assert abelian_invariants(p).display() == "Z"


def test_invariance_under_presentation_moves():
    rng = random.Random(5)
    base = parse_presentation("<a,b,c | a^2 b^-3, (abc)^2, c^4>")
    want = abelian_invariants(base)
    rels = list(base.relators)
    for _ in range(50):
        moved = []
        for w in rels:
            letters = w.letters
            if rng.random() < 0.5:
                letters = tuple(-x for x in reversed(letters))  # invert
            k = rng.randrange(len(letters)) if letters else 0
            letters = letters[k:] + letters[:k]  # cyclic permute
            moved.append(Word(letters))
        rng.shuffle(moved)
        assert abelian_invariants(Presentation(base.generators, moved)) == want


def test_invariant_factors_type():
    inv = InvariantFactors(2, [2, 4])
    assert inv.display() == "Z^2 + Z/2 + Z/4"
    assert inv.to_json() == {"free_rank": 2, "torsion": [2, 4]}
    with pytest.raises(ValueError):
        InvariantFactors(0, [1])
    with pytest.raises(ValueError):
        InvariantFactors(0, [4, 2])  # chain must divide
    assert InvariantFactors(0, []).is_trivial
    assert InvariantFactors(0, []).display() == "0"


def test_curve_abelianization_examples():
    assert curve_abelianization([1, 1, 1, 1]).display() == "Z^3"
    assert curve_abelianization([5]).display() == "Z/5"
    assert curve_abelianization([2, 1, 1]).display() == "Z^2"
    assert curve_abelianization([2, 2]).display() == "Z + Z/2"
    for d in range(2, 6):
        assert curve_abelianization([d]).display() == f"Z/{d}"
    with pytest.raises(ValueError):
        curve_abelianization([])
    with pytest.raises(ValueError):
        curve_abelianization([0])


def test_abelian_presentation_round_trip():
    for inv in (
        InvariantFactors(3, []),
        InvariantFactors(0, [5]),
        InvariantFactors(1, [2]),
        InvariantFactors(2, [2, 6]),
        InvariantFactors(0, []),
    ):
        assert abelian_invariants(abelian_presentation(inv)) == inv


def test_invariants_of_matrix_counts_missing_columns():
    # 1x3 matrix of rank 1: free rank 2
    inv = invariants_of_matrix(IntMatrix([[2, 4, 6]]))
    assert inv.free_rank == 2 and inv.torsion == (2,)
