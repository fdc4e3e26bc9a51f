import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import score_oracle
from prefseven.model import ValidationError
from prefseven.scoring import (CardCounts, GainLossScheme, basic_scheme,
                               deck_scheme, global_score, rank,
                               ranking_string, validate_scheme)
from prefseven.sevenlogic import RelationMatrix, SevenValue

LABELS = [v.value for v in SevenValue]


def random_matrix(rng, n):
    alts = tuple(f"x{i}" for i in range(n))
    rows = []
    for i in range(n):
        rows.append([SevenValue.TRUE if i == j else
                     SevenValue.parse(rng.choice(LABELS))
                     for j in range(n)])
    return RelationMatrix.from_rows(alts, rows)


def test_basic_scheme_values():
    s = basic_scheme()
    assert (s.v_T, s.v_sT, s.v_sF, s.v_F) == \
        (1, Fraction(1, 2), Fraction(1, 2), 1)


def test_deck_scheme_normalization():
    s = deck_scheme(CardCounts(6, 5, 3, 2))
    assert (s.v_T, s.v_sT, s.v_sF, s.v_F) == \
        (Fraction(7, 13), Fraction(4, 13), Fraction(6, 13), Fraction(1))


def test_deck_scheme_single_cards():
    # equal spacing everywhere collapses to a symmetric scheme
    s = deck_scheme(CardCounts(1, 1, 1, 1))
    assert s.v_T == s.v_F
    assert s.v_sT == s.v_sF
    assert s.v_F == 1


def test_card_counts_validation():
    with pytest.raises(ValidationError):
        CardCounts(-1, 2, 3, 4)
    with pytest.raises(ValidationError):
        CardCounts(True, 2, 3, 4)
    with pytest.raises(ValidationError):
        CardCounts(Fraction(1, 2), 2, 3, 4)


def test_scheme_validation():
    assert validate_scheme(basic_scheme()) == []
    bad = validate_scheme(GainLossScheme(Fraction(0), Fraction(1, 2),
                                         Fraction(1, 2), Fraction(1)))
    assert any(v.code == "scheme-order" for v in bad)
    huge = validate_scheme(GainLossScheme(Fraction(3), Fraction(1, 2),
                                          Fraction(1, 2), Fraction(1)))
    assert any(v.code == "scheme-scale" for v in huge)


def test_global_score_small_example():
    m = RelationMatrix.from_rows(
        ("a", "b", "c"),
        [["T", "T", "U"],
         ["F", "T", "sT"],
         ["sF", "sF", "T"]])
    board = global_score(m, basic_scheme())
    want = score_oracle(("a", "b", "c"), m.to_json(),
                        (1, Fraction(1, 2), Fraction(1, 2), 1))
    assert {a: board.score(a) for a in ("a", "b", "c")} == want
    assert sum(want.values()) == 0


@given(st.integers(min_value=0, max_value=2 ** 32), st.integers(2, 7))
def test_global_score_zero_sum_and_matches_oracle(seed, n):
    rng = random.Random(seed)
    m = random_matrix(rng, n)
    cards = CardCounts(*(rng.randint(0, 9) for _ in range(4)))
    try:
        scheme = deck_scheme(cards)
    except ValidationError:
        scheme = basic_scheme()
    board = global_score(m, scheme)
    scores = {a: board.score(a) for a in m.alternatives}
    assert sum(scores.values()) == 0
    want = score_oracle(m.alternatives, m.to_json(),
                        (scheme.v_T, scheme.v_sT, scheme.v_sF, scheme.v_F))
    assert scores == want


def test_rank_and_string_with_ties():
    m = RelationMatrix.from_rows(
        ("a", "b", "c"),
        [["T", "U", "U"],
         ["U", "T", "U"],
         ["U", "U", "T"]])
    board = global_score(m, basic_scheme())
    groups = rank(board)
    assert groups == (("a", "b", "c"),)
    assert ranking_string(groups) == "a ~ b ~ c"


def test_ranking_string_orders_by_descending_score():
    m = RelationMatrix.from_rows(
        ("low", "high"),
        [["T", "F"],
         ["T", "T"]])
    board = global_score(m, basic_scheme())
    assert board.score("high") > board.score("low")
    assert ranking_string(rank(board)) == "high -> low"
