from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gkh.codec import serialize_pd
from gkh.coloring import ZeroDeterminantError, count_colorings, is_fox_coloring
from gkh.fixtures import fixture_diagram
from gkh.verify import (
    GenerationError,
    VerifyError,
    brute_force_coloring_count,
    closed_form_count,
    hypotheses_of,
    random_alternating_diagram,
    verify_connected_sum,
    verify_gkh,
)

# name -> (t, t_columns, s, perfect column count)
EXPECTED_REPORTS = {
    "3_1": (1, (0,), 1, 2),
    "4_1": (1, (0,), 1, 3),
    "5_2": (1, (0,), 1, 4),
    "7_7": (1, (0,), 1, 5),
    "7_7b": (1, (0,), 1, 5),
    "10_123": (1, (2,), 2, 1),
    "w6": (1, (3,), 2, 2),
    "p33333": (3, (1, 4, 6), 4, 0),
    "p3336": (2, (4, 7), 3, 0),
}


def test_fixture_reports_frozen():
    for name, (t, t_columns, s, perfect) in EXPECTED_REPORTS.items():
        r = verify_gkh(fixture_diagram(name), name=name)
        assert r.passed and r.guaranteed and r.pseudo_free, name
        assert (r.t, r.t_columns, r.s, len(r.perfect_columns)) == (
            t,
            t_columns,
            s,
            perfect,
        ), name
        assert r.s < len(fixture_diagram(name).crossings), name
        assert len(r.distinguishing) == r.s, name


def test_part_implications():
    # the three parts are loyal to each other: b <=> a and c => b
    for name in ["3_1", "w6", "p33333", "square", "granny"]:
        r = verify_gkh(fixture_diagram(name), name=name)
        assert r.part_a == r.part_b, name
        if r.part_c:
            assert r.part_b, name


def test_square_knot_fails_on_junction_pair():
    sq = fixture_diagram("square")
    r = verify_gkh(sq, name="square")
    assert not r.guaranteed  # composite, so primeness fails
    assert not r.passed
    assert r.failures == ((1, 5),)
    assert r.failures == sq.junction_arc_pairs
    assert r.t is None and r.t_columns == ()


def test_hypotheses_labels():
    conway = hypotheses_of(fixture_diagram("conway"))
    assert not conway.alternating and conway.reduced and conway.prime
    assert conway.determinant == 1 and not conway.satisfied
    kink = hypotheses_of(fixture_diagram("kink"))
    assert kink.alternating and not kink.reduced
    square = hypotheses_of(fixture_diagram("square"))
    assert square.alternating and square.reduced and not square.prime


def test_verify_rejects_zero_determinant():
    with pytest.raises(ZeroDeterminantError):
        verify_gkh(fixture_diagram("split"))


def test_second_seven_seven_diagram():
    # same knot as 7_7 drawn with a different arc order; in that order the
    # individually perfect columns sit at 2, 4, 5, 6 one-based
    d = fixture_diagram("7_7b")
    r = verify_gkh(d, name="7_7b", base=2)
    assert r.passed
    order = (0, 5, 6, 3, 2, 4, 1)
    ours = [a for a in range(7) if a != 2]
    tabulated = [a for a in range(7) if a != 6]
    translated = {
        tabulated.index(order[ours[j]]) for j in r.perfect_columns
    }
    assert translated == {1, 3, 4, 5}
    # one coloring using the seven values 0,1,2,4,7,12,20 separates all arcs
    shown = (2, 7, 12, 20, 4, 1, 0)
    assert is_fox_coloring(d, shown, 21)
    assert len(set(shown)) == 7


def test_connected_sum_square():
    r = verify_connected_sum(
        [fixture_diagram("3_1_mirror"), fixture_diagram("3_1")]
    )
    assert r.passed
    assert r.group.invariant_factors == (3, 3)
    assert r.direct_sum_factors == (3, 3)
    assert r.junction_pairs == ((1, 5),)
    assert r.failures == ((1, 5),)
    assert r.joining_equal


def test_connected_sum_mixed_parts():
    r = verify_connected_sum([fixture_diagram("3_1"), fixture_diagram("4_1")])
    assert r.passed
    assert r.group.invariant_factors == (15,)
    assert r.junction_pairs == ((2, 5),)


def test_connected_sum_three_parts():
    r = verify_connected_sum(
        [fixture_diagram("3_1"), fixture_diagram("4_1"), fixture_diagram("5_2")]
    )
    assert r.passed
    assert r.group.invariant_factors == (105,)
    assert r.junction_pairs == ((2, 5), (6, 11))


def test_connected_sum_single_part_degenerates():
    r = verify_connected_sum([fixture_diagram("4_1")])
    assert r.passed
    assert r.group.invariant_factors == (5,)
    assert r.junction_pairs == () and r.failures == ()


def test_connected_sum_errors():
    with pytest.raises(VerifyError):
        verify_connected_sum([])
    with pytest.raises(ZeroDeterminantError):
        verify_connected_sum([fixture_diagram("split")])


SMALL_FIXTURES = [
    "3_1",
    "3_1_mirror",
    "4_1",
    "5_2",
    "7_7",
    "7_7b",
    "8_19",
    "square",
    "granny",
    "hopf",
    "kink",
    "split",
]


def test_brute_force_matches_closed_form():
    for name in SMALL_FIXTURES:
        d = fixture_diagram(name)
        assert len(d.arcs) <= 8, name
        for k in range(2, 7):
            brute = brute_force_coloring_count(d, k)
            assert brute == closed_form_count(d, k), (name, k)
            assert brute == count_colorings(d, k), (name, k)


def test_brute_force_examples():
    assert brute_force_coloring_count(fixture_diagram("3_1"), 3) == 9
    assert brute_force_coloring_count(fixture_diagram("hopf"), 2) == 4


def test_brute_force_respects_limit():
    with pytest.raises(VerifyError):
        brute_force_coloring_count(fixture_diagram("p33333"), 5)


def test_random_diagram_deterministic():
    a = random_alternating_diagram(8, seed=1)
    b = random_alternating_diagram(8, seed=1)
    assert serialize_pd(a.to_pd()) == serialize_pd(b.to_pd())


@given(st.integers(0, 500))
@settings(max_examples=30, deadline=None)
def test_random_diagram_properties(seed):
    d = random_alternating_diagram(10, seed)
    assert d.is_alternating and d.is_reduced and d.is_prime_diagram
    assert 3 <= len(d.crossings) <= 10
    r = verify_gkh(d)
    assert r.passed and r.pseudo_free


def test_random_diagram_rejects_small_bound():
    with pytest.raises(GenerationError):
        random_alternating_diagram(2, seed=0)
