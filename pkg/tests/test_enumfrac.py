import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbicurves.core import Classification, OrbifoldType, classify
from orbicurves.enumfrac import (
    TailBound,
    UnitFractionTuple,
    compute_bound_BN,
    deficit_denominator,
    enumerate_types,
    extension_family_type,
    max_fano_tail,
    subunit_prefixes,
    sylvester_extend,
    tail_bound,
    unit_sum,
)
from orbicurves.errors import InvalidInput, NotDeficitForm, SearchLimitExceeded


@pytest.mark.parametrize(
    "start, steps, expected",
    [
        ((2,), 4, (2, 3, 7, 43, 1807)),
        ((3, 3), 3, (3, 3, 4, 13, 157)),
        ((4, 4, 4), 3, (4, 4, 4, 5, 21, 421)),
    ],
)
def test_sylvester_sequences(start, steps, expected):
    assert sylvester_extend(UnitFractionTuple(start), steps).terms == expected


@pytest.mark.parametrize("start", [(2,), (3, 3), (4, 4, 4), (2, 4), (2, 3, 7)])
def test_sylvester_keeps_deficit_form_after_every_step(start):
    for steps in range(1, 5):
        extended = sylvester_extend(UnitFractionTuple(start), steps)
        b = deficit_denominator(extended.sum)
        assert b is not None
        # the next appended term is b + 1
        assert sylvester_extend(extended, 1).terms[-1] == b + 1


def test_sylvester_rejects_other_sums():
    with pytest.raises(NotDeficitForm):
        sylvester_extend(UnitFractionTuple((3, 4)), 1)
    with pytest.raises(InvalidInput):
        sylvester_extend(UnitFractionTuple((2,)), 0)


def test_unit_fraction_tuple_sorts_and_validates():
    assert UnitFractionTuple((7, 2, 3)).terms == (2, 3, 7)
    with pytest.raises(InvalidInput):
        UnitFractionTuple((1, 2))


@pytest.mark.parametrize(
    "prefix, expected",
    [
        ((3, 3, 4, 13), 155),
        ((2, 3, 7, 43), 1805),
        ((2, 3, 7), 41),
        ((2, 2), TailBound.UNBOUNDED),
        ((3, 3), TailBound.NO_TAIL),
    ],
)
def test_max_fano_tail(prefix, expected):
    assert max_fano_tail(UnitFractionTuple(prefix)) == expected


SUBUNIT_SAMPLE = [p for N in (1, 2, 3) for p in subunit_prefixes(N, 24)]


@given(st.sampled_from(SUBUNIT_SAMPLE))
def test_max_fano_tail_is_the_largest(prefix):
    tail = max_fano_tail(prefix)
    if tail is TailBound.NO_TAIL:
        assert unit_sum(prefix.terms + (max(prefix.last, 2),)) <= 1
    else:
        assert unit_sum(prefix.terms + (tail,)) > 1
        assert unit_sum(prefix.terms + (tail + 1,)) <= 1
        assert tail >= prefix.last


def test_sample_has_both_tail_variants():
    tails = [max_fano_tail(p) for p in SUBUNIT_SAMPLE]
    assert TailBound.NO_TAIL in tails
    assert sum(isinstance(t, int) for t in tails) >= 10


@pytest.mark.parametrize(
    "N, expected",
    [(1, Fraction(1, 2)), (2, Fraction(5, 6)), (3, Fraction(41, 42)), (4, Fraction(1805, 1806))],
)
def test_bound_BN(N, expected):
    assert compute_bound_BN(N) == expected


def test_bound_BN_matches_sylvester_tuples():
    for N in range(2, 5):
        assert compute_bound_BN(N) == sylvester_extend(UnitFractionTuple((2,)), N - 1).sum


def test_bound_BN_is_increasing_below_one():
    bounds = [compute_bound_BN(N) for N in range(1, 5)]
    assert bounds == sorted(set(bounds))
    assert all(b < 1 for b in bounds)


def test_bound_BN_brute_force_small():
    for N in (2, 3):
        best = max(
            s for s in (unit_sum(c) for c in itertools.combinations_with_replacement(range(2, 50), N)) if s < 1
        )
        assert compute_bound_BN(N) == best


def test_bound_BN_search_limit():
    with pytest.raises(SearchLimitExceeded):
        compute_bound_BN(6)
    with pytest.raises(SearchLimitExceeded):
        compute_bound_BN(3, limit=2)


def test_tail_bound():
    assert tail_bound(1) == 2
    assert tail_bound(2) == 3
    assert tail_bound(3) == 7
    assert tail_bound(4) == 43


def test_subunit_prefixes():
    assert [p.terms for p in subunit_prefixes(1, 4)] == [(2,), (3,), (4,)]
    assert [p.terms for p in subunit_prefixes(2, 4)] == [(2, 3), (2, 4), (3, 3), (3, 4), (4, 4)]
    assert (2, 3, 7) in [p.terms for p in subunit_prefixes(3, 7)]


def test_subunit_prefixes_keep_tuples_starting_with_two():
    # 1/2 < 1 and 1/2 + 1/3 < 1, so the short examples (3,), (4,) and (3, 4), (4, 4) are not the whole list
    assert (2,) in [p.terms for p in subunit_prefixes(1, 4)]
    assert {(2, 3), (2, 4)} <= {p.terms for p in subunit_prefixes(2, 4)}
    assert all(unit_sum(p.terms) < 1 for p in subunit_prefixes(2, 4))


def test_subunit_prefixes_brute_force():
    expected = [c for c in itertools.combinations_with_replacement(range(2, 13), 3) if unit_sum(c) < 1]
    assert [p.terms for p in subunit_prefixes(3, 12)] == expected


@pytest.mark.parametrize("kind", list(Classification))
def test_enumerate_types_brute_force(kind):
    expected = [
        c for c in itertools.combinations_with_replacement(range(2, 9), 4)
        if classify(OrbifoldType(2, c)) is kind
    ]
    found = enumerate_types(2, 4, 8, kind)
    assert [tuple(m.as_int() for m in t.mults) for t in found] == expected


def test_enumerate_types_finds_boundary_examples():
    fano = enumerate_types(2, 4, 42, Classification.FANO)
    trivial = enumerate_types(2, 4, 42, Classification.TRIVIAL_CANONICAL)
    assert OrbifoldType(2, (2, 3, 7, 41)) in fano
    assert OrbifoldType(2, (2, 3, 7, 42)) in trivial
    assert OrbifoldType(2, (2, 3, 7, 42)) not in fano


def test_extension_family_type():
    assert extension_family_type(3) == OrbifoldType(3, (3, 3, 4, 13, 155))
    assert extension_family_type(4) == OrbifoldType(4, (4, 4, 4, 5, 21, 419))
    with pytest.raises(InvalidInput):
        extension_family_type(1)
