import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hkcat.errors import (
    InvalidDiamond,
    NegativeDimension,
    NotPalindromic,
    OddDegreePresent,
    SupportOutOfRange,
    WrongDimension,
)
from hkcat.hodge import (
    GUAN_MODES,
    HochschildNumbers,
    HodgeDiamond,
    blow_up_opc4_points,
    builtin_diamond,
    guan_b2_admissible,
    hk4_betti_from_hochschild,
    hkr_homology,
    prymian_pipeline,
    salamon_check,
    serre_shift_cohomology,
    sod_subtract_exceptional,
)


@st.composite
def diamonds(draw, max_d=4):
    d = draw(st.integers(0, max_d))
    rows = []
    for r in range(d + 1):
        half = draw(st.lists(st.integers(0, 30), min_size=r // 2 + 1, max_size=r // 2 + 1))
        rows.append(half + half[: (r + 1) // 2][::-1])
    return HodgeDiamond.from_upper_half(rows)


def test_k3_diamond():
    k3 = builtin_diamond("k3")
    assert k3.betti() == [1, 0, 22, 0, 1]
    assert k3.euler() == 24
    assert hkr_homology(k3).nonzero() == {-2: 1, 0: 22, 2: 1}


def test_point():
    assert builtin_diamond("point").euler() == 1


def test_invalid_diamonds():
    with pytest.raises(InvalidDiamond):
        HodgeDiamond(1, [[1, 2], [0, 1]])
    with pytest.raises(InvalidDiamond):
        HodgeDiamond(1, [[1, 0], [0, 2]])
    with pytest.raises(InvalidDiamond):
        HodgeDiamond.from_upper_half([[1], [0]])
    with pytest.raises(InvalidDiamond):
        HodgeDiamond.from_upper_half([[1], [-1, -1]])


def test_text_round_trip_and_full_layout():
    p0 = builtin_diamond("prymian_P0")
    assert HodgeDiamond.from_text(p0.to_text()) == p0
    full = "\n".join(" ".join(map(str, r)) for r in p0.full_rows())
    assert HodgeDiamond.from_text("# full diamond\n" + full) == p0
    assert HodgeDiamond.from_text(p0.pretty()) == p0
    assert HodgeDiamond.from_json(p0.to_json()) == p0


def test_text_rejects_inconsistent_lower_half():
    with pytest.raises(InvalidDiamond):
        HodgeDiamond.from_text("1\n0 0\n1 20 1\n0 0\n2\n")
    with pytest.raises(InvalidDiamond):
        HodgeDiamond.from_text("1\n0 x\n")


@given(diamonds())
def test_text_round_trip_property(dia):
    assert HodgeDiamond.from_text(dia.to_text()) == dia


@given(diamonds())
@settings(max_examples=60)
def test_hkr_euler_consistency(dia):
    hh = hkr_homology(dia)
    assert hh.euler() == dia.euler()
    assert sum(hh.values) == sum(dia.betti())
    assert hh.is_symmetric()


def test_hkr_euler_on_twenty_random_diamonds():
    rnd = random.Random(11)
    for _ in range(20):
        d = rnd.randint(0, 5)
        rows = []
        for r in range(d + 1):
            half = [rnd.randint(0, 50) for _ in range(r // 2 + 1)]
            rows.append(half + half[: (r + 1) // 2][::-1])
        dia = HodgeDiamond.from_upper_half(rows)
        assert hkr_homology(dia).euler() == dia.euler()


@given(diamonds(max_d=4).filter(lambda x: x.d == 4), st.integers(0, 40))
def test_blow_up_adds_three_per_point_in_degree_zero(dia, m):
    before, after = hkr_homology(dia), hkr_homology(blow_up_opc4_points(dia, m))
    assert after[0] == before[0] + 3 * m
    assert {k: v for k, v in after.nonzero().items() if k} == {k: v for k, v in before.nonzero().items() if k}


def test_blow_up_needs_fourfold():
    with pytest.raises(WrongDimension):
        blow_up_opc4_points(builtin_diamond("k3"), 1)


def test_blow_up_of_builtin():
    assert blow_up_opc4_points(builtin_diamond("prymian_P0"), 28) == builtin_diamond("prymian_P0_resolved")


def test_hochschild_constructors():
    hh = HochschildNumbers.homology({-2: 1, 0: 22, 2: 1})
    assert hh.d == 2 and hh.lo == -2 and hh[5] == 0
    coh = HochschildNumbers.cohomology([1, 0, 22, 0, 1])
    assert coh.d == 2
    assert coh.to_json() == {"variant": "cohomology", "d": 2, "dims": {"0": 1, "1": 0, "2": 22, "3": 0, "4": 1}}
    with pytest.raises(SupportOutOfRange):
        HochschildNumbers.homology({3: 1}, d=2)
    with pytest.raises(NegativeDimension):
        HochschildNumbers.cohomology([1, -1, 1])


def test_sod_subtraction():
    hh = hkr_homology(builtin_diamond("k3"))
    assert sod_subtract_exceptional(hh, 2)[0] == 20
    with pytest.raises(NegativeDimension):
        sod_subtract_exceptional(hh, 23)


def test_serre_shift():
    hh = hkr_homology(builtin_diamond("k3"))
    assert serre_shift_cohomology(hh, 2).values == (1, 0, 22, 0, 1)
    with pytest.raises(SupportOutOfRange):
        serre_shift_cohomology(hh, 1)


def test_prymian_pipeline_numbers():
    run = prymian_pipeline()
    assert run.singular(1, 1) == 14 and run.singular(2, 2) == 148
    assert run.resolved(1, 1) == 42 and run.resolved(2, 2) == 176
    assert run.hh_resolved[0] == 262
    assert run.hh_category[0] == 206
    assert run.hh_cohomology.values == (1, 0, 16, 0, 206, 0, 16, 0, 1)
    assert run.salamon.holds
    assert run.betti == (1, 0, 16, 0, 206, 0, 16, 0, 1)


def test_salamon_relation():
    ok = salamon_check([1, 0, 16, 0, 206], 2)
    assert ok.holds and ok.lhs == ok.rhs == 206
    bad = salamon_check([1, 0, 17, 0, 206], 2)
    assert not bad.holds
    assert bad.lhs == 216 and bad.rhs == 206


def test_salamon_on_known_fourfold():
    # Hilbert square of a K3: b2 = 23, b4 = 276
    assert salamon_check([1, 0, 23, 0, 276, 0, 23, 0, 1], 2).holds


def test_salamon_half_integer_rhs():
    res = salamon_check([1, 0, 0], 1)
    assert res.rhs == Fraction(0) and isinstance(res.rhs, Fraction)
    assert salamon_check([0, 0, 1], 1).rhs == Fraction(1, 2)


def test_salamon_support():
    with pytest.raises(SupportOutOfRange):
        salamon_check([1, 0, 0, 0, 0, 0, 0, 0, 0, 1], 2)


@pytest.mark.parametrize("mode", GUAN_MODES)
def test_guan(mode):
    assert guan_b2_admissible(16, mode) is False
    assert guan_b2_admissible(23, mode) is True
    assert guan_b2_admissible(7, mode) is True


def test_guan_modes_differ_at_eight():
    assert guan_b2_admissible(8, "paper_literal") is False
    assert guan_b2_admissible(8, "inclusive") is True
    with pytest.raises(ValueError):
        guan_b2_admissible(8, "loose")


def test_betti_from_hochschild():
    assert hk4_betti_from_hochschild([1, 0, 16, 0, 206]) == (1, 0, 16, 0, 206, 0, 16, 0, 1)
    with pytest.raises(NotPalindromic):
        hk4_betti_from_hochschild([1, 0, 16, 0, 206, 0, 15, 0, 1])
    with pytest.raises(OddDegreePresent):
        hk4_betti_from_hochschild([1, 1, 16, 0, 206])
