from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from montesinos.essentiality import INCOMPRESSIBLE, essentiality
from montesinos.invariants import LinkInputError, component_count, remainder, twist
from montesinos.system import KnotSpec, monotone_system
from montesinos.theorems import (
    CASE_TAGS,
    Interval,
    classify_case,
    crossing_number,
    diameter,
    extremal_twists,
    knot_report,
    max_witness,
    min_witness,
)

from conftest import knots

K237 = KnotSpec((F(-1, 2), F(1, 3), F(1, 7)))
K_ALT = KnotSpec((F(1, 2), F(1, 3), F(1, 7)))
K_CUT = KnotSpec((F(-1, 2), F(2, 3), F(2, 3)))
K_A = KnotSpec((F(-1, 3), F(1, 3), F(1, 7)))
K_III = KnotSpec((F(-1, 2), F(-1, 3), F(1, 5)))


@pytest.mark.parametrize("k,tag", [(K237, "2-2-2-1b-b"), (K_ALT, "1"), (K_CUT, "2-3-1"), (K_A, "2-2-2-1a"), (K_III, "3")])
def test_case_tags(k, tag):
    info = classify_case(k)
    assert info.tag == tag and tag in CASE_TAGS


def test_case_normalization_recorded():
    info = classify_case(KnotSpec((F(1, 7), F(1, 2), F(1, 3) - 1)))
    assert info.normalized is not None
    assert -1 < info.normalized[0] < 0 and all(0 < t < 1 for t in info.normalized[1:])


@pytest.mark.parametrize("k,tmax,tmin,diam,cr", [
    (K237, 2, -18, 20, 12),
    (K_ALT, 6, -18, 24, 12),
    (K_CUT, 7, -6, 13, 8),
    (K_A, 3, -18, 21, 13),
])
def test_extremal_values(k, tmax, tmin, diam, cr):
    hi, lo, _, _ = extremal_twists(k)
    assert hi == Interval(F(tmax), F(tmax)) and lo == Interval(F(tmin), F(tmin))
    assert diameter(k) == Interval(F(diam), F(diam))
    assert crossing_number(k) == cr


def test_witnesses():
    w = max_witness(K237)
    assert w.type_tag == "II" and twist(w) == monotone_system(K237).twist - 4
    assert essentiality(w).status == INCOMPRESSIBLE
    w = max_witness(K_A)
    assert w.type_tag == "I" and F(1, 2) < w.cut_u <= F(2, 3) and remainder(w) >= 0
    w = max_witness(K_III)
    assert w.type_tag == "III" and remainder(w) == 0
    m = min_witness(K237)
    assert twist(m) == -18


def test_report_verdicts():
    r = knot_report(K237)
    assert r.verdicts["thm1"].margins == (2, 4)
    assert r.all_pass
    alt = knot_report(K_ALT)
    assert alt.alternating and alt.diameter.lo == 2 * alt.crossing_number


def test_links_rejected():
    with pytest.raises(LinkInputError):
        diameter(KnotSpec((F(-1, 2), F(-1, 2), F(1, 3))))


@settings(max_examples=25)
@given(knots(3, 6))
def test_report_properties(k):
    if component_count(k) != 1:
        return
    r = knot_report(k)
    assert r.all_pass
    assert r.tau_min.lo <= 0 <= r.tau_max.hi
    m = knot_report(k.mirror())
    assert m.tau_max == -r.tau_min and m.diameter == r.diameter
    assert m.crossing_number == r.crossing_number


def test_family_gap_decreases():
    gaps = []
    for n in range(3, 12):
        k = KnotSpec((F(-1, 3), F(1, 3), F(1, n)))
        gaps.append(diameter(k).lo - 2 * crossing_number(k))
    assert all(g > -6 for g in gaps)
    assert all(a > b for a, b in zip(gaps, gaps[1:]))
