from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from montesinos.edgepath import (
    DECREASING,
    INCREASING,
    Edgepath,
    breakpoints,
    enumerate_basic_edgepaths,
    evaluate,
    is_completely_reversible,
    monotone_basic_edgepath,
    path_twist,
)
from montesinos.farey import DiagramError, fractions_up_to, is_farey_pair, is_integer, u_coord

from conftest import tangles


def _brute_paths(t):
    """Leftward Farey walks from t to an integer, no three consecutive vertices in one triangle."""
    out = []

    def walk(path):
        x = path[-1]
        if is_integer(x):
            out.append(tuple(path))
            return
        q = x.denominator
        for d in range(1, q):
            for n in range(x.numerator * d // q - 1, x.numerator * d // q + 3):
                y = F(n, d)
                if y.denominator != d or not is_farey_pair(x, y):
                    continue
                if len(path) >= 2 and is_farey_pair(path[-2], y):
                    continue
                walk(path + [y])

    walk([t])
    return sorted(out)


@pytest.mark.parametrize("t,expected", [
    (F(1, 2), [(F(1, 2), F(0)), (F(1, 2), F(1))]),
    (F(1, 3), [(F(1, 3), F(0)), (F(1, 3), F(1, 2), F(1))]),
])
def test_basic_edgepaths_examples(t, expected):
    assert sorted(p.vertices for p in enumerate_basic_edgepaths(t)) == expected


def test_one_seventh_has_two_basic_paths():
    paths = enumerate_basic_edgepaths(F(1, 7))
    assert len(paths) == 2
    assert {p.vertices[-1] for p in paths} == {F(0), F(1)}


def test_five_eighths_paths():
    got = {p.vertices for p in enumerate_basic_edgepaths(F(5, 8))}
    assert (F(5, 8), F(3, 5), F(1, 2), F(0)) in got
    assert (F(5, 8), F(3, 5), F(1, 2), F(1)) in got
    assert len(got) == 4


def test_basic_paths_match_brute_force_up_to_16():
    for t in fractions_up_to(16, F(-2), F(2)):
        if t.denominator == 1:
            continue
        paths = enumerate_basic_edgepaths(t)
        assert sorted(p.vertices for p in paths) == _brute_paths(t)
        assert len(paths) >= 2
        for p in paths:
            assert is_integer(p.vertices[-1]) and u_coord(p.vertices[-1]) == 0
            assert p.is_basic and not p.vertical and p.infinity_u is None


def test_integral_tangle_rejected():
    with pytest.raises(DiagramError):
        enumerate_basic_edgepaths(F(2))


@pytest.mark.parametrize("t,direction,vertices", [
    (F(1, 3), DECREASING, (F(1, 3), F(0))),
    (F(1, 7), INCREASING, (F(1, 7), F(1, 6), F(1, 5), F(1, 4), F(1, 3), F(1, 2), F(1))),
    (F(-1, 2), DECREASING, (F(-1, 2), F(-1))),
])
def test_monotone_paths(t, direction, vertices):
    p = monotone_basic_edgepath(t, direction)
    assert p.vertices == vertices
    assert p in enumerate_basic_edgepaths(t)
    sign = 1 if direction == INCREASING else -1
    assert all(e.direction_sign == sign for e in p.edges())


def test_evaluate_examples():
    p = monotone_basic_edgepath(F(1, 3))
    assert evaluate(p, F(1, 3)) == F(1, 6)
    assert evaluate(p, F(5, 6)) == F(1, 3)
    assert evaluate(monotone_basic_edgepath(F(-1, 2)), 0) == -1
    with pytest.raises(DiagramError):
        evaluate(p, F(3, 2))


@given(tangles(12, -2, 2), st.fractions(0, 1))
def test_monotone_paths_bound_every_basic_path(t, u):
    lo = monotone_basic_edgepath(t, DECREASING)
    hi = monotone_basic_edgepath(t, INCREASING)
    for p in enumerate_basic_edgepaths(t):
        assert evaluate(p, 1) == t
        for x in [u] + [b for b, _ in breakpoints(p)]:
            assert evaluate(lo, x) <= evaluate(p, x) <= evaluate(hi, x)


def test_path_twist_examples():
    assert path_twist(monotone_basic_edgepath(F(1, 3))) == 2
    assert path_twist(monotone_basic_edgepath(F(1, 7), INCREASING)) == -12
    assert path_twist(Edgepath(F(2, 5), constant_u=F(1, 2))) == 0


def test_complete_reversibility():
    staircase = Edgepath(F(3, 4), (F(3, 4), F(2, 3), F(1, 2), F(0)))
    assert is_completely_reversible(staircase)
    assert is_completely_reversible(monotone_basic_edgepath(F(1, 3)))
    # <1/3>-<1/2>-<1>: the two edges lie in triangles (0,1/2,1/3) and (1/2,1,0) sharing <0>-<1/2>
    assert is_completely_reversible(Edgepath(F(1, 3), (F(1, 3), F(1, 2), F(1))))
    assert not is_completely_reversible(Edgepath(F(3, 5), (F(3, 5), F(1, 2), F(0))))


def test_mirror_negates_twist():
    for p in enumerate_basic_edgepaths(F(5, 8)):
        assert path_twist(p.mirror()) == -path_twist(p)
