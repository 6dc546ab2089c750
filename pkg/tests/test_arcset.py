import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcfourier.arcset import (
    ArcUnion,
    FourierTuple,
    arc_coefficients,
    contains,
    fourier_coefficients,
    measure,
    normalize,
    random_arc_union,
    symmetric_difference_measure,
)
from arcfourier.errors import DegenerateArc

from oracles import monte_carlo_symdiff, quad_coefficient

PI = math.pi


def test_normalize_keeps_canonical_arc():
    assert normalize([(0, PI)]) == ArcUnion(((0.0, PI),))


def test_normalize_reduces_and_sorts():
    E = normalize([(5 * PI / 2 + 0.1, 3 * PI), (0.5, 1.0), (-PI / 2 + 0.2, 0.3)])
    assert E.count == 3
    assert E.arcs[0] == (0.5, 1.0)
    assert E.arcs[2][0] == pytest.approx(3 * PI / 2 + 0.2)
    assert E.arcs[2][1] == pytest.approx(2 * PI + 0.3)
    starts = [s for s, _ in E.arcs]
    assert starts == sorted(starts)
    assert all(0 <= s < 2 * PI and s < e < s + 2 * PI for s, e in E.arcs)


def test_normalize_wraparound_pair():
    E = normalize([(3 * PI / 2, 5 * PI / 2 - 0.1), (PI / 2, PI)])
    assert E.count == 2
    assert E.arcs[0] == (PI / 2, PI)
    assert E.arcs[1][0] == 3 * PI / 2
    assert E.arcs[1][1] == pytest.approx(5 * PI / 2 - 0.1)


def test_normalize_merges_arc_touching_across_zero():
    # [3pi/2, 5pi/2] ends exactly where [pi/2, pi] starts
    E = normalize([(3 * PI / 2, 5 * PI / 2), (PI / 2, PI)])
    assert E.count == 1
    s, e = E.arcs[0]
    assert s == pytest.approx(3 * PI / 2)
    assert e == pytest.approx(3 * PI)


def test_normalize_touching_halves_make_full_circle():
    assert normalize([(0, PI), (PI, 2 * PI)]).is_full


def test_normalize_full_span_and_empty():
    assert normalize([(1.0, 1.0 + 2 * PI)]).is_full
    assert normalize([]) == ArcUnion.empty()


def test_normalize_overlaps_merge():
    E = normalize([(0.0, 1.0), (0.5, 2.0), (3.0, 4.0)])
    assert E.arcs == ((0.0, 2.0), (3.0, 4.0))


def test_normalize_reversed_pair_wraps():
    E = normalize([(5.0, 1.0)])
    assert E.count == 1
    assert E.arcs[0] == pytest.approx((5.0, 1.0 + 2 * PI))


def test_degenerate_arc_rejected():
    with pytest.raises(DegenerateArc):
        normalize([(1.0, 1.0 + 1e-12)])
    with pytest.raises(DegenerateArc):
        normalize([(1.0, 1.0)])


raw_pairs = st.lists(
    st.tuples(st.floats(-10, 10), st.floats(0.01, 6.0)).map(lambda p: (p[0], p[0] + p[1])),
    max_size=6,
)


@settings(max_examples=200, deadline=None)
@given(raw_pairs)
def test_normalize_idempotent_and_invariants(pairs):
    E = normalize(pairs)
    if E.is_full or E.count == 0:
        return
    assert normalize(E.arcs) == E
    for s, e in E.arcs:
        assert 0 <= s < 2 * PI
        assert s < e < s + 2 * PI
    if E.count > 1:
        nxt = E.arcs[1:] + ((E.arcs[0][0] + 2 * PI, 0.0),)
        for (_, e1), (s2, _) in zip(E.arcs, nxt):
            assert s2 - e1 > 0
    assert measure(E) < 2 * PI


def test_fourier_full_and_empty():
    np.testing.assert_array_equal(fourier_coefficients(ArcUnion.full(), 2).c, [1, 0, 0])
    np.testing.assert_array_equal(fourier_coefficients(ArcUnion.empty(), 3).c, [0, 0, 0, 0])


def test_fourier_half_circle_matches_quadrature():
    # quadrature oracle gave (0.5, -0.3183098861837907j, ~0)
    c = fourier_coefficients(normalize([(0, PI)]), 2).c
    expected = [0.5, -1j / PI, 0.0]
    np.testing.assert_allclose(c, expected, atol=1e-15)
    for k in range(3):
        assert abs(c[k] - quad_coefficient([(0, PI)], k)) < 1e-12


def test_fourier_tuple_container():
    c = FourierTuple([0.5, 1j])
    assert c.n == 1 and len(c) == 2 and c[1] == 1j
    with pytest.raises(ValueError):
        FourierTuple([])


def test_conjugate_bound(random_union, rng):
    for _ in range(100):
        E = random_union(int(rng.integers(0, 9)))
        c = fourier_coefficients(E, 12).c
        assert abs(c[0].imag) == 0.0
        assert 0.0 <= c[0].real <= 1.0
        assert np.all(np.abs(c[1:]) <= c[0].real + 1e-12)


def test_additivity(random_union, rng):
    for _ in range(50):
        E = random_union(int(rng.integers(1, 7)))
        total = sum(arc_coefficients(s, e, 10) for s, e in E.arcs)
        np.testing.assert_allclose(fourier_coefficients(E, 10).c, total, rtol=0, atol=1e-14)


def test_quadrature_oracle_equivalence(random_union, rng):
    for _ in range(100):
        E = random_union(int(rng.integers(1, 6)))
        k = int(rng.integers(0, 9))
        c = fourier_coefficients(E, k).c[k]
        assert abs(c - quad_coefficient(E.arcs, k)) < 1e-10


def test_measure_and_contains():
    assert measure(ArcUnion.full()) == 2 * PI
    assert measure(ArcUnion.empty()) == 0.0
    E = normalize([(3 * PI / 2, 5 * PI / 2 - 0.5)])
    assert contains(E, 0.0) and contains(E, 3 * PI / 2) and not contains(E, PI)
    assert contains(ArcUnion.full(), 1.234)
    assert not contains(ArcUnion.empty(), 1.234)


def test_symmetric_difference_examples():
    E = normalize([(0, PI)])
    F = normalize([(PI / 2, 3 * PI / 2)])
    assert symmetric_difference_measure(E, E) == 0.0
    # Monte Carlo first, then the exact sweep
    assert monte_carlo_symdiff(E.arcs, F.arcs) == pytest.approx(PI, abs=1e-2)
    assert symmetric_difference_measure(E, F) == pytest.approx(PI, abs=1e-14)
    assert symmetric_difference_measure(ArcUnion.full(), ArcUnion.empty()) == pytest.approx(2 * PI)


def _pieces(E):
    return [(0.0, 2 * PI)] if E.is_full else list(E.arcs)


def test_symmetric_difference_vs_sampling(random_union, rng):
    for i in range(10):
        E, F = random_union(int(rng.integers(0, 4))), random_union(int(rng.integers(0, 4)))
        exact = symmetric_difference_measure(E, F)
        sampled = monte_carlo_symdiff(_pieces(E), _pieces(F), seed=i)
        assert exact == pytest.approx(sampled, abs=2e-2)


def test_random_union_respects_separation(rng):
    for k in range(0, 9):
        E = random_arc_union(rng, k)
        assert E.count == k
        ends = np.sort(np.concatenate([E.starts, E.ends]))
        if k:
            gaps = np.diff(np.concatenate([ends, [ends[0] + 2 * PI]]))
            assert gaps.min() >= 0.05 - 1e-12
