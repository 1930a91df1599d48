from fractions import Fraction

import mpmath
import pytest

from orbitkit.arith import ExactnessError
from orbitkit.asymptotics import (
    cluster_ratios,
    delta_gap,
    merten_series,
    mpf_to_fraction,
    pi_sum,
    ratio_series,
)
from orbitkit.counting import (
    CIRCLE_DOUBLING,
    THREE_ADIC_EXTENSION,
    build_table,
    custom_orbits,
)


@pytest.fixture(scope="module")
def tf():
    return build_table(THREE_ADIC_EXTENSION, 64)


@pytest.fixture(scope="module")
def tg():
    return build_table(CIRCLE_DOUBLING, 64)


def test_pi_sum_examples(tf, tg):
    assert pi_sum(tf, 3) == 3
    assert pi_sum(tg, 3) == 4
    assert pi_sum(tf, 1) == 1


def test_pi_sum_range(tf):
    with pytest.raises(ValueError):
        pi_sum(tf, 0)
    with pytest.raises(ValueError):
        pi_sum(tf, 65)


def test_ratio_series_values(tf):
    points = ratio_series(tf, 6, burn_in=1)
    assert [p.X for p in points] == [1, 2, 3, 4, 5, 6]
    assert points[0].ratio == Fraction(1, 4)
    assert points[-1].pi == 10
    assert points[-1].ratio == Fraction(60, 128)
    # hand-computed ratios: 1/4, 1/4, 9/16, 1/2, 25/32, 15/32
    assert [p.ratio for p in points] == [
        Fraction(1, 4),
        Fraction(1, 4),
        Fraction(9, 16),
        Fraction(1, 2),
        Fraction(25, 32),
        Fraction(15, 32),
    ]


def test_ratio_series_running_extrema(tf):
    points = ratio_series(tf, 6, burn_in=3)
    assert points[0].running_min == points[0].running_max == Fraction(9, 16)
    final = points[-1]
    assert final.running_min == Fraction(15, 32)
    assert final.running_max == Fraction(25, 32)
    for p in points:
        assert p.running_min <= p.ratio <= p.running_max


def test_ratio_series_validation(tf):
    with pytest.raises(ValueError):
        ratio_series(tf, 6, burn_in=6)
    with pytest.raises(ValueError):
        ratio_series(tf, 65, burn_in=1)
    with pytest.raises(ValueError):
        ratio_series(tf, 6, burn_in=0)


def test_delta_gap_examples(tf, tg):
    assert delta_gap(tf, tg, 6) == (12, 13)
    assert delta_gap(tf, tg, 1) == (0, 0)
    assert delta_gap(tf, tg, 3) == (1, 1)


def test_delta_gap_bound_holds(tf, tg):
    for X in range(1, 65):
        gap, even_bound = delta_gap(tf, tg, X)
        assert 0 <= gap <= even_bound


def test_delta_gap_negative_is_hard_error():
    bigger = build_table(custom_orbits((2,)), 1)
    smaller = build_table(custom_orbits((1,)), 1)
    with pytest.raises(ExactnessError):
        delta_gap(bigger, smaller, 1)


def test_delta_gap_range(tf, tg):
    with pytest.raises(ValueError):
        delta_gap(tf, tg, 0)
    with pytest.raises(ValueError):
        delta_gap(tf, tg, 65)


def test_merten_examples(tf, tg):
    assert [p.sum for p in merten_series(tf, 3)] == [
        Fraction(1, 2),
        Fraction(1, 2),
        Fraction(3, 4),
    ]
    assert merten_series(tg, 3)[-1].sum == Fraction(1)
    assert merten_series(tf, 1)[-1].sum == Fraction(1, 2)


def test_merten_denominator_is_power_of_two(tf):
    for p in merten_series(tf, 40):
        den = p.sum.denominator
        assert den & (den - 1) == 0


def test_merten_normalized_matches_sum(tf):
    points = merten_series(tf, 32)
    assert points[0].normalized is None
    assert points[0].log_x == 0
    for p in points[1:]:
        log_x = mpf_to_fraction(p.log_x)
        normalized = mpf_to_fraction(p.normalized)
        # normalized = sum / log X up to two 64-bit roundings
        assert abs(normalized * log_x - p.sum) < Fraction(1, 10**15)


def test_merten_precision_control(tf):
    coarse = merten_series(tf, 8, precision_bits=64)
    fine = merten_series(tf, 8, precision_bits=128)
    assert coarse[-1].sum == fine[-1].sum
    diff = abs(mpf_to_fraction(coarse[-1].log_x) - mpf_to_fraction(fine[-1].log_x))
    assert diff < Fraction(1, 2**60)
    with pytest.raises(ValueError):
        merten_series(tf, 8, precision_bits=53)


def test_merten_range(tf):
    with pytest.raises(ValueError):
        merten_series(tf, 0)
    with pytest.raises(ValueError):
        merten_series(tf, 65)


def test_cluster_ratios():
    assert cluster_ratios([]) == []
    values = [Fraction(1, 4), Fraction(251, 1000), Fraction(3, 4)]
    clusters = cluster_ratios(values, gap=0.01)
    assert len(clusters) == 2
    assert clusters[0][1] == 2 and clusters[1][1] == 1
    assert clusters[0][0] == pytest.approx(0.2505)


def test_mpf_to_fraction_exact():
    assert mpf_to_fraction(mpmath.mpf("0.5")) == Fraction(1, 2)
    assert mpf_to_fraction(mpmath.mpf(3) / 4) == Fraction(3, 4)
    assert mpf_to_fraction(-mpmath.mpf(7)) == Fraction(-7)
    assert mpf_to_fraction(mpmath.mpf(0)) == 0
    with pytest.raises(ValueError):
        mpf_to_fraction(mpmath.inf)
