import math
from fractions import Fraction

import pytest

from orbitkit.arith import ExactnessError
from orbitkit.counting import (
    CIRCLE_DOUBLING,
    THREE_ADIC_EXTENSION,
    OrbitTable,
    build_table,
    custom_orbits,
)
from orbitkit.zeta import (
    BoundaryPoint,
    modulus_product,
    orbit_product_series,
    radial_scan,
    series_modulus,
    xi1_closed_form,
    xi1_direct,
    xi_from_closed_parts,
    xi_series,
    zeta_series,
)


@pytest.fixture(scope="module")
def tf():
    return build_table(THREE_ADIC_EXTENSION, 150)


@pytest.fixture(scope="module")
def tg():
    return build_table(CIRCLE_DOUBLING, 150)


def test_xi_series_examples(tf, tg):
    assert xi_series(tf, 3).coeffs == (0, 1, Fraction(1, 2), Fraction(7, 3))
    assert xi_series(tg, 2).coeffs == (0, 1, Fraction(3, 2))
    assert xi_series(tf, 1).coeffs == (0, 1)


def test_xi_series_range(tf):
    with pytest.raises(ValueError):
        xi_series(tf, 151)
    with pytest.raises(ValueError):
        xi_series(tf, -1)


def test_zeta_series_examples(tf, tg):
    assert zeta_series(tf, 5).coeffs == (1, 1, 1, 3, 4, 10)
    assert zeta_series(tg, 5).coeffs == (1, 1, 2, 4, 8, 16)
    assert zeta_series(tf, 0).coeffs == (1,)


def test_zeta_equals_exp_of_xi(tf):
    assert zeta_series(tf, 40) == xi_series(tf, 40).exp()


def test_orbit_product_examples(tf, tg):
    assert orbit_product_series(tf, 5).coeffs == (1, 1, 1, 3, 4, 10)
    assert orbit_product_series(tg, 2).coeffs == (1, 1, 2)
    empty = build_table(custom_orbits((0, 0)), 2)
    assert orbit_product_series(empty, 2).coeffs == (1, 0, 0)


def test_two_routes_agree(tf, tg):
    assert zeta_series(tf, 120) == orbit_product_series(tf, 120)
    assert zeta_series(tg, 120) == orbit_product_series(tg, 120)


def test_doubling_zeta_closed_form(tg):
    series = zeta_series(tg, 60)
    assert series[0] == 1
    for n in range(1, 61):
        assert series[n] == 1 << (n - 1)


def test_zeta_coefficients_nonnegative_integers(tf):
    for c in zeta_series(tf, 100).coeffs:
        assert c.denominator == 1
        assert c >= 0


def test_zeta_hard_error_on_corrupt_table():
    corrupt = OrbitTable(
        spec=custom_orbits((5, 5)),
        n_max=2,
        fix_counts=(2, 1),
        least_counts=(2, 0),
        orbit_counts=(2, 0),
    )
    with pytest.raises(ExactnessError):
        zeta_series(corrupt, 2)
    negative = OrbitTable(
        spec=custom_orbits((4, 4)),
        n_max=1,
        fix_counts=(-2,),
        least_counts=(-2,),
        orbit_counts=(-2,),
    )
    with pytest.raises(ExactnessError):
        zeta_series(negative, 1)


def test_xi1_direct_examples():
    series = xi1_direct(6)
    assert series[2] == 3
    assert series[4] == Fraction(15, 2)
    assert series[6] == 7
    assert all(series[n] == 0 for n in (0, 1, 3, 5))
    with pytest.raises(ValueError):
        xi1_direct(1)


def test_xi1_closed_form_examples():
    series = xi1_closed_form(6)
    assert series[2] == 3
    assert series[3] == 0
    assert series[6] == 7
    with pytest.raises(ValueError):
        xi1_closed_form(1)


def test_xi1_identity_moderate():
    assert xi1_direct(130) == xi1_closed_form(130)


def test_decomposition_identity(tf):
    assert xi_series(tf, 130) == xi_from_closed_parts(130)


def test_modulus_product_at_origin():
    assert modulus_product(0j, 5) == 1.0


def test_modulus_product_exact_boundary_zeros():
    for j, r in ((1, 1), (1, 2), (2, 2)):
        point = BoundaryPoint(Fraction(1, 2), Fraction(j, 3**r))
        assert modulus_product(point, max(r, 1) + 2) == 0.0


def test_modulus_product_zero_needs_enough_terms():
    # the level-2 factor vanishes only once the product includes j = 2
    point = BoundaryPoint(Fraction(1, 2), Fraction(1, 9))
    assert modulus_product(point, 1) > 0.0
    assert modulus_product(point, 2) == 0.0


def test_modulus_product_minus_half_is_formula_zero():
    # (2z)**(2*3^j) = 1 at z = -1/2, so every level vanishes there
    point = BoundaryPoint(Fraction(1, 2), Fraction(1, 2))
    assert modulus_product(point, 0) == 0.0
    assert modulus_product(point, 3) == 0.0


def test_modulus_product_pole_and_range():
    with pytest.raises(ValueError):
        modulus_product(0.5 + 0j, 3)
    with pytest.raises(ValueError):
        modulus_product(BoundaryPoint(Fraction(1, 2), Fraction(0)), 3)
    with pytest.raises(ValueError):
        modulus_product(0.6 + 0j, 3)
    with pytest.raises(ValueError):
        modulus_product(0j, -1)
    with pytest.raises(ValueError):
        BoundaryPoint(Fraction(3, 4), Fraction(1, 3))
    with pytest.raises(ValueError):
        BoundaryPoint(Fraction(0), Fraction(1, 3))


def test_boundary_point_to_complex():
    z = BoundaryPoint(Fraction(1, 2), Fraction(1, 2)).to_complex()
    assert abs(z - (-0.5)) < 1e-15


def test_scan_product_decreases_toward_zero(tf):
    rows = radial_scan(tf, 1, 3, [0.49, 0.495, 0.499, 0.4995, 0.4999], 10, 150)
    values = [row.product_modulus for row in rows]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert values[-1] < 0.70


def test_scan_ray_pi_frozen_band(tf):
    # values computed from the product side; the formula's zero sits at the
    # endpoint z = -1/2 itself, so interior samples stay within this band
    rows = radial_scan(tf, 1, 2, [0.49, 0.495, 0.499, 0.4995, 0.4999], 10, 150)
    values = [row.product_modulus for row in rows]
    assert all(0.03 < v < 0.30 for v in values)
    assert values[0] == pytest.approx(0.2581938011935356, rel=1e-9)


def test_scan_deep_interior_agreement():
    table = build_table(THREE_ADIC_EXTENSION, 2000)
    row = radial_scan(table, 37, 100, [0.1], 10, 2000)[0]
    assert abs(row.product_modulus - row.series_modulus) <= 1e-9


def test_scan_rows_are_deterministic(tf):
    first = radial_scan(tf, 1, 3, [0.25, 0.4], 6, 100)
    second = radial_scan(tf, 1, 3, [0.25, 0.4], 6, 100)
    assert first == second
    assert first[0].angle_num == 1 and first[0].angle_den == 3
    assert first[0].terms == 6 and first[0].degree == 100


def test_scan_validation(tf):
    with pytest.raises(ValueError):
        radial_scan(tf, 1, 3, [0.5], 6, 100)
    with pytest.raises(ValueError):
        radial_scan(tf, 1, 3, [0.0], 6, 100)
    with pytest.raises(ValueError):
        radial_scan(tf, 1, 0, [0.1], 6, 100)
    with pytest.raises(ValueError):
        radial_scan(tf, 1, 3, [0.1], 6, 151)


def test_series_modulus_matches_direct_sum(tg):
    # doubling map at real z: exponent sum has the closed value
    # sum (2^n - 1) z^n / n = log((1-z)/(1-2z)) as the degree grows
    z = 0.3
    approx = series_modulus(tg, complex(z), 150)
    exact = abs((1 - z) / (1 - 2 * z))
    assert approx == pytest.approx(exact, abs=1e-12)


def test_coefficient_growth_window():
    # log2 of the coefficients grows at unit rate, matching the radius of
    # convergence 1/2 of the series
    table = build_table(THREE_ADIC_EXTENSION, 400)
    coeffs = zeta_series(table, 400)
    for n in range(200, 401):
        assert abs(math.log2(int(coeffs[n])) / n - 1.0) <= 0.05, f"n={n}"


def test_fix_ratio_witnesses(tf):
    ratios = [
        Fraction(tf.fix_counts[n], tf.fix_counts[n - 1]) for n in range(1, 150)
    ]
    assert any(r > Fraction(11, 5) for r in ratios)
    assert any(r < 1 for r in ratios)
