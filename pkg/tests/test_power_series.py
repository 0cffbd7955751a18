from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra.errors import NonUnitLinearTermError
from src.algebra.polynomial import PolyElement, generator
from src.algebra.ring import RATIONALS, Generator, RingDescriptor
from src.hopf.convolution import conv_power
from src.hopf.descriptor import beta_instance, comultiplication, counit
from src.series.power_series import (
    PowerSeries,
    Series1,
    Series2,
    compose1,
    first_difference,
    map_coeffs,
    reversion,
    subst2,
    subst_into1,
    substitute,
)
from tests.strategies import (
    rational_coefficients,
    rational_series1,
    rational_series2,
    to_sympy,
    truncated_coefficients,
)

x, u, v = sympy.symbols("x u v")


@st.composite
def subst2_cases(draw):
    order = draw(st.integers(1, 5))
    return (draw(rational_series2(order)), draw(rational_series1(order)), draw(rational_series1(order)), order)


@st.composite
def subst_into1_cases(draw):
    order = draw(st.integers(1, 5))
    return draw(rational_series1(order)), draw(rational_series2(order)), order


@st.composite
def monic_series(draw):
    order = draw(st.integers(1, 5))
    return draw(rational_series1(order, monic=True)), order


class TestOracle:
    @given(subst2_cases())
    @settings(max_examples=100, deadline=None)
    def test_subst2_matches_naive_expansion(self, case):
        F, g, h, order = case
        expected = to_sympy(F, (u, v)).subs({u: to_sympy(g, (u,)), v: to_sympy(h, (v,))}, simultaneous=True)
        assert rational_coefficients(subst2(F, g, h)) == truncated_coefficients(expected, (u, v), order)

    @given(subst_into1_cases())
    @settings(max_examples=100, deadline=None)
    def test_subst_into1_matches_naive_expansion(self, case):
        phi, F, order = case
        expected = to_sympy(phi, (x,)).subs(x, to_sympy(F, (u, v)))
        assert rational_coefficients(subst_into1(phi, F)) == truncated_coefficients(expected, (u, v), order)

    @given(monic_series())
    @settings(max_examples=100, deadline=None)
    def test_reversion_is_a_compositional_inverse(self, case):
        f, order = case
        g = reversion(f)
        composed = to_sympy(f, (x,)).subs(x, to_sympy(g, (x,)))
        assert truncated_coefficients(composed, (x,), order) == {(1,): Fraction(1)}
        composed = to_sympy(g, (x,)).subs(x, to_sympy(f, (x,)))
        assert truncated_coefficients(composed, (x,), order) == {(1,): Fraction(1)}


class TestSeries:
    def test_reversion_closed_form(self):
        f = Series1.from_scalars(RATIONALS, 4, {1: 1, 2: 1})
        assert reversion(f) == Series1.from_scalars(RATIONALS, 4, {1: 1, 2: -1, 3: 2, 4: -5})

    def test_reversion_needs_unit_linear_term(self):
        with pytest.raises(NonUnitLinearTermError):
            reversion(Series1.from_scalars(RATIONALS, 3, {1: 2}))

    def test_truncation_by_total_degree(self):
        x1 = Series1.x(RATIONALS, 3)
        assert (x1 * x1 * x1 * x1).is_zero()
        uv = Series2.u(RATIONALS, 2) * Series2.v(RATIONALS, 2)
        assert (uv * Series2.u(RATIONALS, 2)).is_zero()

    def test_constant_terms_rejected(self):
        with pytest.raises(ValueError):
            Series1.from_scalars(RATIONALS, 3, {0: 1})

    def test_mixed_orders_truncate_to_smaller(self):
        a = Series1.from_scalars(RATIONALS, 5, {1: 1, 5: 1})
        b = Series1.from_scalars(RATIONALS, 3, {1: 1})
        assert (a + b).order == 3
        assert (a + b) == Series1.from_scalars(RATIONALS, 3, {1: 2})

    def test_swap_and_restrictions(self):
        F = Series2(RATIONALS, 3, {(1, 0): PolyElement.one(RATIONALS), (2, 1): PolyElement.constant(RATIONALS, 5)})
        assert F.swap().coeff(1, 2) == PolyElement.constant(RATIONALS, 5)
        assert F.restrict_v_zero() == Series1.x(RATIONALS, 3)
        assert F.restrict_u_zero().is_zero()

    def test_three_variable_substitution(self):
        X, Y, Z = (PowerSeries.variable(RATIONALS, 3, 3, i) for i in range(3))
        add = Series2.u(RATIONALS, 3) + Series2.v(RATIONALS, 3)
        total = substitute(add, [substitute(add, [X, Y]), Z])
        assert total == X + Y + Z

    def test_compose_with_zero(self):
        f = Series1.from_scalars(RATIONALS, 4, {1: 1, 2: 3})
        zero = Series1.zero1(RATIONALS, 4)
        assert compose1(f, zero).is_zero()
        assert compose1(zero, f).is_zero()

    def test_polynomial_coefficients(self):
        ring = RingDescriptor.base_ring("A", (Generator("a", 1),))
        a = generator(ring, "a")
        f = Series1(ring, 3, {1: PolyElement.one(ring), 2: a})
        g = reversion(f)
        assert g.coeff(2) == -a
        assert g.coeff(3) == 2 * a ** 2

    def test_truncate_weights(self):
        ring = RingDescriptor.base_ring("A", (Generator("a", 1),))
        a = generator(ring, "a")
        f = Series1(ring, 3, {1: PolyElement.one(ring), 2: a + a ** 2, 3: a ** 3})
        assert f.truncate_weights(1) == Series1(ring, 3, {1: PolyElement.one(ring), 2: a})

    def test_to_records_use_exact_rationals(self):
        f = Series1.from_scalars(RATIONALS, 3, {1: 1, 3: Fraction(-1, 2)})
        assert f.to_records() == [((1,), "1/1"), ((3,), "-1/2")]

    def test_first_difference_names_coefficient(self):
        a = Series1.from_scalars(RATIONALS, 3, {1: 1, 2: 1})
        b = Series1.from_scalars(RATIONALS, 3, {1: 1})
        assert first_difference(a, a) is None
        assert first_difference(a, b) == "coefficient of x^2: 1/1 vs 0/1"


BETA = beta_instance(2)


@st.composite
def carrier_series1(draw, order: int):
    """Series over the beta carrier with coefficients in b1, b2 and small rationals."""
    carrier = BETA.carrier
    b1, b2 = generator(carrier, "b1"), generator(carrier, "b2")
    coeffs = {}
    for k in range(1, order + 1):
        a, c, d = (draw(st.integers(-2, 2)) for _ in range(3))
        coeffs[k] = PolyElement.constant(carrier, a) + b1 * c + b2 * d
    return Series1(carrier, order, coeffs)


@st.composite
def carrier_series2(draw, order: int):
    carrier = BETA.carrier
    b1 = generator(carrier, "b1")
    coeffs = {}
    for i in range(order + 1):
        for j in range(order + 1 - i):
            if i + j and draw(st.booleans()):
                coeffs[(i, j)] = PolyElement.constant(carrier, draw(st.integers(-2, 2))) + b1 * draw(st.integers(-2, 2))
    return Series2(carrier, order, coeffs)


carrier_morphisms = st.sampled_from([
    counit(BETA),
    comultiplication(BETA),
    conv_power(BETA, 2),
    conv_power(BETA, -1),
])


class TestComposition:
    @settings(max_examples=50, deadline=None)
    @given(st.data())
    def test_compose1_is_associative(self, data):
        order = data.draw(st.integers(1, 4))
        f, g, h = (data.draw(rational_series1(order)) for _ in range(3))
        assert compose1(compose1(f, g), h) == compose1(f, compose1(g, h))

    def test_geometric_series_compose_to_identity(self):
        order = 5
        x_over_one_minus_x = Series1.from_scalars(RATIONALS, order, {k: 1 for k in range(1, order + 1)})
        x_over_one_plus_x = Series1.from_scalars(RATIONALS, order, {k: (-1) ** (k + 1) for k in range(1, order + 1)})
        assert compose1(x_over_one_minus_x, x_over_one_plus_x) == Series1.x(RATIONALS, order)
        assert compose1(x_over_one_plus_x, x_over_one_minus_x) == Series1.x(RATIONALS, order)


class TestMapCoeffs:
    @settings(max_examples=30, deadline=None)
    @given(st.data())
    def test_commutes_with_compose1(self, data):
        order = data.draw(st.integers(1, 3))
        f, g = data.draw(carrier_series1(order)), data.draw(carrier_series1(order))
        morphism = data.draw(carrier_morphisms)
        assert map_coeffs(compose1(f, g), morphism) == compose1(map_coeffs(f, morphism), map_coeffs(g, morphism))

    @settings(max_examples=30, deadline=None)
    @given(st.data())
    def test_commutes_with_subst2(self, data):
        order = data.draw(st.integers(1, 3))
        F = data.draw(carrier_series2(order))
        g, h = data.draw(carrier_series1(order)), data.draw(carrier_series1(order))
        morphism = data.draw(carrier_morphisms)
        expected = subst2(map_coeffs(F, morphism), map_coeffs(g, morphism), map_coeffs(h, morphism))
        assert map_coeffs(subst2(F, g, h), morphism) == expected

    def test_diagonal_and_counit_on_twist_series(self):
        carrier, tensor = BETA.carrier, BETA.tensor_square
        b = Series1(carrier, 2, {1: PolyElement.one(carrier), 2: generator(carrier, "b1")})
        diagonal = Series1(tensor, 2, {1: PolyElement.one(tensor), 2: generator(tensor, "b1", 0) + generator(tensor, "b1", 1)})
        assert map_coeffs(b, comultiplication(BETA)) == diagonal
        assert map_coeffs(b, counit(BETA)) == Series1.x(RATIONALS, 2)
        assert map_coeffs(b, conv_power(BETA, 1)) == b
