import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra.errors import RingMismatchError
from src.algebra.morphism import apply_map, identity_morphism
from src.algebra.polynomial import Monomial, PolyElement, generator
from src.algebra.ring import Generator, RingDescriptor
from src.hopf.convolution import (
    antipode,
    compose,
    conv_power,
    convolution,
    is_coalgebra_morphism,
    morphism_difference,
)
from src.hopf.descriptor import (
    HopfDescriptor,
    beta_instance,
    comultiplication,
    counit,
    identity,
    trivial_instance,
    unit_counit,
)
from src.hopf.validation import is_cocommutative, validate_hopf
from src.algebra.errors import HopfStructureError


@pytest.fixture(scope="module")
def beta3():
    return beta_instance(3)


@pytest.fixture(scope="module")
def beta6():
    return beta_instance(6)


@pytest.fixture(scope="module")
def powers6(beta6):
    return {n: conv_power(beta6, n) for n in range(-6, 7)}


def b(hopf, i):
    return generator(hopf.carrier, f"b{i}")


def carrier_elements(hopf):
    """Random elements of the carrier: small combinations of generator products."""
    gens = list(hopf.generators)

    @st.composite
    def build(draw):
        terms = {}
        for _ in range(draw(st.integers(0, 3))):
            exps = {hopf.carrier.index_of(g): draw(st.integers(0, 2)) for g in draw(st.lists(st.sampled_from(gens), max_size=2))}
            terms[Monomial.from_map(exps)] = draw(st.integers(-3, 3))
        return PolyElement(hopf.carrier, terms)

    return build()


class TestDescriptor:
    def test_beta_diagonals(self, beta3):
        tensor = beta3.tensor_square
        left, right = (lambda i: generator(tensor, f"b{i}", 0)), (lambda i: generator(tensor, f"b{i}", 1))
        assert beta3.diagonal(beta3.carrier.generator("b1")) == left(1) + right(1)
        assert beta3.diagonal(beta3.carrier.generator("b2")) == left(2) + left(1) * right(1) + right(2)

    @pytest.mark.parametrize("order", [1, 3, 8])
    def test_beta_validates(self, order):
        report = validate_hopf(beta_instance(order))
        assert report.passed, [str(check) for check in report.failures()]
        assert is_cocommutative(beta_instance(order))

    def test_trivial_instance_validates(self):
        hopf = trivial_instance()
        assert validate_hopf(hopf).passed
        assert antipode(hopf) == identity(hopf)

    def test_missing_diagonal_rejected(self):
        carrier = RingDescriptor.hopf_carrier("H", (Generator("g", 1),))
        with pytest.raises(HopfStructureError):
            HopfDescriptor("bad", carrier, {})

    def test_one_sided_diagonal_fails_right_counit(self):
        carrier = RingDescriptor.hopf_carrier("H", (Generator("g", 1),))
        tensor = carrier.tensor_square
        hopf = HopfDescriptor("one-sided", carrier, {"g": generator(tensor, "g", 0)})
        report = validate_hopf(hopf)
        assert not report.passed
        assert report.check("counit-left").passed
        assert not report.check("counit-right").passed

    def test_wrong_cocommutativity_flag_fails(self):
        hopf = beta_instance(2)
        flagged = HopfDescriptor("beta-flagged", hopf.carrier, hopf.diagonals, cocommutative=False)
        assert not validate_hopf(flagged).check("cocommutativity-flag").passed

    def test_non_homogeneous_diagonal_fails_gradedness(self):
        carrier = RingDescriptor.hopf_carrier("H", (Generator("g", 1), Generator("h", 2)))
        tensor = carrier.tensor_square
        g = lambda s: generator(tensor, "g", s)
        h = lambda s: generator(tensor, "h", s)
        hopf = HopfDescriptor("bumpy", carrier, {"g": g(0) + g(1), "h": h(0) + h(1) + g(0)})
        report = validate_hopf(hopf)
        assert not report.check("graded").passed
        assert not report.check("counit-left").passed

    def test_counit_kills_generators(self, beta3):
        assert apply_map(b(beta3, 2) + 5, counit(beta3)) == 5


class TestAntipode:
    def test_closed_forms(self, beta3):
        S = antipode(beta3)
        b1, b2, b3 = (b(beta3, i) for i in (1, 2, 3))
        assert S(b1) == -b1
        assert S(b2) == b1 ** 2 - b2
        assert S(b3) == -b1 ** 3 + 2 * b1 * b2 - b3

    def test_antipode_laws(self):
        hopf = beta_instance(8)
        S, eta_eps = antipode(hopf), unit_counit(hopf)
        assert convolution(S, identity(hopf), hopf) == eta_eps
        assert convolution(identity(hopf), S, hopf) == eta_eps


class TestConvolution:
    def test_unit(self, beta3):
        f = conv_power(beta3, 2)
        assert convolution(f, unit_counit(beta3), beta3) == f
        assert convolution(unit_counit(beta3), f, beta3) == f

    def test_identity_squared_on_primitive(self, beta3):
        assert convolution(identity(beta3), identity(beta3), beta3)(b(beta3, 1)) == 2 * b(beta3, 1)

    @pytest.mark.parametrize("n", range(-3, 4))
    def test_primitive_scales(self, beta3, n):
        assert conv_power(beta3, n)(b(beta3, 1)) == n * b(beta3, 1)

    def test_power_values(self, beta3):
        assert conv_power(beta3, 0)(b(beta3, 2)).is_zero()
        assert conv_power(beta3, 2)(b(beta3, 2)) == 2 * b(beta3, 2) + b(beta3, 1) ** 2
        assert conv_power(beta3, -1) == antipode(beta3)

    @pytest.mark.parametrize("m", range(-3, 4))
    def test_group_law(self, beta6, powers6, m):
        for n in range(-3, 4):
            assert morphism_difference(convolution(powers6[m], powers6[n], beta6), powers6[m + n]) is None

    @pytest.mark.parametrize("n", range(-3, 4))
    def test_powers_are_coalgebra_morphisms(self, beta6, powers6, n):
        assert is_coalgebra_morphism(beta6, powers6[n])

    def test_composition_multiplies(self, beta6, powers6):
        assert compose(powers6[2], powers6[3]) == powers6[6]
        assert compose(powers6[-1], powers6[-1]) == powers6[1]
        assert compose(powers6[-2], powers6[3]) == powers6[-6]

    def test_convolution_associative(self, beta3):
        f, g, h = conv_power(beta3, 2), antipode(beta3), conv_power(beta3, -2)
        left = convolution(convolution(f, g, beta3), h, beta3)
        right = convolution(f, convolution(g, h, beta3), beta3)
        assert left == right

    def test_mismatched_morphism_rejected(self, beta3):
        other = beta_instance(2)
        with pytest.raises(RingMismatchError):
            convolution(identity(other), identity(beta3), beta3)

    def test_morphism_difference_names_generator(self, beta3):
        detail = morphism_difference(conv_power(beta3, 2), conv_power(beta3, 3))
        assert detail.startswith("b1:")


class TestMultiplicativity:
    @settings(max_examples=25, deadline=None)
    @given(st.data())
    def test_powers_are_multiplicative(self, data):
        hopf = beta_instance(3)
        x = data.draw(carrier_elements(hopf))
        y = data.draw(carrier_elements(hopf))
        n = data.draw(st.integers(-3, 3))
        f = conv_power(hopf, n)
        assert f(x * y) == f(x) * f(y)

    @settings(max_examples=25, deadline=None)
    @given(st.data())
    def test_comultiplication_is_multiplicative(self, data):
        hopf = beta_instance(3)
        x = data.draw(carrier_elements(hopf))
        y = data.draw(carrier_elements(hopf))
        delta = comultiplication(hopf)
        assert delta(x * y) == delta(x) * delta(y)

    def test_identity_morphism_matches_descriptor_identity(self, beta3):
        assert identity(beta3) == identity_morphism(beta3.carrier)


BETA3 = beta_instance(3)
BETA3_MORPHISMS = [unit_counit(BETA3), identity(BETA3), antipode(BETA3)] + [
    conv_power(BETA3, n) for n in (-3, -2, 2, 3)
] + [compose(conv_power(BETA3, 2), antipode(BETA3))]


class TestConvolutionAlgebra:
    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(BETA3_MORPHISMS), st.sampled_from(BETA3_MORPHISMS), st.sampled_from(BETA3_MORPHISMS))
    def test_associative(self, f, g, h):
        left = convolution(convolution(f, g, BETA3), h, BETA3)
        right = convolution(f, convolution(g, h, BETA3), BETA3)
        assert left == right

    @settings(max_examples=20, deadline=None)
    @given(st.sampled_from(BETA3_MORPHISMS))
    def test_unit(self, f):
        unit = unit_counit(BETA3)
        assert convolution(f, unit, BETA3) == f
        assert convolution(unit, f, BETA3) == f


class TestGrading:
    @pytest.mark.parametrize("n", range(-4, 5))
    def test_powers_are_graded(self, beta6, powers6, n):
        assert powers6[n].grading_discrepancy() is None

    def test_antipode_is_graded(self, beta6):
        assert antipode(beta6).is_graded()

    def test_ungraded_descriptor_gives_ungraded_powers(self):
        carrier = RingDescriptor.hopf_carrier("H", (Generator("g", 1), Generator("h", 2)))
        tensor = carrier.tensor_square
        g_l, g_r = generator(tensor, "g", 0), generator(tensor, "g", 1)
        h_l, h_r = generator(tensor, "h", 0), generator(tensor, "h", 1)
        hopf = HopfDescriptor("lopsided", carrier, {"g": g_l + g_r, "h": h_l + h_r + g_l})
        assert conv_power(hopf, 2).grading_discrepancy() == "h: (2)(h) = 2*h + g is not of weight 2"
