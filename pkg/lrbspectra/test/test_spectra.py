from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from lrbspectra.core.errors import HypothesisNotSatisfiedError, InputError
from lrbspectra.services.family_service import free_lrb, two_block_faces, uniform_measure
from lrbspectra.services.lattice_service import build_support_lattice
from lrbspectra.services.spectra_service import (
    WeightedElement,
    algebra_multiply,
    build_eigen_polys,
    lambda_table,
    lemma1_decompose,
    regular_representation,
    spectrum_report,
    verify_annihilation,
    verify_induction_step,
    verify_lemma1,
    verify_lemma_kill,
)
from lrbspectra.utils.exact_linalg import RationalMatrix, RationalPoly, poly_product_of_linear_factors
from lrbspectra.test.helpers import HALF, trivial_monoid, weighted

FREE3 = free_lrb(3)
LATTICE3 = build_support_lattice(FREE3)

weights = st.fractions(min_value=-3, max_value=3, max_denominator=6)
nonnegative = st.fractions(min_value=0, max_value=3, max_denominator=6)


def random_element(draw_values):
    return WeightedElement(dict(enumerate(draw_values)))


@pytest.fixture
def commutator(free2):
    return weighted(free2, {"12": 1, "21": -1})


# ============= Algebra =============


def test_weighted_element_drops_zeros():
    w = WeightedElement({0: 0, 2: Fraction(1, 3), 1: -1})
    assert w.support == (1, 2)
    assert w.total() == Fraction(-2, 3)
    assert (w - w).is_zero()


def test_algebra_multiply(free2, uniform2, commutator):
    one = WeightedElement.unit(0)
    assert algebra_multiply(one, uniform2, free2) == uniform2
    assert algebra_multiply(commutator, commutator, free2).is_zero()
    a = WeightedElement.unit(free2.index_of("1"))
    assert algebra_multiply(a, uniform2, free2) == weighted(free2, {"1": HALF, "12": HALF})


# ============= Eigenvalues =============


def test_lambda_table_uniform(lattice2, uniform2):
    lt = lambda_table(uniform2, lattice2)
    assert lt.values == (0, HALF, HALF, 1)
    assert lt.distinct == (0, HALF, 1)
    assert lt.hypothesis_ok and lt.violation is None


def test_lambda_table_commutator(lattice2, commutator):
    lt = lambda_table(commutator, lattice2)
    assert lt.values == (0, 0, 0, 0)
    assert not lt.hypothesis_ok
    assert lt.violation == (0, 1)


def test_multiple_of_identity(lattice2):
    c = Fraction(2, 7)
    lt = lambda_table(WeightedElement.unit(0, c), lattice2)
    assert set(lt.values) == {c}
    assert not lt.hypothesis_ok

    T = trivial_monoid()
    L = build_support_lattice(T)
    lt = lambda_table(WeightedElement.unit(0, c), L)
    assert lt.hypothesis_ok
    polys = build_eigen_polys(lt, L)
    assert polys.p == (RationalPoly.linear(c),)
    assert polys.q == (RationalPoly.constant(1),)
    assert verify_annihilation(WeightedElement.unit(0, c), T, L)


def test_lemma1_decomposition(free2, lattice2, uniform2):
    a = free2.index_of("1")
    scalar, residual = lemma1_decompose(a, uniform2, free2, lattice2)
    assert scalar == HALF
    assert residual == weighted(free2, {"12": HALF})
    for t in residual.support:
        assert lattice2.less(lattice2.sigma[t], lattice2.sigma[a])


def test_lemma1_at_identity_and_minimal_ideal(free2, lattice2):
    third = Fraction(1, 3)
    w = weighted(free2, {"": third, "1": third, "2": third})
    scalar, residual = lemma1_decompose(0, w, free2, lattice2)
    assert scalar == third
    assert residual == weighted(free2, {"1": third, "2": third})

    scalar, residual = lemma1_decompose(free2.index_of("12"), w, free2, lattice2)
    assert scalar == w.total()
    assert residual.is_zero()


def test_eigen_polys(lattice2, uniform2):
    polys = build_eigen_polys(lambda_table(uniform2, lattice2), lattice2)
    top, bottom = lattice2.top, lattice2.bottom
    assert polys.p[top] == poly_product_of_linear_factors([0, HALF, 1])
    assert polys.q[top] == poly_product_of_linear_factors([HALF, 1])
    assert polys.p[1] == poly_product_of_linear_factors([HALF, 1])
    assert polys.q[1] == RationalPoly.linear(1)
    assert polys.p[bottom] == RationalPoly.linear(1)
    assert polys.q[bottom] == RationalPoly.constant(1)


def test_eigen_polys_need_the_hypothesis(lattice2, commutator):
    with pytest.raises(HypothesisNotSatisfiedError) as excinfo:
        build_eigen_polys(lambda_table(commutator, lattice2), lattice2)
    assert excinfo.value.violation == (0, 1)


def test_lemma_checks_on_uniform(free2, lattice2, uniform2):
    assert verify_lemma1(uniform2, free2, lattice2).ok
    assert verify_lemma_kill(uniform2, free2, lattice2).ok
    assert verify_induction_step(uniform2, free2, lattice2).ok
    assert verify_annihilation(uniform2, free2, lattice2)


# ============= Regular representation =============


def test_regular_representation_of_identity(free2):
    one = WeightedElement.unit(0)
    assert regular_representation(one, free2, "right") == RationalMatrix.identity(5)
    assert regular_representation(one, free2, "left") == RationalMatrix.identity(5)


def test_regular_representation_columns(free2, uniform2):
    a = free2.index_of("1")
    right = regular_representation(uniform2, free2, "right")
    assert right[a, a] == HALF and right[free2.index_of("12"), a] == HALF
    left = regular_representation(uniform2, free2, "left")
    assert left[a, a] == HALF and left[free2.index_of("21"), a] == HALF


def test_commutator_representation_is_nilpotent(free2, commutator):
    M = regular_representation(commutator, free2)
    assert not M.is_zero()
    assert (M @ M).is_zero()


def test_bad_side_is_rejected(free2, uniform2):
    with pytest.raises(ValueError):
        regular_representation(uniform2, free2, "middle")


# ============= Reports =============


def test_spectrum_report_uniform(free2, lattice2, uniform2):
    report = spectrum_report(uniform2, free2, lattice2)
    assert report.minimal_poly.coefficients == (0, HALF, Fraction(-3, 2), 1)
    assert report.diagonalizable
    assert report.kernel_dims == {Fraction(0): 1, HALF: 2, Fraction(1): 2}
    assert report.annihilation_ok and report.lemma2_ok and report.induction_ok
    assert report.minimal_poly_divides_product
    assert report.verified and report.hypothesis_holds
    assert "kernel dimensions sum to 5 of 5" in report.notes


def test_spectrum_report_left_side(free2, lattice2, uniform2):
    report = spectrum_report(uniform2, free2, lattice2, side="left")
    assert report.side == "left"
    assert report.diagonalizable
    assert report.minimal_poly == poly_product_of_linear_factors([0, HALF, 1])


def test_spectrum_report_commutator(free2, lattice2, commutator):
    report = spectrum_report(commutator, free2, lattice2)
    assert not report.hypothesis_holds
    assert report.minimal_poly == RationalPoly((0, 0, 1))
    assert not report.diagonalizable
    assert report.annihilation_ok is None and report.lemma2_ok is None
    assert report.lemma1_ok
    assert report.verified
    assert any("hypothesis fails" in note for note in report.notes)


def test_spectrum_report_zero_element(free2, lattice2):
    report = spectrum_report(WeightedElement(), free2, lattice2)
    assert report.lambda_table.values == (0, 0, 0, 0)
    assert report.minimal_poly == RationalPoly.linear(0)
    assert report.diagonalizable
    assert not report.hypothesis_holds


def test_spectrum_report_rejects_foreign_elements(free2, lattice2):
    with pytest.raises(InputError):
        spectrum_report(WeightedElement({99: 1}), free2, lattice2)


def test_lambda_table_rejects_weights_outside_the_band(free2, lattice2):
    with pytest.raises(InputError, match="weight dimension mismatch"):
        lambda_table(WeightedElement({free2.n: 1}), lattice2)
    assert lambda_table(WeightedElement({free2.n - 1: 1}), lattice2)[lattice2.bottom] == 1


def test_braid_faces_uniform_on_two_block_faces(braid3):
    L = build_support_lattice(braid3)
    w = uniform_measure(braid3, two_block_faces(braid3))
    report = spectrum_report(w, braid3, L)
    assert report.lambda_table.values[L.bottom] == 1
    assert report.lambda_table.values[L.top] == 0
    assert report.lambda_table.distinct == (0, Fraction(1, 3), 1)
    assert report.hypothesis_holds
    assert report.verified and report.diagonalizable
    assert report.minimal_poly == poly_product_of_linear_factors([0, Fraction(1, 3), 1])


def test_move_to_front_spectrum(free3, lattice3):
    w = weighted(free3, {"1": HALF, "2": Fraction(1, 3), "3": Fraction(1, 6)})
    report = spectrum_report(w, free3, lattice3)
    assert report.hypothesis_holds
    assert report.verified
    assert len(report.lambda_table.distinct) == 7
    assert sum(report.kernel_dims.values()) == free3.n


# ============= Properties =============


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(weights, min_size=16, max_size=16))
def test_decomposition_holds_for_any_weights(values):
    w = random_element(values)
    assert verify_lemma1(w, FREE3, LATTICE3).ok
    lt = lambda_table(w, LATTICE3)
    assert lt[LATTICE3.bottom] == w.total()
    assert lt[LATTICE3.top] == w.coefficient(FREE3.identity)


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(weights, min_size=16, max_size=16))
def test_distinct_eigenvalues_force_annihilation(values):
    w = random_element(values)
    lt = lambda_table(w, LATTICE3)
    if not lt.hypothesis_ok:
        return
    assert verify_annihilation(w, FREE3, LATTICE3)
    report = spectrum_report(w, FREE3, LATTICE3)
    assert report.diagonalizable
    assert report.minimal_poly_divides_product


@settings(max_examples=40, deadline=None)
@given(st.lists(nonnegative, min_size=16, max_size=16))
def test_nonnegative_weights_are_antitone(values):
    lt = lambda_table(random_element(values), LATTICE3)
    for x, y in LATTICE3.strict_pairs():
        assert lt[x] <= lt[y]
