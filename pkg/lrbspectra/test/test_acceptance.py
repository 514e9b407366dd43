"""Seeded end-to-end checks over the standard families."""
from fractions import Fraction
from functools import partial

import numpy as np
import pytest

from lrbspectra.services.family_service import braid_faces, free_lrb, letter_elements, move_to_front_measure
from lrbspectra.services.lattice_service import build_support_lattice, verify_key_fact, verify_sigma_homomorphism
from lrbspectra.services.spectra_service import (
    WeightedElement,
    algebra_multiply,
    lambda_table,
    lemma1_decompose,
    spectrum_report,
    verify_annihilation,
    verify_lemma_kill,
)
from lrbspectra.services.walk_service import analyze_walk, check_strict_monotonicity, support_submonoid
from lrbspectra.utils.exact_linalg import poly_product_of_linear_factors, squarefree_check

SEED = 20240611
MAX_DRAWS = 2000
INSTANCES = {
    "free2": lambda: free_lrb(2),
    "free3": lambda: free_lrb(3),
    "braid3": lambda: braid_faces(3),
}


def random_weights(rng: np.random.Generator, n: int) -> WeightedElement:
    numerators = rng.integers(-6, 7, size=n)
    denominators = rng.integers(1, 7, size=n)
    return WeightedElement({s: Fraction(int(a), int(b)) for s, (a, b) in enumerate(zip(numerators, denominators))})


def random_probability(rng: np.random.Generator, support) -> WeightedElement:
    raw = [int(x) for x in rng.integers(1, 30, size=len(support))]
    total = sum(raw)
    return WeightedElement({s: Fraction(x, total) for s, x in zip(support, raw)})


def hypothesis_satisfying(rng, T, L) -> WeightedElement:
    while True:
        w = random_weights(rng, T.n)
        if lambda_table(w, L).hypothesis_ok:
            return w


@pytest.mark.parametrize("name", sorted(INSTANCES))
def test_annihilation_and_kill_for_random_weights(name):
    T = INSTANCES[name]()
    L = build_support_lattice(T)
    rng = np.random.default_rng(SEED)
    checked = 0
    for _ in range(MAX_DRAWS):
        if checked == 100:
            break
        w = random_weights(rng, T.n)
        if not lambda_table(w, L).hypothesis_ok:
            continue
        assert verify_annihilation(w, T, L)
        assert verify_lemma_kill(w, T, L).ok
        checked += 1
    assert checked == 100


@pytest.mark.parametrize("name", sorted(INSTANCES))
def test_decomposition_for_random_weights(name):
    T = INSTANCES[name]()
    L = build_support_lattice(T)
    rng = np.random.default_rng(SEED + 1)
    for _ in range(100):
        w = random_weights(rng, T.n)
        for s in range(T.n):
            scalar, residual = lemma1_decompose(s, w, T, L)
            assert WeightedElement.unit(s, scalar) + residual == algebra_multiply(WeightedElement.unit(s), w, T)
            for t in residual.support:
                assert L.less(L.sigma[t], L.sigma[s])


@pytest.mark.parametrize(
    "build", [partial(free_lrb, n) for n in (1, 2, 3, 4)] + [partial(braid_faces, n) for n in (2, 3, 4)]
)
def test_key_fact_on_standard_families(build):
    T = build()
    L = build_support_lattice(T)
    assert verify_key_fact(T, L).ok
    assert verify_sigma_homomorphism(T, L).ok


def test_move_to_front_spectrum():
    T = free_lrb(3)
    L = build_support_lattice(T)
    w = move_to_front_measure([Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)], T)
    lt = lambda_table(w, L)
    sixths = [Fraction(k, 6) for k in (0, 1, 2, 3, 3, 4, 5, 6)]
    assert sorted(lt.values) == sixths
    assert lt.hypothesis_ok
    assert check_strict_monotonicity(lt, L).ok

    report = spectrum_report(w, T, L)
    assert squarefree_check(report.minimal_poly)
    assert report.minimal_poly.divides(poly_product_of_linear_factors(sorted(set(sixths))))


def test_random_letter_measures_are_monotone():
    T = free_lrb(3)
    L = build_support_lattice(T)
    letters = letter_elements(T, 3)
    rng = np.random.default_rng(SEED + 2)
    for _ in range(50):
        w = random_probability(rng, letters)
        assert support_submonoid(w, T).generates_all
        assert check_strict_monotonicity(lambda_table(w, L), L).ok


def test_single_letter_measure_recovers_after_restriction():
    T = free_lrb(3)
    analysis = analyze_walk(WeightedElement.unit(T.index_of("2")), T)
    assert not analysis.monotonicity.ok
    assert analysis.restricted.monotonicity.ok


@pytest.mark.slow
@pytest.mark.parametrize("build", [lambda: free_lrb(4), lambda: braid_faces(4)])
def test_full_report_at_scale(build):
    T = build()
    L = build_support_lattice(T)
    w = hypothesis_satisfying(np.random.default_rng(SEED + 3), T, L)
    report = spectrum_report(w, T, L)
    assert report.verified
    assert report.annihilation_ok and report.lemma2_ok and report.induction_ok
    assert report.diagonalizable and report.minimal_poly_divides_product
