import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sloccroots.errors import DimensionMismatch
from sloccroots.gabcd import gabcd_state, quartic_coefficients
from sloccroots.invariants import (
    CONCURRENCE,
    THREE_TANGLE,
    PencilPolynomial,
    concurrence_poly,
    measure_for_arity,
    pencil,
    three_tangle_poly,
)
from sloccroots.statekit import (
    StatePair,
    apply_local,
    decompose,
    family_member,
    named_state,
    random_sl2,
    random_state,
)

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def hyperdet_oracle(v):
    """Discriminant of the binary quadratic det(x A0 + A1) built from the two
    slices of the 2x2x2 amplitude array; equals Cayley's hyperdeterminant."""
    a = np.asarray(v, dtype=complex).reshape(2, 2, 2)
    c2, c0 = np.linalg.det(a[0]), np.linalg.det(a[1])
    c1 = np.linalg.det(a[0] + a[1]) - c2 - c0
    return c1**2 - 4 * c2 * c0


def pencil_oracle(measure, pair, samples=40, seed=0):
    """Least-squares fit of the pencil on random nodes (no FFT)."""
    rng = np.random.default_rng(seed)
    z = rng.normal(size=samples) + 1j * rng.normal(size=samples)
    vals = np.array([measure(family_member(pair, x)) for x in z])
    vander = np.vander(z, measure.degree + 1, increasing=True)
    coeffs, *_ = np.linalg.lstsq(vander, vals, rcond=None)
    return coeffs


def rel_err(a, b):
    a, b = np.asarray(a), np.asarray(b)
    return np.max(np.abs(a - b)) / max(np.max(np.abs(b)), 1e-300)


# -- evaluators ---------------------------------------------------------------

def test_concurrence_examples():
    assert abs(concurrence_poly(np.array([1, 0, 0, 1]) / np.sqrt(2)) - 1) < 1e-15
    assert concurrence_poly([1, 0, 0, 0]) == 0
    z = 0.3 - 1.7j
    assert abs(concurrence_poly(np.array([z, 0, 0, 1]) / np.sqrt(2)) - z) < 1e-15


def test_three_tangle_examples():
    assert abs(three_tangle_poly(named_state("ghz3").amps) - 0.25) < 1e-15
    assert three_tangle_poly(named_state("w3").amps) == 0
    k = 1.5 + 0.5j
    assert abs(three_tangle_poly(k * named_state("ghz3").amps) - k**4 / 4) < 1e-14
    assert THREE_TANGLE.value(named_state("ghz3").amps) == pytest.approx(1.0)
    assert THREE_TANGLE.value(named_state("w3").amps) == 0


def test_evaluator_dimension_errors():
    with pytest.raises(DimensionMismatch):
        concurrence_poly(np.ones(8))
    with pytest.raises(DimensionMismatch):
        three_tangle_poly(np.ones(4))


@given(seed=seeds)
def test_three_tangle_matches_discriminant_oracle(seed):
    v = random_state(3, np.random.default_rng(seed)).amps
    assert abs(three_tangle_poly(v) - hyperdet_oracle(v)) <= 1e-12 * max(1, abs(hyperdet_oracle(v)))


@given(seed=seeds, measure=st.sampled_from([CONCURRENCE, THREE_TANGLE]))
def test_homogeneity(seed, measure):
    rng = np.random.default_rng(seed)
    v = random_state(measure.arity, rng).amps
    k = complex(*rng.normal(size=2))
    lhs, rhs = measure(k * v), k**measure.degree * measure(v)
    assert abs(lhs - rhs) <= 1e-10 * abs(rhs)


@given(seed=seeds, measure=st.sampled_from([CONCURRENCE, THREE_TANGLE]))
def test_sl_invariance(seed, measure):
    rng = np.random.default_rng(seed)
    s = random_state(measure.arity, rng)
    moved = apply_local(s, [random_sl2(rng) for _ in range(measure.arity)])
    before, after = measure(s.amps), measure(moved.amps)
    assert abs(after - before) <= 1e-9 * abs(before)


def test_measure_lookup():
    assert measure_for_arity(2) is CONCURRENCE
    assert measure_for_arity(3) is THREE_TANGLE
    with pytest.raises(DimensionMismatch):
        measure_for_arity(5)


# -- pencils ------------------------------------------------------------------

def test_pencil_ghz_and_w():
    p = pencil(CONCURRENCE, decompose(named_state("ghz3"), 1))
    assert np.allclose(p.coeffs, [0, 1, 0], atol=1e-15)
    p = pencil(CONCURRENCE, decompose(named_state("w3"), 1))
    assert np.allclose(p.coeffs, [0, 0, -2 / 3], atol=1e-15)


def test_pencil_keeps_full_length():
    # psi0 = 0 gives a constant pencil; every higher coefficient is kept
    pair = StatePair(np.zeros(4), np.array([1, 0, 0, 1.0]))
    p = pencil(CONCURRENCE, pair)
    assert p.h == 2 and len(p.coeffs) == 3
    assert np.allclose(p.coeffs, [2, 0, 0], atol=1e-15)


def test_pencil_gabcd_closed_form():
    for p in [(1, 2, 3, 4), (0.3, -1.1, 2.0, 0.7), (1j, 2, -0.5 + 0.5j, 3)]:
        A, B = quartic_coefficients(p)
        closed = np.array([A, 0, -2 * (2 * B + A), 0, A])
        got = pencil(THREE_TANGLE, decompose(gabcd_state(p), 1)).coeffs
        scale = np.vdot(closed, got) / np.vdot(closed, closed)
        assert rel_err(got, scale * closed) <= 1e-10
        # the hyperdeterminant normalization differs from the closed form by 1/4
        assert abs(scale - 0.25) < 1e-12


def test_pencil_dimension_error():
    with pytest.raises(DimensionMismatch):
        pencil(THREE_TANGLE, decompose(named_state("ghz3"), 1))


@given(seed=seeds, measure=st.sampled_from([CONCURRENCE, THREE_TANGLE]), data=st.data())
def test_pencil_agrees_with_direct_evaluation(seed, measure, data):
    rng = np.random.default_rng(seed)
    n = measure.arity + 1
    k = data.draw(st.integers(1, n))
    pair = decompose(random_state(n, rng), k)
    p = pencil(measure, pair)
    for z in rng.normal(size=50) + 1j * rng.normal(size=50):
        direct = measure(family_member(pair, z))
        ref = np.max(np.abs(p.coeffs)) * max(1.0, abs(z)) ** measure.degree
        assert abs(p(z) - direct) <= 1e-10 * ref


@given(seed=seeds)
def test_pencil_matches_least_squares_oracle(seed):
    pair = decompose(random_state(4, np.random.default_rng(seed)), 2)
    assert rel_err(pencil(THREE_TANGLE, pair).coeffs, pencil_oracle(THREE_TANGLE, pair)) < 1e-9


def test_polynomial_helpers():
    p = PencilPolynomial([1, 0, 2], 2)
    assert p(3) == 19
    assert p.derivative(3) == 12
    with pytest.raises(DimensionMismatch):
        PencilPolynomial([1, 2], 2)
