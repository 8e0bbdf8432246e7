import cmath
import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sloccroots.errors import IdenticallyZero
from sloccroots.invariants import THREE_TANGLE, PencilPolynomial, pencil
from sloccroots.rootsphere import (
    INF,
    RESIDUAL_RTOL,
    BlochPoint,
    RootSystem,
    bloch_vector,
    chordal_distance,
    extended,
    find_roots,
    from_bloch,
    is_inf,
    match_root_multisets,
    roots_from_dict,
    roots_to_dict,
    roots_to_json,
    to_bloch,
)
from sloccroots.statekit import apply_on_qubit, decompose, random_operator, random_state

seeds = st.integers(min_value=0, max_value=2**32 - 1)
finite = st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False)


def quartic_in_square_oracle(a, b, c):
    """Roots of a z^4 + b z^2 + c via the quadratic formula in w = z^2."""
    disc = cmath.sqrt(b * b - 4 * a * c)
    out = []
    for w in ((-b + disc) / (2 * a), (-b - disc) / (2 * a)):
        r = cmath.sqrt(w)
        out += [r, -r]
    return out


def sphere_oracle(z, w):
    """Euclidean distance of the Bloch vectors, from explicit coordinates."""
    return float(np.linalg.norm(bloch_vector(z) - bloch_vector(w)))


# -- root finding -------------------------------------------------------------

def test_ghz_pencil_roots():
    rs = find_roots(PencilPolynomial([0, 1, 0], 2))
    assert len(rs) == 2
    assert sorted(is_inf(z) for z in rs) == [False, True]
    assert [z for z in rs if not is_inf(z)] == [0]


def test_w_pencil_double_root():
    rs = find_roots(PencilPolynomial([0, 0, -2 / 3], 2))
    assert rs.roots == (0j, 0j)
    assert rs.clusters() == [(0j, 2)]


def test_gabcd_quartic_roots():
    expected = quartic_in_square_oracle(75, -234, 75)
    # 75 w^2 - 234 w + 75 = 0 gives w = (117 +- sqrt(8064)) / 75
    big = math.sqrt((117 + math.sqrt(8064)) / 75)
    assert max(abs(abs(z) - big) for z in expected[:2]) < 1e-15
    rs = find_roots(PencilPolynomial([75, 0, -234, 0, 75], 4))
    assert match_root_multisets(rs.roots, expected, 1e-12) is not None
    mags = sorted(abs(z) for z in rs)
    assert mags == pytest.approx([1 / big, 1 / big, big, big], abs=1e-12)
    assert big == pytest.approx(1.66052, abs=1e-5)


def test_roots_at_infinity_counted():
    # degree drops from 4 to 1: three roots at infinity
    rs = find_roots(PencilPolynomial([2, 1, 0, 0, 0], 4))
    assert sum(is_inf(z) for z in rs) == 3
    assert [z for z in rs if not is_inf(z)] == [pytest.approx(-2)]


def test_tiny_top_coefficient_is_a_root_at_infinity():
    rs = find_roots(PencilPolynomial([1, 0, 1e-14], 2))
    assert sum(is_inf(z) for z in rs) == 2


def test_identically_zero():
    with pytest.raises(IdenticallyZero):
        find_roots(PencilPolynomial([0, 0, 0], 2))


@given(seed=seeds)
def test_root_count_and_residual(seed):
    rng = np.random.default_rng(seed)
    c = rng.normal(size=5) + 1j * rng.normal(size=5)
    drop = rng.integers(0, 3)
    if drop:
        c[-drop:] = 0
    rs = find_roots(PencilPolynomial(c, 4))
    assert len(rs) == 4
    assert sum(is_inf(z) for z in rs) == drop
    cmax = np.max(np.abs(c))
    for z in rs:
        if not is_inf(z):
            bound = RESIDUAL_RTOL * cmax * max(1.0, abs(z)) ** 4
            assert abs(np.polynomial.polynomial.polyval(z, c)) <= bound


@given(seed=seeds, data=st.data())
def test_roots_unchanged_by_operators_on_other_qubits(seed, data):
    rng = np.random.default_rng(seed)
    k = data.draw(st.integers(1, 4))
    j = data.draw(st.integers(1, 4).filter(lambda x: x != k))
    s = random_state(4, rng)
    before = find_roots(pencil(THREE_TANGLE, decompose(s, k)))
    moved = apply_on_qubit(s, random_operator(rng), j)
    after = find_roots(pencil(THREE_TANGLE, decompose(moved, k)))
    assert match_root_multisets(before.roots, after.roots, 1e-8) is not None


def test_root_system_requires_h_roots():
    with pytest.raises(ValueError):
        RootSystem((0j,), 2)


def test_extended():
    assert is_inf(extended(complex(1, np.inf)))
    assert extended(2) == 2 + 0j
    with pytest.raises(ValueError):
        extended(complex(np.nan, 0))


# -- stereographic correspondence ---------------------------------------------

def test_bloch_poles_and_equator():
    assert to_bloch(INF) == (0.0, 0.0)
    assert to_bloch(0) == (math.pi, 0.0)
    b = to_bloch(1)
    assert b.theta == pytest.approx(math.pi / 2) and b.phi == 0.0


def test_from_bloch_examples():
    assert is_inf(from_bloch(BlochPoint(0.0, 1.3)))
    assert from_bloch(BlochPoint(math.pi, 0.0)) == 0
    assert abs(from_bloch(BlochPoint(math.pi / 2, 0.0)) - 1) < 1e-15
    assert abs(from_bloch(BlochPoint(math.pi / 2, math.pi / 2)) + 1j) < 1e-15


def test_bloch_ranges(rng):
    for z in rng.normal(size=200) * 10 + 1j * rng.normal(size=200) * 10:
        t, p = to_bloch(z)
        assert 0 <= t <= math.pi
        assert 0 <= p < 2 * math.pi


def test_stereographic_round_trip(rng):
    pts = (rng.normal(size=1000) + 1j * rng.normal(size=1000)) * np.exp(rng.normal(size=1000))
    for z in pts:
        back = from_bloch(to_bloch(z))
        assert abs(back - z) <= 1e-12 * max(1.0, abs(z))
    assert is_inf(from_bloch(to_bloch(INF)))
    assert from_bloch(to_bloch(0)) == 0


def test_bloch_vector_is_unit(rng):
    for z in list(rng.normal(size=20) + 1j * rng.normal(size=20)) + [0, INF]:
        assert np.linalg.norm(bloch_vector(z)) == pytest.approx(1.0, abs=1e-15)


# -- chordal metric -----------------------------------------------------------

def test_chordal_special_values():
    assert chordal_distance(0, INF) == 2.0
    assert chordal_distance(INF, INF) == 0.0
    assert chordal_distance(1, -1) == pytest.approx(2.0)
    assert chordal_distance(1, 1j) == pytest.approx(math.sqrt(2))


@given(z=finite, w=finite)
def test_chordal_matches_sphere_oracle(z, w):
    assert chordal_distance(z, w) == pytest.approx(sphere_oracle(z, w), abs=1e-9)


@given(z=finite)
def test_chordal_to_infinity_matches_oracle(z):
    assert chordal_distance(z, INF) == pytest.approx(sphere_oracle(z, INF), abs=1e-9)


@given(z=finite, w=finite, u=finite)
def test_chordal_metric_axioms(z, w, u):
    assert chordal_distance(z, w) == chordal_distance(w, z)
    assert 0 <= chordal_distance(z, w) <= 2
    assert chordal_distance(z, u) <= chordal_distance(z, w) + chordal_distance(w, u) + 1e-12


# -- multiset matching --------------------------------------------------------

def test_match_examples():
    a = [0.5 + 1j, -2, INF]
    assert match_root_multisets(a, a) == [0, 1, 2]
    assert match_root_multisets([0, INF], [INF, 0]) == [1, 0]
    assert match_root_multisets([0, INF], [0, 0]) is None
    assert match_root_multisets([0, 1], [0, 1, 2]) is None


@given(seed=seeds)
def test_match_recovers_permutation(seed):
    rng = np.random.default_rng(seed)
    a = list(rng.normal(size=4) + 1j * rng.normal(size=4))
    perm = rng.permutation(4)
    b = [a[i] for i in perm]
    got = match_root_multisets(a, b)
    assert [b[j] for j in got] == a


# -- export -------------------------------------------------------------------

def test_root_export_round_trip():
    rs = RootSystem((0j, INF, 1 + 2j, -0.5j), 4, qubit=2)
    d = roots_to_dict(rs)
    assert d["qubit"] == 2 and d["h"] == 4
    assert d["roots"][1] == "inf"
    assert d["roots"][2] == {"re": 1.0, "im": 2.0}
    assert d["bloch"][1] == {"theta": 0.0, "phi": 0.0}
    back = roots_from_dict(json.loads(roots_to_json(rs)))
    assert back == rs
