"""The generic four-qubit family ``G_abcd``.

``gabcd_state((a, b, c, d))`` is

    (a+d)/2 (|0000>+|1111>) + (a-d)/2 (|0011>+|1100>)
  + (b+c)/2 (|0101>+|1010>) + (b-c)/2 (|0110>+|1001>)

and is generic when ``a**2, b**2, c**2, d**2`` are pairwise distinct.  Two
generic members are SLOCC-equivalent exactly when their parameters differ by a
permutation, an even number of sign flips and a global phase; this module
enumerates that orbit both combinatorially and by brute force over the cube
rotations on every qubit.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterable, Sequence

import numpy as np

from .errors import NonGeneric, ZeroTuple
from .invariants import PencilPolynomial
from .moebius import g24_elements
from .statekit import PureState, gabcd_amplitudes

GENERIC_RTOL = 1e-8
TUPLE_DECIMALS = 10

# amplitude indices of |0000>, |0011>, |0101>, |0110> and their bit-flips
_SUPPORT = (0, 3, 5, 6, 9, 10, 12, 15)
_OFF_SUPPORT = tuple(i for i in range(16) if i not in _SUPPORT)


def _params(p: Sequence[complex]) -> np.ndarray:
    p = np.asarray(p, dtype=complex).ravel()
    if p.size != 4:
        raise ValueError(f"need four parameters, got {p.size}")
    return p


def is_generic(p: Sequence[complex], rtol: float = GENERIC_RTOL) -> bool:
    sq = _params(p) ** 2
    scale = np.max(np.abs(sq))
    if scale == 0:
        return False
    return all(abs(sq[i] - sq[j]) >= rtol * scale for i, j in combinations(range(4), 2))


def check_generic(p: Sequence[complex]) -> np.ndarray:
    if not is_generic(p):
        raise NonGeneric(f"parameters {tuple(p)} have coinciding squares")
    return _params(p)


def gabcd_state(p: Sequence[complex]) -> PureState:
    return PureState(4, gabcd_amplitudes(*_params(p)))


def quartic_coefficients(p: Sequence[complex]) -> tuple[complex, complex]:
    """``(A, B)`` with ``A = (b^2 - c^2)(a^2 - d^2)``, ``B = (c^2 - d^2)(a^2 - b^2)``."""
    a, b, c, d = _params(p)
    return (b**2 - c**2) * (a**2 - d**2), (c**2 - d**2) * (a**2 - b**2)


def root_quartic(p: Sequence[complex]) -> PencilPolynomial:
    """``A z^4 - 2(2B + A) z^2 + A``: the three-tangle pencil of any qubit, up to
    a constant factor."""
    check_generic(p)
    A, B = quartic_coefficients(p)
    return PencilPolynomial([A, 0, -2 * (2 * B + A), 0, A], 4)


def canonical_tuple(t: Sequence[complex], decimals: int = TUPLE_DECIMALS) -> tuple:
    """Phase-free hashable form of a parameter tuple.

    The tuple is divided by the phase of its first entry of largest modulus
    and rounded, so ``canonical_tuple(exp(i th) * t) == canonical_tuple(t)``.
    """
    t = np.asarray(t, dtype=complex).ravel()
    mags = np.abs(t)
    top = mags.max()
    if top == 0:
        raise ZeroTuple("tuple is identically zero")
    lead = t[np.nonzero(mags >= top * (1 - 1e-9))[0][0]]
    u = np.round(t * (abs(lead) / lead), decimals)
    return tuple(complex(x.real + 0.0, x.imag + 0.0) for x in u)


def _matches(t, pool: np.ndarray, tol: float, phase: bool = True) -> np.ndarray:
    """Boolean mask of the rows of ``pool`` equal to ``t`` (up to phase)."""
    u = np.asarray(t, dtype=complex)
    if pool.size == 0:
        return np.zeros(0, dtype=bool)
    if phase:
        c = (pool @ u.conj()) / np.vdot(u, u)
        ok = np.abs(np.abs(c) - 1) <= tol
    else:
        c = np.ones(pool.shape[0], dtype=complex)
        ok = np.ones(pool.shape[0], dtype=bool)
    resid = np.max(np.abs(pool - c[:, None] * u), axis=1)
    return ok & (resid <= tol * np.max(np.abs(pool), axis=1))


def same_tuple(t1, t2, tol: float = 1e-8, phase: bool = True) -> bool:
    """Equality modulo global phase (or exact equality when ``phase`` is
    false), without rounding."""
    return bool(_matches(t1, np.asarray([t2], dtype=complex), tol, phase)[0])


def _merge(tuples: Iterable[tuple], tol: float = 1e-8) -> set:
    """Second phase of the set semantics: drop keys that only differ by
    rounding noise."""
    kept: list[tuple] = []
    pool = np.zeros((0, 4), dtype=complex)
    for t in sorted(set(tuples), key=lambda x: tuple((z.real, z.imag) for z in x)):
        if not _matches(t, pool, tol).any():
            kept.append(t)
            pool = np.vstack([pool, np.asarray(t, dtype=complex)])
    return set(kept)


def same_tuple_set(
    s1: Iterable, s2: Iterable, tol: float = 1e-8, phase: bool = True
) -> bool:
    """Multiset equality under :func:`same_tuple`; use this rather than ``==``
    on sets of rounded keys, which can split a value across a rounding edge."""
    a, b = list(s1), list(s2)
    if len(a) != len(b):
        return False
    pool = np.asarray(b, dtype=complex).reshape(-1, 4)
    free = np.ones(len(b), dtype=bool)
    for t in a:
        hits = np.nonzero(_matches(t, pool, tol, phase) & free)[0]
        if hits.size == 0:
            return False
        free[hits[0]] = False
    return True


EVEN_SIGNS = tuple(s for s in product((1, -1), repeat=4) if np.prod(s) == 1)


def _tuple_key(t, decimals: int = TUPLE_DECIMALS) -> tuple:
    u = np.round(np.asarray(t, dtype=complex), decimals)
    return tuple(complex(x.real + 0.0, x.imag + 0.0) for x in u)


def weyl_orbit(p: Sequence[complex]) -> set:
    """All tuples ``signs * p[perm]`` over the 24 permutations and the 8 even
    sign patterns: 192 distinct tuples for generic ``p``.

    ``t`` and ``-t`` both appear and label the same state, so the orbit holds
    96 states; see :func:`phase_classes`.
    """
    p = check_generic(p)
    return {
        _tuple_key(np.array(signs) * p[list(perm)])
        for perm in permutations(range(4))
        for signs in EVEN_SIGNS
    }


def phase_classes(tuples: Iterable[Sequence[complex]]) -> set:
    """Canonical tuples of the distinct states labelled by ``tuples``."""
    return _merge(canonical_tuple(t) for t in tuples)


def lift_count(classes: Iterable, tuples: Iterable, tol: float = 1e-8) -> int:
    """Number of ``tuples`` whose state is one of ``classes``."""
    pool = np.asarray(list(classes), dtype=complex).reshape(-1, 4)
    return sum(bool(_matches(t, pool, tol).any()) for t in tuples)


def extract_params(v, tol: float = 1e-9) -> tuple | None:
    """Recover ``(a, b, c, d)`` if ``v`` is a (scaled) ``G_abcd`` vector."""
    v = np.asarray(v, dtype=complex).ravel()
    ref = np.max(np.abs(v))
    if ref == 0:
        return None
    if np.max(np.abs(v[list(_OFF_SUPPORT)])) > tol * ref:
        return None
    for i, j in ((0, 15), (3, 12), (5, 10), (6, 9)):
        if abs(v[i] - v[j]) > tol * ref:
            return None
    return (v[0] + v[3], v[5] + v[6], v[5] - v[6], v[0] - v[3])


def _pair_products(mats: np.ndarray) -> np.ndarray:
    """``kron(mats[i], mats[j])`` for all ``i, j`` as an array ``(m*m, 4, 4)``."""
    m = mats.shape[0]
    k = np.einsum("iab,jcd->ijacbd", mats, mats)
    return k.reshape(m * m, 4, 4)


def _sweep(p: np.ndarray, chunk: int, tol: float):
    """Yield every ``(O_1 x O_2 x O_3 x O_4) G_p`` that is again a ``G_abcd``
    vector, for ``O_i`` the det-1 cube rotations.

    The state is handled as a 4x4 matrix between qubit pairs (12) and (34), so
    each product is ``K_i M K_j^T`` with ``K`` ranging over 576 two-qubit
    rotations; the sweep is vectorized in chunks of ``chunk`` left factors.
    """
    mats = np.stack([el.matrix for el in g24_elements()])
    pairs = _pair_products(mats)
    m = gabcd_amplitudes(*p).reshape(4, 4)
    for start in range(0, pairs.shape[0], chunk):
        left = pairs[start : start + chunk] @ m
        out = np.einsum("cab,jdb->cjad", left, pairs).reshape(-1, 16)
        ref = np.max(np.abs(out), axis=1)
        off = np.max(np.abs(out[:, _OFF_SUPPORT]), axis=1)
        sym = np.max(
            np.abs(out[:, [0, 3, 5, 6]] - out[:, [15, 12, 10, 9]]), axis=1
        )
        ok = (off <= tol * ref) & (sym <= tol * ref)
        yield from out[ok]


def operator_orbit_check(
    p: Sequence[complex], chunk: int = 48, tol: float = 1e-9
) -> set:
    """Canonical tuples ``q`` with ``(O_1 x O_2 x O_3 x O_4) G_p ~ G_q`` for cube
    rotations ``O_i``, found by trying all ``24**4`` products.

    The result should equal ``phase_classes(weyl_orbit(p))``.
    """
    p = check_generic(p)
    return _merge(canonical_tuple(extract_params(v, tol)) for v in _sweep(p, chunk, tol))


def operator_orbit_tuples(
    p: Sequence[complex], chunk: int = 48, tol: float = 1e-9
) -> set:
    """Exact tuples ``q`` with ``(O_1 x O_2 x O_3 x O_4) G_p = G_q``, no phase
    freedom, for ``O_i`` in the 48-element SU(2) lift of the cube rotations.

    Flipping the sign of one factor negates the image, so each det-1 hit also
    contributes ``-q``.  The result should equal ``weyl_orbit(p)``.
    """
    p = check_generic(p)
    out = set()
    for v in _sweep(p, chunk, tol):
        q = np.asarray(extract_params(v, tol))
        out.add(_tuple_key(q))
        out.add(_tuple_key(-q))
    return out
