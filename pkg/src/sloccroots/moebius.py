"""Möbius maps on the extended plane, cross-ratios, normal systems and the
24-element cube rotation group.

Points are handled in homogeneous coordinates internally: a finite ``z`` is
``(z, 1)`` and infinity is ``(1, 0)``.  This keeps the cross-ratio and the
three-point construction free of special cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import (
    DegenerateConfiguration,
    DegenerateLambda,
    DegenerateRoots,
    DegenerateTriple,
    FourthPointMismatch,
)
from .rootsphere import (
    INF,
    chordal_distance,
    extended,
    is_inf,
    match_root_multisets,
)
from .statekit import SQRT2, adjugate, check_operator


@dataclass(frozen=True, eq=False)
class MoebiusMap:
    """``z -> (a z + b) / (c z + d)`` for the invertible matrix ``(a b; c d)``."""

    matrix: np.ndarray

    def __post_init__(self):
        m = check_operator(self.matrix).copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def __call__(self, z):
        return apply(self, z)

    def __matmul__(self, other: "MoebiusMap") -> "MoebiusMap":
        return compose(self, other)

    def normalized(self) -> "MoebiusMap":
        """Same map with determinant one."""
        return MoebiusMap(self.matrix / np.sqrt(np.linalg.det(self.matrix)))

    def __repr__(self):
        return f"MoebiusMap({np.array2string(self.matrix, precision=4)})"


IDENTITY_MAP = MoebiusMap(np.eye(2, dtype=complex))


def apply(m: MoebiusMap, z) -> complex:
    (a, b), (c, d) = m.matrix
    z = extended(z)
    if is_inf(z):
        return INF if c == 0 else complex(a / c)
    den = c * z + d
    if den == 0:
        return INF
    return complex((a * z + b) / den)


def compose(m1: MoebiusMap, m2: MoebiusMap) -> MoebiusMap:
    """``m1 o m2`` (apply ``m2`` first)."""
    return MoebiusMap(m1.matrix @ m2.matrix)


def inverse(m: MoebiusMap) -> MoebiusMap:
    return MoebiusMap(adjugate(m.matrix))


def maps_proportional(m1: MoebiusMap, m2: MoebiusMap, tol: float = 1e-10) -> bool:
    """True when the two matrices agree up to a nonzero scalar."""
    a, b = m1.matrix.ravel(), m2.matrix.ravel()
    c = np.vdot(a, b) / np.vdot(a, a)
    return bool(np.max(np.abs(b - c * a)) <= tol * np.max(np.abs(b)))


def operator_root_action(op) -> MoebiusMap:
    """Map induced on roots by ``op = (a b; c d)`` acting on the split qubit.

    ``op`` sends ``z psi0 + psi1`` to ``(a z + c) psi0 + (b z + d) psi1``, so
    the family index moves by the map of ``op.T`` and the roots by its
    inverse, ``z -> (d z - c) / (-b z + a)``.  The assignment is a
    homomorphism: ``action(A @ B) == action(A) @ action(B)``.
    """
    return MoebiusMap(adjugate(check_operator(op).T))


def root_action_to_operator(m: MoebiusMap) -> np.ndarray:
    """Operator (up to scale) whose root action is ``m``."""
    return adjugate(m.matrix).T


# -- three-point interpolation ------------------------------------------------

def _homogeneous(z) -> tuple[complex, complex]:
    z = extended(z)
    return (1 + 0j, 0j) if is_inf(z) else (z, 1 + 0j)


def _bracket(u, v) -> complex:
    return u[0] * v[1] - v[0] * u[1]


def _to_standard(p1, p2, p3) -> np.ndarray:
    """Matrix sending ``p1, p2, p3`` to ``0, 1, inf``."""
    h1, h2, h3 = (_homogeneous(p) for p in (p1, p2, p3))
    k1 = _bracket(h2, h3)
    k2 = _bracket(h2, h1)
    return np.array(
        [[h1[1] * k1, -h1[0] * k1], [h3[1] * k2, -h3[0] * k2]], dtype=complex
    )


def _check_distinct(points, tol: float, exc) -> None:
    for u, v in combinations(points, 2):
        if chordal_distance(u, v) <= tol:
            raise exc(f"points {u} and {v} coincide")


def from_three_points(
    p1, p2, p3, q1, q2, q3, tol: float = 1e-10
) -> MoebiusMap:
    """The unique map with ``p_i -> q_i``, normalized to determinant one."""
    _check_distinct((p1, p2, p3), tol, DegenerateTriple)
    _check_distinct((q1, q2, q3), tol, DegenerateTriple)
    sp = _to_standard(p1, p2, p3)
    sq = _to_standard(q1, q2, q3)
    return MoebiusMap(adjugate(sq) @ sp).normalized()


# -- cross-ratio --------------------------------------------------------------

def cross_ratio(z1, z2, z3, z4) -> complex:
    """``(z3 - z1)(z4 - z2) / ((z3 - z2)(z4 - z1))`` on the extended plane."""
    pts = [extended(z) for z in (z1, z2, z3, z4)]
    distinct: list[complex] = []
    for z in pts:
        if all(chordal_distance(z, w) > 1e-14 for w in distinct):
            distinct.append(z)
    if len(distinct) < 3:
        raise DegenerateConfiguration("cross-ratio needs at least three distinct points")
    h1, h2, h3, h4 = (_homogeneous(z) for z in pts)
    num = _bracket(h3, h1) * _bracket(h4, h2)
    den = _bracket(h3, h2) * _bracket(h4, h1)
    if den == 0:
        return INF
    return complex(num / den)


_ORBIT_MAPS = [
    MoebiusMap(np.array(m, dtype=complex))
    for m in (
        [[1, 0], [0, 1]],    # l
        [[0, 1], [1, 0]],    # 1/l
        [[-1, 1], [0, 1]],   # 1 - l
        [[0, 1], [-1, 1]],   # 1/(1 - l)
        [[1, -1], [1, 0]],   # (l - 1)/l
        [[1, 0], [1, -1]],   # l/(l - 1)
    )
]


def cross_ratio_orbit(lam, tol: float = 1e-12) -> list[complex]:
    """Distinct values the cross-ratio takes under reordering of its points."""
    out: list[complex] = []
    for m in _ORBIT_MAPS:
        v = apply(m, lam)
        if all(chordal_distance(v, w) > tol for w in out):
            out.append(v)
    return out


def orbits_match(lam1, lam2, tol: float = 1e-8) -> bool:
    """True when ``lam2`` lies in the reordering orbit of ``lam1``."""
    return any(chordal_distance(v, lam2) <= tol for v in cross_ratio_orbit(lam1))


# -- normal systems -----------------------------------------------------------

def normal_system(z0) -> tuple[complex, complex, complex, complex]:
    z0 = complex(z0)
    return (z0, 1 / z0, -z0, -1 / z0)


def normal_system_solutions(lam, tol: float = 1e-10) -> tuple[complex, ...]:
    """The four solutions ``z0, 1/z0, -z0, -1/z0`` of ``4 z**2 / (1 + z**2)**2 = lam``.

    Solved as the quadratic ``lam w**2 + (2 lam - 4) w + lam = 0`` in
    ``w = z**2``; ``z0`` is taken from the root with ``|w| >= 1``.
    """
    lam = extended(lam)
    if is_inf(lam) or lam == 0:
        raise DegenerateLambda(f"no normal system has cross-ratio {lam}")
    s = np.sqrt(1 - lam + 0j)
    num = max((2 - lam + 2 * s, 2 - lam - 2 * s), key=abs)
    w = num / lam
    z0 = complex(np.sqrt(w))
    resid = abs(lam * z0**4 + (2 * lam - 4) * z0**2 + lam)
    scale = max(abs(lam), abs(2 * lam - 4)) * max(1.0, abs(z0)) ** 4
    if resid > tol * scale:
        raise DegenerateLambda(f"back-substitution residual {resid:.2e} for lambda={lam}")
    return normal_system(z0)


def is_normal_system(points: Sequence[complex], tol: float = 1e-8) -> bool:
    points = list(points)
    if len(points) != 4:
        return False
    for w in points:
        if is_inf(w) or w == 0:
            continue
        if match_root_multisets(points, normal_system(w), tol) is not None:
            return True
    return False


# -- cube rotation group ------------------------------------------------------

RX_HALF = np.array([[1, -1j], [-1j, 1]], dtype=complex) / SQRT2
RY_HALF = np.array([[1, -1], [1, 1]], dtype=complex) / SQRT2
RZ_HALF = np.array([[1 - 1j, 0], [0, 1 + 1j]], dtype=complex) / SQRT2

_GENERATORS = (("x", RX_HALF), ("y", RY_HALF), ("z", RZ_HALF))


def phase_canonical(m, tol: float = 1e-9) -> np.ndarray:
    """Scale to determinant one, then make the first nonzero entry (row-major)
    real and positive."""
    m = np.asarray(m, dtype=complex)
    m = m / np.sqrt(np.linalg.det(m))
    flat = m.ravel()
    lead = flat[np.nonzero(np.abs(flat) > tol)[0][0]]
    return m * (abs(lead) / lead)


def _key(m: np.ndarray) -> tuple:
    r = np.round(m.ravel(), 9) + 0.0  # drop signed zeros
    return tuple((float(x.real) + 0.0, float(x.imag) + 0.0) for x in r)


@dataclass(frozen=True, eq=False)
class G24Element:
    matrix: np.ndarray
    label: str

    def __repr__(self):
        return f"G24Element({self.label or 'I'})"


@lru_cache(maxsize=None)
def g24_elements() -> tuple[G24Element, ...]:
    """Closure of the three quarter-turn rotations, modulo global phase.

    ``label`` is the generator word ``w`` with ``matrix = w[0] @ w[1] @ ...``.
    """
    start = G24Element(phase_canonical(np.eye(2)), "")
    seen = {_key(start.matrix): start}
    frontier = [start]
    while frontier:
        nxt = []
        for el in frontier:
            for name, gen in _GENERATORS:
                m = phase_canonical(el.matrix @ gen)
                k = _key(m)
                if k not in seen:
                    seen[k] = G24Element(m, el.label + name)
                    nxt.append(seen[k])
        frontier = nxt
    for el in seen.values():
        el.matrix.setflags(write=False)
    return tuple(seen.values())


def g24_index(m, tol: float = 1e-8) -> int | None:
    """Position of ``m`` (up to scale) in :func:`g24_elements`, or ``None``."""
    c = phase_canonical(m)
    for i, el in enumerate(g24_elements()):
        if np.max(np.abs(el.matrix - c)) <= tol:
            return i
    return None


# -- reduction to a normal system ---------------------------------------------

def _in_canonical_sector(w: complex, tol: float = 1e-9) -> bool:
    if is_inf(w) or abs(w) < 1 - tol:
        return False
    a = float(np.angle(w))
    if a < -tol:
        a += 2 * np.pi
    return -tol <= a < np.pi / 2 - tol


def normalize_to_normal_system(
    roots: Sequence[complex], tol: float = 1e-8
) -> tuple[MoebiusMap, complex]:
    """A map ``T`` sending four distinct points onto ``{z0, 1/z0, -z0, -1/z0}``.

    Such maps form a single coset of the cube rotations; the one returned
    makes ``|z0| >= 1`` with ``arg z0`` in ``[0, pi/2)``, prefers the
    lexicographically smallest ``(Re z0, Im z0)``, and sends ``roots[0]``
    to ``z0``.
    """
    roots = [extended(z) for z in roots]
    if len(roots) != 4:
        raise DegenerateRoots(f"need four roots, got {len(roots)}")
    _check_distinct(roots, tol, DegenerateRoots)
    lam = cross_ratio(*roots)
    z0 = normal_system_solutions(lam)[0]
    target = normal_system(z0)
    t0 = from_three_points(*roots[:3], *target[:3])
    if chordal_distance(t0(roots[3]), target[3]) > tol:
        raise FourthPointMismatch(
            f"fourth root lands {chordal_distance(t0(roots[3]), target[3]):.2e} "
            "away from -1/z0"
        )

    best = None
    for el in g24_elements():
        t = MoebiusMap(el.matrix) @ t0
        image = [t(z) for z in roots]
        for w in image:
            if not _in_canonical_sector(w):
                continue
            key = (
                round(w.real, 8) + 0.0,
                round(w.imag, 8) + 0.0,
                chordal_distance(image[0], w),
            )
            if best is None or key < best[0]:
                best = (key, t, w)
    if best is None:
        raise FourthPointMismatch("no cube rotation reaches the canonical sector")
    _, t, w = best
    return t.normalized(), complex(w)
