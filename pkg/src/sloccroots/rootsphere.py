"""Roots of pencil polynomials on the extended plane and on the Bloch sphere.

Points of the extended plane are Python complex numbers, with the point at
infinity written as :data:`INF`.  Use :func:`is_inf` rather than comparing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import IdenticallyZero
from .invariants import PencilPolynomial

INF = complex(np.inf, 0.0)

DEGREE_RTOL = 1e-12
RESIDUAL_RTOL = 1e-9


def is_inf(z) -> bool:
    return bool(np.isinf(z))


def extended(z) -> complex:
    """Coerce to an extended-plane point; any infinite component becomes :data:`INF`."""
    z = complex(z)
    if np.isinf(z.real) or np.isinf(z.imag):
        return INF
    if np.isnan(z.real) or np.isnan(z.imag):
        raise ValueError("NaN is not a point of the extended plane")
    return z


class BlochPoint(NamedTuple):
    theta: float
    phi: float


@dataclass(frozen=True)
class RootSystem:
    """The ``h`` roots (with multiplicity, infinities included) of the pencil
    polynomial obtained by splitting off ``qubit``."""

    roots: tuple
    h: int
    qubit: int | None = None
    residuals: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(extended(z) for z in self.roots))
        if len(self.roots) != self.h:
            raise ValueError(f"{len(self.roots)} roots for degree {self.h}")

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    def clusters(self, tol: float = 1e-6) -> list[tuple[complex, int]]:
        """Group coincident roots: ``[(representative, multiplicity), ...]``."""
        out: list[list] = []
        for z in self.roots:
            for entry in out:
                if chordal_distance(entry[0], z) <= tol:
                    entry[1] += 1
                    break
            else:
                out.append([z, 1])
        return [(z, m) for z, m in out]

    def distinct(self, tol: float = 1e-8) -> list[complex]:
        return [z for z, _ in self.clusters(tol)]


def effective_degree(coeffs: np.ndarray) -> int:
    """Index of the highest coefficient above ``1e-12 * max|c_j|``."""
    mags = np.abs(coeffs)
    big = np.nonzero(mags > DEGREE_RTOL * mags.max())[0]
    return int(big[-1])


def _companion_roots(c: np.ndarray) -> np.ndarray:
    deg = c.size - 1
    comp = np.zeros((deg, deg), dtype=complex)
    comp[1:, :-1] = np.eye(deg - 1)
    comp[:, -1] = -c[:-1] / c[-1]
    return np.linalg.eigvals(comp)


def find_roots(p: PencilPolynomial, qubit: int | None = None) -> RootSystem:
    """All ``h`` roots of ``p`` on the extended plane.

    Coefficients below ``1e-12 * max|c_j|`` at either end are dropped: the
    top ones become roots at infinity, the bottom ones exact roots at zero.
    The remaining finite roots are companion-matrix eigenvalues, each refined
    by one Newton step if that lowers the residual.
    """
    c = np.asarray(p.coeffs, dtype=complex)
    cmax = np.max(np.abs(c))
    if cmax == 0:
        raise IdenticallyZero("pencil polynomial vanishes identically")
    c = c / cmax
    deg = effective_degree(c)
    low = int(np.nonzero(np.abs(c) > DEGREE_RTOL)[0][0])
    trunc = c[low : deg + 1]
    finite = _companion_roots(trunc) if deg > low else np.array([], dtype=complex)
    dpoly = np.polynomial.polynomial.polyder(trunc)
    polished = []
    for z in finite:
        val = np.polynomial.polynomial.polyval(z, trunc)
        dval = np.polynomial.polynomial.polyval(z, dpoly)
        if dval != 0:
            z_new = z - val / dval
            if abs(np.polynomial.polynomial.polyval(z_new, trunc)) < abs(val):
                z = z_new
        polished.append(complex(z))
    roots = [0j] * low + polished + [INF] * (p.h - deg)
    residuals = tuple(
        0.0 if is_inf(z)
        else float(abs(np.polynomial.polynomial.polyval(z, c)) / max(1.0, abs(z)) ** p.h)
        for z in roots
    )
    return RootSystem(tuple(roots), p.h, qubit, residuals)


# -- stereographic correspondence ---------------------------------------------

def to_bloch(z) -> BlochPoint:
    """``z = cot(theta/2) exp(-i phi)``; infinity is the North pole."""
    z = extended(z)
    if is_inf(z):
        return BlochPoint(0.0, 0.0)
    if z == 0:
        return BlochPoint(float(np.pi), 0.0)
    theta = 2.0 * np.arctan(1.0 / abs(z))
    phi = float(np.mod(-np.angle(z), 2 * np.pi))
    if phi >= 2 * np.pi:
        phi = 0.0
    return BlochPoint(float(theta), phi)


def from_bloch(b: BlochPoint) -> complex:
    theta, phi = b
    if theta == 0:
        return INF
    if theta == np.pi:
        return 0j
    return complex(np.exp(-1j * phi) / np.tan(theta / 2))


def bloch_vector(z) -> np.ndarray:
    theta, phi = to_bloch(z)
    return np.array(
        [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)]
    )


def chordal_distance(z, w) -> float:
    """Euclidean distance between the images of ``z`` and ``w`` on the unit
    sphere (``0 <= d <= 2``)."""
    z_inf, w_inf = is_inf(z), is_inf(w)
    if z_inf and w_inf:
        return 0.0
    if z_inf:
        return float(2.0 / np.sqrt(1.0 + abs(w) ** 2))
    if w_inf:
        return float(2.0 / np.sqrt(1.0 + abs(z) ** 2))
    return float(
        2.0 * abs(z - w) / np.sqrt((1.0 + abs(z) ** 2) * (1.0 + abs(w) ** 2))
    )


def match_root_multisets(
    a: Sequence[complex], b: Sequence[complex], tol: float = 1e-8
) -> list[int] | None:
    """Pair ``a[i]`` with ``b[perm[i]]`` minimising the chordal cost.

    Returns ``perm`` when every pair is within ``tol``, else ``None``.
    """
    a, b = list(a), list(b)
    if len(a) != len(b):
        return None
    if not a:
        return []
    cost = np.array([[chordal_distance(x, y) for y in b] for x in a])
    rows, cols = linear_sum_assignment(cost)
    if np.max(cost[rows, cols]) > tol:
        return None
    perm = [0] * len(a)
    for r, col in zip(rows, cols):
        perm[r] = int(col)
    return perm


# -- root export --------------------------------------------------------------

def _point_to_json(z):
    return "inf" if is_inf(z) else {"re": float(z.real), "im": float(z.imag)}


def _point_from_json(obj) -> complex:
    if obj == "inf":
        return INF
    return complex(float(obj["re"]), float(obj["im"]))


def roots_to_dict(rs: RootSystem) -> dict:
    return {
        "qubit": rs.qubit,
        "h": rs.h,
        "roots": [_point_to_json(z) for z in rs.roots],
        "bloch": [to_bloch(z)._asdict() for z in rs.roots],
    }


def roots_from_dict(data: dict) -> RootSystem:
    return RootSystem(
        tuple(_point_from_json(z) for z in data["roots"]),
        int(data["h"]),
        data.get("qubit"),
    )


def roots_to_json(rs: RootSystem) -> str:
    return json.dumps(roots_to_dict(rs), indent=2)
