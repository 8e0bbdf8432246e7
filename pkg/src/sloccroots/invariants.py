"""SL-invariant polynomial measures and their pencil polynomials.

A measure of degree ``h`` restricted to the family ``z psi0 + psi1`` is a
polynomial of degree at most ``h`` in ``z``.  :func:`pencil` recovers its
coefficients numerically, so any measure with a callable evaluator works.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DimensionMismatch
from .statekit import StatePair


def _vec(v, size: int) -> np.ndarray:
    v = np.asarray(v, dtype=complex).ravel()
    if v.size != size:
        raise DimensionMismatch(f"expected {size} amplitudes, got {v.size}")
    return v


def concurrence_poly(v) -> complex:
    """``2 (a00 a11 - a01 a10)``, the degree-2 determinant invariant."""
    a = _vec(v, 4)
    return complex(2 * (a[0] * a[3] - a[1] * a[2]))


def three_tangle_poly(v) -> complex:
    """Cayley hyperdeterminant ``d1 - 2 d2 + 4 d3`` of a three-qubit vector.

    The three-tangle is ``4 * |three_tangle_poly(v)|`` for normalized ``v``.
    """
    a = _vec(v, 8).reshape(2, 2, 2)
    a000, a001, a010, a011 = a[0, 0, 0], a[0, 0, 1], a[0, 1, 0], a[0, 1, 1]
    a100, a101, a110, a111 = a[1, 0, 0], a[1, 0, 1], a[1, 1, 0], a[1, 1, 1]
    d1 = a000**2 * a111**2 + a001**2 * a110**2 + a010**2 * a101**2 + a100**2 * a011**2
    d2 = (
        a000 * a111 * (a011 * a100 + a101 * a010 + a110 * a001)
        + a011 * a100 * a101 * a010
        + a011 * a100 * a110 * a001
        + a101 * a010 * a110 * a001
    )
    d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100
    return complex(d1 - 2 * d2 + 4 * d3)


@dataclass(frozen=True)
class SlipMeasure:
    """A homogeneous SL-invariant polynomial of degree ``degree`` on
    ``arity`` qubits.  ``scale`` converts the polynomial to the reported
    measure value ``scale * |evaluator(v)|``."""

    name: str
    arity: int
    degree: int
    evaluator: Callable[[np.ndarray], complex]
    scale: float = 1.0

    def __call__(self, v) -> complex:
        return self.evaluator(v)

    def value(self, v) -> float:
        """Reported measure on the normalized vector."""
        v = np.asarray(v, dtype=complex).ravel()
        return self.scale * abs(self.evaluator(v / np.linalg.norm(v)))


CONCURRENCE = SlipMeasure("concurrence", arity=2, degree=2, evaluator=concurrence_poly)
THREE_TANGLE = SlipMeasure(
    "three-tangle", arity=3, degree=4, evaluator=three_tangle_poly, scale=4.0
)

MEASURES = {m.name: m for m in (CONCURRENCE, THREE_TANGLE)}


def measure_for_arity(arity: int) -> SlipMeasure:
    for m in MEASURES.values():
        if m.arity == arity:
            return m
    raise DimensionMismatch(f"no built-in measure acts on {arity} qubits")


@dataclass(frozen=True)
class PencilPolynomial:
    """``p(z) = sum_j coeffs[j] z**j`` with ``len(coeffs) == h + 1``."""

    coeffs: np.ndarray
    h: int

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex)
        if c.size != self.h + 1:
            raise DimensionMismatch(f"{c.size} coefficients for degree {self.h}")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __call__(self, z):
        return np.polynomial.polynomial.polyval(z, self.coeffs)

    def derivative(self, z):
        return np.polynomial.polynomial.polyval(
            z, np.polynomial.polynomial.polyder(self.coeffs)
        )


def pencil(measure: SlipMeasure, pair: StatePair) -> PencilPolynomial:
    """Coefficients of ``measure(z psi0 + psi1)``.

    The polynomial is sampled on ``h + 1`` points ``r w**m`` (``w`` a
    primitive root of unity, ``r = |psi1| / |psi0|``) and the samples are
    inverted with an FFT, which is exact for degree ``<= h``.
    """
    psi0 = np.asarray(pair.psi0, dtype=complex)
    psi1 = np.asarray(pair.psi1, dtype=complex)
    size = 2**measure.arity
    if psi0.size != size or psi1.size != size:
        raise DimensionMismatch(
            f"{measure.name} acts on {measure.arity} qubits; pair has {psi0.size} amplitudes"
        )
    h = measure.degree
    n0, n1 = np.linalg.norm(psi0), np.linalg.norm(psi1)
    r = n1 / n0 if n0 > 0 and n1 > 0 else 1.0
    nodes = r * np.exp(2j * np.pi * np.arange(h + 1) / (h + 1))
    samples = np.array([measure(z * psi0 + psi1) for z in nodes])
    scaled = np.fft.fft(samples) / (h + 1)
    return PencilPolynomial(scaled / r ** np.arange(h + 1), h)
