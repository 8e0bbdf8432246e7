"""Dense n-qubit pure states, per-qubit decomposition and local operators.

Conventions
-----------
* Qubits are numbered ``1..n``; qubit 1 is the most significant bit of the
  amplitude index, so ``amps[i]`` is the coefficient of ``|bin(i)>``.
* States are projective.  Nothing here normalizes a state; comparisons go
  through :func:`proportional`.
* A local operator is a plain invertible ``(2, 2)`` complex array.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    MissingParams,
    SingularOperator,
    UnknownName,
    ZeroVector,
)

MAX_QUBITS = 8
DET_RTOL = 1e-12

SQRT2 = np.sqrt(2.0)

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY = np.eye(2, dtype=complex)


@dataclass(frozen=True, eq=False)
class PureState:
    """Unnormalized n-qubit pure state."""

    n: int
    amps: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amps, dtype=complex).ravel()
        if not 1 <= self.n <= MAX_QUBITS:
            raise DimensionMismatch(f"qubit count {self.n} outside 1..{MAX_QUBITS}")
        if amps.size != 2**self.n:
            raise DimensionMismatch(
                f"{amps.size} amplitudes given for {self.n} qubits (need {2**self.n})"
            )
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        if not np.any(amps):
            raise ZeroVector("all amplitudes are zero")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    @property
    def tensor(self) -> np.ndarray:
        """Amplitudes reshaped to ``(2,) * n``; axis ``k - 1`` is qubit ``k``."""
        return self.amps.reshape((2,) * self.n)

    def normalized(self) -> np.ndarray:
        return self.amps / np.linalg.norm(self.amps)

    def __repr__(self):
        return f"PureState(n={self.n}, amps={np.array2string(self.amps, precision=4)})"


class StatePair(NamedTuple):
    """The two branches of ``|psi> = |0>_k |psi0> + |1>_k |psi1>``."""

    psi0: np.ndarray
    psi1: np.ndarray


def make_state(n: int, amps: Sequence[complex]) -> PureState:
    return PureState(n, np.asarray(amps, dtype=complex))


def _check_qubit(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"qubit {k} outside 1..{n}")


def decompose(state: PureState, k: int = 1) -> StatePair:
    """Split ``state`` along qubit ``k``; remaining qubits keep their order."""
    _check_qubit(state.n, k)
    t = state.tensor
    psi0 = np.take(t, 0, axis=k - 1).ravel().copy()
    psi1 = np.take(t, 1, axis=k - 1).ravel().copy()
    return StatePair(psi0, psi1)


def reinsert(pair: StatePair, k: int = 1) -> PureState:
    """Inverse of :func:`decompose`."""
    psi0 = np.asarray(pair.psi0, dtype=complex)
    psi1 = np.asarray(pair.psi1, dtype=complex)
    if psi0.shape != psi1.shape:
        raise DimensionMismatch("psi0 and psi1 differ in length")
    m = int(round(np.log2(psi0.size)))
    if 2**m != psi0.size:
        raise DimensionMismatch("branch length is not a power of two")
    _check_qubit(m + 1, k)
    shape = (2,) * m
    t = np.stack([psi0.reshape(shape), psi1.reshape(shape)], axis=k - 1)
    return PureState(m + 1, t.ravel())


def family_member(pair: StatePair, z: complex) -> np.ndarray:
    """``z * psi0 + psi1``; the point at infinity gives ``psi0``."""
    if np.isinf(z):
        return np.array(pair.psi0, dtype=complex)
    return z * np.asarray(pair.psi0) + np.asarray(pair.psi1)


def check_operator(m) -> np.ndarray:
    """Return ``m`` as a complex (2, 2) array, raising if it is singular.

    The guard is scale free: ``|det| > 1e-12 * max|m_ij|**2``.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise DimensionMismatch(f"local operator must be 2x2, got {m.shape}")
    scale = np.max(np.abs(m)) ** 2
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if scale == 0 or not abs(det) > DET_RTOL * scale:
        raise SingularOperator(f"operator is singular (det={det:.3g})")
    return m


def adjugate(m: np.ndarray) -> np.ndarray:
    """``(a b; c d) -> (d -b; -c a)``."""
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex)


def apply_local(state: PureState, ops: Sequence) -> PureState:
    """Apply ``O_1 (x) ... (x) O_n`` by contracting one qubit at a time."""
    if len(ops) != state.n:
        raise DimensionMismatch(f"{len(ops)} operators for {state.n} qubits")
    t = state.tensor
    for axis, op in enumerate(ops):
        op = check_operator(op)
        t = np.moveaxis(np.tensordot(op, t, axes=([1], [axis])), 0, axis)
    return PureState(state.n, t.ravel())


def apply_on_qubit(state: PureState, op, k: int) -> PureState:
    """Apply ``op`` on qubit ``k`` and the identity elsewhere."""
    _check_qubit(state.n, k)
    ops = [IDENTITY] * state.n
    ops[k - 1] = op
    return apply_local(state, ops)


def _as_vector(s) -> np.ndarray:
    return s.amps if isinstance(s, PureState) else np.asarray(s, dtype=complex).ravel()


def proportional(s1, s2, tol: float = 1e-10) -> complex | None:
    """Return ``c`` with ``s2 ~= c * s1`` or ``None``.

    The residual ``max|s2 - c s1|`` is measured relative to ``max|s2|``.
    """
    v1, v2 = _as_vector(s1), _as_vector(s2)
    if v1.shape != v2.shape:
        raise DimensionMismatch("states have different dimensions")
    n1 = np.vdot(v1, v1).real
    ref = np.max(np.abs(v2))
    if n1 == 0 or ref == 0:
        return None
    c = np.vdot(v1, v2) / n1
    if c == 0:
        return None
    if np.max(np.abs(v2 - c * v1)) <= tol * ref:
        return complex(c)
    return None


def reduced_density_single(state: PureState, k: int) -> np.ndarray:
    """Trace-one single-qubit reduction of ``|psi><psi|`` at qubit ``k``."""
    _check_qubit(state.n, k)
    m = np.moveaxis(state.tensor, k - 1, 0).reshape(2, -1)
    rho = m @ m.conj().T
    return rho / np.trace(rho).real


def max_reduction_deviation(state: PureState) -> float:
    """``max_k ||rho_k - I/2||_max``; zero exactly when the state is in normal form."""
    return max(
        float(np.max(np.abs(reduced_density_single(state, k) - IDENTITY / 2)))
        for k in range(1, state.n + 1)
    )


def balancing_operator(rho: np.ndarray) -> np.ndarray:
    """Determinant-one ``rho^(-1/2)``, the step that pushes ``rho`` towards ``I/2``."""
    w, v = np.linalg.eigh(rho)
    m = (v / np.sqrt(w)) @ v.conj().T
    return m / np.sqrt(np.linalg.det(m))


def balance_state(
    state: PureState, sweeps: int = 3, floor: float = 1e-13
) -> tuple[list[np.ndarray], PureState]:
    """Sweep over the qubits, applying ``balancing_operator`` to each in turn.

    Returns the accumulated determinant-one operators and the balanced state,
    so that ``apply_local(state, ops)`` reproduces it.  Qubits whose reduction
    is nearly rank one (smaller eigenvalue below ``floor`` times the larger)
    are left alone, as are reductions that are already maximally mixed.
    """
    ops = [IDENTITY.astype(complex) for _ in range(state.n)]
    for _ in range(sweeps):
        for k in range(1, state.n + 1):
            rho = reduced_density_single(state, k)
            w = np.linalg.eigvalsh(rho)
            if w[0] < floor * w[1] or np.max(np.abs(rho - IDENTITY / 2)) < 1e-14:
                continue
            op = balancing_operator(rho)
            state = apply_on_qubit(state, op, k)
            ops[k - 1] = op @ ops[k - 1]
    return ops, state


# -- named states -------------------------------------------------------------

def _ket(bits: str) -> np.ndarray:
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[int(bits, 2)] = 1
    return v


def gabcd_amplitudes(a, b, c, d) -> np.ndarray:
    v = (
        (a + d) / 2 * (_ket("0000") + _ket("1111"))
        + (a - d) / 2 * (_ket("0011") + _ket("1100"))
        + (b + c) / 2 * (_ket("0101") + _ket("1010"))
        + (b - c) / 2 * (_ket("0110") + _ket("1001"))
    )
    return v


def named_state(name: str, params: Sequence[complex] | None = None) -> PureState:
    """Reference states: ``ghz3``, ``w3``, ``gabcd`` (needs ``(a, b, c, d)``) and
    ``ghzw4`` = (|0>|GHZ> + |1>|W>)/sqrt(2)."""
    key = name.lower()
    if key == "ghz3":
        return PureState(3, (_ket("000") + _ket("111")) / SQRT2)
    if key == "w3":
        return PureState(3, (_ket("001") + _ket("010") + _ket("100")) / np.sqrt(3))
    if key == "gabcd":
        if params is None or len(params) != 4:
            raise MissingParams("gabcd needs the four parameters (a, b, c, d)")
        return PureState(4, gabcd_amplitudes(*(complex(p) for p in params)))
    if key == "ghzw4":
        ghz = (_ket("000") + _ket("111")) / SQRT2
        w = (_ket("001") + _ket("010") + _ket("100")) / np.sqrt(3)
        return PureState(4, np.concatenate([ghz, w]) / SQRT2)
    raise UnknownName(f"unknown state {name!r}; expected ghz3, w3, gabcd or ghzw4")


# -- random helpers (tests and demos) -----------------------------------------

def random_state(n: int, rng: np.random.Generator) -> PureState:
    return PureState(n, rng.normal(size=2**n) + 1j * rng.normal(size=2**n))


def random_operator(rng: np.random.Generator) -> np.ndarray:
    """Complex Ginibre 2x2 matrix (invertible with probability one)."""
    return rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))


def random_sl2(rng: np.random.Generator) -> np.ndarray:
    m = random_operator(rng)
    return m / np.sqrt(np.linalg.det(m))


# -- JSON state files ---------------------------------------------------------

def state_to_dict(state: PureState) -> dict:
    return {"n": state.n, "amps": [[float(a.real), float(a.imag)] for a in state.amps]}


def state_from_dict(data: dict) -> PureState:
    try:
        n = int(data["n"])
        amps = [complex(float(re), float(im)) for re, im in data["amps"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed state document: {exc}") from exc
    return make_state(n, amps)


def save_state(state: PureState, path) -> None:
    Path(path).write_text(json.dumps(state_to_dict(state), indent=2), encoding="utf-8")


def load_state(path) -> PureState:
    return state_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
