"""SLOCC equivalence via root systems, and normal forms of generic four-qubit
states without iteration."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb, factorial
from typing import NamedTuple

import numpy as np

from .errors import (
    DegenerateRoots,
    DimensionMismatch,
    FourthPointMismatch,
    IdenticallyZero,
    NonGeneric,
)
from .invariants import THREE_TANGLE, SlipMeasure, measure_for_arity, pencil
from .moebius import (
    MoebiusMap,
    from_three_points,
    maps_proportional,
    normalize_to_normal_system,
    operator_root_action,
    root_action_to_operator,
)
from .rootsphere import RootSystem, find_roots, match_root_multisets
from .statekit import (
    PureState,
    adjugate,
    apply_local,
    apply_on_qubit,
    balance_state,
    balancing_operator,
    check_operator,
    decompose,
    max_reduction_deviation,
    proportional,
    reduced_density_single,
)

log = logging.getLogger(__name__)

ROOT_TOL = 1e-8
PROP_TOL = 1e-7
# Pruning threshold for "maps the whole root system": loose on purpose, the
# proportionality test in the search is the real decision.
MATCH_TOL = 1e-6

EQUIVALENT = "equivalent"
NOT_EQUIVALENT = "not_equivalent"
INCONCLUSIVE = "inconclusive"


@dataclass
class EquivalenceVerdict:
    outcome: str
    witness: list[np.ndarray] | None = None
    scalar: complex | None = None
    reason: str = ""
    candidates_per_qubit: list[int] = field(default_factory=list)

    @property
    def equivalent(self) -> bool:
        return self.outcome == EQUIVALENT


def _unit_det(m: np.ndarray) -> np.ndarray:
    return m / np.sqrt(np.linalg.det(m))


def roots_for_qubit(
    state: PureState, k: int, measure: SlipMeasure | None = None, precondition: bool = True
) -> RootSystem:
    """Roots of ``measure(z psi0 + psi1)`` for the split at qubit ``k``.

    With ``precondition`` the state is first balanced by determinant-one
    local operators.  On the other qubits these leave the pencil unchanged;
    on qubit ``k`` they move the roots by a known Moebius map, which is
    undone afterwards.  The roots are the same, but a state that local
    operators have squeezed no longer loses digits to cancellation in the
    pencil or to clustering of its roots.  Residuals refer to the balanced
    pencil.
    """
    measure = measure or measure_for_arity(state.n - 1)
    if measure.arity != state.n - 1:
        raise DimensionMismatch(
            f"{measure.name} acts on {measure.arity} qubits, state has {state.n}"
        )
    ops, work = balance_state(state) if precondition else (None, state)
    try:
        rs = find_roots(pencil(measure, decompose(work, k)), qubit=k)
    except IdenticallyZero as exc:
        raise NonGeneric(f"measure vanishes on the whole family at qubit {k}") from exc
    if precondition:
        back = operator_root_action(adjugate(ops[k - 1]))
        rs = RootSystem(tuple(back(z) for z in rs.roots), rs.h, k, rs.residuals)
    return rs


def candidate_bound(h: int) -> int:
    return factorial(3) * comb(h, 3)


def candidate_operators(
    roots_a: RootSystem,
    roots_b: RootSystem,
    tol: float = ROOT_TOL,
    full_match: bool = True,
    match_tol: float = MATCH_TOL,
) -> list[np.ndarray]:
    """Operators ``O`` (det one) whose root action sends a fixed triple of
    ``roots_a`` onto some ordered triple of ``roots_b``.

    With ``full_match`` only maps carrying the whole system ``roots_a`` onto
    ``roots_b`` are kept; any operator relating the two states must do so.
    """
    dist_a = roots_a.distinct(tol)
    dist_b = roots_b.distinct(tol)
    if len(dist_a) < 3 or len(dist_b) < 3:
        raise DegenerateRoots(
            f"need three distinct roots, found {len(dist_a)} and {len(dist_b)}"
        )
    triple = dist_a[:3]
    maps: list[MoebiusMap] = []
    for subset in combinations(dist_b, 3):
        for target in permutations(subset):
            m = from_three_points(*triple, *target)
            if full_match:
                image = [m(z) for z in roots_a.roots]
                if match_root_multisets(image, roots_b.roots, match_tol) is None:
                    continue
            if not any(maps_proportional(m, other) for other in maps):
                maps.append(m)
    return [_unit_det(root_action_to_operator(m)) for m in maps]


def _search(psi_a: PureState, psi_b: PureState, cands, tol: float):
    """Depth-first over candidate indices in lexicographic order."""
    n = psi_a.n
    chosen: list[np.ndarray] = []

    def rec(t: np.ndarray, axis: int):
        if axis == n:
            c = proportional(t.ravel(), psi_b.amps, tol)
            return None if c is None else (list(chosen), c)
        for op in cands[axis]:
            nt = np.moveaxis(np.tensordot(op, t, axes=([1], [axis])), 0, axis)
            chosen.append(op)
            found = rec(nt, axis + 1)
            chosen.pop()
            if found is not None:
                return found
        return None

    return rec(psi_a.tensor, 0)


def equivalence_check(
    psi_a: PureState,
    psi_b: PureState,
    measure: SlipMeasure | None = None,
    tol: float = PROP_TOL,
    root_tol: float = ROOT_TOL,
) -> EquivalenceVerdict:
    """Decide whether ``psi_b`` is proportional to ``(O_1 x ... x O_n) psi_a``.

    Candidates per qubit come from Möbius maps between root triples; their
    tensor products are tried in lexicographic order and the first one that
    maps ``psi_a`` onto a multiple of ``psi_b`` is returned as the witness.
    States with fewer than three distinct roots on some qubit, or measures of
    degree below three, give an inconclusive verdict.
    """
    if psi_a.n != psi_b.n:
        raise DimensionMismatch("states have different qubit counts")
    measure = measure or measure_for_arity(psi_a.n - 1)
    if measure.degree < 3:
        return EquivalenceVerdict(
            INCONCLUSIVE,
            reason=f"measure {measure.name} has degree {measure.degree} < 3",
        )
    cands = []
    for k in range(1, psi_a.n + 1):
        try:
            ra = roots_for_qubit(psi_a, k, measure)
            rb = roots_for_qubit(psi_b, k, measure)
            ops = candidate_operators(ra, rb, root_tol)
        except (NonGeneric, DegenerateRoots) as exc:
            return EquivalenceVerdict(INCONCLUSIVE, reason=f"qubit {k}: {exc}")
        if len(ops) > candidate_bound(measure.degree):
            raise AssertionError("candidate bound exceeded")
        if not ops:
            return EquivalenceVerdict(
                NOT_EQUIVALENT,
                reason=f"root systems at qubit {k} are not related by a Möbius map",
                candidates_per_qubit=[len(c) for c in cands] + [0],
            )
        cands.append(ops)
    sizes = [len(c) for c in cands]
    log.debug("candidates per qubit: %s", sizes)
    found = _search(psi_a, psi_b, cands, tol)
    if found is None:
        return EquivalenceVerdict(
            NOT_EQUIVALENT,
            reason="no candidate product maps one state onto the other",
            candidates_per_qubit=sizes,
        )
    ops, c = found
    return EquivalenceVerdict(EQUIVALENT, ops, c, candidates_per_qubit=sizes)


def verify_witness(psi_a: PureState, psi_b: PureState, witness, tol: float = PROP_TOL) -> bool:
    return proportional(apply_local(psi_a, witness), psi_b, tol) is not None


def verify_theorem1(
    state: PureState,
    op,
    k: int,
    j: int,
    measure: SlipMeasure | None = None,
    tol: float = ROOT_TOL,
) -> bool:
    """Check root behaviour when ``op`` acts on qubit ``j``, for the split at ``k``.

    For ``j != k`` the root system is unchanged; for ``j == k`` it moves by
    the adjugate Möbius map of ``op``.
    """
    op = check_operator(op)
    before = roots_for_qubit(state, k, measure)
    after = roots_for_qubit(apply_on_qubit(state, op, j), k, measure)
    if j == k:
        action = operator_root_action(op)
        expected = [action(z) for z in before.roots]
    else:
        expected = list(before.roots)
    return match_root_multisets(expected, after.roots, tol) is not None


class NormalForm(NamedTuple):
    state: PureState
    operators: list[np.ndarray]
    deviation: float
    polished: bool


def _balance(state: PureState) -> list[np.ndarray]:
    """One simultaneous step of the reduction-balancing iteration."""
    ops = []
    for k in range(1, state.n + 1):
        rho = reduced_density_single(state, k)
        ops.append(balancing_operator(rho))
    return ops


def normal_form_gabcd(
    state: PureState,
    measure: SlipMeasure = THREE_TANGLE,
    tol: float = ROOT_TOL,
) -> NormalForm:
    """Bring a generic four-qubit state to a form with maximally mixed
    single-qubit reductions.

    Each qubit's root system is mapped onto a normal system by ``T_k``; the
    operator applied is the one whose root action is ``T_k``.  Operators on
    other qubits leave a qubit's roots alone, so all four are fixed at once.
    If the reductions still miss ``I/2`` by more than ``tol``, one balancing
    step is applied and ``polished`` is set.
    """
    if state.n != measure.arity + 1:
        raise DimensionMismatch(f"expected {measure.arity + 1} qubits, got {state.n}")
    ops = []
    for k in range(1, state.n + 1):
        roots = roots_for_qubit(state, k, measure)
        try:
            t, _ = normalize_to_normal_system(roots.roots)
        except (DegenerateRoots, FourthPointMismatch) as exc:
            raise NonGeneric(f"qubit {k}: {exc}") from exc
        ops.append(_unit_det(root_action_to_operator(t)))
    out = apply_local(state, ops)
    dev = max_reduction_deviation(out)
    polished = False
    if dev > tol:
        log.warning("reductions off by %.2e after root normalization; polishing", dev)
        fix = _balance(out)
        out = apply_local(out, fix)
        ops = [f @ o for f, o in zip(fix, ops)]
        dev = max_reduction_deviation(out)
        polished = True
    return NormalForm(out, ops, dev, polished)

