"""Recover the local operators hiding one state inside another.

We take a G_abcd state, scramble it with random invertible local operators,
and ask whether the scrambled state and the original are related.  The
roots on each qubit give at most 24 candidate operators, and a witness is
assembled from them and checked against the states.  A second pair with
different cross-ratios is rejected.
"""

import numpy as np

from sloccroots.gabcd import gabcd_state
from sloccroots.moebius import cross_ratio, cross_ratio_orbit
from sloccroots.slocc import equivalence_check, roots_for_qubit, verify_witness
from sloccroots.statekit import apply_local, proportional, random_operator


def main():
    rng = np.random.default_rng(7)
    psi = gabcd_state((1, 2 + 1j, 3, 0.5j))
    phi = apply_local(psi, [random_operator(rng) for _ in range(4)])

    v = equivalence_check(psi, phi)
    print(f"verdict: {v.outcome}  candidates per qubit: {v.candidates_per_qubit}")
    print(f"witness verified: {verify_witness(psi, phi, v.witness)}")
    c = proportional(apply_local(psi, v.witness), phi, 1e-7)
    print(f"phi = {c:.4f} * (W1 x W2 x W3 x W4) psi")

    other = gabcd_state((1, 2, 3, 5))
    lam_a = cross_ratio(*roots_for_qubit(psi, 1).roots)
    lam_b = cross_ratio(*roots_for_qubit(other, 1).roots)
    print("cross-ratio orbit of psi:  ", np.round(cross_ratio_orbit(lam_a), 4))
    print("cross-ratio orbit of other:", np.round(cross_ratio_orbit(lam_b), 4))
    v = equivalence_check(psi, other)
    print(f"verdict: {v.outcome}  ({v.reason})")


if __name__ == "__main__":
    main()
