"""GHZ and W on three qubits, told apart by where the concurrence pencil vanishes.

Splitting off one qubit leaves a two-qubit family ``z psi0 + psi1``.  Its
concurrence is a quadratic in ``z``.  For GHZ the two roots sit at the
poles of the sphere; for W they merge into a double root at the south pole.
No invertible local operator can split a double root, which is why the two
classes never meet.
"""

import numpy as np

from sloccroots import named_state
from sloccroots.invariants import CONCURRENCE
from sloccroots.rootsphere import to_bloch
from sloccroots.slocc import roots_for_qubit
from sloccroots.statekit import apply_local, random_operator


def show(label, state):
    print(label)
    for k in range(1, 4):
        rs = roots_for_qubit(state, k, CONCURRENCE)
        pts = ", ".join(f"theta={to_bloch(z).theta:.4f}" for z in rs.roots)
        clusters = [m for _, m in rs.clusters()]
        print(f"  qubit {k}: roots {rs.roots}  ({pts})  multiplicities {clusters}")


def main():
    show("GHZ", named_state("ghz3"))
    show("W", named_state("w3"))

    # a random local image keeps the root pattern: two distinct roots stay
    # distinct, a double root stays double
    rng = np.random.default_rng(1)
    ops = [random_operator(rng) for _ in range(3)]
    show("GHZ after random local operators", apply_local(named_state("ghz3"), ops))
    show("W after random local operators", apply_local(named_state("w3"), ops))


if __name__ == "__main__":
    main()
