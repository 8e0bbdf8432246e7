"""Normal form of a four-qubit state without iterating.

Each qubit's four roots are moved onto a symmetric configuration
``{z0, 1/z0, -z0, -1/z0}`` by a single Moebius map, and the local operator
inducing that map is applied.  The single-qubit reductions of the result
are all ``I/2``.  The Bloch coordinates of the roots before and after are
written to ``normal_form_roots.json``.
"""

import json

import numpy as np

from sloccroots import named_state
from sloccroots.rootsphere import roots_to_dict
from sloccroots.slocc import normal_form_gabcd, roots_for_qubit
from sloccroots.statekit import max_reduction_deviation, reduced_density_single


def main():
    psi = named_state("ghzw4")
    print(f"ghzw4: max |rho_k - I/2| = {max_reduction_deviation(psi):.3f}")

    nf = normal_form_gabcd(psi)
    print(f"normal form: max |rho_k - I/2| = {nf.deviation:.2e}  (balancing step used: {nf.polished})")
    for k, op in enumerate(nf.operators, 1):
        print(f"  O_{k} =", np.array2string(op, precision=3, suppress_small=True).replace("\n", ""))
    print("rho_1 of the normal form:")
    print(np.round(reduced_density_single(nf.state, 1), 12))

    doc = {
        "before": [roots_to_dict(roots_for_qubit(psi, k)) for k in range(1, 5)],
        "after": [roots_to_dict(roots_for_qubit(nf.state, k)) for k in range(1, 5)],
    }
    with open("normal_form_roots.json", "w") as fh:
        json.dump(doc, fh, indent=1)
    print("root systems written to normal_form_roots.json")


if __name__ == "__main__":
    main()
