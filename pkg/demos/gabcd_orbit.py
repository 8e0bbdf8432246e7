"""The parameter tuples that describe the same G_abcd class.

Permuting ``(a, b, c, d)`` and flipping an even number of signs gives 192
tuples.  Because ``t`` and ``-t`` are the same ray, they name 96 distinct
states.  The demo checks that sweeping cube rotations on every qubit finds
exactly the same tuples.
"""

import time

from sloccroots.gabcd import (
    lift_count,
    operator_orbit_check,
    operator_orbit_tuples,
    phase_classes,
    quartic_coefficients,
    weyl_orbit,
)


def main():
    p = (1, 2, 3, 4)
    A, B = quartic_coefficients(p)
    mid = 2 * (2 * B + A)
    print(f"root quartic of G{p}: {A.real:g} z^4 - {mid.real:g} z^2 + {A.real:g}")

    orbit = weyl_orbit(p)
    classes = phase_classes(orbit)
    print(f"signed permutations: {len(orbit)} tuples, {len(classes)} states up to phase")
    print(f"every state lifts to two tuples: {lift_count(classes, orbit) == len(orbit)}")

    t0 = time.perf_counter()
    swept = operator_orbit_tuples(p)
    print(f"24^4 cube-rotation sweep: {len(swept)} tuples in {time.perf_counter() - t0:.2f}s")
    print(f"sweep reproduces the signed permutations: {swept == orbit}")
    print(f"up to phase: {len(operator_orbit_check(p))} states")

    for t in sorted(orbit, key=lambda t: [abs(x) for x in t])[:6]:
        print("  ", tuple(int(x.real) for x in t))


if __name__ == "__main__":
    main()
