"""SLOCC classification of multi-qubit pure states from the roots of a single
SL-invariant polynomial measure.

Typical use::

    from sloccroots import named_state, equivalence_check, normal_form_gabcd
    nf = normal_form_gabcd(named_state("ghzw4"))
"""

from .errors import *  # noqa: F401,F403
from .gabcd import (
    canonical_tuple,
    gabcd_state,
    operator_orbit_check,
    operator_orbit_tuples,
    phase_classes,
    root_quartic,
    weyl_orbit,
)
from .invariants import (
    CONCURRENCE,
    THREE_TANGLE,
    PencilPolynomial,
    SlipMeasure,
    concurrence_poly,
    pencil,
    three_tangle_poly,
)
from .moebius import (
    MoebiusMap,
    cross_ratio,
    cross_ratio_orbit,
    from_three_points,
    g24_elements,
    normal_system_solutions,
    normalize_to_normal_system,
    operator_root_action,
    root_action_to_operator,
)
from .rootsphere import (
    INF,
    BlochPoint,
    RootSystem,
    chordal_distance,
    find_roots,
    from_bloch,
    match_root_multisets,
    to_bloch,
)
from .slocc import (
    EquivalenceVerdict,
    NormalForm,
    candidate_operators,
    equivalence_check,
    normal_form_gabcd,
    roots_for_qubit,
    verify_theorem1,
)
from .statekit import (
    PureState,
    StatePair,
    apply_local,
    balance_state,
    decompose,
    family_member,
    make_state,
    named_state,
    proportional,
    reduced_density_single,
)

__version__ = "0.1.0"
