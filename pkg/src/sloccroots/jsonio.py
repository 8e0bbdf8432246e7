"""JSON encodings shared by the command line tool.

Complex numbers are ``[re, im]`` pairs and 2x2 operators are nested lists of
such pairs.  Every writer here has a matching reader.
"""

from __future__ import annotations

import numpy as np

from .slocc import EquivalenceVerdict, NormalForm
from .statekit import state_from_dict, state_to_dict


def encode_complex(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def decode_complex(pair) -> complex:
    re, im = pair
    return complex(float(re), float(im))


def encode_matrix(m) -> list:
    return [[encode_complex(x) for x in row] for row in np.asarray(m)]


def decode_matrix(rows) -> np.ndarray:
    return np.array([[decode_complex(x) for x in row] for row in rows], dtype=complex)


def verdict_to_dict(v: EquivalenceVerdict) -> dict:
    return {
        "verdict": v.outcome,
        "reason": v.reason,
        "scalar": None if v.scalar is None else encode_complex(v.scalar),
        "operators": None if v.witness is None else [encode_matrix(o) for o in v.witness],
        "candidates_per_qubit": list(v.candidates_per_qubit),
    }


def verdict_from_dict(d: dict) -> EquivalenceVerdict:
    ops = d.get("operators")
    scalar = d.get("scalar")
    return EquivalenceVerdict(
        d["verdict"],
        None if ops is None else [decode_matrix(o) for o in ops],
        None if scalar is None else decode_complex(scalar),
        d.get("reason", ""),
        list(d.get("candidates_per_qubit", [])),
    )


def normal_form_to_dict(nf: NormalForm) -> dict:
    return {
        "state": state_to_dict(nf.state),
        "operators": [encode_matrix(o) for o in nf.operators],
        "deviation": nf.deviation,
        "polished": nf.polished,
    }


def normal_form_from_dict(d: dict) -> NormalForm:
    return NormalForm(
        state_from_dict(d["state"]),
        [decode_matrix(o) for o in d["operators"]],
        float(d["deviation"]),
        bool(d["polished"]),
    )


def orbit_to_dict(params, tuples, distinct_states: int) -> dict:
    ordered = sorted(tuples, key=lambda t: tuple((z.real, z.imag) for z in t))
    return {
        "params": [encode_complex(x) for x in params],
        "count": len(ordered),
        "distinct_states": distinct_states,
        "orbit": [[encode_complex(x) for x in t] for t in ordered],
    }


def orbit_from_dict(d: dict) -> list[tuple]:
    return [tuple(decode_complex(x) for x in t) for t in d["orbit"]]
