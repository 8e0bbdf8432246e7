"""Command line front end.

Exit codes: 0 success or equivalent, 1 not equivalent, 2 input/output error,
3 non-generic input or inconclusive verdict.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import gabcd
from .errors import NonGeneric, SloccError
from .invariants import MEASURES, measure_for_arity
from .jsonio import normal_form_to_dict, orbit_to_dict, verdict_to_dict
from .rootsphere import is_inf, roots_to_dict
from .slocc import (
    EQUIVALENT,
    NOT_EQUIVALENT,
    equivalence_check,
    normal_form_gabcd,
    roots_for_qubit,
)
from .statekit import load_state, named_state, save_state, state_to_dict

EXIT_OK = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_IO = 2
EXIT_NONGENERIC = 3


class InputError(Exception):
    pass


def _read_state(path: str):
    try:
        return load_state(path)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise InputError(f"cannot read state file {path}: {exc}") from exc


def _measure(name: str | None, n: int):
    if name is None:
        return measure_for_arity(n - 1)
    m = MEASURES[name]
    if m.arity != n - 1:
        raise InputError(f"{name} needs {m.arity + 1}-qubit states, got {n}")
    return m


def _emit(obj, path: str | None = None) -> None:
    text = json.dumps(obj, indent=2)
    if path:
        Path(path).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _fmt(z) -> str:
    return "inf" if is_inf(z) else f"{z.real:+.9f}{z.imag:+.9f}j"


def cmd_roots(args) -> int:
    state = _read_state(args.state)
    measure = _measure(args.measure, state.n)
    if args.qubit == "all":
        qubits = range(1, state.n + 1)
    elif args.qubit.isdigit():
        qubits = [int(args.qubit)]
    else:
        raise InputError(f"--qubit must be an index or 'all', got {args.qubit!r}")
    systems = []
    for k in qubits:
        rs = roots_for_qubit(state, k, measure)
        entry = roots_to_dict(rs)
        entry["multiplicities"] = [m for _, m in rs.clusters(args.root_tol)]
        systems.append(entry)
        if not args.json:
            print(f"qubit {k} ({measure.name}, h={rs.h}):")
            for z, m in rs.clusters(args.root_tol):
                flag = f"  [multiplicity {m}]" if m > 1 else ""
                print(f"  {_fmt(z)}{flag}")
    if args.export_bloch:
        _emit(systems, args.export_bloch)
    if args.json:
        _emit({"measure": measure.name, "systems": systems})
    return EXIT_OK


def cmd_equiv(args) -> int:
    a, b = _read_state(args.state_a), _read_state(args.state_b)
    if a.n != b.n:
        raise InputError("states have different qubit counts")
    measure = _measure(args.measure, a.n)
    v = equivalence_check(a, b, measure, tol=args.prop_tol, root_tol=args.root_tol)
    if args.json:
        _emit(verdict_to_dict(v))
    else:
        print(v.outcome + (f": {v.reason}" if v.reason else ""))
        if v.witness is not None:
            for k, op in enumerate(v.witness, 1):
                print(f"  O_{k} = {np.array2string(op, precision=6)}")
            print(f"  scalar = {v.scalar:.9g}")
    if v.outcome == EQUIVALENT:
        return EXIT_OK
    if v.outcome == NOT_EQUIVALENT:
        return EXIT_NOT_EQUIVALENT
    return EXIT_NONGENERIC


def cmd_normal_form(args) -> int:
    state = _read_state(args.state)
    if state.n != 4:
        raise InputError("normal-form expects a four-qubit state")
    nf = normal_form_gabcd(state, _measure(args.measure, 4), tol=args.root_tol)
    if args.out:
        save_state(nf.state, args.out)
    if args.json:
        _emit(normal_form_to_dict(nf))
    else:
        for k, op in enumerate(nf.operators, 1):
            print(f"O_{k} = {np.array2string(op, precision=6)}")
        print(f"max |rho_k - I/2| = {nf.deviation:.3e}" + (" (polished)" if nf.polished else ""))
    return EXIT_OK


def cmd_gabcd_orbit(args) -> int:
    try:
        params = [complex(x.replace(" ", "")) for x in args.params]
    except ValueError as exc:
        raise InputError(f"bad parameter: {exc}") from exc
    orbit = gabcd.weyl_orbit(params)
    states = gabcd.phase_classes(orbit)
    doc = orbit_to_dict(params, orbit, len(states))
    if args.json or args.out:
        _emit(doc, args.out)
    if not args.json:
        print(f"count {doc['count']} ({doc['distinct_states']} distinct states)")
    return EXIT_OK


def cmd_demo(args) -> int:
    params = None
    if args.params:
        params = [complex(x) for x in args.params]
    state = named_state(args.name, params)
    _emit(state_to_dict(state), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sloccroots",
        description="SLOCC equivalence and normal forms from roots of entanglement measures",
    )
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--measure", choices=sorted(MEASURES), default=None,
                       help="default: concurrence for 3 qubits, three-tangle for 4")
        p.add_argument("--root-tol", type=float, default=1e-8)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("roots", help="root systems per qubit")
    p.add_argument("state")
    p.add_argument("--qubit", default="all")
    p.add_argument("--export-bloch", metavar="PATH")
    common(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("equiv", help="decide SLOCC equivalence of two states")
    p.add_argument("state_a")
    p.add_argument("state_b")
    p.add_argument("--prop-tol", type=float, default=1e-7)
    common(p)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("normal-form", help="normal form of a generic four-qubit state")
    p.add_argument("state")
    p.add_argument("--out", metavar="PATH", help="write the transformed state here")
    common(p)
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("gabcd-orbit", help="parameter tuples equivalent to G_abcd")
    p.add_argument("params", nargs=4, metavar="X", help="a b c d (Python complex syntax)")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gabcd_orbit)

    p = sub.add_parser("demo", help="write a named reference state")
    p.add_argument("name", choices=["ghz3", "w3", "ghzw4", "gabcd"])
    p.add_argument("--params", nargs=4, metavar="X")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_demo)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except NonGeneric as exc:
        print(f"non-generic input: {exc}", file=sys.stderr)
        return EXIT_NONGENERIC
    except SloccError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONGENERIC
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
