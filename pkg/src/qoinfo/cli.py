"""Command-line entry point.

Exit codes: 0 success, 2 validation failure (registry mismatch), 3 numerical
failure (invalid state or optimizer non-convergence).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .errors import ConvergenceError, NotAStateError, QOInfoError, RegistryValidationError
from .experiments import (
    DEFAULT_H2_COUPLINGS,
    RunConfig,
    run_fig1a,
    run_fig1b,
    run_fig2,
    run_table1,
    write_output,
)
from .qinformation import q_information_bounds, q_information_reduced, traced_choice_spread
from .states import find_mmes, load_amplitude_records, registry_get

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=1, help="master seed (default 1)")
    parser.add_argument("--samples", type=int, default=10_000, help="samples per size")
    parser.add_argument("--t-max", type=float, default=10.0, help="sweep end time")
    parser.add_argument("--steps", type=int, default=501, help="time grid points")
    parser.add_argument("--out", type=Path, default=None, help="output file path")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--workers", type=int, default=1, help="parallel workers")
    parser.add_argument(
        "--periodic-bonds", action="store_true",
        help="close the interaction chain into a ring (orders 2 and 3)",
    )
    parser.add_argument("--bins", type=int, default=101, help="histogram bin count")
    parser.add_argument(
        "--diagnostics", action="store_true",
        help="add bound/spread columns for 4-qubit samples",
    )
    parser.add_argument(
        "--h2-couplings", type=float, nargs=3, metavar=("JX", "JY", "JZ"),
        default=list(DEFAULT_H2_COUPLINGS),
        help="couplings for the order-2 sweep (default 1 -1 1; with 1 1 1 the "
        "GHZ, W and |0000> series are constant because those states are "
        "eigenstates of the isotropic chain)",
    )


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        seed=args.seed,
        samples=args.samples,
        t_max=args.t_max,
        steps=args.steps,
        out=args.out,
        fmt=args.format,
        workers=args.workers,
        periodic_bonds=args.periodic_bonds,
        bins=args.bins,
        diagnostics=args.diagnostics,
        h2_couplings=tuple(args.h2_couplings),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qoinfo",
        description="Q-information of multi-qubit states: reference values, "
        "exhaustive and random sweeps, and unitary evolution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, doc in [
        ("table1", "recompute the reference-value table"),
        ("fig1a", "all 65,535 binary-coefficient 4-qubit states"),
        ("fig1b", "random Gaussian states traced down to 3 qubits (n=4..7)"),
        ("fig2", "time-evolution sweeps for interaction orders 1..4"),
    ]:
        p = sub.add_parser(name, help=doc)
        _add_common(p)

    p = sub.add_parser("qinfo", help="Q-information of one state")
    p.add_argument("--state", help="registry name, e.g. GHZ, W, YC, HD, HS, MMES")
    p.add_argument("--n", type=int, default=4, help="qubit count for --state")
    p.add_argument("--amplitude-file", type=Path, help="amplitude records to load")
    p.add_argument("--traced-qubit", type=int, default=0)

    p = sub.add_parser("mmes-search", help="search for a minimal-purity state")
    p.add_argument("--n", type=int, required=True, choices=(4, 5, 6))
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--max-iters", type=int, default=2000)
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--out", type=Path, default=None, help="write amplitudes here")

    return parser


def _cmd_experiment(args: argparse.Namespace) -> int:
    config = _config(args)
    runner = {
        "table1": run_table1,
        "fig1a": run_fig1a,
        "fig1b": run_fig1b,
        "fig2": run_fig2,
    }[args.command]
    result = runner(config)
    write_output(result, config)
    print(json.dumps({"summary": result["summary"]}, sort_keys=True))
    return EXIT_OK


def _cmd_qinfo(args: argparse.Namespace) -> int:
    if (args.state is None) == (args.amplitude_file is None):
        print("qinfo: provide exactly one of --state or --amplitude-file", file=sys.stderr)
        return EXIT_VALIDATION
    if args.state is not None:
        psi = registry_get(args.state, args.n).state()
    else:
        psi = load_amplitude_records(args.amplitude_file)
    result = q_information_reduced(psi, traced_qubit=args.traced_qubit)
    payload = {
        "n_qubits": psi.n_qubits,
        "traced_qubit": args.traced_qubit,
        "omega_q": result.omega,
        "terms": dict(result.term_breakdown),
    }
    if psi.n_qubits == 4:
        lo, hi = q_information_bounds(psi)
        payload["bound_lower"] = lo
        payload["bound_upper"] = hi
        payload["traced_spread"] = traced_choice_spread(psi)
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def _cmd_mmes(args: argparse.Namespace) -> int:
    state = find_mmes(args.n, args.seed, max_iters=args.max_iters, restarts=args.restarts)
    omega = q_information_reduced(state).omega
    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("name,n_qubits,basis_index,re,im,source,expected_omega\n")
            for idx, amp in enumerate(state.amplitudes):
                if abs(amp) < 1e-12:
                    continue
                fh.write(
                    f"MMES,{args.n},{idx},{amp.real!r},{amp.imag!r},"
                    f"optimized (seed {args.seed}),{omega!r}\n"
                )
    print(json.dumps({"n": args.n, "omega_q": omega, "seed": args.seed}, sort_keys=True))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command in ("table1", "fig1a", "fig1b", "fig2"):
            return _cmd_experiment(args)
        if args.command == "qinfo":
            return _cmd_qinfo(args)
        if args.command == "mmes-search":
            return _cmd_mmes(args)
        raise AssertionError(f"unhandled command {args.command}")
    except (RegistryValidationError, LookupError) as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (NotAStateError, ConvergenceError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except QOInfoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
