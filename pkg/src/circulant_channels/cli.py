"""Command-line front end.

Subcommands::

    channel apply MATRIX --weights <csv|uniform> [--out PATH]
    channel spectrum --weights <csv|uniform> [--dim N] [--tol T] [--out PATH]
    coherence sweep --phi RAD --steps N [--p 1|2] [--format csv|json]
                    [--digits N] [--out PATH]
    bargmann canon TUPLE [--out PATH]
    bipartite demo DA DB [--seed N] [--tol T] [--out PATH]

Exit codes: 0 success, 1 I/O failure, 2 validation failure, 3 degenerate
mathematical input (vanishing invariant), 4 sampling failure.  Output is
deterministic: the same inputs and seed always produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import bargmann, bipartite, channels, coherence, serialize


class _SingleLineParser(argparse.ArgumentParser):
    """argparse that fails with one diagnostic line and exit code 2."""

    def error(self, message):
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _read_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text + "\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _emit_json(obj, out: str | None) -> None:
    _emit(json.dumps(obj, indent=2, sort_keys=True), out)


def _parse_weights(spec: str, dim: int | None) -> np.ndarray:
    """Parse --weights: "uniform" (needs a dimension) or comma-separated
    nonnegative reals, normalized to unit sum after parsing."""
    if spec == "uniform":
        if dim is None:
            raise ValueError("uniform weights need a dimension")
        return channels.uniform_weights(dim)
    try:
        values = np.array([float(tok) for tok in spec.split(",")])
    except ValueError as exc:
        raise ValueError(f"could not parse weights {spec!r}: {exc}") from exc
    if values.size < 1:
        raise ValueError("weight list is empty")
    if np.min(values) < 0:
        raise ValueError("weights must be nonnegative")
    total = values.sum()
    if total <= 0:
        raise ValueError("weights must have positive sum")
    values = values / total
    if dim is not None and values.size != dim:
        raise ValueError(f"got {values.size} weights for dimension {dim}")
    return values


def _cmd_channel_apply(args) -> None:
    x = serialize.matrix_from_json(_read_json(args.matrix))
    if x.shape[0] != x.shape[1]:
        raise ValueError(f"input matrix must be square, got {x.shape}")
    lam = _parse_weights(args.weights, x.shape[0])
    _emit_json(serialize.matrix_to_json(channels.apply_kraus(lam, x)), args.out)


def _cmd_channel_spectrum(args) -> None:
    lam = _parse_weights(args.weights, args.dim)
    report = channels.channel_spectrum(lam)
    payload = {
        "channel_spectrum": {
            "eigenvalues": serialize.complex_vector_to_json(report.eigenvalues),
            "multiplicity_of_one": report.multiplicity_of_one,
            "multiplicity_of_zero": report.multiplicity_of_zero,
        },
        "alpha": serialize.complex_vector_to_json(channels.weight_fourier_coeffs(lam)),
        "choi_pt_spectrum": serialize._as_float_list(
            channels.choi_pt_spectrum(lam), "choi PT spectrum"
        ),
        "is_entanglement_breaking": channels.is_entanglement_breaking(lam, tol=args.tol),
    }
    _emit_json(payload, args.out)


def _cmd_coherence_sweep(args) -> None:
    if args.steps < 2:
        raise ValueError(f"steps must be at least 2, got {args.steps}")
    thetas = np.linspace(0.0, np.pi, args.steps)
    rows = coherence.coherence_sweep(args.phi, thetas, p=args.p)
    if args.format == "csv":
        _emit("\n".join(serialize.sweep_to_csv_lines(rows, digits=args.digits)), args.out)
    else:
        _emit_json(serialize.sweep_to_json(rows), args.out)


def _cmd_bargmann_canon(args) -> None:
    states = serialize.states_from_json(_read_json(args.tuple))
    canon, report = bargmann.canonicalize(states)
    payload = {
        "report": {
            "original_invariant": serialize.complex_to_json(report.original_invariant),
            "canonical_invariant": serialize.complex_to_json(report.canonical_invariant),
            "common_inner_product": serialize.complex_to_json(report.common_inner_product),
            "arg_match": report.arg_match,
            "modulus_bound_holds": report.modulus_bound_holds,
        },
        "canonical": serialize.states_to_json(canon),
    }
    _emit_json(payload, args.out)


def _cmd_bipartite_demo(args) -> None:
    da, db = args.da, args.db
    if da < 2 or db < 2:
        raise ValueError(f"demo needs both dimensions at least 2, got {da} x {db}")
    rho = bipartite.random_entangled_state(da, db, seed=args.seed, tol=args.tol)
    before = bipartite.ppt_check(rho, (da, db), tol=args.tol)
    out = bipartite.apply_uniform_A(rho, (da, db))
    after = bipartite.ppt_check(out, (da, db), tol=args.tol)
    payload = {
        "dims": {"dA": da, "dB": db},
        "seed": args.seed,
        "input": {
            "min_eigenvalue": before.min_eigenvalue,
            "is_ppt": before.is_ppt,
        },
        "output": {
            "min_eigenvalue": after.min_eigenvalue,
            "is_ppt": after.is_ppt,
        },
    }
    _emit_json(payload, args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = _SingleLineParser(prog="circulant-channels", description=__doc__)
    top = parser.add_subparsers(dest="group", parser_class=_SingleLineParser)

    channel = top.add_parser("channel", help="apply the channel or report spectra")
    channel_sub = channel.add_subparsers(dest="command", parser_class=_SingleLineParser)

    apply_p = channel_sub.add_parser("apply", help="apply weighted channel to a matrix")
    apply_p.add_argument("matrix", help="JSON matrix file")
    apply_p.add_argument("--weights", required=True, help='"uniform" or comma-separated reals')
    apply_p.add_argument("--out", default=None, help="output path (default stdout)")
    apply_p.set_defaults(func=_cmd_channel_apply)

    spec_p = channel_sub.add_parser("spectrum", help="spectral and Choi report")
    spec_p.add_argument("--weights", required=True, help='"uniform" or comma-separated reals')
    spec_p.add_argument("--dim", type=int, default=None, help="dimension for uniform weights")
    spec_p.add_argument("--tol", type=float, default=1e-10)
    spec_p.add_argument("--out", default=None)
    spec_p.set_defaults(func=_cmd_channel_spectrum)

    coh = top.add_parser("coherence", help="coherence bounds")
    coh_sub = coh.add_subparsers(dest="command", parser_class=_SingleLineParser)
    sweep_p = coh_sub.add_parser("sweep", help="coherence chain along the qutrit family")
    sweep_p.add_argument("--phi", type=float, required=True, help="relative phase in radians")
    sweep_p.add_argument("--steps", type=int, required=True, help="grid points on [0, pi]")
    sweep_p.add_argument("--p", type=int, choices=(1, 2), default=1)
    sweep_p.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep_p.add_argument("--digits", type=int, default=None, help="significant digits in CSV")
    sweep_p.add_argument("--out", default=None)
    sweep_p.set_defaults(func=_cmd_coherence_sweep)

    barg = top.add_parser("bargmann", help="invariant canonicalization")
    barg_sub = barg.add_subparsers(dest="command", parser_class=_SingleLineParser)
    canon_p = barg_sub.add_parser("canon", help="canonicalize a state tuple")
    canon_p.add_argument("tuple", help="JSON state-tuple file")
    canon_p.add_argument("--out", default=None)
    canon_p.set_defaults(func=_cmd_bargmann_canon)

    bip = top.add_parser("bipartite", help="local action on bipartite states")
    bip_sub = bip.add_subparsers(dest="command", parser_class=_SingleLineParser)
    demo_p = bip_sub.add_parser("demo", help="erase entanglement of a sampled state")
    demo_p.add_argument("da", type=int, help="dimension of subsystem A")
    demo_p.add_argument("db", type=int, help="dimension of subsystem B")
    demo_p.add_argument("--seed", type=int, default=0)
    demo_p.add_argument("--tol", type=float, default=1e-10)
    demo_p.add_argument("--out", default=None)
    demo_p.set_defaults(func=_cmd_bipartite_demo)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not hasattr(args, "func"):
        print("circulant-channels: error: missing subcommand", file=sys.stderr)
        return 2
    try:
        args.func(args)
    except bargmann.DegenerateInvariantError as exc:
        print(f"circulant-channels: degenerate input: {exc}", file=sys.stderr)
        return 3
    except bipartite.EntangledSamplingError as exc:
        print(f"circulant-channels: sampling failure: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"circulant-channels: i/o error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, TypeError) as exc:
        print(f"circulant-channels: invalid input: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
