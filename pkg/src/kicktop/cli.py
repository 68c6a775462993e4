"""Command-line experiment runner.

Subcommands: sos, classical, quantum, compare, sweep, smatrix-check.
Each reads a configuration file, runs the corresponding pipeline, writes
CSV/JSON outputs into the run directory, and prints a one-line summary.
Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import ensemble, quantum, semiclassics
from .classical_map import surface_of_section
from .config import RunSpec, emit_resolved, parse_config
from .errors import ChannelRangeError, ConfigError, IncompatibleScaleError, NumericalError
from .params import rescale


def _fmt_cell(x) -> str:
    if isinstance(x, (float, np.floating)):
        return f"{x:.17g}"
    return str(x)


def write_csv(path: Path, header, rows):
    """CSV with LF endings; floats printed with 17 significant digits."""
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt_cell(x) for x in row) + "\n")


def _write_matrix_csv(path: Path, M: np.ndarray, channels: np.ndarray):
    header = ["N"] + [str(int(c)) for c in channels]
    rows = [[int(N)] + list(M[i]) for i, N in enumerate(channels)]
    write_csv(path, header, rows)


def _write_summary(outdir: Path, label: str, command: str, spec: RunSpec, metrics):
    payload = {
        "command": command,
        "label": label,
        "params": {
            "k": spec.params.k, "J": spec.params.J, "T": spec.params.T,
            "N0": spec.params.N0, "I": spec.params.I,
            "tau_eps": spec.params.tau_eps, "hbar_eff": spec.params.hbar_eff,
            "n": spec.params.n,
        },
        "seed": spec.seed,
        "metrics": metrics,
    }
    with open(outdir / f"{label}_summary.json", "w", newline="\n") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _prepare(spec: RunSpec):
    outdir = Path(spec.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    with open(outdir / f"{spec.label}_resolved.cfg", "w", newline="\n") as fh:
        fh.write(emit_resolved(spec))
    return outdir


def _cmd_sos(spec: RunSpec) -> str:
    outdir = _prepare(spec)
    rng = np.random.default_rng(spec.seed)
    uz = rng.uniform(-1.0, 1.0, spec.sos_seeds)
    phi = rng.uniform(0.0, 2.0 * np.pi, spec.sos_seeds)
    r = np.sqrt(1.0 - uz * uz)
    seeds = np.column_stack([r * np.cos(phi), r * np.sin(phi), uz])
    rec = surface_of_section(seeds, spec.kicks, spec.params)
    write_csv(outdir / f"{spec.label}_sos.csv", ["q", "ux", "uy", "uz"],
              ([int(row[0]), row[1], row[2], row[3]] for row in rec))
    _write_summary(outdir, spec.label, "sos", spec,
                   {"seeds": spec.sos_seeds, "kicks": spec.kicks,
                    "points": int(rec.shape[0])})
    return f"sos: {rec.shape[0]} points ({spec.sos_seeds} seeds x {spec.kicks} kicks)"


def _cmd_classical(spec: RunSpec) -> str:
    outdir = _prepare(spec)
    ring = ensemble.init_ring(spec.params.N0, spec.samples, spec.params,
                              spec.seed, energy_jitter=spec.energy_jitter)
    if spec.snapshots:
        _write_snapshots(outdir, spec, ring)
    dists = ensemble.evolve_ensemble(ring, spec.kicks, spec.params)
    M = ensemble.mutual_information_curve(dists)
    channels = spec.params.channels
    write_csv(outdir / f"{spec.label}_dist.csv", ["q", "N", "p"],
              ([q + 1, int(N), dists[q, i]]
               for q in range(spec.kicks) for i, N in enumerate(channels)))
    write_csv(outdir / f"{spec.label}_M.csv", ["q", "M"],
              ([q + 1, M[q]] for q in range(spec.kicks)))
    _write_summary(outdir, spec.label, "classical", spec,
                   {"samples": spec.samples, "kicks": spec.kicks,
                    "M_final": float(M[-1])})
    return f"classical: {spec.samples} samples, {spec.kicks} kicks, M(final)={M[-1]:.4f}"


def _write_snapshots(outdir: Path, spec: RunSpec, ring):
    """Point-cloud snapshots (q, ux, uy, uz) at the requested kick counts.

    Uses a fresh sample subset so the main run statistics are untouched.
    q = 0 records the initial ring itself.
    """
    count = min(spec.snap_points, ring.samples.shape[0])
    u = ring.samples[:count].copy()
    tau = ring.tau_factors[:count]
    wanted = sorted(set(spec.snapshots))
    rows = []
    q = 0
    if 0 in wanted:
        rows.extend([0, *pt] for pt in u)
    from .classical_map import period_map
    for target in [w for w in wanted if w > 0]:
        while q < target:
            u = period_map(u, spec.params, tau)
            q += 1
        rows.extend([q, *pt] for pt in u)
    write_csv(outdir / f"{spec.label}_snap.csv", ["q", "ux", "uy", "uz"], rows)


def _cmd_quantum(spec: RunSpec, dump_smatrix: bool = False) -> str:
    outdir = _prepare(spec)
    curve = semiclassics.quantum_H_curve(spec.params, spec.kicks, spec.overlap)
    channels = spec.params.channels
    write_csv(outdir / f"{spec.label}_H.csv", ["q", "H"],
              ([int(q), H] for q, H in zip(curve["q"], curve["H"])))
    write_csv(outdir / f"{spec.label}_p.csv", ["q", "N", "p"],
              ([int(q), int(N), curve["p"][qi, i]]
               for qi, q in enumerate(curve["q"])
               for i, N in enumerate(channels)))
    if dump_smatrix:
        S = quantum.build_torsion_smatrix(spec.params).S
        write_csv(outdir / f"{spec.label}_S.csv", ["N", "Nprime", "re", "im"],
                  ([int(Ni), int(Nj), S[i, j].real, S[i, j].imag]
                   for i, Ni in enumerate(channels)
                   for j, Nj in enumerate(channels)))
    _write_summary(outdir, spec.label, "quantum", spec,
                   {"kicks": spec.kicks, "H_final": float(curve["H"][-1])})
    return f"quantum: {spec.kicks} kicks, H(final)={curve['H'][-1]:.4f}"


def _cmd_compare(spec: RunSpec) -> str:
    outdir = _prepare(spec)
    rep = semiclassics.compare_H_M(spec.params, spec.kicks, spec.samples,
                                   spec.seed, spec.overlap, spec.energy_jitter)
    write_csv(outdir / f"{spec.label}_H.csv", ["q", "H"],
              ([int(q), H] for q, H in zip(rep["q"], rep["H"])))
    write_csv(outdir / f"{spec.label}_M.csv", ["q", "M"],
              ([int(q), M] for q, M in zip(rep["q"], rep["M"])))
    write_csv(outdir / f"{spec.label}_dev.csv", ["q", "H", "M", "dev"],
              ([int(q), H, M, d] for q, H, M, d
               in zip(rep["q"], rep["H"], rep["M"], rep["dev"])))
    _write_summary(outdir, spec.label, "compare", spec,
                   {"kicks": spec.kicks, "samples": spec.samples,
                    "sup_dev": rep["sup_dev"]})
    return f"compare: sup|H-M| = {rep['sup_dev']:.4f} over {spec.kicks} kicks"


def _cmd_sweep(spec: RunSpec) -> str:
    outdir = _prepare(spec)
    rep = semiclassics.hbar_sweep(spec.params, spec.scales, spec.kicks, spec.seed)
    for run in rep["runs"]:
        write_csv(outdir / f"{spec.label}_J{run['params'].J}_H.csv", ["q", "H"],
                  ([int(q), H] for q, H in zip(run["q"], run["H"])))
    rows = []
    for pair in rep["pairs"]:
        for qi, (Hp, res) in enumerate(zip(pair["H_pred"], pair["residual"]), start=1):
            rows.append([pair["J_from"], pair["J_to"], qi, Hp, res])
    write_csv(outdir / f"{spec.label}_residuals.csv",
              ["J_from", "J_to", "q", "H_pred", "residual"], rows)
    metrics = {
        "scales": list(spec.scales),
        "J_values": [run["params"].J for run in rep["runs"]],
        "pair_max_residual": [
            float(np.nanmax(pair["residual"])) for pair in rep["pairs"]
        ],
    }
    _write_summary(outdir, spec.label, "sweep", spec, metrics)
    return f"sweep: {len(rep['runs'])} scales, J = {metrics['J_values']}"


def _cmd_smatrix_check(spec: RunSpec) -> str:
    outdir = _prepare(spec)
    rep = semiclassics.smatrix_vs_classical(spec.params, spec.samples,
                                            spec.seed, spec.edge_cutoff)
    write_csv(outdir / f"{spec.label}_smatrix_tv.csv",
              ["N_src", "m_src", "interior", "tv"],
              ([int(N), int(m), int(flag), tv] for N, m, flag, tv
               in zip(rep["channels"], rep["m_src"], rep["interior"], rep["tv"])))
    _write_matrix_csv(outdir / f"{spec.label}_S2.csv", rep["S2"], rep["channels"])
    _write_matrix_csv(outdir / f"{spec.label}_Pcl.csv", rep["Pcl"], rep["channels"])
    _write_summary(outdir, spec.label, "smatrix-check", spec,
                   {"samples_per_ring": spec.samples,
                    "edge_cutoff": spec.edge_cutoff,
                    "max_interior_tv": rep["max_interior_tv"]})
    return f"smatrix-check: max interior TV = {rep['max_interior_tv']:.4f}"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kicktop",
        description="Two-particle kicked-top quantum/classical co-simulator")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("sos", "classical", "quantum", "compare", "sweep", "smatrix-check"):
        p = sub.add_parser(name)
        p.add_argument("--config", required=True, help="configuration file")
        p.add_argument("--kicks", type=int, help="override run.kicks")
        p.add_argument("--seed", type=int, help="override run.seed")
        p.add_argument("--samples", type=int, help="override classical.samples")
        p.add_argument("--outdir", help="override run.outdir")
        p.add_argument("--label", help="override run.label")
        if name == "quantum":
            p.add_argument("--dump-smatrix", action="store_true",
                           help="also dump S as (N, N', re, im) CSV")
    return parser


def _apply_overrides(spec: RunSpec, args) -> RunSpec:
    from dataclasses import replace
    updates = {}
    for attr in ("kicks", "seed", "samples", "outdir", "label"):
        value = getattr(args, attr, None)
        if value is not None:
            updates[attr] = value
    if not updates:
        return spec
    spec = replace(spec, **updates)
    from .config import _validate_spec
    _validate_spec(spec)
    return spec


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        try:
            text = Path(args.config).read_text()
        except OSError as exc:
            raise ConfigError(f"cannot read config file {args.config!r}: {exc}")
        spec = _apply_overrides(parse_config(text), args)
    except ConfigError as exc:
        print(f"kicktop: config error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.command == "sos":
            summary = _cmd_sos(spec)
        elif args.command == "classical":
            summary = _cmd_classical(spec)
        elif args.command == "quantum":
            summary = _cmd_quantum(spec, dump_smatrix=args.dump_smatrix)
        elif args.command == "compare":
            summary = _cmd_compare(spec)
        elif args.command == "sweep":
            summary = _cmd_sweep(spec)
        else:
            summary = _cmd_smatrix_check(spec)
    except (IncompatibleScaleError, ChannelRangeError) as exc:
        print(f"kicktop: config error: {exc}", file=sys.stderr)
        return 2
    except (NumericalError, np.linalg.LinAlgError, FloatingPointError) as exc:
        print(f"kicktop: numerical failure: {exc}", file=sys.stderr)
        return 3
    print(summary)
    return 0


if __name__ == "__main__":
    sys.exit(main())
