"""Plain-text run configuration: `key = value` lines grouped in sections
[system], [quantum], [classical], [run], with `#` comments.

Every default is made explicit when a resolved configuration is emitted,
and parse(emit(spec)) is a fixed point.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigError
from .params import SystemParams
from .quantum import OverlapModel


def _parse_scales(text: str):
    return tuple(float(t) for t in text.split(",") if t.strip())


def _parse_snapshots(text: str):
    return tuple(int(t) for t in text.split(",") if t.strip())


# section -> key -> (converter, default); _REQUIRED means the key must be given
_REQUIRED = object()

_SCHEMA = {
    "system": {
        "k": (float, _REQUIRED),
        "J": (int, _REQUIRED),
        "T": (int, _REQUIRED),
        "N0": (int, _REQUIRED),
        "I": (float, _REQUIRED),
        "tau_eps": (float, _REQUIRED),
        "hbar_eff": (float, None),
    },
    "quantum": {
        "overlap_mode": (str, "orthogonal"),
        "sigma_eps": (float, 1.0),
    },
    "classical": {
        "samples": (int, 100_000),
        "energy_jitter": (float, 0.0),
    },
    "run": {
        "kicks": (int, 25),
        "seed": (int, 0),
        "outdir": (str, "runs"),
        "scales": (_parse_scales, (1.0,)),
        "edge_cutoff": (float, 0.8),
        "label": (str, "run"),
        "sos_seeds": (int, 40),
        "snapshots": (_parse_snapshots, ()),
        "snap_points": (int, 2000),
    },
}


@dataclass(frozen=True)
class RunSpec:
    """Fully-resolved run specification binding all modules."""

    params: SystemParams
    overlap: OverlapModel
    samples: int
    energy_jitter: float
    kicks: int
    seed: int
    outdir: str
    scales: tuple
    edge_cutoff: float
    label: str
    sos_seeds: int
    snapshots: tuple = ()
    snap_points: int = 2000


def parse_config(text: str) -> RunSpec:
    """Parse and validate a configuration; raises ConfigError with the
    offending line number on any malformed input."""
    values: dict[tuple[str, str], object] = {}
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip()
            if section not in _SCHEMA:
                raise ConfigError(f"unknown section [{section}]", line=lineno)
            continue
        if section is None:
            raise ConfigError(f"key outside any section: {line!r}", line=lineno)
        parts = line.split("=")
        if len(parts) != 2:
            raise ConfigError(f"malformed line {line!r} (expected key = value)",
                              line=lineno)
        key, value = parts[0].strip(), parts[1].strip()
        if key not in _SCHEMA[section]:
            raise ConfigError(f"unknown key {key!r} in section [{section}]",
                              line=lineno)
        if (section, key) in values:
            raise ConfigError(f"duplicate key {key!r} in section [{section}]",
                              line=lineno)
        if not value:
            raise ConfigError(f"empty value for key {key!r}", line=lineno)
        converter = _SCHEMA[section][key][0]
        try:
            values[(section, key)] = converter(value)
        except ValueError:
            raise ConfigError(
                f"cannot convert {value!r} for key {key!r} ({converter.__name__})",
                line=lineno)
    return _build_spec(values)


def _get(values, section, key):
    conv, default = _SCHEMA[section][key]
    if (section, key) in values:
        return values[(section, key)]
    if default is _REQUIRED:
        raise ConfigError(f"missing required key {key!r} in section [{section}]")
    return default


def _build_spec(values) -> RunSpec:
    try:
        params = SystemParams(
            k=_get(values, "system", "k"),
            J=_get(values, "system", "J"),
            T=_get(values, "system", "T"),
            N0=_get(values, "system", "N0"),
            I=_get(values, "system", "I"),
            tau_eps=_get(values, "system", "tau_eps"),
            hbar_eff=_get(values, "system", "hbar_eff"),
        )
        overlap = OverlapModel(
            mode=_get(values, "quantum", "overlap_mode"),
            sigma_eps=_get(values, "quantum", "sigma_eps"),
        )
    except ValueError as exc:
        raise ConfigError(str(exc))
    spec = RunSpec(
        params=params,
        overlap=overlap,
        samples=_get(values, "classical", "samples"),
        energy_jitter=_get(values, "classical", "energy_jitter"),
        kicks=_get(values, "run", "kicks"),
        seed=_get(values, "run", "seed"),
        outdir=_get(values, "run", "outdir"),
        scales=_get(values, "run", "scales"),
        edge_cutoff=_get(values, "run", "edge_cutoff"),
        label=_get(values, "run", "label"),
        sos_seeds=_get(values, "run", "sos_seeds"),
        snapshots=_get(values, "run", "snapshots"),
        snap_points=_get(values, "run", "snap_points"),
    )
    _validate_spec(spec)
    return spec


def _validate_spec(spec: RunSpec):
    if spec.samples < 1:
        raise ConfigError(f"classical samples must be >= 1, got {spec.samples}")
    if spec.energy_jitter < 0:
        raise ConfigError(f"energy_jitter must be >= 0, got {spec.energy_jitter}")
    if spec.kicks < 1:
        raise ConfigError(f"kicks must be >= 1, got {spec.kicks}")
    if not 0 < spec.edge_cutoff <= 1:
        raise ConfigError(f"edge_cutoff must be in (0, 1], got {spec.edge_cutoff}")
    if spec.sos_seeds < 1:
        raise ConfigError(f"sos_seeds must be >= 1, got {spec.sos_seeds}")
    if spec.snap_points < 1:
        raise ConfigError(f"snap_points must be >= 1, got {spec.snap_points}")
    if not spec.scales or any(s <= 0 for s in spec.scales):
        raise ConfigError(f"scales must be positive, got {spec.scales}")
    if any(s < 0 for s in spec.snapshots):
        raise ConfigError(f"snapshots must be >= 0, got {spec.snapshots}")


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.17g}"
    if isinstance(value, tuple):
        return ",".join(_fmt(v) for v in value)
    return str(value)


def emit_resolved(spec: RunSpec) -> str:
    """Emit the configuration with every default made explicit."""
    p = spec.params
    lines = [
        "[system]",
        f"k = {_fmt(p.k)}",
        f"J = {p.J}",
        f"T = {p.T}",
        f"N0 = {p.N0}",
        f"I = {_fmt(p.I)}",
        f"tau_eps = {_fmt(p.tau_eps)}",
        f"hbar_eff = {_fmt(p.hbar_eff)}",
        "",
        "[quantum]",
        f"overlap_mode = {spec.overlap.mode}",
        f"sigma_eps = {_fmt(spec.overlap.sigma_eps)}",
        "",
        "[classical]",
        f"samples = {spec.samples}",
        f"energy_jitter = {_fmt(spec.energy_jitter)}",
        "",
        "[run]",
        f"kicks = {spec.kicks}",
        f"seed = {spec.seed}",
        f"outdir = {spec.outdir}",
        f"scales = {_fmt(spec.scales)}",
        f"edge_cutoff = {_fmt(spec.edge_cutoff)}",
        f"label = {spec.label}",
        f"sos_seeds = {spec.sos_seeds}",
        f"snap_points = {spec.snap_points}",
    ]
    if spec.snapshots:
        lines.append(f"snapshots = {_fmt(spec.snapshots)}")
    return "\n".join(lines) + "\n"
