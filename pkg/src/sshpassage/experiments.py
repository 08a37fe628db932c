"""Named experiments producing result tables, one per study in the library.

Each experiment is a pure function of its resolved configuration and
returns ResultTable objects plus a plot hint consumed by the SVG
writer. Configuration is a two-level mapping (section -> key -> value);
see DEFAULTS for the full schema. Angles in config are expressed in
units of pi (keys ending in _pi).
"""

from __future__ import annotations

import configparser
from pathlib import Path

import numpy as np

from . import __version__
from .disorder import DisorderSpec, sample_realization
from .dynamics import (SweepSchedule, end_site_target, fidelity, propagate,
                       transfer_end_sites)
from .model import (BasisIndex, ChainParams, CouplingScenario, Phase,
                    atom_ket, build_hamiltonian, hopping_amplitudes,
                    phase_classification)
from .output import Column, ResultTable
from .spectral import (dark_state, eigendecompose, five_state_model,
                       hybridization_energy, mixing_angles, zero_mode)

DEFAULTS = {
    "system": {"n_cells": 4, "theta_pi": 0.7, "hopping": 1.0},
    "scenario": {"chain1_sublattice": "A", "cell_p": 1,
                 "chain2_sublattice": "C", "cell_q": 1,
                 "g1": 0.01, "g2": 0.01, "delta": 0.0},
    "schedule": {"omega": 1e-4, "theta_start_pi": 0.0, "theta_end_pi": 1.0,
                 "duration": 0.0, "dt": 0.5, "max_samples": 2000},
    "grids": {"theta_pi": "lin:0:1:200",
              "delta": "lin:-0.1:0.1:81",
              "delta_wide": "lin:-0.4:0.4:81",
              "omega": "log:1e-5:1e-2:25",
              "n_cells": "2,4,6,8,10,12",
              "pq": "1:1"},
    "disorder": {"xi_onsite": 0.0, "xi_bond": 0.0,
                 "n_realizations": 20, "master_seed": 12345},
    "output": {"formats": "csv,svg", "directory": ""},
    "experiment": {"branch": "atom"},
}


class ConfigError(ValueError):
    """Invalid configuration; the message names the offending field."""


def _coerce(section: str, key: str, raw: str):
    try:
        default = DEFAULTS[section][key]
    except KeyError:
        raise ConfigError(f"unknown config field [{section}] {key}") from None
    kind = type(default)
    try:
        if kind is bool:
            return raw.strip().lower() in ("1", "true", "yes", "on")
        return kind(raw)
    except (TypeError, ValueError):
        raise ConfigError(
            f"cannot parse [{section}] {key} = {raw!r} as {kind.__name__}"
        ) from None


def load_config(path: str | Path | None = None,
                overrides: list[str] | None = None) -> dict:
    """Resolve defaults <- config file <- --set overrides (last wins)."""
    cfg = {s: dict(kv) for s, kv in DEFAULTS.items()}
    if path is not None:
        parser = configparser.ConfigParser()
        read = parser.read(str(path))
        if not read:
            raise ConfigError(f"config file not found: {path}")
        for section in parser.sections():
            if section not in cfg:
                raise ConfigError(f"unknown config section [{section}]")
            for key, raw in parser.items(section):
                cfg[section][key] = _coerce(section, key, raw)
    for item in overrides or []:
        if "=" not in item or "." not in item.split("=", 1)[0]:
            raise ConfigError(
                f"override {item!r} must look like section.key=value"
            )
        dotted, raw = item.split("=", 1)
        section, key = dotted.split(".", 1)
        if section not in cfg:
            raise ConfigError(f"unknown config section [{section}]")
        cfg[section][key] = _coerce(section, key, raw)
    return cfg


def parse_grid(text: str) -> np.ndarray:
    """Parse 'lin:a:b:n', 'log:a:b:n', or a comma-separated value list."""
    text = text.strip()
    if text.startswith(("lin:", "log:")):
        kind, a, b, n = text.split(":")
        a, b, n = float(a), float(b), int(n)
        if n < 1 or b <= a:
            raise ConfigError(f"grid {text!r} must be increasing, non-empty")
        if kind == "log":
            if a <= 0:
                raise ConfigError(f"log grid {text!r} needs positive bounds")
            return np.geomspace(a, b, n)
        return np.linspace(a, b, n)
    try:
        values = np.array([float(v) for v in text.split(",") if v.strip()])
    except ValueError:
        raise ConfigError(f"cannot parse grid {text!r}") from None
    if values.size == 0 or np.any(np.diff(values) <= 0):
        raise ConfigError(f"grid {text!r} must be strictly increasing")
    return values


def _parse_pq(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(","):
        if chunk.strip():
            p, q = chunk.split(":")
            pairs.append((int(p), int(q)))
    if not pairs:
        raise ConfigError("pq list is empty")
    return pairs


def _params(cfg: dict, theta: float | None = None,
            n_cells: int | None = None) -> ChainParams:
    sy = cfg["system"]
    return ChainParams(
        n_cells=n_cells if n_cells is not None else sy["n_cells"],
        theta=theta if theta is not None else sy["theta_pi"] * np.pi,
        hopping=sy["hopping"])


def _scenario(cfg: dict, delta: float | None = None,
              p: int | None = None, q: int | None = None) -> CouplingScenario:
    sc = cfg["scenario"]
    return CouplingScenario(
        chain1_sublattice=sc["chain1_sublattice"],
        cell_p=p if p is not None else sc["cell_p"],
        chain2_sublattice=sc["chain2_sublattice"],
        cell_q=q if q is not None else sc["cell_q"],
        g1=sc["g1"], g2=sc["g2"],
        delta=delta if delta is not None else sc["delta"])


def _schedule(cfg: dict) -> SweepSchedule:
    sd = cfg["schedule"]
    start, end = sd["theta_start_pi"] * np.pi, sd["theta_end_pi"] * np.pi
    if start == end:
        return SweepSchedule.hold(start, sd["duration"])
    return SweepSchedule(sd["omega"], start, end)


def _meta(cfg: dict, **extra) -> dict:
    return {"config": cfg, "version": __version__, **extra}


def _topological_thetas(cfg: dict) -> np.ndarray:
    thetas = parse_grid(cfg["grids"]["theta_pi"]) * np.pi
    keep = []
    for theta in thetas:
        j1, j2 = hopping_amplitudes(_params(cfg, theta=theta))
        if phase_classification(j1, j2) is Phase.TOPOLOGICAL:
            keep.append(theta)
    if not keep:
        raise ConfigError("theta grid contains no topological points")
    return np.array(keep)


def _site_columns(n_cells: int) -> list[Column]:
    return [Column(f"prob_{label}") for label in BasisIndex(n_cells).labels()]


# --- experiments ----------------------------------------------------------

def spectrum_vs_delta(cfg: dict):
    """In-gap part of the exact spectrum against the atom detuning."""
    deltas = parse_grid(cfg["grids"]["delta"])
    rows = []
    for delta in deltas:
        h = build_hamiltonian(_params(cfg), _scenario(cfg, delta=delta))
        evals = np.linalg.eigvalsh(h)
        ingap = np.sort(evals[np.argsort(np.abs(evals), kind="stable")[:5]])
        rows.append((delta, *ingap))
    cols = [Column("delta", "J", "coordinate")] + \
           [Column(f"e{k}", "J") for k in range(1, 6)]
    table = ResultTable("spectrum-vs-delta", cols, rows, _meta(cfg))
    return [(table, ("line", "delta", [f"e{k}" for k in range(1, 6)], None))]


def hybrid_mode_map(cfg: dict):
    """Site distribution of one hybridized eigenstate tracked across delta.

    The branch is anchored at the largest detuning on the grid to the
    eigenvector overlapping the atom ket most, then followed by
    continuity toward smaller detuning.
    """
    deltas = parse_grid(cfg["grids"]["delta"])
    params = _params(cfg)
    n = params.n_cells
    reference = atom_ket(n).real
    rows = []
    for delta in deltas[::-1]:
        h = build_hamiltonian(params, _scenario(cfg, delta=delta))
        system = eigendecompose(h)
        k = int(np.argmax(np.abs(system.eigenvectors.T @ reference)))
        vec = system.eigenvectors[:, k]
        if vec @ reference < 0:
            vec = -vec
        reference = vec
        rows.append((delta, system.eigenvalues[k], *(vec ** 2)))
    rows.reverse()
    cols = [Column("delta", "J", "coordinate"), Column("energy", "J")] + \
           _site_columns(n)
    table = ResultTable("hybrid-mode-map", cols, rows, _meta(cfg))
    probs = [c.name for c in _site_columns(n)]
    return [(table, ("heatmap", "delta", probs, None))]


def mixing_angle_sweep(cfg: dict):
    """Dark-state mixing angles across theta for each contact-cell pair."""
    thetas = _topological_thetas(cfg)
    out = []
    for p, q in _parse_pq(cfg["grids"]["pq"]):
        rows = []
        for theta in thetas:
            model = five_state_model(_params(cfg, theta=theta),
                                     _scenario(cfg, p=p, q=q))
            chi, phi = mixing_angles(model.hybridization,
                                     model.coupling_1, model.coupling_2)
            rows.append((theta / np.pi, chi, phi))
        cols = [Column("theta_pi", "pi", "coordinate"),
                Column("chi", "rad"), Column("phi", "rad")]
        table = ResultTable(f"mixing-angle-sweep-p{p}q{q}", cols, rows,
                            _meta(cfg, cell_p=p, cell_q=q))
        out.append((table, ("line", "theta_pi", ["chi", "phi"], None)))
    return out


def dark_state_populations(cfg: dict):
    """Dark-state weights on the atom and the two destination edges."""
    thetas = _topological_thetas(cfg)
    rows = []
    for theta in thetas:
        model = five_state_model(_params(cfg, theta=theta), _scenario(cfg))
        chi, phi = mixing_angles(model.hybridization,
                                 model.coupling_1, model.coupling_2)
        rows.append((theta / np.pi,
                     np.cos(chi) ** 2,
                     (np.sin(chi) * np.cos(phi)) ** 2,
                     (np.sin(chi) * np.sin(phi)) ** 2))
    cols = [Column("theta_pi", "pi", "coordinate"),
            Column("pop_atom"), Column("pop_chain1_far"),
            Column("pop_chain2_far")]
    table = ResultTable("dark-state-populations", cols, rows, _meta(cfg))
    ys = ["pop_atom", "pop_chain1_far", "pop_chain2_far"]
    return [(table, ("line", "theta_pi", ys, None))]


def gap_map(cfg: dict):
    """|G| and chi over the (N, theta) plane."""
    thetas = _topological_thetas(cfg)
    n_values = [int(v) for v in parse_grid(cfg["grids"]["n_cells"])]
    rows = []
    for n in n_values:
        for theta in thetas:
            params = _params(cfg, theta=theta, n_cells=n)
            model = five_state_model(params, _scenario(cfg))
            chi, _ = mixing_angles(model.hybridization,
                                   model.coupling_1, model.coupling_2)
            rows.append((n, theta / np.pi, abs(model.hybridization), chi))
    cols = [Column("n_cells", "", "coordinate"),
            Column("theta_pi", "pi", "coordinate"),
            Column("abs_g", "J"), Column("chi", "rad")]
    table = ResultTable("gap-map", cols, rows, _meta(cfg))
    return [(table, ("line", "theta_pi", ["abs_g", "chi"], "n_cells"))]


def _tracked_zero_rows(cfg: dict, disorder=None):
    thetas = parse_grid(cfg["grids"]["theta_pi"]) * np.pi
    params = _params(cfg)
    scenario = _scenario(cfg)
    reference = atom_ket(params.n_cells).real
    rows = []
    for theta in thetas:
        h = build_hamiltonian(params.with_theta(theta), scenario, disorder)
        energy, vec = zero_mode(h, reference)
        reference = vec
        rows.append((theta / np.pi, energy, *(vec ** 2)))
    return rows


def zero_state_map(cfg: dict):
    """Site probabilities of the tracked zero-energy state across theta."""
    params = _params(cfg)
    rows = _tracked_zero_rows(cfg)
    cols = [Column("theta_pi", "pi", "coordinate"), Column("energy", "J")] + \
           _site_columns(params.n_cells)
    table = ResultTable("zero-state-map", cols, rows, _meta(cfg))
    probs = [c.name for c in _site_columns(params.n_cells)]
    return [(table, ("heatmap", "theta_pi", probs, None))]


def adiabatic_evolve(cfg: dict):
    """Population trajectories of the atom and the four chain-end sites."""
    params = _params(cfg)
    scenario = _scenario(cfg)
    schedule = _schedule(cfg)
    sd = cfg["schedule"]
    n_steps = max(1, int(np.ceil(schedule.t_final / sd["dt"])))
    sample_every = max(1, n_steps // sd["max_samples"])
    traj = propagate(params, scenario, schedule, dt=sd["dt"],
                     sample_every=sample_every)
    basis = BasisIndex(params.n_cells)
    n = params.n_cells
    watch = [("pop_atom", basis.atom), ("pop_A1", basis.a(1)),
             (f"pop_B{n}", basis.b(n)), ("pop_C1", basis.c(1)),
             (f"pop_D{n}", basis.d(n))]
    pops = traj.populations
    rows = [(t, th / np.pi, *(pops[k, idx] for _, idx in watch),
             float(np.sum(pops[k])))
            for k, (t, th) in enumerate(zip(traj.times, traj.thetas))]
    cols = [Column("t", "1/J", "coordinate"),
            Column("theta_pi", "pi", "coordinate")] + \
           [Column(name) for name, _ in watch] + [Column("norm_sq")]
    table = ResultTable("adiabatic-evolve", cols, rows, _meta(cfg))
    return [(table, ("line", "t", [name for name, _ in watch], None))]


def _sweep_fidelity(cfg: dict, scenario: CouplingScenario,
                    schedule: SweepSchedule) -> float:
    params = _params(cfg)
    traj = propagate(params, scenario, schedule, dt=cfg["schedule"]["dt"],
                     sample_every=10 ** 9)
    final = traj.final_state / np.linalg.norm(traj.final_state)
    return fidelity(final, end_site_target(scenario, params.n_cells))


def fidelity_vs_delta(cfg: dict):
    """Transfer fidelity at t_f = pi/Omega against the atom detuning."""
    deltas = parse_grid(cfg["grids"]["delta_wide"])
    schedule = _schedule(cfg)
    rows = [(delta, _sweep_fidelity(cfg, _scenario(cfg, delta=delta),
                                    schedule))
            for delta in deltas]
    cols = [Column("delta", "J", "coordinate"), Column("fidelity")]
    table = ResultTable("fidelity-vs-delta", cols, rows, _meta(cfg))
    return [(table, ("line", "delta", ["fidelity"], None))]


def fidelity_vs_omega(cfg: dict):
    """Transfer fidelity against the sweep rate."""
    omegas = parse_grid(cfg["grids"]["omega"])
    sd = cfg["schedule"]
    rows = []
    for omega in omegas:
        schedule = SweepSchedule(omega, sd["theta_start_pi"] * np.pi,
                                 sd["theta_end_pi"] * np.pi)
        rows.append((omega, _sweep_fidelity(cfg, _scenario(cfg), schedule)))
    cols = [Column("omega", "J", "coordinate"), Column("fidelity")]
    table = ResultTable("fidelity-vs-omega", cols, rows, _meta(cfg))
    return [(table, ("line", "omega", ["fidelity"], None))]


def disorder_map(cfg: dict):
    """Zero-state map averaged over sampled disorder realizations."""
    dz = cfg["disorder"]
    spec = DisorderSpec(dz["xi_onsite"], dz["xi_bond"],
                        dz["n_realizations"], dz["master_seed"])
    params = _params(cfg)
    accum = None
    for index in range(spec.n_realizations):
        realization = sample_realization(spec, index, params.n_cells)
        rows = np.array(_tracked_zero_rows(cfg, realization))
        accum = rows if accum is None else accum + rows
    mean = accum / spec.n_realizations
    cols = [Column("theta_pi", "pi", "coordinate"),
            Column("mean_energy", "J")] + _site_columns(params.n_cells)
    table = ResultTable("disorder-map", cols, [tuple(r) for r in mean],
                        _meta(cfg, master_seed=spec.master_seed,
                              n_realizations=spec.n_realizations))
    probs = [c.name for c in _site_columns(params.n_cells)]
    return [(table, ("heatmap", "theta_pi", probs, None))]


EXPERIMENTS = {
    "spectrum-vs-delta": spectrum_vs_delta,
    "hybrid-mode-map": hybrid_mode_map,
    "mixing-angle-sweep": mixing_angle_sweep,
    "dark-state-populations": dark_state_populations,
    "gap-map": gap_map,
    "zero-state-map": zero_state_map,
    "adiabatic-evolve": adiabatic_evolve,
    "fidelity-vs-delta": fidelity_vs_delta,
    "fidelity-vs-omega": fidelity_vs_omega,
    "disorder-map": disorder_map,
}

EXPERIMENT_NOTES = {
    "spectrum-vs-delta": "in-gap spectrum against detuning",
    "hybrid-mode-map": "tracked hybridized-state site weights vs detuning",
    "mixing-angle-sweep": "mixing angles chi/phi across the sweep",
    "dark-state-populations": "dark-state weights across the sweep",
    "gap-map": "|G| and chi over the (N, theta) plane",
    "zero-state-map": "tracked zero-state site weights across theta",
    "adiabatic-evolve": "population trajectories under the sweep",
    "fidelity-vs-delta": "end-state fidelity against detuning",
    "fidelity-vs-omega": "end-state fidelity against sweep rate",
    "disorder-map": "zero-state map averaged over disorder",
}


def run_experiment(name: str, cfg: dict):
    """Dispatch one named experiment; returns [(table, plot_hint), ...]."""
    if name not in EXPERIMENTS:
        known = ", ".join(sorted(EXPERIMENTS))
        raise ConfigError(f"unknown experiment {name!r}; known: {known}")
    return EXPERIMENTS[name](cfg)
