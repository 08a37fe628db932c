"""Adiabatic excitation transfer from the atom to both chain ends.

Sweeps theta(t) = Omega * t from 0 to pi. In the trivial phase the atom
keeps its excitation; past the phase boundary the zero-energy dark
state carries it into the far edge sites of both chains, with the final
split set by (g2/g1)^2. Writes population-trajectory SVGs next to this
script.

Run:  python demos/adiabatic_transfer.py
"""

from pathlib import Path

import numpy as np

from sshpassage import (BasisIndex, ChainParams, CouplingScenario,
                        SweepSchedule, propagate, transfer_end_sites)
from sshpassage.output import Column, ResultTable, write_line_svg

HERE = Path(__file__).resolve().parent
params = ChainParams(4, 0.0)
schedule = SweepSchedule(1e-4)
basis = BasisIndex(4)
print(f"sweep: Omega = 1e-4 J, t_f = {schedule.t_final:.0f}/J")

for tag, (g1, g2) in (("equal", (0.01, 0.01)), ("2to1", (0.01, 0.02))):
    scenario = CouplingScenario("A", 1, "C", 1, g1=g1, g2=g2)
    traj = propagate(params, scenario, schedule, dt=1.0, sample_every=500)
    end1, end2 = transfer_end_sites(scenario, 4)
    pops = traj.populations
    print(f"\ng1 = {g1}, g2 = {g2}:")
    print(f"  final atom population = {pops[-1, basis.atom]:.2e}")
    print(f"  final |B4|^2 = {pops[-1, end1]:.4f}, "
          f"|D4|^2 = {pops[-1, end2]:.4f} "
          f"(expected ratio (g2/g1)^2 = {(g2 / g1) ** 2:.1f})")

    rows = [(t, pops[k, basis.atom], pops[k, end1], pops[k, end2])
            for k, t in enumerate(traj.times)]
    table = ResultTable(
        f"transfer-{tag}",
        [Column("t", "1/J", "coordinate"), Column("pop_atom"),
         Column("pop_B4"), Column("pop_D4")], rows)
    out = HERE / f"transfer_{tag}.svg"
    write_line_svg(table, "t", ["pop_atom", "pop_B4", "pop_D4"], out,
                   title=f"adiabatic transfer, g2/g1 = {g2 / g1:g}")
    print(f"  wrote {out}")
