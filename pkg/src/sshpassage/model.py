"""Single-excitation model: parameters, basis layout, Hamiltonian assembly.

Two finite SSH chains (sublattices A/B and C/D, N cells each) plus one
two-level atom coupled to one site of each chain. Energies are measured
in units of the base hopping J, with the sublattice frequency as the
zero of energy. The single-excitation Hamiltonian is a dense real
symmetric (4N+1)x(4N+1) matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np


class Sublattice(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


class Phase(str, Enum):
    TRIVIAL = "trivial"
    CRITICAL = "critical"
    TOPOLOGICAL = "topological"


@dataclass(frozen=True)
class ChainParams:
    """Geometry and hoppings shared by both chains.

    The alternating hoppings are J1 = J(1+cos theta) within a cell and
    J2 = J(1-cos theta) between cells.
    """

    n_cells: int
    theta: float
    hopping: float = 1.0
    reference_frequency: float = 0.0  # zero of energy; kept for bookkeeping

    def __post_init__(self):
        if self.n_cells < 1:
            raise ValueError(f"n_cells must be >= 1, got {self.n_cells}")
        if self.hopping <= 0:
            raise ValueError(f"hopping must be positive, got {self.hopping}")
        if not 0.0 <= self.theta <= 2.0 * np.pi:
            raise ValueError(
                f"theta must lie in [0, 2*pi], got {self.theta!r}"
            )

    def with_theta(self, theta: float) -> "ChainParams":
        return ChainParams(self.n_cells, theta, self.hopping,
                           self.reference_frequency)


def hopping_amplitudes(params: ChainParams) -> tuple[float, float]:
    """Return (J1, J2), the intra- and inter-cell hopping strengths."""
    j = params.hopping
    c = np.cos(params.theta)
    return j * (1.0 + c), j * (1.0 - c)


def phase_classification(j1: float, j2: float,
                         tol: float = 1e-12) -> Phase:
    """Classify the chain phase from its two hoppings."""
    if j1 < 0 or j2 < 0:
        raise ValueError("hoppings must be non-negative")
    if abs(j1 - j2) <= tol * max(j1, j2, 1.0):
        return Phase.CRITICAL
    return Phase.TRIVIAL if j1 > j2 else Phase.TOPOLOGICAL


@dataclass(frozen=True)
class CouplingScenario:
    """Where and how strongly the atom touches each chain.

    chain1_sublattice is A or B (cell index cell_p); chain2_sublattice
    is C or D (cell index cell_q). delta is the atom detuning from the
    sublattice frequency.
    """

    chain1_sublattice: Sublattice
    cell_p: int
    chain2_sublattice: Sublattice
    cell_q: int
    g1: float
    g2: float
    delta: float = 0.0

    def __post_init__(self):
        s1 = Sublattice(self.chain1_sublattice)
        s2 = Sublattice(self.chain2_sublattice)
        object.__setattr__(self, "chain1_sublattice", s1)
        object.__setattr__(self, "chain2_sublattice", s2)
        if s1 not in (Sublattice.A, Sublattice.B):
            raise ValueError("chain1_sublattice must be A or B")
        if s2 not in (Sublattice.C, Sublattice.D):
            raise ValueError("chain2_sublattice must be C or D")
        if self.cell_p < 1 or self.cell_q < 1:
            raise ValueError("cell indices are 1-based and must be >= 1")
        if self.g1 < 0 or self.g2 < 0:
            raise ValueError("coupling strengths must be non-negative")

    def validate_cells(self, n_cells: int) -> None:
        if self.cell_p > n_cells or self.cell_q > n_cells:
            raise ValueError(
                f"contact cells (p={self.cell_p}, q={self.cell_q}) exceed "
                f"n_cells={n_cells}"
            )


class BasisIndex:
    """Site ordering [A_1, B_1, ..., A_N, B_N, C_1, D_1, ..., C_N, D_N, atom].

    Cell indices are 1-based, matrix indices 0-based; the atom is last.
    """

    def __init__(self, n_cells: int):
        if n_cells < 1:
            raise ValueError("n_cells must be >= 1")
        self.n_cells = n_cells
        self.dim = 4 * n_cells + 1
        self.atom = 4 * n_cells

    def a(self, i: int) -> int:
        self._check_cell(i)
        return 2 * (i - 1)

    def b(self, i: int) -> int:
        self._check_cell(i)
        return 2 * (i - 1) + 1

    def c(self, i: int) -> int:
        self._check_cell(i)
        return 2 * self.n_cells + 2 * (i - 1)

    def d(self, i: int) -> int:
        self._check_cell(i)
        return 2 * self.n_cells + 2 * (i - 1) + 1

    def site(self, sublattice: Sublattice, i: int) -> int:
        return {
            Sublattice.A: self.a, Sublattice.B: self.b,
            Sublattice.C: self.c, Sublattice.D: self.d,
        }[Sublattice(sublattice)](i)

    def contact_sites(self, scenario: CouplingScenario) -> tuple[int, int]:
        """Indices of the two sites the atom couples to."""
        scenario.validate_cells(self.n_cells)
        return (self.site(scenario.chain1_sublattice, scenario.cell_p),
                self.site(scenario.chain2_sublattice, scenario.cell_q))

    def labels(self) -> list[str]:
        n = self.n_cells
        out = []
        for sub1, sub2 in (("A", "B"), ("C", "D")):
            for i in range(1, n + 1):
                out += [f"{sub1}{i}", f"{sub2}{i}"]
        out.append("atom")
        return out

    def _check_cell(self, i: int) -> None:
        if not 1 <= i <= self.n_cells:
            raise ValueError(f"cell index {i} outside [1, {self.n_cells}]")


@dataclass(frozen=True)
class DisorderRealization:
    """Static offsets: one per lattice site and one per hopping bond.

    onsite_offsets has 4N entries in basis-site order. bond_offsets has
    2(2N-1) entries: chain-1 bonds along the chain (site j to j+1,
    alternating intra/inter cell) followed by chain-2 bonds.
    """

    onsite_offsets: np.ndarray
    bond_offsets: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "onsite_offsets",
                           np.asarray(self.onsite_offsets, dtype=float))
        object.__setattr__(self, "bond_offsets",
                           np.asarray(self.bond_offsets, dtype=float))
        if not (np.all(np.isfinite(self.onsite_offsets))
                and np.all(np.isfinite(self.bond_offsets))):
            raise ValueError("disorder offsets must be finite")

    @classmethod
    def clean(cls, n_cells: int) -> "DisorderRealization":
        return cls(np.zeros(4 * n_cells), np.zeros(2 * (2 * n_cells - 1)))

    def validate(self, n_cells: int) -> None:
        if self.onsite_offsets.shape != (4 * n_cells,):
            raise ValueError(
                f"onsite_offsets must have shape ({4 * n_cells},), got "
                f"{self.onsite_offsets.shape}"
            )
        if self.bond_offsets.shape != (2 * (2 * n_cells - 1),):
            raise ValueError(
                f"bond_offsets must have shape ({2 * (2 * n_cells - 1)},), "
                f"got {self.bond_offsets.shape}"
            )


def build_hamiltonian(params: ChainParams,
                      scenario: CouplingScenario,
                      disorder: DisorderRealization | None = None) -> np.ndarray:
    """Assemble the full (4N+1)-dimensional single-excitation Hamiltonian.

    Chain diagonals carry only the disorder offsets (the sublattice
    frequency is the energy zero); the atom diagonal carries the
    detuning. Every entry is written symmetrically, never symmetrized
    after the fact.
    """
    n = params.n_cells
    basis = BasisIndex(n)
    scenario.validate_cells(n)
    if disorder is None:
        disorder = DisorderRealization.clean(n)
    disorder.validate(n)

    j1, j2 = hopping_amplitudes(params)
    nb = 2 * n - 1  # bonds per chain
    amps = np.where(np.arange(nb) % 2 == 0, j1, j2)

    h = np.zeros((basis.dim, basis.dim))
    for chain, offset in enumerate((0, 2 * n)):
        bonds = amps + disorder.bond_offsets[chain * nb:(chain + 1) * nb]
        for jdx in range(nb):
            h[offset + jdx, offset + jdx + 1] = bonds[jdx]
            h[offset + jdx + 1, offset + jdx] = bonds[jdx]
    h[np.arange(4 * n), np.arange(4 * n)] = disorder.onsite_offsets

    s1, s2 = basis.contact_sites(scenario)
    h[basis.atom, s1] = h[s1, basis.atom] = scenario.g1
    h[basis.atom, s2] = h[s2, basis.atom] = scenario.g2
    h[basis.atom, basis.atom] = scenario.delta
    return h


def atom_ket(n_cells: int) -> np.ndarray:
    """Atom excited, both chains in vacuum."""
    psi = np.zeros(4 * n_cells + 1, dtype=complex)
    psi[4 * n_cells] = 1.0
    return psi
