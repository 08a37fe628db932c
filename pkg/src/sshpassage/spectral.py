"""Exact diagonalization and the closed-form edge-state reduction.

In the topological phase (J1 < J2) each finite chain hosts a pair of
in-gap states built from exponentially localized left/right edge
wavefunctions. The atom plus the four edge states form a five-state
model whose zero-energy eigenvector is the dark state used for the
adiabatic transfer.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import (BasisIndex, ChainParams, CouplingScenario, Phase,
                    Sublattice, build_hamiltonian, hopping_amplitudes,
                    phase_classification)


@dataclass(frozen=True)
class EigenSystem:
    """Ascending eigenvalues with orthonormal, sign-fixed eigenvectors."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # column k pairs with eigenvalues[k]

    @property
    def dim(self) -> int:
        return self.eigenvalues.size


def _fix_sign(vec: np.ndarray) -> np.ndarray:
    # deterministic gauge: largest-|component| positive, first on ties
    idx = int(np.argmax(np.abs(vec)))
    return -vec if vec[idx] < 0 else vec


def eigendecompose(h: np.ndarray) -> EigenSystem:
    """Diagonalize a real symmetric matrix with a deterministic gauge."""
    h = np.asarray(h, dtype=float)
    if not np.all(np.isfinite(h)):
        raise ValueError("Hamiltonian contains non-finite entries")
    evals, evecs = np.linalg.eigh(h)
    for k in range(evals.size):
        evecs[:, k] = _fix_sign(evecs[:, k])
    return EigenSystem(evals, evecs)


@dataclass(frozen=True)
class EdgeStatePair:
    """Analytic left/right edge wavefunctions of one isolated chain.

    Both vectors live on the 2N chain sites in along-chain order; the
    left state occupies the first sublattice only, the right state the
    second. localization_ratio is r = J1/J2.
    """

    left: np.ndarray
    right: np.ndarray
    norm_const: float
    localization_ratio: float


def _require_topological(params: ChainParams) -> tuple[float, float]:
    j1, j2 = hopping_amplitudes(params)
    if phase_classification(j1, j2) is not Phase.TOPOLOGICAL:
        raise ValueError(
            f"edge states require the topological phase (J1 < J2); "
            f"got J1={j1:.6g}, J2={j2:.6g} at theta={params.theta:.6g}"
        )
    return j1, j2


def analytic_edge_states(params: ChainParams) -> EdgeStatePair:
    """Closed-form edge states, amplitudes (-J1/J2)^k up to normalization."""
    j1, j2 = _require_topological(params)
    n = params.n_cells
    r = j1 / j2
    if r == 0.0:
        norm = 1.0
    else:
        norm = np.sqrt((1.0 - r * r) / (1.0 - r ** (2 * n)))
    i = np.arange(1, n + 1)
    left = np.zeros(2 * n)
    right = np.zeros(2 * n)
    left[0::2] = norm * (-r) ** (i - 1)
    right[1::2] = norm * (-r) ** (n - i)
    return EdgeStatePair(left, right, norm, r)


def hybridization_energy(params: ChainParams) -> float:
    """Finite-size coupling G between the left and right edge states.

    G = (-1)^(N+1) * N_L^2 * J1 * (J1/J2)^(N-1); its magnitude is half
    the splitting of the chain's two in-gap levels.
    """
    j1, j2 = _require_topological(params)
    n = params.n_cells
    r = j1 / j2
    norm2 = 1.0 if r == 0.0 else (1.0 - r * r) / (1.0 - r ** (2 * n))
    return (-1.0) ** (n + 1) * norm2 * j1 * r ** (n - 1)


def effective_couplings(params: ChainParams,
                        scenario: CouplingScenario) -> tuple[float, float]:
    """Atom-edge couplings set by the contact sublattice and cell.

    A/C contacts reach the left edge with g * N_L * (-r)^(p-1); B/D
    contacts reach the right edge with g * N_R * (-r)^(N-p).
    """
    edges = analytic_edge_states(params)
    scenario.validate_cells(params.n_cells)
    n, r, norm = params.n_cells, edges.localization_ratio, edges.norm_const

    def one(g: float, cell: int, sub: Sublattice) -> float:
        if sub in (Sublattice.A, Sublattice.C):
            return g * norm * (-r) ** (cell - 1)
        return g * norm * (-r) ** (n - cell)

    return (one(scenario.g1, scenario.cell_p, scenario.chain1_sublattice),
            one(scenario.g2, scenario.cell_q, scenario.chain2_sublattice))


@dataclass(frozen=True)
class FiveStateModel:
    """Atom + four edge states, ordered [atom, contact-1, far-1, contact-2, far-2].

    "contact" is the edge the atom touches on each chain (left for A/C
    contacts, right for B/D); "far" is the opposite edge, where the
    excitation ends up.
    """

    hybridization: float  # edge-edge coupling G
    coupling_1: float     # atom to chain-1 contact edge
    coupling_2: float     # atom to chain-2 contact edge
    matrix: np.ndarray
    basis: tuple[str, ...]

    def eigenvalues_closed_form(self) -> np.ndarray:
        g, g1, g2 = self.hybridization, self.coupling_1, self.coupling_2
        big = np.sqrt(g * g + g1 * g1 + g2 * g2)
        return np.sort(np.array([0.0, g, -g, big, -big]))


def five_state_matrix(hybridization: float, coupling_1: float,
                      coupling_2: float) -> np.ndarray:
    g, g1, g2 = hybridization, coupling_1, coupling_2
    return np.array([
        [0.0, g1, 0.0, g2, 0.0],
        [g1, 0.0, g, 0.0, 0.0],
        [0.0, g, 0.0, 0.0, 0.0],
        [g2, 0.0, 0.0, 0.0, g],
        [0.0, 0.0, 0.0, g, 0.0],
    ])


def five_state_model(params: ChainParams,
                     scenario: CouplingScenario) -> FiveStateModel:
    """Reduce the full system to the atom-plus-edge-states subspace."""
    g = hybridization_energy(params)
    g1, g2 = effective_couplings(params, scenario)
    c1 = "L" if scenario.chain1_sublattice is Sublattice.A else "R"
    c2 = "L" if scenario.chain2_sublattice is Sublattice.C else "R"
    flip = {"L": "R", "R": "L"}
    basis = ("atom",
             f"chain1:{c1}", f"chain1:{flip[c1]}",
             f"chain2:{c2}", f"chain2:{flip[c2]}")
    return FiveStateModel(g, g1, g2, five_state_matrix(g, g1, g2), basis)


def mixing_angles(hybridization: float, coupling_1: float,
                  coupling_2: float) -> tuple[float, float]:
    """Angles (chi, phi) parameterizing the zero-energy dark state.

    tan(chi) = sqrt(G1^2 + G2^2)/|G| with chi in [0, pi/2] (the sign of
    G lives in the five-state model, not the angle, so chi grows
    monotonically from 0 to pi/2 across the sweep for every chain
    length) and tan(phi) = G2/G1 with phi in (-pi, pi], the branch
    chosen so that (cos chi, 0, sin chi cos phi, 0, sin chi sin phi) is
    the exact null vector of the five-state matrix.
    """
    if hybridization == 0.0 and coupling_1 == 0.0 and coupling_2 == 0.0:
        raise ValueError("mixing angles undefined when G, G1, G2 all vanish")
    chi = np.arctan2(np.hypot(coupling_1, coupling_2), abs(hybridization))
    if coupling_1 == 0.0 and coupling_2 == 0.0:
        return float(chi), 0.0
    sign = -1.0 if hybridization > 0 else 1.0
    phi = np.arctan2(sign * coupling_2, sign * coupling_1)
    return float(chi), float(phi)


@dataclass(frozen=True)
class DarkState:
    """Zero-energy eigenstate of the five-state model.

    Weights: cos^2(chi) on the atom and sin^2(chi)cos^2(phi) /
    sin^2(chi)sin^2(phi) on the two far edges; exactly zero on the
    contact edges.
    """

    chi: float
    phi: float
    vector: np.ndarray


def dark_state(chi: float, phi: float) -> DarkState:
    """Build the dark state (cos chi, 0, sin chi cos phi, 0, sin chi sin phi).

    With angles from mixing_angles this is the exact null vector of the
    corresponding five-state matrix.
    """
    if not (np.isfinite(chi) and np.isfinite(phi)):
        raise ValueError("mixing angles must be finite")
    vec = np.array([
        np.cos(chi),
        0.0,
        np.sin(chi) * np.cos(phi),
        0.0,
        np.sin(chi) * np.sin(phi),
    ])
    return DarkState(chi, phi, vec)


def edge_basis(params: ChainParams,
               scenario: CouplingScenario) -> np.ndarray:
    """Columns embed the five-state basis into the full (4N+1) basis."""
    edges = analytic_edge_states(params)
    n = params.n_cells
    basis = BasisIndex(n)
    cols = np.zeros((basis.dim, 5))
    cols[basis.atom, 0] = 1.0
    contact1_left = scenario.chain1_sublattice is Sublattice.A
    contact2_left = scenario.chain2_sublattice is Sublattice.C
    chain1 = slice(0, 2 * n)
    chain2 = slice(2 * n, 4 * n)
    cols[chain1, 1] = edges.left if contact1_left else edges.right
    cols[chain1, 2] = edges.right if contact1_left else edges.left
    cols[chain2, 3] = edges.left if contact2_left else edges.right
    cols[chain2, 4] = edges.right if contact2_left else edges.left
    return cols


def embed_dark_state(dark: DarkState, params: ChainParams,
                     scenario: CouplingScenario) -> np.ndarray:
    """Distribute the five dark-state amplitudes onto the full site basis."""
    full = edge_basis(params, scenario) @ dark.vector
    return full / np.linalg.norm(full)


def adiabaticity_parameter(params: ChainParams,
                           scenario: CouplingScenario,
                           dtheta_dt: float,
                           theta_step: float = 1e-6) -> float:
    """Leakage rate out of the dark state, relative to the gap.

    Returns |<d(Psi_G)/dt | Psi_0>| / (lambda_1 - lambda_0), with Psi_G
    the eigenvector of the smallest positive eigenvalue of the
    five-state model. The theta-derivative uses a central difference
    with the gauge fixed by overlap against the central eigenvector.
    """
    model = five_state_model(params, scenario)
    system = eigendecompose(model.matrix)
    lam0, lam1 = system.eigenvalues[2], system.eigenvalues[3]
    if abs(lam1 - lam0) < 1e-14 * params.hopping:
        raise ValueError("dark state and nearest level are degenerate")
    reference = system.eigenvectors[:, 3]

    def gap_vector(theta: float) -> np.ndarray:
        shifted = five_state_model(params.with_theta(theta), scenario)
        vec = np.linalg.eigh(shifted.matrix)[1][:, 3]
        return -vec if vec @ reference < 0 else vec

    h = theta_step
    dvec = (gap_vector(params.theta + h) - gap_vector(params.theta - h)) / (2 * h)
    psi0 = dark_state(*mixing_angles(model.hybridization, model.coupling_1,
                                     model.coupling_2)).vector
    return abs(dvec @ psi0) * abs(dtheta_dt) / abs(lam1 - lam0)


def zero_mode(h: np.ndarray,
              reference: np.ndarray | None = None) -> tuple[float, np.ndarray]:
    """Eigenpair of smallest |E|; ties resolved by overlap with reference.

    Used to track one adiabatically connected state across a parameter
    grid: pass the previous grid point's vector as the reference.
    """
    system = eigendecompose(h)
    order = np.argsort(np.abs(system.eigenvalues), kind="stable")
    if reference is None:
        k = order[0]
    else:
        # consider near-ties around the smallest-|E| candidate
        best = np.abs(system.eigenvalues[order[0]])
        ties = [k for k in order
                if np.abs(system.eigenvalues[k]) <= best + 1e-12]
        k = max(ties, key=lambda k: abs(system.eigenvectors[:, k] @ reference))
    vec = system.eigenvectors[:, k]
    if reference is not None and vec @ reference < 0:
        vec = -vec
    return float(system.eigenvalues[k]), vec


def isolated_chain_hamiltonian(params: ChainParams) -> np.ndarray:
    """One clean 2N-site chain (no atom), for edge-state cross-checks."""
    j1, j2 = hopping_amplitudes(params)
    n = params.n_cells
    h = np.zeros((2 * n, 2 * n))
    for j in range(2 * n - 1):
        h[j, j + 1] = h[j + 1, j] = j1 if j % 2 == 0 else j2
    return h
