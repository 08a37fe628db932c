"""Edge-state hybridization and the five-state reduction, step by step.

Walks through the static story: in the topological phase each finite
chain hosts a pair of edge states split by the hybridization energy G,
and the atom plus the four edge states form a closed five-level system
with a zero-energy dark state that never touches the left edges.

Run:  python demos/edge_state_hybridization.py
"""

import numpy as np

from sshpassage import (ChainParams, CouplingScenario, analytic_edge_states,
                        build_hamiltonian, dark_state, five_state_model,
                        hopping_amplitudes, hybridization_energy,
                        isolated_chain_hamiltonian, mixing_angles,
                        phase_classification, zero_mode)

scenario = CouplingScenario("A", 1, "C", 1, g1=0.01, g2=0.01)

# --- 1. hopping amplitudes and the phase boundary --------------------------
for theta_pi in (0.3, 0.5, 0.7):
    j1, j2 = hopping_amplitudes(ChainParams(4, theta_pi * np.pi))
    phase = phase_classification(j1, j2)
    print(f"theta = {theta_pi:.2f} pi:  J1 = {j1:.4f}, J2 = {j2:.4f}  "
          f"-> {phase.name.lower()}")

# --- 2. analytic edge states vs exact in-gap eigenvectors -------------------
params = ChainParams(4, 0.7 * np.pi)
edges = analytic_edge_states(params)
evals, evecs = np.linalg.eigh(isolated_chain_hamiltonian(params))
sym = (edges.left + edges.right) / np.sqrt(2)
print(f"\nN = 4, theta = 0.7 pi")
print(f"left edge state weights per cell: "
      f"{np.round(edges.left[::2] ** 2, 4)}")
print(f"overlap of (L+R)/sqrt(2) with the exact in-gap level: "
      f"{max(abs(sym @ evecs[:, 3]), abs(sym @ evecs[:, 4])):.6f}")

# --- 3. hybridization energy: exponentially small in N ----------------------
print("\n|G| vs chain length (theta = 0.7 pi):")
for n in (2, 4, 6, 8, 10):
    print(f"  N = {n:2d}:  |G| = {abs(hybridization_energy(ChainParams(n, 0.7 * np.pi))):.3e}")

# --- 4. five-state reduction and its dark state ------------------------------
model = five_state_model(params, scenario)
h = build_hamiltonian(params, scenario)
full = np.linalg.eigvalsh(h)
quintet = np.sort(full[np.argsort(np.abs(full))[:5]])
print(f"\nfive-state spectrum (closed form): "
      f"{np.round(model.eigenvalues_closed_form(), 6)}")
print(f"five smallest full-system levels:  {np.round(quintet, 6)}")

chi, phi = mixing_angles(model.hybridization, model.coupling_1,
                         model.coupling_2)
vec = dark_state(chi, phi).vector
print(f"\nmixing angles: chi = {chi:.4f}, phi = {phi:.4f}")
print(f"dark state over {model.basis}:\n  {np.round(vec, 6)}")
print(f"residual ||H5 @ dark||_inf = {np.max(np.abs(model.matrix @ vec)):.2e}")

energy, mode = zero_mode(h)
print(f"exact zero mode energy = {energy:.2e}; "
      f"atom weight = {mode[-1] ** 2:.4f}")
