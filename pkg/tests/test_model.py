import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sshpassage import (BasisIndex, ChainParams, CouplingScenario,
                        DisorderRealization, Phase, build_hamiltonian,
                        hopping_amplitudes, phase_classification)


def test_hopping_amplitudes_limits():
    assert hopping_amplitudes(ChainParams(4, 0.0)) == (2.0, 0.0)
    j1, j2 = hopping_amplitudes(ChainParams(4, np.pi / 2))
    assert j1 == pytest.approx(1.0, abs=1e-15)
    assert j2 == pytest.approx(1.0, abs=1e-15)


def test_hopping_amplitudes_value():
    j1, j2 = hopping_amplitudes(ChainParams(4, 0.7 * np.pi))
    assert j1 == pytest.approx(0.412215, abs=1e-6)
    assert j2 == pytest.approx(1.587785, abs=1e-6)


def test_phase_classification():
    assert phase_classification(*hopping_amplitudes(
        ChainParams(4, 0.4 * np.pi))) is Phase.TRIVIAL
    assert phase_classification(*hopping_amplitudes(
        ChainParams(4, 0.7 * np.pi))) is Phase.TOPOLOGICAL
    assert phase_classification(1.0, 1.0 + 1e-14) is Phase.CRITICAL


def test_parameter_validation():
    with pytest.raises(ValueError):
        ChainParams(0, 0.5)
    with pytest.raises(ValueError):
        ChainParams(4, -0.1)
    with pytest.raises(ValueError):
        ChainParams(4, 2 * np.pi + 0.1)
    with pytest.raises(ValueError):
        CouplingScenario("A", 1, "B", 1, 0.01, 0.01)  # chain2 must be C/D
    with pytest.raises(ValueError):
        CouplingScenario("A", 0, "C", 1, 0.01, 0.01)
    with pytest.raises(ValueError):
        CouplingScenario("A", 5, "C", 1, 0.01, 0.01).validate_cells(4)


def test_basis_layout():
    basis = BasisIndex(3)
    assert basis.dim == 13
    assert basis.atom == 12
    assert [basis.a(i) for i in (1, 2, 3)] == [0, 2, 4]
    assert [basis.b(i) for i in (1, 2, 3)] == [1, 3, 5]
    assert [basis.c(i) for i in (1, 2, 3)] == [6, 8, 10]
    assert [basis.d(i) for i in (1, 2, 3)] == [7, 9, 11]
    assert basis.labels()[0] == "A1"
    assert basis.labels()[-1] == "atom"


def test_hamiltonian_n1_by_hand():
    # layout [A1, B1, C1, D1, atom]; single J1 bond per chain
    params = ChainParams(1, 0.7 * np.pi)
    scenario = CouplingScenario("A", 1, "C", 1, g1=0.03, g2=0.05, delta=0.2)
    j1, _ = hopping_amplitudes(params)
    expected = np.array([
        [0.0, j1, 0.0, 0.0, 0.03],
        [j1, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, j1, 0.05],
        [0.0, 0.0, j1, 0.0, 0.0],
        [0.03, 0.0, 0.05, 0.0, 0.2],
    ])
    np.testing.assert_array_equal(
        build_hamiltonian(params, scenario), expected)


def test_decoupled_blocks():
    params = ChainParams(3, 0.6 * np.pi)
    scenario = CouplingScenario("A", 2, "D", 3, g1=0.0, g2=0.0, delta=0.7)
    h = build_hamiltonian(params, scenario)
    assert np.all(h[12, :12] == 0.0) and np.all(h[:12, 12] == 0.0)
    assert h[12, 12] == 0.7
    assert np.linalg.eigvalsh(h)[np.argmin(
        np.abs(np.linalg.eigvalsh(h) - 0.7))] == pytest.approx(0.7)
    # no cross-chain entries
    assert np.all(h[:6, 6:12] == 0.0)


def test_sparsity_pattern():
    n = 5
    params = ChainParams(n, 0.8 * np.pi)
    scenario = CouplingScenario("B", 2, "C", 4, g1=0.01, g2=0.02)
    h = build_hamiltonian(params, scenario)
    off_diag = np.count_nonzero(np.triu(h, k=1))
    assert off_diag == 2 * (2 * n - 1) + 2


@settings(max_examples=30, deadline=None)
@given(n=st.integers(1, 6),
       theta=st.floats(0.0, 2 * np.pi),
       delta=st.floats(-0.5, 0.5),
       p=st.integers(1, 6), q=st.integers(1, 6))
def test_symmetric_assembly(n, theta, delta, p, q):
    params = ChainParams(n, theta)
    scenario = CouplingScenario("A", min(p, n), "D", min(q, n),
                                g1=0.01, g2=0.02, delta=delta)
    h = build_hamiltonian(params, scenario)
    assert np.max(np.abs(h - h.T)) == 0.0


@pytest.mark.parametrize("subs", [("A", "C"), ("B", "D")])
def test_bipartite_spectral_symmetry(subs):
    params = ChainParams(4, 0.63 * np.pi)
    scenario = CouplingScenario(subs[0], 2, subs[1], 3,
                                g1=0.04, g2=0.07, delta=0.0)
    evals = np.linalg.eigvalsh(build_hamiltonian(params, scenario))
    np.testing.assert_allclose(evals, -evals[::-1], atol=1e-12)
    assert np.min(np.abs(evals)) <= 1e-12


def test_disorder_linearity():
    n = 4
    params = ChainParams(n, 0.7 * np.pi)
    scenario = CouplingScenario("A", 1, "C", 1, g1=0.01, g2=0.01)
    rng = np.random.default_rng(7)
    realization = DisorderRealization(rng.normal(size=4 * n) * 1e-3,
                                      rng.normal(size=2 * (2 * n - 1)) * 1e-3)
    clean = build_hamiltonian(params, scenario)
    dirty = build_hamiltonian(params, scenario, realization)
    # clean + perturbation matrix reproduces the disordered assembly exactly
    pert = np.zeros_like(clean)
    pert[np.arange(4 * n), np.arange(4 * n)] = realization.onsite_offsets
    nb = 2 * n - 1
    for chain, offset in enumerate((0, 2 * n)):
        for j in range(nb):
            pert[offset + j, offset + j + 1] = \
                realization.bond_offsets[chain * nb + j]
            pert[offset + j + 1, offset + j] = \
                realization.bond_offsets[chain * nb + j]
    np.testing.assert_array_equal(clean + pert, dirty)


def test_disorder_size_mismatch():
    params = ChainParams(4, 0.7 * np.pi)
    scenario = CouplingScenario("A", 1, "C", 1, g1=0.01, g2=0.01)
    bad = DisorderRealization(np.zeros(4), np.zeros(14))
    with pytest.raises(ValueError, match="onsite_offsets"):
        build_hamiltonian(params, scenario, bad)
