"""Truncated ladder comparison model: structure, conservation, leakage."""

import numpy as np
import pytest

from eitgate import ladder
from eitgate.ladder import LadderParams

REF = LadderParams(N_a=9, g_p=0.4, g_t=0.5, delta_p=1.2, delta_t=0.7, n_max=2)


def _lowering(P):
    a = np.zeros((P, P))
    for n in range(P - 1):
        a[n, n + 1] = np.sqrt(n + 1.0)
    return a


def _kron_oracle(params):
    # Independent reconstruction from the product structure
    # (atom) x (probe mode) x (trigger mode), trigger fastest.
    P = params.n_max + 1
    a = _lowering(P)
    eye = np.eye(P)
    unit = {
        lab: np.zeros((3, 3)) for lab in ("g2e1", "g2e3", "e1", "e3")
    }
    unit["g2e1"][0, 1] = 1.0
    unit["g2e3"][0, 2] = 1.0
    unit["e1"][1, 1] = 1.0
    unit["e3"][2, 2] = 1.0
    gp = params.g_p * np.sqrt(params.N_a)
    gt = params.g_t * np.sqrt(params.N_a)
    H = -params.delta_p * np.kron(np.kron(unit["e1"], eye), eye)
    H = H - params.delta_t * np.kron(np.kron(unit["e3"], eye), eye)
    probe = gp * np.kron(np.kron(unit["g2e1"], a), eye)
    H = H + probe + probe.T
    if params.convention == "as-printed":
        trig = gt * np.kron(np.kron(unit["g2e3"], eye), a)
    else:
        trig = gt * np.kron(np.kron(unit["g2e3"], eye), a.T)
    return H + trig + trig.T


def test_dimension_counts():
    assert ladder.ladder_dim(1) == 12
    assert ladder.ladder_dim(2) == 27
    assert ladder.ladder_dim(3) == 48


def test_index_enumeration_and_errors():
    seen = set()
    for k, atom in enumerate(ladder.LADDER_ATOM_LABELS):
        for n_p in range(3):
            for n_t in range(3):
                idx = ladder.ladder_index(atom, n_p, n_t, 2)
                assert idx == k * 9 + n_p * 3 + n_t
                seen.add(idx)
    assert seen == set(range(27))
    with pytest.raises(ValueError, match="label"):
        ladder.ladder_index("X", 0, 0, 2)
    with pytest.raises(ValueError, match="photon"):
        ladder.ladder_index("G2", 3, 0, 2)
    with pytest.raises(ValueError, match="photon"):
        ladder.ladder_index("G2", 0, -1, 2)


@pytest.mark.parametrize(
    "kw",
    [
        dict(N_a=0.5),
        dict(gamma21=-0.1),
        dict(gamma32=-1.0),
        dict(n_max=0),
        dict(convention="sideways"),
    ],
)
def test_parameter_validation(kw):
    with pytest.raises(ValueError):
        LadderParams(**kw)


@pytest.mark.parametrize("convention", ladder.CONVENTIONS)
def test_hamiltonian_matches_product_structure(convention):
    params = LadderParams(
        N_a=9, g_p=0.4, g_t=0.5, delta_p=1.2, delta_t=0.7, n_max=2,
        convention=convention,
    )
    H = ladder.build_ladder_hamiltonian(params)
    assert np.allclose(H, H.conj().T)
    assert np.allclose(H, _kron_oracle(params), atol=1e-14, rtol=0)


def test_as_printed_emits_and_absorptive_consumes():
    H_emit = ladder.build_ladder_hamiltonian(REF)
    g2_00 = ladder.ladder_index("G2", 0, 0, 2)
    e3_01 = ladder.ladder_index("E3", 0, 1, 2)
    assert H_emit[g2_00, e3_01] == pytest.approx(0.5 * 3.0)
    absorb = LadderParams(
        N_a=9, g_p=0.4, g_t=0.5, delta_p=1.2, delta_t=0.7, n_max=2,
        convention="absorptive",
    )
    H_abs = ladder.build_ladder_hamiltonian(absorb)
    assert H_abs[g2_00, e3_01] == 0.0
    g2_01 = ladder.ladder_index("G2", 0, 1, 2)
    e3_00 = ladder.ladder_index("E3", 0, 0, 2)
    assert H_abs[g2_01, e3_00] == pytest.approx(0.5 * 3.0)


@pytest.mark.parametrize("convention,e3_sign", [("as-printed", -1.0), ("absorptive", 1.0)])
def test_photon_excitation_charges_commute(convention, e3_sign):
    # Emitting couplings conserve (photons - excitations); the absorptive
    # trigger conserves (photons + excitations).
    params = LadderParams(
        N_a=9, g_p=0.4, g_t=0.5, delta_p=1.2, delta_t=0.7, n_max=2,
        convention=convention,
    )
    H = ladder.build_ladder_hamiltonian(params)
    dim = ladder.ladder_dim(2)
    charge_p = np.zeros((dim, dim))
    charge_t = np.zeros((dim, dim))
    for k, atom in enumerate(ladder.LADDER_ATOM_LABELS):
        for n_p in range(3):
            for n_t in range(3):
                i = ladder.ladder_index(atom, n_p, n_t, 2)
                charge_p[i, i] = n_p - (atom == "E1")
                charge_t[i, i] = n_t + e3_sign * (atom == "E3")
    assert np.allclose(H @ charge_p - charge_p @ H, 0.0, atol=1e-13)
    assert np.allclose(H @ charge_t - charge_t @ H, 0.0, atol=1e-13)


def test_jump_operators_shift_labels_and_keep_photons():
    chans = ladder.build_ladder_channels(REF)
    assert [c.rate for c in chans] == [REF.gamma21, REF.gamma32]
    assert all(c.kind == "decay" for c in chans)
    eye9 = np.eye(9)
    drop = np.zeros((3, 3))
    drop[1, 0] = 1.0  # G2 -> E1
    refill = np.zeros((3, 3))
    refill[0, 2] = 1.0  # E3 -> G2
    assert np.array_equal(chans[0].op, np.kron(drop, eye9))
    assert np.array_equal(chans[1].op, np.kron(refill, eye9))


def test_zero_rate_channels_dropped():
    chans = ladder.build_ladder_channels(
        LadderParams(N_a=9, g_p=0.4, g_t=0.5, gamma21=0.0, n_max=2)
    )
    assert len(chans) == 1
    assert chans[0].rate == 1.0


def test_choi_inputs_sit_on_the_photonic_qubit():
    E = ladder.ladder_choi_inputs(2)
    assert E.shape == (16, 27, 27)
    pos = [0, 1, 3, 4]  # G2 with (0,0),(0,1),(1,0),(1,1)
    for i in range(4):
        for j in range(4):
            expect = np.zeros((27, 27))
            expect[pos[i], pos[j]] = 1.0
            assert np.array_equal(E[4 * i + j], expect)


def test_reduce_to_photons_sums_labels():
    rng = np.random.default_rng(3)
    blocks = rng.standard_normal((3, 9, 9)) + 1j * rng.standard_normal((3, 9, 9))
    rho = np.zeros((27, 27), dtype=complex)
    for k in range(3):
        rho[9 * k : 9 * (k + 1), 9 * k : 9 * (k + 1)] = blocks[k]
    reduced = ladder.reduce_to_photons(rho, 2)
    assert np.allclose(reduced, blocks.sum(axis=0))
    with pytest.raises(ValueError, match="dimension"):
        ladder.reduce_to_photons(rho, 3)


def test_photon_qubit_block_slices_low_corner():
    field = np.arange(81.0).reshape(9, 9)
    block = ladder.photon_qubit_block(field, 2)
    idx = [0, 1, 3, 4]
    for i in range(4):
        for j in range(4):
            assert block[i, j] == field[idx[i], idx[j]]


def test_boundary_population_counts_edge_states():
    rho = np.zeros((27, 27))
    rho[ladder.ladder_index("G2", 2, 0, 2)] [ladder.ladder_index("G2", 2, 0, 2)] = 0.2
    rho[ladder.ladder_index("E1", 0, 2, 2)] [ladder.ladder_index("E1", 0, 2, 2)] = 0.05
    rho[ladder.ladder_index("E3", 1, 1, 2)] [ladder.ladder_index("E3", 1, 1, 2)] = 0.75
    assert ladder.boundary_population(rho, 2) == pytest.approx(0.25)
    traj = np.stack([np.zeros((27, 27)), rho])
    assert np.allclose(ladder.boundary_population(traj, 2), [0.0, 0.25])


def test_check_truncation_threshold():
    rho = np.zeros((27, 27))
    rho[2, 2] = 2e-3  # (G2,0,2) sits on the edge
    with pytest.raises(RuntimeError, match="raise n_max"):
        ladder.check_truncation(rho, 2)
    ladder.check_truncation(rho, 2, threshold=5e-3)
    rho[2, 2] = 5e-4
    ladder.check_truncation(rho, 2)


def test_gate_without_couplings_or_decay_is_static():
    quiet = LadderParams(N_a=1, delta_p=2.0, delta_t=-1.0, gamma21=0.0, gamma32=0.0, n_max=1)
    times = np.linspace(0.0, 3.0, 4)
    gt = ladder.evolve_ladder_gate(quiet, times)
    E = ladder.ladder_choi_inputs(1)
    for m in range(4):
        assert np.allclose(gt.unit_inputs[m], E, atol=1e-12)
    assert np.allclose(gt.amplitudes, 0.5)


def test_gate_rejects_zero_amplitudes():
    with pytest.raises(ValueError, match="zero"):
        ladder.evolve_ladder_gate(REF, np.linspace(0.0, 1.0, 3), [0, 0, 0, 0])


def test_conditional_trace_never_increases():
    times = np.linspace(0.0, 2.0, 5)
    cond = ladder.evolve_ladder_gate(REF, times, conditional=True)
    tr = np.einsum("tkaa->tk", cond.unit_inputs).real
    pops = tr[:, [0, 5, 10, 15]]
    assert np.all(np.diff(pops, axis=0) <= 1e-10)
    assert np.all(pops <= 1.0 + 1e-10)


FIG_SET = dict(N_a=1e8, g_p=0.0022, g_t=0.0022, delta_p=10.0, delta_t=0.0)


def test_emitting_trigger_overflows_a_tight_truncation():
    # Resonant emission with decay refill keeps pumping trigger photons
    # upward, so a low photon cap is overrun almost immediately.
    params = LadderParams(**FIG_SET, n_max=2)
    times = np.linspace(0.0, 0.25, 6)
    gt = ladder.evolve_ladder_gate(params, times)
    assert np.max(ladder.boundary_population(gt.unit_inputs, 2)) > 0.5
    with pytest.raises(RuntimeError, match="raise n_max"):
        ladder.check_truncation(gt.unit_inputs, 2)


def test_qubit_block_is_truncation_insensitive_before_overflow():
    times = np.linspace(0.0, 0.02, 3)
    g2 = ladder.evolve_ladder_gate(LadderParams(**FIG_SET, n_max=2), times)
    g3 = ladder.evolve_ladder_gate(LadderParams(**FIG_SET, n_max=3), times)
    ladder.check_truncation(g3.unit_inputs, 3)
    b2 = ladder.photon_qubit_block(ladder.reduce_to_photons(g2.unit_inputs[-1], 2), 2)
    b3 = ladder.photon_qubit_block(ladder.reduce_to_photons(g3.unit_inputs[-1], 3), 3)
    assert np.max(np.abs(b2 - b3)) < 1e-10
