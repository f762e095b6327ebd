import numpy as np
import pytest

from qoinfo import (
    ConvergenceError,
    DomainError,
    RegistryValidationError,
    enumerate_binary_states,
    find_mmes,
    make_basis_state,
    make_ghz,
    make_ghz_phase,
    make_w,
    q_information_reduced,
    random_gaussian_state,
    registry_get,
)
from qoinfo.states import (
    StateRegistryEntry,
    average_balanced_purity,
    balanced_bipartitions,
)

import qoinfo.states


def test_basis_state_is_unit_vector():
    s = make_basis_state(4, 0)
    expected = np.zeros(16)
    expected[0] = 1.0
    assert np.array_equal(s.amplitudes, expected)


def test_basis_state_single_qubit():
    assert np.array_equal(make_basis_state(1, 1).amplitudes, [0, 1])


def test_basis_state_big_endian_indexing():
    # |10>: qubit 0 is the leftmost label and the most significant bit
    s = make_basis_state(2, 2)
    assert s.amplitudes[2] == 1.0
    assert s.label == "|10>"


@pytest.mark.parametrize("n,index", [(4, 16), (4, -1), (0, 0), (15, 0)])
def test_basis_state_domain_errors(n, index):
    with pytest.raises(DomainError):
        make_basis_state(n, index)


def test_ghz_bell_pair():
    s = make_ghz(2)
    assert np.allclose(s.amplitudes, [1 / np.sqrt(2), 0, 0, 1 / np.sqrt(2)])


def test_ghz_domain_errors():
    with pytest.raises(DomainError):
        make_ghz(1)
    with pytest.raises(DomainError):
        make_w(1)


def test_w_amplitude_positions():
    s = make_w(3)
    nonzero = np.flatnonzero(s.amplitudes)
    assert list(nonzero) == [1, 2, 4]  # |001>, |010>, |100>
    assert np.allclose(s.amplitudes[nonzero], 1 / np.sqrt(3))


def test_ghz_phase_amplitudes():
    alpha = 0.7
    s = make_ghz_phase(alpha)
    assert np.isclose(s.amplitudes[15], 1 / np.sqrt(2))
    assert np.isclose(s.amplitudes[0], np.exp(1j * alpha) / np.sqrt(2))
    assert np.count_nonzero(s.amplitudes) == 2


def test_ghz_phase_zero_matches_ghz_measure():
    # same reduced measure as GHZ despite the basis-label swap
    assert np.isclose(
        q_information_reduced(make_ghz_phase(0.0)).omega,
        q_information_reduced(make_ghz(4)).omega,
        atol=1e-12,
    )


@pytest.mark.parametrize(
    "state",
    [make_ghz(5), make_w(6), make_ghz_phase(1.3), make_basis_state(3, 5),
     random_gaussian_state(4, 99)],
)
def test_unit_norm_invariant(state):
    assert state.norm_error() < 1e-12


def test_random_gaussian_state_reproducible():
    a = random_gaussian_state(4, 1234)
    b = random_gaussian_state(4, 1234)
    assert np.array_equal(a.amplitudes, b.amplitudes)
    c = random_gaussian_state(4, 1235)
    assert not np.array_equal(a.amplitudes, c.amplitudes)


def test_random_gaussian_state_domain():
    with pytest.raises(DomainError):
        random_gaussian_state(11, 0)


def test_enumerate_binary_states_count_and_distinctness():
    supports = set()
    count = 0
    for s in enumerate_binary_states(4):
        count += 1
        supports.add(tuple(np.flatnonzero(s.amplitudes)))
    assert count == 2**16 - 1
    assert len(supports) == 2**16 - 1


def test_enumerate_binary_states_small():
    states = list(enumerate_binary_states(1))
    assert len(states) == 3  # |0>, |1>, |+>
    with pytest.raises(DomainError):
        next(enumerate_binary_states(6))


def test_enumerate_binary_single_support_is_basis_state():
    first = next(enumerate_binary_states(4))
    assert np.array_equal(first.amplitudes, make_basis_state(4, 0).amplitudes)


# --- registry ---------------------------------------------------------------

def test_registry_generated_entries():
    entry = registry_get("GHZ", 6)
    assert entry.expected_q_information == 3.0
    assert np.array_equal(entry.amplitudes, make_ghz(6).amplitudes)
    assert registry_get("BASIS", 4).expected_q_information == 0.0
    assert registry_get("GHZ_PHASE", 4).expected_q_information == 1.0


@pytest.mark.parametrize(
    "name,n,expected",
    [("YC", 4, -1.0), ("HD", 4, -0.3491), ("HS", 4, 0.2244),
     ("MMES", 3, 0.0), ("MMES", 4, -1.0), ("MMES", 5, -2.0), ("MMES", 6, -2.0)],
)
def test_registry_data_entries_match_reference(name, n, expected):
    entry = registry_get(name, n)
    omega = q_information_reduced(entry.state()).omega
    assert abs(omega - expected) <= 1e-3
    assert entry.source


def test_registry_unknown_name():
    with pytest.raises(LookupError):
        registry_get("NOPE", 4)
    with pytest.raises(LookupError):
        registry_get("YC", 5)


def test_registry_validation_failure(monkeypatch):
    bad = StateRegistryEntry(
        name="YC", n_qubits=4, amplitudes=make_ghz(4).amplitudes,
        source="corrupted", expected_q_information=-1.0,
    )
    monkeypatch.setattr(
        qoinfo.states, "_load_amplitude_file", lambda: {("YC", 4): bad}
    )
    monkeypatch.setattr(qoinfo.states, "_registry_cache", {})
    with pytest.raises(RegistryValidationError):
        registry_get("YC", 4)


# --- MMES search ------------------------------------------------------------

def test_balanced_bipartitions():
    assert balanced_bipartitions(4) == [(0, 1), (0, 2), (0, 3)]
    assert len(balanced_bipartitions(5)) == 10
    assert len(balanced_bipartitions(6)) == 10


def test_average_balanced_purity_reference_points():
    assert np.isclose(average_balanced_purity(make_ghz(4)), 0.5)
    assert np.isclose(average_balanced_purity(make_basis_state(4, 0)), 1.0)
    mmes4 = registry_get("MMES", 4).state()
    assert np.isclose(average_balanced_purity(mmes4), 1 / 3)


def test_find_mmes_domain():
    with pytest.raises(DomainError):
        find_mmes(3, seed=0)


@pytest.mark.parametrize("n,target", [(4, -1.0), (5, -2.0), (6, -2.0)])
def test_find_mmes_reaches_reference(n, target):
    state = find_mmes(n, seed=0)
    assert abs(q_information_reduced(state).omega - target) <= 1e-2


def test_find_mmes_convergence_error_carries_best(monkeypatch):
    # a one-iteration budget with no polish cannot reach the target
    monkeypatch.setattr(qoinfo.states, "_polish_toward_target", lambda *a: None)
    with pytest.raises(ConvergenceError) as err:
        find_mmes(4, seed=3, max_iters=1, restarts=2)
    assert err.value.best_omega is not None
    assert err.value.best_state is not None
    assert abs(err.value.best_omega - (-1.0)) > 1e-2
