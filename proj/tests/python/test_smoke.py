import math

import numpy as np
import pytest

import partent

W_ENTROPY = 0.918296


def test_ghz_eta_is_one():
    ghz = partent.ghz_state(3)
    assert partent.eta_measure(ghz) == pytest.approx(1.0, abs=1e-12)
    spectrum = partent.reduced_spectrum(ghz, [1])
    assert spectrum == pytest.approx([0.5, 0.5], abs=1e-14)


def test_w_family_entropies():
    w = partent.w_family_state()
    assert sorted(w.support()) == ["000", "101", "110"]
    assert partent.eta_measure(w) == pytest.approx(W_ENTROPY, abs=1e-6)


def test_partial_trace_is_a_density_matrix():
    state = partent.random_state(4, 3)
    rho = partent.partial_trace(state, [1, 3])
    assert rho.shape == (4, 4)
    assert np.allclose(rho, rho.conj().T, atol=1e-12)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
    assert partent.hermitian_eigenvalues(rho) == pytest.approx(np.linalg.eigvalsh(rho), abs=1e-10)


def test_classify_127_support():
    state = partent.random_on_support(["000", "110", "010"], 0.1, 7)
    result = partent.classify(state)
    assert result["verdict"] == "PartiallyEntangled"
    assert result["partition"] == [[1, 2], [3]]
    assert result["eta"] == 0.0
    assert partent.factorization_oracle(state, [3])
    left, right = partent.extract_factors(state, [3])
    assert left.n_particles == 1 and right.n_particles == 2


def test_full_report_order():
    report = partent.full_report(partent.random_state(3, 1))
    assert [kept for kept, _ in report] == [(1, 2), (1, 3), (2, 3), (1,), (2,), (3,)]


def test_maximize_w_support():
    result = partent.maximize_eta(["000", "110", "101"], restarts=8, seed=1)
    assert result["best_eta"] == pytest.approx(W_ENTROPY, abs=1e-4)
    for _, amp in result["best_state"].terms():
        assert abs(amp) == pytest.approx(1 / math.sqrt(3), abs=1e-3)


def test_maximize_separable_support_is_infeasible():
    with pytest.raises(partent.Infeasible):
        partent.maximize_eta(["000", "110", "010"], restarts=2)


def test_table1_counts():
    rows = partent.reproduce_table1(3, 1)
    cases = [row["case"] for row in rows]
    assert cases.count("I") == 24 and cases.count("II") == 32
    assert partent.basis_label_map()[5] == "111"


def test_errors_and_json_round_trip():
    with pytest.raises(partent.EmptyState):
        partent.build_state([("000", 0)], 3)
    with pytest.raises(partent.PartentError):
        partent.ghz_state(1)
    state = partent.random_state(3, 9)
    back = partent.PureState.from_json(state.to_json())
    assert np.allclose(back.amplitudes, state.amplitudes, atol=1e-12)
    with pytest.raises(partent.ParseError):
        partent.PureState.from_json("{bad")
