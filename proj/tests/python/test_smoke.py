# Copyright 2026 The nonent Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Smoke tests for the Python bindings."""

import numpy as np
import pytest

import nonent

CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
)


def test_classify_swap_and_product():
    out = nonent.classify(nonent.swap_operator(2, 2), 2, 2)
    assert out["verdict"] == "swap"
    np.testing.assert_allclose(out["V21"], np.eye(2), atol=1e-12)

    u = np.kron(nonent.haar_unitary(2, 1), nonent.haar_unitary(3, 2))
    out = nonent.classify(u, 2, 3)
    assert out["verdict"] == "product"
    np.testing.assert_allclose(np.kron(out["V"], out["W"]), u, atol=1e-9)


def test_classify_cnot_witness():
    out = nonent.classify(CNOT, 2, 2)
    assert out["verdict"] == "entangling"
    w = out["witness"]
    assert w["second_coefficient"] == pytest.approx(2 ** -0.5)
    assert not nonent.brute_force_non_entangling(CNOT, 2, 2)


def test_operator_schmidt_rank():
    assert nonent.operator_schmidt_rank(CNOT, 2, 2) == 2
    assert nonent.operator_schmidt_rank(nonent.swap_operator(2, 2), 2, 2) == 4


def test_entropy_matches_numpy():
    psi = nonent.random_state(6, 4)
    p = np.linalg.svd(psi.reshape(2, 3), compute_uv=False) ** 2
    expected = -np.sum(p * np.log2(p))
    assert nonent.entanglement_entropy(psi, 2, 3) == pytest.approx(expected, abs=1e-12)


def test_slice_forms():
    e0 = np.array([1, 0], dtype=complex)
    assert nonent.slice(nonent.swap_operator(2, 2), 2, 2, e0)["form"] == "transfer_to_probe"
    with pytest.raises(nonent.SliceHypothesisError):
        nonent.slice(CNOT, 2, 2, e0)


def test_swap_measures_pointer():
    e0 = np.array([1, 0], dtype=complex)
    effects = [np.diag([1, 0]).astype(complex), np.diag([0, 1]).astype(complex)]
    phi = np.array([1, 1], dtype=complex) / np.sqrt(2)
    probs = nonent.outcome_probabilities(nonent.swap_operator(2, 2), 2, 2, e0, effects, phi)
    np.testing.assert_allclose(probs, [0.5, 0.5], atol=1e-12)
    obs = nonent.measured_observable(nonent.swap_operator(2, 2), 2, 2, e0, effects)
    for a, b in zip(obs, effects):
        np.testing.assert_allclose(a, b, atol=1e-12)
    product = np.kron(nonent.haar_unitary(2, 3), nonent.haar_unitary(2, 4))
    assert nonent.is_trivial_povm(nonent.measured_observable(product, 2, 2, e0, effects))


def test_non_unitary_rejected():
    with pytest.raises(nonent.NotUnitaryError):
        nonent.classify(2 * np.eye(4, dtype=complex), 2, 2)


def test_swap_profile():
    e0 = np.array([1, 0], dtype=complex)
    prof = nonent.entanglement_profile(nonent.swap_operator(2, 2), 2, 2, e0, n_steps=64)
    assert len(prof["t"]) == 65
    assert prof["obstruction_witnessed"]
    assert max(prof["max_entropy_bits"]) > 0.5
