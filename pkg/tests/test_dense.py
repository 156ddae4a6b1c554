"""Tests for the state-vector oracle and its agreement with the stabilizer engine."""

import random

import numpy as np
import pytest

from graphce.dense import (
    StateVector,
    apply_generator,
    build_state,
    check_lemma,
    check_measurement_rule,
    check_stabilizer,
    dense_purity,
    outcome_state,
    reduced_density_matrix,
    stabilizes,
)
from graphce.gf2 import GF2Vector
from graphce.graphs import QubitSet, family, from_edges, random_connected_graph
from graphce.metrics import purity
from graphce.stabilizer import (
    OutcomeBitstring,
    PauliGenerator,
    graph_generators,
    support_multiplicities,
)

NO13 = from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])


def test_build_state_single_vertex():
    sv = build_state(from_edges(1, []))
    assert np.allclose(sv.amplitudes, np.array([1, 1]) / np.sqrt(2))


def test_build_state_k2():
    sv = build_state(from_edges(2, [(0, 1)]))
    assert np.allclose(sv.amplitudes, np.array([1, 1, 1, -1]) / 2)


def test_build_state_no13_amplitudes():
    sv = build_state(NO13)
    assert np.allclose(np.abs(sv.amplitudes), 2.0**-3)
    # sign of |111111> is the parity of the edge count (5 edges)
    assert np.isclose(sv.amplitudes[-1].real, -(2.0**-3))
    assert check_stabilizer(NO13)


def test_build_state_guard():
    with pytest.raises(ValueError):
        build_state(family("complete", 15))


def test_dense_purity_goldens():
    assert np.isclose(dense_purity(build_state(from_edges(2, [(0, 1)])), QubitSet.from_members(2, [0])), 0.5)
    sv = build_state(NO13)
    assert np.isclose(dense_purity(sv, QubitSet.from_members(6, [0, 1, 4])), 0.25)
    assert np.isclose(dense_purity(sv, QubitSet.full(6)), 1.0)
    assert np.isclose(dense_purity(sv, QubitSet(6, 0)), 1.0)


def test_check_stabilizer_families():
    assert check_stabilizer(from_edges(3, [(0, 1), (0, 2), (1, 2)]))
    assert check_stabilizer(family("snowflake", 3))


def test_sign_flipped_generator_fails():
    sv = build_state(NO13)
    gen = graph_generators(NO13).generators[2]
    flipped = PauliGenerator(-gen.sign, gen.x_bits, gen.z_bits)
    assert stabilizes(sv, gen)
    assert not stabilizes(sv, flipped)


def test_measurement_rule_k2():
    k2 = from_edges(2, [(0, 1)])
    assert check_measurement_rule(k2, 0, +1)
    assert check_measurement_rule(k2, 0, -1)
    # spell the -1 case out: remaining qubit ends in |-> = Z|+>
    sv = build_state(k2)
    kept = sv.amplitudes[2:]  # qubit 0 projected onto |1>
    kept = kept / np.linalg.norm(kept)
    minus = np.array([1, -1]) / np.sqrt(2)
    assert np.isclose(abs(np.vdot(minus, kept)), 1.0)


def test_measurement_rule_no13_qubit6():
    assert check_measurement_rule(NO13, 5, -1)
    # dense projection equals Z_3 |G - {6}> up to phase
    sv = build_state(NO13)
    amps = sv.amplitudes.reshape(32, 2)[:, 1]
    amps = amps / np.linalg.norm(amps)
    reduced = build_state(from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]))
    expected = apply_generator(reduced, PauliGenerator(1, GF2Vector(5), GF2Vector(5, 1 << 2)))
    assert np.isclose(abs(np.vdot(expected.amplitudes, amps)), 1.0)


def test_measurement_rule_random_cases():
    rng = random.Random(89)
    for _ in range(40):
        g = random_connected_graph(rng.randint(2, 9), rng)
        assert check_measurement_rule(g, rng.randrange(g.n), rng.choice((1, -1)))


def test_lemma_no13_and_snowflake():
    assert check_lemma(NO13, QubitSet.from_members(6, [3, 5]))
    sf = family("snowflake", 2)
    assert check_lemma(sf, QubitSet.from_members(4, [0, 2]))


def test_lemma_explicit_orthogonality():
    a = QubitSet.from_members(6, [3, 5])
    s00 = outcome_state(NO13, a, OutcomeBitstring.from_int(a, 0))
    s10 = outcome_state(NO13, a, OutcomeBitstring.from_int(a, 1))
    assert np.isclose(np.vdot(s00.amplitudes, s00.amplitudes).real, 1.0)
    assert abs(np.vdot(s00.amplitudes, s10.amplitudes)) < 1e-10


def test_lemma_random_cases():
    rng = random.Random(97)
    for _ in range(25):
        g = random_connected_graph(rng.randint(2, 9), rng)
        size = rng.randint(1, g.n - 1)
        a = QubitSet.from_members(g.n, rng.sample(range(g.n), size))
        assert check_lemma(g, a)


def test_oracle_purity_equivalence_sample():
    rng = random.Random(101)
    for _ in range(60):
        g = random_connected_graph(rng.randint(2, 10), rng)
        b = QubitSet(g.n, rng.getrandbits(g.n))
        exact = float(purity(g, b))
        assert abs(dense_purity(build_state(g), b) - exact) <= 1e-10


def test_subset_ce_matches_dense_power_set():
    from graphce.metrics import concentratable_entanglement

    rng = random.Random(113)
    for _ in range(15):
        g = random_connected_graph(rng.randint(3, 8), rng)
        size = rng.randint(1, min(4, g.n - 1))
        members = sorted(rng.sample(range(g.n), size))
        state = build_state(g)
        total = 0.0
        for picked in range(1 << size):
            alpha = [members[i] for i in range(size) if (picked >> i) & 1]
            total += dense_purity(state, QubitSet.from_members(g.n, alpha))
        oracle_value = 1.0 - total / (1 << size)
        exact = concentratable_entanglement(g, members)
        assert abs(oracle_value - float(exact)) <= 1e-10


def test_distinct_dense_states_match_multiplicities():
    rng = random.Random(103)
    for _ in range(25):
        g = random_connected_graph(rng.randint(2, 9), rng)
        size = rng.randint(1, min(6, g.n - 1))
        a = QubitSet.from_members(g.n, rng.sample(range(g.n), size))
        expected = support_multiplicities(g, a)
        states: dict[int, np.ndarray] = {}
        tally: dict[int, int] = {}
        for value in range(1 << size):
            z = OutcomeBitstring.from_int(a, value)
            vec = outcome_state(g, a, z).amplitudes
            for key, ref in states.items():
                if abs(np.vdot(ref, vec)) > 0.5:
                    tally[key] += 1
                    break
            else:
                states[value] = vec
                tally[value] = 1
        assert len(states) == len(expected)
        assert sorted(tally.values()) == sorted(expected.values())


def test_reduced_state_reconstruction():
    # averaging the k distinct outcome projectors reproduces rho_B elementwise
    rng = random.Random(107)
    for _ in range(15):
        g = random_connected_graph(rng.randint(2, 8), rng)
        size = rng.randint(1, min(5, g.n - 1))
        a = QubitSet.from_members(g.n, rng.sample(range(g.n), size))
        b = a.complement()
        rho = reduced_density_matrix(build_state(g), b)
        dim = 1 << len(b)
        acc = np.zeros((dim, dim), dtype=np.complex128)
        for value in range(1 << size):
            vec = outcome_state(g, a, OutcomeBitstring.from_int(a, value)).amplitudes
            acc += np.outer(vec, vec.conj())
        acc /= 1 << size
        assert np.max(np.abs(acc - rho)) <= 1e-10


def test_statevector_shape_validation():
    with pytest.raises(ValueError):
        StateVector(2, np.ones(3, dtype=np.complex128))
