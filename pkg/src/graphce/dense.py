"""Brute-force state-vector reference for cross-checking the stabilizer engine.

Amplitude indices put qubit 0 at the most significant bit.  Everything here
is float/complex and deliberately independent of the exact rational code
paths it verifies.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, QubitSet, induced_subgraph
from .stabilizer import (
    OutcomeBitstring,
    PauliGenerator,
    graph_generators,
    measure_z,
    unitary_support,
)

DENSE_MAX_QUBITS = 14
MEASURE_MAX_QUBITS = 12
LEMMA_MAX_TRACED = 8

STATE_TOL = 1e-12
MATCH_TOL = 1e-10


@dataclass(frozen=True)
class StateVector:
    """A pure state on n qubits; amplitudes indexed with qubit 0 as the MSB."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.amplitudes.shape != (1 << self.n,):
            raise ValueError(f"expected {1 << self.n} amplitudes, got shape {self.amplitudes.shape}")


def _index_mask(qubit_bits: int, n: int) -> int:
    """Convert a qubit bitset (bit q = qubit q) to an amplitude-index bitmask."""
    mask = 0
    q = 0
    bits = qubit_bits
    while bits:
        if bits & 1:
            mask |= 1 << (n - 1 - q)
        bits >>= 1
        q += 1
    return mask


def _parity(values: np.ndarray) -> np.ndarray:
    return np.bitwise_count(values.astype(np.uint64)) & 1


def build_state(graph: Graph) -> StateVector:
    """|+>^n with a controlled-Z applied across every edge."""
    n = graph.n
    if n > DENSE_MAX_QUBITS:
        raise ValueError(f"dense oracle limited to n <= {DENSE_MAX_QUBITS}, got {n}")
    amps = np.full(1 << n, 2.0 ** (-n / 2), dtype=np.complex128)
    idx = np.arange(1 << n, dtype=np.uint64)
    for u, v in graph.edges():
        both = ((idx >> np.uint64(n - 1 - u)) & (idx >> np.uint64(n - 1 - v))) & np.uint64(1)
        amps[both == 1] *= -1.0
    return StateVector(n, amps)


def apply_generator(state: StateVector, gen: PauliGenerator) -> StateVector:
    """Apply a signed Pauli string sign * prod X^x Z^z to the state."""
    n = state.n
    if gen.n != n:
        raise ValueError(f"generator width {gen.n} != state width {n}")
    x_idx = _index_mask(gen.x_bits.bits, n)
    z_idx = _index_mask(gen.z_bits.bits, n)
    idx = np.arange(1 << n, dtype=np.uint64)
    src = idx ^ np.uint64(x_idx)
    signs = 1.0 - 2.0 * _parity(src & np.uint64(z_idx))
    return StateVector(n, gen.sign * signs * state.amplitudes[src])


def stabilizes(state: StateVector, gen: PauliGenerator, tol: float = STATE_TOL) -> bool:
    """True iff the generator fixes the state: S|psi> = |psi> within tol."""
    out = apply_generator(state, gen)
    return bool(np.max(np.abs(out.amplitudes - state.amplitudes)) <= tol)


def check_stabilizer(graph: Graph, tol: float = STATE_TOL) -> bool:
    """Every generator (and for n <= 6 every generator product) fixes |G>."""
    state = build_state(graph)
    tableau = graph_generators(graph)
    if not all(stabilizes(state, g, tol) for g in tableau.generators):
        return False
    if graph.n <= 6:
        for subset in range(1 << graph.n):
            cur = state
            picked = subset
            while picked:
                a = (picked & -picked).bit_length() - 1
                cur = apply_generator(cur, tableau.generators[a])
                picked &= picked - 1
            if np.max(np.abs(cur.amplitudes - state.amplitudes)) > tol:
                return False
    return True


def reduced_density_matrix(state: StateVector, b: QubitSet) -> np.ndarray:
    """rho_B after tracing out the complement, ordered by ascending B members."""
    n = state.n
    b_list = list(b)
    a_list = list(b.complement())
    tensor = state.amplitudes.reshape((2,) * n) if n else state.amplitudes.reshape(())
    mat = np.transpose(tensor, axes=b_list + a_list).reshape(1 << len(b_list), 1 << len(a_list))
    return mat @ mat.conj().T


def dense_purity(state: StateVector, b: QubitSet) -> float:
    """Tr(rho_B^2) from the explicitly assembled reduced density matrix."""
    rho = reduced_density_matrix(state, b)
    return float(np.sum(np.abs(rho) ** 2))


def _project_and_drop(state: StateVector, a: int, outcome: int) -> StateVector:
    """Project qubit a onto the Z eigenstate for the outcome, renormalize, drop the qubit."""
    n = state.n
    keep_bit = 0 if outcome == 1 else 1
    p = n - 1 - a
    sub = np.arange(1 << (n - 1), dtype=np.uint64)
    full = ((sub >> np.uint64(p)) << np.uint64(p + 1)) | np.uint64(keep_bit << p) | (sub & np.uint64((1 << p) - 1))
    amps = state.amplitudes[full]
    norm = np.linalg.norm(amps)
    if norm < 1e-15:
        raise ValueError(f"outcome {outcome} on qubit {a} has zero probability")
    return StateVector(n - 1, amps / norm)


def _drop_bit(bits: int, position: int) -> int:
    return ((bits >> (position + 1)) << position) | (bits & ((1 << position) - 1))


def outcome_state(graph: Graph, a_set: QubitSet, z: OutcomeBitstring) -> StateVector:
    """U(z)|G-A> on the surviving qubits, relabelled in ascending order."""
    from .gf2 import GF2Vector

    b_set = a_set.complement()
    sub = build_state(induced_subgraph(graph, b_set))
    support = unitary_support(graph, a_set, z)
    gen = PauliGenerator(1, GF2Vector(sub.n), GF2Vector(sub.n, support.bits))
    return apply_generator(sub, gen)


def check_measurement_rule(graph: Graph, a: int, outcome: int, tol: float = MATCH_TOL) -> bool:
    """Dense projection agrees with the measurement unitary and the updated tableau.

    Projects |G> onto the Z eigenstate of qubit a, drops the qubit, and
    compares (up to global phase) with U_outcome |G - {a}>; then checks that
    the measure_z tableau, restricted to the surviving qubits, stabilizes the
    projected state.
    """
    from .gf2 import GF2Vector

    n = graph.n
    if n > MEASURE_MAX_QUBITS:
        raise ValueError(f"measurement check limited to n <= {MEASURE_MAX_QUBITS}, got {n}")
    state = build_state(graph)
    projected = _project_and_drop(state, a, outcome)

    a_only = QubitSet.from_members(n, [a])
    z = OutcomeBitstring.from_int(a_only, 0 if outcome == 1 else 1)
    expected = outcome_state(graph, a_only, z)
    overlap = abs(np.vdot(expected.amplitudes, projected.amplitudes))
    if abs(overlap - 1.0) > tol:
        return False

    tableau = measure_z(graph_generators(graph), a, outcome)
    for q, g in zip(tableau.qubits, tableau.generators):
        if q == a:
            continue
        if (g.x_bits.bits >> a) & 1 or (g.z_bits.bits >> a) & 1:
            return False  # surviving generators must not touch the measured qubit
        reduced = PauliGenerator(
            g.sign,
            GF2Vector(n - 1, _drop_bit(g.x_bits.bits, a)),
            GF2Vector(n - 1, _drop_bit(g.z_bits.bits, a)),
        )
        if not stabilizes(projected, reduced, tol):
            return False
    return True


def check_lemma(graph: Graph, a_set: QubitSet, tol: float = MATCH_TOL) -> bool:
    """Equal unitary supports give identical states; different supports give orthogonal ones."""
    n = graph.n
    if n > MEASURE_MAX_QUBITS:
        raise ValueError(f"lemma check limited to n <= {MEASURE_MAX_QUBITS}, got {n}")
    if len(a_set) > LEMMA_MAX_TRACED:
        raise ValueError(f"lemma check limited to |A| <= {LEMMA_MAX_TRACED}, got {len(a_set)}")
    count = 1 << len(a_set)
    supports = []
    states = np.empty((count, 1 << (n - len(a_set))), dtype=np.complex128)
    for value in range(count):
        z = OutcomeBitstring.from_int(a_set, value)
        supports.append(unitary_support(graph, a_set, z).bits)
        states[value] = outcome_state(graph, a_set, z).amplitudes
    gram = states @ states.conj().T
    for i in range(count):
        for j in range(count):
            target = 1.0 if supports[i] == supports[j] else 0.0
            if abs(gram[i, j] - target) > tol:
                return False
    return True
