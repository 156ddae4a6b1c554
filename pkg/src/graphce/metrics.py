"""Exact purities, Schmidt ranks and Concentratable Entanglement of graph states.

Every value here is a dyadic rational computed with integer arithmetic; no
floating point enters this module.  The reduced-state purity across a cut is
1/k with k the number of distinct post-trace-out generator sets, which equals
2^rank of the biadjacency submatrix between the two sides.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .gf2 import rank
from .graphs import Graph, QubitSet, biadjacency, is_connected, write_graph6
from .stabilizer import count_distinct_sets_fast


class DisconnectedGraphWarning(UserWarning):
    """Metric evaluated on a disconnected graph; closed forms may not apply."""


@dataclass(frozen=True)
class DyadicRational:
    """Exact non-negative value numerator / 2^log2_denominator, kept in lowest terms."""

    numerator: int
    log2_denominator: int = 0

    def __post_init__(self) -> None:
        num, q = self.numerator, self.log2_denominator
        if num < 0 or q < 0:
            raise ValueError(f"invalid dyadic rational {num}/2^{q}")
        if num == 0:
            q = 0
        else:
            strip = min(q, (num & -num).bit_length() - 1)
            num >>= strip
            q -= strip
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "log2_denominator", q)

    @classmethod
    def zero(cls) -> DyadicRational:
        return cls(0)

    @classmethod
    def one(cls) -> DyadicRational:
        return cls(1)

    @classmethod
    def pow2(cls, r: int) -> DyadicRational:
        """The value 2^-r for r >= 0."""
        return cls(1, r)

    @staticmethod
    def _coerce(value) -> DyadicRational:
        if isinstance(value, DyadicRational):
            return value
        if isinstance(value, int):
            return DyadicRational(value)
        raise TypeError(f"cannot mix DyadicRational with {type(value).__name__}")

    def __add__(self, other) -> DyadicRational:
        o = self._coerce(other)
        q = max(self.log2_denominator, o.log2_denominator)
        num = (self.numerator << (q - self.log2_denominator)) + (o.numerator << (q - o.log2_denominator))
        return DyadicRational(num, q)

    __radd__ = __add__

    def __sub__(self, other) -> DyadicRational:
        o = self._coerce(other)
        q = max(self.log2_denominator, o.log2_denominator)
        num = (self.numerator << (q - self.log2_denominator)) - (o.numerator << (q - o.log2_denominator))
        return DyadicRational(num, q)

    def __rsub__(self, other) -> DyadicRational:
        return self._coerce(other) - self

    def __mul__(self, other) -> DyadicRational:
        o = self._coerce(other)
        return DyadicRational(self.numerator * o.numerator, self.log2_denominator + o.log2_denominator)

    __rmul__ = __mul__

    def shifted(self, k: int) -> DyadicRational:
        """The value divided by 2^k."""
        return DyadicRational(self.numerator, self.log2_denominator + k)

    def _cmp_key(self, other: DyadicRational) -> tuple[int, int]:
        return (self.numerator << other.log2_denominator, other.numerator << self.log2_denominator)

    def __lt__(self, other) -> bool:
        a, b = self._cmp_key(self._coerce(other))
        return a < b

    def __le__(self, other) -> bool:
        a, b = self._cmp_key(self._coerce(other))
        return a <= b

    def __gt__(self, other) -> bool:
        return self._coerce(other) < self

    def __ge__(self, other) -> bool:
        return self._coerce(other) <= self

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.log2_denominator)

    def __float__(self) -> float:
        return self.numerator / (1 << self.log2_denominator)

    def __str__(self) -> str:
        if self.log2_denominator == 0:
            return str(self.numerator)
        return f"{self.numerator}/{1 << self.log2_denominator}"

    def decimal_str(self) -> str:
        """Exact decimal expansion (denominators are powers of two, so it terminates)."""
        q = self.log2_denominator
        digits = str(self.numerator * 5**q).rjust(q + 1, "0")
        if q == 0:
            return digits
        return f"{digits[:-q]}.{digits[-q:]}"


def _check_connected(graph: Graph) -> bool:
    connected = is_connected(graph)
    if not connected:
        warnings.warn(
            "graph is disconnected; purities and CE are still exact but closed forms assume connectivity",
            DisconnectedGraphWarning,
            stacklevel=3,
        )
    return connected


def _as_qubitset(universe: int, value: QubitSet | Iterable[int]) -> QubitSet:
    if isinstance(value, QubitSet):
        if value.universe != universe:
            raise ValueError(f"qubit set universe {value.universe} != graph size {universe}")
        return value
    return QubitSet.from_members(universe, value)


def _reduction_rank(graph: Graph, b_set: QubitSet) -> int:
    """log2 of the distinct-set count k across the cut (B, complement)."""
    a_set = b_set.complement()
    smaller = a_set if len(a_set) <= len(b_set) else b_set
    k = count_distinct_sets_fast(graph, smaller)
    return k.bit_length() - 1


def purity(graph: Graph, b: QubitSet | Iterable[int]) -> DyadicRational:
    """Tr rho_B^2 = 1/k, tracing out the smaller side of the bipartition."""
    b_set = _as_qubitset(graph.n, b)
    _check_connected(graph)
    return DyadicRational.pow2(_reduction_rank(graph, b_set))


def schmidt_rank(graph: Graph, b: QubitSet | Iterable[int]) -> int:
    """-log2 of the reduced-state purity; an exact integer for graph states."""
    b_set = _as_qubitset(graph.n, b)
    return _reduction_rank(graph, b_set)


@dataclass(frozen=True)
class PuritySpectrum:
    """Purity tallies for every bipartition, grouped by the smaller side's size m.

    levels[m] lists (schmidt_rank, count) pairs, rank ascending, covering all
    C(n, m) size-m subsets except at m = n/2, where each unordered bipartition
    is counted once (the side containing vertex 0).
    """

    n: int
    levels: tuple[tuple[tuple[int, int], ...], ...]

    def counts_at(self, m: int) -> dict[int, int]:
        return dict(self.levels[m])

    def bipartition_count(self, m: int) -> int:
        return sum(c for _, c in self.levels[m])

    def purity_tally(self, m: int) -> list[tuple[DyadicRational, int]]:
        """(purity, count) pairs at level m, smallest purity first."""
        return [(DyadicRational.pow2(r), c) for r, c in sorted(self.levels[m], reverse=True)]

    def level_sum(self, m: int) -> DyadicRational:
        total = DyadicRational.zero()
        for r, c in self.levels[m]:
            total += DyadicRational(c, r)
        return total

    def ce_full(self) -> DyadicRational:
        """Concentratable Entanglement of the full qubit set via cut symmetry.

        Every level sum stands in for itself and its complementary level, so
        the power-set sum is 2 * sum of level sums, including the middle
        level, whose subsets are stored halved.
        """
        total = DyadicRational.zero()
        for m in range(len(self.levels)):
            total += self.level_sum(m)
        return DyadicRational.one() - total.shifted(self.n - 1)

    def distinct_purity_count(self) -> int:
        """Distinct purity values over all proper bipartitions (m >= 1)."""
        ranks = {r for level in self.levels[1:] for r, _ in level}
        return len(ranks)

    def is_minimal_everywhere(self) -> bool:
        """Every bipartition purity equals 2^-m (the AME condition)."""
        return all(
            all(r == m for r, _ in level)
            for m, level in enumerate(self.levels)
            if m >= 1
        )


def _level_rank_counts(graph: Graph, m: int) -> dict[int, int]:
    n = graph.n
    counts: dict[int, int] = {}
    for combo in combinations(range(n), m):
        if 2 * m == n and combo[0] != 0:
            continue  # middle layer: keep the side containing vertex 0
        b_set = QubitSet.from_members(n, combo)
        r = rank(biadjacency(graph, b_set, b_set.complement()))
        counts[r] = counts.get(r, 0) + 1
    return counts


def purity_spectrum(graph: Graph) -> PuritySpectrum:
    """Tally reduced-state purities for all bipartitions with smaller side m <= n/2."""
    _check_connected(graph)
    levels = [((0, 1),)]
    for m in range(1, graph.n // 2 + 1):
        counts = _level_rank_counts(graph, m)
        levels.append(tuple(sorted(counts.items())))
    return PuritySpectrum(graph.n, tuple(levels))


@dataclass(frozen=True)
class RankIndex:
    """Occurrence counts of Schmidt ranks m, m-1, ..., 1 over size-m cuts."""

    m: int
    counts: tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.counts) + ")"


def rank_index(graph: Graph, m: int) -> RankIndex:
    """Rank tallies over all bipartitions whose smaller set has m qubits.

    Rank-0 occurrences (possible only for disconnected graphs) are excluded,
    so for connected graphs the counts sum to the number of size-m cuts.
    """
    if not 1 <= m <= graph.n // 2:
        raise ValueError(f"m must satisfy 1 <= m <= n/2 = {graph.n // 2}, got {m}")
    _check_connected(graph)
    counts = _level_rank_counts(graph, m)
    return RankIndex(m, tuple(counts.get(r, 0) for r in range(m, 0, -1)))


def concentratable_entanglement(graph: Graph, s: QubitSet | Iterable[int]) -> DyadicRational:
    """1 - 2^-|s| times the sum of reduced purities over every subset of s.

    The full-set case sweeps only the smaller sides of the bipartitions and
    weights them by cut symmetry; proper subsets are enumerated directly,
    since each subset pairs with its complement in the whole qubit set.
    """
    s_set = _as_qubitset(graph.n, s)
    if len(s_set) == 0:
        raise ValueError("Concentratable Entanglement requires a non-empty qubit set")
    _check_connected(graph)
    if s_set.members == QubitSet.full(graph.n).members:
        return purity_spectrum(graph).ce_full()
    members = list(s_set)
    total = DyadicRational.zero()
    for sub in range(1 << len(members)):
        alpha = 0
        picked = sub
        while picked:
            i = (picked & -picked).bit_length() - 1
            alpha |= 1 << members[i]
            picked &= picked - 1
        total += DyadicRational.pow2(_reduction_rank(graph, QubitSet(graph.n, alpha)))
    return DyadicRational.one() - total.shifted(len(members))


def ce_bounds(n: int) -> tuple[DyadicRational, DyadicRational]:
    """Theoretical (min, max) of full-set CE for connected graph states of n qubits.

    The minimum holds every reduced purity at 1/2; the maximum holds every
    bipartition purity at 2^-min(|A|,|B|).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    lo = DyadicRational(1, 1) - DyadicRational(1, n)
    acc = DyadicRational.zero()
    for j in range(n + 1):
        acc += DyadicRational(math.comb(n, j), min(j, n - j))
    hi = DyadicRational.one() - acc.shifted(n)
    return lo, hi


def snowflake_subset_ce(n: int) -> DyadicRational:
    """Closed form 1 - (3/4)^n for pair-free n-qubit subsets of a 2n-qubit snowflake."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return DyadicRational((1 << (2 * n)) - 3**n, 2 * n)


@dataclass(frozen=True)
class CEReport:
    """CE of one subset of one graph, with bound comparisons for its size."""

    graph6: str
    n: int
    subset: tuple[int, ...]
    ce: DyadicRational
    bound_min: DyadicRational
    bound_max: DyadicRational
    connected: bool
    achieves_min: bool
    achieves_max: bool
    spectrum: PuritySpectrum | None


def ce_report(graph: Graph, s: QubitSet | Iterable[int] | None = None) -> CEReport:
    """Evaluate CE and bound attainment; the spectrum is attached for full-set reports."""
    s_set = QubitSet.full(graph.n) if s is None else _as_qubitset(graph.n, s)
    full = s_set.members == QubitSet.full(graph.n).members
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DisconnectedGraphWarning)
        spectrum = purity_spectrum(graph) if full else None
        ce = spectrum.ce_full() if spectrum is not None else concentratable_entanglement(graph, s_set)
    connected = _check_connected(graph)
    lo, hi = ce_bounds(len(s_set))
    return CEReport(
        graph6=write_graph6(graph),
        n=graph.n,
        subset=tuple(s_set),
        ce=ce,
        bound_min=lo,
        bound_max=hi,
        connected=connected,
        achieves_min=ce == lo,
        achieves_max=ce == hi,
        spectrum=spectrum,
    )
