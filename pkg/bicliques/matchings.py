"""Matching numbers of bipartite graphs."""
import dataclasses
import functools
from typing import List, Sequence, Tuple

from bicliques import common
from bicliques import graph
from bicliques import poly


@dataclasses.dataclass(frozen=True)
class MatchingNumbers:
    """counts[i] is the number of i-edge matchings."""
    counts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'counts', tuple(int(c) for c in self.counts))
        if not self.counts or self.counts[0] != 1:
            raise common.InconsistentMatchingsError(
                f'A graph has exactly one 0-matching, got {self.counts!r}')
        if min(self.counts) < 0:
            raise common.InconsistentMatchingsError(f'Negative matching count in {self.counts!r}')

    def __getitem__(self, i: int) -> int:
        return self.counts[i] if 0 <= i < len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.counts)

    def padded(self, length: int) -> Tuple[int, ...]:
        """Counts extended with zeros (or cut) to the given length."""
        return tuple(self[i] for i in range(length))


def matching_numbers(s: graph.BicliqueSpec) -> MatchingNumbers:
    """Count matchings of the complement by branching on left vertices."""
    masks = s.neighbourhoods()
    size = min(s.j, s.k)

    @functools.lru_cache(maxsize=None)
    def count(left: int, used: int) -> Tuple[int, ...]:
        # Matchings of left vertices left..j-1 avoiding the used right vertices,
        # bucketed by size.
        if left == s.j:
            return (1,)
        totals = list(count(left + 1, used))
        available = masks[left] & ~used
        while available:
            bit = available & -available
            available ^= bit
            for i, c in enumerate(count(left + 1, used | bit)):
                if i + 1 >= len(totals):
                    totals.extend([0] * (i + 2 - len(totals)))
                totals[i + 1] += c
        return tuple(totals)

    counts = count(0, 0)
    return MatchingNumbers(tuple(counts[i] if i < len(counts) else 0 for i in range(size + 1)))


def _eq5_terms(m_h: Sequence[int], j: int, i: int, top) -> int:
    return sum((-1) ** l * m_h[l] * poly.binomial(j - l, j - i) * poly.falling(top(l), i - l)
               for l in range(i + 1))


def complement_matching_numbers(m_h: MatchingNumbers, j: int, k: int) -> MatchingNumbers:
    """Matching numbers of the complement inside K_{j,k}."""
    if j > k:
        j, k = k, j
    if len(m_h) > j + 1 and any(m_h.counts[j + 1:]):
        raise common.InconsistentMatchingsError(
            f'{m_h.counts!r} has matchings larger than K_{{{j},{k}}} allows')
    padded = m_h.padded(j + 1)
    counts: List[int] = []
    for i in range(j + 1):
        value = _eq5_terms(padded, j, i, lambda l: k - l)
        if value < 0:
            raise common.InconsistentMatchingsError(
                f'{m_h.counts!r} is not realizable inside K_{{{j},{k}}}: entry {i} is {value}')
        counts.append(value)
    return MatchingNumbers(tuple(counts))


def theorem2_condition(m_g: MatchingNumbers, m_h: MatchingNumbers,
                       j: int, k_g: int, k_h: int, c: int) -> bool:
    """Whether the reflection condition on matching numbers holds with shift c."""
    g_counts = m_g.padded(j + 1)
    h_counts = m_h.padded(j + 1)
    for i in range(j + 1):
        expected = _eq5_terms(h_counts, j, i, lambda l: k_g + k_h + j - c - l - 1)
        if g_counts[i] != expected:
            return False
    return True
