"""Brute-force oracles used to cross-check the exact formulas."""
import functools
import itertools
import logging
from typing import FrozenSet, Iterable, Sequence, Tuple

import networkx as nx

from bicliques import common
from bicliques import graph
from bicliques import matchings
from bicliques import poly


Edges = FrozenSet[Tuple[int, int]]


def _relabel(n: int, edges: Iterable[Tuple[int, int]], keep: Sequence[int]) -> Tuple[int, Edges]:
    index = {v: i for i, v in enumerate(keep)}
    return n, frozenset((min(index[u], index[v]), max(index[u], index[v])) for u, v in edges)


def _contract(n: int, edges: Edges, u: int, v: int) -> Tuple[int, Edges]:
    """Merge v into u; parallel edges collapse and the u-v edge disappears."""
    merged = set()
    for a, b in edges:
        a = u if a == v else a
        b = u if b == v else b
        if a != b:
            merged.add((min(a, b), max(a, b)))
    return _relabel(n - 1, merged, [w for w in range(n) if w != v])


@functools.lru_cache(maxsize=1 << 16)
def _chromatic(n: int, edges: Edges) -> poly.IntPoly:
    total_pairs = n * (n - 1) // 2
    if not edges:
        return poly.IntPoly((0,) * n + (1,))
    if len(edges) == total_pairs:
        return poly.falling_factorial(n)
    if 2 * len(edges) <= total_pairs:
        # Deletion-contraction: P(G) = P(G - e) - P(G / e).
        u, v = min(edges)
        return _chromatic(n, edges - {(u, v)}) - _chromatic(*_contract(n, edges, u, v))
    # Addition-contraction on a non-edge: P(G) = P(G + e) + P(G / e).
    u, v = next(pair for pair in itertools.combinations(range(n), 2) if pair not in edges)
    return _chromatic(n, edges | {(u, v)}) + _chromatic(*_contract(n, edges, u, v))


def chromatic_poly_bruteforce(g: graph.SimpleGraph) -> poly.IntPoly:
    """Chromatic polynomial by deletion-contraction."""
    if g.n > common.ORACLE_MAX_VERTICES:
        raise common.GuardExceededError(
            f'{g.n} vertices exceeds the oracle guard of {common.ORACLE_MAX_VERTICES}')
    return _chromatic(g.n, g.edges)


def count_colourings(g: graph.SimpleGraph, q: int) -> int:
    """Proper q-colourings by direct enumeration."""
    if g.n > common.ORACLE_MAX_VERTICES:
        raise common.GuardExceededError(
            f'{g.n} vertices exceeds the oracle guard of {common.ORACLE_MAX_VERTICES}')
    return sum(1 for colours in itertools.product(range(q), repeat=g.n)
               if all(colours[u] != colours[v] for u, v in g.edges))


def matchings_bruteforce(j: int, k: int, edges: Iterable[Tuple[int, int]]) -> matchings.MatchingNumbers:
    """Bucket every matching edge subset by size."""
    edges = sorted(set(edges))
    if len(edges) > common.ORACLE_MAX_MATCHING_EDGES:
        raise common.GuardExceededError(
            f'{len(edges)} edges exceeds the oracle guard of {common.ORACLE_MAX_MATCHING_EDGES}')
    counts = [0] * (min(j, k) + 1)
    for size in range(len(counts)):
        for subset in itertools.combinations(edges, size):
            lefts = {l for l, _ in subset}
            rights = {r for _, r in subset}
            if len(lefts) == size and len(rights) == size:
                counts[size] += 1
    return matchings.MatchingNumbers(tuple(counts))


def acyclic_orientations_bruteforce(g: graph.SimpleGraph) -> int:
    """Try all 2^|E| orientations."""
    edges = sorted(g.edges)
    if len(edges) > common.ORACLE_MAX_ORIENTATION_EDGES:
        raise common.GuardExceededError(
            f'{len(edges)} edges exceeds the oracle guard of {common.ORACLE_MAX_ORIENTATION_EDGES}')
    total = 0
    for flips in itertools.product((False, True), repeat=len(edges)):
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(g.n))
        digraph.add_edges_from((v, u) if flip else (u, v) for (u, v), flip in zip(edges, flips))
        if nx.is_directed_acyclic_graph(digraph):
            total += 1
    logging.debug(f'{total} of {2 ** len(edges)} orientations are acyclic')
    return total
