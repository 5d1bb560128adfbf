"""Bicliques described through their bipartite complements."""
import dataclasses
import itertools
import json
import logging
import random
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple

from bicliques import common


Pair = Tuple[int, int]


@dataclasses.dataclass(frozen=True)
class BicliqueSpec:
    """A (j,k)-biclique given by the edges of its complement inside K_{j,k}.

    Left vertices are 0..j-1, right vertices 0..k-1. complement_edges holds
    (left, right) pairs; every other left/right pair is a bridging edge of G.
    strict forbids vertices of G adjacent to every other vertex.
    """
    j: int
    k: int
    complement_edges: FrozenSet[Pair] = frozenset()
    strict: bool = False

    def __post_init__(self):
        if self.j < 1 or self.k < 1:
            raise common.SpecError(f'Both cliques need at least one vertex, got j={self.j} k={self.k}')
        edges = frozenset((int(l), int(r)) for l, r in self.complement_edges)
        for l, r in edges:
            if not (0 <= l < self.j and 0 <= r < self.k):
                raise common.SpecError(f'Complement edge ({l}, {r}) outside K_{{{self.j},{self.k}}}')
        object.__setattr__(self, 'complement_edges', edges)
        if self.strict:
            left, right = self.degrees()
            if 0 in left or 0 in right:
                raise common.SpecError('Strict biclique has a vertex adjacent to every other vertex')

    @classmethod
    def from_edges(cls, j: int, k: int, edges: Iterable[Iterable[int]],
                   strict: bool = False) -> 'BicliqueSpec':
        """Build from a list of pairs, rejecting duplicates."""
        pairs: List[Pair] = []
        for edge in edges:
            pair = tuple(int(v) for v in edge)
            if len(pair) != 2:
                raise common.SpecError(f'Complement edge must be a pair, got {edge!r}')
            pairs.append((pair[0], pair[1]))
        if len(set(pairs)) != len(pairs):
            raise common.SpecError('Duplicate complement edge')
        return cls(j=j, k=k, complement_edges=frozenset(pairs), strict=strict)

    def degrees(self) -> Tuple[List[int], List[int]]:
        """Degrees in the complement, left side then right side."""
        left = [0] * self.j
        right = [0] * self.k
        for l, r in self.complement_edges:
            left[l] += 1
            right[r] += 1
        return left, right

    def is_strict(self) -> bool:
        left, right = self.degrees()
        return 0 not in left and 0 not in right

    def swapped(self) -> 'BicliqueSpec':
        """The same graph with the two cliques exchanged."""
        return BicliqueSpec(
            j=self.k, k=self.j,
            complement_edges=frozenset((r, l) for l, r in self.complement_edges),
            strict=self.strict)

    def neighbourhoods(self) -> List[int]:
        """Bitmask of complement neighbours for each left vertex."""
        masks = [0] * self.j
        for l, r in self.complement_edges:
            masks[l] |= 1 << r
        return masks


@dataclasses.dataclass(frozen=True)
class ThreeCliqueParams:
    """The 6-tuple (a,b,c,d,e,f) of a (3,k)-biclique.

    In G, a/b/c count right vertices adjacent to exactly v1/v2/v3, and d/e/f
    count those adjacent to both v2,v3 / v1,v3 / v1,v2.
    """
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def __post_init__(self):
        if min(self.as_tuple()) < 0:
            raise common.ParameterError(f'Parameters must be non-negative, got {self.as_tuple()}')
        if self.k < 1:
            raise common.DegenerateParametersError('Parameters describe an empty k-clique')

    @property
    def k(self) -> int:
        return sum(self.as_tuple())

    def as_tuple(self) -> common.Params:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def degrees(self) -> Tuple[int, int, int]:
        """Complement degrees of v1, v2, v3."""
        return (self.b + self.c + self.d, self.a + self.c + self.e, self.a + self.b + self.f)


@dataclasses.dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on vertices 0..n-1."""
    n: int
    edges: FrozenSet[Pair] = frozenset()

    def __post_init__(self):
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f'Loop at vertex {u}')
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f'Edge ({u}, {v}) outside vertex range')
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, 'edges', frozenset(normalized))


# Complement neighbours (0-based v1, v2, v3) of one right vertex in each block.
_BLOCK_NEIGHBOURS = (
    (1, 2),  # a
    (0, 2),  # b
    (0, 1),  # c
    (0,),    # d
    (1,),    # e
    (2,),    # f
)


def from_params(p: ThreeCliqueParams) -> BicliqueSpec:
    """Lay the right clique out in blocks [a|b|c|d|e|f]."""
    edges = set()
    right = 0
    for count, neighbours in zip(p.as_tuple(), _BLOCK_NEIGHBOURS):
        for _ in range(count):
            for left in neighbours:
                edges.add((left, right))
            right += 1
    return BicliqueSpec(j=3, k=p.k, complement_edges=frozenset(edges))


def complement_partner(s: BicliqueSpec) -> BicliqueSpec:
    """Swap bridging edges and complement edges."""
    everything = {(l, r) for l in range(s.j) for r in range(s.k)}
    return BicliqueSpec(j=s.j, k=s.k, complement_edges=frozenset(everything - s.complement_edges))


@dataclasses.dataclass(frozen=True)
class StripResult:
    """Universal vertices removed from each side, and what is left.

    reduced is None when the complement had no edges, so G is complete.
    """
    p_left: int
    p_right: int
    reduced: Optional[BicliqueSpec]

    @property
    def p(self) -> int:
        return self.p_left + self.p_right


def strip_universal(s: BicliqueSpec) -> StripResult:
    """Remove complement-isolated vertices, which are universal in G."""
    left, right = s.degrees()
    keep_left = [l for l in range(s.j) if left[l]]
    keep_right = [r for r in range(s.k) if right[r]]
    p_left = s.j - len(keep_left)
    p_right = s.k - len(keep_right)
    if not keep_left or not keep_right:
        logging.debug(f'All {s.j + s.k} vertices are universal')
        return StripResult(p_left=s.j, p_right=s.k, reduced=None)
    left_index = {l: i for i, l in enumerate(keep_left)}
    right_index = {r: i for i, r in enumerate(keep_right)}
    reduced = BicliqueSpec(
        j=len(keep_left), k=len(keep_right),
        complement_edges=frozenset((left_index[l], right_index[r]) for l, r in s.complement_edges))
    return StripResult(p_left=p_left, p_right=p_right, reduced=reduced)


def to_simple_graph(s: BicliqueSpec) -> SimpleGraph:
    """Left vertices are 0..j-1 and right vertex r becomes j+r."""
    edges = set(itertools.combinations(range(s.j), 2))
    edges.update(itertools.combinations(range(s.j, s.j + s.k), 2))
    for l in range(s.j):
        for r in range(s.k):
            if (l, r) not in s.complement_edges:
                edges.add((l, s.j + r))
    return SimpleGraph(n=s.j + s.k, edges=frozenset(edges))


def canonical_key(s: BicliqueSpec) -> Tuple[int, ...]:
    """Canonical form under permutations that keep each side in place.

    Right vertices are interchangeable, so a right neighbourhood multiset
    determines the graph; the key is its smallest sorted form over all
    relabellings of the left side.
    """
    columns = [0] * s.k
    for l, r in s.complement_edges:
        columns[r] |= 1 << l
    best = None
    for perm in itertools.permutations(range(s.j)):
        relabelled = []
        for mask in columns:
            image = 0
            for l in range(s.j):
                if mask >> l & 1:
                    image |= 1 << perm[l]
            relabelled.append(image)
        key = tuple(sorted(relabelled))
        if best is None or key < best:
            best = key
    return best or ()


def from_columns(j: int, columns: Iterable[int]) -> BicliqueSpec:
    """Build a spec from one left-neighbourhood bitmask per right vertex."""
    columns = list(columns)
    edges = frozenset((l, r) for r, mask in enumerate(columns) for l in range(j) if mask >> l & 1)
    return BicliqueSpec(j=j, k=len(columns), complement_edges=edges)


def spec_from_dict(data: Dict[str, Any]) -> BicliqueSpec:
    """Accept {"j","k","complement_edges"} or {"params": [a..f]}."""
    try:
        if 'params' in data:
            values = [int(v) for v in data['params']]
            if len(values) != 6:
                raise common.SpecError(f'Expected six parameters, got {len(values)}')
            return from_params(ThreeCliqueParams(*values))
        return BicliqueSpec.from_edges(
            int(data['j']), int(data['k']), data.get('complement_edges', []),
            strict=bool(data.get('strict', False)))
    except common.BicliqueError:
        raise
    except (KeyError, TypeError, ValueError) as err:
        raise common.SpecError(f'Malformed biclique description: {err}') from err


def parse_spec_text(text: str) -> BicliqueSpec:
    """Parse JSON, or an edge list whose first line is "j k"."""
    stripped = text.strip()
    if stripped.startswith('{'):
        return spec_from_dict(json.loads(stripped))
    lines = [line.split('#')[0].strip() for line in stripped.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise common.SpecError('Empty edge list')
    try:
        j, k = (int(v) for v in lines[0].split())
        edges = [tuple(int(v) for v in line.split()) for line in lines[1:]]
    except ValueError as err:
        raise common.SpecError(f'Malformed edge list: {err}') from err
    return BicliqueSpec.from_edges(j, k, edges)


def load_spec(path: str) -> BicliqueSpec:
    with open(path, 'r', encoding='utf-8') as file:
        return parse_spec_text(file.read())


def spec_to_json(s: BicliqueSpec) -> Dict[str, Any]:
    return {
        'j': s.j,
        'k': s.k,
        'complement_edges': [list(pair) for pair in sorted(s.complement_edges)],
    }


def random_spec(rng: random.Random, j: int, k: int, density: float = 0.5,
                strict: bool = False) -> BicliqueSpec:
    """Random complement inside K_{j,k}; strict draws again until no vertex is isolated."""
    while True:
        edges = frozenset((l, r) for l in range(j) for r in range(k) if rng.random() < density)
        spec = BicliqueSpec(j=j, k=k, complement_edges=edges)
        if not strict or spec.is_strict():
            return spec
