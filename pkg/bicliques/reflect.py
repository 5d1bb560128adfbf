"""Translation and reflection relations between interesting factors."""
import dataclasses
import enum
import logging
from typing import Callable, Dict, Optional, Tuple

from bicliques import chromatic
from bicliques import common
from bicliques import graph
from bicliques import matchings
from bicliques import poly


class RelationKind(str, enum.Enum):
    TRANSLATION = 'translation'
    REFLECTION = 'reflection'
    NONE = 'none'


@dataclasses.dataclass(frozen=True)
class RelationReport:
    """How g relates to h.

    translation: g(x) = h(x + shift); reflection: g(x) = (-1)^j h(-x + shift).
    """
    kind: RelationKind
    shift: Optional[int] = None
    verified: bool = False

    def to_json(self):
        return {'kind': self.kind.value, 'shift': self.shift, 'verified': self.verified}


def _check_pair(g: poly.IntPoly, h: poly.IntPoly) -> int:
    if g.is_zero() or h.is_zero() or g.degree != h.degree:
        raise common.DegreeMismatchError(
            f'Polynomials of different degree: {g.format()} and {h.format()}')
    if g.degree < 1:
        raise common.DegreeMismatchError('Relations need polynomials of degree at least 1')
    if not (g.is_monic() and h.is_monic()):
        raise common.BicliqueError('Relations are only detected between monic polynomials')
    return g.degree


def find_translation(g: poly.IntPoly, h: poly.IntPoly) -> Optional[int]:
    """The d with g(x) = h(x + d), if any."""
    j = _check_pair(g, h)
    diff = g.coeff(j - 1) - h.coeff(j - 1)
    if diff % j:
        return None
    d = diff // j
    return d if poly.shift_poly(h, d) == g else None


def find_reflection(g: poly.IntPoly, h: poly.IntPoly) -> Optional[int]:
    """The c with g(x) = (-1)^j h(-x + c), if any."""
    j = _check_pair(g, h)
    total = -(g.coeff(j - 1) + h.coeff(j - 1))
    if total % j:
        return None
    c = total // j
    return c if poly.reflect_poly(h, c) == g else None


def find_relation(g: poly.IntPoly, h: poly.IntPoly) -> RelationReport:
    """Translation is tried before reflection."""
    d = find_translation(g, h)
    if d is not None:
        return RelationReport(kind=RelationKind.TRANSLATION, shift=d, verified=True)
    c = find_reflection(g, h)
    if c is not None:
        return RelationReport(kind=RelationKind.REFLECTION, shift=c, verified=True)
    return RelationReport(kind=RelationKind.NONE)


FamilyPair = Tuple[graph.ThreeCliqueParams, graph.ThreeCliqueParams, int]


def _family(name: str, g_values, h_values, v: int, c: int) -> FamilyPair:
    if v < 0:
        raise common.InfeasibleFamilyError(f'{name}: constraint forces v = {v} < 0')
    if min(g_values) < 0:
        raise common.InfeasibleFamilyError(f'{name}: negative parameter in {tuple(g_values)}')
    return graph.ThreeCliqueParams(*g_values), graph.ThreeCliqueParams(*h_values), c


def prop5_pair(r: int, s: int, t: int, u: int) -> FamilyPair:
    """G=(r,s,t,t,t,u), H=(r,s,t,t,t,v) with u+v = 4t-r-s+3, c = 6t+4."""
    v = 4 * t - r - s + 3 - u
    return _family('family 5', (r, s, t, t, t, u), (r, s, t, t, t, v), v, 6 * t + 4)


def prop6_pair(r: int, s: int, t: int, u: int) -> FamilyPair:
    """G=(r,r+s-1,t,t,s+t,u), H likewise with v; u+v = 4t-2r+4, c = 2s+6t+4."""
    v = 4 * t - 2 * r + 4 - u
    base = (r, r + s - 1, t, t, s + t)
    return _family('family 6', base + (u,), base + (v,), v, 2 * s + 6 * t + 4)


def prop7_pair(r: int, s: int, t: int, u: int) -> FamilyPair:
    """u+v = 4s-2r+t^2+2t+4, c = 6s+2t^2+4t+6."""
    v = 4 * s - 2 * r + t * t + 2 * t + 4 - u
    base = (r, r, s, s + poly.binomial(t + 1, 2), s + poly.binomial(t + 2, 2))
    return _family('family 7', base + (u,), base + (v,), v, 6 * s + 2 * t * t + 4 * t + 6)


FAMILIES: Dict[int, Callable[[int, int, int, int], FamilyPair]] = {
    5: prop5_pair,
    6: prop6_pair,
    7: prop7_pair,
}


@dataclasses.dataclass(frozen=True)
class FamilyCheck:
    """A generated pair and what was verified about it."""
    g_params: graph.ThreeCliqueParams
    h_params: graph.ThreeCliqueParams
    c: int
    g: poly.IntPoly
    h: poly.IntPoly
    found_shift: Optional[int]
    matching_condition: bool
    below_convention: bool

    @property
    def verified(self) -> bool:
        return self.found_shift == self.c and self.matching_condition


def verify_family(prop: int, r: int, s: int, t: int, u: int) -> FamilyCheck:
    """Generate a family pair and check its reflection both ways."""
    if prop not in FAMILIES:
        raise common.BicliqueError(f'Unknown family {prop}, expected one of {sorted(FAMILIES)}')
    g_params, h_params, c = FAMILIES[prop](r, s, t, u)
    g = chromatic.interesting_factor_3k(g_params)
    h = chromatic.interesting_factor_3k(h_params)
    found = find_reflection(g, h)
    m_g = matchings.matching_numbers(graph.from_params(g_params))
    m_h = matchings.matching_numbers(graph.from_params(h_params))
    matching_condition = matchings.theorem2_condition(m_g, m_h, 3, g_params.k, h_params.k, c)
    below = g_params.k < 3 or h_params.k < 3
    if below:
        logging.info(f'family {prop} pair {g_params.as_tuple()} / {h_params.as_tuple()} has k < 3')
    return FamilyCheck(g_params=g_params, h_params=h_params, c=c, g=g, h=h,
                       found_shift=found, matching_condition=matching_condition, below_convention=below)
