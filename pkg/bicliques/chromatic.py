"""Chromatic polynomials and interesting factors of bicliques."""
import logging
from typing import Optional

from bicliques import common
from bicliques import graph
from bicliques import matchings
from bicliques import poly


def chromatic_polynomial(s: graph.BicliqueSpec,
                         m: Optional[matchings.MatchingNumbers] = None) -> poly.IntPoly:
    """Sum over complement matchings M of (x)_{j+k-|M|}."""
    if m is None:
        m = matchings.matching_numbers(s)
    result = poly.IntPoly()
    for i, count in enumerate(m.counts):
        if count:
            result = result + poly.falling_factorial(s.j + s.k - i) * count
    return result


def interesting_factor(s: graph.BicliqueSpec, normalize: bool = True,
                       m: Optional[matchings.MatchingNumbers] = None) -> poly.IntPoly:
    """The degree-j factor g with P_G = (x)_k * g.

    With normalize the smaller clique plays the role of j, so the larger one
    is factored out. Without it the right clique is always factored out.
    """
    if normalize and s.j > s.k:
        s = s.swapped()
        m = None
    if m is None:
        m = matchings.matching_numbers(s)
    result = poly.IntPoly()
    for i, count in enumerate(m.padded(s.j + 1)):
        if count:
            result = result + poly.falling_factorial(s.j - i, s.k) * count
    return result


def interesting_factor_3k(p: graph.ThreeCliqueParams) -> poly.IntPoly:
    """Inclusion-exclusion over which of v1, v2, v3 share a colour."""
    a, b, c, d, e, f = p.as_tuple()
    total = a + b + c + d + e + f

    def x_minus(value: int) -> poly.IntPoly:
        return poly.IntPoly.linear(1, -value)

    return (x_minus(a + e + f) * x_minus(b + d + f) * x_minus(c + d + e)
            - x_minus(total - c) * x_minus(c + d + e)
            - x_minus(total - b) * x_minus(b + d + f)
            - x_minus(total - a) * x_minus(a + e + f)
            + x_minus(total) * 2)


def chromatic_from_stripped(strip: graph.StripResult) -> poly.IntPoly:
    """P_G(x) = (x)_p * P_H(x - p) for the universal vertices stripped off."""
    if strip.reduced is None:
        return poly.falling_factorial(strip.p)
    rest = poly.shift_poly(chromatic_polynomial(strip.reduced), -strip.p)
    return poly.falling_factorial(strip.p) * rest


def acyclic_count(s: graph.BicliqueSpec) -> int:
    """Number of acyclic orientations, as (-1)^n P_G(-1)."""
    value = poly.eval_int(chromatic_polynomial(s), -1)
    return value if (s.j + s.k) % 2 == 0 else -value


def reflection_count_identity(s_g: graph.BicliqueSpec, s_h: graph.BicliqueSpec, c: int) -> bool:
    """P_G(c+1) == C(c+1, k) * (-1)^(j+k) * P_H(-1).

    Both specs are taken with j <= k and must then agree on k.
    """
    if s_g.j > s_g.k:
        s_g = s_g.swapped()
    if s_h.j > s_h.k:
        s_h = s_h.swapped()
    if s_g.k != s_h.k:
        raise common.SpecError(f'Larger cliques differ: k={s_g.k} for G, k={s_h.k} for H')
    k = s_g.k
    lhs = poly.eval_int(chromatic_polynomial(s_g), c + 1)
    rhs = poly.binomial(c + 1, k) * poly.eval_int(chromatic_polynomial(s_h), -1)
    if (s_g.j + k) % 2:
        rhs = -rhs
    logging.debug(f'P_G({c + 1}) = {lhs}, C({c + 1},{k}) (-1)^(j+k) P_H(-1) = {rhs}')
    return lhs == rhs
