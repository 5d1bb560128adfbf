"""Realize any monic integer cubic as an integer shift of a (3,k)-biclique factor."""
import dataclasses
import logging
from typing import Any, Dict, Optional, Tuple

import numpy as np

from bicliques import cases
from bicliques import chromatic
from bicliques import common
from bicliques import graph
from bicliques import poly


@dataclasses.dataclass(frozen=True)
class Certificate:
    """g is the biclique's interesting factor, q the cubic it shifts."""
    g: poly.IntPoly
    q: poly.IntPoly
    shift: int
    holds: bool


@dataclasses.dataclass(frozen=True)
class AlphaNResult:
    """A biclique whose interesting factor is g(x) = q(x - N)."""
    params: graph.ThreeCliqueParams
    n: int
    n0: int
    N: int  # pylint: disable=invalid-name
    search_state: common.SearchState
    certificate: Certificate

    @property
    def verified(self) -> bool:
        return self.certificate.holds

    def to_json(self) -> Dict[str, Any]:
        return {
            'params': list(self.params.as_tuple()),
            'k': self.params.k,
            'n': self.n,
            'n0': self.n0,
            'N': self.N,
            'case': self.search_state.case,
            't': self.search_state.t,
            'i': self.search_state.i,
            'g': poly.to_json(self.certificate.g),
            'q': poly.to_json(self.certificate.q),
            'verified': self.verified,
        }


def _check_cubic(q: poly.IntPoly) -> None:
    if q.is_zero() or q.degree != 3 or not q.is_monic():
        raise common.BicliqueError(f'Expected a monic cubic, got {q.format()}')


def reduce_cubic(q: poly.IntPoly) -> Tuple[common.ReducedCubic, int]:
    """Find n0 so that q(x - n0) has x^2 coefficient in {-1, 0, 1}."""
    _check_cubic(q)
    n0 = (q.coeff(2) + 1) // 3
    reduced = poly.shift_poly(q, -n0)
    if poly.shift_poly(reduced, n0) != q:
        raise common.FormulaIntegrityError(f'Shift by {n0} does not invert for {q.format()}')
    return common.ReducedCubic(a2=reduced.coeff(2), a1=reduced.coeff(1), a0=reduced.coeff(0)), n0


def _certify(params: graph.ThreeCliqueParams, q: poly.IntPoly, shift: int) -> Certificate:
    g = chromatic.interesting_factor_3k(params)
    return Certificate(g=g, q=q, shift=shift, holds=g == poly.shift_poly(q, -shift))


def construct_case(p: common.ReducedCubic, min_n: int = 0,
                   scan_cap: Optional[int] = None) -> AlphaNResult:
    """First feasible parameter assignment in scan order, with g(x) = p(x - n)."""
    if min_n < 0:
        raise common.BicliqueError(f'min_n must be non-negative, got {min_n}')
    cap = common.SCAN_CAP if scan_cap is None else scan_cap
    case = cases.case_lookup[p.a2]
    logging.debug(f'Scanning case a2={p.a2} for a1={p.a1} a0={p.a0}, min_n={min_n}, cap={cap}')
    state = None
    for candidate in case.scan(p, min_n, cap):
        state = common.SearchState(case=p.a2, t=candidate.t, i=candidate.i, n=candidate.n)
        if not case.feasible(candidate.params, candidate.i, candidate.n, min_n):
            continue
        params = graph.ThreeCliqueParams(*candidate.params)
        q = poly.IntPoly(p.coefficients)
        certificate = _certify(params, q, candidate.n)
        if not certificate.holds:
            raise common.FormulaIntegrityError(
                f'Case a2={p.a2} parameters {candidate.params} at t={candidate.t}, i={candidate.i}, '
                f'n={candidate.n} give {certificate.g.format()}, not p(x - {candidate.n})')
        logging.debug(f'Feasible at {state}: {candidate.params}')
        return AlphaNResult(params=params, n=candidate.n, n0=0, N=candidate.n,
                            search_state=state, certificate=certificate)
    raise common.SearchFailureError(
        f'No feasible parameters for a2={p.a2} a1={p.a1} a0={p.a0} within scan cap {cap}', state)


def alpha_plus_n(q: poly.IntPoly, scan_cap: Optional[int] = None) -> AlphaNResult:
    """A (3,k)-biclique whose interesting factor is q(x - N) with N >= 0.

    Every root alpha of q then gives the chromatic root alpha + N.
    """
    reduced, n0 = reduce_cubic(q)
    result = construct_case(reduced, min_n=max(0, -n0), scan_cap=scan_cap)
    total = n0 + result.n
    certificate = _certify(result.params, q, total)
    if not certificate.holds:
        raise common.FormulaIntegrityError(
            f'Composed shift N={total} does not certify {q.format()}')
    logging.info(f'{q.format()}: params {result.params.as_tuple()}, n={result.n}, n0={n0}, N={total}')
    return dataclasses.replace(result, n0=n0, N=total, certificate=certificate)


def numeric_residual(result: AlphaNResult) -> float:
    """Largest relative size of g(alpha + N) over the roots alpha of q.

    The value is divided by max(1, sum of the absolute term sizes of g at that
    point). P_G = (x)_k * g vanishes wherever g does, so only g is evaluated.
    """
    q = result.certificate.q
    g_coefficients = [float(c) for c in reversed(result.certificate.g.coefficients)]
    roots = np.roots([float(c) for c in reversed(q.coefficients)])
    worst = 0.0
    for alpha in roots:
        point = complex(alpha) + result.N
        value = complex(np.polyval(g_coefficients, point))
        scale = float(np.polyval(np.abs(g_coefficients), abs(point)))
        worst = max(worst, abs(value) / max(1.0, scale))
    return worst
