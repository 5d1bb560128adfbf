"""Reduced-cubic cases, keyed by the x^2 coefficient."""
from bicliques.cases import case1
from bicliques.cases import case2
from bicliques.cases import case3

case_lookup = {
    -1: case1.NegativeCase(),
    0: case2.ZeroCase(),
    1: case3.PositiveCase(),
}
