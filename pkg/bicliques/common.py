"""Common classes."""
import configparser
import dataclasses
import itertools
import math
import os
from typing import Callable, Iterator, Optional, Sequence, Tuple


_CONFIG_FILE = os.path.join(os.path.dirname(__file__), '..', 'config.ini')
CONFIG = configparser.ConfigParser()
CONFIG.read(_CONFIG_FILE)

# config.ini keys
_DEFAULT = 'DEFAULT'
_ORACLE = 'ORACLE'
_VERIFY = 'VERIFY'

SCAN_CAP = CONFIG.getint(_DEFAULT, 'scan_cap', fallback=10_000)
LOG_FILE = CONFIG.get(_DEFAULT, 'log_file', fallback='')
ATLAS_WORKERS = CONFIG.getint(_DEFAULT, 'atlas_workers', fallback=4)
VERIFY_SEED = CONFIG.getint(_DEFAULT, 'verify_seed', fallback=0)

ORACLE_MAX_VERTICES = CONFIG.getint(_ORACLE, 'max_vertices', fallback=12)
ORACLE_MAX_MATCHING_EDGES = CONFIG.getint(_ORACLE, 'max_matching_edges', fallback=20)
ORACLE_MAX_ORIENTATION_EDGES = CONFIG.getint(_ORACLE, 'max_orientation_edges', fallback=18)

VERIFY_RANDOM_SPECS = CONFIG.getint(_VERIFY, 'random_specs', fallback=500)
VERIFY_ALPHAN_GRID = CONFIG.getint(_VERIFY, 'alphan_grid', fallback=10)


class BicliqueError(ValueError):
    """Base class for every error raised by this package."""


class SpecError(BicliqueError):
    """A biclique description is malformed."""


class ParameterError(BicliqueError):
    """A parameter tuple does not describe a usable biclique."""


class DegenerateParametersError(ParameterError):
    """A 6-tuple with k = 0."""


class InfeasibleFamilyError(ParameterError):
    """Family constraints force a negative parameter."""


class DegreeMismatchError(BicliqueError):
    """Two polynomials that must share a degree do not."""


class InconsistentMatchingsError(BicliqueError):
    """Matching numbers that no subgraph of K_{j,k} can have."""


class GuardExceededError(BicliqueError):
    """Input too large for a brute-force oracle."""


@dataclasses.dataclass(frozen=True)
class SearchState:
    """Position of the alpha+n feasibility scan."""
    case: int
    t: int
    i: int
    n: Optional[int] = None


class SearchFailureError(BicliqueError):
    """The feasibility scan ran past its cap."""

    def __init__(self, msg: str, state: Optional[SearchState]):
        super().__init__(msg)
        self.state = state


class FormulaIntegrityError(BicliqueError):
    """A constructed certificate failed its exact identity check."""


@dataclasses.dataclass(frozen=True)
class ReducedCubic:
    """x^3 + a2*x^2 + a1*x + a0 with a2 in {-1, 0, 1}."""
    a2: int
    a1: int
    a0: int

    def __post_init__(self):
        if self.a2 not in (-1, 0, 1):
            raise BicliqueError(f'Reduced cubic needs a2 in {{-1, 0, 1}}, got {self.a2}')

    @property
    def coefficients(self) -> Tuple[int, int, int, int]:
        """Constant term first."""
        return (self.a0, self.a1, self.a2, 1)


Params = Tuple[int, int, int, int, int, int]


@dataclasses.dataclass(frozen=True)
class Candidate:
    """A point of a case scan, feasible or not."""
    t: int
    i: int
    n: int
    params: Params


class Case:
    """One family of (3,k)-biclique parameters for a kind of reduced cubic."""
    a2: int

    def params(self, p: ReducedCubic, i: int, n: int) -> Params:
        """Return (a, b, c, d, e, f) for the given i and n."""
        raise NotImplementedError()

    def scan(self, p: ReducedCubic, min_n: int, cap: int) -> Iterator[Candidate]:
        """Yield candidate assignments in a fixed deterministic order.

        Candidates may still be infeasible; the caller tests them with feasible().
        """
        raise NotImplementedError()

    @staticmethod
    def feasible(params: Params, i: int, n: int, min_n: int) -> bool:
        """All six parameters non-negative, n >= 2i+3 and n >= min_n."""
        return (all(value >= 0 for value in params) and i >= 0
                and n >= 2 * i + 3 and n >= min_n)

    @staticmethod
    def linear_window(values: Callable[[int], Sequence[int]],
                      low: int) -> Optional[Tuple[int, float]]:
        """Integers x >= low at which every entry of values(x) is non-negative.

        Each entry must be linear in x, so values(0) and values(1) fix it.
        Returns (low, high) with high possibly inf, or None if there is no such x.
        """
        high = math.inf
        for value, next_value in zip(values(0), values(1)):
            slope = next_value - value
            if slope > 0:
                low = max(low, -(value // slope))
            elif slope < 0:
                high = min(high, value // -slope)
            elif value < 0:
                return None
        if low > high:
            return None
        return low, high


class RowCase(Case):
    """A case scanned row by row: t = first_row, first_row + 1, ... and i >= 0.

    n is linear in i along a row and so is every parameter, so each row's
    feasible i form one window.
    """

    def first_row(self, p: ReducedCubic) -> int:
        """Rows before this one have a parameter negative for every i."""
        return 0

    def row_n(self, p: ReducedCubic, t: int, i: int) -> int:
        raise NotImplementedError()

    def row_window(self, p: ReducedCubic, t: int, min_n: int) -> Optional[Tuple[int, float]]:
        """Smallest and largest feasible i on row t."""
        def values(i: int) -> Tuple[int, ...]:
            n = self.row_n(p, t, i)
            return self.params(p, i, n) + (n - 2 * i - 3, n - min_n)
        return self.linear_window(values, 0)

    def scan(self, p: ReducedCubic, min_n: int, cap: int) -> Iterator[Candidate]:
        """Feasible i of each row in increasing order.

        A row with none yields its i = 0 point instead, so the caller still
        sees where the scan has got to. cap counts rows after the first.
        """
        start = self.first_row(p)
        for t in range(start, start + cap + 1):
            bounds = self.row_window(p, t, min_n)
            if bounds is None:
                n = self.row_n(p, t, 0)
                yield Candidate(t=t, i=0, n=n, params=self.params(p, 0, n))
                continue
            low, high = bounds
            indices = itertools.count(low) if high == math.inf else range(low, int(high) + 1)
            for i in indices:
                n = self.row_n(p, t, i)
                yield Candidate(t=t, i=i, n=n, params=self.params(p, i, n))
