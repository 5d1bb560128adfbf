"""Exact univariate polynomials over the integers."""
import dataclasses
import math
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from bicliques import common


def _trim(coefficients: Iterable[int]) -> Tuple[int, ...]:
    coeffs = list(coefficients)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclasses.dataclass(frozen=True)
class IntPoly:
    """Dense polynomial, coefficients[i] multiplies x^i. Zero is ()."""
    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', _trim(int(c) for c in self.coefficients))

    @classmethod
    def constant(cls, value: int) -> 'IntPoly':
        return cls((value,))

    @classmethod
    def x(cls) -> 'IntPoly':
        return cls((0, 1))

    @classmethod
    def linear(cls, slope: int, intercept: int) -> 'IntPoly':
        """slope*x + intercept."""
        return cls((intercept, slope))

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        if self.is_zero():
            raise ValueError('Degree of the zero polynomial is undefined')
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        if self.is_zero():
            raise ValueError('Zero polynomial has no leading coefficient')
        return self.coefficients[-1]

    def is_monic(self) -> bool:
        return not self.is_zero() and self.leading == 1

    def coeff(self, power: int) -> int:
        """Coefficient of x^power, zero outside the stored range."""
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return 0

    def __add__(self, other: 'IntPoly') -> 'IntPoly':
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(size)))

    def __neg__(self) -> 'IntPoly':
        return IntPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: 'IntPoly') -> 'IntPoly':
        return self + (-other)

    def __mul__(self, other: Union['IntPoly', int]) -> 'IntPoly':
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coefficients))
        if self.is_zero() or other.is_zero():
            return IntPoly()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return IntPoly(tuple(product))

    __rmul__ = __mul__

    def __call__(self, value: int) -> int:
        return eval_int(self, value)

    def divmod_monic(self, divisor: 'IntPoly') -> Tuple['IntPoly', 'IntPoly']:
        """Exact long division by a monic polynomial."""
        if not divisor.is_monic():
            raise ValueError('Divisor must be monic')
        remainder = list(self.coefficients)
        shift = len(remainder) - len(divisor.coefficients)
        if shift < 0:
            return IntPoly(), self
        quotient = [0] * (shift + 1)
        for power in range(shift, -1, -1):
            factor = remainder[power + divisor.degree]
            quotient[power] = factor
            if factor:
                for i, c in enumerate(divisor.coefficients):
                    remainder[power + i] -= factor * c
        return IntPoly(tuple(quotient)), IntPoly(tuple(remainder))

    def format(self) -> str:
        """Human readable form, highest power first."""
        if self.is_zero():
            return '0'
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                base = 'x' if power == 1 else f'x^{power}'
                body = base if magnitude == 1 else f'{magnitude}*{base}'
            terms.append(f'{sign} {body}')
        text = ' '.join(terms)
        return text[2:] if text.startswith('+ ') else '-' + text[2:]

    def __str__(self) -> str:
        return self.format()


@dataclasses.dataclass(frozen=True)
class FFSeries:
    """Sum of c_n * (x)_n, stored sparsely without zero entries."""
    entries: Dict[int, int] = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for n, c in self.entries.items():
            if n < 0:
                raise ValueError(f'Falling factorial index must be non-negative, got {n}')
            if c != 0:
                cleaned[int(n)] = int(c)
        object.__setattr__(self, 'entries', dict(sorted(cleaned.items())))

    def __getitem__(self, n: int) -> int:
        return self.entries.get(n, 0)


def falling(q: int, m: int) -> int:
    """(q)_m = q(q-1)...(q-m+1) for any integer q."""
    if m < 0:
        raise ValueError(f'Falling factorial length must be non-negative, got {m}')
    result = 1
    for step in range(m):
        result *= q - step
    return result


def binomial(n: int, r: int) -> int:
    """Generalized binomial (n)_r / r!, zero for r < 0."""
    if r < 0:
        return 0
    return falling(n, r) // math.factorial(r)


def falling_factorial(m: int, shift: int = 0) -> IntPoly:
    """(x-shift)(x-shift-1)...(x-shift-m+1)."""
    if m < 0:
        raise ValueError(f'Falling factorial length must be non-negative, got {m}')
    result = IntPoly.constant(1)
    for step in range(m):
        result = result * IntPoly.linear(1, -(shift + step))
    return result


def compose_linear(p: IntPoly, slope: int, intercept: int) -> IntPoly:
    """p(slope*x + intercept), by Horner's rule."""
    inner = IntPoly.linear(slope, intercept)
    result = IntPoly()
    for c in reversed(p.coefficients):
        result = result * inner + IntPoly.constant(c)
    return result


def shift_poly(p: IntPoly, c: int) -> IntPoly:
    """p(x + c)."""
    return compose_linear(p, 1, c)


def reflect_poly(p: IntPoly, c: int) -> IntPoly:
    """(-1)^deg(p) * p(-x + c)."""
    if p.is_zero():
        return p
    reflected = compose_linear(p, -1, c)
    return -reflected if p.degree % 2 else reflected


def eval_int(p: IntPoly, q: int) -> int:
    """Exact value p(q)."""
    value = 0
    for c in reversed(p.coefficients):
        value = value * q + c
    return value


def to_complete_graph_basis(p: IntPoly) -> FFSeries:
    """Coefficients c_n with p = sum c_n (x)_n.

    Repeated synthetic division by x, x-1, x-2, ...; the n-th remainder is c_n.
    """
    entries = {}
    current = list(p.coefficients)
    root = 0
    while current:
        # Synthetic division of current by (x - root).
        quotient = [0] * (len(current) - 1)
        carry = 0
        for power in range(len(current) - 1, -1, -1):
            carry = carry * root + current[power]
            if power:
                quotient[power - 1] = carry
        entries[root] = carry
        current = list(_trim(quotient))
        root += 1
    return FFSeries(entries)


def from_complete_graph_basis(series: FFSeries) -> IntPoly:
    """Inverse of to_complete_graph_basis."""
    result = IntPoly()
    for n, c in series.entries.items():
        result = result + falling_factorial(n) * c
    return result


def to_json(p: IntPoly) -> List[str]:
    """Constant term first, decimal strings."""
    return [str(c) for c in p.coefficients]


def from_json(values: Sequence[Union[str, int]]) -> IntPoly:
    try:
        return IntPoly(tuple(int(v) for v in values))
    except (TypeError, ValueError) as err:
        raise common.BicliqueError(f'Invalid polynomial coefficients {values!r}') from err
