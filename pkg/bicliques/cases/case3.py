"""Case a2 = 1."""
from typing import Iterator, Optional, Tuple

from bicliques import common


class PositiveCase(common.Case):
    """x^3 + x^2 + a1*x + a0.

    Here t runs over 0, -1, -2, ... with i = floor(a0/2) - t, starting at the
    first t that makes i non-negative. Every parameter is linear in n, so for
    fixed i the feasible n form a window, and the scan takes its values in
    increasing order.
    """
    a2 = 1

    def params(self, p: common.ReducedCubic, i: int, n: int) -> common.Params:
        a1, a0 = p.a1, p.a0
        return (
            a0 * a0 + 5 - a0 + a1 + (3 - 4 * a0) * i - 2 * n + 4 * i * i,
            -2 * i + n - 3,
            a0 * a0 + 6 - 3 * a0 + a1 + (7 - 4 * a0) * i - 2 * n + 4 * i * i,
            i + 1,
            -a0 * a0 - 7 + 2 * a0 - a1 - (6 - 4 * a0) * i + 3 * n - 4 * i * i,
            i,
        )

    def window(self, p: common.ReducedCubic, i: int, min_n: int) -> Optional[Tuple[int, int]]:
        """Smallest and largest n keeping all six parameters non-negative."""
        bounds = self.linear_window(lambda n: self.params(p, i, n), max(min_n, 2 * i + 3))
        if bounds is None:
            return None
        return bounds[0], int(bounds[1])

    def scan(self, p: common.ReducedCubic, min_n: int, cap: int) -> Iterator[common.Candidate]:
        start = max(0, -(p.a0 // 2))
        for step in range(start, start + cap + 1):
            t = -step
            i = p.a0 // 2 - t
            bounds = self.window(p, i, min_n)
            if bounds is None:
                n = max(min_n, 2 * i + 3)
                yield common.Candidate(t=t, i=i, n=n, params=self.params(p, i, n))
                continue
            for n in range(bounds[0], bounds[1] + 1):
                yield common.Candidate(t=t, i=i, n=n, params=self.params(p, i, n))
