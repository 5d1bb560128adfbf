"""Case a2 = 0."""
from bicliques import common


class ZeroCase(common.RowCase):
    """x^3 + a1*x + a0.

    Row t puts n = -a0 + 3i + t; a and c drop by 5 per step of i and e rises by 7.
    """
    a2 = 0

    def params(self, p: common.ReducedCubic, i: int, n: int) -> common.Params:
        a1, a0 = p.a1, p.a0
        w = n + a0
        return (
            w * w + a1 + 14 + 19 * i + 9 * i * i - (6 * i + 8) * n - (6 * i + 6) * a0,
            -2 * i + n - 3,
            w * w + a1 + 20 + 25 * i + 9 * i * i - (6 * i + 10) * n - (6 * i + 8) * a0,
            i + 1,
            -w * w - a1 - 18 - 23 * i - 9 * i * i + (6 * i + 10) * n + (6 * i + 7) * a0,
            i,
        )

    def row_n(self, p: common.ReducedCubic, t: int, i: int) -> int:
        return -p.a0 + 3 * i + t
