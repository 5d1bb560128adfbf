"""Case a2 = -1."""
from bicliques import common


class NegativeCase(common.RowCase):
    """x^3 - x^2 + a1*x + a0.

    Row t puts n = ceil(-a0/2) + 2i + t. Along it a and c drop by 3 per step
    of i and e rises by 4, while b = ceil(-a0/2) + t - 3 does not move.
    """
    a2 = -1

    def params(self, p: common.ReducedCubic, i: int, n: int) -> common.Params:
        a1, a0 = p.a1, p.a0
        w = 2 * n + a0
        return (
            w * w - 11 * a0 + 35 + a1 - (8 * a0 - 45) * i - (16 * i + 24) * n + 16 * i * i,
            -2 * i + n - 3,
            w * w - 13 * a0 + 46 + a1 - (8 * a0 - 53) * i - (16 * i + 28) * n + 16 * i * i,
            i + 1,
            -w * w + 12 * a0 - 41 - a1 + (8 * a0 - 50) * i + (16 * i + 27) * n - 16 * i * i,
            i,
        )

    def first_row(self, p: common.ReducedCubic) -> int:
        return max(0, 3 + p.a0 // 2)

    def row_n(self, p: common.ReducedCubic, t: int, i: int) -> int:
        return -(p.a0 // 2) + 2 * i + t  # ceil(-a0/2)
