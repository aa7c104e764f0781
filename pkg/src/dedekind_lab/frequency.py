"""Frequency tables of the diagonal lattice points.

``freq1d_direct`` / ``freq2d_direct`` count points directly and are the
canonical definitions. ``freq1d_appendix`` / ``freq2d_appendix`` follow the
published step-by-step procedures (floor differences for 1-D, greedy
marginal filling for 2-D) and are checked against direct counting.

Boxes are half-open: point ``m`` sits in box ``floor(m b / a)``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class FreqTable1D:
    a: int
    b: int
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))

    def moment_sum(self, k: int) -> int:
        """sum_j j^k f(j)."""
        return sum(j**k * n for j, n in enumerate(self.counts))

    def to_csv(self) -> str:
        return ",".join(map(str, self.counts))


@dataclass(frozen=True)
class FreqTable2D:
    a: int
    b: int
    c: int
    counts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(tuple(r) for r in self.counts))

    @property
    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.counts)

    @property
    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.counts))

    def mixed_sum(self) -> int:
        """sum_{j,k} j k f(j, k)."""
        return sum(j * k * n for j, row in enumerate(self.counts) for k, n in enumerate(row))

    def support(self) -> list[tuple[int, int]]:
        return [(j, k) for j, row in enumerate(self.counts) for k, n in enumerate(row) if n]

    def is_staircase(self) -> bool:
        """Nonzero cells, read in row-major order, never step left."""
        cells = self.support()
        return all(k1 <= k2 and j1 <= j2 for (j1, k1), (j2, k2) in zip(cells, cells[1:]))

    def to_csv(self) -> str:
        """Marginal-bordered layout: header of k indices, j index first,
        row totals last, column totals in the final row, ``a`` bottom-right."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["j\\k", *range(self.c), "total"])
        for j, (row, tot) in enumerate(zip(self.counts, self.row_sums)):
            w.writerow([j, *row, tot])
        w.writerow(["total", *self.col_sums, self.a])
        return buf.getvalue()


@dataclass(frozen=True)
class IndicatorVector:
    a: int
    b: int
    bits: tuple[int, ...]


def _check_positive(**kw):
    for name, v in kw.items():
        if v < 1:
            raise DomainError(f"{name} must be >= 1, got {v}")


def freq1d_direct(a: int, b: int) -> FreqTable1D:
    _check_positive(a=a, b=b)
    counts = [0] * b
    for m in range(a):
        counts[(m * b) // a] += 1
    return FreqTable1D(a, b, tuple(counts))


def freq1d_appendix(a: int, b: int, literal: bool = False) -> FreqTable1D:
    """Floor-difference procedure with the boundary correction pass.

    ``[x r]`` with ``r = a/b`` is evaluated exactly as ``(x a) // b``.
    ``literal=True`` runs STEP 1 exactly as printed, which is wrong when b | a.
    """
    _check_positive(a=a, b=b)
    if b > a:
        raise DomainError(f"appendix procedure needs b <= a, got a={a}, b={b}")
    # STEP 0
    fl = lambda i: (i * a) // b  # [i*r]
    l = a - b * fl(1)
    f = [0] * b
    # STEP 1. As printed, f[0] = 1+[r] and f[b-1] = a-1-[(b-1)r] are off by one
    # in opposite directions when l = 0 (r integral), and STEP 2 is skipped in
    # that case; use f[0] = [r] and f[b-1] = a-(b-1)[r] there instead.
    for i in range(1, b - 1):
        f[i] = fl(i + 1) - fl(i)
    if l == 0 and not literal:
        f[0] = fl(1)
        f[b - 1] = a - fl(b - 1)  # b = 1 also lands here: f = [a]
        return FreqTable1D(a, b, tuple(f))
    f[0] = 1 + fl(1)
    f[b - 1] = a - 1 - fl(b - 1)
    # STEP 2. When (i+1)r is an integer that point opens box i+1, not box i.
    if l != 0 and b != 2:
        for i in range(1, b - 1):
            if ((i + 1) * a) % b == 0:
                f[i] -= 1
                f[i + 1] += 1
    # STEP 3
    return FreqTable1D(a, b, tuple(f))


def freq2d_direct(a: int, b: int, c: int) -> FreqTable2D:
    _check_positive(a=a, b=b, c=c)
    ct = [[0] * c for _ in range(b)]
    for m in range(a):
        ct[(m * b) // a][(m * c) // a] += 1
    return FreqTable2D(a, b, c, ct)


def freq2d_appendix(a: int, b: int, c: int) -> FreqTable2D:
    """Greedy fill of the joint table from its two marginals.

    Indices below are 0-based; the procedure's ``CT[i, j]`` is ``ct[i-1][j-1]``.
    The first-column bound ``f_c[1]`` is read as the first column's marginal.
    """
    _check_positive(a=a, b=b, c=c)
    if b > a or c > a:
        raise DomainError(f"appendix procedure needs b, c <= a, got ({a}, {b}, {c})")
    # STEP 0 / STEP 1: marginals
    fb = freq1d_appendix(a, b).counts
    fc = freq1d_appendix(a, c).counts
    ct = [[0] * c for _ in range(b)]
    t1 = [0] * b  # running row totals
    t2 = [0] * c  # running column totals
    ct[0][0] = min(fb[0], fc[0])
    t2[0] += ct[0][0]
    # STEP 2: first column
    for i in range(1, b):
        ct[i][0] = max(0, min(fc[0] - t2[0], fb[i]))
        t2[0] += ct[i][0]
    for i in range(b):
        t1[i] = ct[i][0]
    # STEP 3: first row
    for j in range(1, c):
        ct[0][j] = max(0, min(fb[0] - t1[0], fc[j]))
        t1[0] += ct[0][j]
        t2[j] += ct[0][j]
    # STEP 4: interior, row-major
    for i in range(1, b):
        for j in range(1, c):
            cty = max(0, min(fb[i] - t1[i], fc[j]))
            ctx = max(0, min(fc[j] - t2[j], fb[i]))
            ct[i][j] = min(ctx, cty)
            t1[i] += ct[i][j]
            t2[j] += ct[i][j]
    return FreqTable2D(a, b, c, ct)


def indicator(a: int, b: int) -> IndicatorVector:
    """I(j) = f(j) - floor(a/b), always 0 or 1."""
    t = freq1d_direct(a, b)
    return IndicatorVector(a, b, tuple(n - a // b for n in t.counts))


def compare_tables(x, y) -> list[tuple]:
    """Cells where two tables of the same shape disagree: ``(index, x, y)``."""
    if isinstance(x, FreqTable1D):
        return [(j, p, q) for j, (p, q) in enumerate(zip(x.counts, y.counts)) if p != q]
    out = []
    for j, (rx, ry) in enumerate(zip(x.counts, y.counts)):
        out.extend(((j, k), p, q) for k, (p, q) in enumerate(zip(rx, ry)) if p != q)
    return out
