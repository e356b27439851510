"""Hecke matrices on S_k(SL_2(Z)), characteristic polynomials and Newton polygons."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..fplinear.fields import is_prime, valuation
from .cache import QExpansionCache
from .qexp import PrecisionError, dim_cusp_forms, victor_miller_basis


@dataclass(frozen=True)
class HeckeMatrix:
    """T_p in the Victor Miller basis; column j holds a_1..a_d of T_p f_j."""

    p: int
    k: int
    entries: tuple[tuple[int, ...], ...]
    precision: int
    basis: str = "victor-miller"

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __matmul__(self, other: HeckeMatrix) -> tuple[tuple[int, ...], ...]:
        cols = list(zip(*other.entries))
        return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.entries)

    def charpoly(self) -> list[int]:
        return charpoly(self.entries)


def hecke_matrix(p: int, k: int, precision: int | None = None,
                 cache: QExpansionCache | None = None) -> HeckeMatrix:
    """a_n(T_p f) = a_{np}(f) + p^(k-1) a_{n/p}(f), read off for n = 1..d."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    d = dim_cusp_forms(k)
    N = p * d if precision is None else precision
    if N < p * d:
        raise PrecisionError(f"T_{p} on S_{k} needs precision >= p*d = {p * d}, got {N}")
    basis = victor_miller_basis(k, N, cache)
    pk = p ** (k - 1)
    cols = []
    for f in basis:
        cols.append([f[n * p] + (pk * f[n // p] if n % p == 0 else 0) for n in range(1, d + 1)])
    entries = tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))
    return HeckeMatrix(p, k, entries, N)


def charpoly(A: Sequence[Sequence[int]]) -> list[int]:
    """det(X - A), coefficients from the constant term up (Berkowitz, division free)."""
    n = len(A)
    q = [1]  # descending coefficients of the leading i x i minor's char poly
    for i in range(n):
        a = A[i][i]
        R = [A[i][j] for j in range(i)]
        C = [A[j][i] for j in range(i)]
        # first column of the Toeplitz matrix: 1, -a, -R C, -R B C, ..., -R B^(i-1) C
        col = [1, -a]
        v = C
        for _ in range(i):
            col.append(-sum(x * y for x, y in zip(R, v)))
            v = [sum(A[r][c] * v[c] for c in range(i)) for r in range(i)]
        q = [sum(col[r - c] * q[c] for c in range(min(r, i) + 1) if r - c < len(col)) for r in range(i + 2)]
    return q[::-1]


@dataclass(frozen=True)
class NewtonPolygon:
    """Root valuations (slope, multiplicity) with slopes strictly increasing."""

    p: int
    segments: tuple[tuple[Fraction, int], ...]

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.segments)

    def slopes(self) -> list[Fraction]:
        return [s for s, m in self.segments for _ in range(m)]

    def mass(self) -> Fraction:
        return sum((s * m for s, m in self.segments), Fraction(0))

    def contains(self, slope) -> bool:
        return any(s == Fraction(slope) for s, _ in self.segments)

    def in_open_interval(self, lo=0, hi=1) -> list[Fraction]:
        return [s for s, _ in self.segments if Fraction(lo) < s < Fraction(hi)]

    def all_zero(self) -> bool:
        return all(s == 0 for s, _ in self.segments)

    def format(self) -> str:
        return " ".join(_frac(s) + (f" (x{m})" if m > 1 else "") for s, m in self.segments)

    def to_list(self) -> list[dict]:
        return [{"slope": _frac(s), "multiplicity": m} for s, m in self.segments]


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def newton_slopes(coeffs: Sequence[int], p: int) -> NewtonPolygon:
    """Newton polygon of sum c_i X^i (``coeffs`` from the constant term up)."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ValueError("the zero polynomial has no Newton polygon")
    if valuation(cs[-1], p):
        raise ValueError("leading coefficient must be a p-adic unit")
    if cs[0] == 0:
        raise ValueError("constant term is zero: X = 0 is a root of infinite valuation")
    pts = [(i, valuation(c, p)) for i, c in enumerate(cs) if c]
    hull: list[tuple[int, int]] = []
    for pt in pts:
        # keep the lower hull convex; drop collinear middle points
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    segs = [(Fraction(y1 - y2, x2 - x1), x2 - x1) for (x1, y1), (x2, y2) in zip(hull, hull[1:])]
    return NewtonPolygon(p, tuple(reversed(segs)))


def slope_spectrum(p: int, k: int, precision: int | None = None,
                   cache: QExpansionCache | None = None) -> NewtonPolygon:
    if dim_cusp_forms(k) == 0:
        raise ValueError(f"S_{k} is zero")
    return newton_slopes(hecke_matrix(p, k, precision, cache).charpoly(), p)


@dataclass(frozen=True)
class SweepRow:
    p: int
    k: int
    dim: int
    polygon: NewtonPolygon | None

    @property
    def ordinary(self) -> bool:
        return self.polygon is None or self.polygon.all_zero()

    def format(self) -> str:
        slopes = self.polygon.format() if self.polygon else "-"
        return f"{self.p}, {self.k}, {self.dim}, {slopes}"


@dataclass(frozen=True)
class SweepReport:
    p_max: int
    rows: tuple[SweepRow, ...]

    @property
    def all_ordinary(self) -> bool:
        return all(r.ordinary for r in self.rows)

    def failures(self) -> list[SweepRow]:
        return [r for r in self.rows if not r.ordinary]


def ordinarity_sweep(p_max: int = 53, cache: QExpansionCache | None = None) -> SweepReport:
    """Slopes of T_p on S_k for odd p <= p_max and even 12 <= k <= p+1."""
    rows = []
    for p in range(3, p_max + 1):
        if not is_prime(p):
            continue
        for k in range(12, p + 2, 2):
            d = dim_cusp_forms(k)
            rows.append(SweepRow(p, k, d, slope_spectrum(p, k, cache=cache) if d else None))
    return SweepReport(p_max, tuple(rows))
