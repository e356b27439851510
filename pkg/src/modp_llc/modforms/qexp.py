"""Integer q-expansions of level 1 forms: E4, E6, Delta and the Victor Miller basis."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cache import QExpansionCache


class PrecisionError(ValueError):
    pass


@dataclass(frozen=True)
class QExpansion:
    """sum_{n=0}^{N} a_n q^n + O(q^(N+1)) for a form of the given weight."""

    weight: int
    precision: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.precision + 1:
            raise ValueError(f"expected {self.precision + 1} coefficients, got {len(self.coeffs)}")

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.precision:
            raise PrecisionError(f"coefficient a_{n} is beyond precision {self.precision}")
        return self.coeffs[n]

    def is_cuspidal(self) -> bool:
        return self.coeffs[0] == 0

    def truncate(self, N: int) -> QExpansion:
        if N > self.precision:
            raise PrecisionError(f"cannot raise precision from {self.precision} to {N}")
        return QExpansion(self.weight, N, self.coeffs[:N + 1])

    def _common(self, other: QExpansion) -> int:
        if self.weight != other.weight:
            raise ValueError(f"weights differ: {self.weight} vs {other.weight}")
        return min(self.precision, other.precision)

    def __add__(self, other: QExpansion) -> QExpansion:
        N = self._common(other)
        return QExpansion(self.weight, N, tuple(a + b for a, b in zip(self.coeffs[:N + 1], other.coeffs)))

    def __sub__(self, other: QExpansion) -> QExpansion:
        N = self._common(other)
        return QExpansion(self.weight, N, tuple(a - b for a, b in zip(self.coeffs[:N + 1], other.coeffs)))

    def scale(self, c: int) -> QExpansion:
        return QExpansion(self.weight, self.precision, tuple(c * a for a in self.coeffs))

    def __mul__(self, other: QExpansion) -> QExpansion:
        N = min(self.precision, other.precision)
        return QExpansion(self.weight + other.weight, N, tuple(_mul_trunc(self.coeffs, other.coeffs, N)))

    def __pow__(self, e: int) -> QExpansion:
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = one(self.precision)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __str__(self):
        terms = []
        for n, a in enumerate(self.coeffs):
            if a:
                mono = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
                terms.append(f"{a}{'*' if mono else ''}{mono}")
        return (" + ".join(terms) or "0") + f" + O(q^{self.precision + 1})"


def _mul_trunc(a: Sequence[int], b: Sequence[int], N: int) -> list[int]:
    out = [0] * (N + 1)
    nz = [(j, y) for j, y in enumerate(b[:N + 1]) if y]
    for i, x in enumerate(a[:N + 1]):
        if x:
            for j, y in nz:
                if i + j > N:
                    break
                out[i + j] += x * y
    return out


def one(N: int) -> QExpansion:
    return QExpansion(0, N, (1,) + (0,) * N)


def divisor_power_sums(N: int, k: int) -> list[int]:
    """sigma_k(n) for n = 0..N (index 0 unused, set to 0)."""
    sig = [0] * (N + 1)
    for d in range(1, N + 1):
        dk = d ** k
        for m in range(d, N + 1, d):
            sig[m] += dk
    return sig


def _eisenstein(k: int, c: int, N: int) -> QExpansion:
    sig = divisor_power_sums(N, k - 1)
    return QExpansion(k, N, (1,) + tuple(c * s for s in sig[1:]))


def _delta(N: int) -> QExpansion:
    # q * prod_{n<=N} (1 - q^n)^24; factors with n > N do not reach q^N
    eta = [0] * (N + 1)
    eta[0] = 1
    for n in range(1, N + 1):
        for i in range(N, n - 1, -1):
            eta[i] -= eta[i - n]
    e = QExpansion(0, N, tuple(eta)) ** 24
    return QExpansion(12, N, (0,) + e.coeffs[:N])


_BUILDERS = {
    "E4": (4, lambda N: _eisenstein(4, 240, N)),
    "E6": (6, lambda N: _eisenstein(6, -504, N)),
    "Delta": (12, _delta),
}


def series(name: str, N: int, cache: QExpansionCache | None = None) -> QExpansion:
    """E4, E6 or Delta to precision N, read from or written to ``cache``."""
    if name not in _BUILDERS:
        raise KeyError(f"unknown series {name!r}")
    weight, build = _BUILDERS[name]
    if cache is None:
        return build(N)
    coeffs = cache.get_or_create(name, weight, N, lambda: build(N).coeffs)
    return QExpansion(weight, N, tuple(coeffs))


def E4(N: int, cache: QExpansionCache | None = None) -> QExpansion:
    return series("E4", N, cache)


def E6(N: int, cache: QExpansionCache | None = None) -> QExpansion:
    return series("E6", N, cache)


def Delta(N: int, cache: QExpansionCache | None = None) -> QExpansion:
    return series("Delta", N, cache)


def eisenstein_self_check(N: int, cache: QExpansionCache | None = None) -> bool:
    """E4^3 - E6^2 == 1728 Delta to precision N."""
    return (E4(N, cache) ** 3 - E6(N, cache) ** 2).coeffs == Delta(N, cache).scale(1728).coeffs


def dim_cusp_forms(k: int) -> int:
    if k < 0 or k % 2:
        return 0
    d = k // 12 - 1 if k % 12 == 2 else k // 12
    return max(d, 0)


# k mod 12 -> (a, b) with k = 12 l + 4a + 6b and l = dim S_k
_VM_SHAPE = {0: (0, 0), 2: (2, 1), 4: (1, 0), 6: (0, 1), 8: (2, 0), 10: (1, 1)}


def victor_miller_basis(k: int, N: int, cache: QExpansionCache | None = None) -> list[QExpansion]:
    """Integral basis f_1..f_d of S_k with a_i(f_j) = delta_ij for 1 <= i, j <= d."""
    d = dim_cusp_forms(k)
    if d == 0:
        return []
    if N < d:
        raise PrecisionError(f"precision {N} is too small to echelonize a basis of dimension {d}")
    a, b = _VM_SHAPE[k % 12]
    ell = (k - 4 * a - 6 * b) // 12
    assert ell == d
    e4, e6, delta = E4(N, cache), E6(N, cache), Delta(N, cache)
    e6sq = e6 * e6
    tail = (e4 ** a) * (e6 ** b)
    gs = []
    # g_j = Delta^j E6^(2(l-j)) E4^a E6^b = q^j + O(q^(j+1))
    dpow = delta
    for j in range(1, d + 1):
        gs.append(dpow * (e6sq ** (d - j)) * tail)
        dpow = dpow * delta
    for j in range(d - 1, -1, -1):
        for i in range(j + 1, d):
            c = gs[j][i + 1]
            if c:
                gs[j] = gs[j] - gs[i].scale(c)
    return gs
