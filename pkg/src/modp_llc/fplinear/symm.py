"""Homogeneous forms of degree r in x, y and the GL_2 action on them.

A form is stored by its coefficient vector, index i holding the coefficient
of x^(r-i) y^i.  A matrix g = (a b; c d) acts by

    g . x^(r-i) y^i = (a x + c y)^(r-i) (b x + d y)^i,

i.e. (g F)(x, y) = F(a x + c y, b x + d y), which is a left action.
Matrices are 4-tuples ``(a, b, c, d)`` of ints.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np
from .fields import FieldContext, IntegerModRing

Ring = FieldContext | IntegerModRing
Matrix = tuple[int, int, int, int]


def _safe_int64(r: int, N: int) -> bool:
    # every convolution sum stays below 2^62
    return 0 < N and (r + 1) * (N - 1) ** 2 < 2 ** 62


def _linear_powers(a: int, c: int, n: int, N: int) -> list[np.ndarray]:
    # coefficients (indexed by the power of y) of (a x + c y)^j for j = 0..n
    dtype = np.int64 if _safe_int64(n, N) else object
    lin = np.array([a, c], dtype=dtype)
    pows = [np.array([1], dtype=dtype)]
    for _ in range(n):
        nxt = np.convolve(pows[-1], lin)
        pows.append(nxt % N if N else nxt)
    return pows


@lru_cache(maxsize=8192)
def action_array(g: Matrix, r: int, N: int) -> np.ndarray:
    """Matrix of F(x, y) -> F(ax+cy, bx+dy) on degree-r forms, entries mod N.

    ``N == 0`` keeps exact integers.  Row j, column i holds the coefficient of
    x^(r-j) y^j in the image of x^(r-i) y^i.  The result is read-only.
    """
    a, b, c, d = (v % N if N else v for v in g)
    P = _linear_powers(a, c, r, N)
    Q = _linear_powers(b, d, r, N)
    cols = [np.convolve(P[r - i], Q[i]) for i in range(r + 1)]
    M = np.stack(cols, axis=1)
    if N:
        M %= N
    M.setflags(write=False)
    return M


def action_matrix(g: Matrix, r: int, N: int) -> tuple[tuple[int, ...], ...]:
    """``action_array`` as nested tuples of Python ints."""
    return tuple(tuple(int(x) for x in row) for row in action_array(tuple(g), r, N))


def det(g: Matrix) -> int:
    a, b, c, d = g
    return a * d - b * c


def matmul(g: Matrix, h: Matrix, N: int = 0) -> Matrix:
    a, b, c, d = g
    e, f, u, w = h
    out = (a * e + b * u, a * f + b * w, c * e + d * u, c * f + d * w)
    return tuple(v % N for v in out) if N else out


@dataclass(frozen=True)
class SymmElement:
    """An element of Symm^r over a finite coefficient ring."""

    ring: Ring
    r: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("degree must be >= 0")
        if len(self.coeffs) != self.r + 1:
            raise ValueError(f"expected {self.r + 1} coefficients, got {len(self.coeffs)}")
        if self.ring.is_zmod:
            object.__setattr__(self, "coeffs", tuple(c % self.ring.int_modulus for c in self.coeffs))
        elif any(not 0 <= c < self.ring.order for c in self.coeffs):
            raise ValueError("coefficients must be encoded field elements")

    @classmethod
    def zero(cls, ring: Ring, r: int) -> SymmElement:
        return cls(ring, r, (0,) * (r + 1))

    @classmethod
    def monomial(cls, ring: Ring, r: int, i: int, coeff: int = 1) -> SymmElement:
        """coeff * x^(r-i) y^i."""
        if not 0 <= i <= r:
            raise ValueError(f"monomial index {i} out of range for degree {r}")
        cs = [0] * (r + 1)
        cs[i] = coeff
        return cls(ring, r, tuple(cs))

    @classmethod
    def x_power(cls, ring: Ring, r: int) -> SymmElement:
        return cls.monomial(ring, r, 0)

    @classmethod
    def y_power(cls, ring: Ring, r: int) -> SymmElement:
        return cls.monomial(ring, r, r)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def _check(self, other: SymmElement):
        if self.ring != other.ring or self.r != other.r:
            raise ValueError("elements live in different modules")

    def __add__(self, other: SymmElement) -> SymmElement:
        self._check(other)
        R = self.ring
        return SymmElement(R, self.r, tuple(R.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: SymmElement) -> SymmElement:
        self._check(other)
        R = self.ring
        return SymmElement(R, self.r, tuple(R.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> SymmElement:
        return SymmElement(self.ring, self.r, tuple(self.ring.neg(a) for a in self.coeffs))

    def scale(self, c: int) -> SymmElement:
        """Multiply by the ring element c."""
        R = self.ring
        return SymmElement(R, self.r, tuple(R.mul(c, a) for a in self.coeffs))

    def __mul__(self, other: SymmElement) -> SymmElement:
        if self.ring != other.ring:
            raise ValueError("elements live over different rings")
        R = self.ring
        out = [0] * (self.r + other.r + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = R.add(out[i + j], R.mul(a, b))
        return SymmElement(R, self.r + other.r, tuple(out))

    def divide_by_x(self) -> SymmElement:
        """Exact division by x; the y^r coefficient must vanish."""
        if self.r == 0 or self.coeffs[-1]:
            raise ValueError("form is not divisible by x")
        return SymmElement(self.ring, self.r - 1, self.coeffs[:-1])

    def reduce(self, ring: Ring) -> SymmElement:
        """Image under the reduction map Z/p^m -> F_p (or Z/p^m -> Z/p^m')."""
        return SymmElement(ring, self.r, tuple(ring.coerce(c) for c in self.coeffs))

    def __str__(self):
        R, r = self.ring, self.r
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "*".join(
                part for part in (
                    "" if r - i == 0 else ("x" if r - i == 1 else f"x^{r - i}"),
                    "" if i == 0 else ("y" if i == 1 else f"y^{i}"),
                ) if part
            )
            coef = R.format(c)
            if not mono:
                terms.append(coef)
            elif coef == "1":
                terms.append(mono)
            else:
                terms.append(f"({coef})*{mono}" if " " in coef else f"{coef}*{mono}")
        return " + ".join(terms) or "0"


def apply_matrix(M: Sequence[Sequence[int]], v: SymmElement) -> SymmElement:
    R = v.ring
    if R.is_zmod:
        N = R.int_modulus
        if isinstance(M, np.ndarray):
            vec = np.array(v.coeffs, dtype=M.dtype)
            coeffs = tuple(int(x) for x in (M @ vec) % N)
        else:
            coeffs = tuple(sum(m * c for m, c in zip(row, v.coeffs)) % N for row in M)
    else:
        coeffs = []
        for row in M:
            acc = 0
            for m, c in zip(row, v.coeffs):
                if m and c:
                    acc = R.add(acc, R.smul(int(m), c))
            coeffs.append(acc)
        coeffs = tuple(coeffs)
    return SymmElement(R, v.r, coeffs)


def substitute(v: SymmElement, g: Matrix) -> SymmElement:
    """v(ax+cy, bx+dy) for an arbitrary integer matrix, e.g. v(x, py - lam x)."""
    N = v.ring.int_modulus
    g = tuple(x % N for x in g)
    if g == (1, 0, 0, 1) or v.is_zero():
        return v
    return apply_matrix(action_array(g, v.r, N), v)


def act_gl2(g: Matrix, v: SymmElement, twist: int = 0) -> SymmElement:
    """The action of g on v, multiplied by det(g)^twist.

    g must be invertible over the coefficient ring, i.e. det(g) must be prime
    to p.
    """
    D = det(g)
    if D % v.ring.p == 0:
        raise ValueError(f"matrix {g} is not invertible mod {v.ring.p}")
    w = substitute(v, g)
    if twist:
        N = v.ring.int_modulus
        w = w.scale(v.ring.coerce(pow(D % N, twist % _unit_exponent(v.ring), N)))
    return w


def _unit_exponent(ring: Ring) -> int:
    # exponent of the unit group of the integer subring that det lives in
    if isinstance(ring, FieldContext):
        return ring.p - 1
    return (ring.p - 1) * ring.p ** (ring.m - 1)


def theta_bar(ring: Ring) -> SymmElement:
    """x y^p - y x^p, of degree p + 1."""
    p = ring.p
    cs = [0] * (p + 2)
    cs[p] = 1
    cs[1] = ring.neg(1)
    return SymmElement(ring, p + 1, tuple(cs))


def theta_bar_multiply(v: SymmElement) -> SymmElement:
    """theta_bar * v; twisted-equivariant: g(theta_bar v) = det(g) theta_bar (g v)."""
    return theta_bar(v.ring) * v


def monomials(ring: Ring, r: int) -> list[SymmElement]:
    return [SymmElement.monomial(ring, r, i) for i in range(r + 1)]
