"""Finite coefficient rings F_{p^f} and Z/p^m.

Elements are plain Python ints.  For F_{p^f} an element is the base-p
encoding ``c_0 + c_1 p + ... + c_{f-1} p^{f-1}`` of its coordinates in the
power basis of a fixed root of the modulus, so F_p sits inside as the ints
``0 .. p-1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(n: int) -> list[int]:
    return [q for q in range(2, n + 1) if is_prime(q)]


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    """Smallest generator of the cyclic group F_p^x."""
    if p == 2:
        return 1
    factors = [q for q in primes_up_to(p - 1) if (p - 1) % q == 0]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise ValueError(f"no primitive root mod {p}")


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


# -- polynomials over F_p as coefficient lists, low degree first -------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _poly_trim(a)
    inv_lead = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _poly_trim(a)
    return a


def is_irreducible(m: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(m)/2."""
    deg = len(m) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for cand in itertools.product(range(p), repeat=d):
            divisor = list(cand) + [1]
            if not _poly_mod(list(m), divisor, p):
                return False
    return True


@lru_cache(maxsize=None)
def least_irreducible(p: int, f: int) -> tuple[int, ...]:
    """Monic irreducible of degree f whose low coefficients have the least base-p code."""
    if f == 1:
        return (0, 1)
    for n in range(p ** f):
        low = [(n // p ** i) % p for i in range(f)]
        m = tuple(low + [1])
        if low[0] != 0 and is_irreducible(m, p):
            return m
    raise ValueError(f"no irreducible polynomial of degree {f} over F_{p}")


@dataclass(frozen=True)
class FieldContext:
    """The finite field F_{p^f} with a fixed defining polynomial."""

    p: int
    f: int = 1
    modulus: tuple[int, ...] | None = field(default=None)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.f < 1:
            raise ValueError("extension degree must be >= 1")
        if self.modulus is None:
            object.__setattr__(self, "modulus", least_irreducible(self.p, self.f))
        else:
            m = tuple(c % self.p for c in self.modulus)
            if len(m) != self.f + 1 or m[-1] != 1 or not is_irreducible(m, self.p):
                raise ValueError(f"modulus {self.modulus} is not monic irreducible of degree {self.f}")
            object.__setattr__(self, "modulus", m)

    def __repr__(self):
        return f"GF({self.p}^{self.f})" if self.f > 1 else f"GF({self.p})"

    # ring protocol shared with IntegerModRing
    @property
    def order(self) -> int:
        return self.p ** self.f

    @property
    def is_field(self) -> bool:
        return True

    @property
    def is_zmod(self) -> bool:
        """True when elements are residues mod ``int_modulus`` with ordinary arithmetic."""
        return self.f == 1

    @property
    def int_modulus(self) -> int:
        return self.p

    zero = 0
    one = 1

    def coerce(self, n: int) -> int:
        return n % self.p

    def elements(self) -> range:
        return range(self.order)

    def units(self) -> range:
        return range(1, self.order)

    def _digits(self, x: int) -> list[int]:
        return [(x // self.p ** i) % self.p for i in range(self.f)]

    def _from_digits(self, ds) -> int:
        return sum((d % self.p) * self.p ** i for i, d in enumerate(ds))

    def add(self, x: int, y: int) -> int:
        if self.f == 1:
            return (x + y) % self.p
        return self._from_digits(a + b for a, b in zip(self._digits(x), self._digits(y)))

    def sub(self, x: int, y: int) -> int:
        if self.f == 1:
            return (x - y) % self.p
        return self._from_digits(a - b for a, b in zip(self._digits(x), self._digits(y)))

    def neg(self, x: int) -> int:
        return self.sub(0, x)

    def smul(self, c: int, x: int) -> int:
        """Multiply x by the integer c (acting through F_p)."""
        if self.f == 1:
            return c * x % self.p
        return self._from_digits(c * d for d in self._digits(x))

    @cached_property
    def _tables(self) -> tuple[list[int], dict[int, int]]:
        q = self.order
        m = list(self.modulus)
        for gen in range(2, q):
            g = self._digits(gen)
            exp = [1]
            cur = [1]
            while True:
                prod = [0] * (len(cur) + len(g) - 1)
                for i, a in enumerate(cur):
                    for j, b in enumerate(g):
                        prod[i + j] += a * b
                cur = _poly_mod(prod, m, self.p) or [0]
                val = self._from_digits(cur)
                if val == 1:
                    break
                exp.append(val)
            if len(exp) == q - 1:
                return exp, {v: i for i, v in enumerate(exp)}
        raise AssertionError("F_q^x must be cyclic")

    def mul(self, x: int, y: int) -> int:
        if self.f == 1:
            return x * y % self.p
        if x == 0 or y == 0:
            return 0
        exp, log = self._tables
        return exp[(log[x] + log[y]) % (self.order - 1)]

    def inv(self, x: int) -> int:
        if (x % self.p if self.f == 1 else x) == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.f == 1:
            return pow(x, -1, self.p)
        exp, log = self._tables
        return exp[(-log[x]) % (self.order - 1)]

    def power(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inv(x), -e
        if self.f == 1:
            return pow(x, e, self.p)
        if x == 0:
            return 1 if e == 0 else 0
        exp, log = self._tables
        return exp[(log[x] * e) % (self.order - 1)]

    def sqrt(self, x: int) -> int | None:
        """Some square root of x, or None if x is not a square."""
        for y in self.elements():
            if self.mul(y, y) == x:
                return y
        return None

    @property
    def fp_generator(self) -> int:
        return primitive_root(self.p)

    def fp_log(self, c: int) -> int:
        """Exponent e in [0, p-2] with fp_generator^e == c, for c in F_p^x."""
        g = self.fp_generator
        x = 1
        for e in range(self.p - 1):
            if x == c:
                return e
            x = x * g % self.p
        raise ValueError(f"{c} is not a nonzero element of F_{self.p}")

    def random_element(self, rng) -> int:
        return rng.randrange(self.order)

    def format(self, x: int) -> str:
        if self.f == 1:
            return str(x)
        terms = [f"{d}*a^{i}" if i else str(d) for i, d in enumerate(self._digits(x)) if d]
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class IntegerModRing:
    """Z/p^m, used for integral (lattice) computations."""

    p: int
    m: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.m < 1:
            raise ValueError("exponent must be >= 1")

    def __repr__(self):
        return f"Z/{self.p}^{self.m}"

    @property
    def order(self) -> int:
        return self.p ** self.m

    int_modulus = order

    @property
    def is_field(self) -> bool:
        return self.m == 1

    is_zmod = True
    zero = 0
    one = 1

    def coerce(self, n: int) -> int:
        return n % self.order

    def elements(self) -> range:
        return range(self.order)

    def add(self, x, y):
        return (x + y) % self.order

    def sub(self, x, y):
        return (x - y) % self.order

    def neg(self, x):
        return -x % self.order

    def mul(self, x, y):
        return x * y % self.order

    smul = mul

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError(f"{x} is not a unit in {self!r}")
        return pow(x, -1, self.order)

    def random_element(self, rng) -> int:
        return rng.randrange(self.order)

    def format(self, x: int) -> str:
        return str(x)

    def residue_field(self) -> FieldContext:
        return FieldContext(self.p)


def GF(p: int, f: int = 1) -> FieldContext:
    return FieldContext(p, f)
