"""Finite labels for both sides of the mod p correspondence.

Unramified characters mu_c are stored by the encoded field element c (an int
in the encoding of F_{p^f}); ``None`` stands for an unknown unramified part.
omega is the mod p cyclotomic character, omega2 the niveau-2 fundamental
character with omega2^(p+1) = omega on inertia.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from ..fplinear.fields import FieldContext

UNKNOWN = None


@lru_cache(maxsize=None)
def field_of(p: int, f: int = 1) -> FieldContext:
    return FieldContext(p, f)


def bracket(n: int, p: int) -> int:
    """The representative of n mod p-1 in [0, p-2] (always 0 when p = 2)."""
    return n % (p - 1)


def _unram_key(c: int | None) -> int:
    return -1 if c is None else c


@dataclass(frozen=True)
class CharLabel:
    """mu_unram * omega^omega_power."""

    p: int
    unram: int | None
    omega_power: int
    f: int = 1

    def __post_init__(self):
        if self.unram is not None and not 0 < self.unram < self.p ** self.f:
            raise ValueError(f"unramified parameter must be a nonzero field element, got {self.unram}")
        object.__setattr__(self, "omega_power", bracket(self.omega_power, self.p))

    @classmethod
    def trivial(cls, p: int, f: int = 1) -> CharLabel:
        return cls(p, 1, 0, f)

    @classmethod
    def omega(cls, p: int, a: int = 1, f: int = 1) -> CharLabel:
        return cls(p, 1, a, f)

    @classmethod
    def unramified(cls, p: int, c: int, f: int = 1) -> CharLabel:
        return cls(p, c, 0, f)

    @property
    def field(self) -> FieldContext:
        return field_of(self.p, self.f)

    @property
    def known(self) -> bool:
        return self.unram is not None

    def key(self) -> tuple:
        return (self.omega_power, _unram_key(self.unram))

    def __mul__(self, other: CharLabel) -> CharLabel:
        if (self.p, self.f) != (other.p, other.f):
            raise ValueError("characters over different fields")
        u = None if self.unram is None or other.unram is None else self.field.mul(self.unram, other.unram)
        return CharLabel(self.p, u, self.omega_power + other.omega_power, self.f)

    def inverse(self) -> CharLabel:
        u = None if self.unram is None else self.field.inv(self.unram)
        return CharLabel(self.p, u, -self.omega_power, self.f)

    def __truediv__(self, other: CharLabel) -> CharLabel:
        return self * other.inverse()

    def is_unramified(self) -> bool:
        return self.omega_power == 0

    def forget_unramified(self) -> CharLabel:
        return CharLabel(self.p, None, self.omega_power, self.f)

    def __str__(self):
        F = self.field
        parts = []
        if self.unram is None:
            parts.append("mu_?")
        elif self.unram != 1:
            c = F.format(self.unram)
            parts.append(f"mu_{c}" if " " not in c else f"mu_({c})")
        if self.omega_power:
            parts.append("omega" if self.omega_power == 1 else f"omega^{self.omega_power}")
        return "*".join(parts) or "1"

    def to_dict(self) -> dict:
        return {"unram": self.unram, "omega_power": self.omega_power}


def mu(p: int, c: int, f: int = 1) -> CharLabel:
    return CharLabel.unramified(p, c, f)


@dataclass(frozen=True)
class SmoothRepLabel:
    """pi(r, lam, chi) = (I(Symm^r) / (T - lam)) (x) chi(det), 0 <= r <= p-1."""

    p: int
    r: int
    lam: int
    chi: CharLabel

    def __post_init__(self):
        if not 0 <= self.r <= self.p - 1:
            raise ValueError(f"r must lie in [0, p-1], got {self.r}")
        if not 0 <= self.lam < self.p ** self.chi.f:
            raise ValueError(f"lambda {self.lam} is not a field element")
        if self.chi.p != self.p:
            raise ValueError("twist character lives over a different prime")
        if not self.chi.known:
            raise ValueError("smooth labels need a fully specified twist")

    @property
    def f(self) -> int:
        return self.chi.f

    @property
    def field(self) -> FieldContext:
        return field_of(self.p, self.f)

    def key(self) -> tuple:
        return (self.r, self.lam, self.chi.key())

    def twist(self, chi: CharLabel) -> SmoothRepLabel:
        return SmoothRepLabel(self.p, self.r, self.lam, self.chi * chi)

    def __str__(self):
        return f"pi({self.r}, {self.field.format(self.lam)}, {self.chi})"

    def to_dict(self) -> dict:
        return {"r": self.r, "lambda": self.lam, "chi": self.chi.to_dict(), "text": str(self)}


@dataclass(frozen=True)
class SmoothSide:
    """A semisimple smooth-side label: one supersingular pi, or a pair of ^ss pieces."""

    components: tuple[SmoothRepLabel, ...]
    semisimplified: bool

    def __str__(self):
        mark = "^ss" if self.semisimplified else ""
        return " + ".join(f"{c}{mark}" for c in self.components)

    def to_dict(self) -> dict:
        return {"semisimplified": self.semisimplified,
                "components": [c.to_dict() for c in self.components], "text": str(self)}


@dataclass(frozen=True)
class Irreducible:
    """ind(omega2^t) (x) twist; with ``inertia_only`` only the restriction to inertia is meant."""

    p: int
    t: int
    twist: CharLabel
    inertia_only: bool = False

    def __post_init__(self):
        q = self.p * self.p - 1
        object.__setattr__(self, "t", self.t % q)
        if self.t % (self.p + 1) == 0:
            raise ValueError(f"(p+1) divides t={self.t}: ind(omega2^t) is reducible")

    def key(self) -> tuple:
        return (0, self.t, self.twist.key(), self.inertia_only)

    def inertia_exponents(self) -> frozenset[int]:
        """Exponents of omega2 on inertia, mod p^2 - 1."""
        q = self.p * self.p - 1
        a = self.t + (self.p + 1) * self.twist.omega_power
        return frozenset({a % q, self.p * a % q})

    def __str__(self):
        s = f"ind(omega2^{self.t})"
        if self.twist.unram != 1 or self.twist.omega_power:
            s += f" (x) {self.twist}"
        return s + (" [inertia only]" if self.inertia_only else "")

    def to_dict(self) -> dict:
        return {"type": "irreducible", "t": self.t, "twist": self.twist.to_dict(),
                "inertia_only": self.inertia_only,
                "inertia": sorted(self.inertia_exponents()), "text": str(self)}


@dataclass(frozen=True)
class Reducible:
    """chi1 + chi2, stored sorted."""

    p: int
    chars: tuple[CharLabel, CharLabel]
    inertia_only: bool = False

    def __post_init__(self):
        if len(self.chars) != 2:
            raise ValueError("a reducible label has exactly two characters")
        object.__setattr__(self, "chars", tuple(sorted(self.chars, key=CharLabel.key)))

    def key(self) -> tuple:
        return (1, tuple(c.key() for c in self.chars), self.inertia_only)

    def inertia_exponents(self) -> frozenset[int]:
        """omega^a restricted to inertia is omega2^((p+1) a)."""
        q = self.p * self.p - 1
        return frozenset((self.p + 1) * c.omega_power % q for c in self.chars)

    def __str__(self):
        s = " + ".join(str(c) for c in self.chars)
        return s + (" [inertia only]" if self.inertia_only else "")

    def to_dict(self) -> dict:
        return {"type": "reducible", "chars": [c.to_dict() for c in self.chars],
                "inertia_only": self.inertia_only,
                "inertia_omega_powers": [c.omega_power for c in self.chars], "text": str(self)}


GaloisRepLabel = Union[Irreducible, Reducible]


def canonical_galois(V: GaloisRepLabel) -> GaloisRepLabel:
    """Canonical form: omega-twists absorbed into t, t replaced by min(t, pt), mu_c by mu_(+-c)."""
    if isinstance(V, Reducible):
        chars = V.chars
        if V.inertia_only:
            chars = tuple(c.forget_unramified() for c in chars)
        return Reducible(V.p, chars, V.inertia_only)
    p, q = V.p, V.p * V.p - 1
    chi = V.twist
    t = (V.t + (p + 1) * chi.omega_power) % q
    t = min(t, p * t % q)
    c = chi.unram
    if V.inertia_only:
        c = None
    elif c is not None:
        # ind(omega2^t) (x) mu_-1 is isomorphic to ind(omega2^t)
        c = min(c, chi.field.neg(c))
    return Irreducible(p, t, CharLabel(p, c, 0, chi.f), V.inertia_only)


def twist_galois(V: GaloisRepLabel, chi: CharLabel) -> GaloisRepLabel:
    if isinstance(V, Reducible):
        return Reducible(V.p, tuple(c * chi for c in V.chars), V.inertia_only)
    return Irreducible(V.p, V.t, V.twist * chi, V.inertia_only)


def galois_sort_key(V: GaloisRepLabel) -> tuple:
    return V.key()
