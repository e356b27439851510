"""Finitely supported elements of the compact induction I(Symm^r) and the Hecke operator T.

A basis element [g, v] is the function supported on KZ g^-1 with value v at
g^-1.  It only depends on the coset g KZ up to moving K across:
[g k, v] = [g, k v].  Cosets are labelled by the column-reduced normal form

    ( p^a  u  )
    (  0  p^d )     min(a, d) = 0,  u a residue modulo p^a with p-power denominator,

so an element is stored as a map from normal forms to values in Symm^r.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .fplinear.fields import FieldContext, valuation
from .fplinear.kmodules import submodule_W
from .fplinear.symm import Matrix, Ring, SymmElement, action_matrix, matmul, substitute

QMatrix = tuple[Fraction, Fraction, Fraction, Fraction]


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, order=True)
class CosetRep:
    """Normal form of a coset g KZ, a vertex of the tree."""

    p: int
    a: int
    d: int
    u: Fraction

    @property
    def matrix(self) -> QMatrix:
        return (Fraction(self.p) ** self.a, self.u, Fraction(0), Fraction(self.p) ** self.d)

    @cached_property
    def int_matrix(self) -> Matrix:
        """p^E times the normal form, with E the p-exponent of the denominator of u."""
        pe = self.u.denominator
        return (self.p ** self.a * pe, self.u.numerator, 0, self.p ** self.d * pe)

    def __str__(self):
        return f"[[{self.p}^{self.a}, {self.u}], [0, {self.p}^{self.d}]]"


def identity_rep(p: int) -> CosetRep:
    return CosetRep(p, 0, 0, Fraction(0))


def g0(p: int, lam: int) -> Matrix:
    """The matrix (p lam; 0 1)."""
    return (p, lam, 0, 1)


def alpha(p: int) -> Matrix:
    """The matrix (1 0; 0 p)."""
    return (1, 0, 0, p)


def _val(n: int, p: int) -> int | float:
    return valuation(n, p) if n else float("inf")


def _unit_part(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def _decompose_int(g: Matrix, p: int) -> tuple[CosetRep, Matrix, int]:
    # integral g = R k with R = (p^A U; 0 p^D), k integral with unit determinant
    a, b, c, d = g
    D = a * d - b * c
    if D == 0:
        raise ValueError("singular matrix")
    vc, vd = _val(c, p), _val(d, p)
    delta = int(min(vc, vd))
    alpha_ = valuation(D, p) - delta
    mod = p ** alpha_
    if vd <= vc:
        U = b * pow(_unit_part(d, p), -1, mod) % mod if mod > 1 else 0
    else:
        U = a * pow(_unit_part(c, p), -1, mod) % mod if mod > 1 else 0
    scale = p ** (alpha_ + delta)
    pa, pd = p ** alpha_, p ** delta
    num = (pd * a - U * c, pd * b - U * d, pa * c, pa * d)
    if any(x % scale for x in num):
        raise AssertionError(f"decomposition of {g} left a non-integral K part")
    k = tuple(x // scale for x in num)
    e = min(alpha_, delta)
    rep = CosetRep(p, alpha_ - e, delta - e, Fraction(U, p ** e))
    return rep, k, e


def _integral(g, p: int) -> tuple[Matrix, int, int]:
    """Write g = g_int / (p^s m) with g_int integral and m prime to p."""
    if all(isinstance(x, int) for x in g):
        return tuple(g), 0, 1
    qs = [_q(x) for x in g]
    L = math.lcm(*(x.denominator for x in qs))
    m = _unit_part(L, p)
    s = valuation(L, p) if L > 1 else 0
    return tuple(int(x * L) for x in qs), s, m


def decompose(g, p: int) -> tuple[CosetRep, QMatrix, int]:
    """Write g = c k p^e with c a normal form, k in GL_2(Z_p) and e an integer."""
    gi, s, m = _integral(g, p)
    rep, k, e = _decompose_int(gi, p)
    return rep, tuple(Fraction(x, m) for x in k), e - s


def canonicalize(g, p: int) -> CosetRep:
    return decompose(g, p)[0]


@dataclass(frozen=True)
class InducedElement:
    """A finite sum of basis elements [c, v] with c in normal form."""

    ring: Ring
    r: int
    terms: tuple[tuple[CosetRep, SymmElement], ...]

    @classmethod
    def from_terms(cls, ring: Ring, r: int, terms: Iterable[tuple[CosetRep, SymmElement]]) -> InducedElement:
        acc: dict[CosetRep, SymmElement] = {}
        for c, v in terms:
            if v.ring != ring or v.r != r:
                raise ValueError("value has the wrong ring or degree")
            acc[c] = acc[c] + v if c in acc else v
        return cls(ring, r, tuple(sorted((c, v) for c, v in acc.items() if not v.is_zero())))

    @classmethod
    def zero(cls, ring: Ring, r: int) -> InducedElement:
        return cls(ring, r, ())

    @property
    def p(self) -> int:
        return self.ring.p

    def support(self) -> list[CosetRep]:
        return [c for c, _ in self.terms]

    def as_dict(self) -> Mapping[CosetRep, SymmElement]:
        return dict(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: InducedElement) -> InducedElement:
        if (self.ring, self.r) != (other.ring, other.r):
            raise ValueError("elements live in different modules")
        return InducedElement.from_terms(self.ring, self.r, self.terms + other.terms)

    def __neg__(self) -> InducedElement:
        return InducedElement(self.ring, self.r, tuple((c, -v) for c, v in self.terms))

    def __sub__(self, other: InducedElement) -> InducedElement:
        return self + (-other)

    def scale(self, s: int) -> InducedElement:
        return InducedElement.from_terms(self.ring, self.r, ((c, v.scale(s)) for c, v in self.terms))

    def reduce(self, ring: Ring) -> InducedElement:
        return InducedElement.from_terms(ring, self.r, ((c, v.reduce(ring)) for c, v in self.terms))

    def __str__(self):
        return " + ".join(f"[{c}, {v}]" for c, v in self.terms) or "0"


def _basis_term(g, v: SymmElement) -> tuple[CosetRep, SymmElement]:
    p, N = v.ring.p, v.ring.int_modulus
    if isinstance(g, CosetRep):
        return g, v
    gi, _, m = _integral(g, p)
    rep, k, _ = _decompose_int(gi, p)
    if m != 1:
        minv = pow(m, -1, N)
        k = tuple(x * minv for x in k)
    return rep, substitute(v, k)


def basis_element(g, v: SymmElement) -> InducedElement:
    """[g, v], moved to the normal form of g KZ."""
    return InducedElement.from_terms(v.ring, v.r, [_basis_term(g, v)])


def g_act(g, f: InducedElement) -> InducedElement:
    """g . f, using g [h, v] = [g h, v]."""
    gi, _, m = _integral(g, f.p)
    # p^s is central and acts trivially; the unit m^-1 is central in K and acts on values
    if m != 1:
        minv = pow(m, -1, f.ring.int_modulus)
        f = InducedElement(f.ring, f.r, tuple((c, substitute(v, (minv, 0, 0, minv))) for c, v in f.terms))
    terms = [_basis_term(matmul(gi, c.int_matrix), v) for c, v in f.terms]
    return InducedElement.from_terms(f.ring, f.r, terms)


def _at_identity(f: InducedElement | SymmElement) -> SymmElement:
    if isinstance(f, SymmElement):
        return f
    ident = identity_rep(f.p)
    if any(c != ident for c in f.support()):
        raise ValueError("T+ and T- are only defined on elements supported at the identity vertex")
    return f.terms[0][1] if f.terms else None


def hecke_T_plus(f: InducedElement | SymmElement, ring: Ring | None = None) -> InducedElement:
    """T+([Id, v]) = sum over lam of [(p lam; 0 1), v(x, p y - lam x)]."""
    v = _at_identity(f)
    if v is None:
        return InducedElement.zero(f.ring, f.r)
    p = v.ring.p
    # residues 0..p-1 in place of Teichmuller lifts: the sum does not depend on the lift
    terms = [(_basis_term(g0(p, lam), substitute(v, (1, -lam, 0, p)))) for lam in range(p)]
    return InducedElement.from_terms(v.ring, v.r, terms)


def hecke_T_minus(f: InducedElement | SymmElement) -> InducedElement:
    """T-([Id, v]) = [(1 0; 0 p), v(p x, y)]."""
    v = _at_identity(f)
    if v is None:
        return InducedElement.zero(f.ring, f.r)
    p = v.ring.p
    return basis_element(alpha(p), substitute(v, (p, 0, 0, 1)))


def hecke_T(f: InducedElement) -> InducedElement:
    """The Hecke operator, extended from the identity vertex by T[g, v] = g T[Id, v]."""
    out = []
    for c, v in f.terms:
        local = hecke_T_plus(v) + hecke_T_minus(v)
        out.extend(g_act(c.int_matrix, local).terms)
    return InducedElement.from_terms(f.ring, f.r, out)


def lemma_element(ring: Ring, r: int) -> InducedElement:
    """[Id, y^(r-p) theta_bar / x], i.e. the value y^r - x^(p-1) y^(r-p+1)."""
    p = ring.p
    if r < p:
        raise ValueError("need r >= p")
    coeffs = [0] * (r + 1)
    coeffs[r] = 1
    coeffs[r - p + 1] = ring.neg(1)
    v = SymmElement(ring, r, tuple(coeffs))
    return InducedElement.from_terms(ring, r, [(identity_rep(p), v)])


def image_in_W_check(p: int, r: int, f: InducedElement, W=None) -> bool:
    """Every value of T f lies in the submodule of Symm^r generated by y^r."""
    if r < p:
        raise ValueError(f"need r >= p (got r={r}, p={p}); the image of T is not described there")
    if not isinstance(f.ring, FieldContext) or f.ring.f != 1 or f.r != r:
        raise ValueError("expected an element of I(Symm^r) over F_p")
    W = W or submodule_W(p, r, f.ring)
    return all(W.contains(v) for _, v in hecke_T(f).terms)


def theta_substitution_check(p: int, max_r: int | None = None) -> bool:
    """theta(x, p y - lam x) and theta(p x, y) have all coefficients divisible by p.

    theta = x^p y - x y^p, expanded over Z for every lam in 0..p-1.  With
    ``max_r`` the products theta * x^(j-i) y^i for every degree j <= max_r - p - 1
    are checked as well.
    """
    deg = p + 1
    theta = [0] * (deg + 1)
    theta[1] = 1
    theta[p] = -1
    forms = [theta]
    for j in range(0, (max_r or deg) - deg + 1):
        for i in range(j + 1):
            prod = [0] * (deg + j + 1)
            for t, c in enumerate(theta):
                prod[t + i] += c
            forms.append(prod)
    subs = [(1, -lam, 0, p) for lam in range(p)] + [(p, 0, 0, 1)]
    for form in forms:
        n = len(form) - 1
        for g in subs:
            M = action_matrix(g, n, 0)
            image = [sum(m * c for m, c in zip(row, form)) for row in M]
            if any(c % p for c in image):
                return False
    return True


def random_group_element(p: int, rng: random.Random, depth: int = 3) -> Matrix:
    """A random product of tree moves and elements of K (an integral matrix)."""
    g = (1, 0, 0, 1)
    for _ in range(rng.randint(0, depth)):
        choice = rng.randrange(3)
        if choice == 0:
            step = g0(p, rng.randrange(p))
        elif choice == 1:
            step = alpha(p)
        else:
            while True:
                k = tuple(rng.randrange(-p * p, p * p) for _ in range(4))
                if (k[0] * k[3] - k[1] * k[2]) % p:
                    break
            step = k
        g = matmul(g, step)
    return g


def random_induced(ring: Ring, r: int, rng: random.Random, max_terms: int = 3, depth: int = 3) -> InducedElement:
    p = ring.p
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        v = SymmElement(ring, r, tuple(ring.random_element(rng) for _ in range(r + 1)))
        if v.is_zero():
            continue
        terms.extend(basis_element(random_group_element(p, rng, depth), v).terms)
    return InducedElement.from_terms(ring, r, terms)


def random_K(p: int, rng: random.Random, bound: int | None = None) -> Matrix:
    """A random integral matrix with unit determinant."""
    bound = bound or p ** 3
    while True:
        k = tuple(rng.randrange(-bound, bound) for _ in range(4))
        if (k[0] * k[3] - k[1] * k[2]) % p:
            return k


__all__ = [
    "CosetRep", "InducedElement", "alpha", "basis_element", "canonicalize", "decompose", "g0",
    "g_act", "hecke_T", "hecke_T_minus", "hecke_T_plus", "identity_rep", "image_in_W_check",
    "lemma_element", "random_K", "random_group_element", "random_induced", "theta_substitution_check",
]
