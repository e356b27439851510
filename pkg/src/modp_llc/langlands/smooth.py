"""Jordan-Hoelder factors and canonical forms of the smooth labels pi(r, lam, chi)."""
from __future__ import annotations

from dataclasses import dataclass

from .labels import CharLabel, SmoothRepLabel


@dataclass(frozen=True)
class JHFactor:
    """An irreducible constituent, recorded by an isomorphism invariant.

    kinds: "supersingular" (data = (orbit of t mod p^2-1, c^2)),
    "principal_series" (data = ordered pair of character keys),
    "character" and "steinberg" (data = character key).
    """

    kind: str
    data: tuple

    def key(self) -> tuple:
        return (self.kind, self.data)

    def __str__(self):
        return f"{self.kind}{self.data}"


def _is_reducible_case(pi: SmoothRepLabel) -> bool:
    F = pi.field
    return pi.r in (0, pi.p - 1) and pi.lam in (1, F.neg(1))


def jh_factors(pi: SmoothRepLabel) -> tuple[JHFactor, ...]:
    """Jordan-Hoelder factors of pi(r, lam, chi), as a sorted tuple (a multiset)."""
    p, F, chi = pi.p, pi.field, pi.chi
    if pi.lam == 0:
        q = p * p - 1
        t = (pi.r + 1 + (p + 1) * chi.omega_power) % q
        orbit = tuple(sorted({t, p * t % q}))
        return (JHFactor("supersingular", (orbit, F.mul(chi.unram, chi.unram))),)
    if _is_reducible_case(pi):
        c = chi * CharLabel.unramified(p, pi.lam, chi.f)
        return tuple(sorted((JHFactor("character", c.key()), JHFactor("steinberg", c.key())), key=JHFactor.key))
    # Ind_B^G(chi mu_(1/lam) (x) chi mu_lam omega^r)
    first = chi * CharLabel.unramified(p, F.inv(pi.lam), chi.f)
    second = chi * CharLabel(p, pi.lam, pi.r, chi.f)
    return (JHFactor("principal_series", (first.key(), second.key())),)


def _moves(pi: SmoothRepLabel, exact: bool) -> list[SmoothRepLabel]:
    p, F, chi = pi.p, pi.field, pi.chi
    out = [SmoothRepLabel(p, pi.r, F.neg(pi.lam), chi * CharLabel.unramified(p, F.neg(1), chi.f))]
    if pi.lam != 0 and pi.r in (0, p - 1):
        if not (exact and pi.lam in (1, F.neg(1))):
            out.append(SmoothRepLabel(p, p - 1 - pi.r, pi.lam, chi))
    if pi.lam == 0:
        out.append(SmoothRepLabel(p, p - 1 - pi.r, 0, chi * CharLabel.omega(p, pi.r, chi.f)))
    return out


def smooth_orbit(pi: SmoothRepLabel, exact: bool = False) -> frozenset[SmoothRepLabel]:
    seen = {pi}
    todo = [pi]
    while todo:
        for nxt in _moves(todo.pop(), exact):
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return frozenset(seen)


def normalize_smooth(pi: SmoothRepLabel, exact: bool = False) -> SmoothRepLabel:
    """Least label in the orbit of the standard isomorphisms.

    By default r = 0 and r = p-1 are also identified at lam = +-1, where only
    the semisimplifications agree; ``exact=True`` leaves those apart.
    """
    return min(smooth_orbit(pi, exact), key=SmoothRepLabel.key)


def jh_compatible(pi1: SmoothRepLabel, pi2: SmoothRepLabel) -> bool:
    """Necessary conditions for a common constituent when lam1 != 0:
    lam2 != 0, r1 = r2 mod p-1 and chi1/chi2 unramified."""
    if pi1.lam == 0:
        raise ValueError("the first label must have lam != 0")
    if pi1.p != pi2.p:
        return False
    return (pi2.lam != 0 and (pi1.r - pi2.r) % (pi1.p - 1) == 0
            and (pi1.chi / pi2.chi).is_unramified())


def share_jh_factor(pi1: SmoothRepLabel, pi2: SmoothRepLabel) -> bool:
    return bool(set(jh_factors(pi1)) & set(jh_factors(pi2)))


def all_smooth_labels(p: int, f: int = 1):
    """Every pi(r, lam, mu_c omega^m) over F_{p^f}."""
    q = p ** f
    for r in range(p):
        for lam in range(q):
            for c in range(1, q):
                for m in range(max(p - 1, 1)):
                    yield SmoothRepLabel(p, r, lam, CharLabel(p, c, m, f))
