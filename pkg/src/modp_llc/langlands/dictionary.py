"""The explicit mod p dictionary LL between Galois labels and smooth labels.

    ind(omega2^(r+1)) (x) chi               <->  pi(r, 0, chi)
    mu_lam omega^(r+1) chi + mu_(1/lam) chi  <->  pi(r, lam, chi)^ss + pi([p-3-r], 1/lam, chi omega^(r+1))^ss
"""
from __future__ import annotations

from .labels import (
    CharLabel,
    GaloisRepLabel,
    Irreducible,
    Reducible,
    SmoothRepLabel,
    SmoothSide,
    bracket,
    canonical_galois,
    twist_galois,
)
from .smooth import normalize_smooth


class DictionaryError(ValueError):
    pass


def _side(components, semisimplified: bool) -> SmoothSide:
    comps = tuple(sorted((normalize_smooth(c) for c in components), key=SmoothRepLabel.key))
    return SmoothSide(comps, semisimplified)


def _irreducible_to_smooth(V: Irreducible) -> SmoothSide:
    p = V.p
    if not V.twist.known:
        raise DictionaryError("unramified part unknown: the label only describes inertia")
    t = V.t  # canonical: omega part already absorbed
    j = t % (p + 1)  # in [1, p] since (p+1) does not divide t
    m = (t - j) // (p + 1)
    chi = CharLabel(p, V.twist.unram, m, V.twist.f)
    return _side([SmoothRepLabel(p, j - 1, 0, chi)], False)


def _reducible_pieces(first: CharLabel, second: CharLabel) -> list[SmoothRepLabel] | None:
    # first = mu_lam omega^(r+1) chi, second = mu_(1/lam) chi
    p, F = first.p, first.field
    r = (first.omega_power - second.omega_power - 1) % (p - 1)
    lam = F.sqrt(F.mul(first.unram, F.inv(second.unram)))
    if lam is None:
        return None
    chi = second * CharLabel.unramified(p, lam, first.f)
    return [SmoothRepLabel(p, r, lam, chi),
            SmoothRepLabel(p, bracket(p - 3 - r, p), F.inv(lam), chi * CharLabel.omega(p, r + 1, first.f))]


def ll_map(V: GaloisRepLabel) -> SmoothSide:
    """LL of a Galois label, as canonical smooth labels."""
    V = canonical_galois(V)
    if isinstance(V, Irreducible):
        return _irreducible_to_smooth(V)
    if V.inertia_only or not all(c.known for c in V.chars):
        raise DictionaryError("unramified parts unknown: the label only describes inertia")
    a, b = V.chars
    for first, second in ((a, b), (b, a)):
        pieces = _reducible_pieces(first, second)
        if pieces is not None:
            return _side(pieces, True)
    raise DictionaryError(
        f"{V} is outside dictionary normal form: the unramified ratio has no square root in F_{V.p}^{a.f}")


def ll_inverse(side: SmoothSide) -> GaloisRepLabel:
    """Left inverse of ``ll_map``."""
    comps = side.components
    if len(comps) == 1 and not side.semisimplified and comps[0].lam == 0:
        pi = comps[0]
        return canonical_galois(Irreducible(pi.p, pi.r + 1, pi.chi))
    if len(comps) == 2 and side.semisimplified:
        for pi in comps:
            if pi.lam == 0:
                break
            p, F = pi.p, pi.field
            lam = CharLabel.unramified(p, pi.lam, pi.f)
            cand = Reducible(p, (lam * CharLabel.omega(p, pi.r + 1, pi.f) * pi.chi,
                                 lam.inverse() * pi.chi))
            try:
                if ll_map(cand) == _side(comps, True):
                    return canonical_galois(cand)
            except DictionaryError:
                pass
    raise DictionaryError(f"{side} is not in the image of LL")


def twist_side(side: SmoothSide, chi: CharLabel) -> SmoothSide:
    return _side([c.twist(chi) for c in side.components], side.semisimplified)


def all_galois_labels(p: int, f: int = 1):
    """Canonical Galois labels of the dictionary's two shapes, over F_{p^f}."""
    q = p ** f
    seen = set()
    for t in range(1, p * p - 1):
        if t % (p + 1):
            for c in range(1, q):
                seen.add(canonical_galois(Irreducible(p, t, CharLabel(p, c, 0, f))))
    for r in range(p):
        for lam in range(1, q):
            for c in range(1, q):
                for m in range(max(p - 1, 1)):
                    chi = CharLabel(p, c, m, f)
                    L = CharLabel.unramified(p, lam, f)
                    seen.add(canonical_galois(Reducible(p, (L * CharLabel.omega(p, r + 1, f) * chi, L.inverse() * chi))))
    return sorted(seen, key=lambda V: V.key())


__all__ = ["DictionaryError", "ll_map", "ll_inverse", "twist_galois", "twist_side", "all_galois_labels"]
