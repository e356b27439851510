"""Verification suites: finite checks of the generator identities, the quotient
Symm^r / Y, the dictionary and the theta divisibility, as PASS/FAIL tables."""
from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable

from .fplinear.fields import GF, primes_up_to
from .fplinear.kmodules import identify_irreducible, quotient, submodule_W, submodule_Y
from .fplinear.symm import SymmElement
from .induction import (
    alpha,
    basis_element,
    hecke_T,
    hecke_T_plus,
    image_in_W_check,
    lemma_element,
    random_induced,
    theta_substitution_check,
)
from .langlands import (
    CharLabel,
    all_galois_labels,
    all_smooth_labels,
    jh_factors,
    ll_inverse,
    ll_map,
    normalize_smooth,
    twist_galois,
    twist_side,
)


@dataclass(frozen=True)
class CaseResult:
    case: str
    check: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"case": self.case, "check": self.check, "status": "PASS" if self.passed else "FAIL"}
        if self.detail:
            d["detail"] = self.detail
        return d


def _odd_primes(p_max: int) -> list[int]:
    return [p for p in primes_up_to(p_max) if p > 2]


def hecke_identities(p_max: int = 13, samples: int = 100, seed: int = 0) -> list[CaseResult]:
    """T+ f = 0 and T f = [alpha, y^r] for f = [Id, y^(r-p) theta_bar / x], and
    values of T on random elements lie in W_r, for p <= r <= p + 4(p-1)."""
    out = []
    for p in _odd_primes(p_max):
        F = GF(p)
        for r in range(p, p + 4 * (p - 1) + 1):
            case = f"p={p} r={r}"
            f = lemma_element(F, r)
            out.append(CaseResult(case, "T+ f = 0", hecke_T_plus(f).is_zero()))
            Tf = hecke_T(f)
            out.append(CaseResult(case, "T f = [alpha, y^r]",
                                  Tf == basis_element(alpha(p), SymmElement.y_power(F, r)), str(Tf)))
            rng = random.Random(f"{seed}:{p}:{r}")
            W = submodule_W(p, r)
            bad = sum(not image_in_W_check(p, r, random_induced(F, r, rng), W) for _ in range(samples))
            out.append(CaseResult(case, f"T f in I(W_r) for {samples} random f", bad == 0,
                                  f"{bad} failures" if bad else ""))
    return out


def ash_stevens(p_max: int = 13, r_span: int = 6) -> list[CaseResult]:
    """dim Symm^r / Y = s + 1 and the quotient is sigma_s(r mod p-1), s = [p-1-r]."""
    out = []
    for p in _odd_primes(p_max):
        for r in range(p, p + 1 + r_span * (p - 1) + 1):
            s = (p - 1 - r) % (p - 1)
            n = r % (p - 1)
            Q = quotient(r, submodule_Y(p, r))
            lab = identify_irreducible(Q.rep)
            out.append(CaseResult(f"p={p} r={r}", f"dim = {s + 1}, label = ({s}, {n})",
                                  Q.dim == s + 1 and (lab.s, lab.n) == (s, n),
                                  f"dim={Q.dim} label=({lab.s}, {lab.n})"))
    return out


def _partition(items, key) -> set[frozenset]:
    groups = defaultdict(set)
    for x in items:
        groups[key(x)].add(x)
    return {frozenset(g) for g in groups.values()}


def dictionary(p_max: int = 7) -> list[CaseResult]:
    """Round trip of LL, twist compatibility, and normal forms versus constituents."""
    out = []
    for p in primes_up_to(p_max):
        labels = all_galois_labels(p)
        bad_rt = [str(V) for V in labels if ll_inverse(ll_map(V)) != V]
        out.append(CaseResult(f"p={p}", f"LL^-1 LL = id on {len(labels)} labels", not bad_rt,
                              "; ".join(bad_rt[:3])))
        w = CharLabel.omega(p)
        bad_tw = [str(V) for V in labels if ll_map(twist_galois(V, w)) != twist_side(ll_map(V), w)]
        out.append(CaseResult(f"p={p}", "LL(V (x) omega) = LL(V) (x) omega", not bad_tw, "; ".join(bad_tw[:3])))
        smooth = list(all_smooth_labels(p))
        same = _partition(smooth, normalize_smooth) == _partition(smooth, jh_factors)
        out.append(CaseResult(f"p={p}", f"normal form classes = constituent classes on {len(smooth)} labels",
                              same))
    return out


def divisibility(p_max: int = 13) -> list[CaseResult]:
    return [CaseResult(f"p={p}", "theta(x, py - lam x), theta(px, y) in p Z[x, y]",
                       theta_substitution_check(p)) for p in primes_up_to(p_max)]


SUITES: dict[str, Callable[..., list[CaseResult]]] = {
    "hecke-identities": hecke_identities,
    "ash-stevens": ash_stevens,
    "dictionary": dictionary,
    "divisibility": divisibility,
}
