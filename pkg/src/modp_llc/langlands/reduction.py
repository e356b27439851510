"""Reductions mod p of crystalline representations V_{k,a_p}: closed-form prediction
and recomputation by elimination from the finite quotient Symm^r / Y."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..fplinear.fields import is_prime
from ..fplinear.kmodules import IrredLabel, identify_irreducible, quotient, submodule_Y
from .labels import CharLabel, GaloisRepLabel, Irreducible, Reducible, bracket, canonical_galois, field_of


class OutOfRangeError(ValueError):
    pass


BRANCH_ORDINARY = "ordinary: a_p a unit"
BRANCH_SMALL_WEIGHT = "small weight: 2 <= k <= p+1, v(a_p) > 0"
BRANCH_MAIN = "main: 0 < v(a_p) < 1, t = [k-2]+1"
BRANCH_MAIN_REFINED = "main, k in {3, p+2}: reducible case excluded"
BRANCH_ELIMINATION = "elimination from Symm^r / Y"


@dataclass(frozen=True)
class CrystallineParams:
    p: int
    k: int
    ap_valuation: Fraction
    ap_residue: int | None = None
    psi_p_residue: int = 1
    f: int = 1

    def __post_init__(self):
        object.__setattr__(self, "ap_valuation", Fraction(self.ap_valuation))
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.k < 2:
            raise ValueError(f"weight must be >= 2, got k={self.k}")
        if self.ap_valuation < 0:
            raise ValueError("v(a_p) must be >= 0")
        q = self.p ** self.f
        for name, c in (("a_p residue", self.ap_residue), ("psi(p) residue", self.psi_p_residue)):
            if c is not None and not 0 < c < q:
                raise ValueError(f"{name} must be a nonzero element of F_{q}, got {c}")


@dataclass(frozen=True)
class PredictionResult:
    """Determined (one label) or Ambiguous (irreducible and reducible options)."""

    labels: tuple[GaloisRepLabel, ...]
    ambiguous: bool
    branch: str
    notes: tuple[str, ...] = ()

    @property
    def label(self) -> GaloisRepLabel:
        if self.ambiguous:
            raise ValueError("ambiguous prediction has two options")
        return self.labels[0]

    @property
    def irreducible_option(self) -> GaloisRepLabel:
        return self.labels[0]

    @property
    def reducible_option(self) -> GaloisRepLabel:
        return self.labels[1]

    def candidates(self) -> frozenset[GaloisRepLabel]:
        return frozenset(canonical_galois(V) for V in self.labels)

    def to_dict(self) -> dict:
        d = {"kind": "ambiguous" if self.ambiguous else "determined", "branch": self.branch,
             "notes": list(self.notes)}
        if self.ambiguous:
            d["irreducible_option"] = self.labels[0].to_dict()
            d["reducible_option"] = self.labels[1].to_dict()
        else:
            d["label"] = self.labels[0].to_dict()
        return d


def omega_pair_on_inertia(p: int, n: int, f: int = 1) -> Reducible:
    """omega^n + omega^n restricted to inertia."""
    w = CharLabel(p, None, n, f)
    return Reducible(p, (w, w), inertia_only=True)


def eliminate(s: int, n: int, p: int) -> frozenset[GaloisRepLabel]:
    """Galois labels whose LL shares a constituent with I(sigma_s(n)) / (T - lam) for some lam."""
    if p == 2:
        raise OutOfRangeError("p=2 unsupported: every semisimple representation is irreducible or scalar on inertia")
    if not (0 <= s <= p - 1 and 0 <= n <= p - 2):
        raise ValueError(f"(s, n) = ({s}, {n}) out of range for p={p}")
    out = {canonical_galois(Irreducible(p, s + 1 + (p + 1) * n, CharLabel.trivial(p)))}
    if s == p - 2:
        out.add(omega_pair_on_inertia(p, n))
    return frozenset(out)


def main_theorem_prediction(p: int, k: int, f: int = 1) -> PredictionResult:
    """The 0 < v(a_p) < 1 conclusion, t = [k-2]+1, for any k >= 2."""
    t = bracket(k - 2, p) + 1
    irr = Irreducible(p, t, CharLabel.trivial(p, f))
    notes = []
    if p == 2:
        # every k is 3 mod p-1 and omega is trivial: both options stay open
        notes.append("p=2: the statement does not separate the two options")
        return PredictionResult((irr, omega_pair_on_inertia(p, 1, f)), True, BRANCH_MAIN, tuple(notes))
    if (k - 3) % (p - 1):
        return PredictionResult((irr,), False, BRANCH_MAIN)
    if k in (3, p + 2):
        return PredictionResult((irr,), False, BRANCH_MAIN_REFINED)
    if k == 2 * p + 1:
        notes.append("k=2p+1: an external criterion decides this case; not implemented")
    return PredictionResult((irr, omega_pair_on_inertia(p, 1, f)), True, BRANCH_MAIN, tuple(notes))


def predict_reduction(params: CrystallineParams) -> PredictionResult:
    p, k, v, f = params.p, params.k, params.ap_valuation, params.f
    F = field_of(p, f)
    if v == 0:
        if params.ap_residue is None:
            raise OutOfRangeError("residue required: v(a_p) = 0 needs the residue of a_p")
        a, psi = params.ap_residue, params.psi_p_residue
        first = CharLabel.unramified(p, F.inv(a), f)
        second = CharLabel(p, F.mul(a, F.inv(psi)), bracket(k - 1, p), f)
        return PredictionResult((Reducible(p, (first, second)),), False, BRANCH_ORDINARY)
    if k <= p + 1:
        irr = Irreducible(p, k - 1, CharLabel(p, None, 0, f), inertia_only=True)
        return PredictionResult((irr,), False, BRANCH_SMALL_WEIGHT)
    if v >= 1:
        raise OutOfRangeError(f"outside proven range: v(a_p) = {v} >= 1 with k = {k} >= p+2")
    return main_theorem_prediction(p, k, f)


@dataclass(frozen=True)
class Derivation:
    p: int
    k: int
    r: int
    dim_Y: int
    quotient_dim: int
    label: IrredLabel
    candidates: frozenset[GaloisRepLabel] = field(default_factory=frozenset)


def derivation_steps(p: int, k: int) -> Derivation:
    """Compute Y, the quotient Symm^r / Y, its label (s, n), and eliminate."""
    if p == 2:
        raise OutOfRangeError("p=2 unsupported: the elimination step is vacuous there")
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if k < p + 3:
        raise OutOfRangeError(f"unsupported: need k >= p+3, got k={k}, p={p}")
    r = k - 2
    Y = submodule_Y(p, r)
    Q = quotient(r, Y)
    lab = identify_irreducible(Q.rep)
    return Derivation(p, k, r, Y.dim, Q.dim, lab, eliminate(lab.s, lab.n, p))


def derive_reduction(p: int, k: int) -> frozenset[GaloisRepLabel]:
    return derivation_steps(p, k).candidates


__all__ = [
    "BRANCH_ELIMINATION", "BRANCH_MAIN", "BRANCH_MAIN_REFINED", "BRANCH_ORDINARY", "BRANCH_SMALL_WEIGHT",
    "CrystallineParams", "Derivation", "OutOfRangeError", "PredictionResult", "derivation_steps",
    "derive_reduction", "eliminate", "main_theorem_prediction", "omega_pair_on_inertia", "predict_reduction",
]
