"""GL_2(F_p)-stable subspaces of Symm^r, quotients, and irreducible labels."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import linalg
from .fields import FieldContext
from .linalg import Echelon, Mat
from .symm import Matrix, SymmElement, action_matrix, det, theta_bar_multiply, monomials


class NotIrreducibleError(ValueError):
    pass


def standard_generators(p: int) -> dict[str, Matrix]:
    """diag(g, 1) for the least primitive root g, the unipotent, and the Weyl element."""
    from .fields import primitive_root

    return {
        "torus": (primitive_root(p), 0, 0, 1),
        "unipotent": (1, 1, 0, 1),
        "weyl": (0, 1, 1, 0),
    }


def symm_matrix(F: FieldContext, g: Matrix, r: int, twist: int = 0) -> Mat:
    """Matrix of g on det^twist (x) Symm^r over F (entries in F_p)."""
    M = action_matrix(tuple(g), r, F.p)
    if twist % (F.p - 1 or 1):
        c = pow(det(g) % F.p, twist % (F.p - 1), F.p)
        M = tuple(tuple(c * x % F.p for x in row) for row in M)
    return M


@dataclass(frozen=True)
class IrredLabel:
    """sigma_s(n) = det^n (x) Symm^s, 0 <= s <= p-1, 0 <= n <= p-2."""

    s: int
    n: int


@dataclass(frozen=True)
class GL2Rep:
    """A finite-dimensional representation of GL_2(F_p) by its generator matrices."""

    field: FieldContext
    dim: int
    torus: Mat
    unipotent: Mat
    weyl: Mat

    @property
    def matrices(self) -> tuple[Mat, Mat, Mat]:
        return (self.torus, self.unipotent, self.weyl)

    def lower_torus(self) -> Mat:
        """Matrix of diag(1, g) = w diag(g, 1) w."""
        F = self.field
        return linalg.mat_mul(linalg.mat_mul(self.weyl, self.torus, F), self.weyl, F)


def symm_rep(F: FieldContext, s: int, n: int = 0) -> GL2Rep:
    gens = standard_generators(F.p)
    return GL2Rep(F, s + 1, *(symm_matrix(F, gens[k], s, n) for k in ("torus", "unipotent", "weyl")))


@dataclass(frozen=True)
class KSubmodule:
    """A GL_2(F_p)-stable subspace of det^twist (x) Symm^r."""

    field: FieldContext
    ambient_degree: int
    echelon: Echelon
    twist: int = 0

    @property
    def dim(self) -> int:
        return self.echelon.rank

    @property
    def basis(self) -> list[SymmElement]:
        return [SymmElement(self.field, self.ambient_degree, row) for row in self.echelon.rows]

    def contains(self, v: SymmElement) -> bool:
        if v.r != self.ambient_degree:
            raise ValueError("degree mismatch")
        return self.echelon.contains(v.coeffs)

    def contains_module(self, other: KSubmodule) -> bool:
        return self.echelon.contains_space(other.echelon)

    def generator_matrices(self) -> list[Mat]:
        gens = standard_generators(self.field.p)
        return [symm_matrix(self.field, g, self.ambient_degree, self.twist) for g in gens.values()]

    def is_stable(self) -> bool:
        return linalg.is_stable(self.echelon, self.generator_matrices())

    def __eq__(self, other):
        if not isinstance(other, KSubmodule):
            return NotImplemented
        return (self.field, self.ambient_degree, self.echelon.rows) == (
            other.field, other.ambient_degree, other.echelon.rows)

    def __hash__(self):
        return hash((self.field, self.ambient_degree, self.echelon.rows))


def spin(generators: Iterable[SymmElement], twist: int = 0, *,
         field: FieldContext | None = None, r: int | None = None) -> KSubmodule:
    """The sub-representation generated by ``generators``.

    An empty generator list needs ``field`` and ``r`` and gives the zero module.
    """
    gens = list(generators)
    if gens:
        field = field or gens[0].ring
        r = gens[0].r if r is None else r
    if field is None or r is None:
        raise ValueError("field and degree are required for an empty generator list")
    if not isinstance(field, FieldContext):
        raise TypeError("spinning needs field coefficients")
    for g in gens:
        if g.r != r or g.ring != field:
            raise ValueError("generators must share degree and field")
    mats = [symm_matrix(field, g, r, twist) for g in standard_generators(field.p).values()]
    E = linalg.spin([g.coeffs for g in gens], mats, field, r + 1)
    return KSubmodule(field, r, E, twist)


def full_module(F: FieldContext, r: int) -> KSubmodule:
    return KSubmodule(F, r, linalg.rref(linalg.identity(r + 1), F, r + 1))


def submodule_W(p: int, r: int, field: FieldContext | None = None) -> KSubmodule:
    """The submodule of Symm^r generated by y^r."""
    F = field or FieldContext(p)
    if r < 0:
        raise ValueError("degree must be >= 0")
    return spin([SymmElement.y_power(F, r)])


def submodule_Y(p: int, r: int, field: FieldContext | None = None) -> KSubmodule:
    """The submodule generated by theta_bar * Symm^(r-p-1) and y^r.

    For r == p the theta_bar part is empty and this is the submodule W_p.
    """
    F = field or FieldContext(p)
    if r < p:
        raise ValueError(f"need r >= p, got r={r}, p={p}")
    gens = [SymmElement.y_power(F, r)]
    if r >= p + 1:
        gens += [theta_bar_multiply(m) for m in monomials(F, r - p - 1)]
    return spin(gens)


@dataclass(frozen=True)
class Quotient:
    """Symm^r / sub, with coordinates on the non-pivot monomials."""

    sub: KSubmodule
    columns: tuple[int, ...]
    rep: GL2Rep

    @property
    def dim(self) -> int:
        return len(self.columns)

    def project(self, v: SymmElement) -> tuple[int, ...]:
        w = self.sub.echelon.reduce(v.coeffs)
        return tuple(w[c] for c in self.columns)


def quotient(r: int, sub: KSubmodule) -> Quotient:
    if sub.ambient_degree != r:
        raise ValueError("submodule lives in a different degree")
    if not sub.is_stable():
        raise ValueError("submodule is not GL_2(F_p)-stable")
    F = sub.field
    piv = set(sub.echelon.pivots)
    cols = tuple(c for c in range(r + 1) if c not in piv)

    def induced(M: Mat) -> Mat:
        images = []
        for c in cols:
            e = [0] * (r + 1)
            e[c] = 1
            w = sub.echelon.reduce(linalg.mat_vec(M, e, F))
            images.append([w[k] for k in cols])
        # images[j] is the image of basis vector j: store as columns
        return tuple(tuple(images[j][i] for j in range(len(cols))) for i in range(len(cols)))

    mats = sub.generator_matrices()
    return Quotient(sub, cols, GL2Rep(F, len(cols), *(induced(M) for M in mats)))


def identify_irreducible(rep: GL2Rep) -> IrredLabel:
    """Find (s, n) with rep isomorphic to sigma_s(n).

    The unipotent-fixed space must be a line that spins to everything; the
    two diagonal tori then act on it by g^(s+n) and g^n.
    """
    F, d = rep.field, rep.dim
    p = F.p
    if d == 0:
        raise NotIrreducibleError("not irreducible: zero representation")
    if d > p:
        raise NotIrreducibleError(f"not irreducible: dimension {d} exceeds p")
    U_minus_1 = tuple(
        tuple(F.sub(rep.unipotent[i][j], int(i == j)) for j in range(d)) for i in range(d))
    fixed = linalg.kernel(U_minus_1, F, d)
    if fixed.rank != 1:
        raise NotIrreducibleError(f"not irreducible: unipotent invariants have dimension {fixed.rank}")
    v = fixed.rows[0]
    if linalg.spin([v], rep.matrices, F, d).rank != d:
        raise NotIrreducibleError("not irreducible: invariant line generates a proper subspace")
    piv = fixed.pivots[0]

    def eigenvalue(M: Mat) -> int:
        w = linalg.mat_vec(M, v, F)
        c = w[piv]  # v[piv] == 1
        if tuple(F.mul(c, a) for a in v) != w:
            raise NotIrreducibleError("not irreducible: invariant line is not torus-stable")
        return c

    upper = eigenvalue(rep.torus)
    lower = eigenvalue(rep.lower_torus())
    if p == 2:
        return IrredLabel(d - 1, 0)
    n = F.fp_log(lower)
    s = d - 1
    if (F.fp_log(upper) - n - s) % (p - 1):
        raise NotIrreducibleError("torus characters do not match any sigma_s(n)")
    return IrredLabel(s, n)


def gl2_elements(p: int) -> list[Matrix]:
    """All of GL_2(F_p); for brute-force checks at small p."""
    return [(a, b, c, d) for a in range(p) for b in range(p) for c in range(p) for d in range(p)
            if (a * d - b * c) % p]


def stable_under_group(sub: KSubmodule, elements: Sequence[Matrix] | None = None) -> bool:
    F = sub.field
    els = gl2_elements(F.p) if elements is None else elements
    return linalg.is_stable(sub.echelon, [symm_matrix(F, g, sub.ambient_degree, sub.twist) for g in els])
