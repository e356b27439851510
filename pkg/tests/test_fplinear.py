import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modp_llc.fplinear import (
    GF,
    FieldContext,
    IrredLabel,
    NotIrreducibleError,
    SymmElement,
    act_gl2,
    full_module,
    identify_irreducible,
    quotient,
    spin,
    submodule_W,
    submodule_Y,
    symm_rep,
    theta_bar,
    theta_bar_multiply,
)
from modp_llc.fplinear.fields import IntegerModRing, is_irreducible, primitive_root, valuation
from modp_llc.fplinear.kmodules import stable_under_group, standard_generators
from modp_llc.fplinear.symm import monomials

from oracles import act_by_binomials, act_by_expansion, orbit_span_dim

PRIMES = [2, 3, 5, 7, 11, 13]


def rand_elem(F, r, rng):
    return SymmElement(F, r, tuple(F.random_element(rng) for _ in range(r + 1)))


def rand_gl2(p, rng):
    while True:
        g = tuple(rng.randrange(p) for _ in range(4))
        if (g[0] * g[3] - g[1] * g[2]) % p:
            return g


# fields

def test_prime_field_arithmetic():
    F = GF(7)
    assert F.mul(3, 5) == 1 and F.inv(3) == 5 and F.neg(2) == 5
    assert F.sqrt(2) in (3, 4) and F.sqrt(3) is None


def test_extension_field_is_a_field():
    F = GF(3, 2)
    assert F.order == 9
    for x in F.units():
        assert F.mul(x, F.inv(x)) == 1
    # multiplicative group is cyclic of order 8
    assert any(len({F.power(g, e) for e in range(8)}) == 8 for g in F.units())


def test_modulus_validation():
    with pytest.raises(ValueError):
        FieldContext(4)
    with pytest.raises(ValueError):
        FieldContext(3, 2, (2, 0, 1))  # x^2 + 2 = (x - 1)(x + 1) over F_3
    assert is_irreducible((1, 0, 1), 3) and not is_irreducible((1, 0, 1), 5)


def test_primitive_root_and_valuation():
    assert primitive_root(2) == 1 and primitive_root(7) == 3
    assert valuation(48, 2) == 4 and valuation(7, 3) == 0


def test_integer_mod_ring():
    R = IntegerModRing(5, 2)
    assert R.order == 25 and R.inv(2) == 13
    with pytest.raises(ZeroDivisionError):
        R.inv(5)


# the action

def test_identity_acts_trivially():
    F = GF(5)
    v = rand_elem(F, 6, random.Random(1))
    assert act_gl2((1, 0, 0, 1), v) == v


def test_torus_on_monomials():
    F = GF(5)
    for i in range(7):
        v = SymmElement.monomial(F, 6, i)
        assert act_gl2((2, 0, 0, 3), v) == SymmElement.monomial(F, 6, i, pow(2, 6 - i, 5) * pow(3, i, 5))


def test_weyl_swaps_x_and_y():
    F = GF(3)
    for r in range(6):
        assert act_gl2((0, 1, 1, 0), SymmElement.y_power(F, r)) == SymmElement.x_power(F, r)


def test_non_invertible_rejected():
    with pytest.raises(ValueError):
        act_gl2((1, 2, 2, 4), SymmElement.y_power(GF(5), 3))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_action_matches_symbolic_expansion(p):
    rng = random.Random(p)
    F = GF(p)
    for _ in range(15):
        r = rng.randrange(0, 2 * p + 2)
        v, g = rand_elem(F, r, rng), rand_gl2(p, rng)
        assert act_gl2(g, v).coeffs == act_by_expansion(g, v.coeffs, p) == act_by_binomials(g, v.coeffs, p)


@pytest.mark.parametrize("p", [p for p in PRIMES])
def test_action_is_a_left_action(p):
    rng = random.Random(100 + p)
    F = GF(p)
    for _ in range(200):
        r = rng.randrange(0, 3 * p)
        v, g, h = rand_elem(F, r, rng), rand_gl2(p, rng), rand_gl2(p, rng)
        gh = (g[0] * h[0] + g[1] * h[2], g[0] * h[1] + g[1] * h[3],
              g[2] * h[0] + g[3] * h[2], g[2] * h[1] + g[3] * h[3])
        assert act_gl2(gh, v) == act_gl2(g, act_gl2(h, v))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(0, 12), st.integers(0, 2 ** 32))
def test_action_is_multiplicative(p, r, seed):
    F = GF(p)
    rnd = random.Random(seed)
    u, v = rand_elem(F, r, rnd), rand_elem(F, 3, rnd)
    g = rand_gl2(p, rnd)
    assert act_gl2(g, u * v) == act_gl2(g, u) * act_gl2(g, v)


def test_action_over_extension_field():
    F = GF(5, 2)
    rng = random.Random(3)
    v = rand_elem(F, 7, rng)
    g, h = rand_gl2(5, rng), rand_gl2(5, rng)
    gh = (g[0] * h[0] + g[1] * h[2], g[0] * h[1] + g[1] * h[3], g[2] * h[0] + g[3] * h[2], g[2] * h[1] + g[3] * h[3])
    assert act_gl2(gh, v) == act_gl2(g, act_gl2(h, v))


# theta_bar

def test_theta_bar_p3():
    v = SymmElement(GF(3), 0, (1,))
    assert str(theta_bar_multiply(v)) == "2*x^3*y + x*y^3"  # x y^3 - y x^3


def test_theta_bar_of_zero():
    F = GF(5)
    assert theta_bar_multiply(SymmElement.zero(F, 2)).is_zero()


@pytest.mark.parametrize("p", PRIMES)
def test_theta_bar_semi_invariant(p):
    F = GF(p)
    th = theta_bar(F)
    for g in list(standard_generators(p).values()) + [rand_gl2(p, random.Random(p)) for _ in range(20)]:
        d = (g[0] * g[3] - g[1] * g[2]) % p
        assert act_gl2(g, th) == th.scale(d)


def test_theta_bar_twisted_equivariance():
    F = GF(5)
    rng = random.Random(9)
    v = SymmElement.x_power(F, 1)
    for _ in range(50):
        g = rand_gl2(5, rng)
        d = (g[0] * g[3] - g[1] * g[2]) % 5
        assert act_gl2(g, theta_bar_multiply(v)) == theta_bar_multiply(act_gl2(g, v)).scale(d)


# spinning and submodules

def test_spin_all_monomials_is_everything():
    F = GF(5)
    assert spin(monomials(F, 9)).dim == 10


def test_spin_zero():
    F = GF(5)
    assert spin([SymmElement.zero(F, 4)]).dim == 0
    assert spin([], field=F, r=4).dim == 0


@pytest.mark.parametrize("p,r", [(2, 3), (2, 5), (3, 3), (3, 4), (3, 7), (5, 8), (5, 13)])
def test_W_dimension_against_full_group_orbit(p, r):
    F = GF(p)
    W = submodule_W(p, r)
    assert W.dim == orbit_span_dim([SymmElement.y_power(F, r).coeffs], p)
    assert stable_under_group(W)


@pytest.mark.parametrize("p,r", [(3, 4), (3, 6), (5, 8), (5, 11)])
def test_Y_dimension_against_full_group_orbit(p, r):
    F = GF(p)
    gens = [SymmElement.y_power(F, r)] + [theta_bar_multiply(m) for m in monomials(F, r - p - 1)]
    assert submodule_Y(p, r).dim == orbit_span_dim([g.coeffs for g in gens], p)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_W_full_below_p(p):
    for r in range(p):
        assert submodule_W(p, r).dim == r + 1


def test_W_contains_x_power():
    W = submodule_W(5, 8)
    F = GF(5)
    assert W.contains(SymmElement.y_power(F, 8)) and W.contains(SymmElement.x_power(F, 8))


def test_spin_idempotent_and_closed():
    F = GF(7)
    rng = random.Random(4)
    S = spin([rand_elem(F, 15, rng)])
    assert S.is_stable()
    assert spin(S.basis) == S


def test_Y_examples():
    assert 9 - submodule_Y(5, 8).dim == 1
    assert submodule_Y(3, 4).contains_module(submodule_W(3, 4))
    assert submodule_Y(7, 10).is_stable()


def test_Y_rejects_small_degree():
    with pytest.raises(ValueError):
        submodule_Y(5, 4)


def test_quotient_trivial_cases():
    F = GF(5)
    zero = spin([], field=F, r=6)
    assert quotient(6, zero).dim == 7
    assert quotient(6, full_module(F, 6)).dim == 0


def test_quotient_rejects_unstable():
    F = GF(5)
    from modp_llc.fplinear.kmodules import KSubmodule
    from modp_llc.fplinear.linalg import rref
    bad = KSubmodule(F, 4, rref([SymmElement.y_power(F, 4).coeffs], F, 5))
    with pytest.raises(ValueError):
        quotient(4, bad)


def test_quotient_p5_r8():
    Q = quotient(8, submodule_Y(5, 8))
    assert Q.dim == 1
    assert identify_irreducible(Q.rep) == IrredLabel(0, 0)


# identification

def test_identify_examples():
    F = GF(5)
    assert identify_irreducible(symm_rep(F, 3, 0)) == IrredLabel(3, 0)
    assert identify_irreducible(symm_rep(F, 1, 2)) == IrredLabel(1, 2)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_identify_exhaustive(p):
    F = GF(p)
    for s in range(p):
        for n in range(max(p - 1, 1)):
            assert identify_irreducible(symm_rep(F, s, n)) == IrredLabel(s, n)


def test_identify_rejects_reducible():
    F = GF(5)
    with pytest.raises(NotIrreducibleError, match="not irreducible"):
        identify_irreducible(symm_rep(F, 6, 0))  # Symm^6 with p = 5 is reducible


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_quotient_by_Y_grid(p):
    for r in range(p + 1, p + 2 + 6 * (p - 1)):
        s = (p - 1 - r) % (p - 1)
        Q = quotient(r, submodule_Y(p, r))
        assert Q.dim == s + 1
        assert identify_irreducible(Q.rep) == IrredLabel(s, r % (p - 1))


def test_quotient_over_extension_field():
    F = GF(5, 2)
    Q = quotient(11, submodule_Y(5, 11, F))
    assert Q.dim == 2  # s = [4 - 11] = 1


def test_degree_zero():
    F = GF(5)
    v = SymmElement(F, 0, (3,))
    assert act_gl2((2, 1, 1, 4), v) == v
    assert spin([v]).dim == 1
    assert act_gl2((2, 1, 1, 4), v, twist=1) == v.scale(2)  # det = 7
