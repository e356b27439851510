import threading
from fractions import Fraction

import pytest

from modp_llc.modforms import (
    E4,
    E6,
    CacheError,
    Delta,
    PrecisionError,
    QExpansionCache,
    charpoly,
    dim_cusp_forms,
    eisenstein_self_check,
    hecke_matrix,
    newton_slopes,
    ordinarity_sweep,
    slope_spectrum,
    victor_miller_basis,
)
from modp_llc.modforms.qexp import QExpansion

from oracles import charpoly_ascending, delta_series, eisenstein_series


# q-expansions

def test_delta_against_product_expansion():
    assert list(Delta(12).coeffs) == delta_series(12)
    assert Delta(4).coeffs == (0, 1, -24, 252, -1472)


def test_eisenstein_against_divisor_sums():
    assert list(E4(30).coeffs) == eisenstein_series(4, 30)
    assert list(E6(30).coeffs) == eisenstein_series(6, 30)


def test_eisenstein_identity():
    assert eisenstein_self_check(300)


def test_precision_enforced():
    f = Delta(5)
    with pytest.raises(PrecisionError):
        f[6]
    assert (f * Delta(9)).precision == 5
    with pytest.raises(ValueError):
        QExpansion(12, 3, (0, 1))


# dimensions and bases

def test_dim_examples():
    assert dim_cusp_forms(12) == 1 and dim_cusp_forms(2) == 0 and dim_cusp_forms(13) == 0
    assert dim_cusp_forms(74) == 5 and dim_cusp_forms(0) == 0 and dim_cusp_forms(14) == 0


@pytest.mark.parametrize("k", list(range(0, 102, 2)))
def test_dim_matches_basis_and_echelon(k):
    d = dim_cusp_forms(k)
    B = victor_miller_basis(k, d + 5)
    assert len(B) == d
    for j, f in enumerate(B):
        assert f.weight == k and f.is_cuspidal()
        assert [f[i] for i in range(1, d + 1)] == [int(i == j + 1) for i in range(1, d + 1)]


def test_basis_weight_12_and_16():
    assert victor_miller_basis(12, 6)[0].coeffs == Delta(6).coeffs
    assert victor_miller_basis(16, 8)[0].coeffs == (E4(8) * Delta(8)).coeffs


def test_basis_precision_error():
    with pytest.raises(PrecisionError):
        victor_miller_basis(48, 3)


def test_basis_has_integer_coefficients():
    for k in (24, 36, 74):
        for f in victor_miller_basis(k, 30):
            assert all(isinstance(a, int) for a in f.coeffs)


# Hecke matrices

def test_tau_2():
    assert hecke_matrix(2, 12).entries == ((-24,),)
    assert hecke_matrix(3, 12).entries == ((252,),)


@pytest.mark.parametrize("p,q,k", [(2, 3, 24), (2, 5, 36), (3, 5, 48)])
def test_hecke_operators_commute(p, q, k):
    N = p * q * dim_cusp_forms(k)
    A, B = hecke_matrix(p, k, N), hecke_matrix(q, k, N)
    assert A @ B == B @ A


def test_hecke_needs_precision():
    with pytest.raises(PrecisionError):
        hecke_matrix(5, 24, 9)


@pytest.mark.parametrize("k", [12, 16, 18, 20, 22, 26])
def test_hecke_recursion_on_one_dimensional_spaces(k):
    # a_{p^2} = a_p^2 - p^(k-1) for a normalized eigenform
    f = victor_miller_basis(k, 50)[0]
    for p in (2, 3, 5, 7):
        assert f[p * p] == f[p] ** 2 - p ** (k - 1)
        assert hecke_matrix(p, k).entries == ((f[p],),)


def test_p59_weight16_is_non_ordinary():
    (a,), = hecke_matrix(59, 16).entries
    assert a % 59 == 0 and a != 0


# characteristic polynomials

def test_charpoly_against_sympy():
    import random
    rng = random.Random(0)
    for n in range(0, 7):
        for _ in range(10):
            A = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(n)]
            assert charpoly(A) == charpoly_ascending(A)


def test_hecke_charpoly_against_sympy():
    H = hecke_matrix(5, 74)
    assert H.charpoly() == charpoly_ascending([list(r) for r in H.entries])


# Newton polygons

def test_newton_examples():
    p, k = 5, 12
    assert newton_slopes([p ** (k - 1), -7, 1], p).segments == ((0, 1), (k - 1, 1))
    assert newton_slopes([p ** (k - 1), -p ** 6, 1], p).segments == ((Fraction(11, 2), 2),)
    assert newton_slopes([24, 1], 2).segments == ((3, 1),)
    assert slope_spectrum(2, 12).segments == ((3, 1),)


def test_newton_errors():
    with pytest.raises(ValueError):
        newton_slopes([0, 0], 3)
    with pytest.raises(ValueError):
        newton_slopes([1, 3], 3)
    with pytest.raises(ValueError):
        newton_slopes([0, 1], 3)


def test_newton_mass_equals_valuation_of_determinant():
    from modp_llc.fplinear.fields import valuation
    for p, k in ((2, 24), (3, 36), (5, 48), (59, 74), (7, 60)):
        cp = hecke_matrix(p, k).charpoly()
        poly = newton_slopes(cp, p)
        assert poly.mass() == valuation(cp[0], p)
        assert poly.degree == dim_cusp_forms(k)
        slopes = [s for s, _ in poly.segments]
        assert slopes == sorted(set(slopes))


def test_collinear_points_merge():
    # (X - 3)(X - 9)(X - 27) over p = 3: slopes 1, 2, 3
    assert newton_slopes([-729, 351, -39, 1], 3).segments == ((1, 1), (2, 1), (3, 1))
    # (X - 3)^2: the middle point (1, 1) lies on the segment
    assert newton_slopes([9, -6, 1], 3).segments == ((1, 2),)


def test_slopes_p59_k74():
    poly = slope_spectrum(59, 74)
    assert poly.contains(Fraction(1, 2))
    assert slope_spectrum(59, 16).segments == ((1, 1),)


def test_p2_slopes_avoid_open_unit_interval():
    for k in range(12, 34, 2):
        if dim_cusp_forms(k):
            assert not slope_spectrum(2, k).in_open_interval(0, 1)


def test_sweep_small():
    rep = ordinarity_sweep(23)
    rows = {(r.p, r.k): r for r in rep.rows}
    assert [k for p, k in rows if p == 23] == [12, 14, 16, 18, 20, 22, 24]
    assert [k for p, k in rows if p == 13] == [12, 14]
    assert rows[(11, 12)].dim == 1
    assert rows[(13, 14)].polygon is None and rows[(13, 14)].ordinary
    assert rep.all_ordinary
    assert rows[(23, 24)].format() == "23, 24, 2, 0/1 (x2)"


# cache

def test_cache_round_trip(tmp_path):
    cache = QExpansionCache(tmp_path)
    a = Delta(40, cache)
    path = cache.path("Delta", 12, 40)
    lines = path.read_text().splitlines()
    assert lines[0] == "Delta 12 40" and len(lines) == 42 and lines[2] == "1"
    assert Delta(40, cache) == a == Delta(40)
    assert hecke_matrix(7, 36, cache=cache) == hecke_matrix(7, 36)


def test_cache_is_write_once(tmp_path):
    cache = QExpansionCache(tmp_path)
    cache.store("E4", 4, 2, [1, 240, 2160])
    cache.store("E4", 4, 2, [9, 9, 9])
    assert cache.load("E4", 4, 2) == [1, 240, 2160]
    assert not [p for p in tmp_path.iterdir() if p.name.startswith(".tmp")]


def test_cache_rejects_corrupt_file(tmp_path):
    cache = QExpansionCache(tmp_path)
    cache.path("E6", 6, 2).write_text("E6 6 2\n1\n-504\n")
    with pytest.raises(CacheError):
        cache.load("E6", 6, 2)
    cache.path("E6", 6, 3).write_text("E4 6 3\n1\n2\n3\n4\n")
    with pytest.raises(CacheError):
        cache.load("E6", 6, 3)


def test_cache_concurrent_writers(tmp_path):
    cache = QExpansionCache(tmp_path)
    results = []

    def work():
        results.append(Delta(60, cache).coeffs)

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(results)) == 1 and results[0] == Delta(60).coeffs
    assert len(list(tmp_path.iterdir())) == 1


def test_cache_unwritable(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    with pytest.raises(CacheError):
        Delta(5, QExpansionCache(blocker / "sub"))
