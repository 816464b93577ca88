import random

import pytest

from swtorsion.linalg import identity_matrix, mat_mul
from swtorsion.series import TruncSeries
from swtorsion.surface import MappingClass, SurfaceModel
from swtorsion.sympower import (Monomial, SymClass, SymSpace, enumerate_basis,
                                graded_trace, induced_endomorphism,
                                lefschetz_number)
from swtorsion.tqft import (Presentation, ascend_map, compute_b1, descend_map,
                            kappa_matrix, rhs_series, sw_table,
                            trace_kappa_coefficient, validate_presentation,
                            verify_main_identity, zeta_series)
from conftest import make_presentation, presentation_sample

ROT = [[0, -1], [1, 0]]  # c -> d, d -> -c on the one-handle sphere


def test_validate_presentation():
    assert validate_presentation(1, 1, identity_matrix(4)) == []
    problems = validate_presentation(1, 0, [[2, 0], [0, 1]])
    assert any(p.startswith("symplectic") for p in problems)
    problems = validate_presentation(1, 1, identity_matrix(2))
    assert any(p.startswith("dimension") for p in problems)
    problems = validate_presentation(0, 1, [[1, 0], [0.5, 1]])
    assert any(p.startswith("integrality") for p in problems)
    assert validate_presentation(-1, 0, []) != []


def test_presentation_requires_split_surface():
    A = MappingClass.identity(SurfaceModel(2))
    with pytest.raises(ValueError):
        Presentation(1, 1, A)


def _monomial_class(space, idx, q=0, coeff=1):
    return SymClass.monomial(space, Monomial(tuple(idx), q), coeff)


def test_descend_consumes_handle_duals():
    # d_0 ^ .. ^ d_{N-1} ^ x_I y^q descends to + x_I y^q
    for N in (1, 2):
        P = make_presentation(1, N, 0, 0)
        big = SymSpace(P.surface, 1 + N)
        d_then_x = tuple(range(N, 2 * N)) + (2 * N,)
        alpha = _monomial_class(big, d_then_x, q=0)
        out = descend_map(P, 1, alpha)
        small = SymSpace(P.small_surface, 1)
        assert out == _monomial_class(small, (0,))


def test_descend_kills_pure_x_classes():
    P = make_presentation(1, 1, 0, 0)
    big = SymSpace(P.surface, 2)
    assert descend_map(P, 1, _monomial_class(big, (2, 3))).is_zero()


def test_descend_ascend_without_handles_is_identity():
    P = make_presentation(2, 0, 5, 11)
    n = 2
    big = SymSpace(P.surface, n)
    small = SymSpace(P.small_surface, n)
    for m in enumerate_basis(big):
        down = descend_map(P, n, SymClass.monomial(big, m))
        assert down == SymClass.monomial(small, m)
        assert ascend_map(P, n, down) == SymClass.monomial(big, m)


def test_ascend_of_one_is_handle_wedge():
    P = make_presentation(0, 2, 0, 0)
    small = SymSpace(P.small_surface, 0)
    out = ascend_map(P, 0, _monomial_class(small, ()))
    assert out == _monomial_class(SymSpace(P.surface, 2), (0, 1))


def test_descend_after_ascend_vanishes_with_handles():
    # the handle classes are isotropic, so contracting the c-wedge gives zero
    for N in (1, 2):
        P = make_presentation(1, N, 0, 0)
        small = SymSpace(P.small_surface, 1)
        for m in enumerate_basis(small):
            up = ascend_map(P, 1, SymClass.monomial(small, m))
            assert descend_map(P, 1, up).is_zero()


def test_ascend_after_descend_on_handle_monomials():
    P = make_presentation(1, 1, 0, 0)
    big = SymSpace(P.surface, 2)
    alpha = _monomial_class(big, (1, 2))  # d ^ x_0
    out = ascend_map(P, 1, descend_map(P, 1, alpha))
    assert out == _monomial_class(big, (0, 2))  # c ^ x_0


def test_kappa_equals_induced_without_handles():
    P = make_presentation(1, 0, 6, 3)
    for n in (0, 1, 2):
        kap = kappa_matrix(P, n)
        ind = induced_endomorphism(P.monodromy, n)
        assert kap.columns == ind.columns


def test_kappa_trace_zero_for_identity_monodromy():
    for N in (1, 2):
        P = make_presentation(1, N, 0, 0)
        for n in (0, 1):
            assert graded_trace(kappa_matrix(P, n)) == 0
            assert trace_kappa_coefficient(P, n) == 0


def test_trace_paths_agree():
    for P in presentation_sample(12, seed=5150):
        for n in range(3):
            assert graded_trace(kappa_matrix(P, n)) == trace_kappa_coefficient(P, n)


def test_trace_reduces_to_lefschetz_without_handles():
    for seed in range(5):
        for g in (1, 2):
            P = make_presentation(g, 0, 7, seed)
            A = P.monodromy
            for n in range(5):
                assert trace_kappa_coefficient(P, n) == lefschetz_number(A, n)


def test_trace_point_count_genus_zero():
    P = make_presentation(0, 0, 0, 0)
    for n in range(5):
        assert trace_kappa_coefficient(P, n) == n + 1


def test_zeta_examples():
    P = make_presentation(1, 0, 0, 0)
    assert zeta_series(P, 3) == TruncSeries.one(3)
    P0 = make_presentation(0, 0, 0, 0)
    assert zeta_series(P0, 4) == TruncSeries(4, [1, 2, 3, 4, 5])
    A = MappingClass(SurfaceModel(1), [[2, 1], [1, 1]])
    assert zeta_series(A, 3) == TruncSeries(3, [1, -1, -2, -3])


def test_rhs_series_edges():
    P = make_presentation(2, 0, 6, 8)
    assert rhs_series(P, 3) == zeta_series(P, 3)
    P = make_presentation(1, 1, 0, 0)
    assert not rhs_series(P, 3)
    for P in presentation_sample(6, seed=31337):
        assert rhs_series(P, 3).is_integral()


def test_verify_t3():
    P = Presentation.from_matrix(1, 0, identity_matrix(2), "T3")
    report = verify_main_identity(P, 3)
    assert report.passed
    assert [(r.n, r.lhs, r.rhs) for r in report.rows] == [
        (0, 1, 1), (1, 0, 0), (2, 0, 0), (3, 0, 0)]


def test_verify_one_handle_sphere():
    rng = random.Random(404)
    for _ in range(5):
        P = make_presentation(0, 1, rng.randint(0, 8), rng.randint(0, 10 ** 6))
        assert verify_main_identity(P, 3).passed


def test_verify_identity_monodromy_rows_vanish():
    for N in (1, 2):
        P = make_presentation(1, N, 0, 0)
        report = verify_main_identity(P, 2)
        assert report.passed
        assert all(r.lhs == r.rhs == 0 for r in report.rows)


def test_verify_hand_checked_rotation():
    P = Presentation.from_matrix(0, 1, ROT)
    report = verify_main_identity(P, 3)
    assert report.passed
    assert [r.lhs for r in report.rows] == [-1, -2, -3, -4]


def test_b1_examples():
    assert compute_b1(Presentation.from_matrix(1, 0, identity_matrix(2))) == 3
    assert compute_b1(Presentation.from_matrix(1, 0, [[2, 1], [1, 1]])) == 1
    assert compute_b1(Presentation.from_matrix(0, 0, [])) == 1
    assert compute_b1(Presentation.from_matrix(0, 1, ROT)) == 1


def test_sw_table_degree_maps():
    # b1 > 1 at slice genus 2: n = 0 pairs with |m| = 2, n = 1 with 0
    P = Presentation.from_matrix(2, 0, identity_matrix(4))
    table = sw_table(P, 1)
    assert table.b1 == 5 and table.mode == "b1>1"
    assert [(r.n, r.m) for r in table.rows] == [(0, 2), (1, 0)]
    # b1 = 1 at slice genus 1: n = 0 at m = 0, n = 1 at m = 2
    P = Presentation.from_matrix(0, 1, ROT)
    table = sw_table(P, 1)
    assert table.b1 == 1 and table.mode == "b1=1"
    assert [(r.n, r.m) for r in table.rows] == [(0, 0), (1, 2)]
    assert all(r.m % 2 == 0 for r in table.rows)


def test_sw_table_product_of_sphere_and_circle():
    P = Presentation.from_matrix(0, 0, [], "S2xS1")
    table = sw_table(P, 3)
    assert table.b1 == 1
    assert [(r.n, r.m, r.value) for r in table.rows] == [
        (0, 2, 1), (1, 4, 2), (2, 6, 3), (3, 8, 4)]


def _conjugator(P, seed):
    """Symplectic S preserving the c span and the x span setwise."""
    surface = P.surface
    N, g = P.handles, P.genus
    rng = random.Random(seed)
    n2 = surface.rank
    mat = identity_matrix(n2)
    vecs = []
    for i in range(N):
        v = [0] * n2
        v[i] = 1
        vecs.append(tuple(v))
    for i in range(N):
        for j in range(i + 1, N):
            v = [0] * n2
            v[i] = v[j] = 1
            vecs.append(tuple(v))
    for a in range(2 * g):
        v = [0] * n2
        v[2 * N + a] = 1
        vecs.append(tuple(v))
    for a in range(2 * g):
        for b in range(a + 1, 2 * g):
            v = [0] * n2
            v[2 * N + a] = v[2 * N + b] = 1
            vecs.append(tuple(v))
    if not vecs:
        return MappingClass.identity(surface)
    J = surface.intersection_matrix
    for _ in range(6):
        v = rng.choice(vecs)
        cols = []
        for k in range(n2):
            pair = sum(J[k][j] * v[j] for j in range(n2))
            cols.append(tuple((1 if i == k else 0) + pair * v[i] for i in range(n2)))
        mat = mat_mul(mat, tuple(zip(*cols)))
    return MappingClass(surface, mat)


def test_trace_conjugation_invariance():
    for P in presentation_sample(8, seed=9090):
        S = _conjugator(P, 555)
        conj = S.compose(P.monodromy).compose(S.inverse())
        Q = Presentation(P.genus, P.handles, conj)
        for n in range(3):
            assert trace_kappa_coefficient(P, n) == trace_kappa_coefficient(Q, n)
