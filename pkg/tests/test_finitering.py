"""Tests for the finite-ring backend: integer lattice linear algebra,
ring/ideal/module arithmetic, Koszul and derived functors, Matlis
duality, and the exhaustive verification driver."""

import pytest

from koszulkit.finitering import (FiniteIdeal, FiniteModule, FiniteRing,
                                  FiniteRingError, adic_completion_ring,
                                  annihilated_part, duality_sweep,
                                  enumerate_ideals, enumerate_modules,
                                  exhaustive_verify, ext_cyclic,
                                  free_resolution_cyclic, koszul_homology_fr,
                                  local_cohomology_fr, local_homology_fr,
                                  mat_mul, matlis_dual, module_invariant,
                                  modules_isomorphic, parse_finite_ring,
                                  quotient_by_gens, smith_normal_form,
                                  solve_integer, tor_cyclic, torsion_part,
                                  z_kernel)


# ---------------------------------------------------------------------------
# integer lattice linear algebra
# ---------------------------------------------------------------------------

def test_z_kernel_simple():
    # kernel of (2 4) : Z^2 -> Z is spanned by (2, -1)
    ker = z_kernel([[2, 4]])
    assert len(ker) == 1
    x, y = ker[0]
    assert 2 * x + 4 * y == 0 and (x, y) != (0, 0)


def test_z_kernel_full_rank():
    assert z_kernel([[1, 0], [0, 1]]) == []


def test_smith_normal_form_divisibility():
    A = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    D, S, T = smith_normal_form(A)
    assert mat_mul(mat_mul(S, A), T) == D
    diag = [D[i][i] for i in range(3)]
    assert diag == [2, 2, 156]   # classical example; 2 | 2 | 156
    for i in range(3):
        for j in range(3):
            if i != j:
                assert D[i][j] == 0


def test_solve_integer():
    A = [[2, 0], [0, 3]]
    assert solve_integer(A, [4, 9]) == [2, 3]
    assert solve_integer(A, [1, 0]) is None


# ---------------------------------------------------------------------------
# ring parsing and arithmetic
# ---------------------------------------------------------------------------

def test_parse_z_mod():
    R = parse_finite_ring("Z/8")
    assert R.size == 8
    assert R.mul(R.one, R.one) == R.one


def test_parse_truncated_poly():
    R = parse_finite_ring("F2[x]/x^3")
    assert R.size == 8
    x = (0, 1, 0)
    x2 = R.mul(x, x)
    assert x2 == (0, 0, 1)
    assert R.mul(x, x2) == R.zero


def test_parse_product_ring():
    R = parse_finite_ring("Z/4*F2")
    assert R.size == 8
    assert R.mul(R.one, R.one) == R.one


def test_parse_rejects_nonprime_field():
    with pytest.raises(FiniteRingError):
        parse_finite_ring("F4")


def test_parse_rejects_garbage():
    with pytest.raises(FiniteRingError):
        parse_finite_ring("Q[x]")


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------

def test_enumerate_ideals_z12():
    R = parse_finite_ring("Z/12")
    sizes = sorted(I.size for I in enumerate_ideals(R))
    # ideals of Z/12: (0), (6), (4), (3), (2), (1)
    assert sizes == [1, 2, 3, 4, 6, 12]


def test_stable_power_z12():
    R = parse_finite_ring("Z/12")
    two = FiniteIdeal(R, [R.norm((2,))])
    b = two.stable_power()
    # (2)^2 = (4) is idempotent in Z/12
    assert b.size == 3
    assert b.contains(R.norm((4,)))


def test_adic_completion_z12_at_two():
    R = parse_finite_ring("Z/12")
    two = FiniteIdeal(R, [R.norm((2,))])
    C = adic_completion_ring(R, two)
    assert C.size == 4   # the 2-adic completion of Z/12 is Z/4


# ---------------------------------------------------------------------------
# modules and Koszul homology
# ---------------------------------------------------------------------------

def test_koszul_regular_element():
    # x = 2 is regular on Z/8: H_1(2; Z/8) = 0, H_0 = Z/2... no: 2 is a
    # zerodivisor killed by 4, so H_1 = (0 : 2) = 4Z/8 has size 2.
    R = parse_finite_ring("Z/8")
    M = FiniteModule.regular(R)
    H = koszul_homology_fr(R, [R.norm((2,))], M)
    assert H[0].size == 2     # Z/8 / 2Z/8
    assert H[1].size == 2     # (0 :_{Z/8} 2) = {0, 4}


def test_koszul_unit_sequence_kills_everything():
    R = parse_finite_ring("Z/8")
    M = FiniteModule.regular(R)
    H = koszul_homology_fr(R, [R.one, R.norm((2,))], M)
    assert all(h.is_zero() for h in H)


def test_resolution_ranks_truncated_poly():
    # F2[x]/x^3 mod (x) has the periodic resolution .. -> R -> R -> R
    R = parse_finite_ring("F2[x]/x^3")
    x = R.norm((0, 1, 0))
    I = FiniteIdeal(R, [x])
    res = free_resolution_cyclic(R, I, 4)
    assert res.ranks == [1, 1, 1, 1, 1]


def test_tor_ext_periodicity_z4():
    # over Z/4, Tor_i(Z/2, Z/2) = Z/2 for all i; same for Ext^i
    R = parse_finite_ring("Z/4")
    I = FiniteIdeal(R, [R.norm((2,))])
    M = FiniteModule.quotient_by_ideal(R, [R.norm((2,))])
    for i in range(4):
        assert tor_cyclic(R, I, i, M).size == 2
        assert ext_cyclic(R, I, i, M).size == 2


# ---------------------------------------------------------------------------
# local homology / cohomology
# ---------------------------------------------------------------------------

def test_local_functors_at_comaximal_support_vanish():
    # Z/3 as a Z/12-module has no 2-primary part: all local (co)homology
    # at (2) vanishes
    R = parse_finite_ring("Z/12")
    two = FiniteIdeal(R, [R.norm((2,))])
    M = FiniteModule.quotient_by_ideal(R, [R.norm((3,))])
    for i in range(3):
        assert local_homology_fr(R, two, i, M).is_zero()
        assert local_cohomology_fr(R, two, i, M).is_zero()


def test_local_functors_degree_zero():
    R = parse_finite_ring("Z/12")
    two = FiniteIdeal(R, [R.norm((2,))])
    M = FiniteModule.regular(R)
    # H^a_0 = M/bM and H^0_a = (0 :_M b) for the stable power b = (4)
    assert local_homology_fr(R, two, 0, M).size == 4
    assert local_cohomology_fr(R, two, 0, M).size == 4
    # higher degrees vanish because R/b is projective here
    for i in (1, 2):
        assert local_homology_fr(R, two, i, M).is_zero()
        assert local_cohomology_fr(R, two, i, M).is_zero()


def test_torsion_and_quotient_parts():
    R = parse_finite_ring("Z/12")
    two = FiniteIdeal(R, [R.norm((2,))])
    M = FiniteModule.regular(R)
    assert torsion_part(R, two, M).size == 4
    assert quotient_by_gens(M, [R.norm((4,))]).size == 4
    assert annihilated_part(M, [R.norm((6,))]).size == 6


# ---------------------------------------------------------------------------
# Matlis duality and isomorphism invariants
# ---------------------------------------------------------------------------

def test_matlis_dual_involution():
    R = parse_finite_ring("Z/8")
    for N in enumerate_modules(R, 16):
        M = N.realize()
        D = matlis_dual(M)
        assert D.size == M.size
        assert modules_isomorphic(R, matlis_dual(D), M)


def test_module_invariant_separates():
    # R vs (R/x)^2 over F2[x]/x^2: same size 4, different module structure
    R = parse_finite_ring("F2[x]/x^2")
    x = R.norm((0, 1))
    A = FiniteModule.regular(R)
    B = FiniteModule.quotient_by_ideal(R, [x])
    B2 = B.direct_sum(B)
    assert A.size == B2.size == 4
    assert module_invariant(R, A) != module_invariant(R, B2)
    assert not modules_isomorphic(R, A, B2)


def test_enumerate_modules_z8():
    # modules over Z/8 of size <= 8: 0, Z/2, Z/4, Z/2^2, Z/8,
    # Z/4 + Z/2, Z/2^3
    R = parse_finite_ring("Z/8")
    pool = enumerate_modules(R, 8)
    assert len(pool) == 7
    sizes = sorted(N.size for N in pool)
    assert sizes == [1, 2, 4, 4, 8, 8, 8]


# ---------------------------------------------------------------------------
# verification drivers
# ---------------------------------------------------------------------------

def test_exhaustive_verify_z4():
    counts = exhaustive_verify("Z/4", max_module_size=4)
    assert counts["equivalences"] > 0
    assert counts["gates"] > 0


def test_duality_sweep_z4():
    counts = duality_sweep("Z/4", max_module_size=4)
    assert counts["dualities"] > 0
