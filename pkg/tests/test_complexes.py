"""Tests for Koszul complexes, tensor/Hom complexes, and homology."""

import random

import pytest

from koszulkit.complexes import (ComplexError, FreeComplex, cone,
                                 hom_into_module, koszul_complex,
                                 koszul_homology, koszul_homology_certified,
                                 tensor_with_module)
from koszulkit.modules import (FPModule, colon_submodule, modules_equivalent,
                               quotient_by_ideal)
from koszulkit.rings import parse_ideal, parse_poly, parse_ring


def rxy():
    return parse_ring("ring F101[x,y] grevlex;")


def test_koszul_two_generators_matrices():
    R = rxy()
    a = parse_ideal(R, "(x, y)")
    K = koszul_complex(a)
    assert K.ranks == [1, 2, 1]
    d1 = K.differential_columns(1)
    assert d1 == [{(0, (1, 0)): 1}, {(0, (0, 1)): 1}]
    d2 = K.differential_columns(2)
    assert d2 == [{(1, (1, 0)): 1, (0, (0, 1)): 100}]  # (-y, x)


def test_koszul_square_is_zero_three_gens():
    R3 = parse_ring("ring F101[x,y,z] grevlex;")
    a = parse_ideal(R3, "(x^2, x*y - z, y^3 + 1)")
    K = koszul_complex(a)  # constructor checks d.d = 0
    assert K.ranks == [1, 3, 3, 1]


def test_koszul_homology_regular_sequence():
    R = rxy()
    a = parse_ideal(R, "(x, y)")
    H = koszul_homology(a, FPModule.free(R, 1))
    assert modules_equivalent(H[0], FPModule.cyclic(R, a))
    assert H[1].is_zero()
    assert H[2].is_zero()


def test_koszul_homology_depth_one_module():
    R = rxy()
    a = parse_ideal(R, "(x, y)")
    M = FPModule.cyclic(R, parse_ideal(R, "(x)"))
    H = koszul_homology(a, M)
    assert modules_equivalent(H[0], FPModule.cyclic(R, a))
    assert modules_equivalent(H[1], FPModule.cyclic(R, a))
    assert H[2].is_zero()


def test_koszul_homology_redundant_generators():
    R = rxy()
    a = parse_ideal(R, "(x, x)")
    H = koszul_homology(a, FPModule.free(R, 1))
    assert modules_equivalent(H[0], FPModule.cyclic(R, parse_ideal(R, "(x)")))
    assert modules_equivalent(H[1], FPModule.cyclic(R, parse_ideal(R, "(x)")))
    assert H[2].is_zero()


def test_h0_and_htop_identities():
    random.seed(5)
    R = rxy()
    for text_a, text_m in [("(x, y)", "(x^2)"), ("(x^2, y)", "(x*y)"),
                           ("(x*y, y^2)", "(y^3)")]:
        a = parse_ideal(R, text_a)
        M = FPModule.cyclic(R, parse_ideal(R, text_m))
        H = koszul_homology(a, M)
        Q, _ = quotient_by_ideal(M, a)
        assert modules_equivalent(H[0], Q)          # H_0 = M/aM
        S, _ = colon_submodule(M, a)
        assert modules_equivalent(H[a.n], S)        # H_n = (0 :_M a)


def test_hom_side_self_duality():
    R = rxy()
    a = parse_ideal(R, "(x, y)")
    M = FPModule.cyclic(R, parse_ideal(R, "(x^2, x*y)"))
    Ht = koszul_homology(a, M, side="tensor")
    Hh = koszul_homology(a, M, side="hom")
    n = a.n
    for i in range(n + 1):
        assert modules_equivalent(Ht[i], Hh[n - i])


def test_certified_wrapper_runs():
    R = rxy()
    a = parse_ideal(R, "(x^2, y)")
    M = FPModule.cyclic(R, parse_ideal(R, "(x*y)"))
    rng = random.Random(3)
    H = koszul_homology_certified(a, M, rng=rng)
    assert len(H) == 3


def test_square_nonzero_rejected():
    R = rxy()
    x, y = parse_poly(R, "x"), parse_poly(R, "y")
    with pytest.raises(ComplexError):
        FreeComplex(R, [1, 1, 1],
                    [[{(0, (1, 0)): 1}], [{(0, (0, 1)): 1}]])


def test_shift():
    R = rxy()
    K = koszul_complex(parse_ideal(R, "(x, y)"))
    S = K.shift(2)
    assert S.ranks == [0, 0, 1, 2, 1]
    assert S.differential_columns(3) == K.differential_columns(1)


def test_cone_of_identity_is_exact():
    R = rxy()
    K = koszul_complex(parse_ideal(R, "(x, y)"))
    one = R.field.one
    phi = [[{(j, R._zero_exp): one} for j in range(K.rank(i))]
           for i in range(K.top + 1)]
    C = cone(phi, K, K)
    C._check_squares_zero()
    M = FPModule.free(R, 1)
    T = tensor_with_module(C, M)
    for i in range(C.top + 1):
        assert T.homology(i).is_zero()


def test_tensor_with_module_blocks():
    R = rxy()
    a = parse_ideal(R, "(x, y)")
    K = koszul_complex(a)
    M = FPModule.free(R, 2)
    T = tensor_with_module(K, M)
    assert [T.module(i).rank for i in range(3)] == [2, 4, 2]
    H0 = T.homology(0)
    D = FPModule.cyclic(R, a)
    from koszulkit.modules import direct_sum
    DD, _, _ = direct_sum(D, D)
    assert modules_equivalent(H0, DD)
