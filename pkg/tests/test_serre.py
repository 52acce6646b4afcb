"""Tests for Serre predicates and class-relative depth/width."""

import math
import random

import pytest

from koszulkit.modules import FPModule, direct_sum
from koszulkit.randgen import rand_ideal, rand_module, trial_rng
from koszulkit.rings import parse_ideal, parse_ring
from koszulkit.serre import (INF, SerrePredicate, SerrePredicateError,
                             TheoremViolation, amplitude_identity_check,
                             builtin_predicates, depth_by_regular_sequence,
                             depth_triple, p_depth, p_width,
                             supp_subset_predicate, width_pair)


def rxy():
    return parse_ring("ring F101[x,y] grevlex;")


def cyc(R, text):
    return FPModule.cyclic(R, parse_ideal(R, text))


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------

def test_builtin_predicates_basic():
    R = rxy()
    preds = builtin_predicates(R)
    assert preds["zero"](FPModule.zero(R))
    assert not preds["zero"](cyc(R, "(x)"))
    assert preds["finlen"](cyc(R, "(x^2, y^2)"))
    assert not preds["finlen"](cyc(R, "(x)"))
    assert preds["noeth"](FPModule.free(R, 3))


def test_predicate_self_test_passes_for_builtins():
    R = rxy()
    for name, pred in builtin_predicates(R).items():
        pred.self_test(R, trial_rng(17, 0), trials=8)


def test_predicate_self_test_catches_non_serre():
    R = rxy()
    # "zero or cyclic" is not closed under submodules
    bogus = SerrePredicate("bogus", lambda M: M.pruned().rank <= 1)
    with pytest.raises(SerrePredicateError):
        bogus.self_test(R, trial_rng(17, 1), trials=40)


def test_supp_subset_predicate():
    R = rxy()
    P = supp_subset_predicate(cyc(R, "(x)"))
    assert P(cyc(R, "(x)"))
    assert P(cyc(R, "(x^3)"))       # same support
    assert P(FPModule.zero(R))
    assert not P(cyc(R, "(y)"))
    assert not P(FPModule.free(R, 1))
    P2 = supp_subset_predicate(cyc(R, "(x*y)"))
    assert P2(cyc(R, "(x)"))        # V(x) inside V(xy)
    assert P2(cyc(R, "(y^2)"))
    assert not P2(cyc(R, "(x + y)")) if True else None
    P2.self_test(R, trial_rng(17, 2), trials=8)


# ---------------------------------------------------------------------------
# depth / width
# ---------------------------------------------------------------------------

def test_depth_triple_golden():
    R = rxy()
    m = parse_ideal(R, "(x, y)")
    assert depth_triple(m, FPModule.free(R, 1)).value == 2
    assert depth_triple(m, cyc(R, "(x)")).value == 1
    assert depth_triple(m, cyc(R, "(x^2, y^2)")).value == 0
    assert depth_triple(parse_ideal(R, "(x)"), FPModule.free(R, 1)).value == 1
    # aM = M: depth infinite
    assert depth_triple(parse_ideal(R, "(x)"), cyc(R, "(x - 1)")).value is INF


def test_depth_with_redundant_generators():
    R = rxy()
    a = parse_ideal(R, "(x, y, x + y)")
    assert depth_triple(a, FPModule.free(R, 1)).value == 2


def test_width_golden():
    R = rxy()
    m = parse_ideal(R, "(x, y)")
    assert width_pair(m, FPModule.free(R, 1)) == 0
    assert width_pair(m, cyc(R, "(x^2, y^2)")) == 0
    assert width_pair(parse_ideal(R, "(x)"), cyc(R, "(x - 1)")) is INF


def test_depth_width_inequality_random():
    for k in range(12):
        rng = trial_rng(23, k)
        from koszulkit.randgen import rand_ring
        R = rand_ring(rng)
        a = rand_ideal(R, rng)
        M = rand_module(R, rng)
        d = depth_triple(a, M, rng).value
        w = width_pair(a, M)
        assert (d is INF) == (w is INF)
        if d is not INF:
            assert d + w <= a.n


def test_p_depth_with_finlen_class():
    R = rxy()
    m = parse_ideal(R, "(x, y)")
    finlen = builtin_predicates(R)["finlen"]
    # all Koszul homology of a finite length module is finite length
    assert p_depth(finlen, m, cyc(R, "(x^2, y^2)")) is INF
    # for R itself: H_0 = R/m is finite length, H_1 = H_2 = 0: all in class
    assert p_depth(finlen, m, FPModule.free(R, 1)) is INF
    # for a = (x): H_0(x; R) = R/x has infinite length
    assert p_depth(finlen, parse_ideal(R, "(x)"), FPModule.free(R, 1)) == 1
    assert p_width(finlen, parse_ideal(R, "(x)"), FPModule.free(R, 1)) == 0


def test_p_depth_zero_class_matches_classical():
    for k in range(8):
        rng = trial_rng(29, k)
        from koszulkit.randgen import rand_ring
        R = rand_ring(rng)
        zero = builtin_predicates(R)["zero"]
        a = rand_ideal(R, rng)
        M = rand_module(R, rng)
        assert p_depth(zero, a, M) == depth_triple(a, M, rng).value
        assert p_width(zero, a, M) == width_pair(a, M)


def test_amplitude_identity_random():
    for k in range(10):
        rng = trial_rng(31, k)
        from koszulkit.randgen import rand_ring
        R = rand_ring(rng)
        preds = builtin_predicates(R)
        a = rand_ideal(R, rng)
        M = rand_module(R, rng)
        for pred in (preds["zero"], preds["finlen"]):
            data = amplitude_identity_check(pred, a, M)
            if data["bad_degrees"]:
                assert data["depth"] + data["width"] <= a.n


def test_supp_class_depth():
    R = rxy()
    P = supp_subset_predicate(cyc(R, "(x)"))
    a = parse_ideal(R, "(x, y)")
    # H_i((x,y); R/(x^2)) are supported on V(x,y) which is inside V(x)
    assert p_depth(P, a, cyc(R, "(x^2)")) is INF
    # H_0((y); R) = R/(y) is not supported inside V(x)
    assert p_depth(P, parse_ideal(R, "(y)"), FPModule.free(R, 1)) == 1
