"""Serre-class predicates and the relative depth/width invariants.

A SerrePredicate is a membership test for a class of finitely presented
modules closed under submodules, quotients, and extensions.  Depth and
width relative to such a class are computed from Koszul homology and
cross-checked against Ext/Tor scans; any disagreement raises
TheoremViolation rather than returning a value.
"""

from __future__ import annotations

import math
import random

from .complexes import koszul_homology
from .derived import ext, tor
from .groebner import radical_membership
from .modules import (FPModule, colon_submodule, quotient_by_ideal,
                      submodule)
from .randgen import rand_module
from .rings import IdealGens, PolyRing

INF = math.inf


class TheoremViolation(AssertionError):
    """Two provably-equal computations disagreed."""


class SerrePredicateError(ValueError):
    pass


class SerrePredicate:
    """Membership test for a Serre class, with capability flags.

    satisfies_C / satisfies_D mirror the torsion-compatibility conditions
    needed to extend equivalences to local cohomology / local homology;
    closed_under_colimits marks classes closed under filtered colimits.
    """

    def __init__(self, name: str, test, satisfies_C: bool = False,
                 satisfies_D: bool = False, closed_under_colimits: bool = False):
        self.name = name
        self._test = test
        self.satisfies_C = satisfies_C
        self.satisfies_D = satisfies_D
        self.closed_under_colimits = closed_under_colimits

    def __call__(self, M: FPModule) -> bool:
        return bool(self._test(M))

    def __repr__(self):
        return f"SerrePredicate({self.name!r})"

    def self_test(self, ring: PolyRing, rng: random.Random,
                  trials: int = 10) -> None:
        """Spot-check the two-out-of-three property on random short exact
        sequences 0 -> S -> B -> B/S -> 0; raises on a counterexample."""
        for _ in range(trials):
            B = rand_module(ring, rng)
            if B.rank == 0:
                continue
            gens = []
            for _ in range(rng.randint(1, 2)):
                pos = rng.randrange(B.rank)
                gens.append({(pos, _rand_exp(ring, rng)): ring.field.of(1)})
            S, inc = submodule(B, gens)
            C, _ = inc.cokernel()
            mid, sub, quo = self(B), self(S), self(C)
            if mid != (sub and quo):
                raise SerrePredicateError(
                    f"predicate {self.name!r} is not a Serre class: middle "
                    f"{mid} but submodule {sub} and quotient {quo}")


def _rand_exp(ring, rng):
    e = [0] * ring.nvars
    for _ in range(rng.randint(0, 2)):
        e[rng.randrange(ring.nvars)] += 1
    return tuple(e)


def supp_subset_predicate(L: FPModule) -> SerrePredicate:
    """Class of modules M with Supp(M) contained in Supp(L): equivalently
    every generator of ann(L) lies in the radical of ann(M)."""
    ann_L = L.annihilator()

    def test(M: FPModule) -> bool:
        ann_M = M.annihilator()
        if not ann_M.gens and any(not g.is_zero() for g in ann_L.gens):
            return False
        return all(radical_membership(g, ann_M) for g in ann_L.gens)

    return SerrePredicate(f"supp:{L.literal()}", test,
                          satisfies_C=False, satisfies_D=False,
                          closed_under_colimits=True)


def builtin_predicates(ring: PolyRing) -> dict:
    """Registry of built-in Serre predicates for a polynomial ring."""
    return {
        "zero": SerrePredicate("zero", lambda M: M.is_zero(),
                               satisfies_C=True, satisfies_D=True,
                               closed_under_colimits=True),
        "finlen": SerrePredicate("finlen", lambda M: M.finite_length(),
                                 satisfies_C=True, satisfies_D=True,
                                 closed_under_colimits=False),
        "noeth": SerrePredicate("noeth", lambda M: True,
                                satisfies_C=False, satisfies_D=True,
                                closed_under_colimits=False),
    }


# ---------------------------------------------------------------------------
# relative depth and width
# ---------------------------------------------------------------------------

def p_depth(pred: SerrePredicate, a: IdealGens, M: FPModule,
            cross_check: bool = True):
    """Class-relative depth: inf{i : H_(n-i)(a; M) not in the class}.

    Cross-checked against the Ext^i(R/a, M) scan; disagreement raises
    TheoremViolation.
    """
    n = a.n
    H = koszul_homology(a, M)
    bad = [i for i in range(n + 1) if not pred(H[i])]
    depth = (n - max(bad)) if bad else INF
    if cross_check:
        N = FPModule.cyclic(a.ring, a)
        limit = int(depth) if depth is not INF else n + 1
        for i in range(min(limit, n + 1)):
            if not pred(ext(i, N, M)):
                raise TheoremViolation(
                    f"Ext^{i}(R/a, M) leaves the class below the Koszul depth {depth}")
        if depth is not INF and depth <= n:
            if pred(ext(int(depth), N, M)):
                raise TheoremViolation(
                    f"Ext^{int(depth)}(R/a, M) is in the class at the Koszul depth")
    return depth


def p_width(pred: SerrePredicate, a: IdealGens, M: FPModule,
            cross_check: bool = True):
    """Class-relative width: inf{i : H_i(a; M) not in the class}.

    Cross-checked against the Tor_i(R/a, M) scan.
    """
    n = a.n
    H = koszul_homology(a, M)
    bad = [i for i in range(n + 1) if not pred(H[i])]
    width = min(bad) if bad else INF
    if cross_check:
        N = FPModule.cyclic(a.ring, a)
        limit = int(width) if width is not INF else n + 1
        for i in range(min(limit, n + 1)):
            if not pred(tor(i, N, M)):
                raise TheoremViolation(
                    f"Tor_{i}(R/a, M) leaves the class below the Koszul width {width}")
        if width is not INF and width <= n:
            if pred(tor(int(width), N, M)):
                raise TheoremViolation(
                    f"Tor_{int(width)}(R/a, M) is in the class at the Koszul width")
    return width


class DepthResult:
    def __init__(self, value, by_regular_sequence, by_koszul, by_ext):
        self.value = value
        self.by_regular_sequence = by_regular_sequence
        self.by_koszul = by_koszul
        self.by_ext = by_ext


def _regular_element(a: IdealGens, M: FPModule, rng: random.Random,
                     tries: int = 25):
    """An element of a regular on M, or None; existence is certified by
    (0 :_M a) = 0, so failing all tries is a search deficiency."""
    S, _ = colon_submodule(M, a)
    if not S.is_zero():
        return None
    candidates = list(a.gens)
    for _ in range(tries):
        x = a.ring.zero()
        for g in a.gens:
            x = x + g.scale(rng.randint(0, 100))
        if not x.is_zero():
            candidates.append(x)
    for x in candidates:
        S, _ = colon_submodule(M, IdealGens(a.ring, [x]))
        if S.is_zero():
            return x
    raise TheoremViolation(
        "(0 :_M a) = 0 but no regular element found among generators and "
        f"{tries} random combinations")


def depth_by_regular_sequence(a: IdealGens, M: FPModule,
                              rng: random.Random | None = None):
    """Length of a maximal M-regular sequence in a (INF when aM = M)."""
    rng = rng or random.Random(0)
    Q, _ = quotient_by_ideal(M, a)
    if Q.is_zero():
        return INF
    depth = 0
    cur = M
    while True:
        x = _regular_element(a, cur, rng)
        if x is None:
            return depth
        cur, _ = quotient_by_ideal(cur, IdealGens(a.ring, [x]))
        depth += 1
        if depth > a.ring.nvars + 1:
            raise TheoremViolation("regular sequence exceeds the global bound")


def depth_triple(a: IdealGens, M: FPModule,
                 rng: random.Random | None = None) -> DepthResult:
    """Depth of a on M by three independent methods; they must agree."""
    zero = builtin_predicates(a.ring)["zero"]
    rng = rng or random.Random(0)
    d_rs = depth_by_regular_sequence(a, M, rng)
    n = a.n
    H = koszul_homology(a, M)
    bad = [i for i in range(n + 1) if not H[i].is_zero()]
    d_kos = (n - max(bad)) if bad else INF
    N = FPModule.cyclic(a.ring, a)
    d_ext = INF
    for i in range(a.ring.nvars + n + 1):
        if not ext(i, N, M).is_zero():
            d_ext = i
            break
    if not (d_rs == d_kos == d_ext):
        raise TheoremViolation(
            f"depth methods disagree: regular-sequence {d_rs}, "
            f"Koszul {d_kos}, Ext {d_ext}")
    return DepthResult(d_rs, d_rs, d_kos, d_ext)


def width_pair(a: IdealGens, M: FPModule):
    """Width of a on M by Koszul homology and by the Tor scan; must agree."""
    n = a.n
    H = koszul_homology(a, M)
    bad = [i for i in range(n + 1) if not H[i].is_zero()]
    w_kos = min(bad) if bad else INF
    N = FPModule.cyclic(a.ring, a)
    w_tor = INF
    for i in range(a.ring.nvars + n + 1):
        if not tor(i, N, M).is_zero():
            w_tor = i
            break
    if w_kos != w_tor:
        raise TheoremViolation(
            f"width methods disagree: Koszul {w_kos}, Tor {w_tor}")
    return w_kos


def amplitude_identity_check(pred: SerrePredicate, a: IdealGens,
                             M: FPModule) -> dict:
    """Finiteness equivalence and amplitude identity for a Serre class:
    depth finite iff width finite, and when finite
    sup{i : H_i(a; M) not in class} + depth = n.  Raises TheoremViolation
    on failure; returns the computed data."""
    n = a.n
    H = koszul_homology(a, M)
    bad = [i for i in range(n + 1) if not pred(H[i])]
    depth = (n - max(bad)) if bad else INF
    width = min(bad) if bad else INF
    if (depth is INF) != (width is INF):
        raise TheoremViolation(
            "depth and width finiteness disagree for the class")
    if bad:
        if max(bad) + depth != n:
            raise TheoremViolation(
                f"amplitude identity fails: sup {max(bad)} + depth {depth} != {n}")
        if depth + width > n:
            raise TheoremViolation(
                f"depth {depth} + width {width} exceeds generator count {n}")
    return {"depth": depth, "width": width,
            "bad_degrees": bad, "n": n}
