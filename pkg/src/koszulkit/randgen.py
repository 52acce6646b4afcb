"""Seeded random instance generation for property tests and suites.

All generators take an explicit random.Random so runs are reproducible;
per-trial streams are derived deterministically from (seed, index).
"""

from __future__ import annotations

import random

from .fields import F101
from .modules import FPModule, direct_sum
from .rings import GREVLEX, IdealGens, Poly, PolyRing


def trial_rng(seed: int, index: int) -> random.Random:
    """Independent deterministic stream for trial `index` of a run."""
    return random.Random(f"{seed}:{index}")


def rand_ring(rng: random.Random, max_vars: int = 3) -> PolyRing:
    """Random F101 polynomial ring, weighted toward two variables."""
    nv = rng.choice([1, 2, 2, 2, 3][: max_vars + 2])
    return PolyRing(F101, ("x", "y", "z")[:nv], GREVLEX)


def rand_monomial(ring: PolyRing, rng: random.Random, max_deg: int = 2) -> Poly:
    e = [0] * ring.nvars
    for _ in range(rng.randint(1, max_deg)):
        e[rng.randrange(ring.nvars)] += 1
    return ring.monomial(tuple(e))


def rand_poly(ring: PolyRing, rng: random.Random, max_deg: int = 2,
              terms: int = 2) -> Poly:
    """Random sparse polynomial: mostly monomials and binomials."""
    p = ring.zero()
    for _ in range(rng.randint(1, terms)):
        c = rng.randint(1, 100)
        p = p + rand_monomial(ring, rng, max_deg).scale(c)
    return p


def rand_ideal(ring: PolyRing, rng: random.Random, max_gens: int = 3,
               max_deg: int = 2, allow_zero: bool = False) -> IdealGens:
    """Random ideal; generators are low-degree monomials/binomials."""
    n = rng.randint(0 if allow_zero else 1, max_gens)
    gens = []
    for _ in range(n):
        if rng.random() < 0.7:
            gens.append(rand_monomial(ring, rng, max_deg))
        else:
            gens.append(rand_poly(ring, rng, max_deg, 2))
    return IdealGens(ring, gens)


def rand_module(ring: PolyRing, rng: random.Random,
                max_deg: int = 2) -> FPModule:
    """Random finitely presented module: cyclic, a sum of two cyclics, or
    an ad-hoc two-generator cokernel."""
    kind = rng.random()
    if kind < 0.5:
        return FPModule.cyclic(ring, rand_ideal(ring, rng, 3, max_deg))
    if kind < 0.8:
        A = FPModule.cyclic(ring, rand_ideal(ring, rng, 2, max_deg))
        B = FPModule.cyclic(ring, rand_ideal(ring, rng, 2, max_deg))
        return direct_sum(A, B)[0]
    cols = []
    for _ in range(rng.randint(1, 3)):
        cols.append([rand_poly(ring, rng, max_deg, 2) if rng.random() < 0.7
                     else ring.zero() for _ in range(2)])
    return FPModule.from_columns(ring, 2, cols)


def rand_torsion_module(ring: PolyRing, rng: random.Random,
                        a: IdealGens, max_power: int = 2) -> FPModule:
    """Random cyclic module R/a^t; its support lies in V(a)."""
    t = rng.randint(1, max_power)
    return FPModule.cyclic(ring, a.power(t))
