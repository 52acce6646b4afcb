"""Top-level acceptance gate: ten end-to-end criteria, one test (and
one pass/fail line under pytest -v) per criterion.

Criteria with runtime budgets assert wall-clock bounds; all identity
checks run through the same certified code paths as the library.
"""

import time

import pytest

from koszulkit.complexes import koszul_homology_certified
from koszulkit.cli import main as cli_main
from koszulkit.derived import UnstabilizedError, ext, local_cohomology_socle
from koszulkit.modules import FPModule, modules_equivalent
from koszulkit.randgen import rand_ideal, rand_module, rand_ring, trial_rng
from koszulkit.rings import parse_ideal, parse_ring
from koszulkit.serre import INF, depth_triple
from koszulkit.suites import run_suite


def test_criterion_01_low_vanishing_randomized_200_instances():
    t0 = time.time()
    for pred in ("zero", "finlen"):
        rep = run_suite("thm31", trials=100, seed=11, pred=pred)
        assert rep.verdict == "pass", rep.to_text()
        assert rep.violations == 0
    assert time.time() - t0 <= 300


def test_criterion_02_high_vanishing_randomized_200_instances():
    t0 = time.time()
    for pred in ("zero", "finlen"):
        rep = run_suite("thm33", trials=100, seed=11, pred=pred)
        assert rep.verdict == "pass", rep.to_text()
        assert rep.violations == 0
    assert time.time() - t0 <= 300


def test_criterion_03_finite_ring_exhaustive():
    t0 = time.time()
    rep = run_suite("finitering-exhaustive", bound=64)
    assert rep.verdict == "pass", rep.to_text()
    rings = {r.instance.split()[0] for r in rep.records}
    assert {"ring=Z/4", "ring=Z/8", "ring=Z/12", "ring=F2[x]/x^3"} <= rings
    assert time.time() - t0 <= 600


def test_criterion_04_depth_triple_agreement():
    R2 = parse_ring("F101[x,y]")
    assert depth_triple(parse_ideal(R2, "(x, y)"),
                        FPModule.free(R2, 1)).value == 2
    assert depth_triple(parse_ideal(R2, "(x, y)"),
                        FPModule.cyclic(R2, parse_ideal(R2, "(x)"))).value == 1
    assert depth_triple(parse_ideal(R2, "(x)"),
                        FPModule.cyclic(R2, parse_ideal(R2, "(x^2)"))).value == 0
    for k in range(100):
        rng = trial_rng(4, k)
        ring = rand_ring(rng)
        a = rand_ideal(ring, rng)
        M = rand_module(ring, rng)
        depth_triple(a, M, rng)   # raises TheoremViolation on disagreement


def test_criterion_05_amplitude_and_depth_width_sum():
    for suite in ("cor35", "cor512"):
        rep = run_suite(suite, trials=100, seed=5)
        assert rep.verdict == "pass", rep.to_text()
        assert rep.violations == 0


def test_criterion_06_depth_edge_isomorphism():
    # pinned instance: a = (x,y), M = R; tower socles are one-dimensional
    R = parse_ring("F101[x,y]")
    a = parse_ideal(R, "(x, y)")
    M = FPModule.free(R, 1)
    res = local_cohomology_socle(a, M, 2)
    assert res.socle.filtration_dims(2) == (1, 1)
    lhs = ext(2, FPModule.cyclic(R, a), M)
    assert lhs.pruned().filtration_dims(2) == (1, 1)
    assert modules_equivalent(lhs, res.socle)
    # randomized: >= 20 stabilized instances, all passing; unstabilized
    # towers surface as reported skips, never as silent passes
    rep = run_suite("cor510", trials=28, seed=2)
    assert rep.verdict == "pass", rep.to_text()
    passed = [r for r in rep.records if r.status == "pass"]
    skipped = [r for r in rep.records if r.status == "skip"]
    assert len(passed) >= 20
    assert all(r.note for r in skipped)
    assert all(r.status in ("pass", "skip") for r in rep.records)


def test_criterion_07_koszul_selfduality_and_permutation_invariance():
    # the certified computation cross-checks H_i against H^{n-i} and a
    # shuffled generator order on every call; it is also the engine used
    # by every randomized suite
    for k in range(25):
        rng = trial_rng(6, k)
        ring = rand_ring(rng)
        a = rand_ideal(ring, rng)
        M = rand_module(ring, rng)
        koszul_homology_certified(a, M, rng)   # raises ComplexError on failure


def test_criterion_08_tensor_support_and_hom_vanishing():
    for suite in ("cor53", "cor59"):
        rep = run_suite(suite, trials=100, seed=8)
        assert rep.verdict == "pass", rep.to_text()
        assert rep.violations == 0


def test_criterion_09_finite_ring_duality_sweep():
    rep = run_suite("duality-sweep", ring="Z/8", bound=64)
    assert rep.verdict == "pass", rep.to_text()


def test_criterion_10_deterministic_reports(tmp_path):
    out1, out2 = tmp_path / "a.txt", tmp_path / "b.txt"
    rc1 = cli_main(["suite", "thm31", "--trials", "50", "--seed", "7",
                    "--out", str(out1)])
    rc2 = cli_main(["suite", "thm31", "--trials", "50", "--seed", "7",
                    "--out", str(out2)])
    assert rc1 == rc2 == 0
    assert out1.read_bytes() == out2.read_bytes()
