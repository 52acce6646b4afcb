"""Derived functors: Tor, Ext, induced maps, and local cohomology towers.

Tor_i(N, M) and Ext^i(N, M) are computed from an exact free resolution of
N (syzygy-complete at every stage), so homology subquotients are exact.
Tower transition maps are produced by deterministic comparison lifts
between resolutions.
"""

from __future__ import annotations

from .complexes import FreeComplex, hom_into_module, tensor_with_module
from .groebner import VectorGB
from .modules import (FPModule, ModuleMap, colon_submodule, free_resolution,
                      subquotient)
from .rings import IdealGens


class UnstabilizedError(RuntimeError):
    """Raised when a tower fails to stabilize; carries the partial tower."""

    def __init__(self, message, tower):
        super().__init__(message)
        self.tower = tower


def resolution_complex(N: FPModule, L: int) -> FreeComplex:
    """Free resolution of N as a FreeComplex F_0 <- .. <- F_top, top <= L."""
    res = free_resolution(N, L)
    ranks = [res.rank(0)]
    diffs = []
    for i in range(1, L + 1):
        cols = res.differential_columns(i)
        if not cols:
            break
        ranks.append(len(cols))
        diffs.append(cols)
    return FreeComplex(N.ring, ranks, diffs, check=False)


def tor(i: int, N: FPModule, M: FPModule) -> FPModule:
    """Tor_i(N, M), pruned."""
    if i < 0:
        return FPModule.zero(N.ring)
    C = resolution_complex(N, i + 1)
    if i > C.top:
        return FPModule.zero(N.ring)
    return tensor_with_module(C, M).homology(i)


def ext(i: int, N: FPModule, M: FPModule) -> FPModule:
    """Ext^i(N, M), pruned."""
    if i < 0:
        return FPModule.zero(N.ring)
    C = resolution_complex(N, i + 1)
    if i > C.top:
        return FPModule.zero(N.ring)
    H = hom_into_module(C, M)
    return H.homology(C.top - i)


class _ExtStage:
    """Ext^i(N, M) with the data needed to build induced maps."""

    def __init__(self, C: FreeComplex, M: FPModule, i: int):
        self.C = C
        self.M = M
        self.i = i
        if i > C.top:
            self.module = FPModule.zero(M.ring)
            self.cycles = []
            self.boundaries = []
            self.ambient = FPModule.zero(M.ring)
            return
        H = hom_into_module(C, M)
        j = C.top - i
        self.module, self.cycles = H.homology_raw(j)
        d_up = H.differential(j + 1)
        self.boundaries = list(d_up.columns) if d_up is not None else []
        self.ambient = H.module(j)


def chain_map_lift(f_cols, src: FreeComplex, dst: FreeComplex):
    """Lift a map coker(d^src_1) -> coker(d^dst_1), given by the columns
    f_cols on F^src_0 -> F^dst_0, to a chain map src -> dst.

    Returns per-degree column lists; deterministic (Groebner lifts).
    """
    ring = src.ring
    F = ring.field
    phis = [list(f_cols)]
    for k in range(1, src.top + 1):
        dst_cols = dst.differential_columns(k)
        if not dst_cols:
            phis.append([{} for _ in range(src.rank(k))])
            continue
        gb = VectorGB(ring, dst.rank(k - 1), dst_cols)
        cols = []
        for col in src.differential_columns(k):
            img: dict = {}
            prev = phis[k - 1]
            for (p, e), c in col.items():
                for (q, e2), c2 in prev[p].items():
                    key = (q, tuple(a + b for a, b in zip(e, e2)))
                    v = F.add(img.get(key, F.zero), F.mul(c, c2))
                    if v:
                        img[key] = v
                    else:
                        img.pop(key, None)
            rep = gb.lift(img)
            if rep is None:
                raise ArithmeticError("comparison lift failed: resolution not exact")
            cols.append(rep)
        phis.append(cols)
    return phis


def _induced_stage_map(f_cols, src_stage: _ExtStage, dst_stage: _ExtStage):
    """Map Ext^i(N_dst, M) -> Ext^i(N_src, M) induced contravariantly by a
    module map with columns f_cols from the source resolution's F_0 into
    the destination resolution's F_0."""
    H_dst, H_src = dst_stage.module, src_stage.module
    if H_dst.is_zero() or H_src.is_zero():
        return ModuleMap(H_dst, H_src, [{} for _ in range(H_dst.rank)],
                         check=False)
    i = src_stage.i
    M = src_stage.M
    ring = M.ring
    F = ring.field
    mrank = max(M.rank, 1)
    phis = chain_map_lift(f_cols, src_stage.C, dst_stage.C)
    phi_i = phis[i]                      # columns: F^src_i -> F^dst_i
    # contravariant block transpose: Hom(F^dst_i, M) -> Hom(F^src_i, M);
    # ambient slot (q, t) with q a free-module coordinate, t an M generator
    cyc_images = []
    for u in dst_stage.cycles:
        out: dict = {}
        for (slot, e), c in u.items():
            q, t = divmod(slot, mrank)
            for j, col in enumerate(phi_i):
                for (p, e2), c2 in col.items():
                    if p != q:
                        continue
                    key = (j * mrank + t, tuple(a + b for a, b in zip(e, e2)))
                    v = F.add(out.get(key, F.zero), F.mul(c, c2))
                    if v:
                        out[key] = v
                    else:
                        out.pop(key, None)
        cyc_images.append(out)
    gens = src_stage.cycles + src_stage.boundaries + src_stage.ambient.relations
    gb = VectorGB(ring, src_stage.ambient.rank, gens)
    ncyc = len(src_stage.cycles)
    cols = []
    for img in cyc_images:
        rep = gb.lift(img)
        if rep is None:
            raise ArithmeticError("induced map image is not a cycle")
        cols.append({(j, m): c for (j, m), c in rep.items() if j < ncyc})
    return ModuleMap(H_dst, H_src, cols)


def induced_ext_map(i: int, f: ModuleMap, M: FPModule):
    """Ext^i(f, M): Ext^i(target f, M) -> Ext^i(source f, M).

    Returns (ext_target, ext_source, map); stage presentations unpruned.
    """
    C_src = resolution_complex(f.source, i + 1)
    C_dst = resolution_complex(f.target, i + 1)
    src_stage = _ExtStage(C_src, M, i)
    dst_stage = _ExtStage(C_dst, M, i)
    tau = _induced_stage_map(f.columns, src_stage, dst_stage)
    return dst_stage.module, src_stage.module, tau


# ---------------------------------------------------------------------------
# towers
# ---------------------------------------------------------------------------

class ExtTower:
    """Stages Ext^i(R/a^t, M), t = 1..t_max, with transition maps along
    the surjections R/a^(t+1) -> R/a^t."""

    def __init__(self, a: IdealGens, M: FPModule, i: int, stages, maps):
        self.a = a
        self.M = M
        self.i = i
        self.stages = stages    # stages[t-1]: Ext^i(R/a^t, M), unpruned
        self.maps = maps        # maps[t-1]: stage t -> stage t+1

    def stage(self, t: int) -> FPModule:
        return self.stages[t - 1]


def ext_tower(a: IdealGens, M: FPModule, i: int, t_max: int) -> ExtTower:
    ring = a.ring
    one = ring.field.one
    ident = [{(0, ring._zero_exp): one}]
    stages, maps = [], []
    prev = None  # (_ExtStage of R/a^t)
    for t in range(1, t_max + 1):
        C = resolution_complex(FPModule.cyclic(ring, a.power(t)), i + 1)
        stage = _ExtStage(C, M, i)
        stages.append(stage.module)
        if prev is not None:
            # R/a^(t) <- R/a^(t-1)? no: the surjection R/a^t -> R/a^(t-1)
            # induces Ext^i(R/a^(t-1), M) -> Ext^i(R/a^t, M)
            maps.append(_induced_stage_map(ident, stage, prev))
        prev = stage
    return ExtTower(a, M, i, stages, maps)


class SocleTowerResult:
    """Stabilized socle of the tower Ext^i(R/a^t, M).  When the whole
    tower stabilizes, `module` is its value; when only the socle
    sub-tower stabilizes (the colimit need not be finitely generated),
    `module` is None."""

    def __init__(self, module, socle, t_stable, tower):
        self.module = module
        self.socle = socle
        self.t_stable = t_stable
        self.tower = tower


def _socle_transition(a: IdealGens, tau: ModuleMap):
    """Restriction of a tower transition map to the a-socles of its
    source and target."""
    S, inc_s = colon_submodule(tau.source, a)
    T, inc_t = colon_submodule(tau.target, a)
    # coordinates of each socle generator's image over T's generators,
    # modulo the relations of the ambient stage
    gb = VectorGB(a.ring, tau.target.rank,
                  inc_t.columns + tau.target.relations)
    cols = []
    for g in inc_s.columns:
        rep = gb.lift(tau.apply_vec(g))
        if rep is None:
            raise UnstabilizedError(
                "transition map does not preserve the socle", None)
        cols.append({(p, e): c for (p, e), c in rep.items() if p < T.rank})
    return ModuleMap(S, T, cols, check=False), S, T


def local_cohomology_socle(a: IdealGens, M: FPModule, i: int,
                           t_max: int = 8) -> SocleTowerResult:
    """Colimit socle of Ext^i(R/a^t, M).  Stabilization is detected by
    two consecutive exact isomorphisms of transition maps, either at the
    level of whole stages or (when the colimit is not finitely
    generated) at the level of their a-socles, which always form an
    eventually constant sub-tower.  Stages are built lazily and the scan
    stops at the first stabilization signal; raises UnstabilizedError
    when neither criterion fires within t_max."""
    ring = a.ring
    one = ring.field.one
    ident = [{(0, ring._zero_exp): one}]
    stages, maps, iso = [], [], []
    socles, soc_iso = [], []
    prev = None
    for t in range(1, t_max + 1):
        C = resolution_complex(FPModule.cyclic(ring, a.power(t)), i + 1)
        stage = _ExtStage(C, M, i)
        stages.append(stage.module)
        if prev is not None:
            tau = _induced_stage_map(ident, stage, prev)
            maps.append(tau)
            iso.append(tau.is_isomorphism())
            if len(iso) >= 2 and iso[-2] and iso[-1]:
                tower = ExtTower(a, M, i, stages, maps)
                stable = stages[t - 3]
                soc, _ = colon_submodule(stable, a)
                return SocleTowerResult(stable.pruned(), soc.pruned(),
                                        t - 2, tower)
            # socle sub-tower scan, capped at the early (small) stages:
            # transition restriction on late stages is prohibitively
            # expensive and the socle sub-tower is eventually constant
            if len(maps) <= 4:
                sigma, S, _ = _socle_transition(a, tau)
                socles.append(S)
                soc_iso.append(sigma.is_isomorphism())
                if len(soc_iso) >= 2 and soc_iso[-2] and soc_iso[-1]:
                    tower = ExtTower(a, M, i, stages, maps)
                    return SocleTowerResult(None, socles[-2].pruned(),
                                            t - 2, tower)
        prev = stage
    raise UnstabilizedError(
        f"tower did not stabilize within t_max={t_max}",
        ExtTower(a, M, i, stages, maps))
