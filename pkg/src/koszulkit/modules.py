"""Finitely presented modules over a polynomial ring.

An FPModule is coker(P: R^c -> R^r) with the relation columns of P stored
as engine vectors.  All constructions are presentation-level and exact;
isomorphism assertions elsewhere in the package use the documented proxy
certificate (equal Hilbert functions up to a degree bound plus equal
annihilators).
"""

from __future__ import annotations

import itertools

from .groebner import (VectorGB, buchberger, engine_syzygies, krull_dim,
                       preimage_gens, vec_from_polys, vec_to_polys)
from .rings import IdealGens, Poly, PolyRing, RingMismatchError


class ModuleConstructionError(ValueError):
    pass


class LengthError(ValueError):
    pass


class FPModule:
    """coker(P: R^c -> R^r); relations are the columns of P."""

    def __init__(self, ring: PolyRing, rank: int, relations, shifts=None):
        self.ring = ring
        self.rank = rank
        self.relations = [dict(c) for c in relations]
        self.shifts = tuple(shifts) if shifts is not None else (0,) * rank
        if len(self.shifts) != rank:
            raise ValueError("shift count must equal ambient rank")
        self._gb = None

    # -- constructors ------------------------------------------------------
    @classmethod
    def free(cls, ring: PolyRing, rank: int) -> "FPModule":
        return cls(ring, rank, [])

    @classmethod
    def zero(cls, ring: PolyRing) -> "FPModule":
        return cls(ring, 0, [])

    @classmethod
    def cyclic(cls, ring: PolyRing, I: IdealGens) -> "FPModule":
        """R/I with ambient rank 1."""
        return cls(ring, 1, [vec_from_polys([g]) for g in I.gens])

    @classmethod
    def from_columns(cls, ring: PolyRing, rank: int, poly_columns) -> "FPModule":
        return cls(ring, rank, [vec_from_polys(c) for c in poly_columns])

    # -- presentation access -------------------------------------------------
    def rel_gb(self) -> VectorGB:
        if self._gb is None:
            self._gb = VectorGB(self.ring, self.rank, self.relations)
        return self._gb

    def relation_columns(self):
        return [vec_to_polys(self.ring, c, self.rank) for c in self.relations]

    def is_zero(self) -> bool:
        if self.rank == 0:
            return True
        gb = self.rel_gb()
        one = self.ring.field.one
        return all(gb.contains({(i, self.ring._zero_exp): one}) for i in range(self.rank))

    def __repr__(self):
        return f"FPModule(rank={self.rank}, relations={len(self.relations)})"

    def literal(self) -> str:
        """Module literal in the text syntax."""
        if self.rank == 0:
            return "module coker [] over R; (zero)"
        cols = self.relation_columns()
        rows = []
        for i in range(self.rank):
            rows.append(", ".join(str(c[i]) for c in cols) if cols else "")
        return "module coker [" + "; ".join(rows) + "] over R;"

    # -- invariant data ------------------------------------------------------
    def annihilator(self) -> IdealGens:
        """Generators of ann_R(M)."""
        ring = self.ring
        r = self.rank
        if r == 0 or self.is_zero():
            return IdealGens(ring, [ring.one()])
        one = ring.field.one
        # single preimage computation in ambient R^(r*r): f * (e_1,..,e_r)
        # must land in the block sum of the relations
        col = {(i * r + i, ring._zero_exp): one for i in range(r)}
        w = []
        for i in range(r):
            for rel in self.relations:
                w.append({(i * r + p, e): c for (p, e), c in rel.items()})
        pre = preimage_gens(ring, [col], r * r, w)
        gens = [vec_to_polys(ring, {(0, e): c for (p, e), c in v.items()}, 1)[0] for v in pre]
        return IdealGens(ring, [g for g in gens if not g.is_zero()])

    def standard_monomial_bounds(self):
        """Per-position variable bounds of the lead-term staircase, or None
        (infinite) when a position has no pure-power lead in some variable."""
        m = self.ring.nvars
        leads_by_pos = [[] for _ in range(self.rank)]
        for (pos, e) in self.rel_gb().lead_terms():
            leads_by_pos[pos].append(e)
        bounds = []
        for leads in leads_by_pos:
            if any(all(x == 0 for x in e) for e in leads):
                bounds.append(tuple(0 for _ in range(m)))
                continue
            b = []
            for i in range(m):
                pure = [e[i] for e in leads if all(e[k] == 0 for k in range(m) if k != i)]
                if not pure:
                    return None
                b.append(min(pure))
            bounds.append(tuple(b))
        return bounds

    def length(self) -> int:
        """k-dimension of M; raises LengthError when infinite."""
        if self.rank == 0:
            return 0
        bounds = self.standard_monomial_bounds()
        if bounds is None:
            raise LengthError("module does not have finite length")
        m = self.ring.nvars
        leads_by_pos = [[] for _ in range(self.rank)]
        for (pos, e) in self.rel_gb().lead_terms():
            leads_by_pos[pos].append(e)
        total = 0
        for pos in range(self.rank):
            for e in itertools.product(*(range(b) for b in bounds[pos])):
                if not any(all(a >= b for a, b in zip(e, le)) for le in leads_by_pos[pos]):
                    total += 1
        return total

    def finite_length(self) -> bool:
        """True iff dim Supp(M) <= 0 (via the annihilator)."""
        if self.is_zero():
            return True
        ann = self.annihilator()
        d = krull_dim(buchberger(ann))
        return d == 0

    def default_degree_bound(self) -> int:
        d = 0
        for col in self.relations:
            degs = [sum(e) for (_, e) in col]
            d += max(degs, default=0)
        return d + 4

    def hilbert_function(self, D: int):
        """(h_0, .., h_D): k-dimensions of the order filtration per degree."""
        m = self.ring.nvars
        leads_by_pos = [[] for _ in range(self.rank)]
        for (pos, e) in self.rel_gb().lead_terms():
            leads_by_pos[pos].append(e)
        h = [0] * (D + 1)
        for pos in range(self.rank):
            shift = self.shifts[pos]
            for e in _monomials_up_to(m, D - shift if D - shift >= 0 else -1):
                if not any(all(a >= b for a, b in zip(e, le)) for le in leads_by_pos[pos]):
                    h[sum(e) + shift] += 1
        return tuple(h)

    def filtration_dims(self, D: int):
        """(dim_k M/m M, .., dim_k M/m^D M) for the irrelevant maximal
        ideal m.  Unlike the raw staircase count this is a functorial
        invariant of M, independent of the chosen presentation."""
        ring = self.ring
        one = ring.field.one
        m = ring.nvars
        dims = []
        for d in range(1, D + 1):
            extra = [{(i, e): one}
                     for e in _monomials_up_to(m, d) if sum(e) == d
                     for i in range(self.rank)]
            dims.append(FPModule(ring, self.rank, self.relations + extra).length())
            if len(dims) >= 2 and dims[-1] == dims[-2]:
                # m^d M = m^(d+1) M, so the m-primary tower is stable from
                # here on (Nakayama at the irrelevant maximal ideal)
                dims.extend([dims[-1]] * (D - d))
                break
        return tuple(dims)

    # -- presentation minimization -------------------------------------------
    def pruned(self) -> "FPModule":
        """Isomorphic presentation with unit relation entries cancelled."""
        ring = self.ring
        F = ring.field
        cols = [dict(c) for c in self.relations]
        rank = self.rank
        alive = list(range(rank))
        changed = True
        while changed:
            changed = False
            for j, col in enumerate(cols):
                piv = None
                for (p, e), c in col.items():
                    if all(x == 0 for x in e) and _is_unit_entry(col, p, ring._zero_exp):
                        piv = (p, c)
                        break
                if piv is None:
                    continue
                i, u = piv
                uinv = F.inv(u)
                for j2 in range(len(cols)):
                    if j2 == j:
                        continue
                    # substitute generator i using the pivot relation
                    ci_full = {e: c for (p, e), c in cols[j2].items() if p == i}
                    if not ci_full:
                        continue
                    new = dict(cols[j2])
                    for e, c in ci_full.items():
                        q = F.mul(c, uinv)
                        for (p2, e2), c2 in col.items():
                            key = (p2, tuple(a + b for a, b in zip(e, e2)))
                            x = F.sub(new.get(key, F.zero), F.mul(q, c2))
                            if x:
                                new[key] = x
                            else:
                                new.pop(key, None)
                    cols[j2] = new
                # delete generator i and relation j
                del cols[j]
                remap = {}
                k = 0
                for p in range(rank):
                    if p != i:
                        remap[p] = k
                        k += 1
                cols = [{(remap[p], e): c for (p, e), c in col2.items() if p != i}
                        for col2 in cols]
                rank -= 1
                changed = True
                break
        cols = [c for c in cols if c]
        return FPModule(ring, rank, cols)


def _monomials_up_to(m: int, D: int):
    if D < 0:
        return
    for e in itertools.product(range(D + 1), repeat=m):
        if sum(e) <= D:
            yield e


class ModuleMap:
    """Map M -> N given by a matrix: one column (in R^{rank N}) per
    ambient generator of M.  Well-definedness is Groebner-certified."""

    def __init__(self, source: FPModule, target: FPModule, columns, check: bool = True):
        if source.ring != target.ring:
            raise RingMismatchError("map between modules over different rings")
        self.source = source
        self.target = target
        self.columns = [dict(c) for c in columns]
        if len(self.columns) != source.rank:
            raise ModuleConstructionError("matrix width must equal source rank")
        if check:
            gb = target.rel_gb()
            F = source.ring.field
            for k, rel in enumerate(source.relations):
                img = {}
                for (p, e), c in rel.items():
                    for (q, e2), c2 in self.columns[p].items():
                        key = (q, tuple(a + b for a, b in zip(e, e2)))
                        x = F.add(img.get(key, F.zero), F.mul(c, c2))
                        if x:
                            img[key] = x
                        else:
                            img.pop(key, None)
                if img and not gb.contains(img):
                    raise ModuleConstructionError(
                        f"map not well defined on relation column {k}")

    @classmethod
    def from_poly_matrix(cls, source, target, mat, check=True):
        """mat[i][j]: row i = target coordinate, column j = source generator."""
        cols = []
        for j in range(source.rank):
            cols.append(vec_from_polys([mat[i][j] for i in range(target.rank)]))
        return cls(source, target, cols, check=check)

    @classmethod
    def identity(cls, M: FPModule) -> "ModuleMap":
        one = M.ring.field.one
        cols = [{(i, M.ring._zero_exp): one} for i in range(M.rank)]
        return cls(M, M, cols, check=False)

    def apply_vec(self, v: dict) -> dict:
        """Image of an ambient vector of the source."""
        F = self.source.ring.field
        out: dict = {}
        for (p, e), c in v.items():
            for (q, e2), c2 in self.columns[p].items():
                key = (q, tuple(a + b for a, b in zip(e, e2)))
                x = F.add(out.get(key, F.zero), F.mul(c, c2))
                if x:
                    out[key] = x
                else:
                    out.pop(key, None)
        return out

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self o other (apply other first)."""
        if other.target is not self.source and other.target.rank != self.source.rank:
            raise ModuleConstructionError("composition rank mismatch")
        cols = [self.apply_vec(c) for c in other.columns]
        return ModuleMap(other.source, self.target, cols, check=False)

    def is_zero_map(self) -> bool:
        gb = self.target.rel_gb()
        return all((not c) or gb.contains(c) for c in self.columns)

    def kernel(self):
        """(K, inclusion K -> source)."""
        ring = self.source.ring
        U = preimage_gens(ring, self.columns, self.target.rank, self.target.relations)
        K = subquotient(ring, self.source.rank, U, self.source.relations)
        inc = ModuleMap(K, self.source, U, check=False)
        return K, inc

    def cokernel(self):
        """(C, projection target -> C)."""
        C = FPModule(self.source.ring, self.target.rank,
                     self.columns + self.target.relations)
        proj = ModuleMap(self.target, C,
                         ModuleMap.identity(self.target).columns, check=False)
        return C, proj

    def image(self):
        """(I, inclusion I -> target) with I presented on the column images."""
        ring = self.source.ring
        rel = preimage_gens(ring, self.columns, self.target.rank, self.target.relations)
        I = FPModule(ring, self.source.rank, rel)
        inc = ModuleMap(I, self.target, self.columns, check=False)
        return I, inc

    def is_injective(self) -> bool:
        K, _ = self.kernel()
        return K.is_zero()

    def is_surjective(self) -> bool:
        C, _ = self.cokernel()
        return C.is_zero()

    def is_isomorphism(self) -> bool:
        return self.is_surjective() and self.is_injective()


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def subquotient(ring: PolyRing, rank: int, U, V) -> FPModule:
    """span(U)/span(V) in R^rank, V inside span(U); presented on U."""
    U = [dict(u) for u in U]
    if not U:
        return FPModule.zero(ring)
    rel = preimage_gens(ring, U, rank, [dict(v) for v in V])
    return FPModule(ring, len(U), rel)


def submodule(ambient: FPModule, gens) -> tuple:
    """(S, inclusion) for the submodule of `ambient` generated by the
    ambient vectors `gens`."""
    S = subquotient(ambient.ring, ambient.rank, gens, ambient.relations)
    inc = ModuleMap(S, ambient, gens, check=False)
    return S, inc


def direct_sum(M: FPModule, N: FPModule):
    """(M + N, injections, projections)."""
    ring = M.ring
    r, s = M.rank, N.rank
    rel = [{(p, e): c for (p, e), c in col.items()} for col in M.relations]
    rel += [{(p + r, e): c for (p, e), c in col.items()} for col in N.relations]
    D = FPModule(ring, r + s, rel, shifts=M.shifts + N.shifts)
    one, ze = ring.field.one, ring._zero_exp
    i1 = ModuleMap(M, D, [{(i, ze): one} for i in range(r)], check=False)
    i2 = ModuleMap(N, D, [{(i + r, ze): one} for i in range(s)], check=False)
    p1 = ModuleMap(D, M, [{(i, ze): one} for i in range(r)] + [{} for _ in range(s)],
                   check=False)
    p2 = ModuleMap(D, N, [{} for _ in range(r)] + [{(i, ze): one} for i in range(s)],
                   check=False)
    return D, (i1, i2), (p1, p2)


def quotient_by_ideal(M: FPModule, I: IdealGens):
    """(M/IM, projection)."""
    ring = M.ring
    rel = list(M.relations)
    for g in I.gens:
        for i in range(M.rank):
            rel.append({(i, e): c for e, c in g.terms.items()})
    Q = FPModule(ring, M.rank, rel, shifts=M.shifts)
    proj = ModuleMap(M, Q, ModuleMap.identity(M).columns, check=False)
    return Q, proj


def mod_build(op: str, *args):
    """Dispatch: cokernel, kernel, image, direct_sum, quotient_by_ideal."""
    if op == "cokernel":
        return args[0].cokernel()
    if op == "kernel":
        return args[0].kernel()
    if op == "image":
        return args[0].image()
    if op == "direct_sum":
        return direct_sum(*args)
    if op == "quotient_by_ideal":
        return quotient_by_ideal(*args)
    raise ValueError(f"unknown module op {op!r}")


def hom_module(M: FPModule, N: FPModule) -> FPModule:
    """Presentation of Hom_R(M, N); generator matrices kept on .hom_gens."""
    ring = M.ring
    if ring != N.ring:
        raise RingMismatchError("Hom of modules over different rings")
    r, s = M.rank, N.rank
    c = len(M.relations)
    if r == 0 or s == 0:
        H = FPModule.zero(ring)
        H.hom_gens = []
        H.hom_source = M
        H.hom_target = N
        return H
    # flat index of matrix slot (i, j): i in source coords, j in target coords
    def flat(i, j):
        return i * s + j
    if c == 0:
        one, ze = ring.field.one, ring._zero_exp
        U = [{(flat(i, j), ze): one} for i in range(r) for j in range(s)]
    else:
        # condition map R^{rs} -> R^{sc}: A |-> (A p_1; ..; A p_c)
        cond_cols = []
        for i in range(r):
            for j in range(s):
                col = {}
                for k, p in enumerate(M.relations):
                    for (pos, e), coef in p.items():
                        if pos == i:
                            col[(k * s + j, e)] = coef
                cond_cols.append(col)
        W = []
        for k in range(c):
            for q in N.relations:
                W.append({(k * s + pos, e): coef for (pos, e), coef in q.items()})
        U = preimage_gens(ring, cond_cols, s * c, W)
    # maps factoring through the relations of N
    V = []
    for i in range(r):
        for q in N.relations:
            V.append({(flat(i, pos), e): coef for (pos, e), coef in q.items()})
    H = subquotient(ring, r * s, U, V)
    H.hom_gens = U
    H.hom_source = M
    H.hom_target = N
    return H


def hom_generator_map(H: FPModule, k: int) -> ModuleMap:
    """Materialize generator k of a Hom presentation as an actual map."""
    M, N = H.hom_source, H.hom_target
    s = N.rank
    cols = [dict() for _ in range(M.rank)]
    for (idx, e), c in H.hom_gens[k].items():
        i, j = divmod(idx, s)
        cols[i][(j, e)] = c
    return ModuleMap(M, N, cols)


def tensor_module(M: FPModule, N: FPModule) -> FPModule:
    """M (x) N presented by the standard block construction."""
    ring = M.ring
    if ring != N.ring:
        raise RingMismatchError("tensor of modules over different rings")
    r, s = M.rank, N.rank
    rel = []
    for p in M.relations:                       # P (x) I_s
        for j in range(s):
            rel.append({(pos * s + j, e): c for (pos, e), c in p.items()})
    for i in range(r):                          # I_r (x) Q
        for q in N.relations:
            rel.append({(i * s + pos, e): c for (pos, e), c in q.items()})
    return FPModule(ring, r * s, rel)


def torsion_submodule(a: IdealGens, M: FPModule):
    """(Gamma_a(M), inclusion), computed by stabilized socle iteration."""
    ring = M.ring
    if a.ring != ring:
        raise RingMismatchError("ideal and module over different rings")
    one, ze = ring.field.one, ring._zero_exp
    if a.n == 0:
        gens = [{(i, ze): one} for i in range(M.rank)]
        G = subquotient(ring, M.rank, gens, M.relations)
        return G, ModuleMap(G, M, gens, check=False)
    prev = list(M.relations)
    while True:
        cur = _ideal_socle_gens(ring, a, M.rank, prev)
        if _span_equal(ring, M.rank, cur + prev, prev):
            break
        # continue from a reduced generating set of the enlarged span
        gb = VectorGB(ring, M.rank, cur + list(M.relations))
        prev = [dict(v) for v, _ in gb.basis]
    gens = prev
    G = subquotient(ring, M.rank, gens, M.relations)
    return G, ModuleMap(G, M, gens, check=False)


def _ideal_socle_gens(ring, a: IdealGens, rank: int, w_gens):
    """Generators of {v in R^rank : a_j v in span(w_gens) for all j}."""
    n = a.n
    cols = []
    for k in range(rank):
        col = {}
        for j, g in enumerate(a.gens):
            for e, c in g.terms.items():
                col[(j * rank + k, e)] = c
        cols.append(col)
    W = []
    for j in range(n):
        for w in w_gens:
            W.append({(j * rank + p, e): c for (p, e), c in w.items()})
    return preimage_gens(ring, cols, n * rank, W)


def _span_equal(ring, rank, A, B) -> bool:
    ga = VectorGB(ring, rank, A)
    gb = VectorGB(ring, rank, B)
    return (all(gb.contains(v) for v, _ in ga.basis)
            and all(ga.contains(v) for v, _ in gb.basis))


def colon_submodule(M: FPModule, I: IdealGens):
    """((0 :_M I), inclusion)."""
    ring = M.ring
    one, ze = ring.field.one, ring._zero_exp
    if I.n == 0:
        gens = [{(i, ze): one} for i in range(M.rank)]
    else:
        gens = _ideal_socle_gens(ring, I, M.rank, M.relations)
    S = subquotient(ring, M.rank, gens, M.relations)
    return S, ModuleMap(S, M, gens, check=False)


# ---------------------------------------------------------------------------
# free resolutions
# ---------------------------------------------------------------------------

class FreeResolution:
    """Resolution F_L -> .. -> F_1 -> F_0 with H_0 = the module."""

    def __init__(self, module: FPModule, diffs):
        self.module = module
        self.diffs = diffs  # diffs[k]: columns (engine vecs in R^{rank F_k}), k >= 1

    def rank(self, i: int) -> int:
        if i == 0:
            return self.module.rank
        if 1 <= i <= len(self.diffs):
            return len(self.diffs[i - 1])
        return 0

    def differential_columns(self, i: int):
        """Columns of d_i: F_i -> F_{i-1} as engine vecs."""
        if 1 <= i <= len(self.diffs):
            return self.diffs[i - 1]
        return []


def free_resolution(M: FPModule, L: int) -> FreeResolution:
    """Iterated syzygies to homological degree L, then pruned at k >= 2."""
    if L < 0:
        raise ValueError("resolution bound must be >= 0")
    diffs = []
    cur_cols = [c for c in M.relations if c]
    cur_rank = M.rank
    for k in range(1, L + 1):
        if not cur_cols:
            break
        diffs.append(cur_cols)
        syz = engine_syzygies(M.ring, cur_rank, cur_cols)
        cur_rank = len(cur_cols)
        cur_cols = [s for s in syz if s]
    _prune_resolution(M.ring, diffs)
    return FreeResolution(M, diffs)


def _prune_resolution(ring, diffs):
    """Cancel unit entries in d_k for k >= 2, adjusting neighbours."""
    F = ring.field
    ze = ring._zero_exp
    k = 1  # index into diffs: diffs[k] is d_{k+1}
    while k < len(diffs):
        cols = diffs[k]
        piv = None
        for j, col in enumerate(cols):
            for (p, e), c in col.items():
                if e == ze and _is_unit_entry(col, p, ze):
                    piv = (j, p, col[(p, ze)])
                    break
            if piv:
                break
        if piv is None:
            k += 1
            continue
        j, i, u = piv
        uinv = F.inv(u)
        lam = {}
        # column ops on d_{k+1}: clear row i in the other columns
        for j2 in range(len(cols)):
            if j2 == j:
                continue
            entry = {e: c for (p, e), c in cols[j2].items() if p == i}
            if not entry:
                continue
            lam[j2] = entry
            new = dict(cols[j2])
            for e, c in entry.items():
                q = F.mul(c, uinv)
                for (p2, e2), c2 in cols[j].items():
                    key = (p2, tuple(a + b for a, b in zip(e, e2)))
                    x = F.sub(new.get(key, F.zero), F.mul(q, c2))
                    if x:
                        new[key] = x
                    else:
                        new.pop(key, None)
            cols[j2] = new
        # compensate on d_{k+2} rows: row_j += sum lam_{j2}/u * row_{j2}
        if k + 1 < len(diffs):
            for col2 in diffs[k + 1]:
                add = {}
                for j2, entry in lam.items():
                    piece = {e: c for (p, e), c in col2.items() if p == j2}
                    for e1, c1 in entry.items():
                        for e2, c2 in piece.items():
                            key = tuple(a + b for a, b in zip(e1, e2))
                            x = F.add(add.get(key, F.zero),
                                      F.mul(F.mul(c1, uinv), c2))
                            if x:
                                add[key] = x
                            else:
                                add.pop(key, None)
                for e, c in add.items():
                    key = (j, e)
                    x = F.add(col2.get(key, F.zero), c)
                    if x:
                        col2[key] = x
                    else:
                        col2.pop(key, None)
        # row ops on d_{k+1} to clear column j outside row i, compensating
        # on d_k by column ops (col_i of d_k += mu_{i2} col_{i2})
        colj = cols[j]
        mus = {p: {e: c for (pp, e), c in colj.items() if pp == p}
               for p in {pp for (pp, e) in colj} if p != i}
        dk = diffs[k - 1]
        if mus:
            base = dict(dk[i])
            for i2, entry in mus.items():
                for e1, c1 in entry.items():
                    q = F.mul(c1, uinv)
                    for (p2, e2), c2 in dk[i2].items():
                        key = (p2, tuple(a + b for a, b in zip(e1, e2)))
                        x = F.add(base.get(key, F.zero), F.mul(q, c2))
                        if x:
                            base[key] = x
                        else:
                            base.pop(key, None)
            dk[i] = base
        # the row ops on d_{k+1} only change column j (other columns have 0
        # in row i already); column j becomes u*e_i and is deleted with
        # generator i of F_k and generator j of F_{k+1}
        del cols[j]
        remap = {}
        t = 0
        for p in range(len(dk)):
            if p != i:
                remap[p] = t
                t += 1
        diffs[k] = [{(remap[p], e): c for (p, e), c in col.items() if p != i}
                    for col in cols]
        del dk[i]
        if k + 1 < len(diffs):
            remap2 = {}
            t = 0
            for p in range(len(cols) + 1):
                if p != j:
                    remap2[p] = t
                    t += 1
            diffs[k + 1] = [{(remap2[p], e): c for (p, e), c in col.items() if p != j}
                            for col in diffs[k + 1]]
        # drop now-empty trailing differentials
        while diffs and not any(diffs[-1]):
            diffs.pop()
        if k >= len(diffs):
            break


def _is_unit_entry(col, p, ze) -> bool:
    """Entry (polynomial) at position p of the column is a nonzero constant."""
    ent = {e for (pp, e) in col if pp == p}
    return ent == {ze}


# ---------------------------------------------------------------------------
# equivalence proxy
# ---------------------------------------------------------------------------

def modules_equivalent(A: FPModule, B: FPModule, D: int | None = None) -> bool:
    """Proxy isomorphism certificate: equal filtration dimensions
    dim_k M/m^d M up to d = D and equal annihilators.  Both invariants
    are presentation-independent; the test is sound for refutation."""
    za, zb = A.is_zero(), B.is_zero()
    if za or zb:
        return za and zb
    A, B = A.pruned(), B.pruned()
    if D is None:
        # any bound is sound (filtration dims are a true invariant); larger
        # bounds only add discriminating power at steep Groebner cost
        D = min(8, max(A.default_degree_bound(), B.default_degree_bound()))
    if A.filtration_dims(D) != B.filtration_dims(D):
        return False
    from .groebner import _same_ideal
    return _same_ideal(A.annihilator(), B.annihilator())
