"""Groebner bases for submodules of free modules, syzygies, and ideal ops.

Engine representation: a vector in R^r is a dict mapping terms (pos, exp)
to nonzero field coefficients.  Ideals are the rank-1 case.  The module
order is term-over-position: monomials compared by the ring order first,
lower position wins ties.
"""

from __future__ import annotations

import itertools

from .rings import IdealGens, Poly, PolyRing, RingMismatchError

EMPTY_DIM = "empty"


# ---------------------------------------------------------------------------
# engine vectors
# ---------------------------------------------------------------------------

def term_key(ring: PolyRing):
    rk = ring.key

    def key(t):
        return (rk(t[1]), -t[0])
    return key


def vec_from_polys(polys) -> dict:
    v: dict = {}
    for pos, p in enumerate(polys):
        for e, c in p.terms.items():
            v[(pos, e)] = c
    return v


def vec_to_polys(ring: PolyRing, v: dict, rank: int):
    rows = [dict() for _ in range(rank)]
    for (pos, e), c in v.items():
        rows[pos][e] = c
    return [Poly(ring, r) for r in rows]


def vec_add_scaled(F, v: dict, w: dict, c) -> dict:
    """v + c*w, fresh dict."""
    out = dict(v)
    for t, a in w.items():
        x = F.add(out.get(t, F.zero), F.mul(c, a))
        if x:
            out[t] = x
        else:
            out.pop(t, None)
    return out


def vec_mono_mul(F, v: dict, exp, c) -> dict:
    """(c * x^exp) * v."""
    return {(pos, tuple(a + b for a, b in zip(e, exp))): F.mul(a2, c)
            for (pos, e), a2 in v.items()}


def vec_scale(F, v: dict, c) -> dict:
    return {t: F.mul(a, c) for t, a in v.items()}


def _divides(e1, e2) -> bool:
    return all(a <= b for a, b in zip(e1, e2))


class VectorGB:
    """Reduced Groebner basis of the submodule of R^rank spanned by gens.

    Each basis element carries a representation over the input generators,
    enabling lifts (membership witnesses) and syzygy extraction.
    """

    def __init__(self, ring: PolyRing, rank: int, gens):
        self.ring = ring
        self.rank = rank
        self.gens = [dict(g) for g in gens]
        self._key = term_key(ring)
        self.basis: list = []       # list of (vec, rep) with monic lead
        self._zero_syz: list = []   # syzygies discovered during reduction to 0
        self._compute()

    # -- division ---------------------------------------------------------
    def _divmod(self, v: dict, vecs, lts, lcs, track: bool):
        """Full normal form of v against the given reducers.

        Returns (remainder, quotients) where quotients[i] is a rank-1 engine
        vec (keys (0, exp)) such that v = sum_i quotients[i]*vecs[i] + rem.
        """
        F = self.ring.field
        key = self._key
        rem: dict = {}
        quot = [dict() for _ in vecs] if track else None
        work = dict(v)
        while work:
            t = max(work, key=key)
            c = work[t]
            pos, e = t
            hit = -1
            for i, (lpos, le) in enumerate(lts):
                if lpos == pos and _divides(le, e):
                    hit = i
                    break
            if hit < 0:
                rem[t] = c
                del work[t]
                continue
            le = lts[hit][1]
            m = tuple(a - b for a, b in zip(e, le))
            q = F.mul(c, F.inv(lcs[hit]))
            work = vec_add_scaled(F, work, vec_mono_mul(F, vecs[hit], m, q), F.neg(F.one))
            if track:
                x = F.add(quot[hit].get((0, m), F.zero), q)
                if x:
                    quot[hit][(0, m)] = x
                else:
                    quot[hit].pop((0, m), None)
        return rem, quot

    def _reduce_full(self, v: dict, track: bool):
        return self._divmod(v, [b[0] for b in self.basis], self._lt, self._lc, track)

    # -- Buchberger -------------------------------------------------------
    def _compute(self):
        F = self.ring.field
        key = self._key
        self.basis = []
        self._lt, self._lc = [], []

        def add_elem(v, rep):
            self.basis.append((v, rep))
            t = max(v, key=key)
            self._lt.append(t)
            self._lc.append(v[t])

        # seed with nonzero generators reduced against earlier ones
        for j, g in enumerate(self.gens):
            rep = {(j, self.ring._zero_exp): F.one}
            rem, quot = self._reduce_full(g, True)
            rep = self._combine_rep(rep, quot, negate=True)
            if rem:
                add_elem(rem, rep)
            elif any(rep.values()):
                self._zero_syz.append(rep)

        pairs = []
        for i, j in itertools.combinations(range(len(self.basis)), 2):
            self._maybe_pair(pairs, i, j)
        while pairs:
            pairs.sort(key=lambda p: self.ring.key(p[0]), reverse=True)
            lcm_e, i, j = pairs.pop()
            s, srep = self._s_vector(i, j)
            rem, quot = self._reduce_full(s, True)
            rep = self._combine_rep(srep, quot, negate=True)
            if rem:
                k = len(self.basis)
                add_elem(rem, rep)
                for t in range(k):
                    self._maybe_pair(pairs, t, k)
            elif any(rep.values()):
                self._zero_syz.append(rep)
        self._interreduce()

    def _maybe_pair(self, pairs, i, j):
        (pi, ei), (pj, ej) = self._lt[i], self._lt[j]
        if pi != pj:
            return
        lcm_e = tuple(max(a, b) for a, b in zip(ei, ej))
        if (all(a + b == l for a, b, l in zip(ei, ej, lcm_e))
                and all(p == pi for (p, _) in self.basis[i][0])
                and all(p == pi for (p, _) in self.basis[j][0])):
            # coprime leads of two single-position vectors: the S-vector
            # reduces to zero (the product criterion needs polynomials, so
            # it only applies when both vectors live in one position)
            return
        pairs.append((lcm_e, i, j))

    def _s_vector(self, i, j):
        F = self.ring.field
        (pos, ei), (_, ej) = self._lt[i], self._lt[j]
        lcm_e = tuple(max(a, b) for a, b in zip(ei, ej))
        mi = tuple(a - b for a, b in zip(lcm_e, ei))
        mj = tuple(a - b for a, b in zip(lcm_e, ej))
        ci = F.inv(self._lc[i])
        cj = F.neg(F.inv(self._lc[j]))
        s = vec_add_scaled(F, vec_mono_mul(F, self.basis[i][0], mi, ci),
                           vec_mono_mul(F, self.basis[j][0], mj, F.neg(cj)), F.neg(F.one))
        srep = vec_add_scaled(F, vec_mono_mul(F, self.basis[i][1], mi, ci),
                              vec_mono_mul(F, self.basis[j][1], mj, F.neg(cj)), F.neg(F.one))
        return s, srep

    def _combine_rep(self, rep, quot, negate: bool):
        """rep - sum_i quot[i] * rep(basis[i])."""
        F = self.ring.field
        out = dict(rep)
        if quot is None:
            return out
        for i, q in enumerate(quot):
            if not q:
                continue
            brep = self.basis[i][1]
            for (_, m), c in q.items():
                coef = F.neg(c) if negate else c
                out = vec_add_scaled(F, out, vec_mono_mul(F, brep, m, F.one), coef)
        return out

    def _interreduce(self):
        F = self.ring.field
        key = self._key
        # minimalize: drop elements whose lead is divisible by another lead
        order = sorted(range(len(self.basis)),
                       key=lambda i: (self.ring.key(self._lt[i][1]), -self._lt[i][0]))
        keep = []
        for i in order:
            (pi, ei) = self._lt[i]
            if any(self._lt[k][0] == pi and _divides(self._lt[k][1], ei) for k in keep):
                continue
            keep.append(i)
        basis = [self.basis[i] for i in keep]
        lts = [self._lt[i] for i in keep]
        # tail-reduce each element against the others; leads are untouchable
        reduced = []
        for i, (v, rep) in enumerate(basis):
            ovecs = [basis[k][0] for k in range(len(basis)) if k != i]
            olts = [lts[k] for k in range(len(basis)) if k != i]
            olcs = [ov[lt] for ov, lt in zip(ovecs, olts)]
            rem, quot = self._divmod(v, ovecs, olts, olcs, True)
            wrep = dict(rep)
            kk = [k for k in range(len(basis)) if k != i]
            for qi, q in enumerate(quot):
                for (_, m), c in q.items():
                    wrep = vec_add_scaled(F, wrep,
                                          vec_mono_mul(F, basis[kk[qi]][1], m, F.one), F.neg(c))
            lt = max(rem, key=key)
            q = F.inv(rem[lt])
            reduced.append((vec_scale(F, rem, q), vec_scale(F, wrep, q)))
        reduced.sort(key=lambda br: (self.ring.key(max(br[0], key=key)[1]),
                                     -max(br[0], key=key)[0]), reverse=True)
        self.basis = reduced
        self._lt = [max(v, key=key) for v, _ in reduced]
        self._lc = [v[t] for (v, _), t in zip(reduced, self._lt)]

    # -- public queries ---------------------------------------------------
    def normal_form(self, v: dict) -> dict:
        rem, _ = self._reduce_full(v, False)
        return rem

    def contains(self, v: dict) -> bool:
        return not self.normal_form(v)

    def lift(self, v: dict):
        """Coefficients over the original generators, or None if not a member."""
        F = self.ring.field
        rem, quot = self._reduce_full(v, True)
        if rem:
            return None
        out: dict = {}
        for i, q in enumerate(quot):
            brep = self.basis[i][1]
            for (_, m), c in q.items():
                out = vec_add_scaled(F, out, vec_mono_mul(F, brep, m, F.one), c)
        return out

    def lead_terms(self):
        return list(self._lt)

    def syzygy_gens(self):
        """Generators of the syzygy module of the original generators.

        Schreyer-style: S-pair reductions of the reduced basis, plus the
        identification columns e_j - lift(g_j), plus syzygies found during
        the construction.
        """
        F = self.ring.field
        out = [dict(s) for s in self._zero_syz if s]
        nb = len(self.basis)
        for i, j in itertools.combinations(range(nb), 2):
            if self._lt[i][0] != self._lt[j][0]:
                continue
            s, srep = self._s_vector(i, j)
            rem, quot = self._reduce_full(s, True)
            if rem:
                raise AssertionError("reduced basis fails Buchberger criterion")
            syz = self._combine_rep(srep, quot, negate=True)
            if syz:
                out.append(syz)
        # columns of (I - A B): g_j reduced through the basis
        for j, g in enumerate(self.gens):
            rep = self.lift(g)
            assert rep is not None
            col = vec_add_scaled(F, {(j, self.ring._zero_exp): F.one}, rep, F.neg(F.one))
            if col:
                out.append(col)
        return out


# ---------------------------------------------------------------------------
# spec-facing wrappers
# ---------------------------------------------------------------------------

class SubmoduleGens:
    """Generating vectors of a submodule of R^rank."""

    def __init__(self, ring: PolyRing, rank: int, vectors):
        self.ring = ring
        self.rank = rank
        self.vectors = []
        for v in vectors:
            if len(v) != rank:
                raise ValueError("vector length does not match rank")
            for p in v:
                if p.ring != ring:
                    raise RingMismatchError("vector entry from a different ring")
            self.vectors.append(list(v))

    def engine_vecs(self):
        return [vec_from_polys(v) for v in self.vectors]


class GroebnerBasis:
    """Reduced Groebner basis of an ideal (rank-1 submodule)."""

    def __init__(self, ring: PolyRing, source: IdealGens, gb: VectorGB):
        self.ring = ring
        self.source = source
        self._gb = gb
        self.basis = [vec_to_polys(ring, v, 1)[0] for v, _ in gb.basis]

    def __iter__(self):
        return iter(self.basis)


def buchberger(gens) -> "GroebnerBasis | VectorGB":
    """Reduced Groebner basis of an IdealGens or SubmoduleGens."""
    if isinstance(gens, IdealGens):
        gb = VectorGB(gens.ring, 1, [vec_from_polys([g]) for g in gens.gens])
        return GroebnerBasis(gens.ring, gens, gb)
    if isinstance(gens, SubmoduleGens):
        return VectorGB(gens.ring, gens.rank, gens.engine_vecs())
    raise TypeError("expected IdealGens or SubmoduleGens")


def normal_form(p: Poly, gb: GroebnerBasis) -> Poly:
    if p.ring != gb.ring:
        raise RingMismatchError("polynomial from a different ring")
    return vec_to_polys(gb.ring, gb._gb.normal_form(vec_from_polys([p])), 1)[0]


def syzygies(vectors: SubmoduleGens) -> SubmoduleGens:
    """Generators of the kernel of R^(#vectors) -> R^rank."""
    gb = VectorGB(vectors.ring, vectors.rank, vectors.engine_vecs())
    s = len(vectors.vectors)
    out = [vec_to_polys(vectors.ring, z, s) for z in gb.syzygy_gens()]
    return SubmoduleGens(vectors.ring, s, out)


# -- engine-level helpers reused by the module layer ------------------------

def engine_syzygies(ring: PolyRing, rank: int, vecs) -> list:
    """Engine vectors -> syzygy engine vectors (rank = len(vecs))."""
    gb = VectorGB(ring, rank, vecs)
    return gb.syzygy_gens()


def preimage_gens(ring: PolyRing, cols: list, rank: int, w_gens: list) -> list:
    """Generators of {v in R^m : sum v_i cols_i in span(w_gens)} in R^m.

    cols are engine vectors in R^rank (m of them), w_gens engine vectors in
    R^rank.  Returns engine vectors in R^m.
    """
    m = len(cols)
    syz = engine_syzygies(ring, rank, cols + w_gens)
    out = []
    for z in syz:
        proj = {(p, e): c for (p, e), c in z.items() if p < m}
        if proj:
            out.append(proj)
    # the preimage always contains nothing else; dedupe empties implicitly
    return out


# ---------------------------------------------------------------------------
# dimension and ideal operations
# ---------------------------------------------------------------------------

def krull_dim(gb: GroebnerBasis):
    """Krull dimension of R/I from the leading-term ideal.

    Returns EMPTY_DIM when I = (1).
    """
    ring = gb.ring
    m = ring.nvars
    leads = [p.lead()[0] for p in gb.basis]
    if any(all(x == 0 for x in e) for e in leads):
        return EMPTY_DIM
    for size in range(m, -1, -1):
        for subset in itertools.combinations(range(m), size):
            sset = set(subset)
            # independent iff no lead monomial is supported inside the subset
            ok = True
            for e in leads:
                supp = {i for i in range(m) if e[i] > 0}
                if supp and supp <= sset:
                    ok = False
                    break
            if ok:
                return size
    return 0


def ideal_colon(I: IdealGens, f: Poly) -> IdealGens:
    """(I : f) = {g : g*f in I}."""
    ring = I.ring
    if f.is_zero():
        return IdealGens(ring, [ring.one()])
    cols = [vec_from_polys([f])]
    w = [vec_from_polys([g]) for g in I.gens]
    pre = preimage_gens(ring, cols, 1, w)
    gens = [vec_to_polys(ring, {(0, e): c for (p, e), c in v.items()}, 1)[0] for v in pre]
    return _reduce_ideal(IdealGens(ring, gens))


def ideal_colon_ideal(I: IdealGens, J: IdealGens) -> IdealGens:
    """(I : J) intersected over generators of J."""
    ring = I.ring
    if J.n == 0:
        return IdealGens(ring, [ring.one()])
    out = ideal_colon(I, J.gens[0])
    for f in J.gens[1:]:
        out = ideal_intersect(out, ideal_colon(I, f))
    return out


def ideal_intersect(I: IdealGens, J: IdealGens) -> IdealGens:
    """I cap J via the kernel of R -> R/I + R/J."""
    ring = I.ring
    cols = [vec_from_polys([ring.one(), ring.one()])]
    w = [vec_from_polys([g, ring.zero()]) for g in I.gens]
    w += [vec_from_polys([ring.zero(), g]) for g in J.gens]
    pre = preimage_gens(ring, cols, 2, w)
    gens = [vec_to_polys(ring, {(0, e): c for (p, e), c in v.items()}, 1)[0] for v in pre]
    return _reduce_ideal(IdealGens(ring, gens))


def ideal_saturation(I: IdealGens, J: IdealGens) -> IdealGens:
    """(I : J^infinity) by iterated colon until the basis stabilizes."""
    cur = I
    cur_lt = _lt_set(cur)
    while True:
        nxt = ideal_colon_ideal(cur, J)
        nxt_lt = _lt_set(nxt)
        if nxt_lt == cur_lt and _same_ideal(cur, nxt):
            return cur
        cur, cur_lt = nxt, nxt_lt


def radical_membership(f: Poly, I: IdealGens) -> bool:
    """f in rad(I), via saturation of I by (f) reaching (1)."""
    sat = ideal_saturation(I, IdealGens(I.ring, [f]))
    gb = buchberger(sat)
    return normal_form(I.ring.one(), gb).is_zero()


def ideal_ops(op: str, I: IdealGens, J):
    """Dispatch: colon, saturation, sum, product, radical_membership."""
    if op == "colon":
        return ideal_colon_ideal(I, J) if isinstance(J, IdealGens) else ideal_colon(I, J)
    if op == "saturation":
        J = J if isinstance(J, IdealGens) else IdealGens(I.ring, [J])
        return ideal_saturation(I, J)
    if op == "sum":
        return I.sum(J)
    if op == "product":
        return I.product(J)
    if op == "radical_membership":
        return radical_membership(J, I)
    raise ValueError(f"unknown ideal op {op!r}")


def _lt_set(I: IdealGens):
    gb = buchberger(I)
    return frozenset(p.lead()[0] for p in gb.basis)


def _same_ideal(I: IdealGens, J: IdealGens) -> bool:
    gi, gj = buchberger(I), buchberger(J)
    return (all(normal_form(p, gj).is_zero() for p in gi.basis)
            and all(normal_form(p, gi).is_zero() for p in gj.basis))


def _reduce_ideal(I: IdealGens) -> IdealGens:
    gb = buchberger(I)
    return IdealGens(I.ring, list(gb.basis))
