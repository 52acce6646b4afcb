"""Chain complexes of free modules, the Koszul complex, and homology.

A FreeComplex stores ranks and differentials d_i: F_i -> F_{i-1} as
columns of engine vectors.  Tensoring with / Hom into a finitely
presented module produces a ModuleComplex whose homology is computed by
subquotient presentations.
"""

from __future__ import annotations

import itertools

from .groebner import preimage_gens
from .modules import FPModule, ModuleMap, subquotient
from .rings import IdealGens, PolyRing


class ComplexError(ValueError):
    pass


class FreeComplex:
    """F_n -> .. -> F_1 -> F_0; diffs[i] has the columns of d_{i+1}."""

    def __init__(self, ring: PolyRing, ranks, diffs, check: bool = True):
        self.ring = ring
        self.ranks = list(ranks)
        self.diffs = [list(cols) for cols in diffs]
        if len(self.diffs) != max(len(self.ranks) - 1, 0):
            raise ComplexError("need one differential per adjacent pair")
        for i, cols in enumerate(self.diffs):
            if len(cols) != self.ranks[i + 1]:
                raise ComplexError(f"d_{i + 1} has wrong number of columns")
        if check:
            self._check_squares_zero()

    @property
    def top(self) -> int:
        return len(self.ranks) - 1

    def rank(self, i: int) -> int:
        return self.ranks[i] if 0 <= i <= self.top else 0

    def differential_columns(self, i: int):
        """Columns of d_i: F_i -> F_{i-1} (empty outside range)."""
        if 1 <= i <= self.top:
            return self.diffs[i - 1]
        return []

    def _check_squares_zero(self):
        F = self.ring.field
        for i in range(2, self.top + 1):
            lower = self.differential_columns(i - 1)
            for col in self.differential_columns(i):
                acc: dict = {}
                for (p, e), c in col.items():
                    for (q, e2), c2 in lower[p].items():
                        key = (q, tuple(a + b for a, b in zip(e, e2)))
                        v = F.add(acc.get(key, F.zero), F.mul(c, c2))
                        if v:
                            acc[key] = v
                        else:
                            acc.pop(key, None)
                if acc:
                    raise ComplexError(f"d_{i - 1} d_{i} != 0")

    def shift(self, k: int) -> "FreeComplex":
        """Pad with k zero modules at the bottom (homological shift)."""
        if k < 0:
            raise ComplexError("only nonnegative shifts are supported")
        if k == 0:
            return FreeComplex(self.ring, self.ranks, self.diffs, check=False)
        ranks = [0] * k + self.ranks
        # new d_i = 0 for i <= k (into or out of a zero module), old d_{i-k} above
        new_diffs = []
        for i in range(1, len(ranks)):
            if i <= k:
                new_diffs.append([{} for _ in range(ranks[i])])
            else:
                new_diffs.append(self.diffs[i - k - 1])
        return FreeComplex(self.ring, ranks, new_diffs, check=False)


def koszul_complex(a: IdealGens) -> FreeComplex:
    """Koszul complex on the generator list of a.

    Basis of F_i: the i-subsets of {0..n-1} in lexicographic order;
    d(e_S) = sum_k (-1)^(k+1) a_{s_k} e_{S - s_k}.
    """
    ring = a.ring
    n = a.n
    bases = [list(itertools.combinations(range(n), i)) for i in range(n + 1)]
    index = [{S: j for j, S in enumerate(B)} for B in bases]
    F = ring.field
    diffs = []
    for i in range(1, n + 1):
        cols = []
        for S in bases[i]:
            col: dict = {}
            for k, sk in enumerate(S):
                T = S[:k] + S[k + 1:]
                sign = F.one if k % 2 == 0 else F.neg(F.one)
                pos = index[i - 1][T]
                for e, c in a.gens[sk].terms.items():
                    v = F.add(col.get((pos, e), F.zero), F.mul(sign, c))
                    if v:
                        col[(pos, e)] = v
                    else:
                        col.pop((pos, e), None)
            cols.append(col)
        diffs.append(cols)
    return FreeComplex(ring, [len(B) for B in bases], diffs)


class ModuleComplex:
    """C_n -> .. -> C_0 with FPModule terms and ModuleMap differentials."""

    def __init__(self, modules, maps):
        self.modules = list(modules)
        self.maps = list(maps)  # maps[i] = d_{i+1}: C_{i+1} -> C_i
        if len(self.maps) != max(len(self.modules) - 1, 0):
            raise ComplexError("need one map per adjacent pair")

    @property
    def top(self) -> int:
        return len(self.modules) - 1

    def module(self, i: int):
        return self.modules[i] if 0 <= i <= self.top else None

    def differential(self, i: int):
        """d_i: C_i -> C_{i-1} or None outside range."""
        if 1 <= i <= self.top:
            return self.maps[i - 1]
        return None

    def homology(self, i: int) -> FPModule:
        """ker d_i / im d_{i+1}, as a pruned presentation."""
        C = self.module(i)
        if C is None:
            ring = self.modules[0].ring
            return FPModule.zero(ring)
        ring = C.ring
        d_i = self.differential(i)
        d_up = self.differential(i + 1)
        if d_i is None:
            cycles = ModuleMap.identity(C).columns
        else:
            cycles = preimage_gens(ring, d_i.columns, d_i.target.rank,
                                   d_i.target.relations)
        boundary = list(d_up.columns) if d_up is not None else []
        H = subquotient(ring, C.rank, cycles, boundary + C.relations)
        return H.pruned()

    def homology_raw(self, i: int):
        """(H unpruned, cycle generators as ambient vectors of C_i)."""
        C = self.module(i)
        ring = C.ring
        d_i = self.differential(i)
        d_up = self.differential(i + 1)
        if d_i is None:
            cycles = ModuleMap.identity(C).columns
        else:
            cycles = preimage_gens(ring, d_i.columns, d_i.target.rank,
                                   d_i.target.relations)
        boundary = list(d_up.columns) if d_up is not None else []
        H = subquotient(ring, C.rank, cycles, boundary + C.relations)
        return H, cycles


def tensor_with_module(K: FreeComplex, M: FPModule) -> ModuleComplex:
    """K (x) M: term i is M^{rank_i}, differentials act by the K matrices."""
    ring = K.ring
    modules = [_module_power(M, K.rank(i)) for i in range(K.top + 1)]
    maps = []
    for i in range(1, K.top + 1):
        cols = _block_scalar_columns(ring, K.differential_columns(i),
                                     K.rank(i - 1), M.rank)
        maps.append(ModuleMap(modules[i], modules[i - 1], cols, check=False))
    return ModuleComplex(modules, maps)


def hom_into_module(K: FreeComplex, M: FPModule) -> ModuleComplex:
    """Hom(K, M) as a chain complex: term i holds Hom(F_{n-i}, M) = M^{rank_{n-i}}
    so that homology at i is the cohomology H^{n-i} of the cochain complex."""
    ring = K.ring
    n = K.top
    modules = [_module_power(M, K.rank(n - i)) for i in range(n + 1)]
    maps = []
    for i in range(1, n + 1):
        # d_i of the new complex is the transpose of d_{n-i+1} of K
        cols_K = K.differential_columns(n - i + 1)
        transposed = _transpose_columns(ring, cols_K, K.rank(n - i))
        cols = _block_scalar_columns(ring, transposed, len(cols_K), M.rank)
        maps.append(ModuleMap(modules[i], modules[i - 1], cols, check=False))
    return ModuleComplex(modules, maps)


def _module_power(M: FPModule, b: int) -> FPModule:
    """M^b with block layout: ambient coordinate (j, t) -> j*M.rank + t."""
    rel = []
    for j in range(b):
        for col in M.relations:
            rel.append({(j * M.rank + p, e): c for (p, e), c in col.items()})
    return FPModule(M.ring, b * M.rank, rel)


def _block_scalar_columns(ring, scalar_cols, target_blocks, mrank):
    """Columns for the map M^{len(cols)} -> M^{target_blocks} whose block
    (q, j) acts by the scalar polynomial scalar_cols[j][q]."""
    out = []
    for col in scalar_cols:
        for t in range(mrank):
            out.append({(q * mrank + t, e): c for (q, e), c in col.items()})
    return out


def _transpose_columns(ring, cols, nrows):
    """Transpose a scalar matrix given by columns of engine vectors."""
    out = [dict() for _ in range(nrows)]
    for j, col in enumerate(cols):
        for (q, e), c in col.items():
            out[q][(j, e)] = c
    return out


def cone(phi_cols, K: FreeComplex, L: FreeComplex) -> FreeComplex:
    """Mapping cone of a chain map phi: K -> L given by per-degree column
    lists phi_cols[i] (columns in R^{rank L_i}).  cone_i = K_{i-1} + L_i."""
    ring = K.ring
    F = ring.field
    n = max(K.top + 1, L.top)
    ranks = [K.rank(i - 1) + L.rank(i) for i in range(n + 1)]
    diffs = []
    for i in range(1, n + 1):
        cols = []
        lk = L.rank(i - 1)
        # coordinate layout of cone_i: L_i first, then K_{i-1}
        dL = L.differential_columns(i)
        for j in range(L.rank(i)):
            cols.append(dict(dL[j]) if dL else {})
        # e_j of K_{i-1} maps to (phi_{i-1} e_j, -d^K_{i-1} e_j)
        dK = K.differential_columns(i - 1)
        phi = phi_cols[i - 1] if i - 1 < len(phi_cols) else []
        for j in range(K.rank(i - 1)):
            col: dict = {}
            if dK:
                for (q, e), c in dK[j].items():
                    col[(lk + q, e)] = F.neg(c)
            if j < len(phi):
                for (q, e), c in phi[j].items():
                    v = F.add(col.get((q, e), F.zero), c)
                    if v:
                        col[(q, e)] = v
                    else:
                        col.pop((q, e), None)
            cols.append(col)
        diffs.append(cols)
    return FreeComplex(ring, ranks, diffs, check=False)


def complex_ops(op: str, *args):
    if op == "tensor_with_module":
        return tensor_with_module(*args)
    if op == "hom_into_module":
        return hom_into_module(*args)
    if op == "shift":
        return args[0].shift(args[1])
    if op == "cone":
        return cone(*args)
    raise ValueError(f"unknown complex op {op!r}")


# ---------------------------------------------------------------------------
# Koszul homology
# ---------------------------------------------------------------------------

def koszul_homology(a: IdealGens, M: FPModule, side: str = "tensor"):
    """[H_0, .., H_n] of K(a) (x) M, or Hom(K(a), M) cohomology when
    side == "hom" (returned so that entry i is H^i)."""
    K = koszul_complex(a)
    if side == "tensor":
        C = tensor_with_module(K, M)
        return [C.homology(i) for i in range(a.n + 1)]
    if side == "hom":
        C = hom_into_module(K, M)
        n = a.n
        return [C.homology(n - i) for i in range(n + 1)]
    raise ValueError(f"unknown side {side!r}")


def koszul_homology_certified(a: IdealGens, M: FPModule, rng=None):
    """Tensor-side Koszul homology, cross-checked in each degree against
    self-duality (H_i ~ H^{n-i}) and invariance under a generator
    permutation.  Raises ComplexError on any mismatch."""
    from .modules import modules_equivalent
    n = a.n
    tensor = koszul_homology(a, M, side="tensor")
    homs = koszul_homology(a, M, side="hom")
    for i in range(n + 1):
        if not modules_equivalent(tensor[i], homs[n - i]):
            raise ComplexError(f"Koszul self-duality fails in degree {i}")
    if n > 1:
        if rng is not None:
            perm = list(range(n))
            rng.shuffle(perm)
        else:
            perm = list(range(1, n)) + [0]
        b = IdealGens(a.ring, [a.gens[p] for p in perm])
        permuted = koszul_homology(b, M, side="tensor")
        for i in range(n + 1):
            if not modules_equivalent(tensor[i], permuted[i]):
                raise ComplexError(
                    f"Koszul homology not permutation invariant in degree {i}")
    return tensor
