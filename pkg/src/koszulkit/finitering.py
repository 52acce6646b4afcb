"""Finite-ring backend: exact homological algebra over finite commutative
rings such as Z/n, F_p[x]/(x^k), and finite products of these.

Rings and modules are represented on additive coordinate tuples with a
modulus per coordinate; all structure maps are integer matrices, so every
computation reduces to integer lattice linear algebra (kernels, Hermite
and Smith normal forms).  This gives fully exact, enumeration-friendly
Koszul homology, Tor/Ext, local homology and cohomology, and Matlis
duality for brute-force verification on small rings.
"""

from __future__ import annotations

import itertools
import re
from math import gcd, prod


class FiniteRingError(ValueError):
    pass


# ---------------------------------------------------------------------------
# integer lattice toolkit
# ---------------------------------------------------------------------------

def z_kernel(A):
    """Basis of the integer kernel of an m x n matrix (list of rows)."""
    m = len(A)
    n = len(A[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return [[1 if t == j else 0 for t in range(n)] for j in range(n)]
    # columns carry an identity tail recording the column operations
    cols = [[A[i][j] for i in range(m)] + [1 if t == j else 0 for t in range(n)]
            for j in range(n)]
    piv = 0
    for r in range(m):
        while True:
            nz = [j for j in range(piv, n) if cols[j][r] != 0]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(cols[j][r]))
            for j in nz:
                if j == j0:
                    continue
                q = cols[j][r] // cols[j0][r]
                if q:
                    cols[j] = [a - q * b for a, b in zip(cols[j], cols[j0])]
            nz = [j for j in range(piv, n) if cols[j][r] != 0]
            if len(nz) == 1:
                cols[piv], cols[nz[0]] = cols[nz[0]], cols[piv]
                piv += 1
                break
    return [c[m:] for c in cols[piv:]]


def smith_normal_form(A):
    """(D, S, T) with S A T = D diagonal, S and T unimodular.

    A is m x n (list of rows); D is returned as a list of rows.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(row) for row in A]
    S = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    T = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i, j, q):     # row_i -= q * row_j
        D[i] = [a - q * b for a, b in zip(D[i], D[j])]
        S[i] = [a - q * b for a, b in zip(S[i], S[j])]

    def col_op(i, j, q):     # col_i -= q * col_j
        for row in D:
            row[i] -= q * row[j]
        for row in T:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        S[i], S[j] = S[j], S[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in T:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        # find a pivot
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] != 0:
                    if piv is None or abs(D[i][j]) < abs(D[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        done = False
        while not done:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    row_op(i, t, q)
                    if D[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    col_op(j, t, q)
                    if D[t][j]:
                        swap_cols(t, j)
                        done = False
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            S[t] = [-a for a in S[t]]
        t += 1
    # enforce the divisibility chain d_1 | d_2 | ...
    changed = True
    while changed:
        changed = False
        for i in range(t - 1):
            a, b = D[i][i], D[i + 1][i + 1]
            if a == 0 and b != 0:
                swap_rows(i, i + 1)
                swap_cols(i, i + 1)
                changed = True
            elif a != 0 and b % a != 0:
                _snf_pair_fix(D, S, T, i)
                changed = True
    return D, S, T


def _snf_pair_fix(D, S, T, i):
    """Restore divisibility between diagonal entries i and i+1."""
    # move b next to a: col_{i} += col_{i+1} puts b into position (i+1, i)
    for row in D:
        row[i] += row[i + 1]
    for row in T:
        row[i] += row[i + 1]
    # now eliminate in the 2x2 block with euclidean steps
    while D[i + 1][i] != 0 or D[i][i + 1] != 0:
        if D[i + 1][i] != 0:
            q = D[i + 1][i] // D[i][i] if D[i][i] else 0
            D[i + 1] = [a - q * b for a, b in zip(D[i + 1], D[i])]
            S[i + 1] = [a - q * b for a, b in zip(S[i + 1], S[i])]
            if D[i + 1][i]:
                D[i], D[i + 1] = D[i + 1], D[i]
                S[i], S[i + 1] = S[i + 1], S[i]
        if D[i][i + 1] != 0:
            q = D[i][i + 1] // D[i][i] if D[i][i] else 0
            for row in D:
                row[i + 1] -= q * row[i]
            for row in T:
                row[i + 1] -= q * row[i]
            if D[i][i + 1]:
                for row in D:
                    row[i], row[i + 1] = row[i + 1], row[i]
                for row in T:
                    row[i], row[i + 1] = row[i + 1], row[i]
    for k in (i, i + 1):
        if D[k][k] < 0:
            D[k] = [-a for a in D[k]]
            S[k] = [-a for a in S[k]]


def solve_integer(A, b):
    """One integer solution x of A x = b, or None (A: list of rows)."""
    m = len(A)
    n = len(A[0]) if m else 0
    D, S, T = smith_normal_form(A)
    c = [sum(S[i][k] * b[k] for k in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(min(m, n)):
        d = D[i][i]
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
    for i in range(min(m, n), m):
        if c[i] != 0:
            return None
    return [sum(T[i][k] * y[k] for k in range(n)) for i in range(n)]


def mat_mul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B)))
             for j in range(len(B[0]))] for i in range(len(A))]


# ---------------------------------------------------------------------------
# finite abelian groups with coordinates
# ---------------------------------------------------------------------------

class GroupQuotient:
    """Quotient L_U / L_V of two full-rank integer lattices in Z^l, where
    both contain diag(mods); provides canonical coordinates."""

    def __init__(self, l, mods, U_cols, V_cols):
        self.l = l
        diag = [[mods[i] if i == j else 0 for j in range(l)] for i in range(l)]
        U = _cols_to_rows(U_cols, l) + diag
        BU = _lattice_basis(U, l)       # rows of a basis matrix (l x l)
        self._BU = BU
        V = _cols_to_rows(V_cols, l) + diag
        # express V rows in the BU basis: solve x * BU = v for each v
        X_cols = []
        BU_T = [[BU[j][i] for j in range(l)] for i in range(l)]
        for v in V:
            x = solve_integer(BU_T, v)
            if x is None:
                raise FiniteRingError("inner lattice not inside outer lattice")
            X_cols.append(x)
        X = _cols_to_rows(X_cols, l)    # len(V) x l... rows are coords
        Xm = [[X[i][j] for i in range(len(X))] for j in range(l)]  # l x |V|
        D, S, T = smith_normal_form(Xm)
        self._S = S                     # new basis: rows of S^{-1}? see below
        ds = [D[i][i] for i in range(min(l, len(Xm[0] if Xm else [])))]
        ds += [0] * (l - len(ds))
        self._dall = ds
        self.mods = tuple(d for d in ds if d != 1)
        self._keep = [i for i, d in enumerate(ds) if d != 1]
        if any(d == 0 for d in ds):
            raise FiniteRingError("quotient is not finite")

    def project(self, v):
        """Canonical coordinates of an ambient vector in the quotient."""
        l = self.l
        BU_T = [[self._BU[j][i] for j in range(l)] for i in range(l)]
        y = solve_integer(BU_T, list(v))
        if y is None:
            raise FiniteRingError("vector not in the outer lattice")
        z = [sum(self._S[i][k] * y[k] for k in range(l)) for i in range(l)]
        return tuple(z[i] % self._dall[i] for i in self._keep)

    def lift(self, coords):
        """An ambient representative of quotient coordinates."""
        l = self.l
        z = [0] * l
        for c, i in zip(coords, self._keep):
            z[i] = c
        # ambient = (S^{-1} z) expressed in BU: v = z * S * BU? invert S
        Sinv = _unimodular_inverse(self._S)
        y = [sum(Sinv[i][k] * z[k] for k in range(l)) for i in range(l)]
        return [sum(y[k] * self._BU[k][i] for k in range(l)) for i in range(l)]


def _cols_to_rows(cols, l):
    return [list(c) for c in cols]


def _lattice_basis(rows, l):
    """Row basis (l rows) of the full-rank lattice spanned by the rows."""
    return _row_hnf(rows, l)


def _row_hnf(rows, l):
    """Upper-triangular row basis of the lattice spanned by the rows."""
    work = [list(r) for r in rows if any(r)]
    basis = []
    for col in range(l):
        while True:
            nz = [idx for idx, r in enumerate(work) if r[col] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda idx: abs(work[idx][col]))
            i0 = nz[0]
            for idx in nz[1:]:
                q = work[idx][col] // work[i0][col]
                work[idx] = [a - q * b for a, b in zip(work[idx], work[i0])]
            work = [r for r in work if any(r)]
        nz = [idx for idx, r in enumerate(work) if r[col] != 0]
        if nz:
            r0 = work.pop(nz[0])
            if r0[col] < 0:
                r0 = [-a for a in r0]
            basis.append(r0)
    if len(basis) != l:
        raise FiniteRingError("lattice is not full rank")
    return basis


def _unimodular_inverse(S):
    """Inverse of a unimodular integer matrix."""
    from fractions import Fraction

    n = len(S)
    A = [[Fraction(x) for x in row]
         + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(S)]
    for c in range(n):
        piv = next(i for i in range(c, n) if A[i][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        inv = A[c][c]
        A[c] = [x / inv for x in A[c]]
        for i in range(n):
            if i != c and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    for row in A:
        for x in row[n:]:
            if x.denominator != 1:
                raise FiniteRingError("matrix is not unimodular")
    return [[int(x) for x in row[n:]] for row in A]


# ---------------------------------------------------------------------------
# finite rings
# ---------------------------------------------------------------------------

class FiniteRing:
    """Finite commutative ring on additive coordinates.

    Elements are tuples (a_1, .., a_k) with a_i taken modulo mods[i];
    multiplication is bilinear, given by mul_basis[i][j] = e_i * e_j.
    """

    def __init__(self, mods, mul_basis, one, name):
        self.mods = tuple(mods)
        self.k = len(mods)
        self.mul_basis = mul_basis
        self.one = tuple(one)
        self.name = name
        self.zero = (0,) * self.k

    def norm(self, v):
        return tuple(a % d for a, d in zip(v, self.mods))

    def add(self, a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, self.mods))

    def neg(self, a):
        return tuple((-x) % d for x, d in zip(a, self.mods))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        out = [0] * self.k
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                for t, c in enumerate(self.mul_basis[i][j]):
                    out[t] += x * y * c
        return self.norm(out)

    def elements(self):
        return (tuple(v) for v in itertools.product(*(range(d) for d in self.mods)))

    @property
    def size(self):
        return prod(self.mods)

    def scalar_matrix(self, r):
        """Integer matrix of multiplication by r on the additive group."""
        cols = []
        for j in range(self.k):
            e = tuple(1 if t == j else 0 for t in range(self.k))
            cols.append(self.mul(r, e))
        return [[cols[j][i] for j in range(self.k)] for i in range(self.k)]

    def __repr__(self):
        return f"FiniteRing({self.name})"

    # -- constructors ------------------------------------------------------
    @classmethod
    def z_mod(cls, n: int) -> "FiniteRing":
        if n < 2:
            raise FiniteRingError("modulus must be >= 2")
        return cls((n,), [[(1,)]], (1,), f"Z/{n}")

    @classmethod
    def truncated_poly(cls, p: int, k: int, var: str = "x") -> "FiniteRing":
        """F_p[var] / (var^k)."""
        if k < 1:
            raise FiniteRingError("truncation order must be >= 1")
        mul = [[tuple(1 if t == i + j else 0 for t in range(k)) if i + j < k
                else (0,) * k for j in range(k)] for i in range(k)]
        one = tuple(1 if t == 0 else 0 for t in range(k))
        name = f"F{p}[{var}]/{var}^{k}" if k > 1 else f"F{p}"
        return cls((p,) * k, mul, one, name)

    @classmethod
    def product(cls, A: "FiniteRing", B: "FiniteRing") -> "FiniteRing":
        ka, kb = A.k, B.k
        mods = A.mods + B.mods
        zero = (0,) * (ka + kb)

        def emb_a(v):
            return tuple(v) + (0,) * kb

        def emb_b(v):
            return (0,) * ka + tuple(v)

        mul = [[None] * (ka + kb) for _ in range(ka + kb)]
        for i in range(ka + kb):
            for j in range(ka + kb):
                if i < ka and j < ka:
                    mul[i][j] = emb_a(A.mul_basis[i][j])
                elif i >= ka and j >= ka:
                    mul[i][j] = emb_b(B.mul_basis[i - ka][j - ka])
                else:
                    mul[i][j] = zero
        return cls(mods, mul, emb_a(A.one)[:ka] + emb_b(B.one)[ka:],
                   f"{A.name}*{B.name}")


_RING_TERM = re.compile(
    r"^(?:Z/(?P<n>\d+)|F(?P<p>\d+)(?:\[(?P<v>[a-z])\]/(?P=v)\^(?P<k>\d+))?)$")


def parse_finite_ring(text: str) -> FiniteRing:
    """Parse ring literals like 'Z/8', 'F2', 'F2[x]/x^3', 'Z/4*F2'."""
    parts = [t.strip() for t in text.split("*")]
    rings = []
    for part in parts:
        m = _RING_TERM.match(part)
        if not m:
            raise FiniteRingError(f"cannot parse finite ring term {part!r}")
        if m.group("n"):
            rings.append(FiniteRing.z_mod(int(m.group("n"))))
        else:
            p = int(m.group("p"))
            if not _is_prime(p):
                raise FiniteRingError(f"{p} is not prime in {part!r}")
            k = int(m.group("k")) if m.group("k") else 1
            rings.append(FiniteRing.truncated_poly(p, k, m.group("v") or "x"))
    out = rings[0]
    for r in rings[1:]:
        out = FiniteRing.product(out, r)
    return out


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# finite modules
# ---------------------------------------------------------------------------

class FiniteModule:
    """Finite module over a FiniteRing on additive coordinates.

    mods: per-coordinate additive orders; actions[t]: integer matrix of the
    action of the ring's t-th additive basis element.
    """

    def __init__(self, ring: FiniteRing, mods, actions, check: bool = True):
        self.ring = ring
        self.mods = tuple(mods)
        self.l = len(self.mods)
        self.actions = actions
        if check:
            self._check_axioms()

    @property
    def size(self) -> int:
        return prod(self.mods)

    def is_zero(self) -> bool:
        return self.l == 0 or self.size == 1

    def norm(self, v):
        return tuple(a % d for a, d in zip(v, self.mods))

    def add(self, a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, self.mods))

    def elements(self):
        return (tuple(v) for v in itertools.product(*(range(d) for d in self.mods)))

    def act(self, r, m):
        """r . m for a ring element r and module element m."""
        out = [0] * self.l
        for t, rt in enumerate(r):
            if not rt:
                continue
            A = self.actions[t]
            for i in range(self.l):
                out[i] += rt * sum(A[i][j] * m[j] for j in range(self.l))
        return self.norm(out)

    def scalar_matrix(self, r):
        """Integer matrix of the action of ring element r."""
        out = [[0] * self.l for _ in range(self.l)]
        for t, rt in enumerate(r):
            if not rt:
                continue
            A = self.actions[t]
            for i in range(self.l):
                for j in range(self.l):
                    out[i][j] += rt * A[i][j]
        return out

    def _check_axioms(self):
        R = self.ring
        # action must be well defined modulo the coordinate orders and
        # satisfy 1.m = m and (e_i e_j).m = e_i.(e_j.m) on basis vectors
        for t in range(R.k):
            A = self.actions[t]
            for j in range(self.l):
                for i in range(self.l):
                    if (A[i][j] * self.mods[j]) % self.mods[i] != 0:
                        raise FiniteRingError("action not well defined")
            for j in range(self.l):
                col = [A[i][j] * R.mods[t] % self.mods[i] for i in range(self.l)]
                if any(col):
                    raise FiniteRingError("ring modulus does not kill action")
        one_mat = self.scalar_matrix(R.one)
        for j in range(self.l):
            ej = tuple(1 if t == j else 0 for t in range(self.l))
            if self.norm([one_mat[i][j] for i in range(self.l)]) != ej:
                raise FiniteRingError("identity does not act as identity")
        for s in range(R.k):
            es = tuple(1 if t == s else 0 for t in range(R.k))
            for t in range(R.k):
                et = tuple(1 if u == t else 0 for u in range(R.k))
                lhs = self.scalar_matrix(self.ring.mul(es, et))
                rhs = mat_mul(self.scalar_matrix(es), self.scalar_matrix(et))
                for i in range(self.l):
                    for j in range(self.l):
                        if (lhs[i][j] - rhs[i][j]) % self.mods[i] != 0:
                            raise FiniteRingError("action is not associative")

    # -- constructors ------------------------------------------------------
    @classmethod
    def regular(cls, ring: FiniteRing) -> "FiniteModule":
        actions = [ring.scalar_matrix(tuple(1 if t == s else 0
                                            for t in range(ring.k)))
                   for s in range(ring.k)]
        return cls(ring, ring.mods, actions, check=False)

    @classmethod
    def zero(cls, ring: FiniteRing) -> "FiniteModule":
        return cls(ring, (), [[] for _ in range(ring.k)], check=False)

    @classmethod
    def quotient_by_ideal(cls, ring: FiniteRing, ideal_gens) -> "FiniteModule":
        """R / (ideal generated by the given ring elements)."""
        M = cls.regular(ring)
        V = ideal_subgroup_columns(ring, ideal_gens)
        return submodule_quotient(M, [list(e) for e in _unit_columns(ring.k)], V)

    def direct_sum(self, other: "FiniteModule") -> "FiniteModule":
        mods = self.mods + other.mods
        actions = []
        for t in range(self.ring.k):
            A, B = self.actions[t], other.actions[t]
            l1, l2 = self.l, other.l
            M = [[0] * (l1 + l2) for _ in range(l1 + l2)]
            for i in range(l1):
                for j in range(l1):
                    M[i][j] = A[i][j]
            for i in range(l2):
                for j in range(l2):
                    M[l1 + i][l1 + j] = B[i][j]
            actions.append(M)
        return FiniteModule(self.ring, mods, actions, check=False)


def _unit_columns(l):
    return [[1 if i == j else 0 for i in range(l)] for j in range(l)]


def ideal_subgroup_columns(ring: FiniteRing, gens):
    """Additive generators (columns) of the ideal generated by `gens`."""
    cols = []
    for g in gens:
        for t in range(ring.k):
            e = tuple(1 if u == t else 0 for u in range(ring.k))
            cols.append(list(ring.mul(e, g)))
    return cols


def submodule_quotient(M: FiniteModule, U_cols, V_cols) -> FiniteModule:
    """span(U)/span(V) as a FiniteModule in canonical coordinates; the
    spans are additive subgroups of M, and U must be action-stable."""
    if M.l == 0:
        return FiniteModule.zero(M.ring)
    Q = GroupQuotient(M.l, M.mods, U_cols, V_cols)
    l = len(Q.mods)
    actions = []
    for t in range(M.ring.k):
        A = M.actions[t]
        mat = [[0] * l for _ in range(l)]
        for j in range(l):
            ej = tuple(1 if u == j else 0 for u in range(l))
            amb = Q.lift(ej)
            img = [sum(A[i][k] * amb[k] for k in range(M.l)) for i in range(M.l)]
            coords = Q.project(img)
            for i in range(l):
                mat[i][j] = coords[i]
        actions.append(mat)
    out = FiniteModule(M.ring, Q.mods, actions, check=False)
    out._quotient = Q
    out._ambient = M
    return out


# ---------------------------------------------------------------------------
# ideals of a finite principal ideal ring
# ---------------------------------------------------------------------------

class FiniteIdeal:
    """Ideal given by ring-element generators, with its additive span."""

    def __init__(self, ring: FiniteRing, gens):
        self.ring = ring
        self.gens = [ring.norm(g) for g in gens]
        self._cols = ideal_subgroup_columns(ring, self.gens)
        self._membership = _subgroup_membership(ring.mods, self._cols)

    def contains(self, r) -> bool:
        return self._membership(list(r))

    @property
    def size(self) -> int:
        return _subgroup_size(self.ring.mods, self._cols)

    def key(self):
        """Canonical key: the sorted element list of the additive span."""
        return frozenset(_subgroup_elements(self.ring.mods, self._cols))

    def power(self, t: int) -> "FiniteIdeal":
        if t == 0:
            return FiniteIdeal(self.ring, [self.ring.one])
        out = self
        for _ in range(t - 1):
            prods = [self.ring.mul(a, b) for a in out.gens for b in self.gens]
            out = FiniteIdeal(self.ring, _dedup(prods))
        return out

    def stable_power(self) -> "FiniteIdeal":
        """The eventual value of the powers a^t (t large)."""
        prev = self
        for _ in range(64):
            nxt = prev.power_step(self)
            if nxt.key() == prev.key():
                return prev
            prev = nxt
        raise FiniteRingError("ideal powers did not stabilize")

    def power_step(self, a: "FiniteIdeal") -> "FiniteIdeal":
        prods = [self.ring.mul(x, y) for x in self.gens for y in a.gens]
        return FiniteIdeal(self.ring, _dedup(prods))

    def radical_contains(self, r) -> bool:
        x = self.ring.norm(r)
        seen = set()
        while x not in seen:
            if self.contains(x):
                return True
            seen.add(x)
            x = self.ring.mul(x, r)
        return False


def _dedup(elems):
    seen, out = set(), []
    for e in elems:
        if e not in seen:
            seen.add(e)
            out.append(e)
    return out


def _subgroup_membership(mods, cols):
    l = len(mods)
    diag = [[mods[i] if i == j else 0 for j in range(l)] for i in range(l)]
    gens = [list(c) for c in cols] + diag
    A = [[gens[j][i] for j in range(len(gens))] for i in range(l)]

    def member(v):
        return solve_integer(A, list(v)) is not None

    return member


def _subgroup_size(mods, cols):
    l = len(mods)
    if l == 0:
        return 1
    diag = [[mods[i] if i == j else 0 for j in range(l)] for i in range(l)]
    rows = [list(c) for c in cols] + diag
    B = _row_hnf(rows, l)
    det = prod(B[i][i] for i in range(l))
    return prod(mods) // abs(det)


def _subgroup_elements(mods, cols):
    l = len(mods)
    member = _subgroup_membership(mods, cols)
    return [v for v in itertools.product(*(range(d) for d in mods))
            if member(list(v))]


def enumerate_ideals(ring: FiniteRing):
    """All ideals (every ideal of these rings is principal up to sums,
    realized here by closing generator sets under sums of principals)."""
    seen = {}
    zero = FiniteIdeal(ring, [ring.zero])
    seen[zero.key()] = zero
    frontier = [zero]
    for r in ring.elements():
        I = FiniteIdeal(ring, [r])
        if I.key() not in seen:
            seen[I.key()] = I
    # close under pairwise sums until stable
    changed = True
    while changed:
        changed = False
        current = list(seen.values())
        for I in current:
            for J in current:
                K = FiniteIdeal(ring, _dedup(I.gens + J.gens))
                if K.key() not in seen:
                    seen[K.key()] = K
                    changed = True
    return sorted(seen.values(), key=lambda I: (I.size, sorted(I.key())))


# ---------------------------------------------------------------------------
# free complexes over a finite ring and their homology with coefficients
# ---------------------------------------------------------------------------

def free_module(ring: FiniteRing, n: int) -> FiniteModule:
    out = FiniteModule.zero(ring)
    R = FiniteModule.regular(ring)
    for _ in range(n):
        out = out.direct_sum(R)
    return out


class FreeRComplex:
    """Complex of free modules R^{ranks[i]} with differentials given by
    matrices over the ring; diffs[i] maps degree i to degree i-1."""

    def __init__(self, ring: FiniteRing, ranks, diffs, check: bool = True):
        self.ring = ring
        self.ranks = list(ranks)
        self.diffs = dict(diffs)
        self.top = len(self.ranks) - 1
        if check:
            self._check_squares()

    def _check_squares(self):
        R = self.ring
        for i in range(2, self.top + 1):
            A, B = self.diffs[i - 1], self.diffs[i]
            if not A or not B:
                continue
            for p in range(len(A)):
                for q in range(len(B[0])):
                    acc = R.zero
                    for t in range(len(B)):
                        acc = R.add(acc, R.mul(A[p][t], B[t][q]))
                    if acc != R.zero:
                        raise FiniteRingError("differential square is nonzero")


def koszul_free_complex(ring: FiniteRing, seq) -> FreeRComplex:
    """Koszul complex on a sequence of ring elements."""
    n = len(seq)
    subsets = [list(itertools.combinations(range(n), i)) for i in range(n + 1)]
    ranks = [len(s) for s in subsets]
    diffs = {}
    for i in range(1, n + 1):
        index = {S: p for p, S in enumerate(subsets[i - 1])}
        mat = [[ring.zero] * ranks[i] for _ in range(ranks[i - 1])]
        for q, S in enumerate(subsets[i]):
            for k, elem in enumerate(S):
                T = tuple(x for x in S if x != elem)
                coef = seq[elem] if k % 2 == 0 else ring.neg(seq[elem])
                mat[index[T]][q] = ring.add(mat[index[T]][q], coef)
        diffs[i] = mat
    return FreeRComplex(ring, ranks, diffs)


class IntComplex:
    """Complex of finite modules with integer differential matrices;
    diffs[i] maps modules[i] to modules[i-1]."""

    def __init__(self, modules, diffs):
        self.modules = list(modules)
        self.diffs = dict(diffs)
        self.top = len(self.modules) - 1

    def homology(self, i: int) -> FiniteModule:
        M = self.modules[i]
        if M.l == 0:
            return FiniteModule.zero(M.ring)
        if i >= 1 and i in self.diffs and self.modules[i - 1].l > 0:
            phi = self.diffs[i]
            tgt = self.modules[i - 1]
            aug = [[phi[r][c] for c in range(M.l)]
                   + [tgt.mods[r] if r == c else 0 for c in range(tgt.l)]
                   for r in range(tgt.l)]
            ker = [v[:M.l] for v in z_kernel(aug)]
        else:
            ker = [[1 if t == j else 0 for t in range(M.l)] for j in range(M.l)]
        if i + 1 <= self.top and (i + 1) in self.diffs and self.modules[i + 1].l > 0:
            psi = self.diffs[i + 1]
            src = self.modules[i + 1]
            img = [[psi[r][c] for r in range(M.l)] for c in range(src.l)]
        else:
            img = []
        return submodule_quotient(M, ker, img)


def _block_action_matrix(F_mat, M: FiniteModule, transpose: bool = False):
    """Integer block matrix of an R-matrix acting on copies of M.

    Block (p, q) is the action of F_mat[p][q] (or F_mat[q][p] when
    transpose is set, for Hom complexes)."""
    rows = len(F_mat)
    cols = len(F_mat[0]) if rows else 0
    if transpose:
        rows, cols = cols, rows
    l = M.l
    out = [[0] * (cols * l) for _ in range(rows * l)]
    for p in range(rows):
        for q in range(cols):
            entry = F_mat[q][p] if transpose else F_mat[p][q]
            A = M.scalar_matrix(entry)
            for i in range(l):
                for j in range(l):
                    out[p * l + i][q * l + j] = A[i][j]
    return out


def _module_power(M: FiniteModule, n: int) -> FiniteModule:
    out = FiniteModule.zero(M.ring)
    for _ in range(n):
        out = out.direct_sum(M)
    return out


def tensor_complex(F: FreeRComplex, M: FiniteModule) -> IntComplex:
    modules = [_module_power(M, r) for r in F.ranks]
    diffs = {i: _block_action_matrix(F.diffs[i], M)
             for i in range(1, F.top + 1) if F.ranks[i] and F.ranks[i - 1]}
    return IntComplex(modules, diffs)


def hom_complex(F: FreeRComplex, M: FiniteModule) -> IntComplex:
    """Hom(F, M) reindexed as a chain complex: term t is Hom(F_{top-t}, M),
    so the i-th cohomology sits in homological degree top - i."""
    n = F.top
    modules = [_module_power(M, F.ranks[n - t]) for t in range(n + 1)]
    diffs = {}
    for t in range(1, n + 1):
        j = n - t + 1            # F-differential F_j -> F_{j-1}
        if F.ranks[j] and F.ranks[j - 1]:
            diffs[t] = _block_action_matrix(F.diffs[j], M, transpose=True)
    return IntComplex(modules, diffs)


def koszul_homology_fr(ring: FiniteRing, seq, M: FiniteModule):
    """All Koszul homology modules [H_0, .., H_n] of the sequence on M."""
    K = koszul_free_complex(ring, seq)
    C = tensor_complex(K, M)
    return [C.homology(i) for i in range(len(seq) + 1)]


# ---------------------------------------------------------------------------
# free resolutions of cyclic modules and Tor / Ext
# ---------------------------------------------------------------------------

def _prune_r_generators(ring: FiniteRing, amb_mods, cols):
    """Drop columns that lie in the R-span of the remaining ones."""
    kept = [list(c) for c in cols]
    changed = True
    while changed:
        changed = False
        for idx in range(len(kept)):
            others = kept[:idx] + kept[idx + 1:]
            span = _module_span_columns(ring, amb_mods, others)
            member = _subgroup_membership(amb_mods, span)
            if member(kept[idx]):
                kept.pop(idx)
                changed = True
                break
    return kept


def _module_span_columns(ring: FiniteRing, amb_mods, cols):
    """Additive generators of the R-span of columns in R^m (ambient
    coordinates are m blocks of ring coordinates)."""
    k = ring.k
    m = len(amb_mods) // k
    out = []
    for c in cols:
        for t in range(k):
            e = tuple(1 if u == t else 0 for u in range(k))
            v = []
            for b in range(m):
                chunk = tuple(c[b * k: (b + 1) * k])
                v.extend(ring.mul(e, chunk))
            out.append(v)
    return out


def free_resolution_cyclic(ring: FiniteRing, ideal: FiniteIdeal,
                           length: int) -> FreeRComplex:
    """Free resolution of R/ideal of the given length (F_0 = R)."""
    k = ring.k
    ranks = [1]
    diffs = {}
    # current generators of the kernel as columns in R^{ranks[-1]}
    cols = [list(g) for g in ideal.gens if g != ring.zero]
    for i in range(1, length + 1):
        amb_mods = ring.mods * ranks[-1]
        cols = _prune_r_generators(ring, amb_mods, cols)
        g = len(cols)
        ranks.append(g)
        mat = [[tuple(c[p * k:(p + 1) * k]) for c in cols]
               for p in range(ranks[-2])]
        diffs[i] = mat
        if g == 0:
            cols = []
            continue
        # kernel of R^g -> R^{ranks[-2]}
        phi = _block_action_matrix(mat, FiniteModule.regular(ring))
        tgt_mods = ring.mods * ranks[-2]
        src_len = g * k
        aug = [[phi[r][c] for c in range(src_len)]
               + [tgt_mods[r] if r == c else 0 for c in range(len(tgt_mods))]
               for r in range(len(tgt_mods))]
        cols = [v[:src_len] for v in z_kernel(aug)]
    return FreeRComplex(ring, ranks, diffs)


_RES_CACHE: dict = {}


def _cached_resolution(ring: FiniteRing, ideal: FiniteIdeal,
                       length: int) -> FreeRComplex:
    key = (ring.name, ideal.key())
    hit = _RES_CACHE.get(key)
    if hit is None or hit.top < length:
        hit = free_resolution_cyclic(ring, ideal, max(length, 3))
        _RES_CACHE[key] = hit
    return hit


def tor_cyclic(ring: FiniteRing, ideal: FiniteIdeal, i: int,
               M: FiniteModule) -> FiniteModule:
    """Tor_i(R/ideal, M)."""
    F = _cached_resolution(ring, ideal, i + 1)
    return tensor_complex(F, M).homology(i)


def ext_cyclic(ring: FiniteRing, ideal: FiniteIdeal, i: int,
               M: FiniteModule) -> FiniteModule:
    """Ext^i(R/ideal, M)."""
    F = _cached_resolution(ring, ideal, i + 1)
    return hom_complex(F, M).homology(F.top - i)


# ---------------------------------------------------------------------------
# local homology / cohomology and the adic completion of a finite ring
# ---------------------------------------------------------------------------

def quotient_ring(ring: FiniteRing, ideal: FiniteIdeal) -> FiniteRing:
    """R / ideal as a FiniteRing in canonical coordinates."""
    Q = GroupQuotient(ring.k, ring.mods, _unit_columns(ring.k), ideal._cols)
    k = len(Q.mods)
    basis = [Q.lift(tuple(1 if t == j else 0 for t in range(k)))
             for j in range(k)]
    mul = [[Q.project(ring.mul(ring.norm(basis[i]), ring.norm(basis[j])))
            for j in range(k)] for i in range(k)]
    one = Q.project(list(ring.one))
    return FiniteRing(Q.mods, mul, one, f"{ring.name}/I")


def adic_completion_ring(ring: FiniteRing, a: FiniteIdeal) -> FiniteRing:
    """The a-adic completion, namely R / (stable power of a)."""
    return quotient_ring(ring, a.stable_power())


def local_homology_fr(ring: FiniteRing, a: FiniteIdeal, i: int,
                      M: FiniteModule) -> FiniteModule:
    """i-th derived completion of M at a (= Tor_i against the completion)."""
    return tor_cyclic(ring, a.stable_power(), i, M)


def local_cohomology_fr(ring: FiniteRing, a: FiniteIdeal, i: int,
                        M: FiniteModule) -> FiniteModule:
    """i-th derived a-torsion of M (= Ext^i against the completion)."""
    return ext_cyclic(ring, a.stable_power(), i, M)


def torsion_part(ring: FiniteRing, a: FiniteIdeal, M: FiniteModule):
    """(0 :_M b) for the stable power b of a, as a FiniteModule."""
    b = a.stable_power()
    if M.l == 0:
        return FiniteModule.zero(ring)
    rows = []
    for g in b.gens:
        rows.extend(M.scalar_matrix(g))
    n_rows = len(rows)
    tgt_mods = M.mods * len(b.gens) if b.gens else ()
    if not b.gens:
        ker = _unit_columns(M.l)
    else:
        aug = [[rows[r][c] for c in range(M.l)]
               + [tgt_mods[r] if r == c else 0 for c in range(n_rows)]
               for r in range(n_rows)]
        ker = [v[:M.l] for v in z_kernel(aug)]
    return submodule_quotient(M, ker, [])


def annihilated_part(M: FiniteModule, gens) -> FiniteModule:
    """(0 :_M (gens)) as a FiniteModule."""
    if M.l == 0:
        return FiniteModule.zero(M.ring)
    if not gens:
        return submodule_quotient(M, _unit_columns(M.l), [])
    rows = []
    for g in gens:
        rows.extend(M.scalar_matrix(g))
    tgt_mods = M.mods * len(gens)
    aug = [[rows[r][c] for c in range(M.l)]
           + [tgt_mods[r] if r == c else 0 for c in range(len(rows))]
           for r in range(len(rows))]
    ker = [v[:M.l] for v in z_kernel(aug)]
    return submodule_quotient(M, ker, [])


def quotient_by_gens(M: FiniteModule, gens) -> FiniteModule:
    """M / (gens) M as a FiniteModule."""
    if M.l == 0:
        return FiniteModule.zero(M.ring)
    cols = []
    for g in gens:
        A = M.scalar_matrix(g)
        for j in range(M.l):
            cols.append([A[i][j] for i in range(M.l)])
    return submodule_quotient(M, _unit_columns(M.l), cols)


# ---------------------------------------------------------------------------
# Matlis duality
# ---------------------------------------------------------------------------

def matlis_dual(M: FiniteModule) -> FiniteModule:
    """Hom_Z(M, Q/Z) with the transposed action, on the same coordinates."""
    l = M.l
    actions = []
    for A in M.actions:
        B = [[0] * l for _ in range(l)]
        for i in range(l):
            for j in range(l):
                num = A[j][i] * M.mods[i]
                if num % M.mods[j] != 0:
                    raise FiniteRingError("dual action is not integral")
                B[i][j] = (num // M.mods[j]) % M.mods[i]
        actions.append(B)
    return FiniteModule(M.ring, M.mods, actions, check=False)


# ---------------------------------------------------------------------------
# isomorphism invariants and module enumeration
# ---------------------------------------------------------------------------

def module_invariant(ring: FiniteRing, M: FiniteModule, ideals=None):
    """Complete isomorphism invariant over finite principal ideal rings:
    |I.M| for every ideal I (in canonical order), plus the size of M."""
    if ideals is None:
        ideals = enumerate_ideals(ring)
    out = [M.size]
    for I in ideals:
        cols = []
        for r in _subgroup_elements(ring.mods, I._cols):
            A = M.scalar_matrix(r)
            for j in range(M.l):
                cols.append([A[i][j] for i in range(M.l)])
        out.append(_subgroup_size(M.mods, cols) if M.l else 1)
    return tuple(out)


def modules_isomorphic(ring: FiniteRing, M: FiniteModule, N: FiniteModule,
                       ideals=None) -> bool:
    return module_invariant(ring, M, ideals) == module_invariant(ring, N, ideals)


class CyclicSum:
    """A direct sum of cyclic modules R/I_1 + .. + R/I_r, kept as factors
    so that Tor and Ext split factor by factor."""

    def __init__(self, ring: FiniteRing, ideals):
        self.ring = ring
        self.ideals = list(ideals)

    def realize(self) -> FiniteModule:
        out = FiniteModule.zero(self.ring)
        for I in self.ideals:
            out = out.direct_sum(FiniteModule.quotient_by_ideal(self.ring, I.gens))
        return out

    @property
    def size(self) -> int:
        return prod(self.ring.size // I.size for I in self.ideals)

    def annihilator_elements(self):
        """Elements of the annihilator ideal (intersection of the factors)."""
        sets = [frozenset(_subgroup_elements(self.ring.mods, I._cols))
                for I in self.ideals]
        if not sets:
            return frozenset(self.ring.elements())
        out = sets[0]
        for s in sets[1:]:
            out &= s
        return out

    def tor(self, i: int, M: FiniteModule) -> FiniteModule:
        out = FiniteModule.zero(self.ring)
        for I in self.ideals:
            out = out.direct_sum(tor_cyclic(self.ring, I, i, M))
        return out

    def ext(self, i: int, M: FiniteModule) -> FiniteModule:
        out = FiniteModule.zero(self.ring)
        for I in self.ideals:
            out = out.direct_sum(ext_cyclic(self.ring, I, i, M))
        return out


def enumerate_modules(ring: FiniteRing, max_size: int):
    """All finite modules (as CyclicSum) of size at most max_size, one per
    isomorphism class: over these rings every module is a sum of cyclics."""
    ideals = enumerate_ideals(ring)
    proper = [I for I in ideals if I.size < ring.size]   # exclude the unit ideal
    factors = sorted(proper, key=lambda I: (ring.size // I.size, sorted(I.key())))
    out = [CyclicSum(ring, [])]
    stack = [(0, [], 1)]
    while stack:
        start, chosen, size = stack.pop()
        for idx in range(start, len(factors)):
            fsize = ring.size // factors[idx].size
            if size * fsize <= max_size:
                sel = chosen + [factors[idx]]
                out.append(CyclicSum(ring, sel))
                stack.append((idx, sel, size * fsize))
    out.sort(key=lambda N: (N.size, len(N.ideals)))
    return out


def radical_elements(ring: FiniteRing, I: FiniteIdeal) -> frozenset:
    return frozenset(r for r in ring.elements() if I.radical_contains(r))


# ---------------------------------------------------------------------------
# mechanical verification of the Koszul / Tor / Ext / derived-functor
# vanishing equivalences over finite rings (predicate: being zero)
# ---------------------------------------------------------------------------

from .serre import INF, TheoremViolation  # noqa: E402


def _supp_subset(N: CyclicSum, b: FiniteIdeal) -> bool:
    """Support of N inside the vanishing locus of a (b = stable power)."""
    return all(all(I.contains(g) for g in b.gens) for I in N.ideals)


def _supp_equal(ring: FiniteRing, N: CyclicSum, a: FiniteIdeal) -> bool:
    ann = FiniteIdeal(ring, list(N.annihilator_elements()))
    return radical_elements(ring, ann) == radical_elements(ring, a)


def _min_nonzero(mod_list):
    for i, H in enumerate(mod_list):
        if not H.is_zero():
            return i
    return INF


def verify_vanishing_equivalences(ring: FiniteRing, seq, M: FiniteModule,
                                  pool, side: str = "both") -> int:
    """Check, for every cutoff s, the equivalence of:
      (i)   low Koszul homology of the sequence on M vanishing up to s
            (for the dual run: high Koszul homology),
      (ii)  Tor (resp. Ext) against every pool module supported in the
            vanishing locus being zero up to s,
      (iii) the same for some pool module with support equal to the locus,
      (iv)  derived completion (resp. derived torsion) vanishing up to s.
    Raises TheoremViolation on any mismatch; returns #instances checked."""
    n = len(seq)
    a = FiniteIdeal(ring, seq)
    b = a.stable_power()
    s_max = n + 1
    H = koszul_homology_fr(ring, seq, M)
    low_bad = _min_nonzero(H)                       # first nonzero H_i
    high_bad = _min_nonzero(H[::-1])                # first nonzero H_{n-i}
    sub_pool = [N for N in pool if _supp_subset(N, b)]
    eq_pool = [N for N in sub_pool if _supp_equal(ring, N, a)]
    if not any(len(N.ideals) == 1 and N.ideals[0].key() == b.key()
               for N in eq_pool):
        eq_pool = eq_pool + [CyclicSum(ring, [b])]
        sub_pool = sub_pool + [CyclicSum(ring, [b])]
    do_hom = side in ("both", "hom")
    do_coh = side in ("both", "coh")
    if do_hom:
        tor_bad = {id(N): _min_nonzero([N.tor(i, M) for i in range(s_max + 1)])
                   for N in sub_pool}
        lh_bad = _min_nonzero([local_homology_fr(ring, a, i, M)
                               for i in range(s_max + 1)])
    if do_coh:
        ext_bad = {id(N): _min_nonzero([N.ext(i, M) for i in range(s_max + 1)])
                   for N in sub_pool}
        lc_bad = _min_nonzero([local_cohomology_fr(ring, a, i, M)
                               for i in range(s_max + 1)])
    checked = 0
    for s in range(s_max + 1):
        if do_hom:
            # homological side: Koszul H_i, Tor, derived completion
            c1 = low_bad > s
            c2 = all(tor_bad[id(N)] > s for N in sub_pool)
            c3 = any(tor_bad[id(N)] > s for N in eq_pool)
            c4 = lh_bad > s
            if not (c1 == c2 == c3 == c4):
                raise TheoremViolation(
                    f"homological vanishing equivalence fails over {ring.name}: "
                    f"seq={seq} s={s} conditions=({c1},{c2},{c3},{c4})")
            checked += 1
        if do_coh:
            # cohomological side: Koszul H_{n-i}, Ext, derived torsion
            d1 = high_bad > s
            d2 = all(ext_bad[id(N)] > s for N in sub_pool)
            d3 = any(ext_bad[id(N)] > s for N in eq_pool)
            d4 = lc_bad > s
            if not (d1 == d2 == d3 == d4):
                raise TheoremViolation(
                    f"cohomological vanishing equivalence fails over {ring.name}: "
                    f"seq={seq} s={s} conditions=({d1},{d2},{d3},{d4})")
            checked += 1
    return checked


def verify_condition_gates(ring: FiniteRing, seq, pool) -> int:
    """Exhaustively confirm the two conditions the zero property must
    satisfy before derived-functor conditions may join the equivalences:
    torsion-part detection by the socle, and completion detection by the
    top quotient over a complete ring."""
    a = FiniteIdeal(ring, seq)
    b = a.stable_power()
    checked = 0
    for N in pool:
        M = N.realize()
        socle = annihilated_part(M, seq)
        if socle.is_zero() and not torsion_part(ring, a, M).is_zero():
            raise TheoremViolation(
                f"socle gate fails over {ring.name}: seq={seq}")
        checked += 1
        if b.size == 1:   # ring already complete at a
            if quotient_by_gens(M, seq).is_zero() and not M.is_zero():
                raise TheoremViolation(
                    f"completion gate fails over {ring.name}: seq={seq}")
            checked += 1
    return checked


def verify_matlis_duality_sweep(ring: FiniteRing, seq,
                                M: FiniteModule) -> int:
    """Duality checks: the dual is an involution of the same size, Koszul
    homology of the dual mirrors the dual of Koszul homology, and derived
    torsion / derived completion are exchanged by the dual."""
    ideals = enumerate_ideals(ring)
    n = len(seq)
    a = FiniteIdeal(ring, seq)
    D = matlis_dual(M)
    checked = 0
    if D.size != M.size:
        raise TheoremViolation(f"dual changes size over {ring.name}")
    if not modules_isomorphic(ring, matlis_dual(D), M, ideals):
        raise TheoremViolation(f"double dual differs over {ring.name}")
    checked += 2
    HM = koszul_homology_fr(ring, seq, M)
    HD = koszul_homology_fr(ring, seq, D)
    for i in range(n + 1):
        if not modules_isomorphic(ring, HD[i], matlis_dual(HM[n - i]), ideals):
            raise TheoremViolation(
                f"Koszul duality fails over {ring.name}: seq={seq} i={i}")
        checked += 1
    for i in range(n + 2):
        lhs = local_cohomology_fr(ring, a, i, D)
        rhs = matlis_dual(local_homology_fr(ring, a, i, M))
        if not modules_isomorphic(ring, lhs, rhs, ideals):
            raise TheoremViolation(
                f"derived torsion of the dual differs from the dual of "
                f"derived completion over {ring.name}: seq={seq} i={i}")
        lhs2 = local_homology_fr(ring, a, i, D)
        rhs2 = matlis_dual(local_cohomology_fr(ring, a, i, M))
        if not modules_isomorphic(ring, lhs2, rhs2, ideals):
            raise TheoremViolation(
                f"derived completion of the dual differs from the dual of "
                f"derived torsion over {ring.name}: seq={seq} i={i}")
        checked += 2
    return checked


def _sequence_pool(ring: FiniteRing, max_len: int = 2):
    """Representative element sequences: every single nonzero non-unit
    generator of each proper ideal, plus all pairs of those generators."""
    ideals = enumerate_ideals(ring)
    singles = [I.gens[0] for I in ideals if I.size < ring.size]
    seqs = [[g] for g in singles]
    if max_len >= 2:
        for i in range(len(singles)):
            for j in range(i, len(singles)):
                seqs.append([singles[i], singles[j]])
    return seqs


def exhaustive_verify(ring_text: str, max_module_size: int = None,
                      max_seq_len: int = 2,
                      include_duality: bool = False) -> dict:
    """Run every vanishing-equivalence and condition-gate check (and,
    optionally, the duality sweep) over all modules up to max_module_size
    and all representative sequences; returns counters of checked
    instances."""
    ring = parse_finite_ring(ring_text)
    if max_module_size is None:
        max_module_size = ring.size
    pool = enumerate_modules(ring, max_module_size)
    seqs = _sequence_pool(ring, max_seq_len)
    counts = {"ring": ring.name, "modules": len(pool), "sequences": len(seqs),
              "equivalences": 0, "gates": 0, "dualities": 0}
    for seq in seqs:
        counts["gates"] += verify_condition_gates(ring, seq, pool)
        for N in pool:
            M = N.realize()
            counts["equivalences"] += verify_vanishing_equivalences(
                ring, seq, M, pool)
            if include_duality:
                counts["dualities"] += verify_matlis_duality_sweep(ring, seq, M)
    return counts


def duality_sweep(ring_text: str, max_module_size: int = None,
                  max_seq_len: int = 2) -> dict:
    """Run the Matlis-duality checks over all modules up to the size
    bound and all representative sequences of the ring."""
    ring = parse_finite_ring(ring_text)
    if max_module_size is None:
        max_module_size = ring.size
    pool = enumerate_modules(ring, max_module_size)
    seqs = _sequence_pool(ring, max_seq_len)
    counts = {"ring": ring.name, "modules": len(pool), "sequences": len(seqs),
              "dualities": 0}
    for seq in seqs:
        for N in pool:
            counts["dualities"] += verify_matlis_duality_sweep(
                ring, seq, N.realize())
    return counts
