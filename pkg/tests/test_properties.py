"""Property-based invariant checks for the integer lattice toolkit and
the module equivalence certificate."""

from hypothesis import given, settings
from hypothesis import strategies as st

from koszulkit.finitering import mat_mul, smith_normal_form, z_kernel
from koszulkit.modules import FPModule
from koszulkit.rings import parse_ideal, parse_ring

_entries = st.integers(min_value=-9, max_value=9)


def _matrix(rows, cols):
    return st.lists(st.lists(_entries, min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows)


@given(st.integers(1, 3).flatmap(
    lambda r: st.integers(1, 3).flatmap(lambda c: _matrix(r, c))))
@settings(max_examples=60, deadline=None)
def test_smith_normal_form_properties(A):
    rows, cols = len(A), len(A[0])
    D, S, T = smith_normal_form(A)
    assert mat_mul(mat_mul(S, A), T) == D
    diag = [D[i][i] for i in range(min(rows, cols))]
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert D[i][j] == 0
    for a, b in zip(diag, diag[1:]):
        if a != 0:
            assert b % a == 0
        else:
            assert b == 0
    assert all(d >= 0 for d in diag)


@given(st.integers(1, 3).flatmap(
    lambda r: st.integers(1, 4).flatmap(lambda c: _matrix(r, c))))
@settings(max_examples=60, deadline=None)
def test_z_kernel_vectors_annihilate(A):
    rows, cols = len(A), len(A[0])
    for v in z_kernel(A):
        assert len(v) == cols
        assert any(v)
        for i in range(rows):
            assert sum(A[i][j] * v[j] for j in range(cols)) == 0


_MONO = ["x", "y", "x^2", "x*y", "y^2", "x^3", "y^3"]


@given(st.lists(st.sampled_from(_MONO), min_size=1, max_size=3),
       st.integers(3, 6))
@settings(max_examples=25, deadline=None)
def test_filtration_dims_presentation_independent(gens, D):
    # the same cyclic module presented with redundant relations must give
    # identical filtration dimensions
    R = parse_ring("F101[x,y]")
    I = parse_ideal(R, "(" + ", ".join(gens) + ")")
    J = parse_ideal(R, "(" + ", ".join(gens + [g + "*x" for g in gens]) + ")")
    A = FPModule.cyclic(R, I)
    B = FPModule.cyclic(R, J)
    assert A.filtration_dims(D) == B.filtration_dims(D)
