from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from virfusion.errors import NonGenericMode
from virfusion.exactalg import BiPoly, T
from virfusion.fusion import (
    FusionDecomp,
    f_poly,
    fuse,
    fuse_decomps,
    fuse_from_generators,
    fz_candidates,
    g_poly,
    row_roots_at,
    verify_ring,
    zhu_polys,
)
from virfusion.structure import kac_labels_of
from virfusion.verma import SYMBOLIC, CentralCharge, KacLabel, kac_weight

X, Y = BiPoly.x(), BiPoly.y()
labels = st.builds(KacLabel, st.integers(1, 5), st.integers(1, 5))


def _oracle_fuse(a, b):
    """sl2 x sl2 tensor product of dimensions (r, s), read back as labels."""
    rows = oracles.sl2_product(a.r, b.r)
    cols = oracles.sl2_product(a.s, b.s)
    return FusionDecomp({(r, s): mr * ms for r, mr in rows.items() for s, ms in cols.items()})


def test_g_poly_examples():
    assert g_poly(1, "col") == X - Y
    assert g_poly(1, "row") == X - Y
    h12 = 3 / (4 * T) - Fraction(1, 2)
    h10 = Fraction(1, 2) - 1 / (4 * T)
    assert (h12, h10) == (kac_weight(1, 2, T), kac_weight(1, 0, T))
    assert g_poly(2, "col") == (X - Y - h12) * (X - Y - h10) - Y * (1 / T)
    assert g_poly(2, "row") == (X - Y - kac_weight(2, 1, T)) * (X - Y - kac_weight(0, 1, T)) - Y * T


def test_g_col_vanishes_on_fusion_pair():
    # L_{1,2} x L_{1,2} contains L_{1,3}: g_2 vanishes at (h_{1,3}, h_{1,2})
    assert g_poly(2, "col").eval(kac_weight(1, 3, T), kac_weight(1, 2, T)).is_zero()


@pytest.mark.parametrize("n", range(1, 7))
def test_f_poly_factors(n):
    f = f_poly(n, "row")
    expected = BiPoly.const(1)
    for k in range(n, 0, -2):
        expected = expected * g_poly(k, "row")
    assert f == expected
    assert f.degree_x() == 2 * len(range(n, 0, -2)) - (n % 2)
    z = zhu_polys(n, n)
    assert z.f_row == f and z.g_col == g_poly(n, "col")


@pytest.mark.parametrize("r, s", [(r, s) for r in range(1, 6) for s in range(1, 6)])
def test_fz_uniqueness(r, s):
    assert fz_candidates(r, s, 8) == [KacLabel(r, s)]
    roots = row_roots_at(r, s)
    g = g_poly(r, "row")
    for x0 in roots:
        assert g.eval(x0, kac_weight(1, s, T)).is_zero()
    for rejected in roots[1:]:
        assert kac_labels_of(rejected, SYMBOLIC, 8, 8).matches == ()


@pytest.mark.parametrize(
    "a, b, want",
    [
        ((1, 2), (1, 2), [(1, 1), (1, 3)]),
        ((3, 1), (1, 4), [(3, 4)]),
        ((2, 2), (2, 2), [(1, 1), (1, 3), (3, 1), (3, 3)]),
        ((1, 1), (4, 3), [(4, 3)]),
    ],
)
def test_fuse_examples(a, b, want):
    assert fuse(a, b).labels() == [KacLabel(*w) for w in want]


@given(labels, labels)
def test_fuse_against_sl2_oracle(a, b):
    got = fuse(a, b)
    assert got == _oracle_fuse(a, b)
    assert got.total() == min(a.r, b.r) * min(a.s, b.s)
    assert all(m == 1 for _, m in got.items())
    assert got == fuse_from_generators(a, b)


@given(labels, labels, labels)
def test_associativity(a, b, c):
    left = fuse_decomps(fuse(a, b), FusionDecomp([c]))
    right = fuse_decomps(FusionDecomp([a]), fuse(b, c))
    assert left == right


def test_generator_expansion():
    # (L_{2,1} x L_{1,2}) x (L_{2,1} x L_{1,2}) regrouped from the generator rules
    l22 = fuse((2, 1), (1, 2))
    assert l22 == FusionDecomp([(2, 2)])
    assert fuse_decomps(l22, l22) == fuse((2, 2), (2, 2))


def test_fusion_decomp_basics():
    d = FusionDecomp([(1, 1), (1, 3)]) + FusionDecomp([(1, 1)])
    assert d.multiplicity((1, 1)) == 2 and d.total() == 3 and len(d) == 2
    assert repr(d) == "FusionDecomp(2*L_{1,1} + L_{1,3})"
    with pytest.raises(ValueError):
        FusionDecomp({(1, 1): -1})


def test_verify_ring():
    rep = verify_ring(3)
    assert rep.ok and rep.failure is None
    assert rep.checked["associativity"] == 9**3


def test_non_generic_refused():
    cc = CentralCharge.rational(2)
    with pytest.raises(NonGenericMode):
        fuse((1, 2), (1, 2), cc)
    with pytest.raises(NonGenericMode):
        verify_ring(2, cc)
