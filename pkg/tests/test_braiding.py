import pytest
import sympy

import oracles
from conftest import sympy_equal, t_sym, to_sympy
from virfusion.braiding import (
    GENERATORS,
    PhaseExponent,
    is_transparent,
    monodromy_exponents,
    nondegeneracy_scan,
    twist_exponent,
)
from virfusion.errors import NonGenericMode
from virfusion.exactalg import Scalar, T
from virfusion.fusion import fuse
from virfusion.verma import CentralCharge, KacLabel

WINDOW = [KacLabel(r, s) for r in range(1, 5) for s in range(1, 5)]


def _integer_constant(expr) -> bool:
    expr = sympy.cancel(sympy.together(expr))
    return expr.free_symbols == set() and expr.is_integer


def test_phase_exponent():
    assert PhaseExponent(Scalar(3)).is_trivial()
    assert not PhaseExponent(Scalar(1) / 2).is_trivial()
    assert not PhaseExponent(T).is_trivial()
    assert PhaseExponent(T + 2).phase_equal(PhaseExponent(T - 5))


def test_twist_is_weight():
    assert twist_exponent((2, 1)).value == 3 * T / 4 - Scalar(1) / 2


def test_monodromy_example():
    exps = dict(monodromy_exponents(KacLabel(1, 2), KacLabel(1, 2)))
    assert exps[KacLabel(1, 1)].value == 1 - 3 / (2 * T)
    assert exps[KacLabel(1, 3)].value == 1 / (2 * T)


@pytest.mark.parametrize("a", WINDOW)
@pytest.mark.parametrize("b", GENERATORS)
def test_monodromy_against_oracle(a, b):
    got = monodromy_exponents(a, b)
    assert [z for z, _ in got] == fuse(a, b).labels()
    for z, e in got:
        want = oracles.kac_weight(z.r, z.s, t_sym) - oracles.kac_weight(a.r, a.s, t_sym) - oracles.kac_weight(b.r, b.s, t_sym)
        assert sympy_equal(to_sympy(e.value), want)


@pytest.mark.parametrize("a", WINDOW)
def test_transparency_against_full_window(a):
    # brute force over every X in the window, not just the generators
    trivial_everywhere = all(
        _integer_constant(
            oracles.kac_weight(z.r, z.s, t_sym) - oracles.kac_weight(a.r, a.s, t_sym) - oracles.kac_weight(x.r, x.s, t_sym)
        )
        for x in WINDOW
        for z in fuse(a, x).labels()
    )
    assert is_transparent(a).transparent == trivial_everywhere == (a == KacLabel(1, 1))


@pytest.mark.parametrize("r", range(1, 7))
@pytest.mark.parametrize("s", range(1, 7))
def test_witness_ratio(r, s):
    res = is_transparent((r, s))
    if (r, s) == (1, 1):
        assert res.transparent and res.witness is None
        return
    w = res.witness
    assert not w.exponent.is_trivial()
    if s >= 2:
        assert w.X == KacLabel(1, 2)
        assert w.ratio.value == s / T - r
    else:
        assert w.X == KacLabel(2, 1)
        assert w.ratio.value == r * T - s
    assert not w.ratio.is_trivial()


def test_named_witnesses():
    w = is_transparent((2, 3)).witness
    assert w.X == KacLabel(1, 2) and w.ratio.value == 3 / T - 2
    assert is_transparent((2, 1)).witness.X == KacLabel(2, 1)


def test_scan():
    rep = nondegeneracy_scan(6)
    assert rep.ok and rep.transparent == [KacLabel(1, 1)]
    assert len(rep.witnesses) == 35
    with pytest.raises(ValueError):
        nondegeneracy_scan(7)


def test_rational_refused():
    with pytest.raises(NonGenericMode):
        monodromy_exponents(KacLabel(1, 2), KacLabel(1, 2), CentralCharge.rational(3))
