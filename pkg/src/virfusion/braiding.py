"""Twists, monodromy exponents and transparency at generic central charge.

Phases ``e^{2 pi i a}`` are carried by their exponents ``a`` in Q(t); two
phases agree iff the exponents differ by a constant integer, which is an
exact test.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NonGenericMode
from .exactalg import Scalar
from .fusion import fuse
from .verma import SYMBOLIC, CentralCharge, KacLabel, kac_h

GENERATORS = (KacLabel(1, 2), KacLabel(2, 1))


@dataclass(frozen=True)
class PhaseExponent:
    value: Scalar

    def is_trivial(self) -> bool:
        """True iff ``e^{2 pi i value} = 1`` identically."""
        return self.value.is_integer_constant()

    def phase_equal(self, other: "PhaseExponent") -> bool:
        return PhaseExponent(self.value - other.value).is_trivial()

    def __sub__(self, other: "PhaseExponent") -> "PhaseExponent":
        return PhaseExponent(self.value - other.value)

    def __str__(self):
        return str(self.value)


def twist_exponent(a, cc: CentralCharge = SYMBOLIC) -> PhaseExponent:
    """The twist acts on ``L_{r,s}`` as ``e^{2 pi i L_0}``, i.e. by ``h_{r,s}``."""
    return PhaseExponent(kac_h(a, cc))


def monodromy_exponents(T, X, cc: CentralCharge = SYMBOLIC) -> list[tuple[KacLabel, PhaseExponent]]:
    """Monodromy of ``T`` with ``X`` on each summand ``Z`` of ``T x X``.

    By the balancing axiom the double braiding acts on ``Z`` by
    ``exp(2 pi i (h_Z - h_T - h_X))``.
    """
    if not cc.is_symbolic:
        raise NonGenericMode(f"monodromy data needs generic central charge, not {cc.mode}")
    hT, hX = kac_h(T, cc), kac_h(X, cc)
    return [(Z, PhaseExponent(kac_h(Z, cc) - hT - hX)) for Z in fuse(T, X, cc).labels()]


@dataclass(frozen=True)
class Witness:
    X: KacLabel
    summand: KacLabel
    exponent: PhaseExponent
    # exponent difference between the two summands of T x X when there are two
    ratio: PhaseExponent | None = None


@dataclass(frozen=True)
class Transparency:
    label: KacLabel
    transparent: bool
    witness: Witness | None = None


def _generator_order(T: KacLabel) -> tuple[KacLabel, ...]:
    # column generator first when s > 1, row generator otherwise
    return GENERATORS if T.s != 1 else GENERATORS[::-1]


def is_transparent(T, cc: CentralCharge = SYMBOLIC) -> Transparency:
    """Decide transparency of ``L_{r,s}`` against the generators ``L_{1,2}`` and ``L_{2,1}``.

    Every simple object is a fusion product of the generators and monodromy is
    multiplicative in the second argument, so the generators suffice.
    """
    T = KacLabel(*T)
    for X in _generator_order(T):
        exps = monodromy_exponents(T, X, cc)
        ratio = exps[-1][1] - exps[0][1] if len(exps) == 2 else None
        for Z, e in exps:
            if not e.is_trivial():
                return Transparency(T, False, Witness(X, Z, e, ratio))
    return Transparency(T, True)


@dataclass
class ScanReport:
    ok: bool
    window: int
    transparent: list[KacLabel]
    witnesses: dict = field(default_factory=dict)


def nondegeneracy_scan(window: int = 4, cc: CentralCharge = SYMBOLIC) -> ScanReport:
    """Run :func:`is_transparent` over ``r, s <= window``; ok iff only ``L_{1,1}`` is transparent."""
    if window > 6:
        raise ValueError("nondegeneracy_scan supports window <= 6")
    transparent = []
    witnesses = {}
    for r in range(1, window + 1):
        for s in range(1, window + 1):
            res = is_transparent(KacLabel(r, s), cc)
            if res.transparent:
                transparent.append(res.label)
            else:
                witnesses[res.label] = res.witness
    return ScanReport(transparent == [KacLabel(1, 1)], window, transparent, witnesses)
