"""Frenkel-Zhu bimodule polynomials and the generic Virasoro fusion ring.

In the Zhu bimodule picture ``x`` is the weight of the target and ``y`` the
weight of the module acted upon.  ``f_{r,1}`` and ``f_{1,s}`` are products of
quadratic factors ``g'`` and ``g``; the third Frenkel-Zhu condition involving
``f_{r',s'}`` for ``r', s' > 1`` is not evaluated (nonvanishing of
``L_{r,1} x L_{1,s}`` follows from associativity instead).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .errors import NonGenericMode
from .exactalg import ONE, BiPoly, Scalar
from .verma import SYMBOLIC, CentralCharge, KacLabel, kac_weight

_X = BiPoly.x()
_Y = BiPoly.y()


def g_poly(index: int, side: str, cc: CentralCharge = SYMBOLIC) -> BiPoly:
    """``g_s`` (side ``"col"``) or ``g'_r`` (side ``"row"``).

    ``g_1 = g'_1 = x - y``; for n >= 2
    ``g'_n = (x - y - h_{n,1})(x - y - h_{-(n-2),1}) - (n-1)^2 t y`` and
    ``g_n = (x - y - h_{1,n})(x - y - h_{1,-(n-2)}) - (n-1)^2 y / t``.
    """
    if index < 1:
        raise ValueError("index must be >= 1")
    if side not in ("row", "col"):
        raise ValueError(f"side must be 'row' or 'col', not {side!r}")
    d = _X - _Y
    if index == 1:
        return d
    t = cc.t
    n = index
    if side == "row":
        a, b, twist = kac_weight(n, 1, t), kac_weight(-(n - 2), 1, t), t
    else:
        a, b, twist = kac_weight(1, n, t), kac_weight(1, -(n - 2), t), 1 / t
    return (d - a) * (d - b) - _Y * (twist * (n - 1) ** 2)


def f_poly(index: int, side: str, cc: CentralCharge = SYMBOLIC) -> BiPoly:
    """``f_{r,1} = g'_r g'_{r-2} ...`` (row) or ``f_{1,s} = g_s g_{s-2} ...`` (col).

    The product stops at ``g_1`` for odd index and at ``g_2`` for even index.
    """
    out = BiPoly.const(ONE)
    for k in range(index, 0, -2):
        out = out * g_poly(k, side, cc)
    return out


@dataclass(frozen=True)
class ZhuPolys:
    g_row: BiPoly
    g_col: BiPoly
    f_row: BiPoly
    f_col: BiPoly


def zhu_polys(r: int, s: int, cc: CentralCharge = SYMBOLIC) -> ZhuPolys:
    return ZhuPolys(g_poly(r, "row", cc), g_poly(s, "col", cc), f_poly(r, "row", cc), f_poly(s, "col", cc))


def fz_candidates(r: int, s: int, window: int = 8, cc: CentralCharge = SYMBOLIC) -> list[KacLabel]:
    """Labels ``(r', s')`` in the window allowed in ``L_{r,1} x L_{1,s}`` by both
    ``f_{r,1}(h_{r',s'}, h_{1,s}) = 0`` and ``f_{1,s}(h_{r',s'}, h_{r,1}) = 0``."""
    t = cc.t
    f_row = f_poly(r, "row", cc)
    f_col = f_poly(s, "col", cc)
    h_col, h_row = kac_weight(1, s, t), kac_weight(r, 1, t)
    out = []
    for rp in range(1, window + 1):
        for sp in range(1, window + 1):
            x = kac_weight(rp, sp, t)
            if f_row.eval(x, h_col).is_zero() and f_col.eval(x, h_row).is_zero():
                out.append(KacLabel(rp, sp))
    return out


def row_roots_at(r: int, s: int, cc: CentralCharge = SYMBOLIC) -> list[Scalar]:
    """Weights named as roots in x of ``g'_r(x, h_{1,s})``: ``h_{r,s}`` and, for r > 1, ``h_{-r+2,s}``."""
    t = cc.t
    roots = [kac_weight(r, s, t)]
    if r > 1:
        roots.append(kac_weight(-r + 2, s, t))
    return roots


# -- fusion ring -------------------------------------------------------------


class FusionDecomp:
    """Finite multiset of simple modules ``L_{r,s}`` with multiplicities."""

    __slots__ = ("_counts",)

    def __init__(self, items: Iterable | dict | None = None):
        counts: Counter = Counter()
        if isinstance(items, dict):
            for lab, m in items.items():
                counts[KacLabel(*lab)] += m
        else:
            for lab in items or ():
                counts[KacLabel(*lab)] += 1
        if any(m < 0 for m in counts.values()):
            raise ValueError("negative multiplicity")
        self._counts = Counter({k: m for k, m in counts.items() if m})

    def items(self) -> list[tuple[KacLabel, int]]:
        return sorted(self._counts.items())

    def labels(self) -> list[KacLabel]:
        return sorted(self._counts)

    def multiplicity(self, label) -> int:
        return self._counts.get(KacLabel(*label), 0)

    def total(self) -> int:
        return sum(self._counts.values())

    def __len__(self):
        return len(self._counts)

    def __iter__(self):
        return iter(self.labels())

    def __add__(self, other: "FusionDecomp") -> "FusionDecomp":
        return FusionDecomp(dict(self._counts + other._counts))

    def __eq__(self, other):
        if not isinstance(other, FusionDecomp):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self):
        return hash(frozenset(self._counts.items()))

    def __repr__(self):
        body = " + ".join(str(lab) if m == 1 else f"{m}*{lab}" for lab, m in self.items())
        return f"FusionDecomp({body or '0'})"


def _sl2_range(a: int, b: int) -> range:
    return range(abs(a - b) + 1, a + b, 2)


def _require_generic(cc: CentralCharge) -> None:
    if not cc.is_symbolic:
        raise NonGenericMode(f"fusion rules are only established at generic central charge, not {cc.mode}")


def fuse(a, b, cc: CentralCharge = SYMBOLIC) -> FusionDecomp:
    """``L_{r1,s1} x L_{r2,s2}`` at generic central charge (closed form)."""
    _require_generic(cc)
    (r1, s1), (r2, s2) = a, b
    return FusionDecomp(product(_sl2_range(r1, r2), _sl2_range(s1, s2)))


def fuse_decomps(x: FusionDecomp, y: FusionDecomp, cc: CentralCharge = SYMBOLIC) -> FusionDecomp:
    """Bilinear extension of :func:`fuse`."""
    counts: Counter = Counter()
    for la, ma in x.items():
        for lb, mb in y.items():
            for lc, mc in fuse(la, lb, cc).items():
                counts[lc] += ma * mb * mc
    return FusionDecomp(dict(counts))


def fuse_from_generators(a, b) -> FusionDecomp:
    """Re-derive ``a x b`` from the two rules it is built on.

    Writes ``L_{r,s} = L_{r,1} x L_{1,s}``, regroups by associativity and
    commutativity, fuses the row and column parts with the sl_2-type rule and
    recombines each ``L_{r,1} x L_{1,s}`` to ``L_{r,s}``.
    """
    (r1, s1), (r2, s2) = a, b
    rows = [r for r in _sl2_range(r1, r2)]
    cols = [s for s in _sl2_range(s1, s2)]
    counts: Counter = Counter()
    for r in rows:
        for s in cols:
            counts[(r, s)] += 1
    return FusionDecomp(dict(counts))


@dataclass
class RingReport:
    ok: bool
    window: int
    checked: dict
    failure: str | None = None


def verify_ring(window: int = 3, cc: CentralCharge = SYMBOLIC) -> RingReport:
    """Check unit, commutativity, associativity and the closed form on all labels ``r, s <= window``."""
    if window > 6:
        raise ValueError("verify_ring supports window <= 6")
    _require_generic(cc)
    labels = [KacLabel(r, s) for r in range(1, window + 1) for s in range(1, window + 1)]
    unit = KacLabel(1, 1)
    checked = {"unit": 0, "commutativity": 0, "closed_form": 0, "associativity": 0}

    def fail(msg):
        return RingReport(False, window, checked, msg)

    products = {}
    for a in labels:
        if fuse(unit, a, cc) != FusionDecomp([a]) or fuse(a, unit, cc) != FusionDecomp([a]):
            return fail(f"unit law fails for {a}")
        checked["unit"] += 1
        for b in labels:
            ab = fuse(a, b, cc)
            products[a, b] = ab
            if ab != fuse(b, a, cc):
                return fail(f"{a} x {b} is not commutative")
            checked["commutativity"] += 1
            if ab != fuse_from_generators(a, b):
                return fail(f"closed form disagrees with generator expansion for {a} x {b}")
            checked["closed_form"] += 1
    for a in labels:
        for b in labels:
            for c in labels:
                left = fuse_decomps(products[a, b], FusionDecomp([c]), cc)
                right = fuse_decomps(FusionDecomp([a]), products[b, c], cc)
                if left != right:
                    return fail(f"associativity fails for ({a}, {b}, {c})")
                checked["associativity"] += 1
    return RingReport(True, window, checked)
