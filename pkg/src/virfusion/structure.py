"""Structure of reducible Verma modules: Kac-label recovery, embedding shapes,
C_1-quotients and generic simple characters."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidT, NonGenericMode
from .exactalg import ONE, ZERO, ExactMatrix, Scalar
from .series import partition_numbers
from .verma import (
    SYMBOLIC,
    CentralCharge,
    KacLabel,
    VermaVector,
    _check_level,
    apply_mode,
    kac_weight,
    partitions,
    singular_vector,
)


class EmbeddingShape(enum.Enum):
    GenericPair = "GenericPair"
    ChainInfinite = "ChainInfinite"
    BraidInfinite = "BraidInfinite"
    ChainFinite = "ChainFinite"
    BraidFinite = "BraidFinite"


@dataclass(frozen=True)
class HcQuery:
    h: Scalar
    matches: tuple[KacLabel, ...]


def kac_labels_of(h, cc: CentralCharge = SYMBOLIC, rmax: int = 6, smax: int = 6) -> HcQuery:
    """All labels in the ``rmax x smax`` window whose Kac weight equals ``h`` exactly."""
    if rmax < 1 or smax < 1:
        raise ValueError("window bounds must be positive")
    h = Scalar.coerce(h)
    matches = tuple(
        KacLabel(r, s)
        for r in range(1, rmax + 1)
        for s in range(1, smax + 1)
        if kac_weight(r, s, cc.t) == h
    )
    return HcQuery(h, matches)


def embedding_shape(label, cc: CentralCharge = SYMBOLIC) -> EmbeddingShape:
    """Shape of the embedding diagram of ``V_{r,s}``.

    For ``t = +-q/p`` in lowest terms the diagram is a chain when ``p | r`` or
    ``q | s`` and a braid otherwise; it is infinite for ``t > 0`` and finite
    for ``t < 0``.
    """
    r, s = label
    if cc.is_symbolic:
        return EmbeddingShape.GenericPair
    t = cc.t_value
    if t == 0:
        raise InvalidT("t = 0")
    q, p = abs(t.numerator), t.denominator
    chain = r % p == 0 or s % q == 0
    if t > 0:
        return EmbeddingShape.ChainInfinite if chain else EmbeddingShape.BraidInfinite
    return EmbeddingShape.ChainFinite if chain else EmbeddingShape.BraidFinite


def _lower(k: int, vec: VermaVector) -> VermaVector:
    # lowering modes do not involve c or h
    return apply_mode(-k, vec, ZERO, SYMBOLIC)


def _monomial(part) -> VermaVector:
    return VermaVector(sum(part), {tuple(part): ONE})


def _descendant(part, v: VermaVector) -> VermaVector:
    """``L_{-part} v`` (rightmost mode applied first)."""
    for k in reversed(part):
        v = _lower(k, v)
    return v


def c1_quotient_profile(label, cc: CentralCharge = SYMBOLIC) -> list[int]:
    """``dim (L_{r,s} / C_1)`` at levels ``0..rs``.

    ``L_{r,s}`` is modelled as the Verma module modulo the submodule generated by
    its level-rs singular vector.  At level m the quotient is
    ``V_m / (sum_{n>=2} L_{-n} V_{m-n} + U(vir_-) v_sing)``; the spanning
    vectors are computed with the PBW action and the dimension read off from an
    exact rank.  Levels above rs contribute nothing once level rs does, because
    ``L_{-1}^{m-rs}`` times the singular vector has leading coefficient 1.
    """
    if not cc.is_symbolic:
        raise NonGenericMode("C_1-quotients are only modelled at generic central charge")
    r, s = label
    top = r * s
    _check_level(top)
    sing = singular_vector(label, cc)
    profile = []
    for m in range(top + 1):
        spanning: list[list[Scalar]] = []
        for n in range(2, m + 1):
            for part in partitions(m - n):
                spanning.append(_lower(n, _monomial(part)).as_list())
        for part in partitions(m - top):
            spanning.append(_descendant(part, sing).as_list())
        dim = len(partitions(m))
        rank = ExactMatrix(spanning, dim).rank() if spanning else 0
        profile.append(dim - rank)
    return profile


def c1_quotient_dim(label, cc: CentralCharge = SYMBOLIC) -> int:
    """Dimension of the C_1-quotient of ``L_{r,s}`` at generic central charge."""
    return sum(c1_quotient_profile(label, cc))


def generic_simple_character(label, order: int) -> list[int]:
    """Coefficients of ``q^0..q^order`` in ``(1 - q^{rs}) / prod (1 - q^n)``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    r, s = label
    p = partition_numbers(order)
    return [p[n] - (p[n - r * s] if n >= r * s else 0) for n in range(order + 1)]


def is_in_hc(h, cc: CentralCharge = SYMBOLIC, window: int = 6) -> bool:
    return bool(kac_labels_of(h, cc, window, window).matches)

