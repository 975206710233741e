"""Virasoro Verma modules in the PBW basis.

Levels are indexed by partitions; a partition ``(i1, ..., in)`` with
``i1 >= ... >= in`` stands for ``L_{-i1} ... L_{-in} |h>``.  Within a level,
partitions are ordered lexicographically as tuples, so level 2 is
``[(1, 1), (2,)]``.

Mode actions are computed once with coefficients in Q[c, h] (a
:class:`BiPoly` with ``x = c`` and ``y = h``) and then specialised to a
particular central charge and weight.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import AmbiguousKernel, InvalidT, LevelTooLarge, NoSingularVector
from .exactalg import ONE, ZERO, BiPoly, ExactMatrix, Scalar, T, cofactor_det

Partition = tuple[int, ...]

DEFAULT_MAX_LEVEL = 12
LEVEL_ENV_VAR = "VIRFUSION_MAX_LEVEL"


def max_level() -> int:
    """Configured level bound; ``$VIRFUSION_MAX_LEVEL`` overrides the default of 12."""
    raw = os.environ.get(LEVEL_ENV_VAR)
    return int(raw) if raw else DEFAULT_MAX_LEVEL


def _check_level(level: int) -> None:
    bound = max_level()
    if level > bound:
        raise LevelTooLarge(f"level {level} exceeds the configured bound {bound} (set {LEVEL_ENV_VAR})")


@dataclass(frozen=True, order=True)
class KacLabel:
    r: int
    s: int

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise ValueError(f"Kac labels need r, s >= 1, got ({self.r}, {self.s})")

    def __iter__(self):
        yield self.r
        yield self.s

    def __str__(self):
        return f"L_{{{self.r},{self.s}}}"

    @classmethod
    def parse(cls, text: str) -> "KacLabel":
        r, s = (int(p) for p in text.split(","))
        return cls(r, s)


@dataclass(frozen=True)
class CentralCharge:
    """Central charge ``c = 13 - 6t - 6/t`` for a parameter ``t`` in Q(t) or Q.

    ``t`` is usually the indeterminate itself (symbolic, i.e. generic) or a
    nonzero rational constant.  Any nonconstant Scalar parameter (as used for
    coset labels) also counts as generic.
    """

    t: Scalar = field(default_factory=lambda: T)

    def __post_init__(self):
        object.__setattr__(self, "t", Scalar.coerce(self.t))
        if self.t.is_zero():
            raise InvalidT("t = 0 does not define a central charge")

    @classmethod
    def symbolic(cls) -> "CentralCharge":
        return cls(T)

    @classmethod
    def rational(cls, value) -> "CentralCharge":
        return cls(Scalar.coerce(Fraction(value)))

    @property
    def is_symbolic(self) -> bool:
        return not self.t.is_constant()

    @property
    def t_value(self) -> Fraction:
        return self.t.constant_value()

    @property
    def c(self) -> Scalar:
        return 13 - 6 * self.t - 6 / self.t

    @property
    def mode(self) -> str:
        return "symbolic" if self.is_symbolic else f"t={self.t_value}"


SYMBOLIC = CentralCharge.symbolic()


def kac_weight(r: int, s: int, t) -> Scalar:
    """``h_{r,s}(t)`` for arbitrary (possibly nonpositive) integers r, s."""
    t = Scalar.coerce(t)
    return Fraction(r * r - 1, 4) * t - Fraction(r * s - 1, 2) + Fraction(s * s - 1, 4) / t


def kac_h(label, cc: CentralCharge = SYMBOLIC) -> Scalar:
    r, s = label
    return kac_weight(r, s, cc.t)


# -- partitions ------------------------------------------------------------


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` with weakly decreasing parts, in lexicographic order."""
    if n < 0:
        return ()

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(sorted(gen(n, n)))


def partition_count(n: int) -> int:
    return len(partitions(n))


# -- mode action in Q[c, h] -------------------------------------------------

_C = BiPoly.x()
_H = BiPoly.y()
_ONE_CH = BiPoly.const(ONE)


def _accumulate(out: dict, key, coeff: BiPoly) -> None:
    if key in out:
        total = out[key] + coeff
        if total.is_zero():
            del out[key]
        else:
            out[key] = total
    elif not coeff.is_zero():
        out[key] = coeff


def _mode_on_vector(n: int, vec: dict) -> dict:
    out: dict = {}
    for part, a in vec.items():
        for q, b in _mode_on_monomial(n, part).items():
            _accumulate(out, q, a * b)
    return out


@lru_cache(maxsize=None)
def _mode_on_monomial_cached(n: int, parts: Partition):
    return tuple(_mode_on_monomial_raw(n, parts).items())


def _mode_on_monomial(n: int, parts: Partition) -> dict:
    return dict(_mode_on_monomial_cached(n, parts))


def _mode_on_monomial_raw(n: int, parts: Partition) -> dict:
    """``L_n L_{-parts} |h>`` in PBW form, coefficients in Q[c, h]."""
    level = sum(parts)
    if n == 0:
        return {parts: _H + level}
    if not parts:
        return {(-n,): _ONE_CH} if n < 0 else {}
    j, rest = parts[0], parts[1:]
    if n < 0:
        k = -n
        if k >= j:
            return {(k,) + parts: _ONE_CH}
        # L_{-k} L_{-j} = L_{-j} L_{-k} + (j - k) L_{-j-k}
        out = _mode_on_vector(-j, _mode_on_monomial(-k, rest))
        for q, b in _mode_on_monomial(-(j + k), rest).items():
            _accumulate(out, q, b * (j - k))
        return out
    if n > level:
        return {}
    # L_n L_{-j} = L_{-j} L_n + (n + j) L_{n-j} + delta_{n,j} (n^3 - n)/12 c
    out = _mode_on_vector(-j, _mode_on_monomial(n, rest))
    for q, b in _mode_on_monomial(n - j, rest).items():
        _accumulate(out, q, b * (n + j))
    if n == j and n > 1:
        _accumulate(out, rest, _C * Fraction(n ** 3 - n, 12))
    return out


# -- vectors -----------------------------------------------------------------


@dataclass(frozen=True)
class VermaVector:
    """Element of a single level: partition -> Scalar, zeros omitted."""

    level: int
    coeffs: dict

    def __post_init__(self):
        for p in self.coeffs:
            if sum(p) != self.level:
                raise ValueError(f"partition {p} does not have level {self.level}")
        object.__setattr__(self, "coeffs", {p: c for p, c in self.coeffs.items() if not c.is_zero()})

    def coefficient(self, part: Partition) -> Scalar:
        return self.coeffs.get(tuple(part), ZERO)

    def terms(self) -> list[tuple[Partition, Scalar]]:
        return [(p, self.coeffs[p]) for p in partitions(self.level) if p in self.coeffs]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, VermaVector):
            return NotImplemented
        return self.level == other.level and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.level, frozenset(self.coeffs.items())))

    def as_list(self) -> list[Scalar]:
        return [self.coefficient(p) for p in partitions(self.level)]

    @classmethod
    def from_list(cls, level: int, values) -> "VermaVector":
        return cls(level, dict(zip(partitions(level), values)))

    @classmethod
    def highest_weight(cls) -> "VermaVector":
        return cls(0, {(): ONE})

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        lines = []
        for p, c in self.terms():
            lines.append(f"({c.format(var)}) {monomial_name(p)}")
        return " + ".join(lines)

    def __repr__(self):
        return f"VermaVector(level={self.level}: {self.format()})"


def monomial_name(part: Partition) -> str:
    """``(2, 1, 1) -> 'L[-2]L[-1]^2'``; the empty partition is the highest-weight vector."""
    if not part:
        return "1"
    out = []
    i = 0
    while i < len(part):
        j = i
        while j < len(part) and part[j] == part[i]:
            j += 1
        k = j - i
        out.append(f"L[-{part[i]}]" + (f"^{k}" if k > 1 else ""))
        i = j
    return "".join(out)


def _specialiser(h: Scalar, cc: CentralCharge):
    c = cc.c
    h = Scalar.coerce(h)
    cache: dict = {}

    def value(p: BiPoly) -> Scalar:
        key = id(p)
        hit = cache.get(key)
        if hit is None or hit[0] is not p:
            hit = (p, p.eval(c, h))
            cache[key] = hit
        return hit[1]

    return value


def apply_mode(n: int, v: VermaVector, h: Scalar, cc: CentralCharge = SYMBOLIC) -> VermaVector:
    """``L_n v`` for any integer mode ``n``."""
    value = _specialiser(h, cc)
    out: dict = {}
    for part, a in v.coeffs.items():
        for q, b in _mode_on_monomial_cached(n, part):
            term = a * value(b)
            out[q] = out[q] + term if q in out else term
    return VermaVector(v.level - n, out)


def raise_action(m: int, v: VermaVector, h: Scalar, cc: CentralCharge = SYMBOLIC) -> VermaVector:
    """``L_m v`` for ``m >= 1`` expanded at level ``|v| - m``."""
    if m < 1:
        raise ValueError("raise_action needs a positive mode")
    if m > v.level:
        raise ValueError(f"L_{m} lowers past the highest-weight vector from level {v.level}")
    return apply_mode(m, v, h, cc)


def raise_matrix(m: int, level: int, h: Scalar, cc: CentralCharge = SYMBOLIC) -> ExactMatrix:
    """Matrix of ``L_m`` from level ``level`` to ``level - m`` (columns = source partitions)."""
    _check_level(level)
    value = _specialiser(h, cc)
    src = partitions(level)
    dst = partitions(level - m)
    index = {p: i for i, p in enumerate(dst)}
    rows = [[ZERO] * len(src) for _ in dst]
    for j, part in enumerate(src):
        for q, b in _mode_on_monomial_cached(m, part):
            rows[index[q]][j] = value(b)
    return ExactMatrix(rows, len(src))


def singular_space_matrix(level: int, h: Scalar, cc: CentralCharge = SYMBOLIC) -> ExactMatrix:
    """``L_1`` stacked over ``L_2``; its kernel is the space of singular vectors at ``level``.

    L_1 and L_2 generate every L_n with n >= 1, so annihilation by both suffices.
    """
    _check_level(level)
    blocks = [raise_matrix(1, level, h, cc)]
    if level >= 2:
        blocks.append(raise_matrix(2, level, h, cc))
    return ExactMatrix.vstack(*blocks) if blocks[0].nrows else blocks[0]


def singular_vectors(level: int, h: Scalar, cc: CentralCharge = SYMBOLIC) -> list[VermaVector]:
    """Basis of the singular vectors at ``level`` (joint kernel of L_1 and L_2)."""
    if level == 0:
        return [VermaVector.highest_weight()]
    m = singular_space_matrix(level, h, cc)
    return [VermaVector.from_list(level, v) for v in m.kernel()]


def singular_vector(label, cc: CentralCharge = SYMBOLIC) -> VermaVector:
    """The singular vector of ``V_{r,s}`` at level ``rs``, with ``L_{-1}^{rs}`` coefficient 1."""
    r, s = label
    level = r * s
    h = kac_weight(r, s, cc.t)
    basis = singular_vectors(level, h, cc)
    if not basis:
        raise NoSingularVector(f"no singular vector at level {level} for h_{{{r},{s}}} ({cc.mode})")
    if len(basis) > 1:
        raise AmbiguousKernel(f"{len(basis)}-dimensional singular space at level {level} ({cc.mode})")
    v = basis[0]
    lead = v.coefficient((1,) * level)
    if lead.is_zero():
        raise NoSingularVector(f"singular vector at level {level} has vanishing L_{{-1}}^{level} coefficient")
    return VermaVector(level, {p: c / lead for p, c in v.coeffs.items()})


def detect_singular_levels(h: Scalar, cc: CentralCharge = SYMBOLIC, maxlevel: int = 4) -> list[tuple[int, int]]:
    """``[(N, dim of singular vectors at level N)]`` for ``1 <= N <= maxlevel``."""
    _check_level(maxlevel)
    return [(n, singular_space_matrix(n, h, cc).nullity()) for n in range(1, maxlevel + 1)]


# -- Shapovalov form ---------------------------------------------------------


def _pair_ch(left: Partition, right: Partition) -> BiPoly:
    # <L_{-left} 1, L_{-right} 1>: apply L_{left[0]} first, L_{left[-1]} last
    vec = {right: _ONE_CH}
    for j in left:
        vec = _mode_on_vector(j, vec)
        if not vec:
            return BiPoly()
    return vec.get((), BiPoly())


@lru_cache(maxsize=None)
def gram_matrix_ch(level: int) -> tuple[tuple[BiPoly, ...], ...]:
    """Gram matrix with entries in Q[c, h] (``x = c``, ``y = h``)."""
    _check_level(level)
    basis = partitions(level)
    return tuple(tuple(_pair_ch(a, b) for b in basis) for a in basis)


def gram_matrix(level: int, h: Scalar, cc: CentralCharge = SYMBOLIC) -> ExactMatrix:
    """Shapovalov form at ``level``: entry (J, I) is ``<L_{-J} 1, L_{-I} 1>``."""
    value = _specialiser(h, cc)
    return ExactMatrix([[value(e) for e in row] for row in gram_matrix_ch(level)], partition_count(level))


def gram_determinant_in_h(level: int, cc: CentralCharge = SYMBOLIC) -> list[Scalar]:
    """Level determinant as a polynomial in h over Q(t); coefficients lowest degree first."""
    c = cc.c
    rows = [[e.eval_x(c) for e in row] for row in gram_matrix_ch(level)]
    det = cofactor_det(rows, BiPoly(), BiPoly.const(ONE))
    return det.univariate("y")
