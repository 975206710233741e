"""Truncated character check of the sl_2 coset decompositions

    L_1(lam) (x) V_l(mu) = sum_{nu = lam + mu mod 2} V_{l+1}(nu) (x) L_{mu+1, nu+1}.

Characters are two-variable: an sl_2 weight (integers, simple root = 2) times
a power of q.  All sectors of a :class:`CharSeries` share a base exponent in
Q(l); coefficient ``k`` of a sector is the coefficient of ``q^{base + k}``.
Weights of the Virasoro factors are evaluated at ``t = (l+3)/(l+2)``.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import OrderTooLarge
from .exactalg import Scalar, T
from .series import mul, partition_numbers
from .structure import generic_simple_character
from .verma import CentralCharge, KacLabel, kac_h

ELL = T  # the level, read as l wherever it is printed
MAX_ORDER = 40
MAX_MU = 12


@dataclass(frozen=True)
class CharSeries:
    base: Scalar
    order: int
    sectors: dict[int, tuple[int, ...]]

    def coefficient(self, weight: int, k: int) -> int:
        coeffs = self.sectors.get(weight, ())
        return coeffs[k] if k < len(coeffs) else 0

    def weights(self) -> list[int]:
        return sorted(self.sectors)

    def level(self, k: int) -> dict[int, int]:
        """The z-Laurent polynomial at ``q^{base + k}`` as weight -> coefficient."""
        return {w: c[k] for w, c in self.sectors.items() if c[k]}


def _check(order: int, mu: int = 0) -> None:
    if order < 0:
        raise ValueError("order must be nonnegative")
    if order > MAX_ORDER:
        raise OrderTooLarge(f"order {order} exceeds {MAX_ORDER}")
    if mu < 0 or mu > MAX_MU:
        raise ValueError(f"mu must lie in 0..{MAX_MU}")


def _freeze(table: dict, order: int) -> dict[int, tuple[int, ...]]:
    out = {}
    for w in sorted(table):
        row = table[w]
        if any(row):
            out[w] = tuple(row)
    return out


def finite_character(mu: int) -> dict[int, int]:
    """``chi_mu(z) = z^mu + z^{mu-2} + ... + z^{-mu}``."""
    return {w: 1 for w in range(-mu, mu + 1, 2)}


def conformal_weight(mu: int, level) -> Scalar:
    """Sugawara weight ``mu(mu+2) / (4(k+2))`` of the top space of ``V_k(mu)``."""
    return Fraction(mu * (mu + 2), 4) / (Scalar.coerce(level) + 2)


def affine_verma_char(mu: int, order: int, level=ELL) -> CharSeries:
    """``chi_mu(z) / prod_n (1 - q^n)(1 - z^2 q^n)(1 - z^-2 q^n)`` times ``q^{Delta_mu}``."""
    _check(order, mu)
    span = mu + 2 * order
    table = defaultdict(lambda: [0] * (order + 1))
    for w in finite_character(mu):
        table[w][0] += 1
    for n in range(1, order + 1):
        for step in (0, 2, -2):
            # multiply by 1/(1 - z^step q^n): ascending sweep reuses updated entries
            for k in range(n, order + 1):
                for w in range(-span, span + 1):
                    src = table.get(w - step)
                    if src is not None and src[k - n]:
                        table[w][k] += src[k - n]
    return CharSeries(conformal_weight(mu, level), order, _freeze(table, order))


def theta_numerator(lam: int, order: int) -> dict[tuple[int, int], int]:
    """``sum_{m in Z + lam/2} z^{2m} q^{m^2 - lam^2/4}`` truncated, as (weight, k) -> 1."""
    if lam not in (0, 1):
        raise ValueError("lambda must be 0 or 1")
    out = {}
    # weight w = 2m has the parity of lam and energy (w^2 - lam^2)/4
    bound = math.isqrt(4 * order + 1) + 1
    for w in range(-bound, bound + 1):
        if (w - lam) % 2 == 0:
            k = (w * w - lam * lam) // 4
            if k <= order:
                out[(w, k)] = 1
    return out


def level_one_char(lam: int, order: int) -> CharSeries:
    """Character of ``L_1(lam)``: theta function over ``prod (1 - q^n)``, base ``lam^2/4``."""
    _check(order)
    p = partition_numbers(order)
    table = defaultdict(lambda: [0] * (order + 1))
    for (w, k), c in theta_numerator(lam, order).items():
        for j in range(order + 1 - k):
            table[w][k + j] += c * p[j]
    return CharSeries(Scalar(Fraction(lam * lam, 4)), order, _freeze(table, order))


def coset_t_param() -> Scalar:
    """Parameter labelling the coset Virasoro weights: ``t = (l+3)/(l+2)``."""
    return (ELL + 3) / (ELL + 2)


def coset_central_charge() -> CentralCharge:
    return CentralCharge(coset_t_param())


def sector_exponent(mu: int, nu: int) -> Scalar:
    """``Delta_nu(l+1) + h_{mu+1,nu+1}(t)``: the q-power of the ground state of sector nu."""
    return conformal_weight(nu, ELL + 1) + kac_h((mu + 1, nu + 1), coset_central_charge())


def decompose_levels(poly: dict[int, int]) -> dict[int, int]:
    """Multiplicities of ``chi_nu`` in a Weyl-symmetric z-Laurent polynomial.

    Raises ValueError if the polynomial is not symmetric under ``z -> 1/z``.
    """
    for w, c in poly.items():
        if poly.get(-w, 0) != c:
            raise ValueError(f"z-polynomial is not Weyl symmetric at weight {w}")
    out = {}
    for w in range(max(poly, default=-1) + 1):
        m = poly.get(w, 0) - poly.get(w + 2, 0)
        if m:
            out[w] = m
    return out


@dataclass
class SectorVerdict:
    nu: int
    exponent_ok: bool
    match_order: int
    exponent: Scalar | None = None
    branching: list[int] = field(default_factory=list)
    note: str = ""

    def passed(self, order: int) -> bool:
        return self.exponent_ok and self.match_order >= order


@dataclass
class BranchingReport:
    lam: int
    mu: int
    order: int
    verdicts: list[SectorVerdict]

    @property
    def ok(self) -> bool:
        return all(v.passed(self.order) for v in self.verdicts)


def _first_mismatch(a: list[int], b: list[int], order: int) -> int:
    """Highest k such that a and b agree on 0..k (order if they agree everywhere, -1 if at 0)."""
    for k in range(order + 1):
        if (a[k] if k < len(a) else 0) != (b[k] if k < len(b) else 0):
            return k - 1
    return order


def verify_coset(lam: int, mu: int, order: int = 8) -> BranchingReport:
    """Check the coset decomposition of ``L_1(lam) (x) V_l(mu)`` to ``q^order``.

    After cancelling the common affine denominator the identity reads
    ``theta_lam(z, q) chi_mu(z) q^{Delta_mu(l)} = sum_nu chi_nu(z) q^{E_nu} (1 - q^{(mu+1)(nu+1)})``
    with ``E_nu = Delta_nu(l+1) + h_{mu+1,nu+1}``.  Per sector nu this checks
    (i) that ``E_nu - Delta_mu(l) - lam^2/4`` is a nonnegative integer constant
    in Q(l), and (ii) that the signed multiplicity of ``chi_nu`` in the reduced
    left side, and the branching function extracted from the full left side
    (reduced side times ``1/prod(1-q^n)``), match the expected series
    coefficientwise.  Sectors of the wrong parity must come out identically zero.
    """
    if lam not in (0, 1):
        raise ValueError("lambda must be 0 or 1")
    _check(order, mu)
    theta = theta_numerator(lam, order)
    chi = finite_character(mu)
    reduced = defaultdict(lambda: [0] * (order + 1))
    for (w, k), c in theta.items():
        for w2, c2 in chi.items():
            reduced[w + w2][k] += c * c2

    levels = [{w: row[k] for w, row in reduced.items() if row[k]} for k in range(order + 1)]
    signed = defaultdict(lambda: [0] * (order + 1))
    for k, poly in enumerate(levels):
        for nu, m in decompose_levels(poly).items():
            signed[nu][k] += m
    p = partition_numbers(order)
    branching = {nu: mul(row, p, order) for nu, row in signed.items()}

    base = conformal_weight(mu, ELL) + Fraction(lam * lam, 4)
    nu_max = mu + 2 * math.isqrt(order) + 4
    verdicts = []
    for nu in range(nu_max + 1):
        got_signed = signed.get(nu, [0] * (order + 1))
        got_branch = branching.get(nu, [0] * (order + 1))
        exponent = sector_exponent(mu, nu)
        offset = exponent - base
        if (lam + mu - nu) % 2:
            zero = not any(got_signed) and not any(got_branch)
            verdicts.append(SectorVerdict(
                nu, not offset.is_integer_constant(), order if zero else -1, exponent, got_branch,
                "wrong parity: identically zero" if zero else "wrong parity sector is populated",
            ))
            continue
        if not (offset.is_integer_constant() and offset.constant_value() >= 0):
            verdicts.append(SectorVerdict(nu, False, -1, exponent, got_branch, f"offset {offset} is not a nonnegative integer"))
            continue
        e = int(offset.constant_value())
        if e > order:
            empty = not any(got_signed)
            verdicts.append(SectorVerdict(
                nu, True, order if empty else -1, exponent, got_branch,
                "ground state beyond truncation" if empty else "terms below the ground state",
            ))
            continue
        want_signed = [0] * (order + 1)
        want_signed[e] += 1
        gap = (mu + 1) * (nu + 1)
        if e + gap <= order:
            want_signed[e + gap] -= 1
        want_branch = [0] * e + generic_simple_character(KacLabel(mu + 1, nu + 1), order - e)
        match = min(_first_mismatch(got_signed, want_signed, order), _first_mismatch(got_branch, want_branch, order))
        note = "" if min(got_branch) >= 0 else "negative branching multiplicity"
        if note:
            match = -1
        verdicts.append(SectorVerdict(nu, True, match, exponent, got_branch, note))
    return BranchingReport(lam, mu, order, verdicts)
