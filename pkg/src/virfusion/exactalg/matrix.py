"""Dense exact matrices over Q(t).

Elimination clears denominators row by row and then runs fraction-free
(Bareiss) Gauss-Jordan in Z[t], so every intermediate entry is a minor of the
cleared matrix and no polynomial gcd is needed until the final vectors are
converted back to :class:`Scalar` values.
"""
from __future__ import annotations

from typing import Sequence

from flint import fmpz_poly

from .scalar import ONE, ZERO, Scalar


class ExactMatrix:
    """Immutable ``nrows x ncols`` matrix of Scalars."""

    __slots__ = ("rows", "nrows", "ncols", "_rref")

    def __init__(self, rows: Sequence[Sequence], ncols: int | None = None):
        self.rows = tuple(tuple(Scalar.coerce(v) for v in row) for row in rows)
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")
        self.ncols = ncols
        self._rref = None

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def vstack(cls, *blocks: "ExactMatrix") -> "ExactMatrix":
        ncols = {b.ncols for b in blocks if b.nrows}
        if len(ncols) > 1:
            raise ValueError("column counts differ")
        n = ncols.pop() if ncols else (blocks[0].ncols if blocks else 0)
        return cls([row for b in blocks for row in b.rows], n)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.rows) == (other.nrows, other.ncols, other.rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(v) for v in row) for row in self.rows)
        return f"ExactMatrix({self.nrows}x{self.ncols}: [{body}])"

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)], self.nrows)

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def matvec(self, v: Sequence[Scalar]) -> list[Scalar]:
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        out = []
        for row in self.rows:
            acc = ZERO
            for a, b in zip(row, v):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return out

    # -- elimination -----------------------------------------------------

    def _eliminate(self):
        if self._rref is None:
            self._rref = _gauss_jordan(_clear_denominators(self.rows), self.ncols)
        return self._rref

    def rank(self) -> int:
        return len(self._eliminate()[1])

    def nullity(self) -> int:
        return self.ncols - self.rank()

    def kernel(self) -> list[list[Scalar]]:
        """Basis of the right null space, one vector per non-pivot column."""
        rows, pivots, den, _ = self._eliminate()
        pivot_set = set(pivots)
        basis = []
        for f in range(self.ncols):
            if f in pivot_set:
                continue
            vec = [fmpz_poly([])] * self.ncols
            vec[f] = den
            for i, p in enumerate(pivots):
                vec[p] = -rows[i][f]
            basis.append(_primitive_vector(vec))
        return basis

    def det(self) -> Scalar:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if self.nrows == 0:
            return ONE
        _, pivots, den, sign = self._eliminate()
        if len(pivots) < self.nrows:
            return ZERO
        scale = ONE
        for row in self.rows:
            scale = scale * _row_multiplier(row)
        return Scalar(den) * sign / scale


def kernel(m: ExactMatrix) -> list[list[Scalar]]:
    """Exact null-space basis of ``m``; empty iff ``m`` has full column rank."""
    return m.kernel()


def _row_multiplier(row) -> Scalar:
    lcm = fmpz_poly([1])
    for v in row:
        d = v.denominator
        if not d.is_one():
            lcm = lcm * (d // lcm.gcd(d))
    return Scalar(lcm)


def _clear_denominators(rows) -> list[list[fmpz_poly]]:
    out = []
    for row in rows:
        lcm = _row_multiplier(row).numerator
        out.append([v.numerator * (lcm // v.denominator) for v in row])
    return out


def _size(p: fmpz_poly):
    return (p.degree(), p.height_bits())


def _update_row(i, r, j, pivot, den, rows, ncols):
    row, prow = rows[i], rows[r]
    a = row[j]
    if a.is_zero():
        if den.is_one() and pivot.is_one():
            return row
        return [(pivot * v) // den for v in row]
    new = []
    for k in range(ncols):
        v = pivot * row[k] - a * prow[k]
        new.append(v if den.is_one() else v // den)
    return new


def _gauss_jordan(rows: list[list[fmpz_poly]], ncols: int):
    """Fraction-free Gauss-Jordan elimination.

    Returns (reduced rows, pivot columns, common pivot value, permutation sign).
    After the loop every pivot entry equals the returned pivot value, and each
    division by the previous pivot is exact.
    """
    rows = [list(r) for r in rows]
    nrows = len(rows)
    den = fmpz_poly([1])
    sign = 1
    pivots: list[int] = []
    r = 0
    for j in range(ncols):
        if r == nrows:
            break
        candidates = [i for i in range(r, nrows) if not rows[i][j].is_zero()]
        if not candidates:
            continue
        # smallest pivot keeps the minors small
        best = min(candidates, key=lambda i: _size(rows[i][j]))
        if best != r:
            rows[r], rows[best] = rows[best], rows[r]
            sign = -sign
        pivot = rows[r][j]
        for i in range(nrows):
            if i != r:
                rows[i] = _update_row(i, r, j, pivot, den, rows, ncols)
        den = pivot
        pivots.append(j)
        r += 1
    # rows that were never pivot rows are identically zero; keep only pivot rows
    return rows[: len(pivots)], pivots, den, sign


def _primitive_vector(vec: list[fmpz_poly]) -> list[Scalar]:
    g = fmpz_poly([])
    for v in vec:
        if not v.is_zero():
            g = v if g.is_zero() else g.gcd(v)
    if g.is_zero() or g.is_one():
        return [Scalar(v) for v in vec]
    return [Scalar(v // g) for v in vec]


def cofactor_det(rows: Sequence[Sequence], zero, one):
    """Division-free determinant by Laplace expansion with memoized minors.

    Works for any commutative ring supporting ``+``, ``-`` and ``*``; only used
    for small matrices whose entries are not field elements.
    """
    n = len(rows)
    if n == 0:
        return one
    memo: dict[int, object] = {}

    # expand along row k = number of columns already used
    def minor(mask: int, k: int):
        if k == n:
            return one
        if mask in memo:
            return memo[mask]
        total = zero
        sign = 1
        for j in range(n):
            if mask >> j & 1:
                continue
            entry = rows[k][j]
            if not _is_zero(entry):
                term = entry * minor(mask | (1 << j), k + 1)
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[mask] = total
        return total

    return minor(0, 0)


def _is_zero(v) -> bool:
    z = getattr(v, "is_zero", None)
    return z() if callable(z) else v == 0
