"""Elements of the rational function field Q(t).

A :class:`Scalar` is a reduced quotient of two integer polynomials.  The
canonical form (gcd 1 over Z[t], positive leading coefficient in the
denominator) makes equality a structural comparison.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from flint import fmpq, fmpz_poly

from ..errors import PoleAtPoint

_ZERO = fmpz_poly([])
_ONE = fmpz_poly([1])


def _as_poly(value) -> fmpz_poly:
    if isinstance(value, fmpz_poly):
        return value
    if isinstance(value, int):
        return fmpz_poly([value])
    return fmpz_poly([int(c) for c in value])


class Scalar:
    """An exact element of Q(t).

    >>> t = Scalar.t()
    >>> (3 * t - 2) / 4
    Scalar((3*t - 2)/4)
    >>> ((t + 1) ** 2 / (t + 1)).eval(Fraction(1, 2))
    Fraction(3, 2)
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, Scalar) and den == 1:
            self._num, self._den, self._hash = num._num, num._den, num._hash
            return
        extra = 1
        if isinstance(num, Rational) and not isinstance(num, int):
            f = Fraction(num)
            num, extra = f.numerator, f.denominator
        n = _as_poly(num)
        d = _as_poly(den) * extra
        if d.is_zero():
            raise ZeroDivisionError("zero denominator")
        self._num, self._den = self._canonical(n, d)
        self._hash = None

    @staticmethod
    def _canonical(n: fmpz_poly, d: fmpz_poly):
        if n.is_zero():
            return _ZERO, _ONE
        if not d.is_one():
            g = n.gcd(d)
            if not g.is_one():
                n = n // g
                d = d // g
            if d.leading_coefficient() < 0:
                n, d = -n, -d
        return n, d

    @classmethod
    def _raw(cls, n: fmpz_poly, d: fmpz_poly) -> "Scalar":
        # caller guarantees (n, d) is already canonical
        obj = cls.__new__(cls)
        obj._num, obj._den, obj._hash = n, d, None
        return obj

    @classmethod
    def t(cls) -> "Scalar":
        """The indeterminate."""
        return cls._raw(fmpz_poly([0, 1]), _ONE)

    @classmethod
    def coerce(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, int):
            return cls._raw(fmpz_poly([value]), _ONE)
        if isinstance(value, Rational):
            return cls(Fraction(value))
        raise TypeError(f"cannot coerce {value!r} to Scalar")

    # -- accessors -------------------------------------------------------

    @property
    def numerator(self) -> fmpz_poly:
        return self._num

    @property
    def denominator(self) -> fmpz_poly:
        return self._den

    def numerator_coeffs(self) -> list[int]:
        """Integer coefficients of the numerator, constant term first."""
        return [int(c) for c in self._num.coeffs()] or [0]

    def denominator_coeffs(self) -> list[int]:
        return [int(c) for c in self._den.coeffs()]

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_constant(self) -> bool:
        return self._num.degree() <= 0 and self._den.degree() == 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(int(self._num[0]), int(self._den[0]))

    def is_integer_constant(self) -> bool:
        return self.is_constant() and self._den.is_one()

    def eval(self, t0) -> Fraction:
        """Exact value at the rational point ``t0``."""
        t0 = fmpq(Fraction(t0).numerator, Fraction(t0).denominator)
        d = self._den(t0)
        if d == 0:
            raise PoleAtPoint(f"{self} has a pole at t = {t0}")
        v = self._num(t0) / d
        return Fraction(int(v.p), int(v.q))

    # -- arithmetic ------------------------------------------------------

    def _binary(self, other):
        if isinstance(other, Scalar):
            return other
        try:
            return Scalar.coerce(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            if self._den.is_one():
                return Scalar._raw(self._num + o._num, _ONE)
            return Scalar(self._num + o._num, self._den)
        return Scalar(self._num * o._den + o._num * self._den, self._den * o._den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self._num, self._den)

    def __sub__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        if self._den.is_one() and o._den.is_one():
            return Scalar._raw(self._num * o._num, _ONE)
        return Scalar(self._num * o._num, self._den * o._den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return Scalar(self._den, self._num)

    def __truediv__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero Scalar")
        return Scalar(self._num * o._den, self._den * o._num)

    def __rtruediv__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return ONE
        # powers of a reduced fraction stay reduced
        return Scalar._raw(self._num ** k, self._den ** k)

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        o = self._binary(other)
        if o is None:
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(self.numerator_coeffs()), tuple(self.denominator_coeffs())))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- presentation ----------------------------------------------------

    def format(self, var: str = "t") -> str:
        """Expanded form, descending powers, e.g. ``(3*t - 2)/4``."""
        num = format_poly(self.numerator_coeffs(), var)
        if self._den.is_one():
            return num
        den = format_poly(self.denominator_coeffs(), var)
        if _n_terms(self.numerator_coeffs()) > 1:
            num = f"({num})"
        if _n_terms(self.denominator_coeffs()) > 1 or "*" in den or "^" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Scalar({self.format()})"

    def to_json(self) -> dict:
        return {"num": self.numerator_coeffs(), "den": self.denominator_coeffs()}

    @classmethod
    def from_json(cls, data: dict) -> "Scalar":
        return cls(fmpz_poly(data["num"]), fmpz_poly(data["den"]))


def _n_terms(coeffs) -> int:
    return sum(1 for c in coeffs if c)


def format_poly(coeffs: list[int], var: str = "t") -> str:
    """Render integer coefficients (constant first) with descending powers."""
    pieces = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces) if pieces else "0"


T = Scalar.t()
ZERO = Scalar(0)
ONE = Scalar(1)


def scalar_eval(s: Scalar, t0) -> Fraction:
    """Value of ``s`` at the exact rational ``t0``; raises PoleAtPoint on a pole."""
    return Scalar.coerce(s).eval(t0)
