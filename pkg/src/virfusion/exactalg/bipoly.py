"""Bivariate polynomials in x, y with coefficients in Q(t)."""
from __future__ import annotations

from .scalar import ONE, ZERO, Scalar


class BiPoly:
    """Sparse polynomial ``sum c[i, j] x^i y^j`` with :class:`Scalar` coefficients.

    Zero coefficients are never stored, so two BiPolys are equal iff their
    term dictionaries are equal.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            c = Scalar.coerce(c)
            if not c.is_zero():
                clean[key] = c
        self.terms: dict[tuple[int, int], Scalar] = clean

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): ONE})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): ONE})

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, BiPoly):
            return other
        try:
            return cls.const(Scalar.coerce(other))
        except TypeError:
            return None

    def is_zero(self) -> bool:
        return not self.terms

    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def coeff(self, i: int, j: int) -> Scalar:
        return self.terms.get((i, j), ZERO)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in o.terms.items():
            out[key] = out[key] + c if key in out else c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            try:
                c = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
            if c.is_zero():
                return BiPoly()
            return BiPoly({k: v * c for k, v in self.terms.items()})
        out: dict[tuple[int, int], Scalar] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out[key] + a * b if key in out else a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = BiPoly.const(ONE)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def eval(self, x0, y0):
        """Substitute ``x = x0, y = y0``; works for any ring whose elements mix with Scalars."""
        if not self.terms:
            return ZERO
        xp = _powers(x0, self.degree_x())
        yp = _powers(y0, self.degree_y())
        total = ZERO
        for (i, j), c in self.terms.items():
            total = total + xp[i] * yp[j] * c
        return total

    def eval_x(self, x0: Scalar) -> "BiPoly":
        """Substitute only ``x``; the result is a polynomial in ``y``."""
        out: dict[tuple[int, int], Scalar] = {}
        xp = _powers(Scalar.coerce(x0), self.degree_x())
        for (i, j), c in self.terms.items():
            v = c * xp[i]
            out[(0, j)] = out[(0, j)] + v if (0, j) in out else v
        return BiPoly(out)

    def eval_y(self, y0: Scalar) -> "BiPoly":
        out: dict[tuple[int, int], Scalar] = {}
        yp = _powers(Scalar.coerce(y0), self.degree_y())
        for (i, j), c in self.terms.items():
            v = c * yp[j]
            out[(i, 0)] = out[(i, 0)] + v if (i, 0) in out else v
        return BiPoly(out)

    def univariate(self, var: str = "x") -> list[Scalar]:
        """Coefficient list, lowest degree first, of a polynomial in a single variable."""
        idx = 0 if var == "x" else 1
        if any(key[1 - idx] for key in self.terms):
            raise ValueError(f"polynomial is not univariate in {var}")
        deg = self.degree_x() if idx == 0 else self.degree_y()
        return [self.terms.get((k, 0) if idx == 0 else (0, k), ZERO) for k in range(deg + 1)]

    def format(self, var: str = "t", names=("x", "y")) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, reverse=True):
            c = self.terms[(i, j)]
            mono = "*".join(
                p for p in (
                    _mono(names[0], i),
                    _mono(names[1], j),
                ) if p
            )
            coeff = c.format(var)
            if not mono:
                parts.append(f"({coeff})")
            elif c == ONE:
                parts.append(mono)
            else:
                parts.append(f"({coeff})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"BiPoly({self.format()})"


def _mono(name: str, k: int) -> str:
    if k == 0:
        return ""
    return name if k == 1 else f"{name}^{k}"


def _powers(base, deg: int) -> list:
    out = [ONE]
    for _ in range(deg):
        out.append(out[-1] * base)
    return out


def bipoly_eval(p: BiPoly, x0, y0):
    """Exact substitution ``p(x0, y0)``."""
    return p.eval(x0, y0)


def divide_linear(coeffs: list[Scalar], root: Scalar) -> tuple[list[Scalar], Scalar]:
    """Synthetic division of ``sum coeffs[k] X^k`` by ``X - root``.

    Returns (quotient coefficients, remainder).
    """
    if not coeffs:
        return [], ZERO
    n = len(coeffs) - 1
    quotient = [ZERO] * n
    acc = ZERO
    for k in range(n, 0, -1):
        acc = acc * root + coeffs[k]
        quotient[k - 1] = acc
    remainder = acc * root + coeffs[0]
    return quotient, remainder


def root_multiplicity(coeffs: list[Scalar], root: Scalar) -> int:
    """Largest m with (X - root)^m dividing the polynomial, by repeated exact division."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    if not coeffs:
        raise ValueError("zero polynomial has no finite root multiplicity")
    m = 0
    while len(coeffs) > 1:
        q, rem = divide_linear(coeffs, root)
        if not rem.is_zero():
            break
        coeffs = q
        m += 1
    return m
