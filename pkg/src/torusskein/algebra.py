"""Exact coefficient arithmetic.

Three polynomial flavours cover everything downstream:

* :class:`Laurent` -- Laurent polynomials in the framing variable ``A`` with
  arbitrary-precision integer coefficients; the ground ring of all skein
  computations.
* :class:`UniPoly` -- dense univariate polynomials over whatever scalar ring
  the caller supplies (ints, fractions, floats, or :class:`Laurent`).
* :class:`TracePoly` -- sparse polynomials in the trace coordinates
  ``x, y, z`` with rational coefficients.

All values are immutable after construction; every operation is pure, so
values can be shared freely across threads.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping


class Laurent:
    """Laurent polynomial in A, stored as a sparse exponent -> int map."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Laurent values are immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Laurent":
        return Laurent()

    @staticmethod
    def one() -> "Laurent":
        return Laurent({0: 1})

    @staticmethod
    def monomial(coeff: int, exp: int) -> "Laurent":
        return Laurent({exp: coeff})

    @staticmethod
    def A(exp: int = 1) -> "Laurent":
        return Laurent({exp: 1})

    @staticmethod
    def loop_value() -> "Laurent":
        """Value of a contractible framed loop: -A^2 - A^-2."""
        return Laurent({2: -1, -2: -1})

    # -- ring ops ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        r = dict(self.terms)
        for e, c in other.terms.items():
            s = r.get(e, 0) + c
            if s:
                r[e] = s
            else:
                r.pop(e, None)
        return Laurent(r)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_laurent(other) + (-self)

    def __mul__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        r: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = r.get(e, 0) + c1 * c2
                if s:
                    r[e] = s
                else:
                    r.pop(e, None)
        return Laurent(r)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers need a unit; use unit_inverse")
        out = Laurent.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, exp: int) -> "Laurent":
        """Multiply by A^exp."""
        return Laurent({e + exp: c for e, c in self.terms.items()})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({} if other == 0 else {0: other})
        if isinstance(other, Laurent):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def unit_parts(self) -> tuple[int, int] | None:
        """If the value is +-A^m, return (sign, m); otherwise None."""
        if len(self.terms) != 1:
            return None
        (e, c), = self.terms.items()
        if c in (1, -1):
            return (c, e)
        return None

    def unit_inverse(self) -> "Laurent":
        up = self.unit_parts()
        if up is None:
            raise ValueError(f"not a unit in Z[A,A^-1]: {self}")
        sign, e = up
        return Laurent({-e: sign})

    # -- evaluation and rendering -----------------------------------------

    def evaluate(self, a):
        """Numerically evaluate at A = a."""
        return sum(c * a ** e for e, c in self.terms.items())

    def min_exp(self) -> int:
        return min(self.terms) if self.terms else 0

    def max_exp(self) -> int:
        return max(self.terms) if self.terms else 0

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                mon = str(abs(c))
            else:
                var = "A" if e == 1 else f"A^{e}"
                mon = var if abs(c) == 1 else f"{abs(c)}*{var}"
            pieces.append(("-" if c < 0 else "+", mon))
        sign, mon = pieces[0]
        out = ("-" if sign == "-" else "") + mon
        for sign, mon in pieces[1:]:
            out += f" {sign} {mon}"
        return out

    def __repr__(self):
        return f"Laurent({self})"


def _coerce_laurent(v):
    if isinstance(v, Laurent):
        return v
    if isinstance(v, int):
        return Laurent({0: v})
    return NotImplemented


DELTA = Laurent.loop_value()


class UniPoly:
    """Dense univariate polynomial; the variable is a one-letter tag.

    Coefficients may live in any commutative ring that supports +, * and
    comparison with 0 (ints, Fraction, float, complex, Laurent).  Mixing
    different variable tags in one operation is a usage error.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and _is_zero(coeffs[-1]):
            coeffs.pop()
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly values are immutable")

    @staticmethod
    def variable(var: str) -> "UniPoly":
        return UniPoly(var, (0, 1))

    @staticmethod
    def constant(var: str, c) -> "UniPoly":
        return UniPoly(var, (c,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check(self, other: "UniPoly"):
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.constant(self.var, other)
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.var, [self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.constant(self.var, other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            out = [c * other for c in self.coeffs]
            return UniPoly(self.var, out)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly(self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.var, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = UniPoly.constant(self.var, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def evaluate(self, v):
        out = 0
        for c in reversed(self.coeffs):
            out = out * v + c
        return out

    def map_coeffs(self, fn) -> "UniPoly":
        return UniPoly(self.var, [fn(c) for c in self.coeffs])

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if _is_zero(c):
                continue
            mon = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            if isinstance(c, Laurent):
                body = f"({c})" + (f"*{mon}" if mon else "")
                pieces.append(("+", body))
                continue
            neg = c < 0
            ac = -c if neg else c
            if mon and ac == 1:
                body = mon
            elif mon:
                body = f"{_fmt_scalar(ac)}*{mon}"
            else:
                body = _fmt_scalar(ac)
            pieces.append(("-" if neg else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"UniPoly({self})"


def _is_zero(c) -> bool:
    if isinstance(c, Laurent):
        return c.is_zero()
    return c == 0


def _fmt_scalar(c) -> str:
    if isinstance(c, Fraction) and c.denominator == 1:
        return str(c.numerator)
    if isinstance(c, float) and c == int(c):
        return str(int(c))
    return str(c)


class TracePoly:
    """Sparse polynomial in the trace coordinates x, y, z over the rationals.

    Terms map exponent triples (i, j, k) for x^i y^j z^k to nonzero Fractions.
    The canonical term order is graded lexicographic, which fixes both
    rendering and equality-of-string output across runs.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int, int], Fraction] | None = None):
        clean: dict[tuple[int, int, int], Fraction] = {}
        if terms:
            for key, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[(int(key[0]), int(key[1]), int(key[2]))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TracePoly values are immutable")

    @staticmethod
    def constant(c) -> "TracePoly":
        return TracePoly({(0, 0, 0): Fraction(c)})

    @staticmethod
    def x(power: int = 1) -> "TracePoly":
        return TracePoly({(power, 0, 0): Fraction(1)})

    @staticmethod
    def y(power: int = 1) -> "TracePoly":
        return TracePoly({(0, power, 0): Fraction(1)})

    @staticmethod
    def z(power: int = 1) -> "TracePoly":
        return TracePoly({(0, 0, power): Fraction(1)})

    def __add__(self, other):
        other = _coerce_trace(other)
        if other is NotImplemented:
            return NotImplemented
        r = dict(self.terms)
        for key, c in other.terms.items():
            s = r.get(key, Fraction(0)) + c
            if s:
                r[key] = s
            else:
                r.pop(key, None)
        return TracePoly(r)

    __radd__ = __add__

    def __neg__(self):
        return TracePoly({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce_trace(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_trace(other) + (-self)

    def __mul__(self, other):
        other = _coerce_trace(other)
        if other is NotImplemented:
            return NotImplemented
        r: dict[tuple[int, int, int], Fraction] = {}
        for (i1, j1, k1), c1 in self.terms.items():
            for (i2, j2, k2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2, k1 + k2)
                s = r.get(key, Fraction(0)) + c1 * c2
                if s:
                    r[key] = s
                else:
                    r.pop(key, None)
        return TracePoly(r)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = TracePoly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = _coerce_trace(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree_in(self, axis: int) -> int:
        """Largest exponent of x (axis 0), y (1) or z (2); 0 for the zero poly."""
        if not self.terms:
            return 0
        return max(key[axis] for key in self.terms)

    def swap_xy(self) -> "TracePoly":
        return TracePoly({(j, i, k): c for (i, j, k), c in self.terms.items()})

    def evaluate(self, xv, yv, zv):
        out = 0
        for (i, j, k), c in self.terms.items():
            out = out + c * xv ** i * yv ** j * zv ** k
        return out

    def z_profile(self, xv, yv) -> list:
        """Coefficients of z^0, z^1, ... after substituting numbers for x, y."""
        out = [0] * (self.degree_in(2) + 1)
        for (i, j, k), c in self.terms.items():
            out[k] = out[k] + c * xv ** i * yv ** j
        return out

    def substitute(self, sx: UniPoly, sy: UniPoly, sz: UniPoly) -> UniPoly:
        """Compose with univariate substitutions sharing one variable tag."""
        if not (sx.var == sy.var == sz.var):
            raise ValueError("substitutions must share one variable")
        out = UniPoly(sx.var)
        for (i, j, k), c in sorted(self.terms.items()):
            out = out + (sx ** i) * (sy ** j) * (sz ** k) * c
        return out

    @staticmethod
    def _order_key(key):
        # graded lexicographic, largest first
        return (sum(key), key)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for key in sorted(self.terms, key=self._order_key, reverse=True):
            c = self.terms[key]
            mon = "*".join(
                (var if e == 1 else f"{var}^{e}")
                for var, e in zip("xyz", key)
                if e
            )
            neg = c < 0
            ac = -c if neg else c
            if mon and ac == 1:
                body = mon
            elif mon:
                body = f"{_fmt_scalar(ac)}*{mon}"
            else:
                body = _fmt_scalar(ac)
            pieces.append(("-" if neg else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"TracePoly({self})"


def _coerce_trace(v):
    if isinstance(v, TracePoly):
        return v
    if isinstance(v, (int, Fraction)):
        return TracePoly.constant(v)
    return NotImplemented


@lru_cache(maxsize=None)
def chebyshev(n: int) -> UniPoly:
    """Trace polynomial of a power: T_n with T_n(t + 1/t) = t^n + 1/t^n.

    T_0 = 2, T_1 = s, T_{n+1} = s*T_n - T_{n-1}.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return UniPoly("s", (2,))
    if n == 1:
        return UniPoly.variable("s")
    return UniPoly.variable("s") * chebyshev(n - 1) - chebyshev(n - 2)


def chebyshev_in(var: str, n: int) -> UniPoly:
    """chebyshev(n) with the variable renamed, e.g. T_n(x) or T_n(y)."""
    return UniPoly(var, chebyshev(n).coeffs)
