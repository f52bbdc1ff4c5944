"""Exact scalar, polynomial and rational-function arithmetic.

Everything numeric in the package sits on top of the types defined here:

* ``Fraction`` (stdlib) for rational scalars,
* :class:`UniPoly` / :class:`RatFunc1` for one indeterminate (``alpha``, ``r``
  or ``t``),
* :class:`BiPoly` / :class:`RatFunc2` for the two indeterminates ``(q, t)``.

Rational functions are kept in a canonical form so that value equality is
representation equality: the denominator has integer coefficients with content
1 and a positive leading coefficient, any rational content lives in the
numerator, and numerator and denominator are coprime.

The gcd kernels are FLINT's (through python-flint); the classes here only own
the canonical form, the variable bookkeeping and the serialization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

from flint import fmpq, fmpq_mpoly_ctx, fmpq_poly

UNIVARIATE_VARS = ("alpha", "r", "t", "x")
_SYMBOLS = {"alpha": "α", "r": "r", "t": "t", "q": "q", "x": "x"}
_SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


class AlgebraError(ArithmeticError):
    """Raised when an exact operation has no exact answer."""


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, fmpq):
        return Fraction(int(x.p), int(x.q))
    return Fraction(x)


def _to_fmpq(x) -> fmpq:
    if isinstance(x, fmpq):
        return x
    if isinstance(x, int):
        return fmpq(x)
    x = Fraction(x)
    return fmpq(x.numerator, x.denominator)


def _check_var(var: str) -> str:
    if var not in UNIVARIATE_VARS:
        raise ValueError(f"unknown indeterminate {var!r}")
    return var


def _same_var(a, b) -> str:
    if a.var != b.var:
        raise ValueError(f"indeterminate mismatch: {a.var} vs {b.var}")
    return a.var


# ---------------------------------------------------------------------------
# univariate polynomials


class UniPoly:
    """Dense univariate polynomial with rational coefficients.

    ``UniPoly([1, 0, 3], "alpha")`` is ``1 + 3α²``; coefficients are given in
    ascending degree.
    """

    __slots__ = ("_p", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "alpha"):
        if isinstance(coeffs, fmpq_poly):
            self._p = coeffs
        else:
            self._p = fmpq_poly([_to_fmpq(c) for c in coeffs])
        self.var = _check_var(var)

    @classmethod
    def _wrap(cls, p: fmpq_poly, var: str) -> "UniPoly":
        obj = cls.__new__(cls)
        obj._p = p
        obj.var = var
        return obj

    @classmethod
    def gen(cls, var: str = "alpha") -> "UniPoly":
        return cls([0, 1], var)

    @classmethod
    def constant(cls, c, var: str = "alpha") -> "UniPoly":
        return cls([c], var)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(to_fraction(c) for c in self._p.coeffs())

    def degree(self) -> int:
        return self._p.degree()

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def leading_coefficient(self) -> Fraction:
        return to_fraction(self._p.leading_coefficient())

    def _coerce(self, other) -> fmpq_poly:
        if isinstance(other, UniPoly):
            _same_var(self, other)
            return other._p
        return fmpq_poly([_to_fmpq(other)])

    def __add__(self, other):
        return UniPoly._wrap(self._p + self._coerce(other), self.var)

    __radd__ = __add__

    def __sub__(self, other):
        return UniPoly._wrap(self._p - self._coerce(other), self.var)

    def __rsub__(self, other):
        return UniPoly._wrap(self._coerce(other) - self._p, self.var)

    def __mul__(self, other):
        return UniPoly._wrap(self._p * self._coerce(other), self.var)

    __rmul__ = __mul__

    def __neg__(self):
        return UniPoly._wrap(-self._p, self.var)

    def __pow__(self, k: int):
        return UniPoly._wrap(self._p**k, self.var)

    def __divmod__(self, other):
        q, r = divmod(self._p, self._coerce(other))
        return UniPoly._wrap(q, self.var), UniPoly._wrap(r, self.var)

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self._p, self._coerce(other))
        if not r.is_zero():
            raise AlgebraError("polynomial division is not exact")
        return UniPoly._wrap(q, self.var)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        return UniPoly._wrap(self._p.gcd(self._coerce(other)), self.var)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.var == other.var and self._p == other._p
        if isinstance(other, (int, Fraction)):
            return self._p == fmpq_poly([_to_fmpq(other)])
        return NotImplemented

    def __hash__(self):
        return hash((self.var, tuple(self.coeffs)))

    def __call__(self, x):
        """Exact evaluation (Horner) at a rational point."""
        x = to_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly._wrap(self._p.derivative(), self.var)

    def integer_form(self) -> tuple[list[int], int]:
        """Return ``(coeffs, den)`` with integer ``coeffs`` and ``self = coeffs/den``."""
        den = lcm(*(c.denominator for c in self.coeffs)) if not self.is_zero() else 1
        return [int(c * den) for c in self.coeffs], den

    def to_text(self) -> str:
        coeffs, den = self.integer_form()
        return f"den={den}; [{','.join(str(c) for c in coeffs)}]"

    @classmethod
    def from_text(cls, text: str, var: str = "alpha") -> "UniPoly":
        head, _, body = text.partition(";")
        key, _, den = head.strip().partition("=")
        if key.strip() != "den":
            raise ValueError(f"malformed polynomial text {text!r}")
        body = body.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"malformed polynomial text {text!r}")
        inner = body[1:-1].strip()
        coeffs = [int(c) for c in inner.split(",")] if inner else []
        d = int(den)
        return cls([Fraction(c, d) for c in coeffs], var)

    def pretty(self) -> str:
        return _pretty_terms(
            [(k, c) for k, c in enumerate(self.coeffs) if c], _SYMBOLS[self.var]
        )

    def __repr__(self):
        return f"UniPoly({self.pretty()}, {self.var})"

    __str__ = pretty


def _pretty_terms(terms, sym: str) -> str:
    if not terms:
        return "0"
    out = []
    for k, c in terms:
        if k == 0:
            body = str(abs(c))
        else:
            mag = abs(c)
            power = sym if k == 1 else sym + str(k).translate(_SUPERSCRIPTS)
            if mag == 1:
                body = power
            elif mag.denominator == 1:
                body = f"{mag}{power}"
            else:
                body = f"({mag}){power}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("-" if c < 0 else "+") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# univariate rational functions


def _canonical1(num: fmpq_poly, den: fmpq_poly) -> tuple[fmpq_poly, fmpq_poly]:
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if num.is_zero():
        return num, _ONE_P
    if den.degree() > 0:
        g = num.gcd(den)
        if g.degree() > 0:
            num = divmod(num, g)[0]
            den = divmod(den, g)[0]
    # integer content 1, positive leading coefficient
    z = den.numer()
    c = z.content()
    if z.leading_coefficient() < 0:
        c = -c
    scale = fmpq(den.denom()) / fmpq(c)
    if scale != 1:
        num = num * scale
        den = den * scale
    return num, den


_ONE_P = fmpq_poly([1])


class RatFunc1:
    """Exact rational function in one indeterminate, in canonical form."""

    __slots__ = ("_n", "_d", "var")

    def __init__(self, num=0, den=1, var: str = "alpha"):
        if isinstance(num, UniPoly):
            var = num.var
        if isinstance(den, UniPoly):
            var = den.var
        if isinstance(num, UniPoly) and isinstance(den, UniPoly):
            _same_var(num, den)
        self.var = _check_var(var)
        n = num._p if isinstance(num, UniPoly) else fmpq_poly([_to_fmpq(num)])
        d = den._p if isinstance(den, UniPoly) else fmpq_poly([_to_fmpq(den)])
        self._n, self._d = _canonical1(n, d)

    @classmethod
    def _raw(cls, n: fmpq_poly, d: fmpq_poly, var: str) -> "RatFunc1":
        obj = cls.__new__(cls)
        obj._n, obj._d = _canonical1(n, d)
        obj.var = var
        return obj

    @classmethod
    def _trusted(cls, n: fmpq_poly, d: fmpq_poly, var: str) -> "RatFunc1":
        obj = cls.__new__(cls)
        obj._n, obj._d, obj.var = n, d, var
        return obj

    @classmethod
    def gen(cls, var: str = "alpha") -> "RatFunc1":
        return cls._trusted(fmpq_poly([0, 1]), _ONE_P, var)

    @property
    def num(self) -> UniPoly:
        return UniPoly._wrap(self._n, self.var)

    @property
    def den(self) -> UniPoly:
        return UniPoly._wrap(self._d, self.var)

    def is_zero(self) -> bool:
        return self._n.is_zero()

    def is_polynomial(self) -> bool:
        return self._d.degree() == 0

    def _coerce(self, other) -> "RatFunc1":
        if isinstance(other, RatFunc1):
            _same_var(self, other)
            return other
        if isinstance(other, UniPoly):
            _same_var(self, other)
            return RatFunc1._trusted(other._p, _ONE_P, self.var)._renorm()
        return RatFunc1._trusted(fmpq_poly([_to_fmpq(other)]), _ONE_P, self.var)

    def _renorm(self):
        return RatFunc1._raw(self._n, self._d, self.var)

    def __add__(self, other):
        o = self._coerce(other)
        if self._d == o._d:
            return RatFunc1._raw(self._n + o._n, self._d, self.var)
        if o._d.degree() == 0 and self._d.degree() == 0:
            return RatFunc1._raw(self._n * o._d + o._n * self._d, self._d * o._d, self.var)
        g = self._d.gcd(o._d)
        if g.degree() > 0:
            a = divmod(self._d, g)[0]
            b = divmod(o._d, g)[0]
            return RatFunc1._raw(self._n * b + o._n * a, a * o._d, self.var)
        return RatFunc1._raw(self._n * o._d + o._n * self._d, self._d * o._d, self.var)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc1._trusted(-self._n, self._d, self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if self._n.is_zero() or o._n.is_zero():
            return RatFunc1._trusted(fmpq_poly(), _ONE_P, self.var)
        return RatFunc1._raw(self._n * o._n, self._d * o._d, self.var)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc1":
        if self._n.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        return RatFunc1._raw(self._d, self._n, self.var)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc1._trusted(self._n**k, self._d**k, self.var)

    def __eq__(self, other):
        if isinstance(other, RatFunc1):
            return self.var == other.var and self._n == other._n and self._d == other._d
        if isinstance(other, (int, Fraction, UniPoly)):
            try:
                o = self._coerce(other)
            except ValueError:
                return False
            return self._n == o._n and self._d == o._d
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self.to_text()))

    def __call__(self, x) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def to_text(self) -> str:
        return f"{self.num.to_text()} / {self.den.to_text()}"

    def integer_form(self) -> tuple[list[int], list[int]]:
        """Integer coefficient arrays ``(num, den)`` whose ratio is ``self``."""
        ncoeffs, k = self.num.integer_form()
        dcoeffs, dk = self.den.integer_form()
        return ncoeffs, [c * k for c in dcoeffs]

    def pretty(self) -> str:
        if self.is_polynomial():
            return self.num.pretty()
        return f"({self.num.pretty()})/({self.den.pretty()})"

    def __repr__(self):
        return f"RatFunc1({self.pretty()})"

    __str__ = pretty


def ratfunc_normalize(num: UniPoly, den: UniPoly) -> RatFunc1:
    """Canonical rational function ``num/den``."""
    return RatFunc1(num, den)


def alpha() -> RatFunc1:
    return RatFunc1.gen("alpha")


def r_to_alpha(f: RatFunc1) -> RatFunc1:
    """Substitute ``r = 1/α`` and clear the resulting powers of ``α``."""
    if f.var != "r":
        raise ValueError(f"expected a function of r, got {f.var}")
    n, d = list(f._n.coeffs()), list(f._d.coeffs())
    top = max(len(n), len(d)) - 1
    # c_k r^k  ->  c_k α^(top-k) after multiplying through by α^top
    n_rev = fmpq_poly(list(reversed(n + [fmpq(0)] * (top + 1 - len(n)))))
    d_rev = fmpq_poly(list(reversed(d + [fmpq(0)] * (top + 1 - len(d)))))
    return RatFunc1._raw(n_rev, d_rev, "alpha")


def limit_t_to_1(f: RatFunc1) -> Fraction:
    """Exact limit of ``f(t)`` as ``t -> 1`` by cancelling powers of ``(t-1)``."""
    lin = fmpq_poly([-1, 1])

    def order(p: fmpq_poly) -> tuple[int, fmpq_poly]:
        k = 0
        while not p.is_zero():
            q, rem = divmod(p, lin)
            if not rem.is_zero():
                break
            p, k = q, k + 1
        return k, p

    kn, n = order(f._n)
    kd, d = order(f._d)
    if f._n.is_zero() or kn > kd:
        return Fraction(0)
    if kn < kd:
        raise AlgebraError("divergent limit")
    return to_fraction(n(1)) / to_fraction(d(1))


@dataclass(frozen=True)
class Factorization:
    """``constant * α**alpha_power * Π (n + m α)**e * residual``."""

    constant: Fraction
    alpha_power: int
    linear_factors: Mapping[tuple[int, int], int] = field(default_factory=dict)
    residual: UniPoly = field(default_factory=lambda: UniPoly([1]))

    def expand(self) -> UniPoly:
        var = self.residual.var
        x = UniPoly.gen(var)
        out = UniPoly([self.constant], var) * x**self.alpha_power * self.residual
        for (m, n), e in self.linear_factors.items():
            out = out * (x * m + n) ** e
        return out


def factor_rational_roots(p: UniPoly) -> Factorization:
    """Split off every linear factor of ``p`` with a rational root."""
    if p.is_zero():
        raise AlgebraError("cannot factor the zero polynomial")
    ints, den = p.integer_form()
    k = 0
    while ints[k] == 0:
        k += 1
    ints = ints[k:]
    content = gcd(*ints)
    if ints[-1] < 0:
        content = -content
    prim = fmpq_poly([c // content for c in ints])
    factors: dict[tuple[int, int], int] = {}
    for root, mult in prim.roots():
        # root = -n/m  <->  factor (n + m x)
        m, n = int(root.q), -int(root.p)
        factors[(m, n)] = factors.get((m, n), 0) + mult
        prim = divmod(prim, fmpq_poly([n, m]) ** mult)[0]
    # dividing a primitive integer polynomial by primitive linear factors keeps it
    # primitive with a positive leading coefficient
    return Factorization(Fraction(content, den), k, factors, UniPoly._wrap(prim, p.var))


# ---------------------------------------------------------------------------
# bivariate (q, t)

_QT = fmpq_mpoly_ctx.get(("q", "t"), "lex")
_QT_ONE = _QT.from_dict({(0, 0): 1})
_QT_ZERO = _QT.from_dict({})


def _qt_poly(x):
    if isinstance(x, BiPoly):
        return x._p
    return _QT.from_dict({(0, 0): _to_fmpq(x)}) if x else _QT_ZERO


class BiPoly:
    """Sparse polynomial in ``q`` and ``t``; ``terms`` maps ``(i, j)`` to the
    coefficient of ``q**i * t**j``."""

    __slots__ = ("_p",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        terms = terms or {}
        self._p = _QT.from_dict({k: _to_fmpq(v) for k, v in terms.items() if v})

    @classmethod
    def _wrap(cls, p) -> "BiPoly":
        obj = cls.__new__(cls)
        obj._p = p
        return obj

    @classmethod
    def q(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return {tuple(k): to_fraction(v) for k, v in self._p.to_dict().items()}

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def __add__(self, o):
        return BiPoly._wrap(self._p + _qt_poly(o))

    __radd__ = __add__

    def __sub__(self, o):
        return BiPoly._wrap(self._p - _qt_poly(o))

    def __rsub__(self, o):
        return BiPoly._wrap(_qt_poly(o) - self._p)

    def __mul__(self, o):
        return BiPoly._wrap(self._p * _qt_poly(o))

    __rmul__ = __mul__

    def __neg__(self):
        return BiPoly._wrap(-self._p)

    def __pow__(self, k: int):
        return BiPoly._wrap(self._p**k)

    def __eq__(self, o):
        if isinstance(o, (BiPoly, int, Fraction)):
            return self._p == _qt_poly(o)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __repr__(self):
        return f"BiPoly({self._p})"


def _canonical2(n, d):
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if n.is_zero():
        return _QT_ZERO, _QT_ONE
    if not d.is_constant():
        g = n.gcd(d)
        if not g.is_constant():
            n = n / g
            d = d / g
    coeffs = [to_fraction(c) for c in d.coeffs()]
    den_lcm = lcm(*(c.denominator for c in coeffs))
    num_gcd = gcd(*(c.numerator for c in coeffs))
    # lex order: coeffs()[0] is the lex-leading coefficient
    sign = 1 if coeffs[0] > 0 else -1
    scale = fmpq(sign * den_lcm, num_gcd)
    if scale != 1:
        n = n * scale
        d = d * scale
    return n, d


class RatFunc2:
    """Exact rational function in ``(q, t)`` in canonical form."""

    __slots__ = ("_n", "_d")

    def __init__(self, num=0, den=1):
        self._n, self._d = _canonical2(_qt_poly(num), _qt_poly(den))

    @classmethod
    def _raw(cls, n, d) -> "RatFunc2":
        obj = cls.__new__(cls)
        obj._n, obj._d = _canonical2(n, d)
        return obj

    @classmethod
    def _trusted(cls, n, d) -> "RatFunc2":
        obj = cls.__new__(cls)
        obj._n, obj._d = n, d
        return obj

    @classmethod
    def q(cls) -> "RatFunc2":
        return cls(BiPoly.q())

    @classmethod
    def t(cls) -> "RatFunc2":
        return cls(BiPoly.t())

    @property
    def num(self) -> BiPoly:
        return BiPoly._wrap(self._n)

    @property
    def den(self) -> BiPoly:
        return BiPoly._wrap(self._d)

    def is_zero(self) -> bool:
        return self._n.is_zero()

    @staticmethod
    def _coerce(o) -> "RatFunc2":
        if isinstance(o, RatFunc2):
            return o
        if isinstance(o, BiPoly):
            return RatFunc2._trusted(o._p, _QT_ONE)
        return RatFunc2._trusted(_qt_poly(o), _QT_ONE)

    def __add__(self, other):
        o = self._coerce(other)
        if self._d == o._d:
            return RatFunc2._raw(self._n + o._n, self._d)
        return RatFunc2._raw(self._n * o._d + o._n * self._d, self._d * o._d)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc2._trusted(-self._n, self._d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if self._n.is_zero() or o._n.is_zero():
            return RatFunc2._trusted(_QT_ZERO, _QT_ONE)
        return RatFunc2._raw(self._n * o._n, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc2":
        if self._n.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        return RatFunc2._raw(self._d, self._n)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc2._trusted(self._n**k, self._d**k)

    def __eq__(self, other):
        if isinstance(other, (RatFunc2, BiPoly, int, Fraction)):
            o = self._coerce(other)
            if not isinstance(other, RatFunc2):
                o = RatFunc2._raw(o._n, o._d)
            return self._n == o._n and self._d == o._d
        return NotImplemented

    def __hash__(self):
        return hash((str(self._n), str(self._d)))

    def swap(self) -> "RatFunc2":
        """``f(t, q)``: exchange the roles of ``q`` and ``t``."""
        q, t = _QT.gens()
        return RatFunc2._raw(self._n.compose(t, q), self._d.compose(t, q))

    def specialize(self, q_power: int, t_power: int = 1, var: str = "t") -> RatFunc1:
        """Substitute ``q = x**q_power``, ``t = x**t_power``; result in ``x``."""
        return RatFunc1._raw(
            _collapse(self._n, q_power, t_power),
            _collapse(self._d, q_power, t_power),
            var,
        )

    def __repr__(self):
        return f"RatFunc2(({self._n})/({self._d}))"

    def to_text(self) -> str:
        return f"({self._n})/({self._d})"


def _collapse(p, a: int, b: int) -> fmpq_poly:
    out: dict[int, fmpq] = {}
    for (i, j), c in p.to_dict().items():
        k = a * i + b * j
        out[k] = out.get(k, fmpq(0)) + c
    if not out:
        return fmpq_poly()
    dense = [fmpq(0)] * (max(out) + 1)
    for k, c in out.items():
        dense[k] = c
    return fmpq_poly(dense)
