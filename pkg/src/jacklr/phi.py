"""Vanishing-point products and the identities they satisfy.

``phi(x; β) = Π_{b ∈ β, b ≢ 0} (b - x)/b`` is the normalized polynomial in
``x`` with roots at the nonzero points of ``β``. Runs of consecutive points
give ``angle`` (``⟨x; a⟩_j``) and ``strip_term`` (``[b; n]``), the latter being
the product of flip ratios along one strip of a diagram when hooks are written
in terms of ``r = 1/α``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import RatFunc1


@dataclass(frozen=True)
class LinExpr:
    """``constant + r_coeff * r``."""

    constant: Fraction = Fraction(0)
    r_coeff: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "constant", Fraction(self.constant))
        object.__setattr__(self, "r_coeff", Fraction(self.r_coeff))

    @classmethod
    def of(cls, x) -> "LinExpr":
        return x if isinstance(x, LinExpr) else cls(Fraction(x), 0)

    def is_zero(self) -> bool:
        return self.constant == 0 and self.r_coeff == 0

    def __add__(self, o):
        o = LinExpr.of(o)
        return LinExpr(self.constant + o.constant, self.r_coeff + o.r_coeff)

    __radd__ = __add__

    def __neg__(self):
        return LinExpr(-self.constant, -self.r_coeff)

    def __sub__(self, o):
        return self + (-LinExpr.of(o))

    def __rsub__(self, o):
        return LinExpr.of(o) - self

    def __mul__(self, k):
        k = Fraction(k)
        return LinExpr(self.constant * k, self.r_coeff * k)

    __rmul__ = __mul__

    def to_ratfunc(self, var: str = "r") -> RatFunc1:
        if var != "r" and self.r_coeff:
            raise ValueError(f"{self} depends on r but the ambient variable is {var}")
        out = RatFunc1(self.constant, 1, var)
        if self.r_coeff:
            out = out + RatFunc1.gen(var) * self.r_coeff
        return out

    def __repr__(self):
        if not self.r_coeff:
            return f"LinExpr({self.constant})"
        return f"LinExpr({self.constant}{'+' if self.r_coeff >= 0 else '-'}{abs(self.r_coeff)}r)"


R = LinExpr(0, 1)
ONE_MINUS_R = LinExpr(1, -1)


def _as_ratfunc(v, var: str) -> RatFunc1:
    if isinstance(v, RatFunc1):
        if v.var != var:
            raise ValueError(f"indeterminate mismatch: {v.var} vs {var}")
        return v
    if isinstance(v, LinExpr):
        return v.to_ratfunc(var)
    return RatFunc1(Fraction(v), 1, var)


def _identically_zero(b) -> bool:
    if isinstance(b, (LinExpr, RatFunc1)):
        return b.is_zero()
    return b == 0


def phi(x, beta: Iterable, var: str | None = None) -> RatFunc1:
    """``Π (b - x)/b`` over the identically-nonzero ``b`` in ``beta``.

    ``x`` is a :class:`RatFunc1` (its indeterminate is the ambient one), a
    :class:`LinExpr` (ambient ``r``) or a number (ambient ``var``).
    """
    if var is None:
        var = x.var if isinstance(x, RatFunc1) else "r"
    xf = _as_ratfunc(x, var)
    out = RatFunc1(1, 1, var)
    for b in beta:
        if _identically_zero(b):
            continue
        bf = _as_ratfunc(b, var)
        out = out * (bf - xf) / bf
    return out


def angle(x, a, j: int, var: str | None = None) -> RatFunc1:
    """``⟨x; a⟩_j = phi(x; {a, a+1, ..., a+j-1})``."""
    if j < 0:
        raise ValueError("run length must be non-negative")
    a = LinExpr.of(a)
    return phi(x, [a + k for k in range(j)], var)


def strip_term(b, n: int) -> RatFunc1:
    """``[b; n] = ⟨1-r; b+1⟩_n`` as a function of ``r``."""
    if n < 0:
        raise ValueError("division number must be non-negative")
    return angle(ONE_MINUS_R, LinExpr.of(b) + 1, n, "r")


def Phi_col(x, sigma: Sequence, tau: Sequence, var: str | None = None) -> RatFunc1:
    """``Σ_j phi(x; {σ_i - σ_j} ∪ {τ_i + σ_j})``."""
    if len(sigma) != len(tau):
        raise ValueError("sigma and tau must have the same length")
    if not sigma:
        raise ValueError("need at least one parameter")
    sigma = [LinExpr.of(s) for s in sigma]
    tau = [LinExpr.of(t) for t in tau]
    total = None
    for sj in sigma:
        beta = [si - sj for si in sigma] + [ti + sj for ti in tau]
        term = phi(x, beta, var)
        total = term if total is None else total + term
    return total


def row_points(n: int, t: int, j: int, sigma: Sequence, tau: Sequence) -> list[LinExpr]:
    """The vanishing points ``β^n_t(j; σ, τ)`` (``j`` is 1 or 2)."""
    sigma = [LinExpr.of(s) for s in sigma]
    tau = [LinExpr.of(v) for v in tau]
    sj = sigma[j - 1] + t
    out = []
    for k in range(1, n - t + 1):
        out.append(LinExpr(-k))
        for i in (0, 1):
            if i != j - 1:
                out.append(sigma[i] + (k - 1) - sj)
        for i in (0, 1):
            out.append(tau[i] + (k - 1) + sj)
    return out


def phi_row_term(n: int, t: int, x, sigma, tau, var: str | None = None) -> RatFunc1:
    return phi(x, row_points(n, t, 1, sigma, tau), var) * phi(
        x, row_points(n, n - t, 2, sigma, tau), var
    )


def Phi_row(n: int, x, sigma: Sequence, tau: Sequence, var: str | None = None) -> RatFunc1:
    """``Σ_{t=0..n} phi(x; β^n_t(1)) · phi(x; β^n_{n-t}(2))`` for pairs σ, τ."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if len(sigma) != 2 or len(tau) != 2:
        raise ValueError("sigma and tau must be pairs")
    total = None
    for t in range(n + 1):
        term = phi_row_term(n, t, x, sigma, tau, var)
        total = term if total is None else total + term
    return total


def check_mod_identities(h, n: int, t: int) -> bool:
    """Check how ``[h; n]`` responds to shortening the run and to shifting its anchor."""
    if not 0 <= t <= n:
        raise ValueError("need 0 <= t <= n")
    h = LinExpr.of(h)
    first = strip_term(h, n - t) / strip_term(h, n) == strip_term(h + n - t, t).inverse()
    second = strip_term(h + t, n) / strip_term(h, n) == strip_term(h + n, t) / strip_term(h, t)
    return first and second


def col_degenerate(sigma: Sequence, tau: Sequence) -> bool:
    """True if some non-structural vanishing point of either ordering is zero.

    ``phi`` drops zero points, so such parameters leave the generic identity
    and must be redrawn by callers testing it.
    """
    for a, b in ((sigma, tau), (tau, sigma)):
        a = [LinExpr.of(v) for v in a]
        b = [LinExpr.of(v) for v in b]
        for j, aj in enumerate(a):
            if any((ai - aj).is_zero() for i, ai in enumerate(a) if i != j):
                return True
            if any((bi + aj).is_zero() for bi in b):
                return True
    return False


def row_degenerate(n: int, sigma: Sequence, tau: Sequence) -> bool:
    for a, b in ((sigma, tau), (tau, sigma)):
        for t in range(n + 1):
            for j, tv in ((1, t), (2, n - t)):
                if any(p.is_zero() for p in row_points(n, tv, j, a, b)):
                    return True
    return False
