"""Macdonald polynomials ``P_λ(q, t)`` from the operator ``D(q, t)``, their
product coefficients, and the (q,t) version of the hook formula.

``D(q,t) = Σ_i A_i T_{q,i}`` with ``A_i = Π_{j≠i} (t x_i - x_j)/(x_i - x_j)``.
Writing ``Δ`` for the Vandermonde product, ``A_i = (-1)^i Δ_î Π_{j≠i}(t x_i - x_j) / Δ``,
so the image of a symmetric polynomial is one numerator divided exactly by
``Δ``. The computation runs in a single flint ring over ``q, t, x_1..x_n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from flint import fmpq_mpoly_ctx

from . import horn
from .algebra import _QT, _QT_ONE, RatFunc2, limit_t_to_1
from .jack import (
    ExpansionCache,
    OracleError,
    SymExpansion,
    _product_in_m,
    oracle_c,
    peel,
    triangular_eigenvector,
)
from .partitions import Partition, arms_legs, conjugate, lr_count
from .stanley import (
    ConsistencyError,
    DivisionNumbers,
    FormulaError,
    division_numbers,
    hook_assignment,
)

QT_ONE = RatFunc2(1)
QT_ZERO = RatFunc2(0)
Q = RatFunc2.q()
T = RatFunc2.t()


# ---------------------------------------------------------------------------
# the operator D(q,t)


@lru_cache(maxsize=None)
def _ring(n: int):
    return fmpq_mpoly_ctx.get(("q", "t") + tuple(f"x{i}" for i in range(1, n + 1)), "lex")


def _vandermonde(ctx, xs):
    out = ctx.from_dict({(0,) * ctx.nvars(): 1})
    for a in range(len(xs)):
        for b in range(a + 1, len(xs)):
            out = out * (xs[a] - xs[b])
    return out


@lru_cache(maxsize=None)
def _weights(n: int):
    """``(-1)^i Δ_î Π_{j≠i}(t x_i - x_j)`` for each ``i``, and ``Δ``."""
    ctx = _ring(n)
    gens = ctx.gens()
    t, xs = gens[1], gens[2:]
    out = []
    for i in range(n):
        others = [x for j, x in enumerate(xs) if j != i]
        w = _vandermonde(ctx, others)
        for x in others:
            w = w * (t * xs[i] - x)
        out.append(-w if i % 2 else w)
    return tuple(out), _vandermonde(ctx, xs)


def _shifted_monomial_sum(mu: Partition, n: int, i: int):
    """``T_{q,i} m_μ`` as an element of the flint ring."""
    ctx = _ring(n)
    terms = {}
    for e in set(permutations(mu.padded(n))):
        terms[(e[i], 0) + e] = 1
    return ctx.from_dict(terms)


def apply_D_qt(mu, n: int):
    """Image of ``m_μ`` under ``D(q,t)``, as a flint polynomial in ``q, t, x``."""
    mu = Partition(mu)
    weights, delta = _weights(n)
    num = None
    for i in range(n):
        term = weights[i] * _shifted_monomial_sum(mu, n, i)
        num = term if num is None else num + term
    quot, rem = divmod(num, delta)
    if not rem.is_zero():
        raise OracleError("operator image not polynomial")
    return quot


@lru_cache(maxsize=None)
def d_qt_column(mu: Partition, n: int) -> dict:
    """Column ``μ`` of ``D(q,t)`` on ``{m_ν}``: ``{ν: coefficient in Z[q,t]}``."""
    image = apply_D_qt(mu, n)
    grouped: dict[tuple, dict] = {}
    for e, c in image.to_dict().items():
        x = e[2:]
        if all(a >= b for a, b in zip(x, x[1:])):
            grouped.setdefault(x, {})[e[:2]] = c
    return {Partition(x): RatFunc2._trusted(_QT.from_dict(g), _QT_ONE) for x, g in grouped.items()}


def eigenvalue_qt(lam, n: int) -> RatFunc2:
    """``Σ_i q^{λ_i} t^{n-i}``."""
    out = QT_ZERO
    for i, part in enumerate(Partition(lam).padded(n), start=1):
        out = out + Q**part * T ** (n - i)
    return out


def _compute_macdonald_P(lam: Partition, n: int) -> SymExpansion:
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    v = triangular_eigenvector(lam, n, lambda mu: d_qt_column(mu, n), QT_ONE, QT_ZERO)
    return SymExpansion("m", v)


macdonald_P_cache = ExpansionCache(_compute_macdonald_P)


def macdonald_P(lam, n: int) -> SymExpansion:
    """Monic ``P_λ(q,t)`` in ``n`` variables, monomial basis."""
    return macdonald_P_cache(lam, n)


@lru_cache(maxsize=2048)
def product_coeffs_qt(mu, nu, n: int) -> SymExpansion:
    """``P_μ P_ν = Σ c^λ_μν(q,t) P_λ`` in ``n`` variables."""
    mu, nu = Partition(mu), Partition(nu)
    if len(mu) > n or len(nu) > n:
        raise ValueError("factor has more parts than variables")
    m = _product_in_m(macdonald_P(mu, n), macdonald_P(nu, n), n, QT_ZERO)
    return SymExpansion("P", peel(m, n, macdonald_P, QT_ZERO))


def oracle_c_qt(lam, mu, nu, n: int | None = None) -> RatFunc2:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if n is None:
        n = max(len(lam), len(mu), len(nu), 1)
    if len(lam) > n:
        return QT_ZERO
    return product_coeffs_qt(mu, nu, n).get(lam, QT_ZERO)


# ---------------------------------------------------------------------------
# (q,t) hooks


@dataclass(frozen=True)
class QTHooks:
    arm: int
    leg: int
    upper: RatFunc2
    lower: RatFunc2
    hat_upper: RatFunc2
    hat_lower: RatFunc2


def qt_hook(a: int, leg: int) -> QTHooks:
    upper = 1 - Q ** (a + 1) * T**leg
    lower = 1 - Q**a * T ** (leg + 1)
    scale = Q**a * T**leg
    return QTHooks(a, leg, upper, lower, upper / scale, lower / scale)


@lru_cache(maxsize=None)
def qt_hooks(lam) -> dict:
    return {cell: qt_hook(a, leg) for cell, a, leg in arms_legs(Partition(lam))}


@dataclass(frozen=True)
class QTHookProducts:
    upper: RatFunc2
    lower: RatFunc2
    b: RatFunc2  # lower / upper


@lru_cache(maxsize=None)
def hook_products_qt(lam) -> QTHookProducts:
    up, lo = QT_ONE, QT_ONE
    for h in qt_hooks(lam).values():
        up = up * h.upper
        lo = lo * h.lower
    return QTHookProducts(up, lo, lo / up)


def phi_qt(x: RatFunc2, beta) -> RatFunc2:
    out = QT_ONE
    for b in beta:
        if not b.is_zero():
            out = out * (b - x) / b
    return out


def _flipped(lam, mu, nu, dn: DivisionNumbers):
    grids = hook_assignment(lam, mu, nu, dn)
    for name, xi, flip in (("lambda", lam, "l"), ("mu", mu, "u"), ("nu", nu, "u")):
        hooks = qt_hooks(Partition(xi))
        for cell, h in hooks.items():
            if grids[name][cell.row - 1][cell.col - 1] == flip:
                yield name, h


def evaluate_d_qt(lam, mu, nu, dn: DivisionNumbers) -> RatFunc2:
    """Product of flip ratios written as ``φ(t-q; ±ĥ)``, checked against the
    plain hook ratios."""
    x = T - Q
    beta = []
    direct = QT_ONE
    for name, h in _flipped(lam, mu, nu, dn):
        if name == "lambda":
            beta.append(h.hat_upper)
            direct = direct * h.lower / h.upper
        else:
            beta.append(-h.hat_lower)
            direct = direct * h.upper / h.lower
    out = phi_qt(x, beta)
    if out != direct:
        raise ConsistencyError(f"φ form and hook ratios differ for {lam},{mu},{nu}")
    return out


def transpose_check_qt(lam, mu, nu, n: int | None = None, n_conj: int | None = None) -> bool:
    """``c^{λ'}_{μ'ν'}(t,q) = c^λ_{μν}(q,t) b_μ b_ν / b_λ``."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    lhs = oracle_c_qt(conjugate(lam), conjugate(mu), conjugate(nu), n_conj).swap()
    b = hook_products_qt
    rhs = oracle_c_qt(lam, mu, nu, n) * b(mu).b * b(nu).b / b(lam).b
    return lhs == rhs


def jack_limit(c: RatFunc2, a: int):
    """``lim_{t→1} c(t^a, t)``."""
    return limit_t_to_1(c.specialize(a, 1, "t"))


def jack_limit_check(lam, mu, nu, a: int, n: int | None = None) -> bool:
    return jack_limit(oracle_c_qt(lam, mu, nu, n), a) == oracle_c(lam, mu, nu, n)(a)


# ---------------------------------------------------------------------------
# per-triple verdict

DUALITY_MAX_PARTS = 4


@dataclass
class QTTripleReport:
    lam: Partition
    mu: Partition
    nu: Partition
    minimal: bool
    lr: int
    facets: list[int]
    case: int | None = None
    division: DivisionNumbers | None = None
    d: RatFunc2 | None = None
    c_oracle: RatFunc2 | None = None
    b_lambda: RatFunc2 | None = None
    match: bool | None = None
    q_equals_t: bool | None = None
    duality: bool | None = None
    error: str | None = None
    case_results: dict = field(default_factory=dict)


def verify_triple_qt(
    lam, mu, nu, convention: str = "minus", n: int = 3, table: str = "printed", duality: bool = True
) -> QTTripleReport:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    minimal, facets = horn.facet_status(lam, mu, nu)
    rep = QTTripleReport(lam, mu, nu, minimal, lr_count(lam, mu, nu), facets)
    n = max(n, len(lam), 1)
    c = oracle_c_qt(lam, mu, nu, n)
    rep.c_oracle = c
    rep.b_lambda = hook_products_qt(lam).b
    rep.q_equals_t = c.specialize(1, 1, "t") == rep.lr
    conj = conjugate(lam)
    if duality and len(conj) <= DUALITY_MAX_PARTS:
        rep.duality = transpose_check_qt(lam, mu, nu, n, max(len(conj), 1))
    if not minimal:
        return rep
    rep.case = rep.facets[0]
    try:
        dn = division_numbers(lam, mu, nu, rep.case, convention, table)
    except FormulaError as exc:
        rep.error = str(exc)
        rep.match = False
        rep.case_results[rep.case] = ("out-of-range", None)
        return rep
    rep.division = dn
    try:
        rep.d = evaluate_d_qt(lam, mu, nu, dn)
    except ConsistencyError as exc:
        rep.error = str(exc)
        rep.match = False
        rep.case_results[rep.case] = ("path-disagreement", dn)
        return rep
    rep.match = rep.d == c
    rep.case_results[rep.case] = ("match" if rep.match else "mismatch", dn)
    return rep
