"""Jack polynomials as eigenfunctions of the Laplace-Beltrami type operator
``D(α)``, and the structure constants of their products.

This module is the reference computation ("oracle") that every hook formula in
the package is checked against. Nothing in it knows about hooks except
:func:`hook_products` and :func:`pieri_c`, which are kept apart from the
eigenvector machinery.

Layout of the computation:

* ``D(α)`` acts on the monomial basis ``{m_μ : ℓ(μ) ≤ n}`` by an upper
  triangular matrix (in dominance order). Off-diagonal entries are integers,
  diagonal entries are linear in ``α``.
* ``P_λ`` is the eigenvector with ``v_λλ = 1``, obtained by back substitution.
* ``P_μ P_ν`` is multiplied out in the monomial basis using the integer
  structure constants of ``m_ρ m_σ`` and then peeled into ``P_λ`` terms from the
  dominance-maximal end.
"""

from __future__ import annotations

import threading
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Mapping

from .algebra import AlgebraError, RatFunc1, UniPoly, r_to_alpha
from .partitions import (
    Partition,
    arms_legs,
    conjugate,
    dominance_leq,
    is_vertical_strip,
    partitions_of,
    semistandard_tableaux,
)

ALPHA = RatFunc1.gen("alpha")
ONE = RatFunc1(1)
ZERO = RatFunc1(0)


class OracleError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# polynomials in n variables


class MonomialPoly:
    """Polynomial in ``x_1..x_n``: exponent tuple -> coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        self.nvars = nvars
        self.terms = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            if not _is_zero(c):
                self.terms[tuple(e)] = c

    def __add__(self, other: "MonomialPoly") -> "MonomialPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return MonomialPoly(self.nvars, out)

    def __sub__(self, other: "MonomialPoly") -> "MonomialPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "MonomialPoly":
        return MonomialPoly(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MonomialPoly):
            return self.scale(other)
        self._check(other)
        out: dict[tuple, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return MonomialPoly(self.nvars, out)

    def __eq__(self, other):
        if not isinstance(other, MonomialPoly):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        keys = set(self.terms) | set(other.terms)
        return all(_is_zero(self.terms.get(k, 0) - other.terms.get(k, 0)) for k in keys)

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def is_symmetric(self) -> bool:
        for e, c in self.terms.items():
            for p in set(permutations(e)):
                if p not in self.terms or not _is_zero(self.terms[p] - c):
                    return False
        return True

    def restrict_last(self) -> "MonomialPoly":
        """Set the last variable to zero."""
        return MonomialPoly(
            self.nvars - 1, {e[:-1]: c for e, c in self.terms.items() if e[-1] == 0}
        )

    def to_m_basis(self) -> "SymExpansion":
        """Read the m-expansion off the dominant monomials (assumes symmetry)."""
        coeffs = {}
        for e, c in self.terms.items():
            if all(a >= b for a, b in zip(e, e[1:])):
                coeffs[Partition(e)] = c
        return SymExpansion("m", coeffs)

    def __repr__(self):
        return f"MonomialPoly({self.nvars}, {self.terms})"


def _is_zero(c) -> bool:
    if hasattr(c, "is_zero"):
        return c.is_zero()
    return c == 0


@dataclass
class SymExpansion:
    """Symmetric function as a combination of basis elements indexed by partitions."""

    basis: str
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in ("m", "P", "J"):
            raise ValueError(f"unknown basis {self.basis!r}")
        self.coeffs = {Partition(k): v for k, v in self.coeffs.items() if not _is_zero(v)}
        weights = {k.weight for k in self.coeffs}
        if len(weights) > 1:
            raise ValueError("mixed weights in expansion")

    def __getitem__(self, lam):
        return self.coeffs.get(Partition(lam), ZERO)

    def get(self, lam, default=None):
        return self.coeffs.get(Partition(lam), default)

    def support(self) -> list[Partition]:
        return sorted(self.coeffs, reverse=True)

    def items(self):
        return [(k, self.coeffs[k]) for k in self.support()]

    def map(self, f: Callable) -> "SymExpansion":
        return SymExpansion(self.basis, {k: f(v) for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, SymExpansion):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __len__(self):
        return len(self.coeffs)


def m_poly(lam, n: int, coeff=1) -> MonomialPoly:
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    return MonomialPoly(n, {e: coeff for e in set(permutations(lam.padded(n)))})


def schur_poly(lam, n: int) -> MonomialPoly:
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    counts: Counter = Counter()
    for t in semistandard_tableaux(lam, n):
        e = [0] * n
        for v in t.values():
            e[v - 1] += 1
        counts[tuple(e)] += 1
    return MonomialPoly(n, {e: RatFunc1(c) for e, c in counts.items()})


def expansion_to_poly(exp: SymExpansion, n: int) -> MonomialPoly:
    if exp.basis != "m":
        raise ValueError("expected a monomial-basis expansion")
    out = MonomialPoly(n)
    for lam, c in exp.coeffs.items():
        if len(lam) <= n:
            out = out + m_poly(lam, n, c)
    return out


# ---------------------------------------------------------------------------
# the operator D(α)


def _divide_by_difference(coeffs: list, zero) -> list:
    """Divide ``Σ c_k x^k y^(d-k)`` by ``(x - y)``; ``coeffs[k] = c_k``."""
    d = len(coeffs) - 1
    quot = [zero] * d
    carry = zero
    for k in range(d, 0, -1):
        carry = coeffs[k] + carry
        quot[k - 1] = carry
    if not _is_zero(coeffs[0] + carry):
        raise OracleError("operator applied to asymmetric input")
    return quot


def apply_D_alpha(f: MonomialPoly) -> MonomialPoly:
    """Exact image of ``f`` under ``(α/2)Σ x_i² ∂_i² + Σ_{i≠j} x_i²/(x_i-x_j) ∂_i``."""
    n = f.nvars
    out: dict[tuple, object] = {}

    def add(e, v):
        out[e] = out[e] + v if e in out else v

    for e, c in f.terms.items():
        k = sum(a * (a - 1) for a in e) // 2
        if k:
            add(e, c * ALPHA * k)
    for i in range(n):
        for j in range(i + 1, n):
            # numerator (x_i² ∂_i - x_j² ∂_j) f, grouped by the other exponents
            groups: dict[tuple, dict[int, object]] = defaultdict(dict)
            for e, c in f.terms.items():
                rest = e[:i] + e[i + 1 : j] + e[j + 1 :]
                d = e[i] + e[j] + 1
                g = groups[(rest, d)]
                if e[i]:
                    g[e[i] + 1] = g.get(e[i] + 1, 0) + c * e[i]
                if e[j]:
                    g[e[i]] = g.get(e[i], 0) - c * e[j]
            for (rest, d), g in groups.items():
                coeffs = [g.get(k, ZERO) for k in range(d + 1)]
                quot = _divide_by_difference(coeffs, ZERO)
                for k, v in enumerate(quot):
                    if _is_zero(v):
                        continue
                    e = list(rest)
                    e.insert(i, k)
                    e.insert(j, d - 1 - k)
                    add(tuple(e), v)
    return MonomialPoly(n, out)


@lru_cache(maxsize=None)
def _pair_image(p: int, q: int) -> dict[tuple[int, int], int]:
    """``(x²∂_x - y²∂_y)/(x-y)`` applied to the orbit sum of ``x^p y^q``."""
    orbit = {(p, q), (q, p)}
    d = p + q + 1
    c = [0] * (d + 1)
    for a, b in orbit:
        if a:
            c[a + 1] += a
        if b:
            c[a] -= b
    quot = _divide_by_difference(c, 0)
    return {(k, d - 1 - k): v for k, v in enumerate(quot) if v}


def _multiset_minus(big: tuple, small: tuple):
    rest = Counter(big)
    rest.subtract(small)
    if any(v < 0 for v in rest.values()):
        return None
    return sorted(rest.elements(), reverse=True)


@lru_cache(maxsize=None)
def d_alpha_column(mu: Partition, n: int) -> tuple[tuple[Partition, int, int], ...]:
    """Column ``μ`` of the matrix of ``D(α)``: entries ``(ν, α-part, constant)``.

    The pair terms are evaluated locally: the coefficient of ``x^ν`` in the
    ``(i, j)`` pair term only involves monomials of ``m_μ`` agreeing with ``ν``
    away from ``i, j``.
    """
    mu_p = mu.padded(n)
    col: dict[Partition, list[int]] = {}
    col[mu] = [sum(a * (a - 1) for a in mu) // 2, 0]
    for nu in partitions_of(mu.weight, n):
        if not dominance_leq(nu, mu):
            continue
        nu_p = nu.padded(n)
        total = 0
        for i in range(n):
            for j in range(i + 1, n):
                rest = nu_p[:i] + nu_p[i + 1 : j] + nu_p[j + 1 :]
                pair = _multiset_minus(mu_p, rest)
                if pair is None:
                    continue
                total += _pair_image(pair[0], pair[1]).get((nu_p[i], nu_p[j]), 0)
        if total:
            col.setdefault(nu, [0, 0])[1] += total
    return tuple((nu, a, b) for nu, (a, b) in sorted(col.items(), reverse=True) if a or b)


def eigenvalue(lam, n: int) -> RatFunc1:
    """``α n(λ') - n(λ) + (n-1)|λ|``: the closed form of the diagonal entry."""
    lam = Partition(lam)
    n_lam = sum(i * p for i, p in enumerate(lam))
    n_conj = sum(p * (p - 1) for p in lam) // 2
    return ALPHA * n_conj + (-n_lam + (n - 1) * lam.weight)


# ---------------------------------------------------------------------------
# triangular eigenvector solve (shared with the (q,t) oracle)


def triangular_eigenvector(lam: Partition, n: int, column, one, zero) -> dict:
    """Eigenvector of an upper-triangular operator with ``v_λλ = 1``.

    ``column(μ)`` returns ``{ν: b_νμ}`` for the operator's image of the basis
    element ``μ``; the basis is all partitions of ``|λ|`` with at most ``n``
    parts that are dominated by ``λ``.
    """
    basis = [mu for mu in partitions_of(lam.weight, n) if dominance_leq(mu, lam)]
    # lex-decreasing order is a linear extension of dominance
    basis.sort(reverse=True)
    cols = {mu: column(mu) for mu in basis}
    diag = {mu: cols[mu].get(mu, zero) for mu in basis}
    e_lam = diag[lam]
    v = {lam: one}
    for mu in basis[1:]:
        acc = zero
        for nu, vnu in v.items():
            b = cols[nu].get(mu)
            if b is not None and not _is_zero(vnu):
                acc = acc + b * vnu
        gap = e_lam - diag[mu]
        if _is_zero(gap):
            raise OracleError(f"eigenvalue collision between {lam} and {mu}")
        if not _is_zero(acc):
            v[mu] = acc / gap
    return v


def _jack_column(n: int):
    def column(mu):
        return {nu: ALPHA * a + b if a else RatFunc1(b) for nu, a, b in d_alpha_column(mu, n)}

    return column


class ExpansionCache:
    """Read-mostly table of computed expansions keyed by ``(λ, n)``."""

    def __init__(self, compute):
        self._compute = compute
        self._table: dict = {}
        self._lock = threading.Lock()
        self.store = None  # optional on-disk backing, see jacklr.cache

    def __call__(self, lam, n: int):
        key = (Partition(lam), n)
        hit = self._table.get(key)
        if hit is not None:
            return hit
        value = None
        if self.store is not None:
            value = self.store.load(*key)
        if value is None:
            value = self._compute(*key)
            if self.store is not None:
                self.store.save(*key, value)
        with self._lock:
            self._table.setdefault(key, value)
        return self._table[key]

    def clear(self):
        with self._lock:
            self._table.clear()


def _compute_jack_P(lam: Partition, n: int) -> SymExpansion:
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    v = triangular_eigenvector(lam, n, _jack_column(n), ONE, ZERO)
    return SymExpansion("m", v)


jack_P_cache = ExpansionCache(_compute_jack_P)


def jack_P(lam, n: int) -> SymExpansion:
    """Monic Jack polynomial ``P_λ`` in ``n`` variables, monomial basis."""
    return jack_P_cache(lam, n)


def jack_J(lam, n: int) -> SymExpansion:
    h = hook_products(lam)
    scale = RatFunc1(h.lower)
    return jack_P(lam, n).map(lambda c: c * scale)


# ---------------------------------------------------------------------------
# products


@lru_cache(maxsize=None)
def monomial_product_coeff(rho: Partition, sigma: Partition, kappa: Partition, n: int) -> int:
    """Coefficient of ``m_κ`` in ``m_ρ m_σ`` (n variables)."""
    if rho.weight + sigma.weight != kappa.weight:
        return 0
    k = kappa.padded(n)

    @lru_cache(maxsize=None)
    def count(pos: int, r: tuple, s: tuple) -> int:
        if pos == n:
            return 1
        total = 0
        for p in set(r):
            q = k[pos] - p
            if q < 0 or q not in s:
                continue
            r2 = list(r)
            r2.remove(p)
            s2 = list(s)
            s2.remove(q)
            total += count(pos + 1, tuple(r2), tuple(s2))
        return total

    return count(0, rho.padded(n), sigma.padded(n))


def _product_in_m(a: SymExpansion, b: SymExpansion, n: int, zero) -> dict:
    weight = (a.support()[0].weight if len(a) else 0) + (b.support()[0].weight if len(b) else 0)
    pair_coeffs = {}
    for rho, x in a.coeffs.items():
        for sigma, y in b.coeffs.items():
            pair_coeffs[(rho, sigma)] = x * y
    out = {}
    for kappa in partitions_of(weight, n):
        acc = zero
        for (rho, sigma), w in pair_coeffs.items():
            m = monomial_product_coeff(rho, sigma, kappa, n)
            if m:
                acc = acc + w * m
        if not _is_zero(acc):
            out[kappa] = acc
    return out


def peel(m_coeffs: dict, n: int, basis_fn, zero) -> dict:
    """Rewrite an m-basis expansion in the basis ``basis_fn(κ, n)``.

    Repeatedly removes the lex-largest (hence dominance-maximal) surviving term.
    """
    remaining = dict(m_coeffs)
    out = {}
    bound = len(remaining) and len(partitions_of(next(iter(remaining)).weight)) + 1
    steps = 0
    while remaining:
        steps += 1
        if steps > bound:
            raise OracleError("product expansion did not terminate")
        top = max(remaining)
        c = remaining.pop(top)
        if _is_zero(c):
            continue
        out[top] = c
        for rho, v in basis_fn(top, n).coeffs.items():
            if rho == top:
                continue
            cur = remaining.get(rho, zero) - c * v
            if _is_zero(cur):
                remaining.pop(rho, None)
            else:
                remaining[rho] = cur
    return out


@lru_cache(maxsize=4096)
def product_coeffs(mu, nu, n: int) -> SymExpansion:
    """``P_μ P_ν = Σ c^λ_μν(α) P_λ`` computed in ``n`` variables."""
    mu, nu = Partition(mu), Partition(nu)
    if len(mu) > n or len(nu) > n:
        raise ValueError("factor has more parts than variables")
    m = _product_in_m(jack_P(mu, n), jack_P(nu, n), n, ZERO)
    return SymExpansion("P", peel(m, n, jack_P, ZERO))


def oracle_c(lam, mu, nu, n: int | None = None) -> RatFunc1:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if n is None:
        n = max(len(lam), len(mu), len(nu), 1)
    if len(lam) > n:
        return ZERO
    return product_coeffs(mu, nu, n)[lam]


# ---------------------------------------------------------------------------
# hooks


def upper_hook(a: int, leg: int) -> UniPoly:
    return UniPoly([leg, a + 1])


def lower_hook(a: int, leg: int) -> UniPoly:
    return UniPoly([leg + 1, a])


@dataclass(frozen=True)
class HookProducts:
    upper: UniPoly  # product of α(a+1)+ℓ
    lower: UniPoly  # product of αa+ℓ+1
    j: UniPoly
    b: RatFunc1  # lower / upper


@lru_cache(maxsize=None)
def hook_products(lam) -> HookProducts:
    up = UniPoly([1])
    lo = UniPoly([1])
    for _, a, leg in arms_legs(lam):
        up = up * upper_hook(a, leg)
        lo = lo * lower_hook(a, leg)
    return HookProducts(up, lo, up * lo, RatFunc1(lo, up))


def pieri_c(lam, mu, r: int) -> RatFunc1:
    """Column Pieri coefficient ``c^λ_{μ,(1^r)}(α)``."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.weight - mu.weight != r or not lam.contains(mu) or not is_vertical_strip(lam, mu):
        raise ValueError(f"{lam}/{mu} is not a vertical {r}-strip")
    lam_c, mu_c = conjugate(lam), conjugate(mu)
    out = ONE
    for i, j in mu.cells():
        if mu.part(i) == lam.part(i) and mu_c.part(j) < lam_c.part(j):
            a_l, l_l = lam.part(i) - j, lam_c.part(j) - i
            a_m, l_m = mu.part(i) - j, mu_c.part(j) - i
            out = out * RatFunc1(lower_hook(a_l, l_l), upper_hook(a_l, l_l))
            out = out * RatFunc1(upper_hook(a_m, l_m), lower_hook(a_m, l_m))
    return out


def invert_alpha(f: RatFunc1) -> RatFunc1:
    """``f(1/α)``."""
    as_r = RatFunc1._raw(f._n, f._d, "r")
    return r_to_alpha(as_r)


def transpose_factor(lam, mu, nu) -> RatFunc1:
    """``b_μ b_ν / b_λ``, the factor relating a coefficient to its conjugate."""
    return hook_products(mu).b * hook_products(nu).b / hook_products(lam).b


def pieri_row_c(lam, mu, r: int) -> RatFunc1:
    """Row Pieri coefficient ``c^λ_{μ,(r)}(α)`` obtained from the column rule
    by conjugating every partition and inverting ``α``."""
    lam_c, mu_c = conjugate(lam), conjugate(mu)
    col = pieri_c(lam_c, mu_c, r)
    nu_c = Partition((1,) * r)
    return invert_alpha(col * transpose_factor(lam_c, mu_c, nu_c))


def g_from_c(lam, mu, nu, c: RatFunc1) -> UniPoly:
    g = RatFunc1(hook_products(lam).upper * hook_products(mu).lower * hook_products(nu).lower) * c
    if not g.is_polynomial():
        raise OracleError(f"g for {lam},{mu},{nu} is not a polynomial: {g}")
    return g.num


def g_coeff(lam, mu, nu, n: int | None = None) -> UniPoly:
    return g_from_c(lam, mu, nu, oracle_c(lam, mu, nu, n))


def transpose_check(lam, mu, nu, n: int | None = None, n_conj: int | None = None) -> bool:
    """Check ``c^{λ'}_{μ'ν'}(1/α) = c^λ_{μν}(α) b_μ b_ν / b_λ`` with the oracle."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    lhs = invert_alpha(oracle_c(conjugate(lam), conjugate(mu), conjugate(nu), n_conj))
    rhs = oracle_c(lam, mu, nu, n) * transpose_factor(lam, mu, nu)
    return lhs == rhs
