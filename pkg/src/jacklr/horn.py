"""Horn inequalities for three-part partitions, minimal triples and the
classification of their LR fillings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .partitions import Partition, lr_count, lr_tableaux, partitions_of

# (number, kind, lhs, rhs) with lhs/rhs as lists of (partition, index);
# kind "le" means lhs <= rhs, "ge" means lhs >= rhs.
HORN_INEQUALITIES = (
    (1, "le", [("mu", 3)], [("mu", 2)]),
    (2, "le", [("mu", 2)], [("mu", 1)]),
    (3, "le", [("nu", 3)], [("nu", 2)]),
    (4, "le", [("nu", 2)], [("nu", 1)]),
    (5, "le", [("lam", 3)], [("lam", 2)]),
    (6, "le", [("lam", 2)], [("lam", 1)]),
    (7, "le", [("lam", 1)], [("mu", 1), ("nu", 1)]),
    (8, "le", [("lam", 2)], [("mu", 1), ("nu", 2)]),
    (9, "le", [("lam", 2)], [("mu", 2), ("nu", 1)]),
    (10, "le", [("lam", 3)], [("mu", 1), ("nu", 3)]),
    (11, "le", [("lam", 3)], [("mu", 2), ("nu", 2)]),
    (12, "le", [("lam", 3)], [("mu", 3), ("nu", 1)]),
    (13, "ge", [("lam", 3)], [("mu", 3), ("nu", 3)]),
    (14, "ge", [("lam", 2)], [("mu", 3), ("nu", 2)]),
    (15, "ge", [("lam", 2)], [("mu", 2), ("nu", 3)]),
    (16, "ge", [("lam", 1)], [("mu", 3), ("nu", 1)]),
    (17, "ge", [("lam", 1)], [("mu", 2), ("nu", 2)]),
    (18, "ge", [("lam", 1)], [("mu", 1), ("nu", 3)]),
)

# facet relabelling induced by exchanging mu and nu
SWAP_MU_NU = {1: 3, 3: 1, 2: 4, 4: 2, 8: 9, 9: 8, 10: 12, 12: 10, 14: 15, 15: 14, 16: 18, 18: 16}
for _k in (5, 6, 7, 11, 13, 17):
    SWAP_MU_NU[_k] = _k

# (type letter + roman numeral) -> facet for overlap types g1g2, g1o2, o1g2, o1o2
FILLING_TABLE = {
    "B.I": (3, 11, 8, 16),
    "B.II": (15, 5, 2, 10),
    "B.III": (18, 18, 6, 6),
    "B.IV": (12, 12, 17, 17),
    "C.I": (13, 1, 13, 1),
    "C.II": (7, 14, 7, 14),
    "C.III": (9, 9, 9, 9),
    "C.IV": (4, 4, 4, 4),
}
OVERLAP_TYPES = ("g1g2", "g1o2", "o1g2", "o1o2")


class HornError(ValueError):
    pass


@dataclass(frozen=True)
class FacetSet:
    satisfied: bool
    equalities: frozenset

    def sorted(self) -> list[int]:
        return sorted(self.equalities)


def _three(x, name: str) -> tuple[int, int, int]:
    x = Partition(x)
    if len(x) > 3:
        raise HornError(f"{name}={x} outside P3")
    return x.padded(3)


def horn_facets(lam, mu, nu) -> FacetSet:
    vals = {"lam": _three(lam, "lambda"), "mu": _three(mu, "mu"), "nu": _three(nu, "nu")}
    ok = sum(vals["lam"]) == sum(vals["mu"]) + sum(vals["nu"])
    eq = set()
    for num, kind, lhs, rhs in HORN_INEQUALITIES:
        left = sum(vals[p][i - 1] for p, i in lhs)
        right = sum(vals[p][i - 1] for p, i in rhs)
        if left == right:
            eq.add(num)
        elif (kind == "le") != (left < right):
            ok = False
    return FacetSet(ok, frozenset(eq))


def facet_status(lam, mu, nu) -> tuple[bool, list[int]]:
    """``(minimal, facets)``; triples outside P3 have no facets and are not minimal."""
    try:
        f = horn_facets(lam, mu, nu)
    except HornError:
        return False, []
    return f.satisfied and bool(f.equalities), f.sorted()


def is_minimal_lr(lam, mu, nu) -> bool:
    return lr_count(lam, mu, nu) == 1


def is_minimal_horn(lam, mu, nu) -> bool:
    f = horn_facets(lam, mu, nu)
    return f.satisfied and bool(f.equalities)


def is_minimal(lam, mu, nu, method: str = "horn") -> bool:
    if method == "horn":
        return is_minimal_horn(lam, mu, nu)
    if method == "lr":
        return is_minimal_lr(lam, mu, nu)
    raise ValueError(f"unknown method {method!r}")


def classify_cases(lam, mu, nu) -> list[int]:
    f = horn_facets(lam, mu, nu)
    if not (f.satisfied and f.equalities):
        raise HornError("no facet case")
    return f.sorted()


@dataclass(frozen=True)
class FillingProfile:
    a1: int
    b1: int
    b2: int
    c1: int
    c2: int
    o1: int
    o2: int
    g1: int
    g2: int
    type_letter: str
    type_roman: str
    overlap_type: str
    facet: int

    @property
    def label(self) -> str:
        return f"{self.type_letter}.{self.type_roman}.{self.overlap_type}"

    def reconstruct(self, mu3: int, nu3: int) -> tuple[tuple, tuple, tuple]:
        """Rebuild ``(λ, μ, ν)`` from the counts and the removed third parts."""
        a1, b1, b2, c1, c2 = self.a1, self.b1, self.b2, self.c1, self.c2
        o1, o2, g1, g2 = self.o1, self.o2, self.g1, self.g2
        nu_ = (a1 + b1 + c1 + o1 + o2 + nu3, b2 + c2 + o1 + o2 + nu3, nu3)
        mu_ = (b1 + b2 + g1 + o2 + c1 + c2 + g2 + mu3, c1 + c2 + g2 + mu3, mu3)
        lam_ = (
            b1 + b2 + g1 + o2 + c1 + c2 + g2 + a1 + o1 + mu3 + nu3,
            b1 + b2 + o2 + c1 + c2 + g2 + o1 + mu3 + nu3,
            o2 + c1 + c2 + mu3 + nu3,
        )
        return lam_, mu_, nu_


def reduce_third_parts(lam, mu, nu):
    """Remove the content forced by ``ν_3`` and then by ``μ_3``."""
    lam3, mu3, nu3 = _three(lam, "lambda"), _three(mu, "mu"), _three(nu, "nu")
    lam_r = tuple(x - nu3[2] for x in lam3)
    nu_r = tuple(x - nu3[2] for x in nu3)
    lam_r = tuple(x - mu3[2] for x in lam_r)
    mu_r = tuple(x - mu3[2] for x in mu3)
    return Partition(lam_r), Partition(mu_r), Partition(nu_r)


def classify_filling(lam, mu, nu) -> FillingProfile:
    cases = classify_cases(lam, mu, nu)
    lam_r, mu_r, nu_r = reduce_third_parts(lam, mu, nu)
    tabs = lr_tableaux(lam_r, mu_r, nu_r)
    if len(tabs) != 1:
        raise HornError(f"reduced triple has {len(tabs)} LR tableaux")
    (tab,) = tabs
    count = {(r, v): 0 for r in (1, 2, 3) for v in (1, 2, 3)}
    for cell, v in tab.items():
        count[(cell.row, v)] += 1
    L, M = lam_r.padded(3), mu_r.padded(3)
    o1, g1 = max(0, L[1] - M[0]), max(0, M[0] - L[1])
    o2, g2 = max(0, L[2] - M[1]), max(0, M[1] - L[2])
    a1 = count[(1, 1)] - o1
    b1 = count[(2, 1)] - o2
    b2 = count[(2, 2)] - o1
    c1 = count[(3, 1)]
    c2 = count[(3, 2)] - o2
    letters = [x for x, ok in (("B", b2 == 0), ("C", c1 == 0)) if ok]
    romans = [
        x
        for x, ok in (
            ("I", c2 == 0),
            ("II", b1 == 0),
            ("III", a1 == b2),
            ("IV", a1 + b1 == b2 + c2),
        )
        if ok
    ]
    first = ["o"] if o1 else ["g"] if g1 else ["g", "o"]
    second = ["o"] if o2 else ["g"] if g2 else ["g", "o"]
    overlaps = [f"{x}1{y}2" for x in first for y in second]
    options = []
    for letter in letters:
        for roman in romans:
            for ov in overlaps:
                facet = FILLING_TABLE[f"{letter}.{roman}"][OVERLAP_TYPES.index(ov)]
                options.append((facet not in cases, letter, roman, ov, facet))
    if not options:
        raise HornError(f"filling of {lam}/{mu} with weight {nu} has no Table-2 type")
    _, letter, roman, ov, facet = min(options, key=lambda o: o[0])
    return FillingProfile(a1, b1, b2, c1, c2, o1, o2, g1, g2, letter, roman, ov, facet)


def p3_partitions(max_weight: int) -> list[Partition]:
    out = []
    for w in range(max_weight + 1):
        out.extend(partitions_of(w, 3))
    return sorted(out)


def p3_triples(max_weight: int, contained: bool = True) -> Iterator[tuple[Partition, Partition, Partition]]:
    """All ``(λ, μ, ν)`` in P3 with ``|λ| ≤ max_weight`` and ``|μ| + |ν| = |λ|``,
    in lex order; with ``contained`` only those with ``μ ⊆ λ``."""
    parts = p3_partitions(max_weight)
    for lam in parts:
        for mu in parts:
            if mu.weight > lam.weight or (contained and not lam.contains(mu)):
                continue
            for nu in sorted(partitions_of(lam.weight - mu.weight, 3)):
                yield lam, mu, nu


def enumerate_minimal(max_weight: int) -> Iterator[tuple[Partition, Partition, Partition]]:
    for lam, mu, nu in p3_triples(max_weight):
        if is_minimal_horn(lam, mu, nu):
            yield lam, mu, nu
