"""Partitions, Young diagrams and Littlewood-Richardson tableaux."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import accumulate
from typing import Iterator, NamedTuple


class Partition(tuple):
    """Weakly decreasing tuple of positive parts.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0)) ==
    Partition((2, 1))``; use :meth:`padded` when a fixed number of coordinates
    is needed.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        parts = parts[:end]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be non-negative: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part, 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(a <= b for a, b in zip(other, self))

    def cells(self) -> Iterator["Cell"]:
        for i, row in enumerate(self, 1):
            for j in range(1, row + 1):
                yield Cell(i, j)

    def __repr__(self):
        return f"Partition({format_partition(self) or '∅'})"

    def __str__(self):
        return format_partition(self)


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    def cells(self) -> list[Cell]:
        return [
            Cell(i, j)
            for i in range(1, len(self.outer) + 1)
            for j in range(self.inner.part(i) + 1, self.outer.part(i) + 1)
        ]


@dataclass(frozen=True)
class Block:
    """All columns of ``λ`` with height ``height``; each row of it is a strip."""

    height: int
    width: int


class StripKind(str, Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    BOTH = "both"
    NEITHER = "neither"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition()
    try:
        return Partition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from None


def format_partition(lam) -> str:
    return ",".join(str(p) for p in lam)


def conjugate(lam) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def dominance_leq(mu, lam) -> bool:
    if sum(mu) != sum(lam):
        raise ValueError("dominance undefined across weights")
    n = max(len(mu), len(lam))
    a = accumulate(Partition(mu).padded(n))
    b = accumulate(Partition(lam).padded(n))
    return all(x <= y for x, y in zip(a, b))


def arm_leg_hooks(lam, b) -> tuple[int, int, int]:
    lam = Partition(lam)
    i, j = b
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError("cell outside diagram")
    a = lam[i - 1] - j
    leg = sum(1 for p in lam[i:] if p >= j)
    return a, leg, a + leg + 1


def arms_legs(lam) -> list[tuple[Cell, int, int]]:
    """``(cell, arm, leg)`` for every cell of ``lam`` in row-major order."""
    lam = Partition(lam)
    conj = conjugate(lam)
    return [(Cell(i, j), lam[i - 1] - j, conj[j - 1] - i) for i, j in lam.cells()]


def blocks(lam) -> list[Block]:
    lam = Partition(lam)
    return [Block(i, lam.part(i) - lam.part(i + 1)) for i in range(1, len(lam) + 1)]


def strip_kind(outer, inner) -> StripKind:
    outer, inner = Partition(outer), Partition(inner)
    if not outer.contains(inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    n = len(outer)
    horizontal = all(
        a - b <= 1 for a, b in zip(conjugate(outer), conjugate(inner).padded(outer.part(1)))
    )
    vertical = all(a - b <= 1 for a, b in zip(outer, inner.padded(n)))
    if horizontal and vertical:
        return StripKind.BOTH
    if horizontal:
        return StripKind.HORIZONTAL
    if vertical:
        return StripKind.VERTICAL
    return StripKind.NEITHER


def is_vertical_strip(outer, inner) -> bool:
    return strip_kind(outer, inner) in (StripKind.VERTICAL, StripKind.BOTH)


def is_horizontal_strip(outer, inner) -> bool:
    return strip_kind(outer, inner) in (StripKind.HORIZONTAL, StripKind.BOTH)


@lru_cache(maxsize=None)
def partitions_of(n: int, max_len: int | None = None, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lex order (largest first)."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (Partition(),)
    if max_len == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        rest_len = None if max_len is None else max_len - 1
        for rest in partitions_of(n - first, rest_len, first):
            out.append(Partition((first,) + rest))
    return tuple(out)


def partitions_up_to(max_weight: int, max_len: int | None = None) -> Iterator[Partition]:
    for n in range(max_weight + 1):
        yield from partitions_of(n, max_len)


def lr_tableaux(lam, mu, nu) -> list[dict[Cell, int]]:
    """All LR tableaux of shape ``lam/mu`` and weight ``nu``."""
    return list(_lr_search(Partition(lam), Partition(mu), Partition(nu), count_only=False))


def lr_count(lam, mu, nu) -> int:
    return _lr_count_cached(Partition(lam), Partition(mu), Partition(nu))


@lru_cache(maxsize=200_000)
def _lr_count_cached(lam, mu, nu) -> int:
    return sum(1 for _ in _lr_search(lam, mu, nu, count_only=True))


def _lr_search(lam: Partition, mu: Partition, nu: Partition, count_only: bool):
    if lam.weight != mu.weight + nu.weight or not lam.contains(mu):
        return
    if not lam.contains(nu):
        return
    rows = len(lam)
    mu_p = mu.padded(rows)
    # reading order: rows top to bottom, right to left within a row
    cells = [(i, j) for i in range(rows) for j in range(lam[i] - 1, mu_p[i] - 1, -1)]
    k = len(nu)
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (k + 1)

    def rec(pos: int):
        if pos == len(cells):
            yield None if count_only else {Cell(i + 1, j + 1): v for (i, j), v in filling.items()}
            return
        i, j = cells[pos]
        hi = min(k, i + 1)
        right = filling.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        above = filling.get((i - 1, j)) if i > 0 else None
        lo = 1 if above is None else above + 1
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(i, j)] = v
            yield from rec(pos + 1)
            del filling[(i, j)]
            counts[v] -= 1

    yield from rec(0)


def semistandard_tableaux(lam, max_entry: int) -> Iterator[dict[Cell, int]]:
    """Semistandard tableaux of shape ``lam`` with entries in ``1..max_entry``."""
    lam = Partition(lam)
    cells = list(lam.cells())
    filling: dict[Cell, int] = {}

    def rec(pos: int):
        if pos == len(cells):
            yield dict(filling)
            return
        c = cells[pos]
        lo = 1
        if c.col > 1:
            lo = filling[Cell(c.row, c.col - 1)]
        if c.row > 1:
            lo = max(lo, filling[Cell(c.row - 1, c.col)] + 1)
        for v in range(lo, max_entry + 1):
            filling[c] = v
            yield from rec(pos + 1)
        filling.pop(c, None)

    yield from rec(0)
