"""Classical Littlewood-Richardson rule, used as an independent check.

c(lam, mu; nu) counts semistandard fillings of nu/lam with content mu whose
reverse reading word (rows top to bottom, each row right to left) is a
ballot word. Nothing here touches tableaux of shape mu, readings along
admissible orders, additions or pictures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .shapes import Cell, Partition, SkewShape, cells, contains


def is_ballot(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for k in word:
        counts[k] = counts.get(k, 0) + 1
        if k > 1 and counts[k] > counts.get(k - 1, 0):
            return False
    return True


@dataclass(frozen=True)
class SkewFilling:
    shape: SkewShape
    entries: tuple[tuple[Cell, int], ...]

    def __post_init__(self):
        got = dict(self.entries)
        if set(got) != set(cells(self.shape)):
            raise ValueError("filling must cover the skew shape exactly")
        for (i, j), x in got.items():
            right = got.get((i, j + 1))
            below = got.get((i + 1, j))
            if right is not None and right < x:
                raise ValueError(f"row {i} decreases at column {j}")
            if below is not None and below <= x:
                raise ValueError(f"column {j} does not strictly increase at row {i}")

    def as_dict(self) -> dict[Cell, int]:
        return dict(self.entries)

    def reverse_reading_word(self) -> list[int]:
        got = self.as_dict()
        return [got[c] for c in sorted(got, key=lambda c: (c[0], -c[1]))]

    @property
    def content(self) -> tuple[int, ...]:
        got = self.as_dict()
        top = max(got.values(), default=0)
        return tuple(sum(1 for v in got.values() if v == k) for k in range(1, top + 1))


def lr_fillings(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> list[SkewFilling]:
    """Ballot skew fillings of nu/lam with content mu, by backtracking."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size + mu.size != nu.size or not contains(nu, lam):
        return []
    shape = SkewShape(nu, lam)
    # fill in reverse reading order: right neighbour and upper neighbour come first
    order = sorted(cells(shape), key=lambda c: (c[0], -c[1]))
    used = [0] * (len(mu) + 1)
    fill: dict[Cell, int] = {}
    out = []

    def rec(k):
        if k == len(order):
            out.append(SkewFilling(shape, tuple(sorted(fill.items()))))
            return
        i, j = order[k]
        hi = fill.get((i, j + 1), len(mu))
        lo = fill[(i - 1, j)] + 1 if (i - 1, j) in fill else 1
        for v in range(lo, hi + 1):
            if used[v] >= mu[v - 1]:
                continue
            if v > 1 and used[v] + 1 > used[v - 1]:
                continue
            used[v] += 1
            fill[(i, j)] = v
            rec(k + 1)
            del fill[(i, j)]
            used[v] -= 1

    rec(0)
    return out


def lr_coefficient_ballot(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    return len(lr_fillings(lam, mu, nu))


def is_horizontal_strip(lam: Sequence[int], nu: Sequence[int]) -> bool:
    """True iff nu/lam has no two cells in the same column."""
    lam, nu = Partition(lam), Partition(nu)
    if not contains(nu, lam):
        return False
    return all(nu.part(i + 1) <= lam.part(i) for i in range(1, len(nu) + 1))
