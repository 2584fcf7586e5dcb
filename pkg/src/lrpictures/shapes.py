"""Partitions, cells and skew shapes.

Coordinates are 1-based throughout: the box in the i-th row and j-th
column of a diagram is the cell ``(i, j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import itemgetter
from typing import Iterable, Iterator, Sequence, Union


class Cell(tuple):
    """A (row, col) coordinate, both >= 1. Compares and hashes like a plain tuple."""

    __slots__ = ()

    def __new__(cls, row: int, col: int) -> "Cell":
        if row < 1 or col < 1:
            raise ValueError(f"cell coordinates must be >= 1, got ({row}, {col})")
        return tuple.__new__(cls, (row, col))

    row = property(itemgetter(0))
    col = property(itemgetter(1))

    def __repr__(self) -> str:
        return f"Cell({self[0]}, {self[1]})"

    def __getnewargs__(self):
        return (self[0], self[1])


class Composition(tuple):
    """Finite sequence of nonnegative integers, stored verbatim.

    Used for intermediate shapes of an addition, which need not be
    Young diagrams.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Composition":
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"composition parts must be nonnegative: {parts}")
        return tuple.__new__(cls, parts)

    def part(self, k: int) -> int:
        """1-based part access, 0 beyond the stored length."""
        return self[k - 1] if 1 <= k <= len(self) else 0

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Composition({tuple(self)})"


class Partition(tuple):
    """Weakly decreasing sequence of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))`` and also the plain tuple ``(2, 1)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts):
            raise ValueError(f"partition parts must be nonnegative: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must weakly decrease: {parts}")
        return tuple.__new__(cls, parts)

    def part(self, k: int) -> int:
        return self[k - 1] if 1 <= k <= len(self) else 0

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


@dataclass(frozen=True)
class SkewShape:
    """The cells of ``outer`` that are not cells of ``inner``."""

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"{render_partition(self.inner)} is not contained in "
                             f"{render_partition(self.outer)}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> list[Cell]:
        return cells(self)

    def __str__(self) -> str:
        return render_skew(self)


Shape = Union[Partition, SkewShape]


def contains(p: Sequence[int], q: Sequence[int]) -> bool:
    """True iff the diagram of q sits inside the diagram of p."""
    if len(q) > len(p) and any(q[len(p):]):
        return False
    return all(b <= a for a, b in zip(p, q))


def size(p: Sequence[int]) -> int:
    return sum(p)


def cells(shape: Shape | Sequence[int]) -> list[Cell]:
    """Cells in row-major order. A bare partition is a skew shape with empty inner part."""
    if isinstance(shape, SkewShape):
        outer, inner = shape.outer, shape.inner
    else:
        outer, inner = shape, ()
    out = []
    for i, row_len in enumerate(outer, start=1):
        start = inner[i - 1] if i <= len(inner) else 0
        out.extend(Cell(i, j) for j in range(start + 1, row_len + 1))
    return out


def is_young(c: Sequence[int]) -> bool:
    parts = list(c)
    while parts and parts[-1] == 0:
        parts.pop()
    return all(a >= b for a, b in zip(parts, parts[1:])) and all(p >= 0 for p in parts)


def as_skew(shape: Shape | Sequence[int]) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape
    return SkewShape(Partition(shape), Partition())


# Enumeration helpers

def partitions(n: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order, e.g. 3, 2+1, 1+1+1."""
    if n == 0:
        yield Partition()
        return
    if max_parts == 0:
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        rest_parts = None if max_parts is None else max_parts - 1
        for rest in partitions(n - first, rest_parts, first):
            yield Partition((first,) + tuple(rest))


def partitions_up_to(n: int, max_parts: int | None = None) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions(k, max_parts)


def subpartitions(p: Sequence[int]) -> Iterator[Partition]:
    """Every partition contained in p, smallest size first."""
    p = Partition(p)
    found = []

    def rec(prefix, k):
        if k == len(p):
            found.append(Partition(prefix))
            return
        bound = p[k] if not prefix else min(p[k], prefix[-1])
        for v in range(bound + 1):
            rec(prefix + [v], k + 1)

    rec([], 0)
    found = sorted(set(found), key=lambda q: (q.size, tuple(-x for x in q)))
    yield from found


# Text and JSON formats

def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0"):
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"not a partition: {text!r}") from None
    return Partition(parts)


def render_partition(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def parse_composition(text: str) -> Composition:
    text = text.strip()
    if text == "":
        return Composition()
    try:
        return Composition(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"not a composition: {text!r}") from None


render_composition = render_partition


def parse_skew(text: str) -> SkewShape:
    outer, sep, inner = text.partition("/")
    return SkewShape(parse_partition(outer), parse_partition(inner if sep else ""))


def render_skew(s: SkewShape) -> str:
    return f"{render_partition(s.outer)}/{render_partition(s.inner)}"


def cell_to_json(c: Sequence[int]) -> list[int]:
    return [int(c[0]), int(c[1])]


def cell_from_json(obj: Sequence[int]) -> Cell:
    row, col = obj
    return Cell(row, col)
