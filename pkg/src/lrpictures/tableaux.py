"""Semistandard Young tableaux.

A tableau is stored as its tuple of rows. Rows weakly increase left to
right and columns strictly increase top to bottom.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

from .shapes import Cell, Partition, cells


class Tableau:
    """A semistandard tableau, given row by row, top row first."""

    __slots__ = ("rows", "shape")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        if any(not row for row in rows):
            raise ValueError("tableau has an empty row above a nonempty one")
        self.shape = Partition(len(row) for row in rows)
        self.rows = rows
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if x < 1:
                    raise ValueError(f"entry at ({i + 1}, {j + 1}) is not positive: {x}")
                if j and row[j - 1] > x:
                    raise ValueError(f"row {i + 1} is not weakly increasing: {row}")
                if i and rows[i - 1][j] >= x:
                    raise ValueError(f"column {j + 1} is not strictly increasing at row {i + 1}")

    @classmethod
    def from_entries(cls, shape: Sequence[int], entries: Mapping) -> "Tableau":
        shape = Partition(shape)
        if set(entries) != set(cells(shape)):
            raise ValueError("entries must be defined exactly on the cells of the shape")
        return cls([[entries[(i, j)] for j in range(1, length + 1)]
                    for i, length in enumerate(shape, start=1)])

    def __getitem__(self, cell) -> int:
        i, j = cell
        if not (1 <= i <= len(self.rows) and 1 <= j <= len(self.rows[i - 1])):
            raise KeyError(f"cell {tuple(cell)} is outside shape {tuple(self.shape)}")
        return self.rows[i - 1][j - 1]

    def entries(self) -> dict[Cell, int]:
        return {Cell(i, j): x for i, row in enumerate(self.rows, start=1)
                for j, x in enumerate(row, start=1)}

    def word(self) -> tuple[int, ...]:
        """Row-major entry word."""
        return tuple(x for row in self.rows for x in row)

    def __eq__(self, other):
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __lt__(self, other):
        return (self.shape, self.word()) < (other.shape, other.word())

    def __repr__(self):
        return f"Tableau({[list(r) for r in self.rows]})"

    def __str__(self):
        return render_tableau(self)


def level_set(t: Tableau, k: int) -> list[Cell]:
    """Cells holding entry k, rightmost first."""
    found = [Cell(i, j) for i, row in enumerate(t.rows, start=1)
             for j, x in enumerate(row, start=1) if x == k]
    return sorted(found, key=lambda c: -c[1])


def p_index(t: Tableau, c) -> int:
    """Rank of cell c among the cells sharing its entry, counted from the right (1 = rightmost)."""
    try:
        k = t[c]
    except KeyError as exc:
        raise ValueError(str(exc.args[0])) from None
    return level_set(t, k).index(c) + 1


def p_indices(t: Tableau) -> dict[Cell, int]:
    """``p_index`` for every cell at once."""
    out = {}
    for k in set(t.word()):
        for rank, c in enumerate(level_set(t, k), start=1):
            out[c] = rank
    return out


def iter_ssyt(shape: Sequence[int], max_entry: int) -> Iterator[Tableau]:
    """Semistandard tableaux of ``shape`` with entries in 1..max_entry.

    Yields in lexicographic order of the row-major entry word.
    """
    shape = Partition(shape)
    rows = [[0] * length for length in shape]
    order = cells(shape)
    n = len(order)

    def fill(k):
        if k == n:
            yield Tableau(rows)
            return
        i, j = order[k]
        lo = 1
        if j > 1:
            lo = rows[i - 1][j - 2]
        if i > 1:
            lo = max(lo, rows[i - 2][j - 1] + 1)
        # leave room for the strictly increasing column below
        below = sum(1 for r in range(i, len(shape)) if shape[r] >= j)
        for v in range(lo, max_entry - below + 1):
            rows[i - 1][j - 1] = v
            yield from fill(k + 1)
        rows[i - 1][j - 1] = 0

    yield from fill(0)


def enumerate_ssyt(shape: Sequence[int], max_entry: int) -> list[Tableau]:
    return list(iter_ssyt(shape, max_entry))


# Text and JSON formats

def render_tableau(t: Tableau) -> str:
    return " / ".join(" ".join(str(x) for x in row) for row in t.rows)


def parse_tableau(text: str) -> Tableau:
    text = text.strip()
    if not text:
        return Tableau([])
    try:
        return Tableau([int(tok) for tok in chunk.split()] for chunk in text.split("/"))
    except ValueError as exc:
        raise ValueError(f"bad tableau {text!r}: {exc}") from None


def tableau_to_json(t: Tableau) -> list[list[int]]:
    return [list(row) for row in t.rows]


def tableau_from_json(obj) -> Tableau:
    return Tableau(obj)
