"""Orders on finite sets of cells.

Three fixed relations are provided as predicates: the product order
``leq_P`` and the two reading orders ``leq_J`` (rows top to bottom, each
row right to left) and ``leq_F`` (columns right to left, each column top
to bottom).

A total order on a finite cell set is *admissible* when every cell
precedes each cell that lies weakly below it and weakly to its left.
Admissible orders are stored extensionally as a :class:`TotalCellOrder`.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import BudgetExceeded, OrderValidationError
from .shapes import Cell

DEFAULT_ORDER_CAP = 10_000


def leq_P(a, b) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def leq_J(a, b) -> bool:
    return a[0] < b[0] or (a[0] == b[0] and a[1] >= b[1])


def leq_F(a, b) -> bool:
    # reflexive closure of "larger column first, then top to bottom"
    return a[1] > b[1] or (a[1] == b[1] and a[0] <= b[0])


def forced_before(a, b) -> bool:
    """True when every admissible order must place a strictly before b."""
    return a != b and a[0] <= b[0] and a[1] >= b[1]


_SORT_KEYS = {
    "J": lambda c: (c[0], -c[1]),
    "F": lambda c: (-c[1], c[0]),
}


class TotalCellOrder:
    """A total order on a finite cell set, listed from least to greatest."""

    __slots__ = ("sequence", "domain", "_pos")

    def __init__(self, sequence: Iterable[Sequence[int]]):
        seq = tuple(Cell(*c) for c in sequence)
        pos = {c: k for k, c in enumerate(seq)}
        if len(pos) != len(seq):
            raise OrderValidationError("order lists a cell more than once")
        self.sequence = seq
        self.domain = frozenset(seq)
        self._pos = pos

    def position(self, cell) -> int:
        """0-based rank of ``cell``."""
        return self._pos[cell]

    def leq(self, a, b) -> bool:
        return self._pos[a] <= self._pos[b]

    def __len__(self):
        return len(self.sequence)

    def __iter__(self):
        return iter(self.sequence)

    def __eq__(self, other):
        if not isinstance(other, TotalCellOrder):
            return NotImplemented
        return self.sequence == other.sequence

    def __hash__(self):
        return hash(self.sequence)

    def __repr__(self):
        return f"TotalCellOrder({[tuple(c) for c in self.sequence]})"


def order_from_comparator(domain: Iterable[Sequence[int]], kind: str) -> TotalCellOrder:
    """Sort ``domain`` by the J or F reading order."""
    try:
        key = _SORT_KEYS[kind.upper()]
    except KeyError:
        raise ValueError(f"unknown order kind {kind!r}; expected 'J' or 'F'") from None
    return TotalCellOrder(sorted((Cell(*c) for c in domain), key=key))


def admissibility_violation(order: TotalCellOrder):
    """First pair (a, b) that must have a before b but does not, else None."""
    seq = order.sequence
    for k, later in enumerate(seq):
        for earlier in seq[:k]:
            if forced_before(later, earlier):
                return later, earlier
    return None


def is_admissible(order: TotalCellOrder) -> bool:
    return admissibility_violation(order) is None


def enumerate_admissible_orders(domain: Iterable[Sequence[int]],
                                cap: int = DEFAULT_ORDER_CAP) -> list[TotalCellOrder]:
    """All admissible total orders on ``domain``.

    These are the linear extensions of the forced precedence relation.
    Output is lexicographic in the row-major indices of the cells.
    Raises :class:`BudgetExceeded` if more than ``cap`` orders exist.
    """
    cells = sorted({Cell(*c) for c in domain})
    n = len(cells)
    preds = [sum(1 for j in range(n) if forced_before(cells[j], cells[i])) for i in range(n)]
    succs = [[j for j in range(n) if forced_before(cells[i], cells[j])] for i in range(n)]
    used = [False] * n
    prefix: list[int] = []
    out: list[TotalCellOrder] = []

    def extend():
        if len(prefix) == n:
            if len(out) >= cap:
                raise BudgetExceeded(f"more than {cap} admissible orders on {n} cells")
            out.append(TotalCellOrder(cells[i] for i in prefix))
            return
        for i in range(n):
            if used[i] or preds[i]:
                continue
            used[i] = True
            prefix.append(i)
            for j in succs[i]:
                preds[j] -= 1
            extend()
            for j in succs[i]:
                preds[j] += 1
            prefix.pop()
            used[i] = False

    extend()
    return out


def render_order(order: TotalCellOrder) -> str:
    return "".join(f"{r},{c}\n" for r, c in order.sequence)


def parse_order(text: str, domain: Iterable[Sequence[int]] | None = None,
                check_admissible: bool = True) -> TotalCellOrder:
    """Read an order file: one ``row,col`` per line, least cell first.

    Blank lines and ``#`` comments are ignored. When ``domain`` is given the
    listed cells must be exactly that set.
    """
    seq = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            r, c = (int(tok) for tok in line.split(","))
            seq.append(Cell(r, c))
        except ValueError:
            raise OrderValidationError(f"line {lineno}: expected 'row,col', got {raw!r}") from None
    order = TotalCellOrder(seq)
    if domain is not None:
        want = frozenset(Cell(*c) for c in domain)
        if order.domain != want:
            missing = sorted(want - order.domain)
            extra = sorted(order.domain - want)
            raise OrderValidationError(
                f"order is not a permutation of the domain (missing {missing}, extra {extra})")
    if check_admissible:
        bad = admissibility_violation(order)
        if bad is not None:
            a, b = bad
            raise OrderValidationError(
                f"order is not admissible: {tuple(a)} must precede {tuple(b)}", pair=bad)
    return order
