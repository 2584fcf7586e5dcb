"""Readings, additions and Littlewood-Richardson crystals.

A reading lists the entries of a tableau along an admissible order. Adding
the letters of a word one at a time to a Young diagram (letter ``k`` puts a
box at the end of row ``k``) produces a sequence of compositions; the
tableaux whose reading keeps every intermediate shape a Young diagram and
ends at ``nu`` form the Littlewood-Richardson crystal for ``(lam, mu, nu)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import OrderValidationError
from .orders import TotalCellOrder, admissibility_violation, order_from_comparator
from .shapes import Cell, Composition, Partition, cells, contains, is_young
from .tableaux import Tableau, iter_ssyt


@dataclass(frozen=True)
class Reading:
    letters: tuple[int, ...]
    sources: tuple[Cell, ...]


class AdditionStep(NamedTuple):
    letter: int
    destination: Cell
    shape: Composition


@dataclass(frozen=True)
class AdditionTrace:
    start: Partition
    steps: tuple[AdditionStep, ...]
    all_young: bool

    @property
    def final(self) -> Composition:
        return self.steps[-1].shape if self.steps else Composition(self.start)

    @property
    def shapes(self) -> list[Composition]:
        return [s.shape for s in self.steps]

    def to_json(self) -> dict:
        return {
            "start": list(self.start),
            "steps": [{"letter": s.letter,
                       "destination": [s.destination.row, s.destination.col],
                       "shape": list(s.shape)} for s in self.steps],
            "all_young": self.all_young,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "AdditionTrace":
        steps = tuple(AdditionStep(int(s["letter"]), Cell(*s["destination"]), Composition(s["shape"]))
                      for s in obj["steps"])
        return cls(Partition(obj["start"]), steps, bool(obj["all_young"]))


def check_order(order: TotalCellOrder, domain) -> None:
    """Raise unless ``order`` is an admissible order on exactly ``domain``."""
    if order.domain != frozenset(domain):
        raise OrderValidationError("order domain does not match the cells of the shape")
    bad = admissibility_violation(order)
    if bad is not None:
        raise OrderValidationError(
            f"order is not admissible: {tuple(bad[0])} must precede {tuple(bad[1])}", pair=bad)


def read(t: Tableau, order: TotalCellOrder) -> Reading:
    check_order(order, cells(t.shape))
    return Reading(tuple(t[c] for c in order.sequence), order.sequence)


def add_letters(start: Sequence[int], letters: Sequence[int]) -> AdditionTrace:
    """Add boxes to ``start`` row by row following ``letters``; never fails."""
    start = Partition(start)
    parts = list(start)
    young = True
    steps = []
    for k in letters:
        if k < 1:
            raise ValueError(f"letters must be positive, got {k}")
        if k > len(parts):
            parts.extend([0] * (k - len(parts)))
        parts[k - 1] += 1
        shape = Composition(parts)
        young = young and is_young(shape)
        steps.append(AdditionStep(k, Cell(k, parts[k - 1]), shape))
    return AdditionTrace(start, tuple(steps), young)


def _admits(lam: Partition, letters: Sequence[int], nu: Partition) -> bool:
    # fast form of: trace all_young and final shape == nu
    parts = list(nu)
    cur = list(lam) + [0] * (len(parts) - len(lam))
    for k in letters:
        if k > len(parts):
            return False
        cur[k - 1] += 1
        if cur[k - 1] > parts[k - 1] or (k > 1 and cur[k - 2] < cur[k - 1]):
            return False
    return cur == parts


def _check_triple(lam, mu, nu):
    if lam.size + mu.size != nu.size:
        raise ValueError(f"|lambda| + |mu| = {lam.size + mu.size} differs from |nu| = {nu.size}")
    if not contains(nu, lam):
        raise ValueError(f"lambda {tuple(lam)} is not contained in nu {tuple(nu)}")


def lr_crystal(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int],
               order: TotalCellOrder | None = None) -> list[Tableau]:
    """Tableaux of shape mu whose ``order``-reading adds to lam through Young diagrams and ends at nu.

    ``order`` defaults to the J order on mu. Entries range over 1..len(nu).
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    _check_triple(lam, mu, nu)
    if order is None:
        order = order_from_comparator(cells(mu), "J")
    else:
        check_order(order, cells(mu))
    seq = order.sequence
    return [t for t in iter_ssyt(mu, max(len(nu), 1))
            if _admits(lam, [t[c] for c in seq], nu)]


def lr_coefficient_crystal(lam, mu, nu) -> int:
    return len(lr_crystal(lam, mu, nu))


def decompose_tensor(lam: Sequence[int], mu: Sequence[int], max_entry: int,
                     order: TotalCellOrder | None = None) -> Counter:
    """Highest weights, with multiplicity, of the tensor product of the crystals of lam and mu.

    Each tableau of shape mu is read (F order by default) and its letters
    added to lam; surviving final shapes with at most ``max_entry`` rows
    are collected.
    """
    lam, mu = Partition(lam), Partition(mu)
    if order is None:
        order = order_from_comparator(cells(mu), "F")
    else:
        check_order(order, cells(mu))
    out = Counter()
    for t in iter_ssyt(mu, max_entry):
        trace = add_letters(lam, [t[c] for c in order.sequence])
        if trace.all_young and len(Partition(trace.final)) <= max_entry:
            out[Partition(trace.final)] += 1
    return out
