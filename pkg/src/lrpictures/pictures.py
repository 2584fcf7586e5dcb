"""Pictures between a Young diagram and a skew diagram, and the maps phi and psi.

A picture ``f`` from the cells of ``mu`` onto the cells of ``nu/lam`` is a
bijection that sends product-order comparable pairs to pairs ordered by an
admissible order ``A`` on the target, and whose inverse does the same with
an admissible order ``A'`` on ``mu``. Classical pictures use the J order on
both sides.

``phi`` turns a picture into the tableau of its image rows; ``psi`` sends a
Littlewood-Richardson tableau ``T`` to the map
``(i, j) -> (T[i,j], lam[T[i,j]] + p_index(T, (i, j)))``.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .crystal import add_letters, check_order, lr_crystal
from .errors import BudgetExceeded, ContractViolation
from .orders import TotalCellOrder, leq_P, order_from_comparator
from .shapes import Cell, Partition, SkewShape, cells, cell_from_json, cell_to_json
from .tableaux import Tableau, p_indices

DEFAULT_PICTURE_CAP = 8


class PictureMap:
    """A bijection from the cells of ``domain_shape`` onto the cells of ``codomain``.

    Images are stored in the row-major order of the domain cells, so
    equality is extensional.
    """

    __slots__ = ("domain_shape", "codomain", "images", "_map")

    def __init__(self, domain_shape: Sequence[int], codomain: SkewShape,
                 mapping: Mapping | Iterable):
        self.domain_shape = Partition(domain_shape)
        self.codomain = codomain
        dom = cells(self.domain_shape)
        if isinstance(mapping, Mapping):
            if set(mapping) != set(dom):
                raise ValueError("picture map must be defined exactly on the cells of mu")
            images = tuple(Cell(*mapping[c]) for c in dom)
        else:
            images = tuple(Cell(*c) for c in mapping)
            if len(images) != len(dom):
                raise ValueError("picture map needs one image per cell of mu")
        if sorted(images) != cells(codomain):
            raise ValueError("picture map is not a bijection onto the cells of the skew shape")
        self.images = images
        self._map = dict(zip(dom, images))

    def __call__(self, cell) -> Cell:
        return self._map[cell]

    def items(self):
        return self._map.items()

    def as_dict(self) -> dict[Cell, Cell]:
        return dict(self._map)

    def inverse(self) -> dict[Cell, Cell]:
        return {v: k for k, v in self._map.items()}

    def __eq__(self, other):
        if not isinstance(other, PictureMap):
            return NotImplemented
        return (self.domain_shape, self.codomain, self.images) == \
            (other.domain_shape, other.codomain, other.images)

    def __hash__(self):
        return hash((self.domain_shape, self.codomain, self.images))

    def __repr__(self):
        body = ", ".join(f"{tuple(k)}->{tuple(v)}" for k, v in self._map.items())
        return f"PictureMap({body})"

    def to_json(self) -> dict:
        return {
            "mu": list(self.domain_shape),
            "nu": list(self.codomain.outer),
            "lambda": list(self.codomain.inner),
            "map": [[cell_to_json(k), cell_to_json(v)] for k, v in self._map.items()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PictureMap":
        mapping = {cell_from_json(k): cell_from_json(v) for k, v in obj["map"]}
        return cls(obj["mu"], SkewShape(Partition(obj["nu"]), Partition(obj["lambda"])), mapping)


def _standard(mapping: Mapping, order: TotalCellOrder) -> bool:
    # u <=_P v  implies  mapping[u] <=_order mapping[v]
    pos = order.position
    items = list(mapping.items())
    for u, fu in items:
        pu = pos(fu)
        for v, fv in items:
            if leq_P(u, v) and pu > pos(fv):
                return False
    return True


def is_pa_standard(f: PictureMap | Mapping, target_order: TotalCellOrder) -> bool:
    """True iff product-comparable cells keep their order under ``target_order`` after mapping."""
    mapping = f.as_dict() if isinstance(f, PictureMap) else dict(f)
    if not set(mapping.values()) <= target_order.domain:
        raise ValueError("target order does not cover the image of the map")
    return _standard(mapping, target_order)


def _default_orders(f_codomain: SkewShape, mu: Partition, A, A_prime):
    if A is None:
        A = order_from_comparator(cells(f_codomain), "J")
    if A_prime is None:
        A_prime = order_from_comparator(cells(mu), "J")
    return A, A_prime


def is_admissible_picture(f: PictureMap, A: TotalCellOrder | None = None,
                          A_prime: TotalCellOrder | None = None) -> bool:
    """``A`` orders the skew target, ``A_prime`` orders mu; both default to J."""
    A, A_prime = _default_orders(f.codomain, f.domain_shape, A, A_prime)
    check_order(A, cells(f.codomain))
    check_order(A_prime, cells(f.domain_shape))
    return _standard(f.as_dict(), A) and _standard(f.inverse(), A_prime)


def enumerate_pictures(mu: Sequence[int], skew: SkewShape, A: TotalCellOrder | None = None,
                       A_prime: TotalCellOrder | None = None, cap: int = DEFAULT_PICTURE_CAP,
                       method: str = "brute") -> list[PictureMap]:
    """All (A, A')-admissible pictures from mu onto ``skew``.

    The default method searches every bijection, assigning the cells of mu
    in row-major order and discarding a partial assignment as soon as some
    pair of assigned cells breaks either standardness condition. It never
    consults tableaux, so it can be checked against ``method="psi"``, which
    maps the Littlewood-Richardson crystal through ``psi``.

    Output is sorted by the image tuple.
    """
    mu = Partition(mu)
    if mu.size != skew.size:
        raise ValueError(f"|mu| = {mu.size} but the skew shape has {skew.size} cells")
    A, A_prime = _default_orders(skew, mu, A, A_prime)
    check_order(A, cells(skew))
    check_order(A_prime, cells(mu))
    if method == "psi":
        found = [psi(t, skew.inner, skew.outer)
                 for t in lr_crystal(skew.inner, mu, skew.outer, A_prime)]
        return sorted(found, key=lambda f: f.images)
    if method != "brute":
        raise ValueError(f"unknown method {method!r}")
    if mu.size > cap:
        raise BudgetExceeded(f"|mu| = {mu.size} exceeds the brute-force picture cap {cap}")

    dom = cells(mu)
    tgt = cells(skew)
    n = len(dom)
    pos_a = [A.position(c) for c in tgt]
    pos_ap = [A_prime.position(c) for c in dom]
    # pairwise product-order relations, by index
    dom_le = [[leq_P(dom[i], dom[j]) for j in range(n)] for i in range(n)]
    tgt_le = [[leq_P(tgt[x], tgt[y]) for y in range(n)] for x in range(n)]
    image = [-1] * n
    taken = [False] * n
    out = []

    def compatible(i, x):
        for k in range(i):
            y = image[k]
            # f is PA-standard on the pair (k, i)
            if dom_le[k][i] and pos_a[y] > pos_a[x]:
                return False
            if dom_le[i][k] and pos_a[x] > pos_a[y]:
                return False
            # f^{-1} is PA'-standard on the pair (y, x)
            if tgt_le[y][x] and pos_ap[k] > pos_ap[i]:
                return False
            if tgt_le[x][y] and pos_ap[i] > pos_ap[k]:
                return False
        return True

    def assign(i):
        if i == n:
            out.append(PictureMap(mu, skew, [tgt[x] for x in image]))
            return
        for x in range(n):
            if not taken[x] and compatible(i, x):
                taken[x] = True
                image[i] = x
                assign(i + 1)
                taken[x] = False
        image[i] = -1

    assign(0)
    return sorted(out, key=lambda f: f.images)


def phi(f: PictureMap, A_prime: TotalCellOrder | None = None) -> Tableau:
    """The tableau of shape mu whose (i, j) entry is the row of f(i, j).

    Raises :class:`ContractViolation` if the filling is not semistandard or
    its ``A_prime``-reading does not lie in the Littlewood-Richardson crystal.
    """
    mu = f.domain_shape
    if A_prime is None:
        A_prime = order_from_comparator(cells(mu), "J")
    check_order(A_prime, cells(mu))
    rows = [[f((i, j))[0] for j in range(1, length + 1)] for i, length in enumerate(mu, start=1)]
    try:
        t = Tableau(rows)
    except ValueError as exc:
        raise ContractViolation(f"image rows do not form a semistandard tableau: {exc}") from None
    trace = add_letters(f.codomain.inner, [t[c] for c in A_prime.sequence])
    if not trace.all_young or Partition(trace.final) != f.codomain.outer:
        raise ContractViolation(f"{t!r} is not in the Littlewood-Richardson crystal "
                                f"for {f.codomain}")
    return t


def psi(t: Tableau, lam: Sequence[int], nu: Sequence[int]) -> PictureMap:
    """Send cell (i, j) of t to (T[i,j], lam[T[i,j]] + p_index(t, (i, j)))."""
    lam, nu = Partition(lam), Partition(nu)
    try:
        skew = SkewShape(nu, lam)
    except ValueError as exc:
        raise ContractViolation(str(exc)) from None
    ranks = p_indices(t)
    mapping = {}
    for c, k in t.entries().items():
        mapping[c] = Cell(k, lam.part(k) + ranks[c])
    try:
        return PictureMap(t.shape, skew, mapping)
    except ValueError:
        raise ContractViolation(f"psi({t!r}) is not a bijection onto {skew}") from None
