"""Exhaustive verification sweeps over small triples (lam, mu, nu).

Each suite returns a :class:`VerificationReport`. Per-triple work is done by
module-level functions so that sweeps can fan out over a process pool;
the report is always assembled in triple order.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .crystal import add_letters, decompose_tensor, lr_crystal, read
from .errors import BudgetExceeded
from .oracle import lr_coefficient_ballot
from .orders import enumerate_admissible_orders, order_from_comparator
from .pictures import enumerate_pictures, phi, psi
from .shapes import Partition, SkewShape, cells, partitions, partitions_up_to, render_partition, subpartitions
from .tableaux import enumerate_ssyt

SUITES = ("counts", "bijection", "order-independence", "theorem36")


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


def default_caps() -> dict[str, int]:
    """Budget caps; override with LRPIC_CAP_NU / LRPIC_CAP_MU."""
    return {"nu": _env_int("LRPIC_CAP_NU", 8), "mu": _env_int("LRPIC_CAP_MU", 5)}


@dataclass(frozen=True)
class Check:
    name: str
    context: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "context": self.context,
                "result": "pass" if self.passed else "fail", "detail": self.detail}


@dataclass
class VerificationReport:
    scope: dict
    checks: list[Check] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        passed = sum(1 for c in self.checks if c.passed)
        return {"pass": passed, "fail": len(self.checks) - passed, "total": len(self.checks)}

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def to_json(self) -> dict:
        return {"scope": self.scope, "checks": [c.to_json() for c in self.checks],
                "summary": self.summary}

    def render_table(self, verbose: bool = False) -> str:
        lines = ["scope: " + ", ".join(f"{k}={v}" for k, v in self.scope.items())]
        tally: dict[str, list[int]] = {}
        for c in self.checks:
            t = tally.setdefault(c.name, [0, 0])
            t[0 if c.passed else 1] += 1
        width = max([len(n) for n in tally] + [5])
        lines.append(f"{'check':<{width}}  {'pass':>7}  {'fail':>7}")
        for name, (p, f) in tally.items():
            lines.append(f"{name:<{width}}  {p:>7}  {f:>7}")
        shown = self.checks if verbose else [c for c in self.checks if not c.passed]
        for c in shown:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"{mark} {c.name} [{c.context}] {c.detail}".rstrip())
        s = self.summary
        lines.append(f"summary: {s['pass']} passed, {s['fail']} failed")
        return "\n".join(lines)


def triple_label(lam, mu, nu) -> str:
    return f"lambda={render_partition(lam)} mu={render_partition(mu)} nu={render_partition(nu)}"


def triples(max_nu: int, max_rows: int | None = None,
            max_mu: int | None = None) -> Iterator[tuple[Partition, Partition, Partition]]:
    """Every (lam, mu, nu) with lam inside nu, |lam| + |mu| = |nu| <= max_nu."""
    for n in range(max_nu + 1):
        for nu in partitions(n, max_rows):
            for lam in subpartitions(nu):
                m = n - lam.size
                if max_mu is not None and m > max_mu:
                    continue
                for mu in partitions(m):
                    yield lam, mu, nu


def _fan_out(fn: Callable, jobs: Iterable, workers: int) -> list:
    jobs = list(jobs)
    if workers <= 1 or len(jobs) < 2:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (8 * workers))))


def _check_budget(what: str, value: int, cap: int) -> None:
    if value > cap:
        raise BudgetExceeded(f"{what} = {value} exceeds cap {cap}; raise the cap to run this sweep")


def check_budgets(max_nu=None, max_mu=None, max_size=None, cap_nu=None, cap_mu=None, **_) -> None:
    """Raise :class:`BudgetExceeded` if any requested bound is over its cap."""
    caps = default_caps()
    cap_nu = cap_nu if cap_nu is not None else caps["nu"]
    cap_mu = cap_mu if cap_mu is not None else caps["mu"]
    if max_nu is not None:
        _check_budget("max_nu", max_nu, cap_nu)
    if max_mu is not None:
        _check_budget("max_mu", max_mu, cap_mu)
    if max_size is not None:
        _check_budget("2 * max_size", 2 * max_size, cap_nu)


# per-triple workers

def _counts_job(job) -> list[Check]:
    lam, mu, nu = job
    skew = SkewShape(nu, lam)
    c_pic = len(enumerate_pictures(mu, skew))
    c_cry = len(lr_crystal(lam, mu, nu))
    c_bal = lr_coefficient_ballot(lam, mu, nu)
    ok = c_pic == c_cry == c_bal
    return [Check("count-identity", triple_label(lam, mu, nu), ok,
                  f"pictures={c_pic} crystal={c_cry} ballot={c_bal}")]


def order_pairs(mu, skew, pair_limit: int):
    """All admissible (A, A') when both sides are small enough, else (J, J) and (F, F)."""
    mu_cells, sk_cells = cells(mu), cells(skew)
    if len(mu_cells) <= pair_limit and len(sk_cells) <= pair_limit:
        As = enumerate_admissible_orders(sk_cells)
        Aps = enumerate_admissible_orders(mu_cells)
        return [(A, Ap) for A in As for Ap in Aps]
    return [(order_from_comparator(sk_cells, k), order_from_comparator(mu_cells, k)) for k in "JF"]


def _bijection_job(job) -> list[Check]:
    lam, mu, nu, pair_limit = job
    skew = SkewShape(nu, lam)
    label = triple_label(lam, mu, nu)
    pairs = order_pairs(mu, skew, pair_limit)
    phi_psi = psi_phi = trace_ok = image_ok = True
    n_cry = n_pic = 0
    for A, Ap in pairs:
        crystal = lr_crystal(lam, mu, nu, Ap)
        pics = enumerate_pictures(mu, skew, A, Ap)
        n_cry, n_pic = len(crystal), len(pics)
        images = set()
        for t in crystal:
            f = psi(t, lam, nu)
            images.add(f)
            phi_psi &= phi(f, Ap) == t
            reading = read(t, Ap)
            trace = add_letters(lam, reading.letters)
            trace_ok &= all(step.destination == f(src)
                            for step, src in zip(trace.steps, reading.sources))
        for f in pics:
            psi_phi &= psi(phi(f, Ap), lam, nu) == f
        image_ok &= images == set(pics)
    detail = f"pairs={len(pairs)} crystal={n_cry} pictures={n_pic}"
    return [
        Check("phi-after-psi", label, phi_psi, detail),
        Check("psi-after-phi", label, psi_phi, detail),
        Check("trace-agreement", label, trace_ok, detail),
        Check("psi-image-equals-pictures", label, image_ok, detail),
    ]


def _order_independence_job(job) -> list[Check]:
    lam, mu, nu = job
    skew = SkewShape(nu, lam)
    label = triple_label(lam, mu, nu)
    base_crystal = set(lr_crystal(lam, mu, nu))
    base_pics = set(enumerate_pictures(mu, skew))
    Aps = enumerate_admissible_orders(cells(mu))
    As = enumerate_admissible_orders(cells(skew))
    crystal_ok = all(set(lr_crystal(lam, mu, nu, Ap)) == base_crystal for Ap in Aps)
    pics_ok = all(set(enumerate_pictures(mu, skew, A, Ap)) == base_pics for A in As for Ap in Aps)
    return [
        Check("crystal-order-independence", label, crystal_ok,
              f"orders={len(Aps)} size={len(base_crystal)}"),
        Check("picture-order-independence", label, pics_ok,
              f"pairs={len(As) * len(Aps)} size={len(base_pics)}"),
    ]


def _theorem36_job(job) -> list[Check]:
    lam, mu, m = job
    label = f"lambda={render_partition(lam)} mu={render_partition(mu)} max_entry={m}"
    dec = decompose_tensor(lam, mu, m)
    lhs = len(enumerate_ssyt(lam, m)) * len(enumerate_ssyt(mu, m))
    rhs = sum(k * len(enumerate_ssyt(nu, m)) for nu, k in sorted(dec.items()))
    checks = [Check("dimension-identity", label, lhs == rhs, f"lhs={lhs} rhs={rhs}")]
    # any admissible reading of mu gives the same decomposition
    same = all(decompose_tensor(lam, mu, m, A) == dec
               for A in enumerate_admissible_orders(cells(mu)))
    checks.append(Check("reading-independence", label, same, f"components={sum(dec.values())}"))
    return checks


# suites

def run_counts(max_nu: int = 8, max_rows: int = 4, workers: int = 1,
               cap_nu: int | None = None) -> VerificationReport:
    _check_budget("max_nu", max_nu, cap_nu if cap_nu is not None else default_caps()["nu"])
    report = VerificationReport({"suite": "counts", "max_nu": max_nu, "max_rows": max_rows})
    for checks in _fan_out(_counts_job, triples(max_nu, max_rows), workers):
        report.checks.extend(checks)
    return report


def run_bijection(max_nu: int = 7, max_rows: int = 4, pair_limit: int = 4, workers: int = 1,
                  cap_nu: int | None = None) -> VerificationReport:
    _check_budget("max_nu", max_nu, cap_nu if cap_nu is not None else default_caps()["nu"])
    report = VerificationReport({"suite": "bijection", "max_nu": max_nu, "max_rows": max_rows,
                                 "all_pairs_up_to": pair_limit})
    jobs = [(lam, mu, nu, pair_limit) for lam, mu, nu in triples(max_nu, max_rows)]
    for checks in _fan_out(_bijection_job, jobs, workers):
        report.checks.extend(checks)
    return report


def run_order_independence(max_mu: int = 5, max_nu: int = 7, workers: int = 1,
                           cap_mu: int | None = None,
                           cap_nu: int | None = None) -> VerificationReport:
    caps = default_caps()
    _check_budget("max_mu", max_mu, cap_mu if cap_mu is not None else caps["mu"])
    _check_budget("max_nu", max_nu, cap_nu if cap_nu is not None else caps["nu"])
    report = VerificationReport({"suite": "order-independence", "max_mu": max_mu, "max_nu": max_nu})
    jobs = list(triples(max_nu, max_mu=max_mu))
    for checks in _fan_out(_order_independence_job, jobs, workers):
        report.checks.extend(checks)
    return report


def run_theorem36(max_entry: int = 3, max_size: int = 4, workers: int = 1,
                  cap_nu: int | None = None) -> VerificationReport:
    _check_budget("2 * max_size", 2 * max_size, cap_nu if cap_nu is not None else default_caps()["nu"])
    report = VerificationReport({"suite": "theorem36", "max_entry": max_entry, "max_size": max_size})
    jobs = [(lam, mu, m) for m in range(1, max_entry + 1)
            for lam in partitions_up_to(max_size) for mu in partitions_up_to(max_size)]
    for checks in _fan_out(_theorem36_job, jobs, workers):
        report.checks.extend(checks)
    return report
