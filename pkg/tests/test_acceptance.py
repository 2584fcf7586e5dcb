"""Exit criteria. Every check is exact; budgets are fixed here.

Each test records a one-line verdict that is printed in the
"acceptance criteria" section at the end of the pytest run.
"""

import time

from lrpictures.crystal import add_letters, decompose_tensor, lr_crystal, read
from lrpictures.oracle import lr_coefficient_ballot
from lrpictures.orders import enumerate_admissible_orders, order_from_comparator
from lrpictures.pictures import enumerate_pictures, phi, psi
from lrpictures.shapes import Partition, SkewShape, cells, partitions, partitions_up_to, subpartitions
from lrpictures.tableaux import enumerate_ssyt


def all_triples(max_nu, max_rows=None, max_mu=None):
    for n in range(max_nu + 1):
        for nu in partitions(n, max_rows):
            for lam in subpartitions(nu):
                m = n - lam.size
                if max_mu is None or m <= max_mu:
                    for mu in partitions(m):
                        yield lam, mu, nu


def order_pairs(mu, target):
    """All admissible pairs when both sides have at most 4 cells, else (J, J) and (F, F)."""
    if mu.size <= 4 and target.size <= 4:
        return [(A, Ap) for A in enumerate_admissible_orders(cells(target))
                for Ap in enumerate_admissible_orders(cells(mu))]
    return [(order_from_comparator(cells(target), k), order_from_comparator(cells(mu), k)) for k in "JF"]


def test_1_count_identity(record_acceptance):
    start = time.perf_counter()
    failures, n = [], 0
    for lam, mu, nu in all_triples(8, max_rows=4):
        n += 1
        pics = len(enumerate_pictures(mu, SkewShape(nu, lam)))
        cry = len(lr_crystal(lam, mu, nu))
        bal = lr_coefficient_ballot(lam, mu, nu)
        if not pics == cry == bal:
            failures.append((lam, mu, nu, pics, cry, bal))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 300
    record_acceptance(1, ok, f"pictures = crystal = ballot on {n} triples, |nu|<=8, rows<=4 "
                             f"({len(failures)} mismatches, {elapsed:.1f}s)")
    assert not failures, failures[:5]
    assert elapsed < 300


def test_2_phi_psi_inverse(record_acceptance):
    n_triples = n_pairs = 0
    bad = []
    for lam, mu, nu in all_triples(7):
        n_triples += 1
        target = SkewShape(nu, lam)
        for A, Ap in order_pairs(mu, target):
            n_pairs += 1
            for t in lr_crystal(lam, mu, nu, Ap):
                if phi(psi(t, lam, nu), Ap) != t:
                    bad.append(("phi.psi", lam, mu, nu, t))
            for f in enumerate_pictures(mu, target, A, Ap):
                if psi(phi(f, Ap), lam, nu) != f:
                    bad.append(("psi.phi", lam, mu, nu, f))
    record_acceptance(2, not bad, f"phi.psi = id and psi.phi = id on {n_triples} triples, "
                                  f"{n_pairs} order pairs ({len(bad)} failures)")
    assert not bad, bad[:5]


def test_3_crystal_order_independence(record_acceptance):
    n_orders = n_triples = 0
    bad = []
    for lam, mu, nu in all_triples(7, max_mu=5):
        n_triples += 1
        base = set(lr_crystal(lam, mu, nu))
        for Ap in enumerate_admissible_orders(cells(mu)):
            n_orders += 1
            if set(lr_crystal(lam, mu, nu, Ap)) != base:
                bad.append((lam, mu, nu, Ap))
    record_acceptance(3, not bad, f"crystal identical under every admissible order: {n_triples} triples, "
                                  f"{n_orders} orders ({len(bad)} failures)")
    assert not bad, bad[:5]


def test_4_picture_order_independence(record_acceptance):
    n_pairs = n_triples = 0
    bad = []
    for lam, mu, nu in all_triples(7, max_mu=5):
        n_triples += 1
        target = SkewShape(nu, lam)
        base = set(enumerate_pictures(mu, target))
        for A in enumerate_admissible_orders(cells(target)):
            for Ap in enumerate_admissible_orders(cells(mu)):
                n_pairs += 1
                if set(enumerate_pictures(mu, target, A, Ap)) != base:
                    bad.append((lam, mu, nu, A, Ap))
    record_acceptance(4, not bad, f"picture sets identical for every admissible pair: {n_triples} triples, "
                                  f"{n_pairs} pairs ({len(bad)} failures)")
    assert not bad, bad[:5]


def test_5_addition_golden(record_acceptance):
    trace = add_letters(Partition((2, 1)), [3, 1, 2, 1, 2])
    want = [(2, 1, 1), (3, 1, 1), (3, 2, 1), (4, 2, 1), (4, 3, 1)]
    ok = [tuple(s) for s in trace.shapes] == want and trace.all_young
    record_acceptance(5, ok, "adding 3,1,2,1,2 to (2,1) gives (2,1,1),(3,1,1),(3,2,1),(4,2,1),(4,3,1)")
    assert [tuple(s) for s in trace.shapes] == want
    assert trace.all_young is True


def test_6_dimension_identity(record_acceptance):
    bad, n = [], 0
    for m in (1, 2, 3):
        for lam in partitions_up_to(4):
            for mu in partitions_up_to(4):
                n += 1
                dec = decompose_tensor(lam, mu, m)
                lhs = len(enumerate_ssyt(lam, m)) * len(enumerate_ssyt(mu, m))
                rhs = sum(k * len(enumerate_ssyt(nu, m)) for nu, k in dec.items())
                if lhs != rhs:
                    bad.append((lam, mu, m, lhs, rhs))
    record_acceptance(6, not bad, f"|SSYT(lam)|*|SSYT(mu)| = sum over decomposition, {n} cases "
                                  f"({len(bad)} failures)")
    assert not bad, bad[:5]


def test_7_trace_agreement(record_acceptance):
    bad, n = [], 0
    for lam, mu, nu in all_triples(7):
        target = SkewShape(nu, lam)
        primes = {Ap for _, Ap in order_pairs(mu, target)}
        for Ap in sorted(primes, key=lambda o: o.sequence):
            for t in lr_crystal(lam, mu, nu, Ap):
                n += 1
                f = psi(t, lam, nu)
                reading = read(t, Ap)
                trace = add_letters(lam, reading.letters)
                if [s.destination for s in trace.steps] != [f(c) for c in reading.sources]:
                    bad.append((lam, mu, nu, t, Ap))
    record_acceptance(7, not bad, f"j-th addition lands on psi(T) of the j-th read cell, {n} readings "
                                  f"({len(bad)} failures)")
    assert not bad, bad[:5]


def test_8_brute_force_equals_psi_image(record_acceptance):
    bad, n = [], 0
    for lam, mu, nu in all_triples(8, max_mu=6):
        target = SkewShape(nu, lam)
        for kind in "JF":
            n += 1
            A = order_from_comparator(cells(target), kind)
            Ap = order_from_comparator(cells(mu), kind)
            brute = set(enumerate_pictures(mu, target, A, Ap))
            image = {psi(t, lam, nu) for t in lr_crystal(lam, mu, nu, Ap)}
            if brute != image:
                bad.append((lam, mu, nu, kind))
    record_acceptance(8, not bad, f"brute-force pictures = psi(crystal) for |mu|<=6, {n} cases "
                                  f"({len(bad)} failures)")
    assert not bad, bad[:5]
