import itertools

import pytest
from hypothesis import strategies as st

from lrpictures.orders import forced_before, leq_P
from lrpictures.shapes import Partition, SkewShape, cells

# Filled in by test_acceptance.py; printed once at the end of the run.
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        passed, line = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {key}: {line}")


@st.composite
def partitions_st(draw, max_size=6, max_parts=None):
    n = draw(st.integers(0, max_size))
    parts = []
    remaining = n
    while remaining:
        if max_parts is not None and len(parts) == max_parts:
            break
        top = remaining if not parts else min(remaining, parts[-1])
        p = draw(st.integers(1, top))
        parts.append(p)
        remaining -= p
    return Partition(parts)


@st.composite
def skew_shapes_st(draw, max_size=6):
    outer = draw(partitions_st(max_size=max_size))
    inner = []
    for k, row in enumerate(outer):
        bound = row if not inner else min(row, inner[-1])
        inner.append(draw(st.integers(0, bound)))
    return SkewShape(outer, Partition(inner))


# brute-force references, deliberately naive

def brute_ssyt_count(shape, max_entry):
    cs = cells(shape)
    count = 0
    for values in itertools.product(range(1, max_entry + 1), repeat=len(cs)):
        e = dict(zip(cs, values))
        ok = all(e[(i, j)] <= e[(i, j + 1)] for (i, j) in cs if (i, j + 1) in e) and \
            all(e[(i, j)] < e[(i + 1, j)] for (i, j) in cs if (i + 1, j) in e)
        count += ok
    return count


def brute_admissible_orders(domain):
    domain = list(domain)
    out = []
    for perm in itertools.permutations(domain):
        if all(not forced_before(perm[k], perm[m])
               for m in range(len(perm)) for k in range(m + 1, len(perm))):
            out.append(tuple(perm))
    return out


def brute_pictures(mu, skew, A, A_prime):
    """Every bijection, filtered by the two standardness conditions checked pair by pair."""
    dom, tgt = cells(mu), cells(skew)
    out = []
    for perm in itertools.permutations(tgt):
        f = dict(zip(dom, perm))
        finv = {v: k for k, v in f.items()}
        ok = all(A.position(f[u]) <= A.position(f[v]) for u in dom for v in dom if leq_P(u, v)) and \
            all(A_prime.position(finv[x]) <= A_prime.position(finv[y])
                for x in tgt for y in tgt if leq_P(x, y))
        if ok:
            out.append(tuple(perm))
    return out


@pytest.fixture
def record_acceptance():
    def record(key, passed, line):
        ACCEPTANCE_RESULTS[key] = (passed, line)
    return record
