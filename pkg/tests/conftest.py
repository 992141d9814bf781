import itertools

import pytest

from bruhat_chains.permcore import Permutation, all_permutations


def P(text):
    return Permutation.parse(text)


@pytest.fixture
def perm():
    return P


def brute_length(window):
    return sum(1 for i, j in itertools.combinations(range(len(window)), 2) if window[i] > window[j])


def perms_up_to(n):
    for k in range(1, n + 1):
        yield from all_permutations(k)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        ok, detail = RESULTS[k]
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
