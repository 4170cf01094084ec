"""One test per acceptance criterion; a pass/fail line per criterion is printed at the end of the run."""

import time
from fractions import Fraction

import pytest

from fishburn_lab import suite
from fishburn_lab.ascent import count_ascent_sequences
from fishburn_lab.congruences import (A_PRINTED, KNOWN_CONGRUENCES, scan_prime_power,
                                      verify_a_conjecture, verify_a_printed, verify_classification,
                                      verify_known_congruences, verify_lemma5, verify_printed_sets,
                                      verify_strengthened_lemma5, verify_theorem1)
from fishburn_lab.cyclotomic import (CyclotomicRational, b_zeta_bernoulli, b_zeta_theta,
                                     verify_bernoulli_crosscheck, verify_component_vanishing,
                                     verify_lemma2, verify_lemma4)
from fishburn_lab.fishburn import a_coefficients, xi_coefficients
from fishburn_lab.residues import member_of_R, primes_between, residue_sets

XI_0_9 = [1, 1, 2, 5, 15, 53, 217, 1014, 5335, 31240]
XI_0_9_AS_PRINTED = [1, 1, 2, 5, 15, 53, 217, 1014, 5335, 32240]


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()

    def __exit__(self, *exc):
        elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert elapsed < self.seconds, f"took {elapsed:.1f}s, budget {self.seconds}s"


def verified(reports):
    bad = [r.to_text() for r in reports if r.status != "verified"]
    assert not bad, "\n".join(bad)


def test_criterion_01_congruence_table():
    with Budget(30):
        r = verify_known_congruences(200)
    assert len(KNOWN_CONGRUENCES) >= 5
    assert sum(len(v) for v in KNOWN_CONGRUENCES.values()) == 9
    assert r.checked_count == 9 * 201
    verified([r])


def test_criterion_02_xi_regression():
    with Budget(10):
        series = xi_coefficients(9).values
        oracle = [count_ascent_sequences(n) for n in range(10)]
    assert list(series) == oracle == XI_0_9


@pytest.mark.xfail(strict=True, reason="printed xi(9)=32240 disagrees with both independent computations (31240)")
def test_criterion_02_printed_list_literal():
    assert [count_ascent_sequences(n) for n in range(10)] == XI_0_9_AS_PRINTED


def test_criterion_03_theorem1_sweep():
    with Budget(120):
        reports = [verify_theorem1(p, 100) for p in primes_between(2, 50)]
    assert sum(r.checked_count for r in reports) > 0
    verified(reports)


def test_criterion_04_lemma5():
    with Budget(60):
        reports = [verify_lemma5(p, n) for p in (5, 7, 11) for n in range(1, 6)]
    verified(reports)


def test_criterion_05_component_vanishing():
    with Budget(60):
        reports = [verify_component_vanishing(p, 3) for p in (5, 7, 11)]
    verified(reports)


def test_criterion_06_lemma4_and_lemma2():
    with Budget(30):
        r4 = [verify_lemma4(3, 4, 3), verify_lemma4(5, 9, 3)]
    with Budget(30):
        r2 = verify_lemma2(trials=50, max_n=5, seed=0)
    assert r2.checked_count == 50
    verified(r4 + [r2])


def test_criterion_07_bernoulli_crosscheck():
    with Budget(60):
        reports = [verify_bernoulli_crosscheck(p, 2) for p in (5, 7)]
    anchor = CyclotomicRational(5, [9, -5, -3, 0])
    assert b_zeta_theta(0, 5) == anchor == b_zeta_bernoulli(0, 5)
    verified(reports)


def test_criterion_08_classification():
    with Budget(10):
        r = verify_classification(1000, 10000)
    for p in primes_between(5, 1000):
        if p != 23 and member_of_R(p):
            assert residue_sets(p).T
    assert Fraction(9, 20) <= Fraction(r.details["density"]) <= Fraction(11, 20)
    verified([r])


def test_criterion_09_printed_sets():
    with Budget(1):
        r = verify_printed_sets()
    assert residue_sets(11).describe() == "S(11) = {0,1,2,4,5,7}, T(11) = {8,9,10}"
    assert (residue_sets(5).S, residue_sets(5).T) == ((0, 1, 2), (3, 4))
    assert (residue_sets(7).S, residue_sets(7).T) == ((0, 1, 2, 5), (6,))
    verified([r])


def test_criterion_10_a_series():
    with Budget(30):
        printed = verify_a_printed()
        scan = verify_a_conjecture(40)
    assert tuple(a_coefficients(9).values) == A_PRINTED
    verified([printed])
    # a refutation would be a finding, not a failure
    assert scan.status in ("verified", "refuted")
    assert scan.status == "verified", scan.to_text()


def test_criterion_11_strengthened_lemma5():
    with Budget(60):
        reports = [verify_strengthened_lemma5(p, n) for p in (5, 7, 11) for n in range(1, 5)]
    assert all(r.status in ("verified", "refuted") for r in reports)
    verified(reports)


def test_criterion_12_prime_power_scan():
    with Budget(120):
        first = scan_prime_power(5, 2, 20)
        second = scan_prime_power(5, 2, 20)
    assert first.checked_count == 25 * 21
    assert first.to_json() == second.to_json()
    assert first.status in ("verified", "inconclusive")


def test_criterion_13_determinism():
    tasks = suite.suite_tasks()
    a = [r.to_json() for r in suite.run_tasks(tasks, jobs=1)]
    b = [r.to_json() for r in suite.run_tasks(tasks, jobs=1)]
    c = [r.to_json() for r in suite.run_tasks(tasks, jobs=8)]
    assert a == b == c
    assert len(a) == len(tasks)
