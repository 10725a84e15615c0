"""Rank computations: digit counting, circulant gcd, dense elimination."""

import os
import random
import subprocess
import sys

import pytest

from hyperrank import diffset, rank2
from hyperrank.errors import CapacityError, DomainError, InputError

B6_ODD = {3: 3, 5: 15, 7: 35, 9: 81, 11: 165, 13: 325}
B6_EVEN = {4: 4, 6: 12, 8: 32, 10: 70, 12: 144, 14: 280}


def test_b_count_table():
    for d, b in B6_ODD.items():
        assert rank2.b_count(6, d) == b
        assert rank2.a_count(6, d) == b // d
    for d, b in B6_EVEN.items():
        assert rank2.b_count(6, d, strict=False) == b


def test_b_count_doubling_family():
    # s(ka) = s(a) for k a power of two, so only s((k-1)a) = 1 survives
    for d in range(2, 12):
        assert rank2.b_count(2, d) == d
    assert rank2.b_count(4, 5) == 5
    assert rank2.b_count(8, 7) == 7


def test_b_count_strictness():
    with pytest.raises(DomainError):
        rank2.b_count(4, 4)  # gcd(12, 15) > 1
    assert rank2.b_count(4, 4, strict=False) >= 0
    with pytest.raises(DomainError):
        rank2.b_count(1, 5)
    with pytest.raises(DomainError):
        rank2.b_count(6, 1)
    with pytest.raises(CapacityError):
        rank2.b_count(6, rank2.MAX_DEGREE + 1)


def test_a_count_even_quotients():
    # the even-d counts stay divisible by d, so the quotient is exact
    for d in (4, 6, 8, 10):
        assert rank2.a_count(6, d, strict=False) == B6_EVEN[d] // d


def test_gcd_rank_equals_dense_rank_on_random_rows():
    rng = random.Random(20260816)
    for n in (15, 31, 63, 101, 255):
        for _ in range(8):
            row = rng.getrandbits(n) & ((1 << n) - 1)
            assert rank2.circulant_gcd_rank(row, n) == rank2.dense_circulant_rank(row, n)


def test_rank_of_trivial_rows():
    for n in (7, 15, 31):
        assert rank2.circulant_gcd_rank(0, n) == 0
        assert rank2.dense_circulant_rank(0, n) == 0
        assert rank2.circulant_gcd_rank((1 << n) - 1, n) == 1
        assert rank2.dense_circulant_rank((1 << n) - 1, n) == 1
        assert rank2.circulant_gcd_rank(1, n) == n
    with pytest.raises(DomainError):
        rank2.circulant_gcd_rank(1 << 7, 7)
    with pytest.raises(DomainError):
        rank2.dense_circulant_rank(-1, 7)
    with pytest.raises(CapacityError):
        rank2.dense_circulant_rank(1, rank2.MAX_DENSE_N + 1)


def test_rank_of_row_dispatch():
    assert rank2.rank_of_row(0b1011, 7) == rank2.circulant_gcd_rank(0b1011, 7)
    assert rank2.rank_of_row(0b1011, 7, "DenseElimination") == rank2.circulant_gcd_rank(0b1011, 7)
    with pytest.raises(InputError):
        rank2.rank_of_row(0b1011, 7, "DigitCount")


@pytest.mark.parametrize("d", [5, 7, 9])
def test_three_methods_agree_on_power_families(d):
    families = [diffset.segre_set(d)]
    if d >= 5:
        families += [diffset.glynn1_set(d), diffset.glynn2_set(d)]
    families += [diffset.regular_set(d)]
    for ds in families:
        reports = [rank2.rank_diffset(ds, m) for m in rank2.METHODS]
        assert len({(r.rank_set, r.rank_complement) for r in reports}) == 1
        assert reports[0].method == "DigitCount"
        assert reports[0].rank_complement % d == 0


def test_digit_count_needs_a_power_family():
    with pytest.raises(DomainError):
        rank2.rank_diffset(diffset.qr_set(5), "DigitCount")
    with pytest.raises(InputError):
        rank2.rank_diffset(diffset.segre_set(5), "Gaussian")


def test_singer_rank_values():
    assert rank2.singer_rank(2, 1, 5) == 6
    assert rank2.singer_rank(2, 2, 3) == 10
    assert rank2.singer_rank(3, 1, 3) == 7
    assert rank2.singer_rank(3, 1, 4) == 11
    assert rank2.singer_rank(5, 1, 3) == 16
    with pytest.raises(DomainError):
        rank2.singer_rank(2, 0, 5)


def test_singer_rank_count_identity():
    cases = [(2, 1, d) for d in range(2, 11)]
    cases += [(2, 2, d) for d in range(2, 5)]
    cases += [(3, 1, d) for d in range(2, 6)]
    cases += [(5, 1, d) for d in range(2, 4)]
    for p, s, d in cases:
        assert rank2.singer_rank_count(p, s, d) == rank2.singer_rank(p, s, d) - 1
    with pytest.raises(CapacityError):
        rank2.singer_rank_count(2, 1, 40)


def test_singer_set_rank_is_d_plus_one():
    for d in range(3, 12):
        report = rank2.rank_diffset(diffset.singer_set(d))
        assert report.rank_set == d + 1
        assert report.rank_complement == d


def test_gmw_expected_rank():
    assert rank2.gmw_expected_complement_rank(3, 2, 3) == 12
    assert rank2.gmw_expected_complement_rank(4, 2, 7) == 32
    assert rank2.gmw_expected_complement_rank(3, 3, 3) == 27
    assert rank2.gmw_expected_complement_rank(5, 2, 3) == 20
    assert rank2.gmw_expected_complement_rank(6, 2, 5) == 24
    with pytest.raises(DomainError):
        rank2.gmw_expected_complement_rank(1, 2, 3)


def test_thread_count_env(monkeypatch):
    monkeypatch.delenv("HYPERRANK_THREADS", raising=False)
    assert rank2.thread_count() == 1
    monkeypatch.setenv("HYPERRANK_THREADS", "3")
    assert rank2.thread_count() == 3
    monkeypatch.setenv("HYPERRANK_THREADS", "zero")
    with pytest.raises(InputError):
        rank2.thread_count()
    monkeypatch.setenv("HYPERRANK_THREADS", "0")
    with pytest.raises(InputError):
        rank2.thread_count()


def test_threaded_sweep_matches_serial():
    env = dict(os.environ, HYPERRANK_THREADS="2")
    script = "from hyperrank import rank2; print(rank2.b_count(6, 13))"
    out = subprocess.run([sys.executable, "-c", script], env=env,
                         capture_output=True, text=True, check=True)
    assert int(out.stdout) == B6_ODD[13]
