"""Count rows, solution sweeps, word series: four routes to one number."""

import pytest

from hyperrank import circulant, rank2, residue, seqtools
from hyperrank.errors import CapacityError, DomainError

R_EXAMPLES = {(3, 3): 3, (3, 2): 2, (6, 7): 0, (4, 5): 0, (5, 5): 10,
              (8, 3): 6, (9, 2): 2}


def test_m_row_shape():
    row = circulant.m_row(3, 4)
    assert (row.k, row.d, row.n) == (3, 4, 15)
    assert row.counts == (0, 1, 1, 1, 1, 3, 1, 0, 1, 1, 3, 0, 1, 0, 0)
    assert sum(row.counts) == 14  # one entry per x in the group minus x = 1
    assert row.parity_row() == row.indicator_row() == 6014
    with pytest.raises(DomainError):
        circulant.m_row(1, 4)
    with pytest.raises(CapacityError):
        circulant.m_row(3, circulant.MAX_ROW_DEGREE + 1)


def test_m_row_total_mass():
    for k in range(3, 10):
        for d in range(2, 11):
            assert sum(circulant.m_row(k, d).counts) == (1 << d) - 2


def test_hyperoval_exponent_gives_even_counts():
    # the two-to-one fibres of the k = 6 map kill the parity row outright
    for d in (3, 5, 7, 9):
        assert all(c % 2 == 0 for c in circulant.m_row(6, d).counts)
        assert circulant.rank_m(6, d) == 0
    assert circulant.rank_n(6, 7) == 36


def test_r_count_examples():
    for (k, d), want in R_EXAMPLES.items():
        assert circulant.r_count(k, d) == want


def test_r_count_against_digit_sum_oracle():
    # a solves when a and (k-1)a add without carries; residues killing
    # (k-1)a or ka count as degenerate solutions
    for k in range(3, 10):
        for d in range(2, 11):
            n = (1 << d) - 1
            literal = 0
            for a in range(1, n):
                b = (k - 1) * a % n
                c = k * a % n
                if b == 0 or c == 0:
                    literal += 1
                elif residue.s(a, d) + residue.s(b, d) == residue.s(c, d):
                    literal += 1
            assert circulant.r_count(k, d) == literal


def test_four_routes_agree():
    for k in range(3, 10):
        series = seqtools.expand_series(circulant.gf_series(k), 16)
        words = circulant.word_series(k, 17)
        for d in range(2, 17):
            r = circulant.r_count(k, d)
            assert r == words[d]
            assert r == series[d]
            if d <= 12:
                assert r == circulant.rank_m(k, d)


def test_word_count_examples():
    assert circulant.word_count(8, 3) == 6
    assert circulant.word_count(5, 5) == 10
    assert circulant.word_count(9, 2) == 2
    assert circulant.word_series(3, 10) == [0, 0, 2, 3, 6, 10, 17, 28, 46, 75]
    with pytest.raises(DomainError):
        circulant.word_count(10, 5)
    with pytest.raises(DomainError):
        circulant.word_count(3, 0)


def test_gf_series_table():
    series = circulant.gf_series(3)
    assert series.numerator == (0, 0, 2, -1)
    assert series.denominator == (1, -2, 0, 1)
    with pytest.raises(DomainError):
        circulant.gf_series(2)
    with pytest.raises(DomainError):
        circulant.gf_series(10)


def test_indicator_and_parity_ranks_coincide_for_small_k():
    for d in range(3, 12, 2):
        assert circulant.rank_n(5, d) == circulant.rank_m(5, d)
    for k in (3, 7, 15):
        for d in range(2, 13):
            assert circulant.rank_n(k, d) == circulant.rank_m(k, d)


def test_rank_matches_dense_elimination():
    for k in (3, 5, 6, 9):
        for d in (3, 5, 7, 9, 11):
            row = circulant.m_row(k, d)
            got = rank2.dense_circulant_rank(row.parity_row(), row.n)
            assert circulant.rank_m(k, d) == got


def test_root_profiles():
    assert circulant.root_profile(3, 4) == {0: 5, 1: 8, 3: 2}
    assert circulant.root_profile(6, 5) == {0: 16, 2: 15}
    for d in (3, 5, 7, 9):
        assert set(circulant.root_profile(5, d)) <= {0, 1, 3}
        profile6 = circulant.root_profile(6, d)
        assert set(profile6) <= {0, 2}
        assert sum(size * mult for size, mult in profile6.items()) == (1 << d) - 2


def test_r_count_guards():
    with pytest.raises(DomainError):
        circulant.r_count(1, 5)
    with pytest.raises(DomainError):
        circulant.r_count(3, 1)
    with pytest.raises(CapacityError):
        circulant.r_count(3, circulant.MAX_ROW_DEGREE + 1)
