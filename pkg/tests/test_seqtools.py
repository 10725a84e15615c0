"""Exact recurrence certification, series expansion, root bracketing."""

import math

import pytest

from hyperrank import glynn, seqtools
from hyperrank.errors import DomainError, InputError, NumericError


def test_recurrence_validation():
    with pytest.raises(DomainError):
        seqtools.Recurrence(coeffs=(1,))
    with pytest.raises(DomainError):
        seqtools.Recurrence(coeffs=(0, 1, 1))
    with pytest.raises(DomainError):
        seqtools.Recurrence(coeffs=(1, -1, -1), start=1)
    rec = seqtools.Recurrence(coeffs=(1, -1, -1))
    assert rec.order == 2
    assert rec.start == 2  # defaults to the order
    # f[n] - f[n-1] - f[n-2] = 0 on the Fibonacci numbers
    fib = [1, 1, 2, 3, 5, 8, 13, 21]
    assert all(rec.holds_at(fib, n) for n in range(2, 8))
    assert not rec.holds_at([1, 1, 3], 2)


def test_rational_series_validation():
    with pytest.raises(DomainError):
        seqtools.RationalSeries((1,), ())
    with pytest.raises(DomainError):
        seqtools.RationalSeries((1,), (0, 1))
    series = seqtools.RationalSeries((0, 0, 2), (1, 0, -1))
    assert series.num_degree == 2
    assert series.den_degree == 2


def test_expand_series():
    series = seqtools.RationalSeries((0, 0, 2), (1, 0, -1))
    assert seqtools.expand_series(series, 8) == [0, 0, 2, 0, 2, 0, 2, 0, 2]
    # geometric check against 1/(1 - z)
    geo = seqtools.RationalSeries((1,), (1, -1))
    assert seqtools.expand_series(geo, 5) == [1, 1, 1, 1, 1, 1]
    # a leading -1 denominator flips every sign
    flipped = seqtools.RationalSeries((0, 1), (-1, 1))
    assert seqtools.expand_series(flipped, 4) == [0, -1, -1, -1, -1]
    with pytest.raises(DomainError):
        seqtools.expand_series(seqtools.RationalSeries((1,), (2, 1)), 4)


def test_poly_mul():
    assert seqtools.poly_mul((1, 1), (1, 1)) == (1, 2, 1)
    assert seqtools.poly_mul((0,), (1, 2, 3)) == (0, 0, 0)
    assert seqtools.poly_mul((1, -1), (1, 1, 1)) == (1, 0, 0, -1)


def _glynn_terms(gtype, count):
    lo = 13 if gtype == 1 else 11
    fn = glynn.glynn1_count if gtype == 1 else glynn.glynn2_count
    return [fn(d) for d in range(lo, lo + 2 * count, 2)]


def test_certify_recurrence():
    terms = _glynn_terms(1, 16)
    assert seqtools.certify_recurrence(terms, glynn.GLYNN1_RECURRENCE, 5, 9)
    wrong = seqtools.Recurrence(coeffs=(1, -1, -1, -1, -1), constant=0, start=4)
    assert not seqtools.certify_recurrence(terms, wrong, 5, 9)
    with pytest.raises(InputError):
        seqtools.certify_recurrence(terms[:6], glynn.GLYNN1_RECURRENCE, 5, 9)


def test_guess_recovers_known_recurrences():
    assert seqtools.guess_recurrence(_glynn_terms(1, 16), 6) == glynn.GLYNN1_RECURRENCE
    assert seqtools.guess_recurrence(_glynn_terms(2, 16), 6) == glynn.GLYNN2_RECURRENCE
    fib = [1, 1]
    while len(fib) < 20:
        fib.append(fib[-1] + fib[-2])
    rec = seqtools.guess_recurrence(fib, 4)
    assert rec is not None
    assert seqtools.certify_recurrence(fib, rec, 2, 4)


def test_guess_rejects_non_recurrent_input():
    terms = [math.isqrt(j ** 5 + j + 7) for j in range(1, 20)]
    assert seqtools.guess_recurrence(terms, 4) is None
    with pytest.raises(InputError):
        seqtools.guess_recurrence([1, 2, 3], 2)


def test_dominant_root_values():
    phi = seqtools.dominant_root((-1, -1, 1), 1e-10)
    assert abs(phi - 1.6180339887498949) < 1e-8
    root1 = seqtools.dominant_root(tuple(reversed(glynn.GLYNN1_RECURRENCE.coeffs)), 1e-10)
    assert abs(root1 - 1.927561975) < 1e-8
    root2 = seqtools.dominant_root(tuple(reversed(glynn.GLYNN2_RECURRENCE.coeffs)), 1e-10)
    assert abs(root2 - 2.095293985) < 1e-8


def test_dominant_root_guards():
    with pytest.raises(DomainError):
        seqtools.dominant_root((-1, -1, 1), 0.0)
    with pytest.raises(DomainError):
        seqtools.dominant_root((5,), 1e-9)
    with pytest.raises(NumericError):
        seqtools.dominant_root((1, 1), 1e-9)  # z + 1 has no root above 1
