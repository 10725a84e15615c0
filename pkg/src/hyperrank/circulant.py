"""Circulant count matrices of power maps and their 2-ranks.

For f(x) = x^k + x^(k-1) over GF(2^d), the matrix M_k has entry (i, j)
counting the x in the multiplicative group with f(x) = g^(j-i).  Its
2-rank equals the number of residues a in (0, n) whose binary word,
paired with that of (k-1)a mod n, has no common 1 digit.  Those words
form a rational language for small k, so the same number falls out of
a generating function; the module carries all three routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import CapacityError, DomainError
from .gf2field import log_table
from .rank2 import circulant_gcd_rank
from .seqtools import RationalSeries, expand_series, poly_mul

MAX_ROW_DEGREE = 20
_CHUNK = 1 << 21


@dataclass(frozen=True)
class CountRow:
    """First row of the count circulant: counts[j] = #{x : f(x) = g^j}."""

    k: int
    d: int
    counts: tuple[int, ...]

    @property
    def n(self) -> int:
        return (1 << self.d) - 1

    def parity_row(self) -> int:
        row = 0
        for j, c in enumerate(self.counts):
            if c & 1:
                row |= 1 << j
        return row

    def indicator_row(self) -> int:
        row = 0
        for j, c in enumerate(self.counts):
            if c:
                row |= 1 << j
        return row


@lru_cache(maxsize=None)
def m_row(k: int, d: int) -> CountRow:
    """Count row of x^k + x^(k-1) over the canonical field of degree d."""
    if k < 2:
        raise DomainError(f"need k >= 2, got {k}")
    if d > MAX_ROW_DEGREE:
        raise CapacityError(f"count rows capped at d={MAX_ROW_DEGREE}, got {d}")
    table = log_table(d)
    n = table.spec.n
    # f(g^i) = g^((k-1)i) * (g^i + 1); only x = 1 hits zero, skip it
    i = np.arange(1, n, dtype=np.int64)
    f_log = ((k - 1) % n * i + table.log[table.exp[i] ^ 1]) % n
    counts = np.bincount(f_log, minlength=n)
    return CountRow(k, d, tuple(int(c) for c in counts))


def r_count(k: int, d: int) -> int:
    """Solutions of s(a) + s((k-1)a) = s*(ka) for 0 < a < 2^d - 1.

    Equivalent bit form: a and (k-1)a mod n share no 1 digit.  The
    residues with (k-1)a or ka divisible by n count as solutions.
    """
    if k < 2:
        raise DomainError(f"need k >= 2, got {k}")
    if d < 2:
        raise DomainError(f"need d >= 2, got {d}")
    if d > MAX_ROW_DEGREE:
        raise CapacityError(f"solution sweep capped at d={MAX_ROW_DEGREE}, got {d}")
    n = (1 << d) - 1
    km1 = (k - 1) % n
    total = 0
    for lo in range(1, n, _CHUNK):
        a = np.arange(lo, min(lo + _CHUNK, n), dtype=np.uint64)
        b = (a * np.uint64(km1)) % np.uint64(n)
        total += int(np.count_nonzero((a & b) == 0))
    return total


def rank_m(k: int, d: int) -> int:
    """2-rank of the count circulant M_k."""
    row = m_row(k, d)
    return circulant_gcd_rank(row.parity_row(), row.n)


def rank_n(k: int, d: int) -> int:
    """2-rank of the support circulant N_k (entries capped at 1)."""
    row = m_row(k, d)
    return circulant_gcd_rank(row.indicator_row(), row.n)


def root_profile(k: int, d: int) -> dict[int, int]:
    """Histogram of fibre sizes of x^k + x^(k-1) over the group targets."""
    row = m_row(k, d)
    profile: dict[int, int] = {}
    for c in row.counts:
        profile[c] = profile.get(c, 0) + 1
    return dict(sorted(profile.items()))


def _poly_deriv(p) -> tuple[int, ...]:
    return tuple(j * c for j, c in enumerate(p))[1:] or (0,)


def _poly_sub(a, b) -> tuple[int, ...]:
    m = max(len(a), len(b))
    aa = tuple(a) + (0,) * (m - len(a))
    bb = tuple(b) + (0,) * (m - len(b))
    return tuple(x - y for x, y in zip(aa, bb))


# block generating functions b(z) = p/q per language component, with a
# flag for whether the single-letter block 0 is among the blocks, and
# extra rational series for solution cycles no block star reaches: the
# k = 9 family 0001(01)^j tends to the pure alternating cycle, whose
# two rotations solve every even length but never decompose
_LANGUAGES: dict[int, tuple[tuple, bool, tuple]] = {
    3: ((((0, 1, 1), (1,)),), True, ()),
    4: ((((0, 0, 1), (1,)),), False, ()),
    5: ((((0, 1, 0, 1, 1), (1,)),), True, ()),
    6: ((((0, 0, 1, 0, 1), (1,)),), False, ()),
    7: ((((0, 1, 0, 1), (1,)), ((0, 0, 1, 1), (1,))), True, ()),
    8: ((((0, 0, 0, 1), (1,)), ((0, 0, 0, 1), (1,))), False, ()),
    9: (
        (((0, 1, 0, -1, 1, 1, 1, -1, -1), (1, 0, -1)),),
        True,
        (((0, 0, 2), (1, 0, -1)),),
    ),
}


def _component_series(p, q, m: int) -> list[int]:
    # necklaces of blocks, one mark per position: z b'(z) / (1 - b(z))
    # with b = p/q this is z (p'q - pq') / (q (q - p))
    num = (0,) + _poly_sub(poly_mul(_poly_deriv(p), q), poly_mul(p, _poly_deriv(q)))
    den = poly_mul(q, _poly_sub(q, p))
    return expand_series(RationalSeries(num, den), m - 1)


def word_series(k: int, m: int) -> list[int]:
    """First m counts of length-d cyclic words in the solution language."""
    if k not in _LANGUAGES:
        raise DomainError(f"no word language tabulated for k={k}")
    components, has_zero_block, extra = _LANGUAGES[k]
    out = [0] * m
    for p, q in components:
        for d, c in enumerate(_component_series(p, q, m)):
            out[d] += c
    for num, den in extra:
        for d, c in enumerate(expand_series(RationalSeries(num, den), m - 1)):
            out[d] += c
    if has_zero_block:
        # drop the all-zero word, which is never a solution
        for d in range(1, m):
            out[d] -= 1
    out[0] = 0
    return out


def word_count(k: int, d: int) -> int:
    """Number of solution words of length d, from the block structure."""
    if d < 1:
        raise DomainError(f"need d >= 1, got {d}")
    return word_series(k, d + 1)[d]


# closed rational forms of the full solution-count series, kept as
# factor lists so the polynomial products stay readable
_GF_TABLE: dict[int, tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]] = {
    3: ((0, 0, 2, -1), ((1, -1), (1, -1, -1))),
    4: ((0, 0, 2), ((1, 0, -1),)),
    5: ((0, 0, 0, 3, 2, -3), ((1, -1), (1, 0, 1), (1, -1, -1))),
    6: ((0, 0, 2, 0, 4), ((1, 0, -1, 0, -1),)),
    7: ((0, 0, 2, 2, -6, -2, -2, 5), ((1, -1), (1, -1, 0, -1), (1, 0, -1, -1))),
    8: ((0, 0, 0, 6), ((1, 0, 0, -1),)),
    9: (
        (0, 0, 2, -4, 6, 2, 2, -12, -2, 7),
        ((1, -1), (1, -1, -1), (1, 0, 0, 1, 0, 0, -1)),
    ),
}


def gf_series(k: int) -> RationalSeries:
    """Closed-form rational series whose d-th coefficient is r_count(k, d)."""
    if k not in _GF_TABLE:
        raise DomainError(f"no closed series tabulated for k={k}")
    num, factors = _GF_TABLE[k]
    den: tuple[int, ...] = (1,)
    for f in factors:
        den = poly_mul(den, f)
    return RationalSeries(tuple(num), den)
