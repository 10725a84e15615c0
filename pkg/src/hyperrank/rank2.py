"""2-ranks of cyclic difference sets by three independent routes.

DigitCount sweeps residues a mod 2^d - 1 and counts solutions of the
digit-sum equation s(a) + s((k-1)a) = s(ka) + 1; that count B_k(d) is
the 2-rank of the complement of the power-family set with exponent k.
CirculantGcd reads the rank of a circulant off gcd(row(x), x^n - 1).
DenseElimination row-reduces the full circulant.  They must agree, and
the tests insist on it.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb, gcd

import numpy as np

from .diffset import DiffSet
from .errors import CapacityError, DomainError, InputError, NumericError
from .gf2field import MAX_DEGREE, poly_degree, poly_gcd
from .residue import popcount_array

METHODS = ("DigitCount", "CirculantGcd", "DenseElimination")

_CHUNK = 1 << 21
MAX_DENSE_N = (1 << 16) - 1


@dataclass(frozen=True)
class RankReport:
    d: int
    label: str
    rank_set: int
    rank_complement: int
    method: str


def thread_count() -> int:
    """Worker count for residue sweeps, from HYPERRANK_THREADS (default 1)."""
    env = os.environ.get("HYPERRANK_THREADS", "").strip()
    if not env:
        return 1
    try:
        v = int(env)
    except ValueError as exc:
        raise InputError(f"HYPERRANK_THREADS must be an int, got {env!r}") from exc
    if v < 1:
        raise InputError(f"HYPERRANK_THREADS must be >= 1, got {v}")
    return v


def _b_chunk(k: int, d: int, lo: int, hi: int) -> int:
    n = np.uint64((1 << d) - 1)
    a = np.arange(lo, hi, dtype=np.uint64)
    r2 = (np.uint64(k - 1) * a) % n
    r3 = (np.uint64(k) * a) % n
    p1 = popcount_array(a).astype(np.int64)
    p2 = popcount_array(r2).astype(np.int64)
    p3 = popcount_array(r3).astype(np.int64)
    # the zero residue reads as the all-ones word
    p2[r2 == 0] = d
    p3[r3 == 0] = d
    return int(np.count_nonzero(p1 + p2 == p3 + 1))


def b_count(k: int, d: int, *, strict: bool = True) -> int:
    """B_k(d): solutions of s(a) + s((k-1)a) = s(ka) + 1 over 0 < a < 2^d - 1.

    With strict=True (default) k(k-1) must be invertible mod 2^d - 1, the
    regime where B_k(d) is the complement 2-rank of a hyperoval set.  With
    strict=False degenerate residues are allowed; they never solve the
    equation under the all-ones reading of zero, so the count stays
    meaningful (the even-d Segre counts need this).
    """
    if d < 2:
        raise DomainError(f"need d >= 2, got {d}")
    if d > MAX_DEGREE:
        raise CapacityError(f"digit counting stops at d={MAX_DEGREE}, got {d}")
    if k < 2:
        raise DomainError(f"need k >= 2, got {k}")
    n = (1 << d) - 1
    if strict and gcd(k * (k - 1), n) != 1:
        raise DomainError(
            f"k(k-1) shares a factor with 2^{d} - 1 for k={k}; "
            "pass strict=False to count anyway")
    k %= n
    if k == 0:
        k = n  # keep k - 1 nonnegative; multiples of n act like 0 anyway
    spans = [(lo, min(lo + _CHUNK, n)) for lo in range(1, n, _CHUNK)]
    workers = thread_count()
    if workers == 1 or len(spans) == 1:
        return sum(_b_chunk(k, d, lo, hi) for lo, hi in spans)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(lambda span: _b_chunk(k, d, *span), spans)
        return sum(parts)


def a_count(k: int, d: int, *, strict: bool = True) -> int:
    """A_k(d) = B_k(d) / d; the quotient is exact, by conjugacy of digits."""
    b = b_count(k, d, strict=strict)
    if b % d:
        raise NumericError(f"B_{k}({d}) = {b} is not divisible by {d}")
    return b // d


def circulant_gcd_rank(row: int, n: int) -> int:
    """Rank over GF(2) of the n x n circulant with first-row bitmask row."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if not 0 <= row < (1 << n):
        raise DomainError(f"row mask out of range for n={n}")
    g = poly_gcd((1 << n) | 1, row)
    return n - poly_degree(g)


def dense_circulant_rank(row: int, n: int) -> int:
    """Same rank by explicit row reduction of all n rotations."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if n > MAX_DENSE_N:
        raise CapacityError(f"dense elimination capped at n={MAX_DENSE_N}")
    if not 0 <= row < (1 << n):
        raise DomainError(f"row mask out of range for n={n}")
    mask = (1 << n) - 1
    pivots: dict[int, int] = {}
    rank = 0
    for i in range(n):
        r = ((row << i) | (row >> (n - i))) & mask if i else row
        while r:
            lead = r.bit_length() - 1
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = r
                rank += 1
                break
            r ^= p
        if rank == n:
            break
    return rank


def rank_of_row(row: int, n: int, method: str = "CirculantGcd") -> int:
    if method == "CirculantGcd":
        return circulant_gcd_rank(row, n)
    if method == "DenseElimination":
        return dense_circulant_rank(row, n)
    raise InputError(f"row ranks support CirculantGcd or DenseElimination, got {method!r}")


def rank_diffset(ds: DiffSet, method: str = "CirculantGcd") -> RankReport:
    """Rank of the set's circulant and of its complement's, by one method.

    DigitCount only applies to power-map provenances; the other two work
    on any set and compute both ranks independently.
    """
    if method not in METHODS:
        raise InputError(f"unknown method {method!r}, pick one of {METHODS}")
    if method == "DigitCount":
        k = ds.provenance.k
        if k is None:
            raise DomainError(f"digit counting needs a power-map family, not {ds.provenance.family}")
        b = b_count(k, ds.d, strict=False)
        return RankReport(ds.d, ds.label, b + 1, b, method)
    row = ds.row()
    comp = ds.complement_row()
    return RankReport(ds.d, ds.label,
                      rank_of_row(row, ds.n, method),
                      rank_of_row(comp, ds.n, method), method)


def singer_rank(p: int, s: int, d: int) -> int:
    """p-rank of the hyperplane design of PG(d-1, p^s): C(p+d-2, d-1)^s + 1."""
    if p < 2 or s < 1 or d < 2:
        raise DomainError(f"need p >= 2, s >= 1, d >= 2, got p={p} s={s} d={d}")
    return comb(p + d - 2, d - 1) ** s + 1


def singer_rank_count(p: int, s: int, d: int) -> int:
    """The same rank minus one, counted: multiples a of p^s - 1 below p^(sd)
    whose base-p digit sum is (p-1)s."""
    if p < 2 or s < 1 or d < 2:
        raise DomainError(f"need p >= 2, s >= 1, d >= 2, got p={p} s={s} d={d}")
    if p ** (s * d) > 1 << 30:
        raise CapacityError(f"direct count capped at p^(sd) <= 2^30, got p={p} s={s} d={d}")
    q1 = p ** s - 1
    target = (p - 1) * s
    count = 0
    for a in range(q1, p ** (s * d) - 1, q1):
        t, x = 0, a
        while x and t <= target:
            t += x % p
            x //= p
        if t == target:
            count += 1
    return count


def gmw_expected_complement_rank(u: int, v: int, r: int) -> int:
    """Complement 2-rank of the gmw(u, v, r) set: u * v^w, w = popcount(r)."""
    if u < 2 or v < 2 or r < 1:
        raise DomainError(f"need u, v >= 2 and r >= 1, got u={u} v={v} r={r}")
    return u * v ** r.bit_count()
