"""Cross-family comparisons: the rank table, orderings, congruences.

These are the package's summary products.  Everything here is exact:
rank inequalities use Fraction bounds, the Fibonacci congruences use
integer arithmetic, so a True really is a proof at that d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import diffset, glynn
from .errors import CapacityError, DomainError
from .gf2field import prime_factors
from .rank2 import b_count, circulant_gcd_rank
from .residue import popcount_array
from .segre import a6, fibonacci

MAX_TABLE_DEGREE = 31
MAX_REPORT_DEGREE = 20


@dataclass(frozen=True)
class RankTableRow:
    d: int
    a6: int
    a_glynn1: int
    a_glynn2: int
    singer_rank_complement: int


def table1(d_max: int) -> tuple[RankTableRow, ...]:
    """Normalized complement 2-ranks of the named families, odd d."""
    if d_max > MAX_TABLE_DEGREE:
        raise CapacityError(f"table capped at d={MAX_TABLE_DEGREE}, got {d_max}")
    rows = []
    for d in range(3, d_max + 1, 2):
        # at d = 3 the type I exponent equals 6, so its count is a6(3)
        g1 = a6(3) if d == 3 else glynn.glynn1_count(d)
        rows.append(RankTableRow(d, a6(d), g1, glynn.glynn2_count(d), d))
    return tuple(rows)


def c_value(k: int, d: int, a: int) -> int:
    """s(a) + s((k-1)a) - s(ka), the local excess at the residue a."""
    n = (1 << d) - 1
    a %= n
    if a == 0:
        raise DomainError("c is defined on nonzero residues")
    b = (k - 1) * a % n
    c = k * a % n
    if b == 0 or c == 0:
        raise DomainError(f"degenerate residue a={a} for k={k}, d={d}")
    return int(a.bit_count()) + int(b.bit_count()) - int(c.bit_count())


_TRIPLE_PROBES = {
    "regular": lambda k, d: k + 1,
    "translation": lambda k, d: k + 1,
    "segre": lambda k, d: 3,
    "glynn1": lambda k, d: (1 << ((d + 1) // 2)) + 1,
    "glynn2": lambda k, d: 7,
}


def c_triple(family: str, d: int, i: int | None = None) -> tuple[int, int, int]:
    """The sorted probe triple (c(1), c(-1), c(probe)) of a power family.

    The probe residue depends on the family; the resulting triples
    separate the families once d is large enough to matter.
    """
    if family not in _TRIPLE_PROBES:
        raise DomainError(f"no probe triple for family {family!r}")
    k = diffset.family_exponent(family, d, i)
    n = (1 << d) - 1
    probes = (1, n - 1, _TRIPLE_PROBES[family](k, d) % n)
    return tuple(sorted(c_value(k, d, a) for a in probes))


def c_profile(k: int, d: int) -> dict[int, int]:
    """Histogram of c over all nonzero residues."""
    n = (1 << d) - 1
    if d > MAX_REPORT_DEGREE:
        raise CapacityError(f"profile capped at d={MAX_REPORT_DEGREE}, got {d}")
    if math.gcd(k * (k - 1), n) != 1:
        raise DomainError(f"k(k-1) must be a unit mod {n}")
    a = np.arange(1, n, dtype=np.uint64)
    b = (a * np.uint64((k - 1) % n)) % np.uint64(n)
    c = (a * np.uint64(k % n)) % np.uint64(n)
    vals = (
        popcount_array(a).astype(np.int64)
        + popcount_array(b).astype(np.int64)
        - popcount_array(c).astype(np.int64)
    )
    uniq, counts = np.unique(vals, return_counts=True)
    return {int(u): int(c_) for u, c_ in zip(uniq, counts)}


@dataclass(frozen=True)
class OrderingRow:
    """One odd d of the rank comparison, with each exact bound as a flag."""

    d: int
    a6: int
    a_glynn1: int
    a_glynn2: int
    ordering_ok: bool
    upper_ok: bool
    middle_ok: bool
    golden_ok: bool
    floor_ok: bool


def rank_ordering_report(d_min: int = 15, d_max: int = 31) -> tuple[OrderingRow, ...]:
    """Strict ordering and growth bounds of the three normalized ranks.

    For each odd d the flags compare, left to right,
    a_glynn2 > 2^e/3 > a_glynn1 > (809/500)^e > a6 with e = (d+1)/2.
    The golden-ratio lower bound on a_glynn1 first holds at d = 17.
    """
    if d_max > MAX_TABLE_DEGREE:
        raise CapacityError(f"report capped at d={MAX_TABLE_DEGREE}, got {d_max}")
    rows = []
    for d in range(d_min | 1, d_max + 1, 2):
        e = (d + 1) // 2
        v6, v1, v2 = a6(d), glynn.glynn1_count(d), glynn.glynn2_count(d)
        pow_bound = Fraction(1 << e, 3)
        phi_bound = Fraction(809, 500) ** e
        rows.append(
            OrderingRow(
                d,
                v6,
                v1,
                v2,
                v2 > v1 > v6,
                v2 > pow_bound,
                pow_bound > v1,
                v1 > phi_bound,
                phi_bound > v6,
            )
        )
    return tuple(rows)


def _is_prime(n: int) -> bool:
    return n > 1 and prime_factors(n) == (n,)


@lru_cache(maxsize=None)
def enumerate_gmw(d: int) -> tuple[tuple[int, int, int], ...]:
    """Admissible subfield-tower parameters (u, v, r) at degree d.

    One r per doubling coset; powers of 2 are excluded because they
    reproduce the trace-zero set.
    """
    out = []
    for u in range(2, d):
        if d % u or d // u < 2:
            continue
        v = d // u
        q1 = (1 << u) - 1
        seen = set()
        for r in range(3, q1):
            if math.gcd(r, q1) != 1 or (r & (r - 1)) == 0:
                continue
            coset = min(r * (1 << j) % q1 for j in range(u))
            if coset in seen:
                continue
            seen.add(coset)
            out.append((u, v, coset))
    return tuple(sorted(out))


@dataclass(frozen=True)
class InequivalenceReport:
    d: int
    ranks: tuple[tuple[str, int], ...]
    inconclusive: tuple[tuple[str, ...], ...]


def inequivalence_report(d: int) -> InequivalenceReport:
    """Complement 2-ranks of every construction available at this d.

    Distinct ranks prove inequivalence; families sharing a rank are
    listed as inconclusive, since equal rank decides nothing.
    """
    if d > MAX_REPORT_DEGREE:
        raise CapacityError(f"report capped at d={MAX_REPORT_DEGREE}, got {d}")
    if d < 3:
        raise DomainError(f"need d >= 3, got {d}")
    n = (1 << d) - 1
    entries: list[tuple[str, int]] = [("singer", d)]
    if d % 2 == 1:
        entries.append(("segre", d * a6(d)))
        if d >= 5:
            entries.append(("glynn1", d * glynn.glynn1_count(d)))
            entries.append(("glynn2", d * glynn.glynn2_count(d)))
    if _is_prime(n):
        ds = diffset.qr_set(d)
        entries.append(("qr", circulant_gcd_rank(ds.complement_row(), n)))
    for u, v, r in enumerate_gmw(d):
        ds = diffset.gmw_set(u, v, r)
        rank = circulant_gcd_rank(ds.complement_row(), n)
        entries.append((f"gmw(u={u},v={v},r={r})", rank))
    groups: dict[int, list[str]] = {}
    for label, rank in entries:
        groups.setdefault(rank, []).append(label)
    inconclusive = tuple(
        tuple(labels) for rank, labels in sorted(groups.items()) if len(labels) > 1
    )
    return InequivalenceReport(d, tuple(entries), inconclusive)


def pisano_period(m: int) -> int:
    """Period of the Fibonacci numbers mod m."""
    if m < 2:
        raise DomainError(f"need a modulus >= 2, got {m}")
    a, b = 0, 1
    # the period never exceeds 6m
    for i in range(1, 6 * m + 1):
        a, b = b, (a + b) % m
        if (a, b) == (0, 1):
            return i
    raise DomainError(f"no period found for modulus {m}")  # unreachable


@dataclass(frozen=True)
class FibonacciCheckReport:
    pisano_109: int
    pisano_251: int
    residue_109: int
    residue_109_ok: bool
    residue_109_never_power_of_3: bool
    residue_251: int
    residue_251_ok: bool
    residue_251_never_power_of_5: bool
    never_seven: bool
    never_divisible_49: bool


def fibonacci_mod_checks(sweep_limit: int = 1001) -> FibonacciCheckReport:
    """Congruence obstructions for the k = 6 rank sequence.

    a6(57 + 432x) is constant 42 mod 109 and 42 is no power of 3;
    a6(585 + 1000y) is constant 235 mod 251 and 235 is no power of 5.
    Alongside: a6(d) never equals 7 and is never divisible by 49 for
    odd d up to the sweep limit.
    """
    p109 = pisano_period(109)
    p251 = pisano_period(251)

    def a6_mod(d: int, m: int) -> int:
        return (2 * fibonacci((d - 1) // 2) - 1) % m

    r109 = a6_mod(57, 109)
    ok109 = all(a6_mod(57 + 432 * x, 109) == r109 for x in range(6))
    r251 = a6_mod(585, 251)
    ok251 = all(a6_mod(585 + 1000 * y, 251) == r251 for y in range(6))

    def power_set(base: int, m: int) -> set[int]:
        seen, x = set(), 1 % m
        while x not in seen:
            seen.add(x)
            x = x * base % m
        return seen

    never7 = True
    never49 = True
    for d in range(3, sweep_limit + 1, 2):
        v = a6(d)
        if v == 7:
            never7 = False
        if v % 49 == 0:
            never49 = False
    return FibonacciCheckReport(
        p109,
        p251,
        r109,
        ok109 and r109 == 42,
        42 not in power_set(3, 109),
        r251,
        ok251 and r251 == 235,
        235 not in power_set(5, 251),
        never7,
        never49,
    )
