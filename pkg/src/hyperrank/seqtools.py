"""Exact integer sequence tools: recurrences, rational series, roots.

The certification rule: if a sequence has a rational generating
function with numerator degree at most P and denominator degree at
most Q, then an order-k inhomogeneous recurrence that holds for
n = n0, ..., max(P + k + 1, Q + n0) holds for every n >= n0.  All
checks run in exact integer or rational arithmetic; floats appear only
in dominant_root, which brackets and bisects.

Polynomials are coefficient lists in ascending order: index i holds
the coefficient of z^i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .errors import DomainError, InputError, NumericError


@dataclass(frozen=True)
class Recurrence:
    """sum(coeffs[i] * f[n - i] for i in 0..order) == constant, n >= start."""

    coeffs: tuple[int, ...]
    constant: int = 0
    start: int = -1  # -1 means "defaults to the order"

    def __post_init__(self) -> None:
        if len(self.coeffs) < 2:
            raise DomainError("a recurrence needs order >= 1")
        if self.coeffs[0] == 0:
            raise DomainError("leading coefficient must be nonzero")
        if self.start == -1:
            object.__setattr__(self, "start", self.order)
        if self.start < self.order:
            raise DomainError(f"start {self.start} precedes order {self.order}")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def holds_at(self, terms, n: int) -> bool:
        acc = sum(self.coeffs[i] * terms[n - i] for i in range(self.order + 1))
        return acc == self.constant


@dataclass(frozen=True)
class RationalSeries:
    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.denominator or self.denominator[0] == 0:
            raise DomainError("denominator needs a nonzero constant term")

    @property
    def num_degree(self) -> int:
        return _degree(self.numerator)

    @property
    def den_degree(self) -> int:
        return _degree(self.denominator)


def _degree(coeffs) -> int:
    d = -1
    for i, c in enumerate(coeffs):
        if c:
            d = i
    return d


def poly_mul(a, b) -> tuple[int, ...]:
    """Product of two ascending coefficient lists."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def expand_series(gf: RationalSeries, m: int) -> list[int]:
    """First m + 1 Taylor coefficients of gf, by exact long division."""
    den = gf.denominator
    if den[0] not in (1, -1):
        raise DomainError(f"constant term of the denominator must be +-1, got {den[0]}")
    num = gf.numerator
    out = []
    for j in range(m + 1):
        acc = num[j] if j < len(num) else 0
        for i in range(1, min(j, len(den) - 1) + 1):
            acc -= den[i] * out[j - i]
        if den[0] == -1:
            acc = -acc
        out.append(acc)
    return out


def certify_recurrence(terms, rec: Recurrence, P: int, Q: int) -> bool:
    """True iff rec holds at n = start..max(P+order+1, Q+start).

    Under the degree bounds P and Q on the generating function of
    terms, that finite window certifies the recurrence for all
    n >= start.  Missing terms are an error, never a pass.
    """
    k = rec.order
    n0 = rec.start
    N = max(P + k + 1, Q + n0)
    if len(terms) <= N:
        raise InputError(f"need terms through index {N}, got {len(terms)}")
    return all(rec.holds_at(terms, n) for n in range(n0, N + 1))


def _solve_exact(rows):
    """RREF solve of [A | b] rows over Fraction.

    Returns (particular, nullspace basis) for the unknown vector, or
    None when inconsistent.
    """
    rows = [list(map(Fraction, r)) for r in rows]
    cols = len(rows[0]) - 1
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][cols]:
            return None
    particular = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        particular[c] = rows[i][cols]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * cols
        vec[fc] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -rows[i][fc]
        basis.append(vec)
    return particular, basis


def _as_primitive(vec) -> tuple[int, ...] | None:
    denoms = [f.denominator for f in vec]
    scale = 1
    for q in denoms:
        scale = scale * q // gcd(scale, q)
    ints = [int(f * scale) for f in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    ints = [x // g for x in ints]
    if ints[0] < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def guess_recurrence(terms, max_order: int):
    """Smallest-order integer recurrence (with constant) fitting terms.

    Exact rational elimination; on an underdetermined fit the candidate
    with the smallest maximum |coefficient|, then lexicographically
    least, wins.  Returns None when nothing fits within max_order.
    """
    if max_order < 1:
        raise DomainError(f"need max_order >= 1, got {max_order}")
    if len(terms) < 2 * max_order + 4:
        raise InputError(f"need at least {2 * max_order + 4} terms, got {len(terms)}")
    for k in range(1, max_order + 1):
        # unknowns a_1..a_k, c with a_0 = 1:
        #   sum_i a_i f(n-i) - c = -f(n)
        rows = [[terms[n - i] for i in range(1, k + 1)] + [-1, -terms[n]]
                for n in range(k, len(terms))]
        solved = _solve_exact(rows)
        if solved is None:
            continue
        particular, basis = solved
        candidates = []
        if not basis:
            shifts: list[tuple[int, ...]] = [()]
        else:
            shifts = list(product(range(-3, 4), repeat=min(len(basis), 2)))
        for shift in shifts:
            vec = list(particular)
            for t, bvec in zip(shift, basis):
                if t:
                    vec = [x + t * y for x, y in zip(vec, bvec)]
            prim = _as_primitive([Fraction(1)] + vec)
            if prim is not None and prim[0] != 0:
                candidates.append(prim)
        if not candidates:
            continue
        best = min(candidates, key=lambda w: (max(abs(x) for x in w), w))
        return Recurrence(coeffs=best[:-1], constant=best[-1], start=k)
    return None


def dominant_root(coeffs, tol: float) -> float:
    """Largest real root above 1, bracketed on [1, 1 + max|c_i/c_m|].

    coeffs ascend: z^2 - z - 1 is (-1, -1, 1).
    """
    if tol <= 0:
        raise DomainError(f"need tol > 0, got {tol}")
    deg = _degree(coeffs)
    if deg < 1:
        raise DomainError("need a nonconstant polynomial")
    lead = coeffs[deg]

    def val(x: float) -> float:
        acc = 0.0
        for c in reversed(coeffs[: deg + 1]):
            acc = acc * x + c
        return acc

    lo = 1.0
    hi = 1.0 + max(abs(c) for c in coeffs) / abs(lead)
    if val(lo) == 0.0:
        lo += tol
    if val(lo) * val(hi) > 0:
        raise NumericError("no sign change on the bracket; no dominant root above 1")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if val(mid) == 0.0:
            return mid
        if val(lo) * val(mid) < 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2
