"""Binary digit sums on Z/(2^d - 1) and cyclotomic coset utilities.

s(a) is the binary weight of the residue of a mod 2^d - 1.  Carries in
cyclic binary addition are what make Jacobi sums even (Stickelberger),
so every rank computation in this package ultimately counts residues
with a prescribed digit-sum relation.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from .errors import DomainError


def popcount(x: int) -> int:
    if x < 0:
        raise DomainError("popcount needs a nonnegative int")
    return x.bit_count()


if hasattr(np, "bitwise_count"):

    def popcount_array(x: np.ndarray) -> np.ndarray:
        """Elementwise popcount of a uint64 array."""
        return np.bitwise_count(x)

else:
    _POP16 = np.array([i.bit_count() for i in range(1 << 16)], dtype=np.uint8)

    def popcount_array(x: np.ndarray) -> np.ndarray:
        """Elementwise popcount of a uint64 array."""
        x = x.astype(np.uint64, copy=False)
        acc = _POP16[x & np.uint64(0xFFFF)].astype(np.uint8)
        for shift in (16, 32, 48):
            acc = acc + _POP16[(x >> np.uint64(shift)) & np.uint64(0xFFFF)]
        return acc


def s(a: int, d: int) -> int:
    """Digit sum of a mod 2^d - 1, undefined on the zero residue."""
    if d < 1:
        raise DomainError(f"need d >= 1, got {d}")
    r = a % ((1 << d) - 1)
    if r == 0:
        raise DomainError(f"s is undefined at a = 0 mod 2^{d} - 1 (a = {a})")
    return r.bit_count()


def s_star(a: int, d: int) -> int:
    """Like s but with the zero residue read as the all-ones word, s* = d."""
    if d < 1:
        raise DomainError(f"need d >= 1, got {d}")
    r = a % ((1 << d) - 1)
    return d if r == 0 else r.bit_count()


def floor_digit_sum(a: int, d: int) -> int:
    """s(a) computed from the fractional parts of 2^i a / (2^d - 1).

    Uses s(a) = a - sum_i floor(2^i a / n) over 0 <= i < d with a reduced
    mod n.  Independent of popcount, so the two routes cross-check.
    """
    n = (1 << d) - 1
    r = a % n
    if r == 0:
        raise DomainError(f"digit sum undefined at 0 mod {n}")
    return r - sum((r << i) // n for i in range(d))


def floor_identity_check(a: int, k: int, d: int) -> bool:
    """Check the carry identity behind the rank counts:

    s(a) + s((k-1)a) - s(ka) =
        sum_i floor(2^i ka / n) - floor(2^i a / n) - floor(2^i (k-1)a / n)

    over 0 <= i < d, with a reduced mod n = 2^d - 1 and the multiples ka,
    (k-1)a left as plain integers; reducing them too would shift the sum
    by a multiple of n whenever the cyclic addition wraps.  Valid whenever
    a, (k-1)a and ka are all nonzero mod n; raises DomainError outside
    that domain.
    """
    n = (1 << d) - 1
    ra = a % n
    rb = ((k - 1) * a) % n
    rc = (k * a) % n
    if 0 in (ra, rb, rc):
        raise DomainError("identity needs a, (k-1)a and ka nonzero mod 2^d - 1")
    lhs = s(ra, d) + s(rb, d) - s(rc, d)
    b = (k - 1) * ra
    c = k * ra
    rhs = sum((c << i) // n - (ra << i) // n - (b << i) // n for i in range(d))
    return lhs == rhs


def carry_count(x: int, y: int, d: int) -> int:
    """Number of carries in the cyclic addition of x and y mod 2^d - 1.

    Equals s*(x) + s*(y) - s*(x + y); zero exactly when the reduced
    residues share no 1 bit.
    """
    return s_star(x, d) + s_star(y, d) - s_star(x + y, d)


def base_p_digit_sum(a: int, p: int) -> int:
    if p < 2:
        raise DomainError(f"need base p >= 2, got {p}")
    if a < 0:
        raise DomainError("digit sums need a nonnegative int")
    total = 0
    while a:
        total += a % p
        a //= p
    return total


def cyclotomic_cosets(n: int, base: int = 2) -> list[tuple[int, ...]]:
    """Orbits of multiplication by base on Z/n, sorted by smallest member."""
    if n < 1:
        raise DomainError(f"need modulus n >= 1, got {n}")
    if gcd(base, n) != 1:
        raise DomainError(f"base {base} is not invertible mod {n}")
    seen = bytearray(n)
    out = []
    for a in range(n):
        if seen[a]:
            continue
        orbit = []
        x = a
        while not seen[x]:
            seen[x] = 1
            orbit.append(x)
            x = (x * base) % n
        out.append(tuple(sorted(orbit)))
    return out


def coset_min(a: int, n: int, base: int = 2) -> int:
    """Smallest element of the base-cyclotomic coset of a mod n."""
    if n < 1:
        raise DomainError(f"need modulus n >= 1, got {n}")
    if gcd(base, n) != 1:
        raise DomainError(f"base {base} is not invertible mod {n}")
    a %= n
    best = a
    x = (a * base) % n
    while x != a:
        if x < best:
            best = x
        x = (x * base) % n
    return best
