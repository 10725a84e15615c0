"""Arithmetic in GF(2^d) with ints as bit-packed polynomials.

Bit i of an int is the coefficient of x^i, so 0b1011 means x^3 + x + 1.
Field elements are plain ints in range(2**d); a FieldSpec fixes the
modulus and a multiplicative generator.  Everything is deterministic:
the modulus is the smallest irreducible of its degree in this integer
encoding, the generator the smallest primitive element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import CapacityError, DomainError

MAX_DEGREE = 28
MAX_LOG_DEGREE = 24


def poly_degree(p: int) -> int:
    """Degree of a bit-packed polynomial, -1 for the zero polynomial."""
    return p.bit_length() - 1


def poly_mod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def poly_mulmod(a: int, b: int, m: int) -> int:
    dm = m.bit_length() - 1
    hi = 1 << dm
    a = poly_mod(a, m)
    b = poly_mod(b, m)
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & hi:
            a ^= m
    return r


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def _x_pow_pow2(k: int, m: int) -> int:
    # x^(2^k) mod m, by k squarings
    r = poly_mod(2, m)
    for _ in range(k):
        r = poly_mulmod(r, r, m)
    return r


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n, ascending."""
    if n < 2:
        return ()
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def is_irreducible(m: int) -> bool:
    """Rabin test for a bit-packed binary polynomial."""
    d = poly_degree(m)
    if d < 1:
        return False
    if d == 1:
        return True
    if not m & 1:
        return False  # divisible by x
    if _x_pow_pow2(d, m) != 2:
        return False
    for p in prime_factors(d):
        if poly_gcd(_x_pow_pow2(d // p, m) ^ 2, m) != 1:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A concrete GF(2^d): degree, modulus polynomial, generator element."""

    d: int
    modulus: int
    generator: int

    @property
    def order(self) -> int:
        return 1 << self.d

    @property
    def n(self) -> int:
        """Size of the multiplicative group, 2^d - 1."""
        return (1 << self.d) - 1


def mul(spec: FieldSpec, a: int, b: int) -> int:
    return poly_mulmod(a, b, spec.modulus)


def power(spec: FieldSpec, a: int, e: int) -> int:
    if e < 0:
        if a == 0:
            raise DomainError("zero has no negative powers")
        e %= spec.n
    r = 1
    a = poly_mod(a, spec.modulus)
    while e:
        if e & 1:
            r = poly_mulmod(r, a, spec.modulus)
        a = poly_mulmod(a, a, spec.modulus)
        e >>= 1
    return r


def inverse(spec: FieldSpec, a: int) -> int:
    if a == 0:
        raise DomainError("zero is not invertible")
    return power(spec, a, spec.n - 1)


def trace(spec: FieldSpec, x: int) -> int:
    """Absolute trace to GF(2): sum of the d conjugates, lands in {0, 1}."""
    acc = 0
    y = poly_mod(x, spec.modulus)
    for _ in range(spec.d):
        acc ^= y
        y = poly_mulmod(y, y, spec.modulus)
    return acc


def multiplicative_order(spec: FieldSpec, a: int) -> int:
    if a == 0:
        raise DomainError("zero has no multiplicative order")
    o = spec.n
    for p in prime_factors(spec.n):
        while o % p == 0 and power(spec, a, o // p) == 1:
            o //= p
    return o


@lru_cache(maxsize=None)
def make_field(d: int) -> FieldSpec:
    if d < 2:
        raise DomainError(f"need d >= 2, got {d}")
    if d > MAX_DEGREE:
        raise CapacityError(f"degree {d} exceeds the supported maximum {MAX_DEGREE}")
    modulus = 0
    for t in range(1, 1 << d, 2):
        cand = (1 << d) | t
        if is_irreducible(cand):
            modulus = cand
            break
    spec_no_gen = FieldSpec(d, modulus, 0)
    n = spec_no_gen.n
    for g in range(2, 1 << d):
        if multiplicative_order(spec_no_gen, g) == n:
            return FieldSpec(d, modulus, g)
    raise DomainError(f"no generator found for d={d}")  # unreachable


@dataclass(frozen=True)
class LogTable:
    """Discrete log and antilog tables for one field.

    exp[i] = g^i for 0 <= i < n; log[x] = i with g^i = x, and log[0] = -1.
    """

    spec: FieldSpec
    exp: np.ndarray
    log: np.ndarray

    def log_of(self, x: int) -> int:
        if not 0 < x < self.spec.order:
            raise DomainError(f"element {x} outside the multiplicative group")
        return int(self.log[x])


@lru_cache(maxsize=8)
def log_table(d: int) -> LogTable:
    if d > MAX_LOG_DEGREE:
        raise CapacityError(f"log tables stop at d={MAX_LOG_DEGREE}, got {d}")
    spec = make_field(d)
    g = spec.generator
    nbytes = (spec.d + 7) // 8
    # one lookup table per byte lane: value of (byte << 8*lane) * g
    lanes = [
        [poly_mulmod(b << (8 * lane), g, spec.modulus) for b in range(256)]
        for lane in range(nbytes)
    ]
    n = spec.n
    seq = [0] * n
    x = 1
    if nbytes == 1:
        (t0,) = lanes
        for i in range(n):
            seq[i] = x
            x = t0[x]
    elif nbytes == 2:
        t0, t1 = lanes
        for i in range(n):
            seq[i] = x
            x = t0[x & 255] ^ t1[x >> 8]
    else:
        for i in range(n):
            seq[i] = x
            acc = 0
            for lane in range(nbytes):
                acc ^= lanes[lane][(x >> (8 * lane)) & 255]
            x = acc
    if x != 1:
        raise DomainError(f"generator of spec d={d} does not have full order")
    exp = np.array(seq, dtype=np.int64)
    log = np.full(spec.order, -1, dtype=np.int64)
    log[exp] = np.arange(n, dtype=np.int64)
    return LogTable(spec, exp, log)
