"""Constructions of cyclic difference sets with parameters
(2^d - 1, 2^(d-1) - 1, 2^(d-2) - 1).

Four sources: images of the two-to-one maps x + x^k attached to monomial
hyperovals, hyperplanes (Singer), quadratic residues for Mersenne prime
moduli, and the GMW trace construction over a subfield tower.  Elements
of a DiffSet are field elements of GF(2^d); the exponents() view maps
them into Z/(2^d - 1) where the circulant machinery lives.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from . import gf2field as gf
from .errors import CapacityError, DomainError, NumericError
from .residue import popcount_array

MAX_SET_DEGREE = 20

FAMILIES = ("regular", "translation", "segre", "glynn1", "glynn2",
            "singer", "qr", "gmw", "monomial")


@dataclass(frozen=True)
class Provenance:
    """How a set was built: the family plus whichever parameters it takes."""

    family: str
    k: int | None = None
    i: int | None = None
    u: int | None = None
    v: int | None = None
    r: int | None = None


@dataclass(frozen=True)
class DiffSet:
    d: int
    elements: tuple[int, ...]
    provenance: Provenance

    @property
    def n(self) -> int:
        return (1 << self.d) - 1

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def params(self) -> tuple[int, int, int]:
        """(n, K, lambda) with lambda = K(K-1)/(n-1)."""
        n, k = self.n, self.size
        if n > 1 and k * (k - 1) % (n - 1) == 0:
            return (n, k, k * (k - 1) // (n - 1))
        return (n, k, -1)

    @property
    def label(self) -> str:
        p = self.provenance
        bits = [p.family]
        if p.k is not None and p.family not in ("regular", "segre"):
            bits.append(f"k={p.k}")
        if p.i is not None:
            bits.append(f"i={p.i}")
        if p.u is not None:
            bits.append(f"u={p.u} v={p.v} r={p.r}")
        bits.append(f"d={self.d}")
        return " ".join(bits)

    def exponents(self) -> tuple[int, ...]:
        """Discrete logs of the elements, sorted, as residues mod 2^d - 1."""
        table = gf.log_table(self.d)
        return tuple(sorted(int(table.log[x]) for x in self.elements))

    def row(self) -> int:
        """Bitmask of the exponents: the first row of the circulant."""
        acc = 0
        for e in self.exponents():
            acc |= 1 << e
        return acc

    def complement_row(self) -> int:
        return self.row() ^ ((1 << self.n) - 1)


def family_exponent(family: str, d: int, i: int | None = None) -> int:
    """Power-map exponent k for a monomial hyperoval family at degree d."""
    if family == "regular":
        return 2
    if family == "translation":
        if i is None:
            raise DomainError("translation family needs the exponent index i")
        if not (1 < i and 2 * i < d):
            raise DomainError(f"translation index must satisfy 1 < i < d/2, got i={i} d={d}")
        if gcd(i, d) != 1:
            raise DomainError(f"translation index must be coprime to d, got i={i} d={d}")
        return 1 << i
    if d % 2 == 0 or d < 3:
        raise DomainError(f"family {family} needs odd d >= 3, got {d}")
    if family == "segre":
        return 6
    sigma = 1 << ((d + 1) // 2)
    if family == "glynn2":
        return 3 * sigma + 4
    if family == "glynn1":
        if d % 4 == 1:
            gamma = 1 << ((3 * d + 1) // 4)
        else:
            gamma = 1 << ((d + 1) // 4)
        return sigma + gamma
    raise DomainError(f"unknown power-map family {family!r}")


def _tau_values(k: int, d: int) -> np.ndarray:
    # x + x^k over the nonzero field elements, via one pass of log tables
    table = gf.log_table(d)
    n = table.spec.n
    idx = (np.uint64(k % n) * np.arange(n, dtype=np.uint64)) % np.uint64(n)
    return table.exp ^ table.exp[idx.astype(np.int64)]


def is_monomial_hyperoval(k: int, d: int) -> bool:
    """Whether x^k gives a hyperoval: k invertible and x + x^k two-to-one."""
    if d < 2:
        raise DomainError(f"need d >= 2, got {d}")
    if d > MAX_SET_DEGREE:
        raise CapacityError(f"hyperoval checks stop at d={MAX_SET_DEGREE}")
    n = (1 << d) - 1
    if k % n in (0, 1) or gcd(k, n) != 1:
        return False
    counts = np.bincount(_tau_values(k, d), minlength=1 << d)
    # x = 0 also maps to 0, pairing with x = 1
    return bool(counts[0] == 1 and np.all((counts[1:] == 0) | (counts[1:] == 2)))


def tau_image(k: int, d: int) -> tuple[int, ...]:
    """Sorted nonzero image of x + x^k, the difference set when k is good."""
    if d > MAX_SET_DEGREE:
        raise CapacityError(f"set construction stops at d={MAX_SET_DEGREE}")
    vals = np.unique(_tau_values(k, d))
    return tuple(int(v) for v in vals if v)


def monomial_set(k: int, d: int, family: str = "monomial",
                 i: int | None = None) -> DiffSet:
    if not is_monomial_hyperoval(k, d):
        raise DomainError(f"x^{k} is not a hyperoval exponent for d={d}")
    elements = tau_image(k, d)
    if len(elements) != (1 << (d - 1)) - 1:
        raise NumericError(f"image size {len(elements)} is off for d={d}")
    return DiffSet(d, elements, Provenance(family, k=k, i=i))


def regular_set(d: int) -> DiffSet:
    return monomial_set(2, d, "regular")


def translation_set(d: int, i: int) -> DiffSet:
    return monomial_set(family_exponent("translation", d, i), d, "translation", i=i)


def segre_set(d: int) -> DiffSet:
    return monomial_set(family_exponent("segre", d), d, "segre")


def glynn1_set(d: int) -> DiffSet:
    return monomial_set(family_exponent("glynn1", d), d, "glynn1")


def glynn2_set(d: int) -> DiffSet:
    return monomial_set(family_exponent("glynn2", d), d, "glynn2")


def singer_set(d: int) -> DiffSet:
    """Nonzero elements of trace zero, a hyperplane through the origin."""
    if d < 2:
        raise DomainError(f"need d >= 2, got {d}")
    if d > MAX_SET_DEGREE:
        raise CapacityError(f"set construction stops at d={MAX_SET_DEGREE}")
    spec = gf.make_field(d)
    mask = 0
    for i in range(d):
        mask |= gf.trace(spec, 1 << i) << i
    xs = np.arange(1, 1 << d, dtype=np.uint64)
    traces = popcount_array(xs & np.uint64(mask)) & np.uint64(1)
    elements = tuple(int(x) for x in xs[traces == 0])
    if len(elements) != (1 << (d - 1)) - 1:
        raise NumericError("hyperplane has the wrong size")
    return DiffSet(d, elements, Provenance("singer"))


def qr_set(d: int) -> DiffSet:
    """Quadratic residues mod 2^d - 1, defined when that modulus is prime."""
    if d > MAX_SET_DEGREE:
        raise CapacityError(f"set construction stops at d={MAX_SET_DEGREE}")
    n = (1 << d) - 1
    if gf.prime_factors(n) != (n,):
        raise DomainError(f"2^{d} - 1 = {n} is not prime")
    table = gf.log_table(d)
    residues = sorted({pow(b, 2, n) for b in range(1, n)})
    elements = tuple(sorted(int(table.exp[a]) for a in residues))
    return DiffSet(d, elements, Provenance("qr"))


def gmw_set(u: int, v: int, r: int) -> DiffSet:
    """Trace construction over GF(2^u) <= GF(2^(uv)) with a twist exponent r.

    The set is the y with Tr_{q/2}((Tr_{q^v/q}(y))^r) = 0, q = 2^u; r must
    be invertible mod q - 1.  r = 1 recovers a hyperplane.
    """
    if u < 2 or v < 2:
        raise DomainError(f"need u >= 2 and v >= 2, got u={u} v={v}")
    d = u * v
    if d > 16:
        raise CapacityError(f"gmw construction stops at d=16, got {d}")
    q1 = (1 << u) - 1
    if r < 1 or gcd(r, q1) != 1:
        raise DomainError(f"twist r={r} is not invertible mod 2^{u} - 1")
    spec = gf.make_field(d)
    elements = []
    for y in range(1, 1 << d):
        z, t = 0, y
        for _ in range(v):
            z ^= t
            t = gf.power(spec, t, 1 << u)
        w = gf.power(spec, z, r) if z else 0
        acc, t2 = 0, w
        for _ in range(u):
            acc ^= t2
            t2 = gf.mul(spec, t2, t2)
        if acc not in (0, 1):
            raise NumericError("subfield trace left the prime field")
        if acc == 0:
            elements.append(y)
    if len(elements) != (1 << (d - 1)) - 1:
        raise NumericError("gmw set has the wrong size")
    return DiffSet(d, tuple(elements), Provenance("gmw", u=u, v=v, r=r))


def verify_difference_set(ds: DiffSet, *, max_d: int = 16) -> bool:
    """Check every nonzero ratio appears exactly lambda times.

    Quadratic in the set size; max_d caps the work.
    """
    if ds.d > max_d:
        raise CapacityError(f"verification capped at d={max_d}, got {ds.d}")
    n, k, lam = ds.params
    if lam < 0:
        return False
    ex = np.array(ds.exponents(), dtype=np.int64)
    if len(np.unique(ex)) != k:
        return False
    counts = np.zeros(n, dtype=np.int64)
    step = max(1, (1 << 22) // max(k, 1))
    for lo in range(0, k, step):
        block = (ex[lo:lo + step, None] - ex[None, :]) % n
        counts += np.bincount(block.ravel(), minlength=n)
    return bool(counts[0] == k and np.all(counts[1:] == lam))


def exponent_class(k: int, d: int) -> frozenset[int]:
    """The six exponents whose power maps give one hyperoval up to duality."""
    n = (1 << d) - 1
    k %= n
    if gcd(k, n) != 1 or gcd((k - 1) % n, n) != 1:
        raise DomainError(f"need k and k-1 invertible mod {n}")
    kinv = pow(k, -1, n)
    k1inv = pow((k - 1) % n, -1, n)
    return frozenset({
        k,
        kinv,
        (1 - k) % n,
        pow((1 - k) % n, -1, n),
        ((k - 1) * kinv) % n,
        (k * k1inv) % n,
    })


def apply_multiplier(ds: DiffSet, t: int) -> DiffSet:
    """Image of the set under x -> x^t, for t invertible mod 2^d - 1."""
    if gcd(t % ds.n, ds.n) != 1:
        raise DomainError(f"multiplier {t} is not invertible mod {ds.n}")
    spec = gf.make_field(ds.d)
    elements = tuple(sorted(gf.power(spec, x, t % ds.n) for x in ds.elements))
    return DiffSet(ds.d, elements, ds.provenance)
