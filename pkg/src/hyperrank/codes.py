"""The binary cyclic code carried by the k = 6 set.

The set's characteristic polynomial theta has coefficient j equal to 1
exactly when generator^j lies in the set.  Its gcd with x^n - 1
generates a cyclic code whose dimension is one more than the
complement 2-rank, and whose nonzeros are 1 together with the powers
alpha^(-5a) over the digit-equation solutions a.  That last fact turns
into a trace test for solvability of x^6 + x = beta.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import gf2field as gf
from .diffset import DiffSet, tau_image
from .errors import CapacityError, DomainError, NumericError
from .gf2field import FieldSpec, log_table, make_field, poly_degree, poly_gcd
from .residue import coset_min, cyclotomic_cosets
from .segre import b6, segre_solutions

MAX_CODE_DEGREE = 20


def theta_poly(elements, d: int | None = None) -> int:
    """Characteristic polynomial of a set of field elements, as a bitmask.

    Accepts a DiffSet or any iterable of nonzero field elements plus d.
    """
    if isinstance(elements, DiffSet):
        d = elements.d
        elements = elements.elements
    if d is None:
        raise DomainError("need d when not passing a DiffSet")
    if d > MAX_CODE_DEGREE:
        raise CapacityError(f"theta capped at d={MAX_CODE_DEGREE}, got {d}")
    logs = log_table(d)
    theta = 0
    for e in elements:
        theta |= 1 << logs.log_of(e)
    return theta


@dataclass(frozen=True)
class CyclicCodeInfo:
    d: int
    n: int
    generator: int
    dimension: int
    nonzero_exponents: tuple[int, ...]


def _poly_value_is_zero(poly: int, u: int, d: int) -> bool:
    # evaluate the GF(2) polynomial at generator^u through the log table
    logs = log_table(d)
    n = (1 << d) - 1
    acc = 0
    j = 0
    while poly:
        if poly & 1:
            acc ^= int(logs.exp[(j * u) % n])
        poly >>= 1
        j += 1
    return acc == 0


@lru_cache(maxsize=None)
def code_info(d: int) -> CyclicCodeInfo:
    """Generator, dimension and nonzeros of the code of the k = 6 set."""
    if d < 3 or d % 2 == 0:
        raise DomainError(f"the k=6 set needs odd d >= 3, got {d}")
    if d > MAX_CODE_DEGREE:
        raise CapacityError(f"code info capped at d={MAX_CODE_DEGREE}, got {d}")
    n = (1 << d) - 1
    theta = theta_poly(tau_image(6, d), d)
    gen = poly_gcd((1 << n) | 1, theta)
    dim = n - poly_degree(gen)
    if dim != 1 + b6(d):
        raise NumericError(f"dimension {dim} disagrees with 1 + B_6({d})")
    nonzero: list[int] = []
    for coset in cyclotomic_cosets(n):
        if not _poly_value_is_zero(gen, coset[0], d):
            nonzero.extend(coset)
    return CyclicCodeInfo(d, n, gen, dim, tuple(sorted(nonzero)))


def bch_run(d: int) -> int:
    """Length of the run of consecutive zeros alpha^1, alpha^2, ...

    A run of t consecutive zero exponents bounds the minimum distance
    below by t + 1, so the code corrects floor(t/2) errors.
    """
    info = code_info(d)
    nonzero = set(info.nonzero_exponents)
    t = 0
    while (t + 1) % info.n not in nonzero and t < info.n:
        t += 1
    return t


@lru_cache(maxsize=None)
def trace_criterion_exponents(d: int) -> tuple[int, ...]:
    """Coset minima of 5a over the digit-equation solutions a, sorted."""
    n = (1 << d) - 1
    return tuple(sorted({coset_min(5 * a % n, n) for a in segre_solutions(d)}))


def sextic_solvable(spec: FieldSpec, beta: int) -> bool:
    """Whether x^6 + x = beta has roots, by the trace criterion.

    True iff Tr(sum of beta^e over the criterion exponents e) = 0;
    exactly the beta in the image of x + x^6 pass.
    """
    if not 0 < beta < (1 << spec.d):
        raise DomainError(f"beta must be a nonzero field element, got {beta}")
    total = 0
    for e in trace_criterion_exponents(spec.d):
        total ^= gf.power(spec, beta, e)
    return gf.trace(spec, total) == 0


@lru_cache(maxsize=None)
def _tau6_counts(spec: FieldSpec) -> tuple[int, ...]:
    counts = [0] * (1 << spec.d)
    for x in range(1 << spec.d):
        counts[gf.power(spec, x, 6) ^ x] += 1
    return tuple(counts)


def sextic_root_count(spec: FieldSpec, beta: int) -> int:
    """Number of roots of x^6 + x = beta, counted exhaustively."""
    if spec.d > 16:
        raise CapacityError(f"root counting capped at d=16, got {spec.d}")
    if not 0 <= beta < (1 << spec.d):
        raise DomainError(f"beta out of range, got {beta}")
    return _tau6_counts(spec)[beta]


@lru_cache(maxsize=None)
def _tau2_counts(spec: FieldSpec) -> tuple[int, ...]:
    counts = [0] * (1 << spec.d)
    for x in range(1 << spec.d):
        counts[gf.power(spec, x, 2) ^ x] += 1
    return tuple(counts)


def quadratic_root_count(spec: FieldSpec, beta: int) -> int:
    """Number of roots of x^2 + x = beta; 2 iff Tr(beta) = 0."""
    if spec.d > 16:
        raise CapacityError(f"root counting capped at d=16, got {spec.d}")
    if not 0 <= beta < (1 << spec.d):
        raise DomainError(f"beta out of range, got {beta}")
    return _tau2_counts(spec)[beta]


def make_code_field(d: int) -> FieldSpec:
    """The canonical field the code layer works over."""
    return make_field(d)
