"""Solution strings for the k = 6 digit equation, and Fibonacci counts.

For odd d the residues a solving s(a) + s(5a) = s(6a) + 1 are exactly
the rotations of length-d words built from the blocks 01, 0011, 00111,
subject to two restrictions: a word shorter than d (to be zero-padded)
must end in 01 and avoid 00111 entirely, while a word of full length d
carries exactly one 00111, at the right end.  Counting the words gives
A_6(d) = 2F_{(d-1)/2} - 1 with F_0 = F_1 = 1; the even-d count
F_{d/2} - 1 has no string model here and is checked against b_count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, NumericError
from .residue import s

BLOCKS = ("01", "0011", "00111")


def fibonacci(m: int) -> int:
    """F_m with the F_0 = F_1 = 1 convention."""
    if m < 0:
        raise DomainError(f"need m >= 0, got {m}")
    a, b = 1, 1
    for _ in range(m):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class BlockString:
    blocks: tuple[str, ...]
    total_length: int

    def __post_init__(self) -> None:
        bad = [b for b in self.blocks if b not in BLOCKS]
        if bad:
            raise DomainError(f"unknown blocks {bad}")
        if self.total_length != sum(len(b) for b in self.blocks):
            raise DomainError("total_length does not match the blocks")

    def text(self) -> str:
        return "".join(self.blocks)

    def padded(self, d: int) -> str:
        """The string left-padded with zeros to length d."""
        if self.total_length > d:
            raise DomainError(f"string of length {self.total_length} will not fit d={d}")
        return "0" * (d - self.total_length) + self.text()


def _compositions(total: int) -> list[tuple[str, ...]]:
    # all block tuples over {01, 0011} of the given total length
    if total == 0:
        return [()]
    out = []
    for block in ("01", "0011"):
        if len(block) <= total:
            out.extend(head + (block,) for head in _compositions(total - len(block)))
    return out


@lru_cache(maxsize=None)
def segre_strings(d: int) -> tuple[BlockString, ...]:
    """All block strings for degree d, ordered by (length, text).

    Short strings end in 01 and use only 01/0011; the full-length ones
    end in the single allowed 00111.  Both rules come from normalizing
    each rotation orbit of solutions to a canonical representative.
    """
    if d < 3 or d % 2 == 0:
        raise DomainError(f"block strings exist for odd d >= 3 only, got {d}")
    found: dict[str, BlockString] = {}
    for length in range(2, d, 2):
        for head in _compositions(length - 2):
            bs = BlockString(head + ("01",), length)
            found[bs.text()] = bs
    for head in _compositions(d - 5):
        bs = BlockString(head + ("00111",), d)
        found[bs.text()] = bs
    return tuple(sorted(found.values(), key=lambda b: (b.total_length, b.text())))


@lru_cache(maxsize=None)
def segre_solutions(d: int) -> tuple[int, ...]:
    """Every a with 0 < a < 2^d - 1 and s(a) + s(5a) = s(6a) + 1, sorted.

    Expands each block string to its full rotation orbit.  The orbits
    are provably of size d and pairwise disjoint, so any collision is a
    construction bug and raises rather than deduplicates.
    """
    strings = segre_strings(d)
    mask = (1 << d) - 1
    seen: set[int] = set()
    for bs in strings:
        base = int(bs.padded(d), 2)
        orbit = {((base << i) | (base >> (d - i))) & mask if i else base for i in range(d)}
        if len(orbit) != d:
            raise NumericError(f"rotation orbit of {bs.text()} collapsed at d={d}")
        if orbit & seen:
            raise NumericError(f"rotation orbits overlap at d={d}")
        seen |= orbit
    return tuple(sorted(seen))


def a6(d: int) -> int:
    """A_6(d) in closed form; equals b_count(6, d) / d for all d >= 2."""
    if d < 2:
        raise DomainError(f"need d >= 2, got {d}")
    if d % 2:
        return 2 * fibonacci((d - 1) // 2) - 1
    return fibonacci(d // 2) - 1


def b6(d: int) -> int:
    """B_6(d) = d * A_6(d)."""
    return d * a6(d)


def _check_solution(a: int, d: int) -> bool:
    n = (1 << d) - 1
    return s(a, d) + s(5 * a % n, d) == s(6 * a % n, d) + 1


def verify_solutions(d: int) -> int:
    """Recheck every enumerated solution against the digit equation."""
    sols = segre_solutions(d)
    for a in sols:
        if not _check_solution(a, d):
            raise NumericError(f"enumerated a={a} fails the digit equation at d={d}")
    return len(sols)
