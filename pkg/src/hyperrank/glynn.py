"""Transfer-matrix counts for the two Glynn exponent families.

A solution a of the digit equation has exactly one place where a and
(k-1)a share a 1, with a 0 immediately cyclically left of it in both.
Rotating that place to a fixed position picks one representative per
orbit, so A_k(d) counts these special solutions.  Scanning the special
solution digit by digit turns the carry bookkeeping of the additions
(k-1)a = (3 sigma + 3)a and ka = (k-1)a + a into a walk on a finite
vertex set, and A_k(d) becomes the number of closed walks of length d
through distinguished carry classes:

  type II (k = 3 sigma + 4): vertices (a', a'', a''', b', b'', c', c'')
  with bit digits a, carries b in 0..3 and c bits; 512 vertices, and
  A(d) = tr(A12 A20 A00^(d-3) A01) over the classes V0, V1, V2 cut out
  by (c', c'') = (0,0), (0,1), (1,0).

  type I (k = sigma + gamma): vertices
  (a', a'', b', b'', b''', b'''', c', c'', c''', c'''') of bits; 1024
  vertices, A(d) = tr(A12 A23 A34 A40 A00^(d-5) A01) over the classes
  V0..V4 cut out by (c', c'', c''', c'''') equal to (0,0,0,0),
  (0,0,0,1), (0,0,1,0), (0,1,0,0), (1,0,0,0).

Entries are exact Python ints throughout; powers of A00 are built one
step at a time so a whole range of d comes out of a single sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import CapacityError, DomainError
from .rank2 import MAX_DENSE_N
from .seqtools import Recurrence, certify_recurrence

_CHUNK = 1 << 21


def successors2(v: tuple[int, ...]):
    """Successor vertices of (a', a'', a''', b', b'', c', c'')."""
    a1, a2, a3, b1, b2, c1, c2 = v
    out = []
    for na3 in (0, 1):
        for nb2 in (0, 1, 2, 3):
            y = a1 + a3 + na3 + a2 + nb2 - 2 * b1
            if y not in (0, 1):
                continue
            for nc2 in (0, 1):
                if y + a1 + nc2 - 2 * c1 in (0, 1):
                    out.append((a2, a3, na3, b2, nb2, c2, nc2))
    return out


def successors1(v: tuple[int, ...]):
    """Successor vertices of (a', a'', b', b'', b''', b'''', c', ..., c'''')."""
    a1, a2, b1, b2, b3, b4, c1, c2, c3, c4 = v
    out = []
    for nb4 in (0, 1):
        z = a1 + a2 + b1 - 2 * nb4
        if z not in (0, 1):
            continue
        for na2 in (0, 1):
            for nc4 in (0, 1):
                if z + 2 * nc4 - na2 - c1 in (0, 1):
                    out.append((a2, na2, b2, b3, b4, nb4, c2, c3, c4, nc4))
    return out


@dataclass(frozen=True)
class TransferGraph:
    """Class-partitioned digraph with adjacency blocks as column lists."""

    gtype: int
    classes: tuple[tuple[tuple[int, ...], ...], ...]
    blocks: dict[str, tuple[tuple[int, ...], ...]]
    offset: int  # walk length spent outside V0: 3 for type II, 5 for type I

    def block_cycle(self) -> tuple[str, ...]:
        if self.gtype == 2:
            return ("A01", "A12", "A20")
        return ("A01", "A12", "A23", "A34", "A40")


def _vertices2():
    return [(a1, a2, a3, b1, b2, c1, c2)
            for c2 in (0, 1) for c1 in (0, 1)
            for b2 in range(4) for b1 in range(4)
            for a3 in (0, 1) for a2 in (0, 1) for a1 in (0, 1)]


def _vertices1():
    return [tuple((bits >> i) & 1 for i in range(10)) for bits in range(1 << 10)]


def _partition(vertices, class_keys, key_fn):
    classes = [[] for _ in class_keys]
    lookup = {key: i for i, key in enumerate(class_keys)}
    for v in vertices:
        i = lookup.get(key_fn(v))
        if i is not None:
            classes[i].append(v)
    return [tuple(sorted(c)) for c in classes]


def _block(src, dst, succ):
    pos = {v: j for j, v in enumerate(dst)}
    rows = []
    for v in src:
        cols = sorted(pos[w] for w in succ(v) if w in pos)
        rows.append(tuple(cols))
    return tuple(rows)


@lru_cache(maxsize=None)
def build_type2_graph() -> TransferGraph:
    vertices = _vertices2()
    classes = _partition(vertices, [(0, 0), (0, 1), (1, 0)], lambda v: (v[5], v[6]))
    v0, v1, v2 = classes
    blocks = {
        "A00": _block(v0, v0, successors2),
        "A01": _block(v0, v1, successors2),
        "A12": _block(v1, v2, successors2),
        "A20": _block(v2, v0, successors2),
    }
    return TransferGraph(2, tuple(classes), blocks, 3)


@lru_cache(maxsize=None)
def build_type1_graph() -> TransferGraph:
    vertices = _vertices1()
    keys = [(0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0)]
    classes = _partition(vertices, keys, lambda v: v[6:10])
    v0, v1, v2, v3, v4 = classes
    blocks = {
        "A00": _block(v0, v0, successors1),
        "A01": _block(v0, v1, successors1),
        "A12": _block(v1, v2, successors1),
        "A23": _block(v2, v3, successors1),
        "A34": _block(v3, v4, successors1),
        "A40": _block(v4, v0, successors1),
    }
    return TransferGraph(1, tuple(classes), blocks, 5)


def _rows_times_block(rows, block, width):
    # rows @ block, where block[v] lists the columns fed by row-index v
    out = [[0] * width for _ in rows]
    for orow, row in zip(out, rows):
        for v, x in enumerate(row):
            if x:
                for c in block[v]:
                    orow[c] += x
    return out


def _boundary_product(graph: TransferGraph):
    # A01 A12 ... back into V0: the V0 -> V0 matrix of one boundary lap
    path = (0, 1, 2, 0) if graph.gtype == 2 else (0, 1, 2, 3, 4, 0)
    names = graph.block_cycle()
    first = graph.blocks[names[0]]
    rows = [[0] * len(graph.classes[path[1]]) for _ in first]
    for row, cols in zip(rows, first):
        for c in cols:
            row[c] = 1
    for name, target in zip(names[1:], path[2:]):
        rows = _rows_times_block(rows, graph.blocks[name], len(graph.classes[target]))
    return rows


class _WalkCounter:
    """Iterates M = C A00^m one step at a time and caches traces."""

    def __init__(self, graph: TransferGraph):
        self.offset = graph.offset
        size = len(graph.classes[0])
        block = graph.blocks["A00"]
        preds = [[] for _ in range(size)]
        for v, cols in enumerate(block):
            for c in cols:
                preds[c].append(v)
        self.preds = [tuple(p) for p in preds]
        self.m = 0
        self.matrix = _boundary_product(graph)
        self.counts: dict[int, int] = {self.offset: self._trace()}

    def _trace(self) -> int:
        return sum(row[i] for i, row in enumerate(self.matrix))

    def count(self, d: int) -> int:
        while self.m < d - self.offset:
            preds = self.preds
            self.matrix = [[sum(row[v] for v in ps) for ps in preds]
                           for row in self.matrix]
            self.m += 1
            self.counts[self.m + self.offset] = self._trace()
        return self.counts[d]


@lru_cache(maxsize=None)
def _counter(gtype: int) -> _WalkCounter:
    graph = build_type2_graph() if gtype == 2 else build_type1_graph()
    return _WalkCounter(graph)


def glynn2_count(d: int) -> int:
    """A_{3 sigma + 4}(d) for odd d >= 3, by exact closed-walk counting."""
    if d < 3 or d % 2 == 0:
        raise DomainError(f"type II counts exist for odd d >= 3, got {d}")
    return _counter(2).count(d)


def glynn1_count(d: int) -> int:
    """A_{sigma + gamma}(d) for odd d >= 5 (d = 3 degenerates to k = 6)."""
    if d < 5 or d % 2 == 0:
        raise DomainError(f"type I counts exist for odd d >= 5, got {d}")
    return _counter(1).count(d)


GLYNN2_RECURRENCE = Recurrence(coeffs=(1, -1, -3, 1, 1), constant=1, start=4)
GLYNN1_RECURRENCE = Recurrence(coeffs=(1, -1, -1, -1, -1), constant=-1, start=4)


@dataclass(frozen=True)
class CertificationResult:
    gtype: int
    recurrence: Recurrence
    P: int
    Q: int
    d_first: int
    d_last: int
    ok: bool


def certify(gtype: int) -> CertificationResult:
    """Check the full recurrence window that pins the count sequence.

    The generating function of the type II counts has numerator degree
    at most 127 and denominator degree at most 128 (the V0 block is
    128 x 128), so checking the order-4 recurrence for odd d in
    [11, 267] certifies it for every odd d >= 11.  For type I the V0
    block is 64 x 64 and the window is [13, 141].
    """
    if gtype == 2:
        rec, P, Q = GLYNN2_RECURRENCE, 127, 128
        counts, first_d = glynn2_count, 3
    elif gtype == 1:
        rec, P, Q = GLYNN1_RECURRENCE, 63, 64
        counts, first_d = glynn1_count, 5
    else:
        raise DomainError(f"type must be 1 or 2, got {gtype}")
    N = max(P + rec.order + 1, Q + rec.start)
    terms = [counts(first_d + 2 * j) for j in range(N + 1)]
    ok = certify_recurrence(terms, rec, P, Q)
    return CertificationResult(gtype, rec, P, Q,
                               first_d + 2 * rec.start, first_d + 2 * N, ok)


def special_place(family: str, d: int) -> int:
    """The fixed coincidence place selecting one solution per orbit."""
    if d < 3 or d % 2 == 0:
        raise DomainError(f"need odd d >= 3, got {d}")
    if family == "glynn2":
        return (d - 1) // 2
    if family == "glynn1":
        if d % 4 == 3:
            return (d + 1) // 4
        return 3 * ((d - 1) // 4) + 1
    raise DomainError(f"special places exist for glynn1/glynn2, got {family!r}")


def special_solution_bruteforce(family: str, d: int) -> int:
    """Count special solutions directly; must equal the walk count.

    A special solution has its unique coincidence bit exactly at
    special_place(family, d), checked by raw enumeration of all
    residues in the original (unrotated) digit indexing.  This is the
    oracle for the relabelled graph construction.
    """
    from .diffset import family_exponent  # late import, diffset is heavier

    n = (1 << d) - 1
    if n > MAX_DENSE_N:
        raise CapacityError(f"brute force capped at 2^16 - 1 residues, got d={d}")
    k = family_exponent(family, d)
    place = special_place(family, d)
    left = (place + 1) % d
    pmask = np.uint64(1 << place)
    count = 0
    for lo in range(1, n, _CHUNK):
        a = np.arange(lo, min(lo + _CHUNK, n), dtype=np.uint64)
        b = (np.uint64(k - 1) * a) % np.uint64(n)
        sel = (a & b) == pmask
        sel &= (a >> np.uint64(left)) & np.uint64(1) == 0
        sel &= (b >> np.uint64(left)) & np.uint64(1) == 0
        count += int(np.count_nonzero(sel))
    return count
