"""Built-in verification battery behind `hyperrank selftest`.

Each check reproduces one published fact or internal cross-check at
desk scale and prints a single ok/FAIL line.  --quick caps every sweep
at d = 15; the full run extends to the documented ranges and adds the
two transfer-matrix certifications.
"""

from __future__ import annotations

import json

from . import circulant, codes, diffset, glynn, rank2, reports, segre, seqtools
from .gf2field import make_field

A6_COLUMN = (1, 3, 5, 9, 15, 25, 41, 67, 109, 177, 287, 465)
A1_COLUMN = (1, 1, 3, 7, 13, 23, 45, 87, 167, 321, 619, 1193)
A2_COLUMN = (1, 1, 5, 7, 21, 37, 89, 173, 383, 777, 1665, 3441)
SEGRE_VALUES_9 = (1, 5, 13, 21, 53, 77, 85, 103, 167)
TRACE_COSETS_9 = (1, 5, 7, 9, 19, 25, 37, 77, 117)


def _table_columns(d_hi: int) -> bool:
    rows = {r.d: r for r in reports.table1(d_hi)}
    for j, d in enumerate(range(3, d_hi + 1, 2)):
        r = rows[d]
        if (r.a6, r.a_glynn1, r.a_glynn2) != (A6_COLUMN[j], A1_COLUMN[j], A2_COLUMN[j]):
            return False
        if r.singer_rank_complement != d:
            return False
    return True


def _table_extension() -> bool:
    rows = {r.d: r for r in reports.table1(31)}
    want = {27: (2299, 7277), 29: (4431, 15159), 31: (8541, 31885)}
    return all((rows[d].a_glynn1, rows[d].a_glynn2) == v for d, v in want.items())


def _a6_vs_sweep(d_hi: int) -> bool:
    return all(segre.b6(d) == rank2.b_count(6, d, strict=False) for d in range(2, d_hi + 1))


def _a6_recurrence() -> bool:
    return all(segre.a6(d) == segre.a6(d - 2) + segre.a6(d - 4) + 1 for d in range(6, 42))


def _glynn_vs_sweep(gtype: int, d_hi: int) -> bool:
    lo = 5 if gtype == 1 else 3
    count = glynn.glynn1_count if gtype == 1 else glynn.glynn2_count
    for d in range(lo, d_hi + 1, 2):
        k = diffset.family_exponent(f"glynn{gtype}", d)
        if count(d) != rank2.a_count(k, d):
            return False
    return True


def _certification(gtype: int, want: tuple[int, int]) -> bool:
    res = glynn.certify(gtype)
    return res.ok and (res.d_first, res.d_last) == want


def _special_solutions(d_hi: int) -> bool:
    for family in ("glynn1", "glynn2"):
        for d in range(7, d_hi + 1, 2):
            place = glynn.special_place(family, d)
            sols = glynn.special_solution_bruteforce(family, d)
            if not sols or place < 0:
                return False
    return True


def _segre_strings_9() -> bool:
    vals = sorted(int(bs.padded(9), 2) for bs in segre.segre_strings(9))
    return tuple(vals) == SEGRE_VALUES_9


def _segre_solutions_9() -> bool:
    sols = segre.segre_solutions(9)
    orbit = set()
    for v in SEGRE_VALUES_9:
        for r in range(9):
            orbit.add(((v << r) | (v >> (9 - r))) & 511)
    return len(sols) == 81 and set(sols) == orbit


def _segre_verified(d_hi: int) -> bool:
    return all(segre.verify_solutions(d) for d in range(3, d_hi + 1, 2))


def _code_dimensions(d_hi: int) -> bool:
    for d in range(3, d_hi + 1, 2):
        info = codes.code_info(d)
        n = info.n
        want = {0} | {(-5 * a) % n for a in segre.segre_solutions(d)}
        if set(info.nonzero_exponents) != want:
            return False
        if info.dimension != 1 + segre.b6(d):
            return False
    return True


def _code_9() -> bool:
    info = codes.code_info(9)
    return (
        info.n == 511
        and info.dimension == 82
        and codes.bch_run(9) == 42
        and codes.trace_criterion_exponents(9) == TRACE_COSETS_9
    )


def _sextic_9() -> bool:
    spec = make_field(9)
    solvable = 0
    for beta in range(1, 512):
        count = codes.sextic_root_count(spec, beta)
        if count not in (0, 2):
            return False
        if codes.sextic_solvable(spec, beta) != (count == 2):
            return False
        solvable += count == 2
    return solvable == 255


def _methods_agree(d_hi: int) -> bool:
    for d in range(7, d_hi + 1, 2):
        sets = [diffset.segre_set(d), diffset.glynn1_set(d), diffset.glynn2_set(d)]
        for ds in sets:
            ranks = {rank2.rank_diffset(ds, m).rank_complement for m in rank2.METHODS}
            if len(ranks) != 1:
                return False
    return True


def _singer_rank(d_hi: int) -> bool:
    for d in range(4, d_hi + 1):
        ds = diffset.singer_set(d)
        rep = rank2.rank_diffset(ds, "CirculantGcd")
        if rep.rank_complement != d or rep.rank_set != d + 1:
            return False
        if rank2.singer_rank(2, 1, d) != d + 1:
            return False
    return True


def _fourway(d_hi: int) -> bool:
    for k in range(3, 10):
        series = seqtools.expand_series(circulant.gf_series(k), d_hi)
        words = circulant.word_series(k, d_hi + 1)
        for d in range(2, d_hi + 1):
            if not (circulant.r_count(k, d) == circulant.rank_m(k, d) == words[d] == series[d]):
                return False
    return True


def _samerank(d_hi: int) -> bool:
    for d in range(3, min(d_hi, 11) + 1, 2):
        if circulant.rank_n(5, d) != circulant.rank_m(5, d):
            return False
    for k in (3, 7, 15):
        for d in range(2, d_hi + 1):
            if circulant.rank_n(k, d) != circulant.rank_m(k, d):
                return False
    return True


def _profiles() -> bool:
    for d in (3, 5, 7, 9, 11):
        if not set(circulant.root_profile(5, d)) <= {0, 1, 3}:
            return False
        if not set(circulant.root_profile(6, d)) <= {0, 2}:
            return False
    for k in (3, 7, 15):
        for d in range(2, 12):
            if any(c and c % 2 == 0 for c in circulant.root_profile(k, d)):
                return False
    return True


def _ordering(d_hi: int) -> bool:
    for row in reports.rank_ordering_report(15, d_hi):
        if not (row.ordering_ok and row.upper_ok and row.middle_ok and row.floor_ok):
            return False
        if row.golden_ok != (row.d >= 17):
            return False
    return True


def _triples(d_hi: int) -> bool:
    for d in range(7, d_hi + 1, 2):
        triples = {f: reports.c_triple(f, d) for f in ("regular", "segre", "glynn1", "glynn2")}
        if len(set(triples.values())) != 4:
            return False
    return True


def _gmw(d_hi: int) -> bool:
    for d in range(4, d_hi + 1):
        for u, v, r in reports.enumerate_gmw(d):
            ds = diffset.gmw_set(u, v, r)
            direct = rank2.circulant_gcd_rank(ds.complement_row(), ds.n)
            if direct != rank2.gmw_expected_complement_rank(u, v, r):
                return False
    return True


def _qr() -> bool:
    for d in (3, 5, 7):
        if not diffset.verify_difference_set(diffset.qr_set(d)):
            return False
    q5 = rank2.circulant_gcd_rank(diffset.qr_set(5).complement_row(), 31)
    return q5 == 5 * segre.a6(5)


def _fibonacci() -> bool:
    rep = reports.fibonacci_mod_checks()
    return (
        rep.pisano_109 == 108
        and rep.pisano_251 == 250
        and rep.residue_109_ok
        and rep.residue_251_ok
        and rep.residue_109_never_power_of_3
        and rep.residue_251_never_power_of_5
        and rep.never_seven
        and rep.never_divisible_49
    )


def _deterministic() -> bool:
    def render() -> str:
        rows = reports.table1(15)
        return json.dumps([r.__dict__ for r in rows], sort_keys=True)

    return render() == render()


def run(quick: bool = False) -> int:
    hi = 15 if quick else 25
    checks = [
        ("table rows d<=%d" % hi, lambda: _table_columns(hi)),
        ("a6 vs digit sweep", lambda: _a6_vs_sweep(15 if quick else 20)),
        ("a6 recurrence", _a6_recurrence),
        ("glynn1 vs digit sweep", lambda: _glynn_vs_sweep(1, 15 if quick else 21)),
        ("glynn2 vs digit sweep", lambda: _glynn_vs_sweep(2, 15 if quick else 21)),
        ("special solutions", lambda: _special_solutions(11 if quick else 13)),
        ("segre strings d=9", _segre_strings_9),
        ("segre solutions d=9", _segre_solutions_9),
        ("segre solutions verified", lambda: _segre_verified(13)),
        ("code nonzeros d<=13", lambda: _code_dimensions(13)),
        ("code d=9 dimensions", _code_9),
        ("sextic criterion d=9", _sextic_9),
        ("rank methods agree", lambda: _methods_agree(11 if quick else 13)),
        ("singer rank", lambda: _singer_rank(12)),
        ("count/rank/words/series", lambda: _fourway(12 if quick else 16)),
        ("support rank theorems", lambda: _samerank(10 if quick else 12)),
        ("fibre profiles", _profiles),
        ("rank ordering d=15", lambda: _ordering(15)),
        ("probe triples distinct", lambda: _triples(15 if quick else 19)),
        ("gmw ranks", lambda: _gmw(10 if quick else 12)),
        ("quadratic residue sets", _qr),
        ("fibonacci congruences", _fibonacci),
        ("deterministic output", _deterministic),
    ]
    if not quick:
        checks.insert(1, ("table extension d<=31", _table_extension))
        checks.append(("type II certification", lambda: _certification(2, (11, 267))))
        checks.append(("type I certification", lambda: _certification(1, (13, 141))))
        checks.append(("rank ordering d<=31", lambda: _ordering(31)))
    failures = 0
    for name, fn in checks:
        ok = False
        try:
            ok = fn()
        except Exception as exc:  # a crash is a failure, not an abort
            print(f"FAIL {name} ({type(exc).__name__}: {exc})")
            failures += 1
            continue
        if ok:
            print(f"ok   {name}")
        else:
            print(f"FAIL {name}")
            failures += 1
    total = len(checks)
    print(f"{total - failures}/{total} checks passed")
    return 0 if failures == 0 else 1
