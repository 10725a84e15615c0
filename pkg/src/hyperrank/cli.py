"""Command line front end.

Every successful JSON run prints one envelope object: schema_version,
command, params, field_metadata (modulus and generator of the
canonical field when a d is in play, else null) and payload.  Exit
codes: 0 success, 2 domain error, 3 capacity error, 64 usage error.
Serialization is deterministic: sorted keys, fixed indentation.
"""

from __future__ import annotations

import argparse
import csv as csvmod
import io
import json
import os
import sys
from dataclasses import asdict

from . import circulant, codes, diffset, glynn, rank2, reports, segre, seqtools
from .errors import CapacityError, DomainError, InputError
from .gf2field import make_field

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_CAPACITY = 3
EXIT_USAGE = 64

_METHOD_ALIAS = {
    "digit": "DigitCount",
    "gcd": "CirculantGcd",
    "dense": "DenseElimination",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; usage errors are 64 here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _field_metadata(d: int | None):
    if d is None:
        return None
    try:
        spec = make_field(d)
    except (DomainError, CapacityError):
        return None
    return {
        "d": spec.d,
        "modulus_hex": format(spec.modulus, "x"),
        "generator_hex": format(spec.generator, "x"),
    }


def _provenance_params(ds: diffset.DiffSet) -> dict:
    return {k: v for k, v in asdict(ds.provenance).items() if v is not None}


def _build_set(args) -> diffset.DiffSet:
    fam = args.family
    if fam == "gmw":
        if args.u is None or args.v is None or args.r is None:
            raise InputError("gmw needs --u, --v and --r")
        ds = diffset.gmw_set(args.u, args.v, args.r)
        if args.d is not None and args.d != ds.d:
            raise InputError(f"-d {args.d} disagrees with u*v = {ds.d}")
        return ds
    if args.d is None:
        raise InputError("-d is required for this family")
    if fam == "monomial":
        if args.k is None:
            raise InputError("monomial needs --k")
        return diffset.monomial_set(args.k, args.d)
    if fam == "translation":
        if args.i is None:
            raise InputError("translation needs --i")
        return diffset.translation_set(args.d, args.i)
    builders = {
        "regular": diffset.regular_set,
        "segre": diffset.segre_set,
        "glynn1": diffset.glynn1_set,
        "glynn2": diffset.glynn2_set,
        "singer": diffset.singer_set,
        "qr": diffset.qr_set,
    }
    if fam not in builders:
        raise InputError(f"unknown family {fam!r}")
    return builders[fam](args.d)


def _cmd_diffset_build(args):
    ds = _build_set(args)
    n, size, lam = ds.params
    payload = {
        "d": ds.d,
        "family": ds.provenance.family,
        "params": _provenance_params(ds),
        "n": n,
        "size": size,
        "lam": lam,
        "elements_hex": [format(e, "x") for e in ds.elements],
    }
    csv_rows = [("element_hex",)] + [(format(e, "x"),) for e in ds.elements]
    text = [ds.label, f"n={n} size={size} lam={lam}"]
    text += [format(e, "x") for e in ds.elements]
    return {"payload": payload, "d": ds.d, "csv": csv_rows, "text": text}


def _cmd_diffset_verify(args):
    ds = _build_set(args)
    ok = diffset.verify_difference_set(ds)
    n, size, lam = ds.params
    payload = {
        "d": ds.d,
        "family": ds.provenance.family,
        "params": _provenance_params(ds),
        "n": n,
        "size": size,
        "lam": lam,
        "is_difference_set": ok,
    }
    text = [f"{ds.label}: {'difference set' if ok else 'NOT a difference set'}"]
    return {"payload": payload, "d": ds.d, "text": text}


def _cmd_rank_bk(args):
    b = rank2.b_count(args.k, args.d, strict=not args.lax)
    a = b // args.d if b % args.d == 0 else None
    payload = {"k": args.k, "d": args.d, "B": b, "A": a}
    text = [f"B_{args.k}({args.d}) = {b}" + (f", A = {a}" if a is not None else "")]
    return {"payload": payload, "d": args.d, "text": text}


def _cmd_rank_diffset(args):
    with open(args.infile, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    if isinstance(obj, dict) and "payload" in obj:
        obj = obj["payload"]
    try:
        d = obj["d"]
        elements = tuple(int(h, 16) for h in obj["elements_hex"])
        prov = diffset.Provenance(**obj.get("params", {"family": obj.get("family", "monomial")}))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"unusable set file {args.infile}: {exc}") from exc
    ds = diffset.DiffSet(d, elements, prov)
    method = _METHOD_ALIAS[args.method]
    rep = rank2.rank_diffset(ds, method)
    b = rep.rank_complement
    payload = {
        "d": rep.d,
        "label": rep.label,
        "k": prov.k,
        "method": rep.method,
        "rank_set": rep.rank_set,
        "rank_complement": b,
        "B": b,
        "A": b // d if b % d == 0 else None,
    }
    text = [f"{rep.label} [{rep.method}] rank={rep.rank_set} complement={b}"]
    return {"payload": payload, "d": d, "text": text}


def _cmd_segre_strings(args):
    strings = segre.segre_strings(args.d)
    rows = [
        {
            "blocks": list(bs.blocks),
            "text": bs.text(),
            "padded": bs.padded(args.d),
            "value": int(bs.padded(args.d), 2),
        }
        for bs in strings
    ]
    payload = {"d": args.d, "count": len(rows), "strings": rows}
    csv_rows = [("blocks", "text", "padded", "value")]
    csv_rows += [("+".join(r["blocks"]), r["text"], r["padded"], r["value"]) for r in rows]
    text = [f"{r['padded']}  {r['value']}" for r in rows]
    return {"payload": payload, "d": args.d, "csv": csv_rows, "text": text}


def _cmd_segre_solutions(args):
    sols = sorted(segre.segre_solutions(args.d))
    payload = {"d": args.d, "count": len(sols), "a6": segre.a6(args.d), "solutions": sols}
    csv_rows = [("a",)] + [(a,) for a in sols]
    text = [str(a) for a in sols]
    return {"payload": payload, "d": args.d, "csv": csv_rows, "text": text}


def _glynn_counter(gtype: int, d: int) -> int:
    return glynn.glynn1_count(d) if gtype == 1 else glynn.glynn2_count(d)


def _cmd_glynn_count(args):
    c = _glynn_counter(args.gtype, args.d)
    payload = {"type": args.gtype, "d": args.d, "count": c}
    return {"payload": payload, "d": args.d, "text": [f"A({args.d}) = {c}"]}


def _cmd_glynn_certify(args):
    res = glynn.certify(args.gtype)
    payload = {
        "type": args.gtype,
        "ok": res.ok,
        "P": res.P,
        "Q": res.Q,
        "d_first": res.d_first,
        "d_last": res.d_last,
        "recurrence": {
            "order": res.recurrence.order,
            "coeffs": list(res.recurrence.coeffs),
            "constant": res.recurrence.constant,
            "start": res.recurrence.start,
        },
    }
    text = [
        f"type {args.gtype}: {'certified' if res.ok else 'FAILED'} "
        f"for odd d in [{res.d_first}, {res.d_last}]"
    ]
    return {"payload": payload, "text": text}


def _cmd_glynn_matrices(args):
    graph = glynn.build_type1_graph() if args.gtype == 1 else glynn.build_type2_graph()
    payload = {
        "type": args.gtype,
        "class_sizes": [len(c) for c in graph.classes],
        "blocks": {
            name: [list(row) for row in rows] for name, rows in sorted(graph.blocks.items())
        },
    }
    return {"payload": payload}


def _parse_terms(value: str) -> list[int]:
    if os.path.exists(value):
        with open(value, "r", encoding="utf-8") as fh:
            value = fh.read()
    parts = value.replace("\n", ",").split(",")
    try:
        return [int(p) for p in parts if p.strip()]
    except ValueError as exc:
        raise InputError(f"terms must be integers: {exc}") from exc


def _parse_recurrence(value: str) -> seqtools.Recurrence:
    if not value.lstrip().startswith("{") and os.path.exists(value):
        with open(value, "r", encoding="utf-8") as fh:
            value = fh.read()
    try:
        obj = json.loads(value)
        coeffs = tuple(int(c) for c in obj["coeffs"])
        rec = seqtools.Recurrence(coeffs, int(obj.get("constant", 0)), int(obj["start"]))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"unusable recurrence: {exc}") from exc
    if "order" in obj and obj["order"] != rec.order:
        raise InputError(
            f"stated order {obj['order']} disagrees with the "
            f"{len(coeffs)} coefficients (order {rec.order})"
        )
    return rec


def _recurrence_json(rec: seqtools.Recurrence) -> dict:
    return {
        "order": rec.order,
        "coeffs": list(rec.coeffs),
        "constant": rec.constant,
        "start": rec.start,
    }


def _cmd_seq_certify(args):
    rec = _parse_recurrence(args.rec)
    terms = _parse_terms(args.terms)
    ok = seqtools.certify_recurrence(terms, rec, args.P, args.Q)
    upto = max(args.P + rec.order + 1, args.Q + rec.start)
    payload = {
        "ok": ok,
        "P": args.P,
        "Q": args.Q,
        "recurrence": _recurrence_json(rec),
        "checked_from": rec.start,
        "checked_to": upto,
    }
    text = [f"{'certified' if ok else 'FAILED'} at n = {rec.start}..{upto}"]
    return {"payload": payload, "text": text}


def _cmd_seq_guess(args):
    terms = _parse_terms(args.terms)
    rec = seqtools.guess_recurrence(terms, args.max_order)
    payload = {"recurrence": None if rec is None else _recurrence_json(rec)}
    text = ["no recurrence found" if rec is None else repr(rec)]
    return {"payload": payload, "text": text}


def _cmd_code_info(args):
    info = codes.code_info(args.d)
    payload = {
        "d": info.d,
        "n": info.n,
        "dimension": info.dimension,
        "generator_hex": format(info.generator, "x"),
        "nonzero_exponents": list(info.nonzero_exponents),
    }
    text = [f"[{info.n}, {info.dimension}] cyclic code, {len(info.nonzero_exponents)} nonzeros"]
    return {"payload": payload, "d": args.d, "text": text}


def _cmd_code_bch(args):
    run = codes.bch_run(args.d)
    payload = {"d": args.d, "run": run, "corrects": run // 2}
    text = [f"zero run {run}: corrects {run // 2} errors"]
    return {"payload": payload, "d": args.d, "text": text}


def _cmd_code_sextic(args):
    try:
        beta = int(args.beta, 16)
    except ValueError as exc:
        raise InputError(f"--beta must be hex: {exc}") from exc
    spec = make_field(args.d)
    solvable = codes.sextic_solvable(spec, beta)
    count = codes.sextic_root_count(spec, beta)
    payload = {
        "d": args.d,
        "beta_hex": format(beta, "x"),
        "solvable": solvable,
        "root_count": count,
    }
    text = [f"x^6 + x = {format(beta, 'x')}: {count} roots"]
    return {"payload": payload, "d": args.d, "text": text}


def _cmd_circ_rank(args):
    if args.method == "count":
        rank = circulant.r_count(args.k, args.d)
    elif args.method == "gcd":
        rank = circulant.rank_m(args.k, args.d)
    else:
        row = circulant.m_row(args.k, args.d)
        rank = rank2.dense_circulant_rank(row.parity_row(), row.n)
    payload = {"k": args.k, "d": args.d, "method": args.method, "rank": rank}
    return {"payload": payload, "d": args.d, "text": [f"rank = {rank}"]}


def _cmd_circ_gfcheck(args):
    series = seqtools.expand_series(circulant.gf_series(args.k), args.dmax)
    words = circulant.word_series(args.k, args.dmax + 1)
    rows = []
    ok = True
    for d in range(2, args.dmax + 1):
        rc = circulant.r_count(args.k, d)
        agree = rc == series[d] == words[d]
        ok = ok and agree
        rows.append({"d": d, "r_count": rc, "series": series[d], "words": words[d]})
    payload = {"k": args.k, "d_max": args.dmax, "ok": ok, "rows": rows}
    csv_rows = [("d", "r_count", "series", "words")]
    csv_rows += [(r["d"], r["r_count"], r["series"], r["words"]) for r in rows]
    text = [f"k={args.k}: {'all agree' if ok else 'MISMATCH'} for d = 2..{args.dmax}"]
    return {"payload": payload, "csv": csv_rows, "text": text}


def _cmd_circ_profile(args):
    prof = circulant.root_profile(args.k, args.d)
    payload = {
        "k": args.k,
        "d": args.d,
        "profile": [[size, count] for size, count in prof.items()],
    }
    csv_rows = [("fibre_size", "targets")] + [(s, c) for s, c in prof.items()]
    text = [f"{s}: {c}" for s, c in prof.items()]
    return {"payload": payload, "d": args.d, "csv": csv_rows, "text": text}


def _cmd_report_table1(args):
    rows = reports.table1(args.dmax)
    payload = {
        "d_max": args.dmax,
        "rows": [
            {
                "d": r.d,
                "A6": r.a6,
                "AglynnI": r.a_glynn1,
                "AglynnII": r.a_glynn2,
                "singer_rank_complement": r.singer_rank_complement,
            }
            for r in rows
        ],
    }
    csv_rows = [("d", "A6", "AglynnI", "AglynnII")]
    csv_rows += [(r.d, r.a6, r.a_glynn1, r.a_glynn2) for r in rows]
    text = [f"{r.d:3d}  {r.a6:8d}  {r.a_glynn1:8d}  {r.a_glynn2:8d}" for r in rows]
    return {"payload": payload, "csv": csv_rows, "text": text}


def _cmd_report_inequiv(args):
    rep = reports.inequivalence_report(args.d)
    payload = {
        "d": rep.d,
        "ranks": [[label, rank] for label, rank in rep.ranks],
        "inconclusive": [list(group) for group in rep.inconclusive],
    }
    csv_rows = [("family", "complement_rank")] + [(l, r) for l, r in rep.ranks]
    text = [f"{l}: {r}" for l, r in rep.ranks]
    for group in rep.inconclusive:
        text.append("rank test inconclusive for: " + ", ".join(group))
    return {"payload": payload, "d": args.d, "csv": csv_rows, "text": text}


def _cmd_report_fibcheck(args):
    rep = reports.fibonacci_mod_checks()
    payload = asdict(rep)
    text = [f"{k} = {v}" for k, v in sorted(payload.items())]
    return {"payload": payload, "text": text}


def _add_format(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")


def _build_parser() -> _Parser:
    parser = _Parser(prog="hyperrank")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("diffset")
    dsub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    for name, func in (("build", _cmd_diffset_build), ("verify", _cmd_diffset_verify)):
        q = dsub.add_parser(name)
        q.add_argument("--family", required=True, choices=diffset.FAMILIES)
        q.add_argument("-d", type=int, default=None)
        q.add_argument("--k", type=int, default=None)
        q.add_argument("--i", type=int, default=None)
        q.add_argument("--u", type=int, default=None)
        q.add_argument("--v", type=int, default=None)
        q.add_argument("--r", type=int, default=None)
        _add_format(q)
        q.set_defaults(func=func, name=f"diffset {name}")

    p = sub.add_parser("rank")
    rsub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    q = rsub.add_parser("bk")
    q.add_argument("-k", type=int, required=True)
    q.add_argument("-d", type=int, required=True)
    q.add_argument("--lax", action="store_true")
    _add_format(q)
    q.set_defaults(func=_cmd_rank_bk, name="rank bk")
    q = rsub.add_parser("diffset")
    q.add_argument("--in", dest="infile", required=True)
    q.add_argument("--method", choices=tuple(_METHOD_ALIAS), default="gcd")
    _add_format(q)
    q.set_defaults(func=_cmd_rank_diffset, name="rank diffset")

    p = sub.add_parser("segre")
    ssub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    for name, func in (("strings", _cmd_segre_strings), ("solutions", _cmd_segre_solutions)):
        q = ssub.add_parser(name)
        q.add_argument("-d", type=int, required=True)
        _add_format(q)
        q.set_defaults(func=func, name=f"segre {name}")

    p = sub.add_parser("glynn")
    gsub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    q = gsub.add_parser("count")
    q.add_argument("--type", dest="gtype", type=int, choices=(1, 2), required=True)
    q.add_argument("-d", type=int, required=True)
    _add_format(q)
    q.set_defaults(func=_cmd_glynn_count, name="glynn count")
    q = gsub.add_parser("certify")
    q.add_argument("--type", dest="gtype", type=int, choices=(1, 2), required=True)
    _add_format(q)
    q.set_defaults(func=_cmd_glynn_certify, name="glynn certify")
    q = gsub.add_parser("matrices")
    q.add_argument("--type", dest="gtype", type=int, choices=(1, 2), required=True)
    _add_format(q)
    q.set_defaults(func=_cmd_glynn_matrices, name="glynn matrices")

    p = sub.add_parser("seq")
    qsub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    q = qsub.add_parser("certify")
    q.add_argument("--rec", required=True)
    q.add_argument("--terms", required=True)
    q.add_argument("--P", type=int, required=True)
    q.add_argument("--Q", type=int, required=True)
    _add_format(q)
    q.set_defaults(func=_cmd_seq_certify, name="seq certify")
    q = qsub.add_parser("guess")
    q.add_argument("--terms", required=True)
    q.add_argument("--max-order", dest="max_order", type=int, default=6)
    _add_format(q)
    q.set_defaults(func=_cmd_seq_guess, name="seq guess")

    p = sub.add_parser("code")
    csub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    q = csub.add_parser("info")
    q.add_argument("-d", type=int, required=True)
    _add_format(q)
    q.set_defaults(func=_cmd_code_info, name="code info")
    q = csub.add_parser("bch")
    q.add_argument("-d", type=int, required=True)
    _add_format(q)
    q.set_defaults(func=_cmd_code_bch, name="code bch")
    q = csub.add_parser("sextic")
    q.add_argument("-d", type=int, required=True)
    q.add_argument("--beta", required=True)
    _add_format(q)
    q.set_defaults(func=_cmd_code_sextic, name="code sextic")

    p = sub.add_parser("circ")
    csub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    q = csub.add_parser("rank")
    q.add_argument("-k", type=int, required=True)
    q.add_argument("-d", type=int, required=True)
    q.add_argument("--method", choices=("count", "gcd", "dense"), default="count")
    _add_format(q)
    q.set_defaults(func=_cmd_circ_rank, name="circ rank")
    q = csub.add_parser("gfcheck")
    q.add_argument("-k", type=int, required=True)
    q.add_argument("--dmax", type=int, default=16)
    _add_format(q)
    q.set_defaults(func=_cmd_circ_gfcheck, name="circ gfcheck")
    q = csub.add_parser("profile")
    q.add_argument("-k", type=int, required=True)
    q.add_argument("-d", type=int, required=True)
    _add_format(q)
    q.set_defaults(func=_cmd_circ_profile, name="circ profile")

    p = sub.add_parser("report")
    rsub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    q = rsub.add_parser("table1")
    q.add_argument("--dmax", type=int, default=25)
    _add_format(q)
    q.set_defaults(func=_cmd_report_table1, name="report table1")
    q = rsub.add_parser("inequiv")
    q.add_argument("-d", type=int, required=True)
    _add_format(q)
    q.set_defaults(func=_cmd_report_inequiv, name="report inequiv")
    q = rsub.add_parser("fibcheck")
    _add_format(q)
    q.set_defaults(func=_cmd_report_fibcheck, name="report fibcheck")

    q = sub.add_parser("selftest")
    q.add_argument("--quick", action="store_true")
    q.set_defaults(func=None, name="selftest")

    return parser


def _collect_params(args) -> dict:
    skip = {"func", "name", "command", "subcommand", "format"}
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in skip or value is None:
            continue
        out[key] = value
    return out


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.name == "selftest":
        from . import selftest

        return selftest.run(quick=args.quick)
    try:
        out = args.func(args)
    except (DomainError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    if args.format == "json":
        envelope = {
            "schema_version": SCHEMA_VERSION,
            "command": args.name,
            "params": _collect_params(args),
            "field_metadata": _field_metadata(out.get("d")),
            "payload": out["payload"],
        }
        print(json.dumps(envelope, indent=2, sort_keys=True))
    elif args.format == "csv":
        rows = out.get("csv")
        if rows is None:
            print("error: this command has no csv form", file=sys.stderr)
            return EXIT_DOMAIN
        buf = io.StringIO()
        writer = csvmod.writer(buf, lineterminator="\n")
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        lines = out.get("text")
        if lines is None:
            lines = [json.dumps(out["payload"], sort_keys=True)]
        for line in lines:
            print(line)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
