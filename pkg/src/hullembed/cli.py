"""Command-line front end.

    hullembed info CODE
    hullembed canon MATRIX --kind hermitian
    hullembed embed CODE --t 4 [--inner euclidean] [--append FILE] [--out FILE]
    hullembed sweep CODE [--inner hermitian] [--tsv]
    hullembed verify CODE --t 2 [--append FILE]
    hullembed reproduce table1|...|table6|all

CODE and MATRIX are files in the matrix format (field header, shape line, one
row of element encodings per line).  ``fixture:<stem>`` reads a bundled file,
e.g. ``fixture:hamming_2_3_G``.

Exit status is 0 when every requested check passes, 1 when a check fails and
2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from hullembed.codes import (
    DEFAULT_MAX_ENUM,
    LinearCode,
    classify,
    hull_dimension,
    minimum_distance,
)
from hullembed.congruence import canonize
from hullembed.embedding import (
    embed,
    embed_with_columns,
    existence_pad,
    shortest_length,
    verify_embedding,
)
from hullembed.errors import AppendRejected, HullEmbedError
from hullembed.fixtures import TABLES, data_text, reproduce_table
from hullembed.matrix import InnerKind, Matrix, format_matrix, parse_matrix


def _read(path: str) -> Matrix:
    if path.startswith("fixture:"):
        return parse_matrix(data_text(path.split(":", 1)[1]))
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def _distance(C: LinearCode, max_enum: int) -> str:
    if C.k == 0:
        return "undefined"
    if C.field.q**C.k > max_enum:
        return "skipped"
    return str(minimum_distance(C, max_enum))


def _render(pairs: Sequence[tuple[str, object]]) -> str:
    return "\n".join(f"{k}: {v}" for k, v in pairs)


def _table(header: Sequence[str], rows: Sequence[Sequence[object]], tsv: bool) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    if tsv:
        return "\n".join("\t".join(r) for r in cells)
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def cmd_info(args) -> int:
    C = LinearCode(_read(args.code))
    pairs = [
        ("field", C.field.header()),
        ("n", C.n),
        ("k", C.k),
        ("distance", _distance(C, args.max_enum)),
        ("hull euclidean", hull_dimension(C, InnerKind.EUCLIDEAN)),
    ]
    if C.field.is_hermitian:
        pairs.append(("hull hermitian", hull_dimension(C, InnerKind.HERMITIAN)))
    cls = classify(C)
    pairs.append(("type", cls.type.value))
    pairs.append(("gram form", str(cls.witness.form)))
    print(_render(pairs))
    return 0


def cmd_canon(args) -> int:
    A = _read(args.matrix)
    w = canonize(A, args.kind)
    ok = w.reconstruct() == A
    print(_render([("field", A.field.header()), ("size", A.nrows), ("form", str(w.form)),
                   ("witness check", "pass" if ok else "FAIL")]))
    print("P =")
    print(w.P)
    return 0 if ok else 1


def _embedding(args, C: LinearCode):
    if args.append:
        return embed_with_columns(C, _read(args.append), args.t, args.inner)
    return embed(C, args.t, args.inner)


def cmd_embed(args) -> int:
    C = LinearCode(_read(args.code))
    res = _embedding(args, C)
    rep = verify_embedding(C, res)
    pairs = [
        ("input", f"[{C.n},{C.k}]"),
        ("inner", args.inner.value),
        ("hull before", hull_dimension(C, args.inner)),
        ("t", res.t),
        ("s", res.s),
        ("output", f"[{res.n},{res.code.k},{_distance(res.code, args.max_enum)}]"),
        ("mode", "append" if args.append else "construct"),
        ("verification", "pass" if rep.ok else "FAIL"),
    ]
    text = format_matrix(res.code.G)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(_render(pairs))
    else:
        sys.stdout.write(text)
        print(_render(pairs), file=sys.stderr)
    if not rep.ok:
        print(rep, file=sys.stderr)
    return 0 if rep.ok else 1


def cmd_sweep(args) -> int:
    C = LinearCode(_read(args.code))
    ell = hull_dimension(C, args.inner)
    so = "HSO" if args.inner is InnerKind.HERMITIAN else "ESO"
    rows = []
    ok = True
    for t in range(C.k + 1):
        res = embed(C, t, args.inner)
        verdict = shortest_length(C, t, args.inner)
        ok &= res.s == verdict.s and hull_dimension(res.code, args.inner) == t
        tags = []
        if t == 0:
            tags.append("LCD")
        if t == C.k:
            tags.append(so)
        if t == ell:
            tags.append("original")
        rows.append([t, res.n, res.s, _distance(res.code, args.max_enum), " ".join(tags)])
    print(_table(["t", "length", "s", "d", "tags"], rows, args.tsv))
    return 0 if ok else 1


def cmd_verify(args) -> int:
    C = LinearCode(_read(args.code))
    res = _embedding(args, C)
    rep = verify_embedding(C, res)
    pad = existence_pad(C, args.t, args.inner)
    rep.add("padded reference is no shorter", pad.s >= res.s, f"padding appends {pad.s}, shortest {res.s}")
    print(rep)
    print(f"verdict: {'pass' if rep.ok else 'FAIL'}")
    return 0 if rep.ok else 1


def cmd_reproduce(args) -> int:
    names = list(TABLES) if args.name == "all" else [args.name]
    status = 0
    for name in names:
        out = reproduce_table(name)
        print(f"{name}: {out.table.title}")
        for label, ok, detail in out.preamble:
            print(f"  {'ok  ' if ok else 'FAIL'} {label}: {detail}")
        rows = []
        for r in out.rows:
            got = r.error or f"[{','.join(map(str, r.got))}]"
            rows.append([r.t, f"[G,{','.join(r.columns)}]", f"[{','.join(map(str, r.expected))}]", got,
                         "pass" if r.ok else "FAIL"])
        print(_table(["t", "generator", "printed", "computed", "status"], rows, args.tsv))
        mismatch = out.first_mismatch()
        print(f"{name}: {'pass' if mismatch is None else 'FAIL - ' + mismatch}")
        if mismatch:
            status = 1
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hullembed", description="Hull dimensions and shortest hull embeddings of linear codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def inner(p):
        p.add_argument("--inner", type=InnerKind.parse, default=InnerKind.EUCLIDEAN,
                       help="inner product: euclidean (default) or hermitian")

    def max_enum(p):
        p.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM,
                       help="largest q^k for which the minimum distance is enumerated")

    p = sub.add_parser("info", help="parameters, hull dimensions and type of a code")
    p.add_argument("code")
    max_enum(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("canon", help="congruence canonical form of a matrix")
    p.add_argument("matrix")
    p.add_argument("--kind", type=InnerKind.parse, default=InnerKind.EUCLIDEAN)
    p.set_defaults(func=cmd_canon)

    for name, func, help_ in [("embed", cmd_embed, "build a shortest t-dimensional hull embedding"),
                              ("verify", cmd_verify, "build and verify an embedding")]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("code")
        p.add_argument("--t", type=int, required=True)
        inner(p)
        p.add_argument("--append", help="matrix file whose columns are appended verbatim")
        max_enum(p)
        if name == "embed":
            p.add_argument("--out", help="write the extended generator here instead of stdout")
        p.set_defaults(func=func)

    p = sub.add_parser("sweep", help="shortest embeddings for every t")
    p.add_argument("code")
    inner(p)
    p.add_argument("--tsv", action="store_true")
    max_enum(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("reproduce", help="rebuild a bundled example table")
    p.add_argument("name", choices=[*TABLES, "all"])
    p.add_argument("--tsv", action="store_true")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except AppendRejected as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (HullEmbedError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
