"""Bundled example codes with their printed witnesses and embedding tables.

Each table row lists the appended columns as linear combinations of the
witness columns ``P1, P2, ...`` (optionally scaled by a named field element)
together with the printed ``[n, k, d]`` parameters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from hullembed.codes import CodeType, LinearCode, classify, hull_dimension, minimum_distance
from hullembed.congruence import CanonicalForm, FormTag
from hullembed.embedding import embed_with_columns
from hullembed.errors import AppendRejected, FixtureMismatch, ParseError
from hullembed.matrix import InnerKind, Matrix, gram, parse_matrix, star


@dataclass(frozen=True)
class TableRow:
    t: int
    columns: tuple[str, ...]
    params: tuple[int, int, int]


@dataclass(frozen=True)
class Table:
    name: str
    title: str
    stem: str
    kind: InnerKind
    hull: int
    params: tuple[int, int, int]
    canon: tuple[FormTag, int]
    negate: bool
    rows: tuple[TableRow, ...]
    code_type: CodeType | None = None
    symbols: dict[str, int] = field(default_factory=dict)


def _rows(*entries) -> tuple[TableRow, ...]:
    return tuple(TableRow(t, tuple(cols.split()), params) for t, cols, params in entries)


E, H = InnerKind.EUCLIDEAN, InnerKind.HERMITIAN

TABLES: dict[str, Table] = {
    t.name: t
    for t in [
        Table(
            "table1", "Hermitian embeddings of the [5,3,3]_4 Hamming code", "hamming_4_2", H, 2, (5, 3, 3),
            (FormTag.HERMITIAN_DIAG, 1), False,
            _rows((0, "P2 P3", (7, 3, 3)), (1, "P3", (6, 3, 3)), (3, "P1", (6, 3, 4))),
        ),
        Table(
            "table2", "Hermitian embeddings of an [8,4,5]_9 MDS code", "mds_8_4", H, 1, (8, 4, 5),
            (FormTag.HERMITIAN_DIAG, 3), False,
            _rows(
                (0, "P4", (9, 4, 5)),
                (2, "w*P1", (9, 4, 5)),
                (3, "w*P1 w*P2", (10, 4, 5)),
                (4, "w*P1 w*P2 w*P3", (11, 4, 6)),
            ),
            symbols={"w": 3},
        ),
        Table(
            "table3", "Euclidean embeddings of an [18,8,7]_3 code", "ternary_18_8", E, 6, (18, 8, 7),
            (FormTag.ODD_SQUARE, 2), True,
            _rows(
                (0, "P3 P4 P5 P6 P7 P8", (24, 8, 7)),
                (1, "P4 P5 P6 P7 P8", (23, 8, 7)),
                (2, "P5 P6 P7 P8", (22, 8, 7)),
                (3, "P6 P7 P8", (21, 8, 7)),
                (4, "P7 P8", (20, 8, 7)),
                (5, "P8", (19, 8, 7)),
                (7, "P1", (19, 8, 8)),
                (8, "P1 P2", (20, 8, 9)),
            ),
            code_type=CodeType.EOS,
        ),
        Table(
            "table4", "Euclidean embeddings of a [9,6,3]_5 code", "quinary_9_6", E, 2, (9, 6, 3),
            (FormTag.ODD_NONSQUARE, 4), True,
            _rows(
                (0, "P5 P6", (11, 6, 3)),
                (1, "P6", (10, 6, 3)),
                (3, "P1", (10, 6, 3)),
                (4, "P1 P2", (11, 6, 4)),
                (5, "P1 P2 P3", (12, 6, 4)),
                (6, "P1 P2 P3 P4 P4", (14, 6, 6)),
            ),
            code_type=CodeType.EONS,
        ),
        Table(
            "table5", "Euclidean embeddings of the [7,4,3]_2 Hamming code", "hamming_2_3", E, 3, (7, 4, 3),
            (FormTag.EVEN_IDENTITY, 1), False,
            _rows((0, "P2 P3 P4", (10, 4, 3)), (1, "P3 P4", (9, 4, 3)), (2, "P4", (8, 4, 3)), (4, "P1", (8, 4, 4))),
            code_type=CodeType.EENA,
        ),
        Table(
            "table6", "Euclidean embeddings of a [15,6,6]_2 code", "binary_15_6", E, 2, (15, 6, 6),
            (FormTag.EVEN_ALTERNATING, 4), False,
            _rows(
                (0, "P5 P6", (17, 6, 6)),
                (1, "P6", (16, 6, 6)),
                (3, "P1 P2", (17, 6, 6)),
                (4, "P1+P2 P1 P2", (18, 6, 6)),
                (5, "P2+P3 P1+P3 P1+P2+P3 P4", (19, 6, 7)),
                (6, "P1+P2+P3+P4 P1+P3+P4 P2+P3+P4 P4 P3", (20, 6, 8)),
            ),
            code_type=CodeType.EEA,
        ),
    ]
}


def data_text(stem: str) -> str:
    return resources.files("hullembed.data").joinpath(f"{stem}.txt").read_text(encoding="utf-8")


def load_generator(table: Table | str) -> LinearCode:
    table = TABLES[table] if isinstance(table, str) else table
    return LinearCode(parse_matrix(data_text(f"{table.stem}_G")))


def load_witness(table: Table | str) -> Matrix:
    table = TABLES[table] if isinstance(table, str) else table
    return parse_matrix(data_text(f"{table.stem}_P"))


def column_from_recipe(P: Matrix, recipe: str, symbols: dict[str, int] | None = None) -> list[int]:
    """Evaluate a recipe such as ``P1+P3`` or ``w*P2`` against the columns of ``P``."""
    f = P.field
    symbols = symbols or {}
    acc = [0] * P.nrows
    for term in recipe.split("+"):
        coeff_txt, star_sep, col_txt = term.strip().rpartition("*")
        coeff = 1
        if star_sep:
            coeff = symbols[coeff_txt] if coeff_txt in symbols else int(coeff_txt)
        if not col_txt.startswith("P"):
            raise ParseError(f"bad column recipe {recipe!r}")
        j = int(col_txt[1:]) - 1
        if not 0 <= j < P.ncols:
            raise ParseError(f"column {col_txt} out of range")
        acc = f.axpy(coeff, P.col(j), acc)
    return acc


def appended_block(table: Table, row: TableRow, P: Matrix) -> Matrix:
    cols = [column_from_recipe(P, c, table.symbols) for c in row.columns]
    return Matrix.from_columns(P.field, cols, P.nrows)


@dataclass
class RowOutcome:
    t: int
    columns: tuple[str, ...]
    expected: tuple[int, int, int]
    got: tuple[int, int, int] | None
    achieved_t: int | None
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error and self.got == self.expected and self.achieved_t == self.t


@dataclass
class TableOutcome:
    table: Table
    preamble: list[tuple[str, bool, str]]
    rows: list[RowOutcome]

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.preamble) and all(r.ok for r in self.rows)

    def first_mismatch(self) -> str | None:
        for name, ok, detail in self.preamble:
            if not ok:
                return f"{self.table.name}: {name} ({detail})"
        for r in self.rows:
            if not r.ok:
                got = r.error or f"[{','.join(map(str, r.got))}] with t={r.achieved_t}"
                return f"{self.table.name} row t={r.t}: expected [{','.join(map(str, r.expected))}], got {got}"
        return None


def reproduce_table(name: str) -> TableOutcome:
    """Rebuild every row of a bundled table by appending the printed columns verbatim."""
    if name not in TABLES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(TABLES)}")
    table = TABLES[name]
    C = load_generator(table)
    P = load_witness(table)
    f = C.field

    pre = []
    d = minimum_distance(C)
    pre.append(("original parameters", (C.n, C.k, d) == table.params, f"[{C.n},{C.k},{d}]"))
    ell = hull_dimension(C, table.kind)
    pre.append(("hull dimension", ell == table.hull, f"{ell}"))
    tag, r = table.canon
    z = f.canonical_nonsquare() if tag is FormTag.ODD_NONSQUARE else None
    target = gram(C.G, table.kind)
    if table.negate:
        target = -target
    canon = CanonicalForm(tag, r, z).materialize(f, C.k)
    pre.append(("printed witness congruence", P @ canon @ star(P, table.kind) == target, str(CanonicalForm(tag, r, z))))
    if table.code_type is not None:
        got_type = classify(C).type
        pre.append(("code type", got_type is table.code_type, got_type.value))

    outcomes = []
    for row in table.rows:
        D = appended_block(table, row, P)
        try:
            res = embed_with_columns(C, D, row.t, table.kind)
        except AppendRejected as exc:
            outcomes.append(RowOutcome(row.t, row.columns, row.params, None, None, str(exc)))
            continue
        got = (res.code.n, res.code.k, minimum_distance(res.code))
        outcomes.append(RowOutcome(row.t, row.columns, row.params, got, hull_dimension(res.code, table.kind)))
    return TableOutcome(table, pre, outcomes)


def check_table(name: str) -> TableOutcome:
    """Like :func:`reproduce_table` but raises :class:`FixtureMismatch` on the first differing cell."""
    out = reproduce_table(name)
    msg = out.first_mismatch()
    if msg:
        raise FixtureMismatch(msg)
    return out
