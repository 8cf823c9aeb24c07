from __future__ import annotations

import subprocess
import sys

import pytest

from hullembed.cli import main
from hullembed.codes import LinearCode, minimum_distance
from hullembed.fixtures import data_text, load_generator
from hullembed.matrix import parse_matrix


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_info_hamming_2_3(capsys):
    code, out, _ = run(capsys, "info", "fixture:hamming_2_3_G")
    assert code == 0
    for line in ["n: 7", "k: 4", "distance: 3", "hull euclidean: 3", "type: Eena"]:
        assert line in out.splitlines()
    assert "hull hermitian" not in out


def test_info_hamming_4_2(capsys):
    code, out, _ = run(capsys, "info", "fixture:hamming_4_2_G")
    lines = out.splitlines()
    assert code == 0 and "hull hermitian: 2" in lines and "distance: 3" in lines


def test_info_trivial_code(tmp_path, capsys):
    f = write(tmp_path, "one.txt", "field p=2 m=1 modulus=0,1\n1 1\n1\n")
    code, out, _ = run(capsys, "info", f)
    lines = out.splitlines()
    assert code == 0 and {"n: 1", "k: 1", "distance: 1", "hull euclidean: 0"} <= set(lines)


def test_info_distance_skipped(capsys):
    code, out, _ = run(capsys, "info", "fixture:ternary_18_8_G", "--max-enum", "100")
    assert code == 0 and "distance: skipped" in out.splitlines()


def test_embed_append_table1(tmp_path, capsys):
    P = parse_matrix(data_text("hamming_4_2_P"))
    col = "\n".join(str(r[0]) for r in P.rows)
    append = write(tmp_path, "d.txt", f"{P.field.header()}\n3 1\n{col}\n")
    out_file = tmp_path / "out.txt"
    code, out, _ = run(capsys, "embed", "fixture:hamming_4_2_G", "--t", "3", "--inner", "hermitian",
                       "--append", append, "--out", str(out_file))
    assert code == 0
    assert "output: [6,3,4]" in out.splitlines()
    C = LinearCode(parse_matrix(out_file.read_text()))
    assert (C.n, C.k, minimum_distance(C)) == (6, 3, 4)


def test_embed_append_table6(tmp_path, capsys):
    P = parse_matrix(data_text("binary_15_6_P"))
    cols = [[P.field.add(P.field.add(r[0], r[1]), P.field.add(r[2], r[3])) for r in P.rows],
            [P.field.add(P.field.add(r[0], r[2]), r[3]) for r in P.rows],
            [P.field.add(P.field.add(r[1], r[2]), r[3]) for r in P.rows],
            [r[3] for r in P.rows], [r[2] for r in P.rows]]
    body = "\n".join(" ".join(str(c[i]) for c in cols) for i in range(6))
    append = write(tmp_path, "d.txt", f"{P.field.header()}\n6 5\n{body}\n")
    code, _, err = run(capsys, "embed", "fixture:binary_15_6_G", "--t", "6", "--append", append)
    assert code == 0 and "output: [20,6,8]" in err.splitlines()


def test_embed_rejects_bad_append(tmp_path, capsys):
    append = write(tmp_path, "d.txt", "field p=2 m=1 modulus=0,1\n4 1\n1\n0\n0\n0\n")
    code, _, err = run(capsys, "embed", "fixture:hamming_2_3_G", "--t", "0", "--append", append)
    assert code == 1 and "hull dimension" in err


def test_embed_at_original_hull_is_identity(capsys):
    code, out, _ = run(capsys, "embed", "fixture:hamming_2_3_G", "--t", "3")
    assert code == 0
    assert parse_matrix(out) == load_generator("table5").G


def test_embed_round_trip(tmp_path, capsys):
    target = tmp_path / "e.txt"
    run(capsys, "embed", "fixture:mds_8_4_G", "--t", "4", "--inner", "hermitian", "--out", str(target))
    first = target.read_text()
    M = parse_matrix(first)
    assert M.shape == (4, 11)
    from hullembed.matrix import format_matrix

    assert format_matrix(M) == first


def test_sweep_tables(capsys):
    code, out, _ = run(capsys, "sweep", "fixture:hamming_2_3_G", "--tsv")
    rows = [ln.split("\t") for ln in out.splitlines()[1:]]
    assert code == 0
    assert [int(r[1]) for r in rows] == [10, 9, 8, 7, 8]
    assert rows[3][4] == "original" and rows[0][4] == "LCD" and rows[4][4] == "ESO"
    code, out, _ = run(capsys, "sweep", "fixture:ternary_18_8_G", "--tsv")
    assert [int(ln.split("\t")[1]) for ln in out.splitlines()[1:]] == [24, 23, 22, 21, 20, 19, 18, 19, 20]


def test_sweep_hermitian_and_k1(tmp_path, capsys):
    code, out, _ = run(capsys, "sweep", "fixture:hamming_4_2_G", "--inner", "hermitian", "--tsv")
    assert code == 0 and out.splitlines()[-1].endswith("HSO")
    lcd = write(tmp_path, "lcd.txt", "field p=3\n1 2\n1 0\n")
    code, out, _ = run(capsys, "sweep", lcd, "--tsv")
    rows = out.splitlines()[1:]
    assert len(rows) == 2 and rows[0].endswith("LCD original") and rows[1].endswith("ESO")


def test_canon_diag_j(tmp_path, capsys):
    f = write(tmp_path, "j.txt", "field p=2\n2 2\n0 1\n1 0\n")
    code, out, _ = run(capsys, "canon", f)
    assert code == 0 and "form: EvenAlternating(r=2)" in out.splitlines()


def test_canon_hermitian(tmp_path, capsys):
    f = write(tmp_path, "h.txt", "field p=2 m=2 modulus=1,1,1\n2 2\n1 2\n3 0\n")
    code, out, _ = run(capsys, "canon", f, "--kind", "hermitian")
    assert code == 0 and "form: HermitianDiag(r=2)" in out


def test_verify_and_reproduce(capsys):
    code, out, _ = run(capsys, "verify", "fixture:binary_15_6_G", "--t", "5")
    assert code == 0 and out.rstrip().endswith("verdict: pass")
    code, out, _ = run(capsys, "reproduce", "table1")
    assert code == 0 and "table1: pass" in out
    assert "[7,3,3]" in out and "[6,3,4]" in out


def test_reproduce_all(capsys):
    code, out, _ = run(capsys, "reproduce", "all", "--tsv")
    assert code == 0
    assert sum(ln.endswith(": pass") for ln in out.splitlines()) == 6


@pytest.mark.parametrize(
    "argv",
    [
        ["info", "/nonexistent/file"],
        ["embed", "fixture:hamming_2_3_G", "--t", "9"],
        ["embed", "fixture:hamming_2_3_G", "--t", "1", "--inner", "hermitian"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_bad_file_exit_2(tmp_path, capsys):
    f = write(tmp_path, "bad.txt", "field p=2\n2 2\n1 1\n1 1\n")
    code, _, err = run(capsys, "info", f)
    assert code == 2 and "RankDeficientGenerator" in err


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["reproduce", "table9"])
    assert exc.value.code == 2


def test_byte_stable_subprocess():
    cmd = [sys.executable, "-m", "hullembed", "sweep", "fixture:quinary_9_6_G"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and b"original" in a
