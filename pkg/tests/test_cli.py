import json

import pytest

from edstrings.cli import main

T1_TEXT = "{AC,A,TGCT}{,CA}"
T2_TEXT = "{T,}{GCA,AC}"


@pytest.fixture
def pair(tmp_path):
    a = tmp_path / "a.eds"
    b = tmp_path / "b.eds"
    a.write_text(T1_TEXT)
    b.write_text(T2_TEXT)
    return str(a), str(b)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_intersect_yes(pair, capsys):
    code, out, _ = run(capsys, ["intersect", *pair])
    assert code == 0 and out.strip() == "YES"


def test_intersect_no(tmp_path, capsys):
    a = tmp_path / "a.eds"
    b = tmp_path / "b.eds"
    a.write_text("{A}")
    b.write_text("{B}")
    code, out, _ = run(capsys, ["intersect", str(a), str(b)])
    assert code == 1 and out.strip() == "NO"


def test_intersect_witness_and_count(pair, capsys):
    code, out, _ = run(capsys, ["intersect", *pair, "--witness"])
    assert code == 0 and out.startswith("YES ")
    code, out, _ = run(capsys, ["intersect", *pair, "--count"])
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, ["intersect", *pair, "--shortest"])
    assert code == 0 and out.strip() == "YES 2 AC"


def test_json_lines_schema(pair, capsys):
    code, out, _ = run(capsys, ["--json", "intersect", *pair, "--count"])
    assert code == 0
    record = json.loads(out)
    assert record == {"task": "count", "answer": True, "count": 1}
    code, out, _ = run(capsys, ["--json", "ms", *pair])
    assert json.loads(out) == {"task": "ms", "answer": True, "ms": [3, 2]}


def test_ms_plain(pair, capsys):
    code, out, _ = run(capsys, ["ms", *pair])
    assert code == 0 and out.strip() == "3 2"


def test_lcs_and_lcseq(pair, capsys):
    code, out, _ = run(capsys, ["lcs", *pair])
    assert code == 0 and out.split()[0] == "3"
    code, out, _ = run(capsys, ["lcseq", *pair])
    assert code == 0 and int(out.split()[0]) >= 2


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.eds"
    bad.write_text("{A")
    ok = tmp_path / "ok.eds"
    ok.write_text("A")
    code, _, err = run(capsys, ["intersect", str(bad), str(ok)])
    assert code == 2 and "error" in err


def test_missing_file_exit_code(tmp_path, capsys):
    ok = tmp_path / "ok.eds"
    ok.write_text("A")
    code, _, err = run(capsys, ["intersect", str(tmp_path / "nope"), str(ok)])
    assert code == 2


def test_budget_exit_code(tmp_path, capsys):
    a = tmp_path / "a.eds"
    b = tmp_path / "b.eds"
    a.write_text("{" + "a" * 11_000 + "}")
    b.write_text("{" + "b" * 11_000 + "}")
    code, _, err = run(capsys, ["lcseq", str(a), str(b)])
    assert code == 3 and "budget" in err


def test_edsm(tmp_path, capsys):
    p = tmp_path / "p.eds"
    t = tmp_path / "t.eds"
    p.write_text("{CA}")
    t.write_text(T1_TEXT)
    code, out, _ = run(capsys, ["edsm", str(p), str(t)])
    assert code == 0 and out.strip() == "YES"
    code, out, _ = run(capsys, ["edsm", str(p), str(t), "--report-ends"])
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, ["edsm", str(p), str(t), "--report-starts"])
    assert code == 0


def test_approx(pair, tmp_path, capsys):
    a = tmp_path / "x.eds"
    b = tmp_path / "y.eds"
    a.write_text("{ab}")
    b.write_text("{ac}")
    code, out, _ = run(capsys, ["approx", str(a), str(b), "--metric", "edit"])
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys,
                       ["approx", str(a), str(b), "--metric", "hamming",
                        "-k", "1"])
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, ["approx", "--match", str(a), str(b),
                                "--metric", "edit"])
    assert code == 0 and out.strip() == "1"


def test_approx_not_within_threshold(tmp_path, capsys):
    a = tmp_path / "x.eds"
    b = tmp_path / "y.eds"
    a.write_text("{aaa}")
    b.write_text("{bbb}")
    code, out, _ = run(capsys, ["approx", str(a), str(b), "--metric", "edit",
                                "-k", "2"])
    assert code == 1 and out.strip() == "NO"


def test_unary(tmp_path, capsys):
    a = tmp_path / "a.cu"
    b = tmp_path / "b.cu"
    a.write_text("1,2\n0,3\n")
    b.write_text("4\n")
    code, out, _ = run(capsys, ["unary", str(a), str(b)])
    assert code == 0 and out.strip() == "4"
    b.write_text("9\n")
    code, out, _ = run(capsys, ["unary", str(a), str(b)])
    assert code == 1 and out.strip() == "EMPTY"


def test_acronym(tmp_path, capsys):
    d = tmp_path / "dict.txt"
    d.write_text("faq\nfq\nxyz\n")
    code, out, _ = run(capsys, ["acronym", str(d), "--words", "frequently",
                                "asked", "questions"])
    assert code == 0 and out.split() == ["faq", "fq"]
    code, out, _ = run(capsys, ["acronym", str(d), "--words", "frequently",
                                "asked", "questions", "--minlens", "1,1,1"])
    assert code == 0 and out.split() == ["faq"]


def test_gen_random_deterministic(tmp_path, capsys):
    out1 = tmp_path / "one.eds"
    out2 = tmp_path / "two.eds"
    assert main(["gen", "random", "--seed", "7", "-o", str(out1)]) == 0
    assert main(["gen", "random", "--seed", "7", "-o", str(out2)]) == 0
    assert out1.read_text() == out2.read_text()
    capsys.readouterr()


def test_gen_ov(tmp_path, capsys):
    f1 = tmp_path / "t1.eds"
    f2 = tmp_path / "t2.eds"
    code = main(["gen", "ov", "--vectors", "10,01,11",
                 "--out-first", str(f1), "--out-second", str(f2)])
    assert code == 0
    assert f1.read_text().strip() == "0{0,1}{0,1}{0}{0}{0}"
    assert f2.read_text().strip() == "{00,}{0000,}{10,01,11}{00,}{0000,}"
    capsys.readouterr()
