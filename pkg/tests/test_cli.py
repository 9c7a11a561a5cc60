import json

import pytest

from codlib.cli import main
from codlib.fileio import design_from_json, design_to_json
from conftest import make_eq3


def run(*argv):
    return main(list(argv))


@pytest.fixture
def g2_file(tmp_path):
    path = tmp_path / "g2.json"
    assert run("generate", "-m", "2", "-o", str(path)) == 0
    return path


def test_generate_and_verify(g2_file):
    assert run("verify", str(g2_file)) == 0
    assert run("verify", str(g2_file), "--numeric", "--trials", "5", "--seed", "3") == 0


def test_verify_detects_invalid(tmp_path, g2_file):
    doc = json.loads(g2_file.read_text())
    doc["entries"][0]["sign"] = "+"  # flip -z3 to +z3
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert run("verify", str(bad)) == 1


def test_malformed_file_is_exit_3(tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("{]")
    assert run("verify", str(path)) == 3


def test_usage_error_is_exit_2():
    assert run("generate") == 2
    assert run("generate", "-m", "42") == 2


def test_canonicalize_and_equivalent(tmp_path, g2_file):
    eq3_path = tmp_path / "eq3.json"
    eq3_path.write_text(design_to_json(make_eq3()))
    assert run("equivalent", str(eq3_path), str(g2_file)) == 0

    canon_a = tmp_path / "ca.json"
    canon_b = tmp_path / "cb.json"
    assert run("canonicalize", str(eq3_path), "-o", str(canon_a)) == 0
    assert run("canonicalize", str(g2_file), "-o", str(canon_b)) == 0
    assert canon_a.read_text() == canon_b.read_text()


def test_extend_even_m(tmp_path):
    out = tmp_path / "ext.json"
    assert run("extend", "-m", "2", "-o", str(out)) == 0
    design = design_from_json(out.read_text())
    assert (design.p, design.n, design.k) == (4, 4, 3)


def test_extend_odd_m_writes_certificate(tmp_path):
    cert = tmp_path / "cert.json"
    assert run("extend", "-m", "3", "--certificate", str(cert)) == 1
    assert run("verify", str(cert), "--certificate") == 0


def test_bounds(capsys):
    assert run("bounds", "-n", "6") == 0
    out = capsys.readouterr().out
    assert "rate 2/3" in out and "delay 30" in out


def test_scramble_round_trip(tmp_path, g2_file):
    scrambled = tmp_path / "s.json"
    log = tmp_path / "ops.txt"
    assert (
        run(
            "scramble",
            str(g2_file),
            "--seed",
            "7",
            "--count",
            "30",
            "-o",
            str(scrambled),
            "--log",
            str(log),
        )
        == 0
    )
    assert len(log.read_text().splitlines()) == 30
    assert run("equivalent", str(g2_file), str(scrambled)) == 0


def test_analyze(g2_file):
    assert run("analyze", str(g2_file)) == 0


def test_export_formats(tmp_path, g2_file):
    for fmt in ("json", "csv", "latex"):
        out = tmp_path / f"out.{fmt}"
        assert run("export", str(g2_file), "--format", fmt, "-o", str(out)) == 0
        assert out.read_text()
