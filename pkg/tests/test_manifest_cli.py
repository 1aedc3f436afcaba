from __future__ import annotations

from pathlib import Path

import pytest

from clasperkit import manifest as mf
from clasperkit.cli import main
from clasperkit.corpus import curated

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def corpus_files():
    return sorted(CORPUS.glob("*.cmf"))


def test_corpus_is_complete():
    assert {p.stem for p in corpus_files()} == set(curated())


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.stem)
def test_round_trip(path):
    m = mf.load(path)
    m.validate()
    assert mf.loads(mf.dumps(m)) == m
    assert mf.dumps(m) == path.read_text(encoding="utf-8")


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.stem)
def test_corpus_matches_generator(path):
    p, spin, notes = curated()[path.stem]
    assert mf.load(path) == mf.from_presentation(p, spin, notes)


@pytest.mark.parametrize(
    "text, field",
    [
        ("label: x\n", "format"),
        ("format: 1\nword: [1, 2\n", "word"),
        ("format: 1\nstrands: two\n", "strands"),
        ("format: 1\ncolour: red\n", "colour"),
        ("format: 1\nformat: 1\n", "format"),
        ("format: 1\nmatrix: [[1, 2], [x]]\n", "matrix"),
        ("format: 1\nspin: [true]\n", "spin"),
        ("format: 1\njunk\n", "line 2"),
    ],
)
def test_parse_errors_name_the_field(text, field):
    with pytest.raises(mf.ManifestParseError, match=field):
        mf.loads(text)


@pytest.mark.parametrize(
    "text, field",
    [
        ("format: 2\nmatrix: [[1]]\n", "format"),
        ("format: 1\nmatrix: [[1]]\nstrands: 1\n", "matrix"),
        ("format: 1\nstrands: 2\nword: [1]\n", "framings"),
        ("format: 1\nstrands: 2\nword: [3]\nframings: [0]\n", "word"),
        ("format: 1\nstrands: 2\nword: [1]\nframings: [0, 0]\n", "framings"),
        ("format: 1\nmatrix: [[1, 2], [3, 4]]\n", "matrix"),
        ("format: 1\nmatrix: [[1, 2]]\n", "matrix"),
        ("format: 1\nmatrix: [[1]]\nspin: [0]\n", "spin"),
        ("format: 1\nmatrix: [[1]]\nspin: [1, 0]\n", "spin"),
    ],
)
def test_validation_errors_name_the_field(text, field):
    m = mf.loads(text)
    with pytest.raises(mf.ManifestValidationError, match=f"^{field}"):
        m.validate()


def test_comments_and_blank_lines():
    m = mf.loads("# a comment\n\nformat: 1\nmatrix: [[3]]\nnotes: keep: colons\n")
    assert m.matrix == ((3,),) and m.notes == "keep: colons"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_invariants(capsys):
    code, out, _ = run(capsys, "invariants", CORPUS / "poincare_trefoil.cmf")
    assert code == 0 and "rochlin: 8 (mod 16)" in out
    code, out, _ = run(capsys, "invariants", CORPUS / "s3.cmf")
    assert code == 0 and "H1: 0" in out and "spins: 1" in out and "rochlin: 0" in out
    code, out, _ = run(capsys, "invariants", CORPUS / "lens_5_1.cmf")
    assert "H1: Z/5" in out and "pairing: [-1/5]" in out


def test_cli_compare(capsys):
    code, out, _ = run(capsys, "compare", CORPUS / "lens_5_1.cmf", CORPUS / "hopf_2_3.cmf")
    assert code == 1 and out.strip() == "No (obstruction: torsion linking pairing)"
    code, out, _ = run(capsys, "compare", CORPUS / "s3.cmf", CORPUS / "poincare_trefoil.cmf", "--spin")
    assert code == 0 and out.strip() == "Yes"
    code, out, _ = run(capsys, "compare", CORPUS / "lens_7_1.cmf", CORPUS / "lens_7_1.cmf")
    assert code == 0 and out.strip() == "Yes"


def test_cli_compare_undecided(capsys, tmp_path):
    f = tmp_path / "big.cmf"
    f.write_text("format: 1\nmatrix: [[512]]\n")
    code, out, _ = run(capsys, "compare", f, f)
    assert code == 4 and out.startswith("Undecided")
    code, out, _ = run(capsys, "compare", f, f, "--cap-2torsion", 1024)
    assert code == 0


def test_cli_error_codes(capsys, tmp_path):
    bad = tmp_path / "bad.cmf"
    bad.write_text("format: 1\nword: [1,\n")
    code, _, err = run(capsys, "invariants", bad)
    assert code == 2 and "word" in err
    code, _, _ = run(capsys, "invariants", tmp_path / "missing.cmf")
    assert code == 2
    invalid = tmp_path / "invalid.cmf"
    invalid.write_text("format: 1\nmatrix: [[1]]\nspin: [0]\n")
    code, _, err = run(capsys, "invariants", invalid)
    assert code == 3 and "spin" in err
    code, _, err = run(capsys, "compare", CORPUS / "s3.cmf", tmp_path / "nospin.cmf")
    assert code == 2
    nospin = tmp_path / "nospin.cmf"
    nospin.write_text("format: 1\nmatrix: [[1]]\n")
    code, _, err = run(capsys, "compare", CORPUS / "s3.cmf", nospin, "--spin")
    assert code == 3 and "spin" in err
    assert main(["frobnicate"]) == 2


def test_cli_surger(capsys, tmp_path):
    out_path = tmp_path / "g.cmf"
    code, out, _ = run(capsys, "surger", CORPUS / "s3.cmf", "site=0; leaf1=empty; leaf2=empty; leaf3=empty", out_path)
    assert code == 0 and "leaf3 -> 5" in out
    m = mf.load(out_path)
    assert m.strands == 6 and m.framings == (0,) * 6 and m.spin == (0,) * 6
    code, out, _ = run(capsys, "compare", CORPUS / "s3.cmf", out_path, "--spin")
    assert code == 0 and out.strip() == "Yes"


def test_cli_surger_round_trip_on_torus(capsys, tmp_path):
    out_path = tmp_path / "t.cmf"
    code, _, _ = run(capsys, "surger", CORPUS / "borromean_torus.cmf", "site=2; leaf1=1-1@f=1; leaf2=2-3", out_path)
    assert code == 0
    code, out, _ = run(capsys, "compare", CORPUS / "borromean_torus.cmf", out_path, "--spin")
    assert code == 0 and out.strip() == "Yes"


def test_cli_surger_invalid(capsys, tmp_path):
    code, _, err = run(capsys, "surger", CORPUS / "borromean_torus.cmf", "site=0; leaf1=1-2; leaf2=2-3", tmp_path / "x.cmf")
    assert code == 3 and "leaf1 and leaf2" in err
    code, _, err = run(capsys, "surger", CORPUS / "poincare_e8.cmf", "site=0", tmp_path / "x.cmf")
    assert code == 3
    assert not (tmp_path / "x.cmf").exists()


def test_cli_proptest(capsys):
    code, out, _ = run(capsys, "proptest", "--seed", 42, "--count", 10)
    assert code == 0 and "all properties pass" in out
    code, out, _ = run(capsys, "proptest", "--count", 0)
    assert code == 0
    code, out, _ = run(capsys, "proptest", "--seed", 42, "--count", 10, "--corrupt-template")
    assert code == 1
    assert "rochlin_mod8_invariance" in out and "FAIL" in out


def test_cli_proptest_is_deterministic(capsys):
    _, a, _ = run(capsys, "proptest", "--seed", 3, "--count", 5)
    _, b, _ = run(capsys, "proptest", "--seed", 3, "--count", 5)
    assert a == b
