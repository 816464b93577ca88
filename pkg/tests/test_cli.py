import json
import subprocess
import sys

from swtorsion.cli import (generate_fixture, load_presentation, main,
                           write_presentation)


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_roundtrip_and_determinism(tmp_path, capsys):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    base = ["gen", "--g", "1", "--handles", "1", "--words", "5", "--seed", "42"]
    assert run_cli(base + ["--out", str(out1)], capsys)[0] == 0
    assert run_cli(base + ["--out", str(out2)], capsys)[0] == 0
    assert out1.read_bytes() == out2.read_bytes()
    P = load_presentation(str(out1))
    Q = generate_fixture(1, 1, 5, 42)
    assert P == Q


def test_roundtrip_preserves_name(tmp_path):
    P = generate_fixture(0, 2, 4, 7, name="fixture-7")
    path = tmp_path / "named.json"
    write_presentation(P, str(path))
    assert load_presentation(str(path)) == P
    assert json.loads(path.read_text())["name"] == "fixture-7"


def test_verify_pass_and_exit_codes(tmp_path, capsys):
    path = tmp_path / "p.json"
    run_cli(["gen", "--g", "1", "--handles", "0", "--words", "0", "--seed", "0",
             "--out", str(path)], capsys)
    code, out, _ = run_cli(["verify", str(path), "--nmax", "3"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n\tlhs\trhs\tmatch"
    assert lines[1] == "0\t1\t1\tmatch"
    assert lines[2] == "1\t0\t0\tmatch"


def test_verify_corrupted_matrix_is_input_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    doc = {"genus": 1, "handles": 0, "monodromy": [[2, 0], [0, 1]]}
    path.write_text(json.dumps(doc))
    code, _, err = run_cli(["verify", str(path), "--nmax", "2"], capsys)
    assert code == 2
    assert "symplectic" in err


def test_validate_rejects_reflection(tmp_path, capsys):
    # determinant -1 cannot preserve the intersection form
    path = tmp_path / "refl.json"
    doc = {"genus": 1, "handles": 0, "monodromy": [[1, 0], [0, -1]]}
    path.write_text(json.dumps(doc))
    code, _, err = run_cli(["validate", str(path)], capsys)
    assert code == 2
    assert "symplectic" in err


def test_validate_accepts_good_file(tmp_path, capsys):
    path = tmp_path / "ok.json"
    run_cli(["gen", "--g", "0", "--handles", "1", "--words", "3", "--seed", "5",
             "--out", str(path)], capsys)
    code, out, _ = run_cli(["validate", str(path)], capsys)
    assert code == 0 and out.strip() == "valid"


def test_malformed_json_reports_position(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"genus": 1,\n  "handles": }')
    code, _, err = run_cli(["validate", str(path)], capsys)
    assert code == 2
    assert "line 2" in err


def test_missing_field_diagnostic(tmp_path, capsys):
    path = tmp_path / "missing.json"
    path.write_text(json.dumps({"genus": 1, "handles": 0}))
    code, _, err = run_cli(["zeta", str(path), "--kmax", "2"], capsys)
    assert code == 2
    assert "monodromy" in err


def test_zeta_sphere_coefficients(tmp_path, capsys):
    path = tmp_path / "s2s1.json"
    path.write_text(json.dumps({"genus": 0, "handles": 0, "monodromy": []}))
    code, out, _ = run_cli(["zeta", str(path), "--kmax", "4"], capsys)
    assert code == 0
    rows = [line.split("\t") for line in out.strip().split("\n")[1:]]
    assert [r[1] for r in rows] == ["1", "2", "3", "4", "5"]


def test_torsion_output(tmp_path, capsys):
    path = tmp_path / "rot.json"
    path.write_text(json.dumps(
        {"genus": 0, "handles": 1, "monodromy": [[0, -1], [1, 0]]}))
    code, out, _ = run_cli(["torsion", str(path), "--kmax", "4"], capsys)
    assert code == 0
    rows = [line.split("\t") for line in out.strip().split("\n")[1:]]
    assert [r[1] for r in rows] == ["0", "-1", "0", "1", "0"]


def test_sw_table_tsv_and_json(tmp_path, capsys):
    path = tmp_path / "s2s1.json"
    path.write_text(json.dumps({"genus": 0, "handles": 0, "monodromy": []}))
    code, out, _ = run_cli(["sw", str(path), "--nmax", "2"], capsys)
    assert code == 0
    assert out.startswith("# b1=1\tmode=b1=1\n")
    code, out, _ = run_cli(["sw", str(path), "--nmax", "2", "--format", "json"],
                           capsys)
    doc = json.loads(out)
    assert doc["rows"] == [{"n": 0, "m": 2, "value": 1},
                           {"n": 1, "m": 4, "value": 2},
                           {"n": 2, "m": 6, "value": 3}]


def test_b1_command(tmp_path, capsys):
    path = tmp_path / "t3.json"
    path.write_text(json.dumps(
        {"genus": 1, "handles": 0, "monodromy": [[1, 0], [0, 1]]}))
    code, out, _ = run_cli(["b1", str(path)], capsys)
    assert code == 0 and out.strip() == "3"


def test_intersect_command(tmp_path, capsys):
    path = tmp_path / "rot.json"
    path.write_text(json.dumps(
        {"genus": 0, "handles": 1, "monodromy": [[0, -1], [1, 0]]}))
    code, out, _ = run_cli(["intersect", str(path), "--n", "1"], capsys)
    assert code == 0
    assert out.strip().split("\n")[1] == "1\t-2\t-2\tmatch"


def test_output_bytes_deterministic(tmp_path, capsys):
    path = tmp_path / "p.json"
    run_cli(["gen", "--g", "1", "--handles", "1", "--words", "6", "--seed", "9",
             "--out", str(path)], capsys)
    outs = set()
    for _ in range(2):
        code, out, _ = run_cli(["verify", str(path), "--nmax", "2"], capsys)
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "swtorsion.cli", "--help"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "swtorsion" in proc.stdout
