import json
import subprocess
import sys

import pytest

from toromaps.cli import main
from toromaps.core import tmap
from toromaps.core.maps import iso


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_series_te(capsys):
    code, out, _ = run(["series", "--family", "Te", "--order", "9"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "edges\tcoefficient"
    assert [int(l.split("\t")[1]) for l in lines[1:]] == [1, 2, 11, 40, 166, 658, 2647, 10592]


def test_series_T_table(capsys):
    code, out, _ = run(["series", "--family", "T", "--order", "8"], capsys)
    assert code == 0
    rows = [l.split("\t") for l in out.splitlines()]
    assert rows[0][0] == "faces\\vertices"
    # row i + 1, column j + 1 holds the coefficient of z_black^i z_white^j
    assert rows[5][5] == "2047"
    assert rows[4][4] == "146"
    assert rows[9][2] == ""  # beyond the truncation


def test_enum(capsys, tmp_path):
    code, out, _ = run(["enum", "--edges", "4", "--class", "T"], capsys)
    assert code == 0
    assert out.splitlines()[1] == "4\tT\t11"
    code, out, _ = run(["enum", "--edges", "4", "--class", "T", "--group-by", "vf",
                        "--emit", str(tmp_path)], capsys)
    assert code == 0
    assert out.splitlines() == ["faces\tvertices\tcount", "2\t2\t11"]
    assert len(list(tmp_path.glob("*.tmap"))) == 11


def test_enum_cap(capsys):
    code, _, err = run(["enum", "--edges", "9"], capsys)
    assert code == 2
    assert "cap" in err


def test_psi_phi_pipeline(capsys, tmp_path, fixtures_dir):
    h_path = tmp_path / "h.tmap"
    code, out, _ = run(["psi", "--in", str(fixtures_dir / "u3.tmap"), "--out", str(h_path), "--trace"], capsys)
    assert code == 0
    steps = out.splitlines()
    assert steps[0] == "step\tleaf\tafter\tword"
    assert len(steps) == 5
    h, orient = tmap.read(h_path)
    ref, ref_orient = tmap.read(fixtures_dir / "h3.tmap")
    assert iso(h, ref) and orient == ref_orient
    u_path = tmp_path / "u.tmap"
    assert run(["phi", "--in", str(h_path), "--out", str(u_path)], capsys)[0] == 0
    u, _ = tmap.read(u_path)
    u_ref, _ = tmap.read(fixtures_dir / "u3.tmap")
    assert iso(u, u_ref, rooted=False)


def test_psi_trace_goes_to_stderr_with_stdout_output(capsys, fixtures_dir):
    code, out, err = run(["psi", "--in", str(fixtures_dir / "u3.tmap"), "--trace"], capsys)
    assert code == 0
    assert out.startswith("tmap")
    assert err.startswith("step")


@pytest.mark.parametrize(
    "cls, name, code",
    [
        ("Ubal", "u3.tmap", 0),
        ("H", "h3.tmap", 0),
        ("Q", "q8.tmap", 0),
        ("T", "theta.tmap", 0),
        ("T", "planar_loop.tmap", 1),
        ("H", "u3.tmap", 1),
    ],
)
def test_check(capsys, fixtures_dir, cls, name, code):
    got, out, _ = run(["check", "--class", cls, "--in", str(fixtures_dir / name)], capsys)
    assert got == code
    assert out.startswith("ok: in" if code == 0 else f"not in {cls}:")


def test_decompose(capsys, tmp_path, fixtures_dir):
    code, out, _ = run(["decompose", "--in", str(fixtures_dir / "q8.tmap"), "--edge", "1",
                        "--out-dir", str(tmp_path)], capsys)
    assert code == 0
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    assert manifest["marked_edge"] == 1
    h, _ = tmap.read(tmp_path / "h.tmap")
    d, _ = tmap.read(tmp_path / "d.tmap")
    assert h.genus == 1 and d.genus == 0
    assert manifest["h"]["marked_corner"] == h.root + 1


def test_decompose_bad_edge(capsys, fixtures_dir):
    code, _, err = run(["decompose", "--in", str(fixtures_dir / "q8.tmap"), "--edge", "99"], capsys)
    assert code == 2


def test_sample_is_deterministic(capsys):
    _, a, _ = run(["sample", "--leaves", "5", "--seed", "3"], capsys)
    _, b, _ = run(["sample", "--leaves", "5", "--seed", "3"], capsys)
    assert a == b and a.startswith("tmap")


def test_export(capsys, fixtures_dir):
    code, out, _ = run(["export", "--in", str(fixtures_dir / "h3.tmap"), "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["genus"] == 1 and len(data["orient"]) == data["darts"]
    code, out, _ = run(["export", "--in", str(fixtures_dir / "h3.tmap"), "--format", "dot"], capsys)
    assert code == 0
    assert out.startswith("graph map {") and "dir=" in out


def test_missing_file(capsys, tmp_path):
    code, _, err = run(["check", "--class", "H", "--in", str(tmp_path / "none.tmap")], capsys)
    assert code == 2
    assert "cannot read" in err


def test_malformed_file(capsys, tmp_path):
    bad = tmp_path / "bad.tmap"
    bad.write_text("tmap 1\ndarts 3\n")
    code, _, _ = run(["check", "--class", "H", "--in", str(bad)], capsys)
    assert code == 1


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "toromaps", "series", "--family", "Tt", "--order", "3"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0
    assert res.stdout.splitlines()[1:] == ["1\t1", "2\t10", "3\t97"]
