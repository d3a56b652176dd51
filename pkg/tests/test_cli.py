import json
import os

import pytest

from weyltiles.cli import _attach_negative_values, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "--type", "G2")
    doc = json.loads(out)
    assert code == 0 and doc["weyl_order"] == 12 and doc["regular_count"] == 5
    assert doc["dual_coxeter"] == 4


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--type", "B2")
    doc = json.loads(out)
    assert code == 0 and doc["order"] == 8 and doc["regular_count"] == 3
    assert sorted(e["det_id_minus"] for e in doc["elements"] if e["regular"]) == [2, 2, 4]


def test_locate_with_negative_point(capsys):
    code, out, _ = run(capsys, "locate", "--type", "B2", "--point", "-5/3,7/11")
    doc = json.loads(out)
    assert code == 0 and doc["contains_check"] is True and doc["tile_dim"] == 2


def test_locate_deformed(capsys):
    code, out, _ = run(capsys, "locate", "--type", "A2", "--point", "1/11,1/13",
                       "--deform", "1/2,0;0,1/2")
    doc = json.loads(out)
    assert code == 0 and doc["open"] is not None and doc["certificate"]


def test_deform_exit_codes(capsys):
    code, out, _ = run(capsys, "deform", "--type", "A1", "--S", "1/2")
    assert code == 0 and json.loads(out)["identity_holds"]
    code, out, _ = run(capsys, "deform", "--type", "A1", "--S", "3")
    doc = json.loads(out)
    assert code == 1 and doc["sum_abs_det"] == 6 and doc["admissible"] is False


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A2", "--suite", "partition", "--samples", "50",
                       "--seed", "3")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and doc["suite"] == "partition"


def test_render_to_file(tmp_path, capsys):
    path = tmp_path / "g2.svg"
    code, _, _ = run(capsys, "render", "--type", "G2", "--mode", "X", "--window", "-2:2",
                     "--out", str(path))
    assert code == 0 and path.read_text().lstrip().startswith("<?xml")


@pytest.mark.parametrize("argv", [
    ["info", "--type", "F5"],
    ["render", "--type", "A3"],
    ["render", "--type", "A2", "--window", "3:1"],
    ["locate", "--type", "A2", "--point", "1/2"],
    ["locate", "--type", "A2", "--point", "a,b"],
    ["locate", "--type", "A2"],
    ["verify", "--type", "A3", "--suite", "gluing"],
    ["verify", "--type", "A2", "--suite", "nope"],
    ["deform", "--type", "A2", "--S", "1,2"],
    ["info"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2


def test_unwritable_output(capsys):
    target = "/proc/definitely/not/here.svg"
    assert not os.path.exists(os.path.dirname(target))
    assert main(["render", "--type", "A2", "--out", target]) == 2


def test_negative_argument_rewrite():
    assert _attach_negative_values(["render", "--window", "-3:3"]) == ["render", "--window=-3:3"]
    assert _attach_negative_values(["--point", "-1,2", "--type", "A2"]) == ["--point=-1,2", "--type", "A2"]


def test_module_entry_point():
    import subprocess
    import sys
    r = subprocess.run([sys.executable, "-m", "weyltiles", "info", "--type", "A1"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["weyl_order"] == 2
