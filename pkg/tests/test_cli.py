import json

import pytest

from quasimaps.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_series_elliptic(capsys):
    code, out, _ = run(capsys, "series", "elliptic-generators", "--order", "3")
    assert code == 0
    terms = json.loads(out)["series"]["L"]["terms"]
    assert [t["val"] for t in terms] == ["1/1*w^0", "9/1*w^0", "162/1*w^0", "3402/1*w^0"]


def test_csv(capsys):
    code, out, _ = run(capsys, "series", "local-L", "--fixed-point", "0,0", "--order", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1] == "L,0,1/1*w^0"


def test_usage_errors(capsys):
    assert run(capsys, "series", "elliptic-generators", "--preset", "nope")[0] == 2
    assert run(capsys, "verify", "nosuch")[0] == 2
    assert run(capsys, "series", "local-L", "--fixed-point", "5,5")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "series", "elliptic-generators", "--order", "0")[0] == 2


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# settings\norder = 2\nformat = csv\n")
    code, out, _ = run(capsys, "series", "elliptic-generators", "--config", str(cfg))
    assert code == 0 and out.startswith("name,")
    code, out, _ = run(capsys, "series", "elliptic-generators", "--config", str(cfg), "--format", "json")
    assert json.loads(out)["config"]["order"] == 2
    cfg.write_text("colour = blue\n")
    assert run(capsys, "series", "modular", "--config", str(cfg))[0] == 2


def test_verify_and_fixture(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert run(capsys, "verify", "d-closure", "root-symmetry", "-o", str(out))[0] == 0
    first = out.read_bytes()
    assert run(capsys, "verify", "d-closure", "root-symmetry", "-o", str(out))[0] == 0
    assert out.read_bytes() == first
    fx = tmp_path / "m.json"
    assert run(capsys, "series", "modular", "--order", "5", "-o", str(fx))[0] == 0
    assert run(capsys, "verify", "fixture", "--fixture", str(fx))[0] == 0
    fx.write_text(fx.read_text().replace('"-24/1*w^0"', '"-23/1*w^0"'))
    code, _, err = run(capsys, "verify", "fixture", "--fixture", str(fx))
    assert code == 1 and "first mismatch" in err and '"exp": [1, 0]' in err


def test_fit_exit_codes(capsys):
    assert run(capsys, "fit", "a1", "--basis", "r", "--order", "24")[0] == 0
    assert run(capsys, "fit", "L", "--basis", "one", "--order", "12")[0] == 1
    code, out, _ = run(capsys, "fit", "R0", "--basis", "G", "--slice", "1", "--order", "24")
    assert code == 0 and json.loads(out)["result"]["status"] == "ok"


def test_export(capsys):
    code, out, _ = run(capsys, "export", "e-surface-32", "--trunc", "3,0")
    data = json.loads(out)
    assert code == 0 and "G5" in data["series"]
