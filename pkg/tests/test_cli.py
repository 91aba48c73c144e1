import json

import pytest

from zhualg import cli, reports


def strip_timing(obj):
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k != "elapsed"}
    if isinstance(obj, list):
        return [strip_timing(x) for x in obj]
    return obj


def test_identities_command_exit_zero(tmp_path, capsys):
    out = tmp_path / "r.json"
    code = cli.main(["identities", "--max-n", "3", "--max-n-twovar", "2",
                     "--output", str(out)])
    assert code == cli.EXIT_OK
    text = capsys.readouterr().out
    assert "[PASS] identity-suite" in text
    report = json.loads(out.read_text())
    assert report["version"] == reports.VERSION
    assert report["command"] == "identities"
    assert report["passed"] is True
    assert report["checks"][0]["name"] == "identity-suite"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-command"])
    assert exc.value.code == cli.EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == cli.EXIT_USAGE


def test_config_file_presets_flags(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"max_n": 2, "max_n_twovar": 1}))
    out = tmp_path / "r.json"
    code = cli.main(["identities", "--config", str(cfg),
                     "--output", str(out)])
    assert code == cli.EXIT_OK
    report = json.loads(out.read_text())
    assert report["config"]["max_n"] == 2
    # explicit flags win over the config file
    code = cli.main(["identities", "--config", str(cfg), "--max-n", "3",
                     "--output", str(out)])
    assert code == cli.EXIT_OK
    assert json.loads(out.read_text())["config"]["max_n"] == 3


def test_bad_config_file_is_usage_error(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text("{not json")
    with pytest.raises(SystemExit) as exc:
        cli.main(["identities", "--config", str(cfg)])
    assert exc.value.code == cli.EXIT_USAGE


def test_verma_command_level_zero(tmp_path, capsys):
    out = tmp_path / "v.json"
    code = cli.main(["verma", "--n", "0", "--output", str(out)])
    assert code == cli.EXIT_OK
    report = json.loads(out.read_text())
    names = [c["name"] for c in report["checks"]]
    assert "pairing-radical-and-quotient-module" in names
    assert "input-module-recovery" in names
    # rationals serialized as exact strings, no floats outside timing
    build = report["checks"][0]
    assert build["U_labels"] == ["|h>"]


def test_no_floats_outside_timing(tmp_path):
    out = tmp_path / "v.json"
    cli.main(["identities", "--max-n", "2", "--max-n-twovar", "1",
              "--output", str(out)])
    stripped = strip_timing(json.loads(out.read_text()))

    def scan(obj):
        if isinstance(obj, float):
            raise AssertionError("float leaked into report: %r" % obj)
        if isinstance(obj, dict):
            for v in obj.values():
                scan(v)
        elif isinstance(obj, list):
            for v in obj:
                scan(v)
    scan(stripped)


def test_report_determinism_small(tmp_path):
    outs = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        cli.main(["omega", "--h", "2/3", "--n", "0", "--weight-cap", "2",
                  "--depth-cap", "3", "--output", str(path)])
        outs.append(json.dumps(strip_timing(json.loads(path.read_text())),
                               sort_keys=False))
    assert outs[0] == outs[1]
