import json
import subprocess
import sys

import pytest

from linkhom.algebra import LaurentPoly, TriGradedSeries
from linkhom.cli import RunConfig, laurent_from_json, main, run


def test_jones_text():
    code, out = run(RunConfig("jones", "2: 1 1"))
    assert code == 0
    assert out == "1 + v^2 + v^4 + v^6"


def test_jones_json_round_trips():
    code, out = run(RunConfig("jones", "2: 1 1 1", output="json"))
    data = json.loads(out)
    assert laurent_from_json(data["result"]) == LaurentPoly.parse("v + v^3 + v^5 - v^9")


def test_kr_json_matches_unknot_series():
    code, out = run(RunConfig("kr", "1:", cutoff=6, output="json"))
    assert code == 0
    data = json.loads(out)
    series = TriGradedSeries.from_json(json.dumps(data["result"]["series"]))
    assert series.coefficient(-1, -1, 0) == 1
    assert series.coefficient(-1, 1, 2) == 1
    assert series.coefficient(-1, -1, 6) == 1
    assert series.cutoff == 6


def test_homfly_and_wrt():
    code, out = run(RunConfig("wrt", "1:", k=3))
    assert (code, out) == (0, "v^-2 + 1 + v^2")
    code, out = run(RunConfig("wrt", "1:", k=3, eta=1))
    assert out == "v^-2 + 1 + v^2"
    code, out = run(RunConfig("homfly", "1:", output="json"))
    assert json.loads(out)["result"]["variables"] == ["v", "a"]


def test_colored_jones_command():
    code, out = run(RunConfig("colored-jones", "1:", colors=(2,)))
    assert (code, out) == (0, "v^-2 + 1 + v^2")


def test_khovanov_command():
    code, out = run(RunConfig("khovanov", "1:"))
    assert out == "v^-1 + v"


def test_web_eval_closed_and_open():
    code, out = run(RunConfig("web-eval", "labels: 2;split 1 1 @0;merge 1 1 @0", k=2))
    assert (code, out) == (0, "v^-1 + v")
    code, out = run(RunConfig("web-eval", "labels: 1 1;x+ @0", k=2, output="json"))
    data = json.loads(out)["result"]
    assert data["domain"] == [1, 1] and len(data["entries"]) == 5


@pytest.mark.parametrize("cfg", [
    RunConfig("jones", "2: 3"),
    RunConfig("jones", "nonsense"),
    RunConfig("web-eval", "labels: 1;x+ @0"),
    RunConfig("wrt", "1:", eta=0),
    RunConfig("jones", "1:", colors=(1,)),
    RunConfig("colored-jones", "2: 1 1", colors=(1,)),
])
def test_input_errors_exit_one(cfg):
    code, out = run(cfg)
    assert code == 1
    assert out.startswith("error:")


def test_cross_check_passes_on_cancelling_pair():
    code, out = run(RunConfig("cross-check", "2: 1 -1"))
    assert code == 0 and "MISMATCH" not in out


def test_cross_check_corpus():
    code, out = run(RunConfig("cross-check", "corpus", output="json"))
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert len(data["result"]) == 12


def test_moves_check():
    code, out = run(RunConfig("moves-check", "3: 1 -2 1", cutoff=10))
    assert code == 0
    assert "differs" not in out


def test_cutoff_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("LINKHOM_CUTOFF", "4")
    assert main(["kr", "1:", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["cutoff"] == 4
    assert main(["kr", "1:", "--json", "--cutoff", "6"]) == 0
    assert json.loads(capsys.readouterr().out)["cutoff"] == 6
    monkeypatch.setenv("LINKHOM_CUTOFF", "x")
    assert main(["kr", "1:"]) == 1


def test_bad_usage_exits_one():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command", "1:"])
    assert exc.value.code == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "linkhom", "jones", "2: 1 1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 + v^2 + v^4 + v^6"


def test_colors_flag_parsing(capsys):
    assert main(["colored-jones", "2: 1 1", "--colors", "1,1"]) == 0
    assert capsys.readouterr().out.strip() == "1 + v^2 + v^4 + v^6"
