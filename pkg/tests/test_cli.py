import json

import pytest

from simplefold.cli import main


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def pattern_1d(length, creases):
    return {"type": "1d", "length": str(length),
            "creases": [{"pos": str(p), "mv": mv} for p, mv in creases]}


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_decide_foldable_exit_0(tmp_path, capsys):
    path = write(tmp_path, "p.json", pattern_1d(8, [(3, "M"), (5, "V")]))
    code, doc = run(capsys, ["decide", "--model", "some", "--input", path])
    assert code == 0
    assert doc["foldable"] is True
    assert doc["sequence"] == [{"op": "crimp", "left": "3", "right": "5"}]


def test_decide_mixed_emits_assignment(tmp_path, capsys):
    path = write(tmp_path, "p.json", pattern_1d(8, [(3, "M"), (5, "U")]))
    code, doc = run(capsys, ["decide", "--model", "some", "--input", path])
    assert code == 0
    assert doc["assignment"] == {"5": "V"}


def test_decide_all_layers_unfoldable_exit_1(tmp_path, capsys):
    path = write(tmp_path, "p.json", pattern_1d(6, [(2, "V"), (3, "M")]))
    code, doc = run(capsys, ["decide", "--model", "all", "--input", path])
    assert code == 1
    assert doc["foldable"] is False


def test_parse_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    code, doc = run(capsys, ["decide", "--model", "one", "--input", str(bad)])
    assert code == 2
    assert "error" in doc


def test_unknown_type_exit_2(tmp_path, capsys):
    path = write(tmp_path, "p.json", {"type": "hexagon"})
    code, doc = run(capsys, ["assign", "--input", path])
    assert code == 2


def test_oracle_budget_exit_3(tmp_path, capsys):
    path = write(tmp_path, "p.json",
                 pattern_1d(8, [(1, "U"), (2, "U"), (3, "U"), (5, "U"), (7, "U")]))
    code, doc = run(capsys, ["oracle", "--model", "some", "--budget", "3", "--input", path])
    assert code == 3
    assert doc["status"] == "inconclusive"


def test_oracle_trace(tmp_path, capsys):
    path = write(tmp_path, "p.json", pattern_1d(8, [(3, "M"), (5, "V")]))
    code, doc = run(capsys, ["oracle", "--model", "one", "--input", path])
    assert code == 0
    assert doc["status"] == "foldable"
    assert doc["trace"][0]["axis"] == "v"


def test_rect_decide_one_layer(tmp_path, capsys):
    rect = {"type": "rect", "width": "4", "height": "2", "creases": [
        {"axis": "v", "coord": "2", "from": "0", "to": "2", "mv": "U"},
        {"axis": "h", "coord": "1", "from": "0", "to": "4", "mv": "U"},
    ]}
    path = write(tmp_path, "r.json", rect)
    code, doc = run(capsys, ["decide", "--model", "one", "--input", path])
    assert code == 1
    assert doc["reason"] == "crossing-directions"
    code, doc = run(capsys, ["decide", "--model", "some", "--input", path])
    assert code == 2  # rect some-layers decision is for the oracle


def test_sequence_guilty(tmp_path, capsys):
    path = write(tmp_path, "p.json", pattern_1d(8, [(3, "M"), (5, "M")]))
    code, doc = run(capsys, ["sequence", "--input", path])
    assert code == 1
    assert doc["guilty"] == ["3", "5"]


def test_fuzz_small_exit_0(tmp_path, capsys):
    code, doc = run(capsys, [
        "fuzz", "--models", "one,some", "--creases", "2", "--length", "4",
        "--random-instances", "3",
        "--reproducer", str(tmp_path / "repro.json"),
    ])
    assert code == 0
    assert doc["disagreements"] == []
    assert doc["checked"] > 0


def test_gadget_writes_files(tmp_path, capsys):
    out = str(tmp_path / "g")
    code, doc = run(capsys, ["gadget", "3p-cactus", "--numbers", "1,1,1", "--out", out])
    assert code == 0
    written = json.loads((tmp_path / "g.json").read_text())
    assert written["type"] == "poly"
    fold = json.loads((tmp_path / "g.fold").read_text())
    assert "vertices_coords" in fold


def test_gadget_usage_error(tmp_path, capsys):
    code, doc = run(capsys, ["gadget", "3sat", "--out", str(tmp_path / "x")])
    assert code == 2
