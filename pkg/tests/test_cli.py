import json

import pytest

from pipekit.cli import main
from pipekit.graph6 import write_graph6
from pipekit.graphcore import cycle, disjoint_union


@pytest.fixture
def corpus(tmp_path):
    f = tmp_path / "pairs.g6"
    f.write_text(f"{write_graph6(cycle(6))}\n{write_graph6(disjoint_union([cycle(3), cycle(3)]))}\n")
    return f


def test_repro_single_passes(capsys):
    assert main(["repro", "prop32_s23", "--format", "json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["passed"] and rep["entries"]


def test_repro_tsv_and_scale(capsys):
    assert main(["repro", "prop34_rw", "--n", "2", "--format", "tsv"]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert rows[1].startswith("construction\tclaim")
    assert len(rows) == 2 + 3


def test_repro_unknown_id(capsys):
    assert main(["repro", "prop99"]) == 2
    assert "unknown construction" in capsys.readouterr().err


def test_pairs(corpus, capsys):
    assert main(["pairs", str(corpus), "--methods", "ph,ph_lpe,pipe"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["summary"]["fraction"]["ph_only"] == 1.0


def test_pairs_errors(tmp_path, capsys):
    odd = tmp_path / "odd.g6"
    odd.write_text("Dhc\n")
    assert main(["pairs", str(odd)]) == 2
    assert main(["pairs", str(odd), "--methods", "magic"]) == 2
    assert main(["pairs", str(tmp_path / "missing.g6")]) == 2


def test_pe_ph_wl(corpus, capsys):
    assert main(["pe", str(corpus), "--method", "rw", "--k", "2"]) == 0
    out = capsys.readouterr().out
    assert out.count("# graph") == 2 and "0\t0.5" in out
    assert main(["ph", str(corpus)]) == 0
    out = capsys.readouterr().out
    assert "dim0" in out and "(2,inf)" in out
    assert main(["ph", str(corpus), "--filtration", "lap"]) == 0
    capsys.readouterr()
    assert main(["wl", str(corpus), "--k", "1"]) == 0
    h1 = [line.split("\t")[1] for line in capsys.readouterr().out.splitlines()]
    assert h1[0] == h1[1]
    assert main(["wl", str(corpus), "--k", "2"]) == 0
    h2 = [line.split("\t")[1] for line in capsys.readouterr().out.splitlines()]
    assert h2[0] != h2[1]


def test_g6_roundtrip(corpus, tmp_path, capsys):
    assert main(["g6", "roundtrip", str(corpus)]) == 0
    assert "2/2" in capsys.readouterr().out
    bad = tmp_path / "bad.g6"
    bad.write_text("Dh\n")
    assert main(["g6", "roundtrip", str(bad)]) == 2
