import json

import pytest

from voltage_tower import (
    DirectedMultigraph,
    bouquet,
    directed_cycle,
    underlying_undirected,
)
from voltage_tower.cli import main
from voltage_tower.documents import (
    DocumentError,
    graph_from_document,
    graph_to_document,
    read_graph,
    write_graph,
)


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_graph_document_round_trip(tmp_path):
    g = directed_cycle(3)
    path = tmp_path / "g.json"
    write_graph(g, str(path))
    assert read_graph(str(path)) == g
    u = underlying_undirected(g)
    doc = graph_to_document(u)
    assert doc["directed"] is False
    assert graph_from_document(doc) == u


def test_graph_document_rejects_garbage():
    with pytest.raises(DocumentError):
        graph_from_document({"schema": "nope"})
    with pytest.raises(DocumentError):
        graph_from_document(
            {
                "schema": "voltage-tower/graph-v1",
                "name": "x",
                "directed": True,
                "vertex_count": 1,
                "edges": [],
                "bogus": 1,
            }
        )
    with pytest.raises(DocumentError):
        graph_from_document(
            {
                "schema": "voltage-tower/graph-v1",
                "name": "x",
                "directed": True,
                "vertex_count": 1,
                "edges": [[0, 5]],
            }
        )


def test_gen_matches_in_memory_constructions(tmp_path, capsys):
    out = tmp_path / "c.json"
    code, _, _ = run(["gen", "cycle", "--length", "3", "-o", str(out)], capsys)
    assert code == 0
    assert read_graph(str(out)) == directed_cycle(3)

    code, stdout, _ = run(["gen", "bouquet", "--loops", "2"], capsys)
    assert code == 0
    assert graph_from_document(json.loads(stdout)) == bouquet(2)

    code, stdout, _ = run(
        ["gen", "volcano", "--l", "2", "--depth", "2", "--crater", "cycle:4"],
        capsys,
    )
    assert code == 0
    g = graph_from_document(json.loads(stdout))
    assert g.vertex_count == 16

    code, stdout, _ = run(
        ["gen", "doubled-volcano", "--l", "2", "--depth", "1", "--crater", "cycle:3"],
        capsys,
    )
    assert code == 0
    g = graph_from_document(json.loads(stdout))
    assert g.vertex_count == 6
    assert len(g.edges) == 12


def test_gen_rejects_bad_params(capsys):
    code, _, err = run(["gen", "volcano", "--l", "1"], capsys)
    assert code == 2
    assert "l >= 2" in err
    code, _, err = run(["gen", "volcano", "--crater", "pyramid"], capsys)
    assert code == 2


def test_derive_command(tmp_path, capsys):
    src = tmp_path / "c.json"
    write_graph(directed_cycle(3), str(src))
    code, stdout, _ = run(
        ["derive", "-i", str(src), "--p", "3", "--level", "1"], capsys
    )
    assert code == 0
    doc = json.loads(stdout)
    assert doc["vertex_count"] == 9
    assert doc["labels"][0] == "v0@0"

    # level 0 gives back the byte-identical document
    code, stdout, _ = run(
        ["derive", "-i", str(src), "--p", "3", "--level", "0"], capsys
    )
    assert code == 0
    assert json.loads(stdout) == graph_to_document(directed_cycle(3))


def test_derive_non_unit_param(tmp_path, capsys):
    src = tmp_path / "c.json"
    write_graph(directed_cycle(3), str(src))
    code, _, err = run(
        ["derive", "-i", str(src), "--p", "3", "--level", "1", "--param", "3"],
        capsys,
    )
    assert code == 3
    assert "--allow-non-unit" in err
    code, stdout, _ = run(
        [
            "derive",
            "-i",
            str(src),
            "--p",
            "3",
            "--level",
            "1",
            "--param",
            "3",
            "--allow-non-unit",
        ],
        capsys,
    )
    assert code == 0
    assert json.loads(stdout)["vertex_count"] == 9


def test_invariants_command(tmp_path, capsys):
    src = tmp_path / "v.json"
    code, _, _ = run(
        [
            "gen", "volcano", "--l", "2", "--depth", "2",
            "--crater", "cycle:4", "-o", str(src),
        ],
        capsys,
    )
    assert code == 0
    code, stdout, _ = run(["invariants", "-i", str(src), "--p", "3"], capsys)
    assert code == 0
    doc = json.loads(stdout)
    assert doc["schema"] == "voltage-tower/invariants-v1"
    assert (doc["mu"], doc["lambda"], doc["n0"]) == (0, 1, 0)
    assert doc["charpoly"][0] == "0"
    assert "tower_report" not in doc

    code, stdout, _ = run(
        ["invariants", "-i", str(src), "--p", "3", "--n-max", "2"], capsys
    )
    assert code == 0
    doc = json.loads(stdout)
    kappas = [
        lvl["kappa_per_component"] for lvl in doc["tower_report"]["levels"]
    ]
    assert kappas == ["4", "12", "36"]


def test_invariants_bouquet_and_tree(tmp_path, capsys):
    src = tmp_path / "b.json"
    write_graph(bouquet(2), str(src))
    code, stdout, _ = run(["invariants", "-i", str(src), "--p", "2"], capsys)
    assert code == 0
    doc = json.loads(stdout)
    assert (doc["mu"], doc["lambda"]) == (1, 1)

    tree = tmp_path / "t.json"
    write_graph(DirectedMultigraph(2, ((0, 1),), name="edge"), str(tree))
    code, _, err = run(["invariants", "-i", str(tree), "--p", "2"], capsys)
    assert code == 4
    assert "forest" in err

    flat = tmp_path / "flat.json"
    write_graph(
        DirectedMultigraph(2, ((0, 1), (0, 1)), name="pp"), str(flat)
    )
    code, _, err = run(["invariants", "-i", str(flat), "--p", "2"], capsys)
    assert code == 4
    assert "weight" in err


def test_verify_command(tmp_path, capsys):
    src = tmp_path / "v.json"
    run(
        [
            "gen", "volcano", "--l", "2", "--depth", "2",
            "--crater", "cycle:4", "-o", str(src),
        ],
        capsys,
    )
    code, stdout, _ = run(
        ["verify", "-i", str(src), "--p", "3", "--n-max", "3"], capsys
    )
    assert code == 0
    assert "exact from level 0" in stdout
    for kappa in ("4", "12", "36", "108"):
        assert kappa in stdout

    code, stdout, _ = run(
        ["verify", "-i", str(src), "--p", "3", "--n-max", "3", "--json"],
        capsys,
    )
    assert code == 0
    doc = json.loads(stdout)
    assert doc["schema"] == "voltage-tower/tower-report-v1"
    assert [lvl["kappa_per_component"] for lvl in doc["levels"]] == [
        "4",
        "12",
        "36",
        "108",
    ]
    assert doc["exact_from_level"] == 0
    assert doc["fitted_nu"] == 0


def test_verify_single_loop_bouquet(tmp_path, capsys):
    src = tmp_path / "b1.json"
    write_graph(bouquet(1), str(src))
    code, stdout, _ = run(
        ["verify", "-i", str(src), "--p", "5", "--n-max", "2", "--json"],
        capsys,
    )
    assert code == 0
    doc = json.loads(stdout)
    assert [lvl["kappa_per_component"] for lvl in doc["levels"]] == [
        "1",
        "5",
        "25",
    ]


def test_verify_rejects_small_n_max(tmp_path, capsys):
    src = tmp_path / "c.json"
    write_graph(directed_cycle(3), str(src))
    code, _, err = run(
        ["verify", "-i", str(src), "--p", "3", "--n-max", "2"], capsys
    )
    assert code == 2
    assert "n0 + 2" in err


def test_export_dot(tmp_path, capsys):
    src = tmp_path / "c.json"
    write_graph(directed_cycle(3), str(src))
    code, stdout, _ = run(["export-dot", "-i", str(src)], capsys)
    assert code == 0
    assert stdout.startswith("digraph")
    assert stdout.count("->") == 3

    und = tmp_path / "u.json"
    write_graph(underlying_undirected(directed_cycle(3)), str(und))
    code, stdout, _ = run(["export-dot", "-i", str(und)], capsys)
    assert code == 0
    assert stdout.startswith("graph")
    assert stdout.count("--") == 3


def test_oracle_command(tmp_path, capsys):
    src = tmp_path / "c.json"
    write_graph(directed_cycle(3), str(src))
    code, stdout, _ = run(["oracle", "-i", str(src)], capsys)
    assert code == 0
    assert stdout.strip() == "3"

    big = tmp_path / "big.json"
    write_graph(
        DirectedMultigraph(2, tuple((0, 1) for _ in range(17)), name="fat"),
        str(big),
    )
    code, _, err = run(["oracle", "-i", str(big)], capsys)
    assert code == 6

    dc = tmp_path / "dc.json"
    write_graph(
        DirectedMultigraph(
            3, ((0, 1), (0, 1), (1, 2), (1, 2), (2, 0), (2, 0)), name="dc3"
        ),
        str(dc),
    )
    code, stdout, _ = run(["oracle", "-i", str(dc)], capsys)
    assert code == 0
    assert stdout.strip() == "12"


def test_missing_input_file(capsys):
    code, _, err = run(["oracle", "-i", "/nonexistent/x.json"], capsys)
    assert code == 2


def test_dot_output_file(tmp_path, capsys):
    src = tmp_path / "c.json"
    out = tmp_path / "c.dot"
    write_graph(directed_cycle(3), str(src))
    code, _, _ = run(["export-dot", "-i", str(src), "-o", str(out)], capsys)
    assert code == 0
    assert out.read_text().startswith("digraph")
