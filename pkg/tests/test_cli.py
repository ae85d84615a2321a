import json

from crystalpoly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_graph_dot(capsys):
    code, out, _ = run(
        capsys, "graph", "--builtin", "a2", "--iota", "1 2", "--lambda", "1,0",
        "--depth", "3", "--format", "dot",
    )
    assert code == 0
    assert out.count("[label=") >= 3 and 'label="1"' in out
    assert out.count("->") == 2


def test_graph_json_counts_layers(capsys):
    code, out, _ = run(
        capsys, "graph", "--builtin", "a1tilde", "--binf", "--depth", "2",
        "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert len(data["nodes"]) == 7  # 1 + 2 + 4, counted by hand
    assert data["root"] == 0


def test_graph_depth_zero(capsys):
    code, out, _ = run(
        capsys, "graph", "--builtin", "g2", "--lambda", "0,0", "--depth", "0",
        "--format", "json",
    )
    assert code == 0
    assert len(json.loads(out)["nodes"]) == 1


def test_graph_config_errors(capsys):
    code, _, err = run(capsys, "graph", "--builtin", "nosuch", "--binf", "--depth", "1")
    assert code == 2 and "unknown builtin" in err
    code, _, err = run(
        capsys, "graph", "--builtin", "a2", "--lambda", "1,-1", "--depth", "1"
    )
    assert code == 2 and "dominant" in err
    code, _, err = run(capsys, "graph", "--builtin", "a2", "--depth", "1")
    assert code == 2


def test_inequalities_generate_not_ample(capsys):
    code, out, _ = run(
        capsys, "inequalities", "--builtin", "a3", "--iota", "1 2 3 2 1 2",
        "--lambda", "0,1,0", "--method", "generate",
    )
    assert code == 0
    assert "not ample" in out
    assert "-1 + x3 - x4 >= 0" in out


def test_inequalities_rank2_window(capsys):
    code, out, _ = run(
        capsys, "inequalities", "--builtin", "a1tilde", "--lambda", "1,1",
        "--method", "rank2", "--window", "5",
    )
    assert code == 0
    assert "1 + 5*x4 - 4*x5 >= 0" in out
    assert "x6" not in out


def test_inequalities_zero_weight_ample(capsys):
    code, out, _ = run(
        capsys, "inequalities", "--builtin", "a2", "--lambda", "0,0",
        "--method", "generate",
    )
    assert code == 0
    assert "report: ample" in out
    payload_code, payload, _ = run(
        capsys, "inequalities", "--builtin", "a2", "--lambda", "0,0",
        "--method", "generate", "--format", "json",
    )
    data = json.loads(payload)
    assert payload_code == 0
    assert all(f["const"] == "0" for f in data["forms"])


def test_inequalities_unsaturated_exit(capsys):
    code, out, _ = run(
        capsys, "inequalities", "--builtin", "a1tilde", "--lambda", "1,1",
        "--method", "generate", "--support-bound", "6", "--max-rounds", "1",
    )
    assert code == 3
    assert "WARNING" in out


def test_verify_equal_cases(capsys):
    code, out, _ = run(
        capsys, "verify", "--builtin", "a2", "--lambda", "1,0", "--depth", "3"
    )
    assert code == 0 and "equal: 3 elements" in out
    code, out, _ = run(
        capsys, "verify", "--builtin", "a1tilde", "--lambda", "1,1", "--depth", "4"
    )
    assert code == 0 and "equal" in out
    code, out, _ = run(
        capsys, "verify", "--builtin", "g2", "--lambda", "0,0", "--depth", "0"
    )
    assert code == 0 and "equal: 1 elements" in out


def test_verify_mismatch_exit(capsys):
    # an undersized rank2 window misses elements, which must be reported
    code, out, _ = run(
        capsys, "verify", "--builtin", "a1tilde", "--lambda", "1,1", "--depth", "4",
        "--method", "rank2", "--window", "2",
    )
    assert code == 4


def test_braid_fuzz(capsys):
    code, out, _ = run(
        capsys, "braid", "--fuzz", "--c1", "1", "--c2", "2", "--n", "400",
        "--seed", "5",
    )
    assert code == 0
    assert "violations=0" in out and "seed=5" in out


def test_braid_fuzz_jobs(capsys):
    code, out, _ = run(
        capsys, "braid", "--fuzz", "--c1", "1", "--c2", "1", "--n", "300",
        "--jobs", "2",
    )
    assert code == 0 and "n=300" in out


def test_braid_map_set(tmp_path, capsys):
    elements = [
        [[1, 0], [2, 0], [1, 0], [3, 0], [2, 0], [1, 0]],
        [[1, 0], [2, -1], [1, 0], [3, 0], [2, 0], [1, -1]],
    ]
    src = tmp_path / "im.json"
    src.write_text(json.dumps(elements))
    out_path = tmp_path / "mapped.json"
    code, _, _ = run(
        capsys, "braid", "--builtin", "a3", "--window", "4,5,6", "--i", "1",
        "--j", "2", "--map-set", str(src), "--output", str(out_path),
    )
    assert code == 0
    mapped = json.loads(out_path.read_text())
    assert len(mapped) == 2
    assert [entry[0][0] for entry in mapped] == [2, 2]  # leading letters now carry j


def test_braid_map_set_coordinate_encoding(tmp_path, capsys):
    # the graph command's JSON nodes feed straight into the braid command
    code, out, _ = run(
        capsys, "graph", "--builtin", "a3", "--iota", "1 2 3 1 2 1", "--binf",
        "--depth", "3", "--format", "json",
    )
    assert code == 0
    nodes = json.loads(out)["nodes"]
    src = tmp_path / "nodes.json"
    src.write_text(json.dumps(nodes))
    dest = tmp_path / "mapped.json"
    code, _, _ = run(
        capsys, "braid", "--builtin", "a3", "--iota", "1 2 3 1 2 1",
        "--window", "4,5,6", "--i", "1", "--j", "2",
        "--map-set", str(src), "--output", str(dest),
    )
    assert code == 0
    mapped = {json.dumps(e, sort_keys=True) for e in json.loads(dest.read_text())}
    code, out, _ = run(
        capsys, "graph", "--builtin", "a3", "--iota", "1 2 3 2 1 2", "--binf",
        "--depth", "3", "--format", "json",
    )
    other = {json.dumps(n, sort_keys=True) for n in json.loads(out)["nodes"]}
    assert mapped == other


def test_braid_needs_mode(capsys):
    code, _, err = run(capsys, "braid", "--c1", "1", "--c2", "1")
    assert code == 2 and "fuzz" in err


def test_braid_violation_exit_code(capsys, monkeypatch):
    import crystalpoly.cli as cli

    def broken(c1, c2, n, seed):
        return {"c1": c1, "c2": c2, "n": n, "seed": seed,
                "violations": [{"kind": "wt", "values": (0,) * 3}], "ok": False}

    monkeypatch.setattr(cli, "_fuzz_chunk", lambda payload: broken(*payload))
    code, out, _ = run(capsys, "braid", "--fuzz", "--c1", "1", "--c2", "1", "--n", "10")
    assert code == 5 and "violations=1" in out


def test_inequalities_free_mode_positivity(capsys):
    code, out, _ = run(
        capsys, "inequalities", "--builtin", "a2", "--binf", "--support-bound", "4"
    )
    assert code == 0 and "positivity: ok" in out
    code, out, _ = run(
        capsys, "inequalities", "--builtin", "a3", "--iota", "1 2 3 2 1 2", "--binf",
    )
    assert code == 0 and "positivity: broken at x2" in out


def test_builtin_dir_env(tmp_path, capsys, monkeypatch):
    (tmp_path / "mytype.json").write_text(
        json.dumps({"rank": 2, "matrix": [[2, -1], [-1, 2]]})
    )
    monkeypatch.setenv("CRYSTALPOLY_BUILTIN_DIR", str(tmp_path))
    code, out, _ = run(
        capsys, "graph", "--builtin", "mytype", "--iota", "1 2", "--lambda", "1,0",
        "--depth", "2", "--format", "json",
    )
    assert code == 0
    assert len(json.loads(out)["nodes"]) == 3
