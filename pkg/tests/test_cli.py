import json

import pytest

from sepdepth.cli import main

S3_GROUP = {"name": "S3", "degree": 3,
            "generators": [[1, 0, 2], [1, 2, 0]]}
S2_SUBGROUP = {"name": "S2", "generators": [[1, 0, 2]]}


@pytest.fixture
def s3_files(tmp_path):
    g = tmp_path / "g.json"
    h = tmp_path / "h.json"
    g.write_text(json.dumps(S3_GROUP))
    h.write_text(json.dumps(S2_SUBGROUP))
    return str(g), str(h)


def test_analyze_json(s3_files, capsys):
    g, h = s3_files
    assert main(["analyze", g, h]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["group"] == "S3" and out["subgroup"] == "S2"
    assert out["min_depth"] == 3
    assert out["min_h_depth"] == 5
    assert out["inclusion_matrix"] == [[1, 0, 1], [0, 1, 1]]
    assert out["unique_separable"] is False
    assert set(out["agreements"].values()) == {"AGREE"}
    assert "elapsed" not in out and "timing" not in out


def test_analyze_tsv(s3_files, capsys):
    g, h = s3_files
    assert main(["analyze", g, h, "--format", "tsv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2
    header = lines[0].split("\t")
    row = lines[1].split("\t")
    assert len(header) == len(row)
    assert row[header.index("group")] == "S3"
    assert row[header.index("min_depth")] == "3"


def test_analyze_stdin(s3_files, capsys, monkeypatch):
    import io
    _, h = s3_files
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(S3_GROUP)))
    assert main(["analyze", "-", h]) == 0
    assert json.loads(capsys.readouterr().out)["min_depth"] == 3


def test_analyze_matrix_only(s3_files, capsys):
    g, h = s3_files
    assert main(["analyze", g, h, "--matrix-only"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["min_depth"] == 3
    assert out["full_in_t"] is None


def test_missing_file_exit_1(capsys):
    assert main(["analyze", "/nonexistent/g.json", "/nonexistent/h.json"]) == 1
    assert "error:" in capsys.readouterr().err


def test_bad_json_exit_1(tmp_path, capsys):
    g = tmp_path / "g.json"
    g.write_text('{"degree": 3,,}')
    assert main(["analyze", str(g), str(g)]) == 1
    err = capsys.readouterr().err
    assert "line 1" in err and "column" in err


def test_bad_permutation_exit_1(tmp_path, capsys):
    g = tmp_path / "g.json"
    g.write_text(json.dumps({"degree": 3, "generators": [[0, 0, 1]]}))
    h = tmp_path / "h.json"
    h.write_text(json.dumps(S2_SUBGROUP))
    assert main(["analyze", str(g), str(h)]) == 1
    assert "not a permutation" in capsys.readouterr().err


def test_cap_group_exit_2(s3_files, capsys):
    g, h = s3_files
    assert main(["analyze", g, h, "--cap-group", "4"]) == 2
    assert "cap exceeded" in capsys.readouterr().err


def test_cap_linear_env(s3_files, capsys, monkeypatch):
    monkeypatch.setenv("SEPDEPTH_CAP_LINEAR", "2")
    g, h = s3_files
    assert main(["analyze", g, h]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["caps_hit"]
    assert out["full_in_t"] is None
    # the matrix-side results survive the cap
    assert out["min_depth"] == 3


def test_corpus_filtered_tsv(capsys):
    assert main(["corpus", "--corpus-filter", "Q8/*",
                 "--format", "tsv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[-1].startswith("# pairs=")
    assert "disagree=0" in lines[-1]
    assert len(lines) >= 3   # header + at least trivial/full + summary


def test_corpus_filtered_json(capsys):
    assert main(["corpus", "--corpus-filter", "S3/*"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["summary"]["disagree"] == 0
    assert out["summary"]["pairs"] == len(out["reports"]) == 4
    names = {r["subgroup"] for r in out["reports"]}
    assert "1" in names and "full" in names


def test_findim_demo_fixtures(capsys):
    assert main(["findim-demo", "--fixture", "structural"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dimension"] == 9
    assert out["radical_dim"] == 5
    assert out["separable"] is False
    assert out["radical_criterion"] == "not-applicable"
    assert out["witness"] is None

    assert main(["findim-demo", "--fixture", "triangular3"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["separable"] is True
    assert out["radical_criterion"] == "separable"
    assert out["witness"] is not None

    assert main(["findim-demo", "--fixture", "monoid2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dimension"] == 4 and out["separable"] is True


def test_findim_demo_unknown_fixture(capsys):
    assert main(["findim-demo", "--fixture", "nope"]) == 1
    assert "unknown fixture" in capsys.readouterr().err


def test_findim_demo_spec_files(tmp_path, capsys):
    alg = {
        "name": "T2",
        "matrix_size": 2,
        "basis": [[["1", "0"], ["0", "0"]],
                  [["0", "1"], ["0", "0"]],
                  [["0", "0"], ["0", "1"]]],
    }
    sub = {"matrices": [[["1", "0"], ["0", "1"]],
                        [["0", "1"], ["0", "0"]]]}
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps(alg))
    b.write_text(json.dumps(sub))
    assert main(["findim-demo", str(a), str(b)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dimension"] == 3 and out["sub_dimension"] == 2
    assert out["separable"] is True


def test_findim_demo_structure_constants(tmp_path, capsys):
    # Q[x]/(x^2): structure constants over basis {1, x}
    alg = {
        "name": "dual-numbers",
        "structure": [[["1", "0"], ["0", "1"]],
                      [["0", "1"], ["0", "0"]]],
        "unit": ["1", "0"],
    }
    sub = {"vectors": [["1", "0"]]}
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps(alg))
    b.write_text(json.dumps(sub))
    assert main(["findim-demo", str(a), str(b)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["radical_dim"] == 1
    assert out["separable"] is False
    assert out["radical_criterion"] == "inseparable"


def test_findim_demo_bad_structure_exit_1(tmp_path, capsys):
    alg = {
        "structure": [[["1", "0"], ["0", "1"]],
                      [["0", "1"], ["1", "0"]]],
        "unit": ["0", "1"],
    }
    a = tmp_path / "a.json"
    a.write_text(json.dumps(alg))
    b = tmp_path / "b.json"
    b.write_text(json.dumps({"vectors": [["1", "0"]]}))
    assert main(["findim-demo", str(a), str(b)]) == 1
    assert "error:" in capsys.readouterr().err


def test_findim_demo_missing_args(capsys):
    assert main(["findim-demo"]) == 1
    assert "need --fixture" in capsys.readouterr().err
