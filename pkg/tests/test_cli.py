import json

import pytest

from kfacets.cli import main
from kfacets.genpos import convex_position_set, random_point_set
from kfacets.geometry import point_set
from kfacets.serialize import load_point_set, save_point_set


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def square_file(tmp_path):
    path = tmp_path / "square.json"
    save_point_set(point_set([(0, 0), (1, 0), (1, 1), (0, 1)]), path)
    return str(path)


class TestGen:
    def test_deterministic_json(self, capsys):
        code, out1, _ = run(capsys, "gen", "--n", "5", "--d", "2", "--seed", "1")
        code2, out2, _ = run(capsys, "gen", "--n", "5", "--d", "2", "--seed", "1")
        assert code == code2 == 0 and out1 == out2
        obj = json.loads(out1)
        assert obj["dim"] == 2 and len(obj["points"]) == 5

    def test_writes_file(self, capsys, tmp_path):
        path = tmp_path / "out.json"
        code, _, _ = run(capsys, "gen", "--n", "6", "--d", "2", "--seed", "4",
                         "--out", str(path))
        assert code == 0
        assert load_point_set(path).n == 6

    def test_modes(self, capsys):
        for mode in ("glp", "conic", "convex", "distinct-x1"):
            code, out, _ = run(capsys, "gen", "--n", "6", "--d", "2",
                               "--seed", "2", "--mode", mode)
            assert code == 0 and json.loads(out)["dim"] == 2


class TestLiftAndCount:
    def test_lift_circle(self, capsys, square_file):
        code, out, _ = run(capsys, "lift", "--in", square_file, "--map", "circle")
        assert code == 0
        obj = json.loads(out)
        assert obj["dim"] == 3 and obj["points"][2] == ["1", "1", "2"]

    def test_count_facets_json(self, capsys, square_file):
        code, out, _ = run(capsys, "count", "--in", square_file)
        assert code == 0
        obj = json.loads(out)
        assert obj["profile"] == [4, 4, 4]

    def test_count_facets_csv(self, capsys, square_file):
        code, out, _ = run(capsys, "count", "--in", square_file, "--csv")
        assert code == 0
        assert out.splitlines()[0] == "k,e_k"

    def test_count_with_k_lists_facets(self, capsys, square_file):
        code, out, _ = run(capsys, "count", "--in", square_file, "--k", "1")
        obj = json.loads(out)
        assert {tuple(f["indices"]) for f in obj["facets"]} == {(0, 2), (1, 3)}

    def test_count_sets(self, capsys, square_file):
        code, out, _ = run(capsys, "count", "--in", square_file,
                           "--mode", "sets", "--k", "2")
        obj = json.loads(out)
        assert obj["ksets"] == [[0, 1], [0, 3], [1, 2], [2, 3]]

    def test_count_sets_requires_k(self, capsys, square_file):
        code, _, err = run(capsys, "count", "--in", square_file, "--mode", "sets")
        assert code == 2 and "requires --k" in err

    def test_count_under_lift(self, capsys, tmp_path):
        path = tmp_path / "pts.json"
        save_point_set(random_point_set(7, 2, seed=21), path)
        code, out, _ = run(capsys, "count", "--in", str(path), "--map", "circle")
        assert code == 0
        prof = json.loads(out)["profile"]
        assert prof == [10, 16, 18, 16, 10]


class TestCertify:
    def test_edge_certificate(self, capsys, square_file):
        code, out, _ = run(capsys, "certify", "--in", square_file,
                           "--subset", "0,1")
        obj = json.loads(out)
        assert code == 0 and obj["certificate"] is not None
        assert obj["certificate"]["strict"] is True

    def test_diagonal_has_none(self, capsys, square_file):
        code, out, _ = run(capsys, "certify", "--in", square_file,
                           "--subset", "0,2")
        assert code == 0 and json.loads(out)["certificate"] is None

    def test_weak_flag(self, capsys, tmp_path):
        path = tmp_path / "flat.json"
        save_point_set(point_set([(0, 0), (1, 0), (2, 0), (1, 2)]), path)
        code, out, _ = run(capsys, "certify", "--in", str(path),
                           "--subset", "0,2", "--weak")
        assert code == 0 and json.loads(out)["certificate"]["strict"] is False


class TestProjectAndRadon:
    def test_project_pass(self, capsys, tmp_path):
        path = tmp_path / "cx.json"
        save_point_set(convex_position_set(6, 3, seed=2), path)
        code, out, _ = run(capsys, "project", "--in", str(path),
                           "--vertex", "0", "--k", "1")
        obj = json.loads(out)
        assert code == 0 and obj["pass"] is True
        assert obj["facets_through_vertex"] == obj["projected_e_k"]

    def test_radon(self, capsys, tmp_path):
        path = tmp_path / "four.json"
        save_point_set(point_set([(0, 0), (3, 0), (0, 3), (1, 1)]), path)
        code, out, _ = run(capsys, "radon", "--in", str(path))
        obj = json.loads(out)
        assert code == 0
        assert {tuple(sorted(obj["Q"])), tuple(sorted(obj["R"]))} \
            == {(3,), (0, 1, 2)}


class TestFormula:
    def test_single_value(self, capsys):
        code, out, _ = run(capsys, "formula", "circle", "7", "2")
        assert code == 0 and out.strip() == "18"

    def test_k_range_csv(self, capsys):
        code, out, _ = run(capsys, "formula", "conic", "9",
                           "--k-range", "0:4")
        assert code == 0
        assert out.splitlines() == ["k,value", "0,30", "1,60", "2,72",
                                    "3,60", "4,30"]

    def test_unknown_name(self, capsys):
        code, _, err = run(capsys, "formula", "nope", "1")
        assert code == 2 and "unknown formula" in err

    def test_bad_arity(self, capsys):
        code, _, err = run(capsys, "formula", "circle", "7")
        assert code == 2


class TestVerify:
    def test_circles_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "circles", "--n", "7", "--seed", "3")
        obj = json.loads(out)
        assert code == 0 and obj["pass"] is True
        assert obj["expected"] == obj["measured"]
        assert obj["measured"]["profile"] == [10, 16, 18, 16, 10]
        assert obj["measured"]["halving"] == 9
        assert "instance" not in obj

    def test_radon_theorem(self, capsys):
        code, out, _ = run(capsys, "verify", "radon", "--d", "3", "--seed", "5")
        assert code == 0 and json.loads(out)["pass"] is True

    def test_weakly_counterexample(self, capsys):
        code, out, _ = run(capsys, "verify", "weakly", "--k", "2", "--seed", "1")
        assert code == 0 and json.loads(out)["pass"] is True

    def test_deterministic_report(self, capsys):
        _, out1, _ = run(capsys, "verify", "embedding", "--k", "2", "--n", "6",
                         "--seed", "9")
        _, out2, _ = run(capsys, "verify", "embedding", "--k", "2", "--n", "6",
                         "--seed", "9")
        assert out1 == out2 and json.loads(out1)["pass"] is True


class TestErrors:
    def test_missing_file(self, capsys):
        with pytest.raises(SystemExit):
            main(["count"])

    def test_degenerate_input_exit_2(self, capsys, tmp_path):
        path = tmp_path / "flat.json"
        save_point_set(point_set([(0, 0), (1, 0), (2, 0)]), path)
        code, _, err = run(capsys, "count", "--in", str(path))
        assert code == 2 and err
