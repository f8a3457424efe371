import json

import numpy as np
import pytest

from flowrec import incidence_matrix
from flowrec.cli import main

from conftest import fig1_edge_list_text, fig1_graph


@pytest.fixture
def fig1_file(tmp_path):
    path = tmp_path / "fig1.txt"
    path.write_text(fig1_edge_list_text())
    return str(path)


def run_cli(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


class TestGirthCommand:
    def test_fig1(self, capsys, fig1_file):
        rc, out = run_cli(capsys, "girth", "--graph", fig1_file)
        assert rc == 0
        assert out.strip() == "4"

    def test_acyclic(self, capsys, tmp_path):
        path = tmp_path / "path.txt"
        path.write_text("1 2\n2 3\n")
        rc, out = run_cli(capsys, "girth", "--graph", str(path))
        assert out.strip() == "inf"


class TestCyclesCommand:
    def test_fig1_lists_three_cycles(self, capsys, fig1_file):
        rc, out = run_cli(capsys, "cycles", "--graph", fig1_file)
        lines = out.strip().splitlines()
        assert lines == [
            "1 2 3 4",
            "2 3 5 6 7 8",
            "1 2 8 7 6 5 3 4",
        ]


class TestCertifyCommands:
    def test_certify(self, capsys, fig1_file):
        rc, out = run_cli(capsys, "certify", "--graph", fig1_file, "--sparsity", "2")
        doc = json.loads(out)
        assert doc["holds"] is False
        assert doc["girth"] == 4
        assert doc["nullspace_constant"] == 0.5

    def test_certify_support(self, capsys, fig1_file):
        rc, out = run_cli(
            capsys, "certify-support", "--graph", fig1_file, "--support", "2,7"
        )
        doc = json.loads(out)
        assert doc["holds"] is True
        assert doc["support"] == [2, 7]


class TestRecoverCommand:
    def test_l1_roundtrip(self, capsys, tmp_path, fig1_file):
        g = fig1_graph()
        A = incidence_matrix(g)
        truth = np.zeros(10)
        truth[4] = 2.0
        (tmp_path / "y.txt").write_text(
            "\n".join(str(v) for v in A @ truth) + "\n"
        )
        (tmp_path / "x.txt").write_text("\n".join(str(v) for v in truth) + "\n")
        rc, out = run_cli(
            capsys,
            "recover",
            "--graph",
            fig1_file,
            "--measurements",
            str(tmp_path / "y.txt"),
            "--algorithm",
            "l1",
            "--truth",
            str(tmp_path / "x.txt"),
        )
        doc = json.loads(out)
        assert doc["success"] is True
        assert doc["method"] == "l1"
        np.testing.assert_allclose(doc["estimate"], truth, atol=1e-6)

    def test_subgraph_algorithm(self, capsys, tmp_path, fig1_file):
        g = fig1_graph()
        A = incidence_matrix(g)
        truth = np.zeros(10)
        truth[4] = -1.0
        (tmp_path / "y.txt").write_text("\n".join(str(v) for v in A @ truth) + "\n")
        rc, out = run_cli(
            capsys,
            "recover",
            "--graph",
            fig1_file,
            "--measurements",
            str(tmp_path / "y.txt"),
            "--algorithm",
            "subgraph",
        )
        doc = json.loads(out)
        assert doc["method"] == "subgraph"
        assert doc["subgraph_edges"] == [5]

    def test_measurement_length_mismatch(self, capsys, tmp_path, fig1_file):
        (tmp_path / "y.txt").write_text("0\n0\n")
        with pytest.raises(SystemExit):
            main(
                [
                    "recover",
                    "--graph",
                    fig1_file,
                    "--measurements",
                    str(tmp_path / "y.txt"),
                ]
            )


class TestSimulateCommand:
    def test_csv_to_stdout_and_file(self, capsys, tmp_path):
        cfg = {
            "version": 1,
            "graph": {"generator": {"name": "two-cycle", "l": 3}},
            "sparsity_levels": [1],
            "trials": 10,
            "seed": 11,
            "algorithm": "both",
        }
        cfg_path = tmp_path / "cfg.json"
        cfg_path.write_text(json.dumps(cfg))
        rc, out = run_cli(capsys, "simulate", "--config", str(cfg_path))
        lines = out.strip().splitlines()
        assert lines[0] == "algorithm,sparsity,trials,successes,probability,seed"
        assert len(lines) == 3

        out_path = tmp_path / "result.csv"
        rc, _ = run_cli(
            capsys, "simulate", "--config", str(cfg_path), "--out", str(out_path)
        )
        assert out_path.read_text().splitlines()[0] == lines[0]
