"""Command-line interface: subcommands, exit codes, determinism."""

import json

import pytest

from fracdec import AccuracyError, load_json, load_off
from fracdec.cli import main


def run(*argv):
    return main(list(argv))


class TestGenMesh:
    def test_interval_json(self, tmp_path):
        out = tmp_path / "m.json"
        assert run("gen-mesh", "interval", "--edges", "8", "-o", str(out)) == 0
        cx = load_json(out)
        assert cx.n_simplices(1) == 8

    def test_square_off(self, tmp_path):
        out = tmp_path / "m.off"
        assert run("gen-mesh", "square", "--n", "3", "-o", str(out)) == 0
        cx = load_off(out)
        assert cx.n_simplices(2) == 18

    def test_square_requires_n(self, tmp_path):
        out = tmp_path / "m.off"
        assert run("gen-mesh", "square", "-o", str(out)) == 2

    def test_missing_output_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            run("gen-mesh", "interval")
        assert exc.value.code == 2


class TestFracDeriv:
    def test_from_generated_interval(self, tmp_path):
        out = tmp_path / "d.csv"
        code = run("frac-deriv", "--interval", "8", "--family", "power",
                   "-o", str(out))
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0].startswith("# config: ")
        assert lines[1] == "simplex_index,value"
        assert len(lines) == 2 + 8

    def test_from_mesh_file(self, tmp_path):
        mesh_path = tmp_path / "m.json"
        run("gen-mesh", "interval", "--edges", "4", "-o", str(mesh_path))
        out = tmp_path / "d.json"
        code = run("frac-deriv", "--mesh", str(mesh_path), "--family", "cubic_x3",
                   "--format", "json", "-o", str(out))
        assert code == 0
        body = out.read_text().splitlines()
        rows = json.loads("\n".join(body[1:]))
        assert len(rows) == 4 and "value" in rows[0]

    def test_unknown_family_exit_2(self, tmp_path):
        out = tmp_path / "d.csv"
        assert run("frac-deriv", "--interval", "4", "--family", "nope",
                   "-o", str(out)) == 2

    def test_no_mesh_source_exit_2(self, tmp_path):
        out = tmp_path / "d.csv"
        assert run("frac-deriv", "--family", "power", "-o", str(out)) == 2

    def test_corrupt_mesh_exit_3(self, tmp_path):
        bad = tmp_path / "bad.off"
        bad.write_text("not an off file\n")
        out = tmp_path / "d.csv"
        assert run("frac-deriv", "--mesh", str(bad), "--family", "power",
                   "-o", str(out)) == 3

    def test_bad_s_exit_2(self, tmp_path):
        out = tmp_path / "d.csv"
        assert run("frac-deriv", "--interval", "4", "--family", "power",
                   "--s", "1.5", "-o", str(out)) == 2


class TestConvergence:
    def test_error_table(self, tmp_path):
        out = tmp_path / "c.csv"
        code = run("convergence", "--family", "poly_neg10x3_plus_10x2",
                   "--edge-counts", "2,4", "-o", str(out))
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[1] == "n,error,ratio"
        first = lines[2].split(",")
        assert first[0] == "2"
        assert float(first[1]) == pytest.approx(1.5619, abs=5e-4)

    def test_s_sweep_mode(self, tmp_path):
        out = tmp_path / "sweep.csv"
        code = run("convergence", "--family", "power", "--edge-counts", "4,8",
                   "--s-values", "0.25,0.75", "-o", str(out))
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[1] == "n,s,linf_error"
        assert len(lines) == 2 + 4

    def test_empty_counts_exit_2(self, tmp_path):
        out = tmp_path / "c.csv"
        assert run("convergence", "--family", "power", "--edge-counts", ",",
                   "-o", str(out)) == 2

    def test_accuracy_error_exit_4(self, tmp_path, monkeypatch):
        import fracdec.cli as cli_mod

        def boom(*a, **k):
            raise AccuracyError("requested tolerance unreachable")

        monkeypatch.setattr(cli_mod.analysis, "convergence_study", boom)
        out = tmp_path / "c.csv"
        assert run("convergence", "--family", "power", "--edge-counts", "2",
                   "-o", str(out)) == 4


class TestField2d:
    def test_outputs(self, tmp_path):
        base = tmp_path / "exp"
        code = run("field2d", "--family", "saddle_2d", "--n", "2",
                   "--normalize", "predicted", "-o", str(base))
        assert code == 0
        field_lines = (tmp_path / "exp_field.csv").read_text().splitlines()
        err_lines = (tmp_path / "exp_errors.csv").read_text().splitlines()
        assert field_lines[1].startswith("tri_index,")
        assert err_lines[1] == "triangle_index,rel_error"
        assert len(field_lines) == 2 + 8 and len(err_lines) == 2 + 8

    def test_1d_family_rejected(self, tmp_path):
        assert run("field2d", "--family", "power", "--n", "2",
                   "-o", str(tmp_path / "x")) == 2


class TestOracleSample:
    def test_1d(self, tmp_path):
        out = tmp_path / "o.csv"
        assert run("oracle-sample", "--family", "exp_x", "--points", "5",
                   "-o", str(out)) == 0
        lines = out.read_text().splitlines()
        assert lines[1] == "x,family,s,value"
        assert len(lines) == 2 + 5

    def test_2d(self, tmp_path):
        out = tmp_path / "o.csv"
        assert run("oracle-sample", "--family", "saddle_2d", "--points", "3",
                   "-o", str(out)) == 0
        lines = out.read_text().splitlines()
        assert lines[1] == "x,y,family,s,value"
        assert len(lines) == 2 + 3 * 3 * 2  # two components per grid point


class TestDeterminism:
    def test_reruns_are_byte_identical(self, tmp_path):
        cases = [
            ("convergence", "--family", "poly_neg10x3_plus_10x2",
             "--edge-counts", "2,4"),
            ("frac-deriv", "--interval", "8", "--family", "power"),
            ("oracle-sample", "--family", "cubic_x3", "--points", "7"),
        ]
        for i, case in enumerate(cases):
            a, b = tmp_path / f"a{i}.csv", tmp_path / f"b{i}.csv"
            assert run(*case, "-o", str(a)) == 0
            assert run(*case, "-o", str(b)) == 0
            assert a.read_bytes() == b.read_bytes()

    def test_header_records_config(self, tmp_path):
        out = tmp_path / "c.csv"
        run("convergence", "--family", "power", "--edge-counts", "4",
            "--s", "0.3", "--right-sign", "minus", "-o", str(out))
        header = out.read_text().splitlines()[0]
        cfg = json.loads(header[len("# config: "):])
        assert cfg["s"] == 0.3
        assert cfg["right_sign"] == "minus"
        assert cfg["command"] == "convergence"
