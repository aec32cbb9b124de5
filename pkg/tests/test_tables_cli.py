import json
import subprocess
import sys

import pytest

from ortholat import catalog, cli, tables


class TestTableBuilders:
    def test_table1_shape_and_first_row(self):
        doc = tables.build_table(1)
        assert len(doc.rows) == 10
        first = doc.rows[0]
        assert first[0] == 1
        assert (first[1], first[4], first[7]) == (4, 7, 3)
        assert first[3] == "Z_2 (+) Z_2"

    def test_table2_d4_column_is_unity(self):
        doc = tables.build_table(2)
        idx = doc.columns.index("ratio[d4]")
        for row in doc.rows:
            assert row[idx] == 1.0

    def test_table4_row_count(self):
        doc = tables.build_table(4, w_values=[2])
        assert len(doc.rows) == 1
        assert doc.rows[0][2] == 4096  # M for (e8-1, zero)

    def test_table6_branches(self):
        doc = tables.build_table(6)
        branches = {row[0] for row in doc.rows}
        assert branches == {"integer", "real"}
        int_rows = [row for row in doc.rows if row[0] == "integer"]
        assert [row[2] for row in int_rows[:3]] == [1, 16, 216]

    def test_unknown_table(self):
        with pytest.raises(tables.UnknownTableError):
            tables.build_table(9)

    def test_w_override(self):
        doc = tables.build_table(1, w_values=range(2, 4))
        assert [row[0] for row in doc.rows] == [2, 3]

    def test_provenance(self):
        doc = tables.build_table(1, w_values=[1])
        assert doc.provenance["deterministic"] == "seedless"
        assert doc.provenance["catalog_sha256"] == catalog.data_checksums()


class TestRendering:
    def test_csv_deterministic(self, capsys):
        assert cli.main(["table", "1", "--format", "csv"]) == 0
        first = capsys.readouterr().out
        assert cli.main(["table", "1", "--format", "csv"]) == 0
        second = capsys.readouterr().out
        assert first == second
        assert "Z_2 (+) Z_2" in first
        assert "0.176777" in first

    def test_json_roundtrip_full_precision(self, capsys):
        assert cli.main(["table", "2", "--format", "json", "--w-range", "1..2"]) == 0
        payload = json.loads(capsys.readouterr().out)
        idx = payload["columns"].index("ratio[d3]")
        value = payload["rows"][0][idx]
        # full-precision float survives the round trip exactly
        assert json.loads(json.dumps(value)) == value
        assert abs(value - 0.7559) < 5e-4

    def test_md_render(self, capsys):
        assert cli.main(["table", "1", "--format", "md", "--w-range", "1..1"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("**Table 1**")
        assert "| w |" in out

    def test_output_file(self, tmp_path):
        target = tmp_path / "t1.csv"
        assert cli.main(["table", "1", "-o", str(target), "--w-range", "1..2"]) == 0
        assert target.read_text().count("\n") >= 4


class TestCliConstruct:
    def test_group_example(self, capsys):
        rc = cli.main(["construct", "d3", "--perturb", "good", "--w", "1", "--show", "group"])
        assert rc == 0
        assert "group=Z_7" in capsys.readouterr().out

    def test_density_example(self, capsys):
        rc = cli.main(["construct", "d3", "--perturb", "zero", "--w", "5", "--show", "density"])
        assert rc == 0
        assert "density=0.176777" in capsys.readouterr().out

    def test_rounded_size_example(self, capsys):
        rc = cli.main(["construct", "e6", "--w", "9.1", "--show", "size"])
        assert rc == 0
        assert "size=277200" in capsys.readouterr().out

    def test_json_format(self, capsys):
        rc = cli.main(
            ["construct", "d3", "--perturb", "cyclic", "--w", "1,2", "--format", "json",
             "--show", "size,group,classify"]
        )
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["classification"]["kind"] == "linear"
        assert [item["size"] for item in payload["results"]] == [3, 26]

    def test_member_matrices_printed_when_small(self, capsys):
        rc = cli.main(["construct", "d3", "--w", "1", "--show", "member"])
        assert rc == 0
        out = capsys.readouterr().out
        assert "dual basis rows" in out

    def test_file_source(self, tmp_path, capsys):
        path = tmp_path / "basis.mat"
        path.write_text(catalog.format_matrix_text(catalog.dn_dual(3)))
        rc = cli.main(["construct", str(path), "--w", "1", "--show", "size"])
        assert rc == 0
        assert "size=4" in capsys.readouterr().out

    def test_density_ratio_with_target(self, capsys):
        rc = cli.main(["construct", "d3", "--perturb", "good", "--w", "1",
                       "--show", "density", "--target", "d3"])
        assert rc == 0
        out = capsys.readouterr().out
        assert "density_ratio=0.755929" in out

    def test_sphere_token(self, capsys):
        rc = cli.main(["construct", "e8-1", "--perturb", "good", "--w", "2",
                       "--show", "sphere,size"])
        assert rc == 0
        assert "sphere_distance=0.794096" in capsys.readouterr().out


class TestCliExitCodes:
    def test_unknown_table_exits_2(self, capsys):
        assert cli.main(["table", "9"]) == 2

    def test_unknown_source_exits_2(self, capsys):
        assert cli.main(["construct", "nosuch"]) == 2

    def test_singular_single_w_exits_4(self, tmp_path, capsys):
        base = tmp_path / "b.mat"
        pert = tmp_path / "p.mat"
        base.write_text("2 2\n1 0\n0 1\n")
        pert.write_text("2 2\n-1 0\n0 -1\n")
        rc = cli.main(["construct", str(base), "--perturb", str(pert), "--w", "1"])
        assert rc == 4

    def test_singular_in_range_is_skipped(self, tmp_path, capsys):
        base = tmp_path / "b.mat"
        pert = tmp_path / "p.mat"
        base.write_text("2 2\n1 0\n0 2\n")
        pert.write_text("2 2\n-1 0\n0 -2\n")
        rc = cli.main(["construct", str(base), "--perturb", str(pert), "--w", "1,2",
                       "--show", "size"])
        assert rc == 0
        out = capsys.readouterr().out
        assert "skipped" in out

    def test_svp_capability_exits_3(self, tmp_path, capsys):
        from ortholat import exactmat as em

        base = tmp_path / "big.mat"
        base.write_text(catalog.format_matrix_text(em.identity(27)))
        rc = cli.main(["construct", str(base), "--w", "1", "--show", "density"])
        assert rc == 3

    def test_catalog_list(self, capsys):
        assert cli.main(["catalog", "list"]) == 0
        out = capsys.readouterr().out
        for name in ("d3", "e7", "e8-1", "leech-2", "e6"):
            assert name in out

    def test_entry_point_installed(self):
        out = subprocess.run(
            [sys.executable, "-m", "ortholat.cli", "table", "1", "--w-range", "1..1"],
            capture_output=True,
            text=True,
        )
        assert out.returncode == 0
        assert "0.176777" in out.stdout
