import csv

import matplotlib.pyplot as plt
import pytest

from qoinfo_figures import FigureSpec, SchemaError, render
from qoinfo_figures.cli import main


def rows_in(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def test_hist_renders_fig1a_sample(fig1a_csv, tmp_path):
    out = tmp_path / "fig1a.png"
    report = render(FigureSpec(fig1a_csv, "hist", out, bins=11))
    assert out.exists()
    assert report["rows"] == len(rows_in(fig1a_csv))
    assert sum(report["per_n"][4]["bin_counts"]) == report["rows"]


def test_hist_renders_fig1b(fig1b_csv, tmp_path):
    out = tmp_path / "fig1b.png"
    report = render(FigureSpec(fig1b_csv, "hist", out))
    assert out.exists()
    assert sorted(report["per_n"]) == [4, 5, 6, 7]
    for n, per_n in report["per_n"].items():
        assert sum(per_n["bin_counts"]) == per_n["rows"] == 40


def test_grid_renders_fig2_with_sixteen_curves(fig2_csv, tmp_path):
    out = tmp_path / "fig2.png"
    report = render(FigureSpec(fig2_csv, "timeseries-grid", out))
    assert out.exists()
    assert report["panels"] == 4
    assert report["curves"] == 16
    assert report["rows"] == 16 * 31


def test_rerender_is_dimension_and_range_stable(fig2_csv, tmp_path):
    reports, shapes = [], []
    for tag in ("a", "b"):
        out = tmp_path / f"fig2_{tag}.png"
        reports.append(render(FigureSpec(fig2_csv, "timeseries-grid", out)))
        shapes.append(plt.imread(out).shape)
    assert shapes[0] == shapes[1]
    assert reports[0]["t_range"] == reports[1]["t_range"]
    assert reports[0]["y_range"] == reports[1]["y_range"]


def test_missing_column_is_named(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("experiment,n,sample\nfig1a,4,1\n")
    out = tmp_path / "bad.png"
    with pytest.raises(SchemaError, match="omega_q"):
        render(FigureSpec(path, "hist", out))
    assert not out.exists()


def test_empty_body_is_rejected(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("experiment,n,sample,omega_q\n")
    out = tmp_path / "empty.png"
    with pytest.raises(SchemaError):
        render(FigureSpec(path, "hist", out))
    assert not out.exists()


def test_constant_series_still_renders(tmp_path):
    path = tmp_path / "flat.csv"
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["experiment", "n", "sample", "omega_q"])
        for i in range(5):
            writer.writerow(["fig1a", 4, i + 1, "1.0"])
    report = render(FigureSpec(path, "hist", tmp_path / "flat.png", bins=7))
    assert sum(report["per_n"][4]["bin_counts"]) == 5


def test_cli_render_roundtrip(fig2_csv, tmp_path, capsys):
    out = tmp_path / "cli.png"
    code = main(["render", "--kind", "timeseries-grid",
                 "--in", str(fig2_csv), "--out", str(out)])
    assert code == 0
    assert out.exists()
    assert '"curves": 16' in capsys.readouterr().out


def test_cli_schema_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("experiment,n,sample\nfig1a,4,1\n")
    code = main(["render", "--kind", "hist",
                 "--in", str(path), "--out", str(tmp_path / "x.png")])
    assert code == 2
    assert "omega_q" in capsys.readouterr().err
