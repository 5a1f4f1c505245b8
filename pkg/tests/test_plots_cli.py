from fractions import Fraction as F

import pytest

from zigfringe import (
    FringeSeries,
    ZigguratGrid,
    fringe_series,
    grid_csv,
    grid_pgm,
    grid_svg,
    max_rot,
    series_csv,
    series_svg,
    ziggurat_grid,
)
from zigfringe.cli import run
from zigfringe.plots import _dec


def test_fringe_series_axis_and_values():
    series = fringe_series("abaab", 4, jobs=1)
    xs = [x for x, _ in series.points]
    assert xs == [F(0), F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(3, 4), F(1)]
    values = dict(series.points)
    assert values[F(0)] == F(1)
    assert values[F(1, 3)] == F(1, 2)
    assert values[F(1, 4)] == F(1, 4)


def test_ziggurat_grid_shape_and_values():
    grid = ziggurat_grid("ab", 2, jobs=1)
    assert grid.rs == grid.ss == (F(0), F(1, 2), F(1))
    assert grid.values[0][0] == max_rot("ab", F(0), F(0))
    assert grid.values[1][2] == max_rot("ab", F(1, 2), F(1))
    assert len(grid.values) == 3 and all(len(row) == 3 for row in grid.values)


def test_jobs_do_not_change_results():
    one = fringe_series("ababb", 12, side="right", jobs=1)
    two = fringe_series("ababb", 12, side="right", jobs=2)
    assert one == two
    g1 = ziggurat_grid("ab", 3, jobs=1)
    g2 = ziggurat_grid("ab", 3, jobs=2)
    assert g1 == g2


def test_series_csv_layout():
    series = fringe_series("abaab", 3, jobs=1)
    text = series_csv(series)
    lines = text.splitlines()
    assert lines[0] == "p,q,fr_num,fr_den"
    assert lines[1] == "0,1,1,1"
    assert lines[-1] == "1,1,1,1"
    assert text.endswith("\n")
    assert len(lines) == 1 + len(series.points)


def test_grid_csv_layout():
    grid = ziggurat_grid("ab", 2, jobs=1)
    lines = grid_csv(grid).splitlines()
    assert lines[0] == "r_num,r_den,s_num,s_den,R_num,R_den"
    assert lines[1] == "0,1,0,1,1,1"
    assert len(lines) == 1 + 9
    # r varies in the outer loop, s in the inner one
    assert lines[2].startswith("0,1,1,2,")
    assert lines[4].startswith("1,2,0,1,")


def test_dec_rendering():
    assert _dec(F(1, 3)) == "0.333333"
    assert _dec(F(1, 2)) == "0.5"
    assert _dec(F(0)) == "0"
    assert _dec(F(2)) == "2"
    assert _dec(F(-1, 8), places=3) == "-0.125"
    assert _dec(F(2, 3), places=1) == "0.7"
    assert _dec(F(1, 2), places=0) == "1"
    assert _dec(F(-1, 10**9)) == "0"


def test_grid_pgm_frozen():
    grid = ZigguratGrid(
        "w",
        rs=(F(0), F(1)),
        ss=(F(0), F(1)),
        values=((F(0), F(1)), (F(2), F(3))),
    )
    assert grid_pgm(grid) == "P2\n2 2\n255\n85 255\n0 170\n"


def test_grid_pgm_constant_grid_is_black():
    grid = ZigguratGrid(
        "w",
        rs=(F(0), F(1)),
        ss=(F(0), F(1)),
        values=((F(5), F(5)), (F(5), F(5))),
    )
    assert grid_pgm(grid) == "P2\n2 2\n255\n0 0\n0 0\n"


def test_series_svg_structure():
    series = fringe_series("abaab", 4, jobs=1)
    text = series_svg(series)
    assert text.startswith('<svg xmlns="http://www.w3.org/2000/svg" version="1.1"')
    assert "<title>left fringe lengths of abaab</title>" in text
    assert text.count("<line") == 1 + len(series.points)
    assert text.rstrip().endswith("</svg>")


def test_grid_svg_structure():
    grid = ziggurat_grid("ab", 2, jobs=1)
    text = grid_svg(grid)
    assert text.count("<rect") == 9
    assert 'fill="rgb(' in text


def test_cli_single_value_commands(capsys):
    assert run(["rot-max", "abaab", "1/3", "1/2"]) == 0
    assert capsys.readouterr().out == "3/1\n"
    assert run(["rot-max", "abaab", "1/3", "1/2", "--full-enumeration"]) == 0
    assert capsys.readouterr().out == "3/1\n"
    assert run(["stairstep", "abaab", "1/3", "3/1"]) == 0
    assert capsys.readouterr().out == "1/2\n"
    assert run(["stairstep", "abaab", "1/3", "3", "--fringe-caps"]) == 0
    assert capsys.readouterr().out == "1/2\n"
    assert run(["fringe", "abaab", "1/3"]) == 0
    assert capsys.readouterr().out == "1/2\n"
    assert run(["fringe", "abaab", "1/4", "--side", "right"]) == 0
    assert capsys.readouterr().out == "1/6\n"
    assert run(["sigma", "abbbaabaaabbbb", "3"]) == 0
    assert capsys.readouterr().out == "7/3\n"


def test_cli_domain_errors_exit_1(capsys):
    assert run(["sigma", "abaab", "4"]) == 1
    err = capsys.readouterr().err
    assert err.startswith("NotADivisor:")
    assert run(["rot-max", "ab", "1/10", "1/10", "--cap", "10"]) == 1
    assert capsys.readouterr().err.startswith("EnumerationCapExceeded:")


def test_cli_usage_errors_exit_2(capsys):
    assert run(["fringe", "abaab", "1/0"]) == 2
    assert run(["fringe", "ac", "1/2"]) == 2
    assert run(["no-such-command"]) == 2
    assert run(["fringe-plot", "abaab", "--jobs", "0"]) == 2
    assert "jobs must be >= 1" in capsys.readouterr().err


def test_cli_table(capsys):
    assert run(["table1"]) == 0
    out = capsys.readouterr().out
    assert "aaabaaabbbb" in out
    assert out.count("recorded") == 3


def test_cli_fringe_plot_csv(capsys):
    assert run(["fringe-plot", "abaab", "--max-q", "10"]) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0] == "p,q,fr_num,fr_den"
    assert lines[1] == "0,1,1,1"
    assert lines[-1] == "1,1,1,1"


def test_cli_ziggurat_formats(capsys):
    assert run(["ziggurat", "ab", "--max-denom", "2"]) == 0
    csv_out = capsys.readouterr().out
    assert csv_out.splitlines()[0] == "r_num,r_den,s_num,s_den,R_num,R_den"
    assert run(["ziggurat", "ab", "--max-denom", "2", "--format", "pgm"]) == 0
    assert capsys.readouterr().out.startswith("P2\n3 3\n255\n")
    assert run(["ziggurat", "ab", "--max-denom", "2", "--format", "svg"]) == 0
    assert capsys.readouterr().out.count("<rect") == 9


def test_cli_output_file(tmp_path, capsys):
    target = tmp_path / "plot.csv"
    assert run(["fringe-plot", "abaab", "--max-q", "6", "--output", str(target)]) == 0
    assert capsys.readouterr().out == ""
    text = target.read_text(encoding="utf-8")
    assert text.splitlines()[0] == "p,q,fr_num,fr_den"

    assert run(["fringe-plot", "abaab", "--max-q", "6"]) == 0
    assert capsys.readouterr().out == text


def test_cli_output_failure(tmp_path, capsys):
    missing = tmp_path / "no" / "dir" / "out.csv"
    assert run(["ziggurat", "ab", "--max-denom", "2", "--output", str(missing)]) == 1
    assert capsys.readouterr().err.startswith("IoFailure:")


def test_cli_selfsim_check(capsys):
    assert run(["selfsim-check", "ababb", "--max-q", "12"]) == 0
    out = capsys.readouterr().out
    assert "outer: ok (14 points)" in out
    assert "middle: ok" in out

    assert run(["selfsim-check", "abaab", "--max-q", "15"]) == 0
    out = capsys.readouterr().out
    assert out.count(": ok (") == 6


def test_cli_help_exits_zero(capsys):
    assert run(["--help"]) == 0
    assert "zigfringe" in capsys.readouterr().out
