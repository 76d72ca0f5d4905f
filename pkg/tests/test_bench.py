import csv

from hgmus.bench import main


def test_bench_writes_tables_and_figures(tmp_path, capsys):
    out = tmp_path / "b"
    assert main(["--outdir", str(out), "--instances", "4", "--max-groups", "8",
                 "--sizes", "20,40"]) == 0
    rows = list(csv.DictReader(open(out / "enumeration.csv")))
    assert len(rows) == 4
    ext = list(csv.DictReader(open(out / "extraction.csv")))
    assert [int(r["groups"]) for r in ext] == [20, 40]
    assert (out / "enumeration.png").stat().st_size > 0
    assert (out / "extraction.png").stat().st_size > 0
    assert "mus_per_sec=" in capsys.readouterr().out
