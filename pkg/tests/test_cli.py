import json
import subprocess
import sys

import pytest

from diamondkernel.cli import run_cli as main
from diamondkernel.formats import format_instance
from diamondkernel.generate import GenSpec, gen_figure3, generate
from diamondkernel.graph import Instance, Mode, complete_graph


@pytest.fixture
def fig3(tmp_path):
    path = tmp_path / "fig3.gr"
    path.write_text(format_instance(gen_figure3()))
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_solve_figure3(capsys, fig3):
    assert run(capsys, "solve", fig3, "--k", 4, "--mode", "editing") == (0, "yes opt=4\n")
    assert run(capsys, "solve", fig3, "--k", 3) == (1, "no\n")


def test_solve_writes_witness(capsys, fig3, tmp_path):
    wit = tmp_path / "w.edits"
    run(capsys, "solve", fig3, "--witness", wit)
    assert run(capsys, "verify", fig3, wit)[0] == 0


def test_verify_known_solution(capsys, fig3, tmp_path):
    edits = tmp_path / "known.edits"
    edits.write_text("add 2 17\ndel 1 17\ndel 15 16\ndel 3 24\n")
    assert run(capsys, "verify", fig3, edits, "--k", 4) == (0, "valid\n")
    assert run(capsys, "verify", fig3, edits, "--k", 4, "--mode", "deletion") == (1, "invalid\n")


def test_kernelize_diamond_free_deletion(capsys, tmp_path):
    path = tmp_path / "k5.gr"
    path.write_text(format_instance(Instance(complete_graph(range(1, 6)), 2)))
    code, out = run(capsys, "kernelize", path, "--mode", "deletion")
    stats = json.loads(out)
    assert code == 0 and stats["answer"] == "yes" and stats["n_out"] == 0


def test_kernelize_writes_kernel_and_trace(capsys, fig3, tmp_path):
    out, trace = tmp_path / "k.gr", tmp_path / "k.trace"
    code, text = run(capsys, "kernelize", fig3, "--out", out, "--trace", trace)
    assert code == 0 and json.loads(text)["n_out"] == 22
    assert trace.read_text() == "R5_delete_vertex 22 4\nR5_delete_vertex 23 4\n"
    assert "c label" in out.read_text()


def test_kernelize_no_instance_exit_code(capsys, tmp_path):
    path = tmp_path / "d.gr"
    path.write_text("p edge 4 5\ne 1 2\ne 1 3\ne 2 3\ne 2 4\ne 3 4\n")
    code, text = run(capsys, "kernelize", path, "--k", 0)
    assert code == 1 and json.loads(text)["answer"] == "no"


def test_batch_parallel_equals_sequential(capsys, tmp_path):
    src = tmp_path / "in"
    src.mkdir()
    for seed in range(12):
        spec = GenSpec(kind="cliques", n=9, clique_sizes=(3, 7), r=1, k=2, seed=seed)
        (src / f"g{seed:02d}.gr").write_text(format_instance(generate(spec)))
    outputs = []
    for jobs in (1, 3):
        kdir, tdir = tmp_path / f"k{jobs}", tmp_path / f"t{jobs}"
        code, text = run(capsys, "kernelize", src, "--jobs", jobs, "--out", kdir, "--trace", tdir)
        assert code == 0 and len(text.splitlines()) == 12
        files = {p.name: p.read_text() for d in (kdir, tdir) for p in sorted(d.iterdir())}
        outputs.append((text, files))
    assert outputs[0] == outputs[1]
    # and each batch line matches a single-file run
    code, single = run(capsys, "kernelize", src / "g03.gr")
    line = json.loads(outputs[0][0].splitlines()[3])
    assert line.pop("file") == "g03.gr" and line == json.loads(single)


def test_partition_output(capsys, fig3):
    code, out = run(capsys, "partition", fig3)
    assert code == 0
    assert out.splitlines() == ["i: 2 3 4 17 18 19 20 21 24", "ii: 1", "iii: 15 16 22 23",
                                "iv: 5 6 7 8 9 10 11 12 13 14", "v:"]


def test_gen_and_stats(capsys, tmp_path):
    path = tmp_path / "g.gr"
    assert run(capsys, "gen", "--kind", "figure3", "--k", 4, "--out", path)[0] == 0
    code, out = run(capsys, "stats", path)
    stats = json.loads(out)
    assert code == 0 and (stats["n"], stats["m"], stats["k"]) == (24, 116, 4)
    assert stats["cliques"] == {"big_type1": 1, "small_type1": 3, "type2": 2}
    code, out = run(capsys, "gen", "--n", 6, "--p", 1.0, "--k", 1)
    assert code == 0 and out.startswith("c k 1\np edge 6 15\n")


def test_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "solve", tmp_path / "missing.gr", "--k", 1)[0] == 2
    bad = tmp_path / "bad.gr"
    bad.write_text("p edge 2 1\ne 1 3\n")
    assert main(["solve", str(bad), "--k", "1"]) == 2
    assert "line 2" in capsys.readouterr().err
    assert run(capsys, "kernelize", bad, "--k", 1, "--jobs", 0)[0] == 2
    assert main(["solve"]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["--help"]) == 0


def test_module_entry_point(fig3):
    proc = subprocess.run([sys.executable, "-m", "diamondkernel", "solve", str(fig3)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "yes opt=4\n"
