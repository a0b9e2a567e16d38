from __future__ import annotations

import pytest

from posetpaths.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poset_young(capsys):
    code, out, _ = run(capsys, "poset", "--young", "2,1")
    assert code == 0
    assert "elements: 4" in out
    assert "covers: 3" in out
    assert "incomparable_pairs: 1" in out
    assert "# poset=young=2,1" in out


def test_poset_box_d3(capsys):
    code, out, _ = run(capsys, "poset", "--box", "2,2,2")
    assert code == 0
    assert "elements: 8" in out


def test_poset_file_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "poset", "--young", "2,1")
    body = "\n".join(
        line for line in out.splitlines() if line.startswith(("el ", "cov "))
    )
    f = tmp_path / "p.txt"
    f.write_text(body + "\n", encoding="utf-8")
    code, out2, _ = run(capsys, "poset", "--file", str(f))
    assert code == 0
    assert body in out2


def test_poset_rejects_bad_partition(capsys):
    code, _, err = run(capsys, "poset", "--young", "1,2")
    assert code == 2
    assert "error" in err


def test_graph_young_32(capsys):
    code, out, _ = run(capsys, "graph", "--young", "3,2", "--depth", "5", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert "level,index,ideal,dim" in lines
    assert lines[-1].startswith("5,0,") and lines[-1].endswith(",5")


def test_graph_text_mode(capsys):
    code, out, _ = run(capsys, "graph", "--chain", "4")
    assert code == 0
    assert "paths_to_top_level: 1" in out


def test_paths_young_list(capsys):
    code, out, _ = run(capsys, "paths", "--young", "2,1", "--depth", "3", "--list")
    assert code == 0
    assert "paths: 2" in out
    assert "0,1,2" in out and "0,1,3" in out


def test_paths_chain_full(capsys):
    code, out, _ = run(capsys, "paths", "--chain", "5", "--depth", "5")
    assert code == 0
    assert "paths: 1" in out


def test_paths_cap_exit_code(capsys):
    code, _, err = run(capsys, "paths", "--antichain", "6", "--path-cap", "5")
    assert code == 3
    assert "error" in err


def test_group_antichain(capsys):
    code, out, _ = run(capsys, "group", "--antichain", "3", "--depth", "4")
    assert code == 0
    assert "order: 6" in out
    assert "relations: all hold" in out


def test_group_chain_trivial(capsys):
    code, out, _ = run(capsys, "group", "--chain", "6", "--depth", "6")
    assert code == 0
    assert "order: 1" in out


def test_group_local_young31(capsys):
    code, out, _ = run(capsys, "group", "--young", "3,1", "--depth", "4", "--local", "1")
    assert code == 0
    assert "local i=1: product_order=2 group_order=2" in out


def test_group_csv(capsys):
    code, out, _ = run(capsys, "group", "--young", "2,1", "--format", "csv", "--local", "all")
    assert code == 0
    assert "relation_involution,,,pass," in out
    assert "relation_braid6,,,pass," in out
    assert any(line.startswith("local,") for line in out.splitlines())


def test_group_hook_note_reports_orders(capsys):
    code, out, _ = run(capsys, "group", "--young", "3,1")
    assert code == 0
    assert "hook_note: cells=4 order=6 factorial(cells)=24 factorial(cells-1)=6" in out


def test_measure_check_endpoint_central(capsys):
    code, out, _ = run(capsys, "measure", "check", "--endpoint", "3:0", "--young", "2,1")
    assert code == 0
    assert "central: yes" in out
    assert "exact_arithmetic: True" in out


def test_measure_check_perturbed_fails(capsys):
    code, out, _ = run(
        capsys, "measure", "check", "--endpoint", "3:0", "--young", "2,1", "--perturb", "0.1"
    )
    assert code == 1
    assert "central: NO" in out
    assert "witness: sigma_" in out


def test_measure_check_uniform(capsys):
    code, out, _ = run(capsys, "measure", "check", "--uniform", "--young", "3,2", "--depth", "6")
    assert code == 0
    assert "central: yes" in out


def test_measure_check_markov_file(tmp_path, capsys):
    kernel = tmp_path / "k.txt"
    kernel.write_text(
        "row 0:0 1:1\nrow 1:0 2:1/2 3:1/2\nrow 2:0 3:1\nrow 2:1 2:1\n",
        encoding="utf-8",
    )
    code, out, _ = run(
        capsys, "measure", "check", "--markov", str(kernel), "--young", "2,1", "--depth", "3"
    )
    assert code == 0
    assert "central: yes" in out
    biased = tmp_path / "b.txt"
    biased.write_text(
        "row 0:0 1:1\nrow 1:0 2:1/3 3:2/3\nrow 2:0 3:1\nrow 2:1 2:1\n",
        encoding="utf-8",
    )
    code, out, _ = run(
        capsys, "measure", "check", "--markov", str(biased), "--young", "2,1", "--depth", "3"
    )
    assert code == 1
    assert "central: NO" in out


def test_measure_check_markov_rejects_bad_row(tmp_path, capsys):
    kernel = tmp_path / "k.txt"
    kernel.write_text("row 0:0 1:1/2\n", encoding="utf-8")
    code, _, err = run(
        capsys, "measure", "check", "--markov", str(kernel), "--young", "2,1", "--depth", "3"
    )
    assert code == 2
    assert "error" in err


def test_measure_freq_rsk_single_letter(capsys):
    code, out, _ = run(
        capsys, "measure", "freq", "--rsk", "1.0", "--ideal", "hook:1,0",
        "--n", "40", "--replicas", "4", "--seed", "1",
    )
    assert code == 0
    assert "sampler,ideal,n,replicas,estimate,stderr,seed" in out
    assert '"hook:1,0",40,4,1.0,0.0,1' in out


def test_measure_freq_multiple_ideals(capsys):
    code, out, _ = run(
        capsys, "measure", "freq", "--plancherel",
        "--ideal", "hook:1,0", "--ideal", "full",
        "--n", "60", "--replicas", "4", "--seed", "2",
    )
    assert code == 0
    rows = [l for l in out.splitlines() if l.startswith("plancherel")]
    assert len(rows) == 2
    assert rows[1].split(",")[2:] == ["60", "4", "1.0", "0.0", "2"]


def test_measure_freq_endpoint_sampler(capsys):
    code, out, _ = run(
        capsys, "measure", "freq", "--endpoint", "6:0", "--box", "3,3",
        "--ideal", "hook:1,0", "--n", "6", "--replicas", "8", "--seed", "3",
    )
    assert code == 0
    assert "endpoint:6:0" in out


def test_measure_freq_byte_identical_runs(tmp_path, capsys):
    argv = [
        "measure", "freq", "--plancherel", "--ideal", "hook:1,0",
        "--n", "80", "--replicas", "6", "--seed", "11",
    ]
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_measure_sample_plancherel(capsys):
    code, out, _ = run(capsys, "measure", "sample", "--plancherel", "--n", "5", "--seed", "4")
    assert code == 0
    assert "step,row,col" in out
    assert out.splitlines()[-5].endswith("1,1,1")


def test_measure_sample_markov_ids(capsys):
    code, out, _ = run(
        capsys, "measure", "sample", "--endpoint", "3:0", "--young", "2,1",
        "--n", "3", "--seed", "5",
    )
    assert code == 0
    last = out.splitlines()[-1]
    assert last.startswith("0,1,")


def test_compare_rsk_alphas(capsys):
    code, out, _ = run(
        capsys, "compare", "--sampler", "rsk:0.7,0.3", "--sampler", "rsk:0.6,0.4",
        "--ideal", "hook:1,0", "--n", "800", "--replicas", "12", "--seed", "9",
    )
    assert code == 0
    assert ",distinguished" in out


def test_compare_same_spec_indistinguishable(capsys):
    code, out, _ = run(
        capsys, "compare", "--sampler", "plancherel", "--sampler", "plancherel",
        "--ideal", "hook:1,0", "--n", "200", "--replicas", "12", "--seed", "9",
    )
    assert code == 0
    assert ",indistinguishable" in out


def test_unknown_sampler_exit_2(capsys):
    code, _, err = run(
        capsys, "compare", "--sampler", "bogus", "--sampler", "plancherel",
        "--ideal", "full",
    )
    assert code == 2


def test_entry_point_installed():
    import shutil
    import subprocess

    exe = shutil.which("posetpaths")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run(
        [exe, "poset", "--young", "1"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert "elements: 2" in proc.stdout
