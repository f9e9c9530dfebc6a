"""End-to-end CLI behavior through main(argv): output, exit codes, formats."""

import io
import json

import pytest

from crossbifix.cli import main

U96_LINES = [
    "001000101", "001000111", "001001011", "001001111", "001100101",
    "001100111", "001101011", "001101101", "001101111",
]


def run_cli(argv, capsys):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_gen_leading_run_text(capsys):
    rc, out, err = run_cli(["gen", "--n", "5", "--k", "3", "--construction", "s"], capsys)
    assert rc == 0
    assert out.splitlines() == ["q=2 n=5 I=0", "00011"]
    assert "size 1" in err and "cross-bifix-free: yes" in err


def test_gen_filtered_matches_worked_example(capsys):
    rc, out, _ = run_cli(["gen", "--n", "9", "--k", "6", "--construction", "u"], capsys)
    assert rc == 0
    assert out.splitlines() == ["q=2 n=9 I=0"] + sorted(U96_LINES)


def test_gen_shell_is_reported_not_cross_bifix_free(capsys):
    rc, out, err = run_cli(["gen", "--n", "9", "--k", "6", "--construction", "v"], capsys)
    assert rc == 0  # generation succeeded; the diagnostic tells the truth
    assert len(out.splitlines()) == 17
    assert "cross-bifix-free: no" in err
    assert "first overlap:" in err


def test_gen_json(capsys):
    rc, out, _ = run_cli(
        ["gen", "--n", "5", "--k", "3", "--construction", "s", "--format", "json"],
        capsys,
    )
    assert rc == 0
    assert json.loads(out) == {
        "q": 2, "n": 5, "I": [0], "J": [1], "words": ["00011"],
        "verified": True, "non_expandable": None,
    }


def test_gen_flipped_classes(capsys):
    rc, out, _ = run_cli(
        ["gen", "--q", "2", "--n", "5", "--k", "3", "--I", "1", "--construction", "s"],
        capsys,
    )
    assert rc == 0
    assert out.splitlines() == ["q=2 n=5 I=1", "11100"]


def test_gen_s_classic_ignores_i_flag(capsys):
    rc, out, _ = run_cli(
        ["gen", "--q", "3", "--n", "5", "--k", "3", "--I", "2",
         "--construction", "s-classic"],
        capsys,
    )
    assert rc == 0
    assert out.splitlines() == ["q=3 n=5 I=0", "00011", "00012", "00021", "00022"]


def test_gen_out_file(tmp_path, capsys):
    target = tmp_path / "code.txt"
    rc, out, _ = run_cli(
        ["gen", "--n", "5", "--k", "3", "--construction", "s", "--out", str(target)],
        capsys,
    )
    assert rc == 0 and out == ""
    assert target.read_text() == "q=2 n=5 I=0\n00011\n"


def test_gen_deterministic(capsys):
    args = ["gen", "--n", "9", "--k", "6", "--construction", "expanded"]
    rc1, out1, _ = run_cli(args, capsys)
    rc2, out2, _ = run_cli(args, capsys)
    assert rc1 == rc2 == 0 and out1 == out2


def test_gen_bad_params(capsys):
    rc, _, err = run_cli(["gen", "--n", "5", "--k", "7", "--construction", "s"], capsys)
    assert rc == 2 and "error:" in err


def test_gen_guard_refusal(capsys):
    rc, _, err = run_cli(
        ["gen", "--n", "40", "--k", "20", "--construction", "s", "--guard", "1000"],
        capsys,
    )
    assert rc == 3 and "refused" in err


def test_guard_envvar(capsys, monkeypatch):
    monkeypatch.setenv("CBF_GUARD", "1000")
    rc, _, _ = run_cli(["gen", "--n", "12", "--k", "6", "--construction", "s"], capsys)
    assert rc == 3
    # the flag wins over the environment
    rc, _, _ = run_cli(
        ["gen", "--n", "12", "--k", "6", "--construction", "s",
         "--guard", str(2 ** 20)],
        capsys,
    )
    assert rc == 0
    monkeypatch.setenv("CBF_GUARD", "zzz")
    rc, _, _ = run_cli(["gen", "--n", "5", "--k", "3", "--construction", "s"], capsys)
    assert rc == 2


def test_verify_pass_all_checks(tmp_path, capsys):
    target = tmp_path / "code.txt"
    target.write_text("q=2 n=5 I=0\n00011\n00101\n")
    rc, out, _ = run_cli(
        ["verify", str(target), "--checks", "bifix,cross,nonexpandable"], capsys
    )
    assert rc == 0
    lines = out.splitlines()
    assert lines[0].startswith("bifix: pass")
    assert lines[1].startswith("cross: pass")
    assert lines[2] == "nonexpandable: pass (checked 30 outside words)"


def test_verify_cross_failure_witness(tmp_path, capsys):
    target = tmp_path / "code.txt"
    target.write_text("0001001\n0010001\n")
    rc, out, _ = run_cli(["verify", str(target)], capsys)
    assert rc == 1
    assert out.splitlines() == [
        "cross: fail (prefix-of-x-is-suffix-of-v length=4 shared=0001 "
        "x=0001001 v=0010001)"
    ]


def test_verify_bifix_failure(tmp_path, capsys):
    target = tmp_path / "code.txt"
    target.write_text("0010001\n0001101\n")
    rc, out, _ = run_cli(["verify", str(target), "--checks", "bifix"], capsys)
    assert rc == 1
    assert out.splitlines() == ["bifix: fail (0010001 repeats its length-3 affix)"]


def test_verify_expandable_code_fails_the_check(tmp_path, capsys):
    target = tmp_path / "code.txt"
    target.write_text("00011\n")
    rc, _, _ = run_cli(["verify", str(target), "--checks", "nonexpandable"], capsys)
    assert rc == 2  # no alphabet known
    rc, out, _ = run_cli(
        ["verify", str(target), "--checks", "nonexpandable", "--q", "2"], capsys
    )
    assert rc == 1
    assert "can adjoin 00101" in out


def test_verify_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("q=2 n=5 I=0\n00011\n"))
    rc, out, _ = run_cli(["verify", "-"], capsys)
    assert rc == 0 and out.startswith("cross: pass")


def test_verify_unknown_check(tmp_path, capsys):
    target = tmp_path / "code.txt"
    target.write_text("00011\n")
    rc, _, _ = run_cli(["verify", str(target), "--checks", "magic"], capsys)
    assert rc == 2


def test_verify_missing_file(capsys):
    rc, _, err = run_cli(["verify", "/nonexistent/code.txt"], capsys)
    assert rc == 2 and "io error" in err


def test_count_both_agree(capsys):
    rc, out, _ = run_cli(["count", "--n", "10", "--k", "7"], capsys)
    assert rc == 0
    lines = out.splitlines()
    assert "branch: case3-recurrence" in lines
    assert "closed: 17" in lines and "enumerated: 17" in lines
    assert "agree: yes" in lines


@pytest.mark.parametrize("n,k", [(9, 4), (9, 8), (6, 4)])
def test_count_not_applicable(n, k, capsys):
    rc, out, err = run_cli(["count", "--n", str(n), "--k", str(k)], capsys)
    assert rc == 4
    assert "not applicable" in err
    assert "branch: not-applicable" in out


def test_count_enumerate_only(capsys):
    rc, out, _ = run_cli(
        ["count", "--n", "9", "--k", "6", "--method", "enumerate"], capsys
    )
    assert rc == 0
    assert "enumerated: 9" in out and "closed:" not in out


def test_count_json(capsys):
    rc, out, _ = run_cli(["count", "--n", "9", "--k", "6", "--format", "json"], capsys)
    assert rc == 0
    assert json.loads(out) == {
        "n": 9, "k": 6, "q": 2, "size_i": 1, "size_j": 1,
        "branch": "case2-interior", "closed": 9, "enumerated": 9, "agree": True,
    }


def test_count_invalid_params(capsys):
    rc, _, _ = run_cli(["count", "--n", "5", "--k", "0"], capsys)
    assert rc == 2


def test_table_markdown(capsys):
    rc, out, err = run_cli(["table"], capsys)
    assert rc == 0
    assert "### Table 1" in out and "### Table 2" in out
    rows = [line for line in out.splitlines() if line.startswith("| 13 | ")]
    assert rows[0] == "| 13 |  |  |  |  | 16 | 8 | 4 | 2 | 1 |  |  |  |  |"
    assert "erratum: computed 3, printed 2" in out
    assert "110 cells; errata flagged: 1; mismatches: 0" in err


def test_table_csv_and_json(tmp_path, capsys):
    rc, out, _ = run_cli(["table", "--format", "csv"], capsys)
    assert rc == 0
    assert out.splitlines()[1] == "n,k,closed,enumerated,golden,agree,erratum"
    target = tmp_path / "cells.json"
    rc, _, _ = run_cli(["table", "--format", "json", "--out", str(target)], capsys)
    assert rc == 0
    records = json.loads(target.read_text())
    assert len(records) == 110


def test_saturate_grows_seed(tmp_path, capsys):
    target = tmp_path / "seed.txt"
    target.write_text("q=2 n=5 I=0\n00011\n")
    rc, out, err = run_cli(["saturate", str(target)], capsys)
    assert rc == 0
    assert "added 1 words" in err
    assert out.splitlines() == ["q=2 n=5 I=0", "00011", "00101"]


def test_saturate_already_saturated(tmp_path, capsys):
    target = tmp_path / "code.txt"
    target.write_text("q=2 n=4\n0011\n")
    rc, out, err = run_cli(["saturate", str(target)], capsys)
    assert rc == 0 and "added 0 words" in err
    assert out.splitlines() == ["q=2 n=4", "0011"]


def test_saturate_json(tmp_path, capsys):
    target = tmp_path / "seed.txt"
    target.write_text("q=2 n=5 I=0\n00011\n")
    rc, out, _ = run_cli(["saturate", str(target), "--format", "json"], capsys)
    assert rc == 0
    record = json.loads(out)
    assert record["words"] == ["00011", "00101"]
    assert record["verified"] is True and record["non_expandable"] is True


def test_saturate_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("q=2 n=5 I=0\n00011\n"))
    rc, out, _ = run_cli(["saturate", "-"], capsys)
    assert rc == 0 and out.splitlines()[-1] == "00101"


def test_saturate_rejects_overlapping_input(tmp_path, capsys):
    target = tmp_path / "code.txt"
    target.write_text("q=2 n=3\n010\n")
    rc, _, err = run_cli(["saturate", str(target)], capsys)
    assert rc == 1 and "not cross-bifix-free" in err


def test_saturate_needs_alphabet(tmp_path, capsys):
    target = tmp_path / "seed.txt"
    target.write_text("00011\n")
    rc, _, _ = run_cli(["saturate", str(target)], capsys)
    assert rc == 2
    rc, out, _ = run_cli(["saturate", str(target), "--q", "2"], capsys)
    assert rc == 0
    assert out.splitlines() == ["q=2 n=5", "00011", "00101"]


def test_argparse_failures_return_two(capsys):
    assert main(["gen", "--n", "5", "--k", "3", "--construction", "zigzag"]) == 2
    capsys.readouterr()
    assert main([]) == 2
    capsys.readouterr()
    assert main(["frobnicate"]) == 2
    capsys.readouterr()
