import numpy as np

from thuegrid import cli
from thuegrid import load_checkpoint


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_order_cartesian_five(capsys):
    code, out, _ = run_cli(capsys, ["order", "--family", "cartesian", "--count", "5"])
    assert code == 0
    assert out.splitlines()[-1] == "4 2 0"


def test_order_strong_thirteen(capsys):
    code, out, _ = run_cli(capsys, ["order", "--family", "strong", "--count", "13"])
    assert code == 0
    assert "12 3 3" in out.splitlines()


def test_order_seed_block_exactly(capsys):
    code, out, _ = run_cli(capsys, ["order", "--family", "cartesian", "--count", "4"])
    assert code == 0
    assert out.splitlines() == ["0 0 0", "1 1 0", "2 0 1", "3 1 1"]


def test_order_too_small(capsys):
    code, _, err = run_cli(capsys, ["order", "--family", "cartesian", "--count", "3"])
    assert code == 1
    assert err.startswith("error:")


def test_run_to_empty_frontier(capsys):
    code, out, _ = run_cli(
        capsys, ["run", "--family", "cartesian", "--colors", "3", "--max-vertices", "30"]
    )
    assert code == 0
    assert out.splitlines() == ["4,2", "5,2", "6,0", "pi >= 4"]


def test_run_inconclusive_exit_two(capsys):
    code, out, _ = run_cli(
        capsys, ["run", "--family", "cartesian", "--colors", "5", "--max-vertices", "6"]
    )
    assert code == 2
    assert out.splitlines() == ["4,3", "5,10", "6,22"]


def test_run_validation_failures(capsys):
    for argv in (
        ["run", "--family", "cartesian", "--colors", "5", "--max-vertices", "3"],
        ["run", "--family", "cartesian", "--colors", "0", "--max-vertices", "10"],
        ["run", "--family", "cartesian", "--colors", "5", "--max-vertices", "10", "--threads", "0"],
        ["run", "--family", "nosuch", "--colors", "5", "--max-vertices", "10"],
    ):
        code, _, err = run_cli(capsys, argv)
        assert code == 1
        assert err.startswith("error:")


def test_run_csv_roundtrip(tmp_path, capsys):
    csv_path = tmp_path / "table.csv"
    code, out, _ = run_cli(
        capsys,
        ["run", "--family", "cartesian", "--colors", "4", "--max-vertices", "12",
         "--output", str(csv_path)],
    )
    assert code == 0
    stdout_rows = [tuple(map(int, line.split(","))) for line in out.splitlines()[:-1]]
    assert cli.read_counts_csv(csv_path) == stdout_rows
    text = csv_path.read_text()
    assert text.startswith("i,n\n") and text.endswith("\n") and "\r" not in text


def test_run_checkpoint_and_resume(tmp_path, capsys):
    ckpt = tmp_path / "part.ckpt"
    code, full_out, _ = run_cli(
        capsys, ["run", "--family", "cartesian", "--colors", "5", "--max-vertices", "12"]
    )
    assert code == 2
    code, _, _ = run_cli(
        capsys,
        ["run", "--family", "cartesian", "--colors", "5", "--max-vertices", "8",
         "--checkpoint", str(ckpt)],
    )
    assert code == 2
    fr, _meta = load_checkpoint(ckpt)
    assert fr.i == 8
    code, resumed_out, _ = run_cli(
        capsys,
        ["run", "--family", "cartesian", "--colors", "5", "--max-vertices", "12",
         "--resume", str(ckpt)],
    )
    assert code == 2
    assert full_out.splitlines()[5:] == resumed_out.splitlines()


def test_run_resume_mismatch(tmp_path, capsys):
    ckpt = tmp_path / "c.ckpt"
    run_cli(capsys, ["run", "--family", "cartesian", "--colors", "5",
                     "--max-vertices", "6", "--checkpoint", str(ckpt)])
    code, _, err = run_cli(
        capsys,
        ["run", "--family", "strong", "--colors", "5", "--max-vertices", "8",
         "--resume", str(ckpt)],
    )
    assert code == 1
    assert "does not match" in err


def test_check_seed_file(tmp_path, capsys):
    path = tmp_path / "seed.txt"
    path.write_text("0 1 2 3\n")
    code, out, _ = run_cli(capsys, ["check", "--family", "cartesian", "--colors", "5", str(path)])
    assert code == 0
    assert out.strip() == "non-repetitive"


def test_check_adjacent_repeat(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("0 0 1 2\n")
    code, out, _ = run_cli(capsys, ["check", "--family", "cartesian", "--colors", "5", str(path)])
    assert code == 3
    assert out.splitlines() == ["0", "1", "tail_to_head"]


def test_check_five_vertex_clean(tmp_path, capsys):
    path = tmp_path / "five.txt"
    path.write_text("0 1 2 0 2\n")
    code, out, _ = run_cli(capsys, ["check", "--family", "cartesian", "--colors", "5", str(path)])
    assert code == 0
    assert out.strip() == "non-repetitive"


def test_check_bad_inputs(tmp_path, capsys):
    bad_token = tmp_path / "tok.txt"
    bad_token.write_text("0 1 x 3\n")
    code, _, err = run_cli(capsys, ["check", "--family", "cartesian", "--colors", "5", str(bad_token)])
    assert code == 1 and err.startswith("error:")

    too_big = tmp_path / "big.txt"
    too_big.write_text("0 1 2 7\n")
    code, _, err = run_cli(capsys, ["check", "--family", "cartesian", "--colors", "5", str(too_big)])
    assert code == 1 and err.startswith("error:")

    short = tmp_path / "short.txt"
    short.write_text("0 1 2\n")
    code, _, err = run_cli(capsys, ["check", "--family", "cartesian", "--colors", "5", str(short)])
    assert code == 1 and err.startswith("error:")

    code, _, err = run_cli(capsys, ["check", "--family", "cartesian", "--colors", "5",
                                    str(tmp_path / "missing.txt")])
    assert code == 1 and err.startswith("error:")


def test_usage_errors_exit_one(capsys):
    assert run_cli(capsys, ["nosuchcmd"])[0] == 1
    assert run_cli(capsys, ["run", "--family", "cartesian"])[0] == 1
