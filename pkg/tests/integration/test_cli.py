"""Tests for the castle-codes command line."""

from pathlib import Path

import pytest

from castle_codes.cli.main import build_parser, main
from castle_codes.codes.chain import CodeChain
from castle_codes.utils.text_formats import render_ints

HERMITIAN = ["--model", "hermitian", "--q", "2"]


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, list[str], str]:
    """Run the CLI and return (status, stdout lines, stderr)."""
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out.splitlines(), captured.err


def test_parser_lists_commands() -> None:
    """Test that every command is registered."""
    help_text = build_parser().format_help()
    commands = ("semigroup", "curve", "bounds", "code", "encode", "channel", "decode", "oracle")
    for command in commands:
        assert command in help_text


def test_semigroup(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the Suzuki semigroup summary."""
    status, lines, _ = run(capsys, "semigroup", "--gens", "8,10,12,13", "--q", "8")
    assert status == 0
    assert "genus: 14" in lines
    assert "conductor: 28" in lines
    assert "elements: 0,8,10,12,13,16,18,20,21,22,23,24,25,26" in lines
    assert "symmetric: true" in lines
    assert "lgm_bound: 65" in lines
    assert "lewittes_bound: 65" in lines


def test_curve(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the curve summary and point listing."""
    status, lines, _ = run(capsys, "curve", *HERMITIAN)
    assert status == 0
    assert lines[:6] == [
        "model: hermitian(q=2)",
        "field: gf(2^2)",
        "genus: 1",
        "n: 8",
        "semigroup: 2,3",
        "castle: true",
    ]
    assert lines[6:] == ["0 0", "0 1", "1 2", "1 3", "2 2", "2 3", "3 2", "3 3"]


def test_bounds_hermitian(capsys: pytest.CaptureFixture[str]) -> None:
    """Test every line of the Hermitian bound report."""
    status, lines, _ = run(capsys, "bounds", *HERMITIAN)
    assert status == 0
    assert lines == [
        "M: 0,2,3,4,5,6,7,9",
        "lambda_star: 8,6,5,4,3,2,2,1",
        "nstar: 1,2,2,3,4,5,6,8",
        "d_ord: 8,6,5,4,3,2,2,1",
        "d_ord_dual: 1,2,2,3,4,5,6,8",
        "goppa_improvements: 7,9",
        "monotone_deltas: 2,3,4,5,6,7",
    ]


def test_bounds_suzuki(capsys: pytest.CaptureFixture[str], suzuki2_reference: dict) -> None:
    """Test the 64-entry #Lambda* line of the Suzuki model."""
    status, lines, _ = run(capsys, "bounds", "--model", "suzuki", "--q0", "2", "--improved")
    assert status == 0
    assert f"lambda_star: {render_ints(suzuki2_reference['lambda'])}" in lines
    assert "delta=4 improved=58 one_point=58 monotone=true" in lines


def test_encode(capsys: pytest.CaptureFixture[str]) -> None:
    """Test encoding the worked message with plain and pretty output."""
    status, lines, _ = run(capsys, "encode", *HERMITIAN, "--m", "3", "--message", "1 1 1")
    assert status == 0
    assert lines == ["1 0 2 3 1 0 0 1"]
    _, lines, _ = run(capsys, "--pretty", "encode", *HERMITIAN, "--m", "3", "--message", "1 1 1")
    assert lines == ["1 0 a a^2 1 0 0 1"]


def test_encode_from_descriptor(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    """Test reading the code from a descriptor file."""
    descriptor = tmp_path / "code.txt"
    descriptor.write_text("format=castle-codes/1\nmodel=hermitian\nq=2\nm=3\n", encoding="utf-8")
    status, lines, _ = run(capsys, "encode", "--code", str(descriptor), "--message", "a^3 1 1")
    assert status == 0
    assert lines == ["1 0 2 3 1 0 0 1"]


def test_channel_with_explicit_error(capsys: pytest.CaptureFixture[str]) -> None:
    """Test adding a given error pattern."""
    status, lines, _ = run(
        capsys,
        "channel",
        *HERMITIAN,
        "--m", "3",
        "--word", "1 0 2 3 1 0 0 1",
        "--error", "1 0 0 2 0 0 0 0",
    )  # fmt: skip
    assert status == 0
    assert lines == ["0 0 2 1 1 0 0 1", "1 0 0 2 0 0 0 0"]


def test_channel_is_reproducible(capsys: pytest.CaptureFixture[str]) -> None:
    """Test that the same seed gives the same error."""
    argv = ["channel", *HERMITIAN, "--m", "3", "--word", "1 0 2 3 1 0 0 1"]
    _, first, _ = run(capsys, *argv, "--weight", "2", "--seed", "9")
    _, second, _ = run(capsys, *argv, "--weight", "2", "--seed", "9")
    assert first == second
    assert sum(1 for v in first[1].split() if v != "0") == 2


def test_decode_worked_example(capsys: pytest.CaptureFixture[str]) -> None:
    """Test decoding the worked received word and its vote log."""
    status, lines, _ = run(capsys, "decode", *HERMITIAN, "--m", "3", "--word", "0 0 2 1 1 0 0 1")
    assert status == 0
    assert lines == [
        "error: 1 0 0 2 0 0 0 0",
        "codeword: 1 0 2 3 1 0 0 1",
        "message: 1 1 1",
        "syndromes: 3 2 1 2 1 2 1 1",
        "step l=5 pairs=5 candidates (3,3):3->2 s_6=2 (1/1)",
        "step l=6 pairs=6 candidates (3,4):1->1 (4,3):1->1 s_7=1 (2/2)",
        "step l=7 pairs=8 candidates (3,6):1->1 (4,5):1->1 (5,4):1->1 (6,3):1->1 s_8=1 (4/4)",
    ]


def test_decode_pretty(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the pretty vote log."""
    _, lines, _ = run(
        capsys, "--pretty", "decode", *HERMITIAN, "--m", "3", "--word", "0 0 a 1 1 0 0 1"
    )
    assert lines[0] == "error: 1 0 0 a 0 0 0 0"
    assert lines[4] == "step l=5 pairs=5 candidates (3,3):a^2->a s_6=a (1/1)"


def test_code_info(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the parameter listing of C(5Q)."""
    status, lines, _ = run(capsys, "code", "info", *HERMITIAN, "--m", "5")
    assert status == 0
    assert "n: 8" in lines
    assert "k: 5" in lines
    assert "exact_distance: 3" in lines


def test_domain_error_exits_one(capsys: pytest.CaptureFixture[str]) -> None:
    """Test that an out-of-range m is a domain error."""
    status, lines, err = run(capsys, "code", "info", *HERMITIAN, "--m", "10")
    assert status == 1
    assert lines == []
    assert err.startswith("error: ")
    assert "m=10" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["bounds", "--model", "klein"],
        ["encode", *HERMITIAN, "--message", "1 1 1"],
        ["encode", *HERMITIAN, "--m", "3", "--message", "1 x 1"],
        ["oracle", "distance", "--matrix", "/nonexistent/matrix.txt"],
        ["semigroup", "--gens", "eight"],
    ],
)
def test_usage_errors_exit_two(argv: list[str], capsys: pytest.CaptureFixture[str]) -> None:
    """Test that bad flags exit with status 2 and name the flag."""
    with pytest.raises(SystemExit) as exc_info:
        main(argv)
    assert exc_info.value.code == 2
    assert "--" in capsys.readouterr().err


def test_oracle_distance(
    capsys: pytest.CaptureFixture[str], tmp_path: Path, hermitian2_chain: CodeChain
) -> None:
    """Test the exact distance of a generator matrix file."""
    matrix = tmp_path / "c5.txt"
    matrix.write_text(hermitian2_chain.code_at(5).generator.to_text(), encoding="utf-8")
    status, lines, _ = run(capsys, "oracle", "distance", "--matrix", str(matrix))
    assert status == 0
    assert lines == ["3"]
    status, lines, _ = run(capsys, "--jobs", "2", "oracle", "weights", "--matrix", str(matrix))
    assert status == 0
    assert lines[0] == "0 1"
    assert sum(int(line.split()[1]) for line in lines) == 4**5


def test_code_matrix_round_trip(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    """Test that an exported improved code can be swept by the oracle."""
    status, lines, _ = run(capsys, "code", "matrix", *HERMITIAN, "--delta", "4")
    assert status == 0
    matrix = tmp_path / "improved.txt"
    matrix.write_text("\n".join(lines) + "\n", encoding="utf-8")
    _, lines, _ = run(capsys, "oracle", "distance", "--matrix", str(matrix))
    assert lines == ["4"]


@pytest.mark.slow
def test_oracle_verify(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the verification table for the Hermitian curve over GF(4)."""
    status, lines, _ = run(capsys, "oracle", "verify", *HERMITIAN)
    assert status == 0
    assert len(lines) == 13
    assert all("PASS" in line for line in lines)
