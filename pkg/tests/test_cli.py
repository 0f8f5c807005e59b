"""CLI contract: output formats, exit codes, stdin verification, DOT export."""

import io
from pathlib import Path

import pytest

from graycycles import parse_word, verify_ocycle
from graycycles.cli import main

GOLDEN_345 = Path(__file__).parent / "data" / "gray_3_4_5.txt"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def feed(monkeypatch, text):
    monkeypatch.setattr("sys.stdin", io.StringIO(text))


def test_gray_golden_file(capsys):
    code, out, err = run(capsys, "gray", "3", "4", "5")
    assert code == 0 and err == ""
    assert out == GOLDEN_345.read_text()


def test_gray_stream_identical(capsys):
    code, plain, _ = run(capsys, "gray", "2", "5", "2")
    code2, streamed, _ = run(capsys, "gray", "2", "5", "2", "--stream")
    assert code == code2 == 0
    assert plain == streamed


def test_gray_empty_set(capsys):
    code, out, err = run(capsys, "gray", "3", "2", "5")
    assert code == 0 and out == "" and err == ""


def test_gray_bad_params(capsys):
    code, out, err = run(capsys, "gray", "0", "2", "1")
    assert code == 2 and "error" in err


def test_count(capsys):
    assert run(capsys, "count", "3", "4", "5") == (0, "16\n", "")
    assert run(capsys, "count", "2", "6", "3") == (0, "20\n", "")
    assert run(capsys, "count", "2", "4", "9") == (0, "0\n", "")


def test_exists_exit_codes(capsys):
    code, out, _ = run(capsys, "exists", "2", "4", "2", "2")
    assert code == 1 and out == "no (n-s = gcd(n,s))\n"
    code, out, _ = run(capsys, "exists", "2", "4", "2", "1")
    assert code == 0 and out == "yes (n-s > gcd(n,s))\n"
    code, out, _ = run(capsys, "exists", "2", "4", "1", "2")
    assert code == 0 and out == "yes (degenerate-checked)\n"
    code, out, _ = run(capsys, "exists", "2", "4", "9", "1")
    assert code == 1 and out == "no (empty-set)\n"
    code, out, err = run(capsys, "exists", "2", "4", "2", "0")
    assert code == 2 and "error" in err


def test_ocycle_fixed(capsys):
    code, out, err = run(capsys, "ocycle", "fixed", "2", "4", "2", "1")
    assert code == 0
    cycle = [parse_word(line) for line in out.splitlines()]
    assert verify_ocycle(cycle, cycle, 1).ok
    assert len(cycle) == 6


def test_ocycle_fixed_not_eulerian(capsys):
    code, out, err = run(capsys, "ocycle", "fixed", "2", "4", "2", "2")
    assert code == 1 and out == ""
    assert "digraph-disconnected" in err


def test_ocycle_fixed_empty(capsys):
    code, out, err = run(capsys, "ocycle", "fixed", "2", "4", "9", "1")
    assert code == 1 and "empty" in err


def test_ocycle_compressed(capsys):
    code, out, _ = run(capsys, "ocycle", "fixed", "2", "4", "2", "1", "--compressed")
    assert code == 0
    assert out.strip() == "001100101010110011"
    code, out, _ = run(capsys, "ocycle", "range", "2", "4", "1", "2", "2", "--compressed")
    assert code == 0
    assert len(out.strip()) == 20


def test_ocycle_range(capsys):
    code, out, _ = run(capsys, "ocycle", "range", "3", "3", "0", "6", "1")
    cycle = [parse_word(line) for line in out.splitlines()]
    assert code == 0 and len(cycle) == 27
    assert verify_ocycle(cycle, cycle, 1).ok


def test_ocycle_range_bad_bounds(capsys):
    code, _, err = run(capsys, "ocycle", "range", "2", "4", "2", "1", "1")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "ocycle", "fixed", "2", "4", "2", "0")
    assert code == 2


def test_verify_gray_roundtrip(capsys, monkeypatch):
    _, out, _ = run(capsys, "gray", "3", "4", "5")
    feed(monkeypatch, out)
    code, verdict, _ = run(capsys, "verify", "gray", "3", "4", "5")
    assert code == 0 and verdict == "ok\n"


def test_verify_gray_comments_and_blanks(capsys, monkeypatch):
    feed(monkeypatch, "# weight-1 words, n=2\n\n01\n10\n")
    code, verdict, _ = run(capsys, "verify", "gray", "2", "2", "1")
    assert code == 0 and verdict == "ok\n"


def test_verify_gray_rejects_bad_list(capsys, monkeypatch):
    feed(monkeypatch, "0122\n2210\n")
    code, verdict, _ = run(capsys, "verify", "gray", "3", "4", "5")
    assert code == 1
    assert verdict.startswith("violation at index")


def test_verify_gray_rejects_garbage(capsys, monkeypatch):
    feed(monkeypatch, "01x2\n")
    code, _, err = run(capsys, "verify", "gray", "3", "4", "5")
    assert code == 1 and "line 1" in err


def test_verify_ocycle_roundtrip(capsys, monkeypatch):
    _, out, _ = run(capsys, "ocycle", "fixed", "2", "4", "2", "1")
    feed(monkeypatch, out)
    code, verdict, _ = run(capsys, "verify", "ocycle", "4", "1")
    assert code == 0 and verdict == "ok\n"


def test_verify_ocycle_rejects_broken_cycle(capsys, monkeypatch):
    feed(monkeypatch, "0011\n0101\n")
    code, verdict, _ = run(capsys, "verify", "ocycle", "4", "2")
    assert code == 1 and verdict.startswith("violation at index")


def test_verify_ocycle_rejects_wrong_length(capsys, monkeypatch):
    feed(monkeypatch, "0011\n")
    code, verdict, _ = run(capsys, "verify", "ocycle", "5", "1")
    assert code == 1 and "length" in verdict


def test_verify_ocycle_bad_s(capsys, monkeypatch):
    feed(monkeypatch, "0011\n")
    code, _, err = run(capsys, "verify", "ocycle", "4", "4")
    assert code == 2 and "error" in err


def test_digraph_stdout_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "digraph", "fixed", "2", "4", "2", "2")
    assert code == 0
    assert out.startswith("digraph transitions {")
    assert out.count("->") == 6

    target = tmp_path / "graph.dot"
    code, piped, _ = run(capsys, "digraph", "fixed", "2", "4", "2", "2", "--dot", str(target))
    assert code == 0 and piped == ""
    assert target.read_text() == out

    code, ranged, _ = run(capsys, "digraph", "range", "2", "3", "0", "1", "1")
    assert code == 0 and ranged.count("->") == 4


def test_usage_errors_exit_2(capsys):
    for argv in (["gray", "3", "4"], ["nonsense"], [], ["ocycle", "fixed", "2"]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2


def test_gray_line_count_matches_count(capsys):
    for m in (2, 3):
        for n in range(1, 5):
            for k in range(0, (m - 1) * n + 1):
                _, listing, _ = run(capsys, "gray", str(m), str(n), str(k))
                _, total, _ = run(capsys, "count", str(m), str(n), str(k))
                assert len(listing.splitlines()) == int(total)


def test_verify_accepts_own_gray_output(capsys, monkeypatch):
    for m, n, k in [(2, 4, 2), (3, 3, 4), (4, 2, 3), (2, 5, 0)]:
        _, out, _ = run(capsys, "gray", str(m), str(n), str(k))
        feed(monkeypatch, out)
        code, verdict, _ = run(capsys, "verify", "gray", str(m), str(n), str(k))
        assert code == 0 and verdict == "ok\n", (m, n, k)


def test_digraph_empty_set(capsys):
    code, out, _ = run(capsys, "digraph", "fixed", "2", "4", "9", "1")
    assert code == 0
    assert out == "digraph transitions {\n}\n"


def test_byte_identical_reruns(capsys):
    first = run(capsys, "ocycle", "range", "2", "4", "0", "3", "2")
    second = run(capsys, "ocycle", "range", "2", "4", "0", "3", "2")
    assert first == second
    third = run(capsys, "gray", "4", "4", "6")
    fourth = run(capsys, "gray", "4", "4", "6")
    assert third == fourth
