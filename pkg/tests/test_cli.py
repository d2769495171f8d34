import json

import pytest

from distinct_squares.cli import main


@pytest.fixture
def running_file(tmp_path):
    path = tmp_path / "running.txt"
    path.write_bytes(b"ababaaababa\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_squares_tsv(capsys, running_file):
    code, out, _ = run(capsys, "squares", running_file)
    assert code == 0
    assert out == "5\t2\n1\t4\n2\t4\n"


def test_squares_json(capsys, running_file):
    _, out, _ = run(capsys, "squares", "--json", running_file)
    assert json.loads(out) == [
        {"start": 5, "length": 2},
        {"start": 1, "length": 4},
        {"start": 2, "length": 4},
    ]


@pytest.mark.parametrize(
    "command, expected",
    [
        ("sa", [12, 11, 5, 6, 9, 3, 7, 1, 10, 4, 8, 2]),
        ("lcp", [0, 0, 1, 2, 1, 3, 3, 5, 0, 2, 2, 4]),
        ("lpf", [0, 0, 3, 2, 1, 2, 5, 4, 3, 2, 1, 0]),
    ],
)
def test_array_commands(capsys, running_file, command, expected):
    _, out, _ = run(capsys, command, running_file)
    assert [int(x) for x in out.split()] == expected
    _, out, _ = run(capsys, command, "--json", running_file)
    assert json.loads(out) == expected


def test_lz(capsys, running_file):
    _, out, _ = run(capsys, "lz", running_file)
    assert out == "1\t1\n2\t1\n3\t3\n6\t2\n8\t4\n12\t1\n"


def test_decorate_and_mast(capsys, running_file):
    _, out, _ = run(capsys, "decorate", running_file)
    rows = [tuple(map(int, line.split("\t"))) for line in out.splitlines()]
    assert sorted((depth, length) for _, depth, length in rows) == [(2, 2), (4, 4), (5, 4)]
    _, out, _ = run(capsys, "mast", running_file)
    (line,) = out.splitlines()
    assert line.split("\t")[1] == "2"
    _, out, _ = run(capsys, "mast", "--dot", running_file)
    assert out.startswith("digraph") and "new" in out
    _, out, _ = run(capsys, "decorate", "--dot", running_file)
    assert "sq 4" in out


def test_stats(capsys, running_file):
    _, out, _ = run(capsys, "stats", "--json", running_file)
    report = json.loads(out)
    assert (report["sigma"], report["z"], report["occ"]) == (3, 6, 3)
    assert report["max_lcp"] == 5
    assert report["max_factor_len"] == 4
    assert report["max_adjacent_factor_len"] == 6
    assert report["elapsed_ms"] >= 0
    _, out, _ = run(capsys, "stats", "--no-timing", running_file)
    assert "elapsed_ms" not in out
    assert "occ\t3\n" in out


def test_raw_keeps_newline(capsys, running_file):
    _, out, _ = run(capsys, "stats", "--json", "--raw", running_file)
    assert json.loads(out)["sigma"] == 4


def test_stdin_input(capsys, monkeypatch):
    import io
    import sys

    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(b"aaaa")))
    _, out, _ = run(capsys, "squares")
    assert out == "1\t2\n1\t4\n"


def test_sentinel_rejected(capsys, tmp_path):
    path = tmp_path / "bad.bin"
    path.write_bytes(b"ab\x00ab")
    code, out, err = run(capsys, "squares", str(path))
    assert code == 2 and out == ""
    assert "sentinel" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "sa", str(tmp_path / "absent"))
    assert code == 2 and "cannot read" in err


def test_malformed_flags_exit_two(capsys, running_file):
    with pytest.raises(SystemExit) as exc:
        main(["sa", "--dot", running_file])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--seed", "7", "--count", "30", "--max-len", "200")
    assert code == 0
    assert out == "cases\t30\nmismatches\t0\n"


def test_verify_reports_mismatch(capsys, monkeypatch):
    import distinct_squares.cli as cli

    monkeypatch.setattr(cli, "brute_force_distinct_squares", lambda t: [])
    code, _, err = run(capsys, "verify", "--count", "5", "--max-len", "50", "--alphabets", "1")
    assert code == 1 and "mismatch" in err


def test_bench_small(capsys, tmp_path):
    figure = tmp_path / "bench.png"
    code, out, _ = run(capsys, "bench", "--min-exp", "6", "--max-exp", "7", "--figure", str(figure))
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t")[:4] == ["family", "n", "occ", "probes"]
    assert len(lines) == 1 + 3 * 2
    assert figure.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_bench_rejects_bad_range(capsys):
    code, _, err = run(capsys, "bench", "--min-exp", "5", "--max-exp", "4")
    assert code == 2 and "min-exp" in err
