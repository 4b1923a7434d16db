import io
import subprocess
import sys

import pytest

from cographlin.cli import main, read_graph_or_cotree
from cographlin.graphs import Cotree, Graph


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


class TestGen:
    def test_binary(self):
        assert run("gen", "--family", "binary", "--h", "2") == (0, "S(P(0,1),P(2,3))\n", "")

    def test_dfact_parallel(self):
        code, out, _ = run("gen", "--family", "dfact", "--h", "1", "--root", "P")
        assert code == 0 and out == "P(0,1,2)\n"

    def test_random_deterministic(self):
        a = run("gen", "--family", "random", "--n", "20", "--seed", "5")
        b = run("gen", "--family", "random", "--n", "20", "--seed", "5")
        assert a == b and a[0] == 0

    def test_to_file(self, tmp_path):
        path = tmp_path / "t.txt"
        assert run("gen", "--family", "binary", "--h", "1", "-o", str(path))[0] == 0
        assert path.read_text() == "S(0,1)\n"

    @pytest.mark.parametrize("argv", [
        ["gen", "--family", "binary"],
        ["gen", "--family", "random"],
        ["gen", "--family", "other", "--h", "1"],
        ["frobnicate"],
        [],
    ])
    def test_usage(self, argv):
        assert run(*argv)[0] == 2


class TestRank:
    def test_lines(self, files):
        code, out, _ = run("rank", files("t", "P(0,1,2)"))
        assert code == 0
        assert out.splitlines()[0] == "0 0 1 true"
        assert len(out.splitlines()) == 4

    def test_edge_list_input(self, files):
        code, out, _ = run("rank", files("g", "2 1\n0 1\n"))
        assert code == 0 and out.splitlines() == ["0 0 0 false", "1 1 0 true", "2 1 0 true"]

    def test_not_cograph(self, files):
        code, _, err = run("rank", files("g", "4 3\n0 1\n1 2\n2 3\n"))
        assert code == 2 and err.startswith("error:")


class TestEncodeVerify:
    def test_round_trip(self, files, tmp_path):
        src = files("t", "P(S(P(0,1),P(2,3),P(4,5)),6)")
        model = str(tmp_path / "m.txt")
        code, out, _ = run("encode", src, "-o", model)
        assert code == 0
        assert out == "n=7 rank=1 minimal=false p=5 bound=5 size_integers=105\n"
        assert run("verify", src, model) == (0, "ok\n", "")

    def test_stdout_model(self, files):
        code, out, _ = run("encode", files("t", "S(P(0,1),P(2,3))"))
        lines = out.splitlines()
        assert code == 0 and lines[0] == "LINMODEL closed 2 4"
        assert lines[-1] == "n=4 rank=1 minimal=true p=2 bound=4 size_integers=24"

    def test_size_is_3pn(self, files):
        _, out, _ = run("encode", files("t", "S(P(0,1,2),P(3,4),5)"), "-o", "/dev/null")
        stats = dict(tok.split("=") for tok in out.split())
        assert int(stats["size_integers"]) == 3 * int(stats["p"]) * int(stats["n"])

    def test_verify_failure(self, files):
        g = files("g", "S(0,1)")
        m = files("m", "LINMODEL closed 1 2\n0 1\n0 0:1\n1 0:2\n")
        code, out, _ = run("verify", g, m)
        assert code == 1 and "vertex 0 missing {1}" in out

    def test_verify_bad_model(self, files):
        assert run("verify", files("g", "S(0,1)"), files("m", "nonsense"))[0] == 2

    def test_missing_file(self):
        assert run("verify", "/nonexistent/a", "/nonexistent/b")[0] == 2


class TestOracle:
    def test_c4(self, files):
        c4 = files("c4", "4 4\n0 1\n1 2\n2 3\n3 0\n")
        assert run("oracle", c4, "--param", "lin") == (0, "2\n", "")
        assert run("oracle", c4, "--param", "cont") == (0, "2\n", "")

    def test_witness(self, files, tmp_path):
        w = str(tmp_path / "w.txt")
        g = files("g", "S(P(0,1),P(2,3))")
        assert run("oracle", g, "--param", "lin", "--witness", w)[0] == 0
        assert run("verify", g, w)[0] == 0

    def test_out_of_range(self, files):
        assert run("oracle", files("c4", "S(P(0,2),P(1,3))"), "--param", "lin", "--pmax", "1") == (0, "-\n", "")

    def test_guard(self, files):
        g = files("g", "S(0,1)")
        assert run("oracle", g, "--param", "lin", "--pmax", "5")[0] == 3
        assert run("oracle", g, "--param", "lin", "--pmax", "5", "--force")[0] == 0

    def test_open(self, files):
        assert run("oracle", files("g", "S(0,1)"), "--param", "lin", "--open") == (0, "1\n", "")


class TestQueryBench:
    def test_query(self, files, tmp_path):
        model = str(tmp_path / "m.txt")
        run("encode", files("t", "S(P(0,1),P(2,3))"), "-o", model)
        assert run("query", model, "0") == (0, "0 2 3\n", "")
        assert run("query", model, "9")[0] == 2

    def test_bench(self, files, tmp_path):
        src = files("t", "S(P(0,1),P(2,3),4)")
        model = str(tmp_path / "m.txt")
        run("encode", src, "-o", model)
        code, out, _ = run("bench", model, src, "--count", "0")
        assert code == 0 and "queries\t0" in out
        code, out, _ = run("bench", model, src, "--count", "30", "--seed", "4")
        assert code == 0 and "equal\t30" in out

    def test_bench_corrupted(self, files):
        src = files("t", "S(0,1)")
        model = files("m", "LINMODEL closed 1 2\n0 1\n0 0:1\n1 0:2\n")
        code, out, _ = run("bench", model, src, "--count", "10")
        assert code == 1 and "mismatch" in out


def test_experiment():
    code, out, _ = run("experiment", "--h-max", "3")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("h\tn\trank")
    assert lines[3] == "3\t8\t1\t5\t2\t2\t120\t48"


def test_read_graph_or_cotree():
    assert isinstance(read_graph_or_cotree("# c\n2 1\n0 1\n"), Graph)
    assert isinstance(read_graph_or_cotree("S(0,1)"), Cotree)
    assert isinstance(read_graph_or_cotree("0"), Cotree)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cographlin", "gen", "--family", "binary", "--h", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "S(0,1)\n"
