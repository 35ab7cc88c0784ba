import io
import json

import pytest

from wellcovered import edgelist
from wellcovered.cli import main
from wellcovered.generators import cycle, t10
from wellcovered.wcw_space import WeightBasis, span_equal


def run(*argv, stdin_text=None):
    out, err = io.StringIO(), io.StringIO()
    stdin = io.StringIO(stdin_text) if stdin_text is not None else None
    code = main(list(argv), stdin=stdin, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def gen_text(*argv):
    code, out, _ = run("gen", *argv)
    assert code == 0
    return out


class TestExamples:
    def test_d12_wcw(self):
        code, out, _ = run("wcw", "-", stdin_text=gen_text("d12"))
        assert code == 0 and "dimension: 0" in out.splitlines()

    def test_cmkr_oracle(self):
        code, out, _ = run("wcw", "-", "--method", "oracle", stdin_text=gen_text("cmkr", "6", "3", "4"))
        assert code == 0
        assert out.splitlines()[:2] == ["method: oracle", "dimension: 3"]

    def test_c7_relating(self):
        code, out, _ = run("relating", "-", "--edge", "0,1", stdin_text=gen_text("cycle", "7"))
        lines = out.splitlines()
        assert code == 0
        assert "verdict: true" in lines and "witness valid: true" in lines
        assert any(line.startswith("witness: ") for line in lines)


class TestOutputs:
    def test_json_round_trip(self):
        code, out, _ = run("wcw", "gen:cmkr:7,2,2", "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["method"] == "fast" and data["class_check"] is True
        basis = WeightBasis.from_json(data["basis"])
        assert json.dumps(basis.to_json()) == json.dumps(data["basis"])

    def test_oracle_json(self):
        data = json.loads(run("wcw", "gen:cycle:5", "--format", "json")[1])
        assert data["method"] == "oracle" and data["class_check"] is False

    @pytest.mark.parametrize("spec", ["gen:cycle:7", "gen:t10", "gen:d12", "gen:cmkr:7,2,2", "gen:star:3", "gen:path:5"])
    def test_fast_and_oracle_agree(self, spec):
        bases = []
        for method in ("fast", "oracle"):
            code, out, _ = run("wcw", spec, "--method", method, "--format", "json")
            assert code == 0
            bases.append(WeightBasis.from_json(json.loads(out)["basis"]))
        assert span_equal(*bases)

    def test_generating_and_cycles(self):
        code, out, _ = run("generating", "gen:star:3", "--bx", "0", "--by", "1,2,3")
        assert code == 0 and "verdict: true" in out
        code, out, _ = run("cycles", "gen:d12", "--lengths", "6,7")
        assert out.splitlines() == ["C6: no", "C7: yes"]

    def test_well_covered(self):
        assert "well-covered: true" in run("well-covered", "gen:t10")[1]
        assert run("well-covered", "gen:d12", "--script")[0] == 1
        assert run("well-covered", "gen:d12")[0] == 0

    def test_gen_out(self, tmp_path):
        target = tmp_path / "g.txt"
        assert run("gen", "t10", "--out", str(target))[0] == 0
        assert edgelist.loads(target.read_text()) == t10()
        assert edgelist.loads(gen_text("cycle", "7")) == cycle(7)
        assert run("wcw", str(target))[1].splitlines()[1] == "dimension: 1"


class TestExitCodes:
    def test_negative_relating(self):
        assert run("relating", "gen:path:3", "--edge", "0,1", "--script")[0] == 1

    def test_usage_errors(self, tmp_path):
        assert run("wcw")[0] == 2
        assert run("wcw", str(tmp_path / "missing.txt"))[0] == 2
        bad = tmp_path / "bad.txt"
        bad.write_text("# header\n3 2\n0 1\n1 1\n")
        code, _, err = run("wcw", str(bad))
        assert code == 2 and "line 4" in err
        assert run("relating", "gen:path:3", "--edge", "0,2")[0] == 2
        assert run("wcw", "gen:cycle:7", "--cap", "0")[0] == 2

    def test_precondition(self):
        code, _, err = run("wcw", "gen:cycle:6", "--method", "fast")
        assert code == 3 and "length 6" in err
        code, _, err = run("well-covered", "gen:cmkr:31,1,3")
        assert code == 3 and "length 4" in err

    def test_resource_limit(self):
        code, _, err = run("wcw", "gen:cycle:9", "--method", "oracle", "--cap", "2")
        assert code == 4 and "resource limit" in err
