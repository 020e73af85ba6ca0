import json
import os

from zigzag.cli import main, EXIT_OK, EXIT_DOMAIN, EXIT_USAGE
from zigzag.words import zeta_word

CARPET = '{"P": ["-2/1", "0/1", "1/1"], "Q": ["-3/1", "0/1", "1/1"]}'
DOUBLE = '{"P": ["-2/1", "0/1", "1/1"], "Q": ["-2/1", "0/1", "1/1"]}'
LINE = '{"P": ["0/1", "1/1"], "Q": ["0/1", "1/1"]}'


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestClassify:
    def test_text(self, capsys):
        assert _run(capsys, "classify", "--pair", LINE)[:2] == (EXIT_OK, "III\n")

    def test_json(self, capsys):
        code, out, _ = _run(capsys, "classify", "--pair", CARPET, "--format", "json")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['pair']['case'] == "I"
        assert data['zigzag_type'] == [0, -1, -3, -3]

    def test_from_file(self, capsys, tmp_path):
        path = tmp_path / "pair.json"
        path.write_text(LINE)
        assert _run(capsys, "classify", "--pair", str(path))[1] == "III\n"

    def test_malformed_json(self, capsys):
        code, out, err = _run(capsys, "classify", "--pair", '{"P": [')
        assert code == EXIT_USAGE
        assert out == ""
        assert "malformed input" in err

    def test_missing_pair(self, capsys):
        code, _, err = _run(capsys, "classify")
        assert code == EXIT_USAGE
        assert "--pair is required" in err

    def test_constant_polynomial(self, capsys):
        code, _, err = _run(capsys, "classify", "--pair", '{"P": ["1/1"], "Q": ["0/1", "1/1"]}')
        assert code == EXIT_DOMAIN
        assert "degree too small" in err

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == EXIT_USAGE


class TestRevert:
    def test_json(self, capsys):
        pair = '{"P": ["-1/1", "0/1", "1/1"], "Q": ["1/1", "0/1", "0/1", "1/1"]}'
        code, out, _ = _run(capsys, "revert", "--pair", pair, "--center", "2/1")
        assert code == EXIT_OK
        assert json.loads(out) == {
            "P" : ["9/1", "12/1", "6/1", "1/1"],
            "Q" : ["-1/1", "0/1", "1/1"],
            "case" : "I",
        }

    def test_lambda_alias(self, capsys):
        first = _run(capsys, "revert", "--pair", CARPET, "--center", "1")
        second = _run(capsys, "revert", "--pair", CARPET, "--lambda", "1/1")
        assert first == second

    def test_bad_center(self, capsys):
        assert _run(capsys, "revert", "--pair", CARPET, "--center", "1/0")[0] == EXIT_USAGE


class TestIso:
    def test_isomorphic(self, capsys):
        other = '{"P": ["-1/1", "0/1", "4/1"], "Q": ["1/1", "3/1", "3/1", "1/1"]}'
        pair = '{"P": ["-1/1", "0/1", "1/1"], "Q": ["0/1", "0/1", "0/1", "1/1"]}'
        code, out, _ = _run(capsys, "iso", "--pair", pair, "--other", other)
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['isomorphic'] is True
        assert data['witness']['beta'] == "2/1"

    def test_not_isomorphic(self, capsys):
        code, out, _ = _run(capsys, "iso", "--pair", CARPET, "--other", DOUBLE, "--format", "text")
        assert (code, out) == (EXIT_OK, "not isomorphic\n")


class TestReduce:
    def test_zeta_inverse_cancels(self, capsys, carpet_seed):
        word = zeta_word(carpet_seed, 1)
        word = word + word.inverse()
        code, out, _ = _run(capsys, "reduce", "--word", json.dumps(word.to_json()))
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['length'] == 0
        assert data['loop_profile']['loops'] == []

    def test_strategy_choice(self, capsys, carpet_seed):
        word = json.dumps(zeta_word(carpet_seed, 1).to_json())
        code, out, _ = _run(capsys, "reduce", "--word", word, "--strategy", "random", "--seed", "3")
        assert code == EXIT_OK
        assert json.loads(out)['length'] == 4


class TestCertifyFree:
    def test_certified(self, capsys):
        code, out, _ = _run(capsys, "certify-free", "--pair", CARPET, "--family", "0,1,2,3", "--max-syllables", "1")
        assert code == EXIT_OK
        assert json.loads(out)['ok'] is True

    def test_uncertified(self, capsys):
        code, out, err = _run(capsys, "certify-free", "--pair", DOUBLE, "--family", "0,1", "--max-syllables", "1")
        assert code == EXIT_DOMAIN
        assert json.loads(out)['ok'] is False
        assert "zeta cycle" in err

    def test_repair(self, capsys):
        code, out, _ = _run(capsys, "certify-free", "--pair", DOUBLE, "--family", "0,1,2,3",
                            "--max-syllables", "1", "--repair")
        assert code == EXIT_OK
        assert json.loads(out)['shift'] == "4/1"

    def test_case_mismatch(self, capsys):
        assert _run(capsys, "certify-free", "--pair", LINE, "--family", "0,1")[0] == EXIT_DOMAIN


class TestOutputs:
    def test_equations(self, capsys):
        pair = '{"P": ["-1/1", "1/1"], "Q": ["0/1", "1/1"]}'
        assert _run(capsys, "equations", "--pair", pair)[1] == "yu = x^2 - x\nvx = u^2\nyv = x*u - u\n"

    def test_equations_factored(self, capsys):
        pair = '{"P": ["0/1", "-1/1", "1/1"], "Q": ["0/1", "-1/1", "1/1"]}'
        out = _run(capsys, "equations", "--pair", pair, "--factored")[1]
        assert out.splitlines()[0] == "yu = x^2(x-1)"

    def test_trace_type(self, capsys):
        code, out, _ = _run(capsys, "trace-type", "--type", "0,-1,-2")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "(0, -1, -2)"
        assert out.splitlines()[-1] == "  --theta_1--> (0, -1, -2)"

    def test_trace_nonstandard(self, capsys):
        assert _run(capsys, "trace-type", "--type", "0,-1,-1")[0] == EXIT_DOMAIN

    def test_graph_fibrations_golden(self, capsys, golden_dir):
        code, out, _ = _run(capsys, "graph-fibrations", "--pair", CARPET, "--centers", "0,1",
                            "--depth", "2", "--format", "json")
        assert code == EXIT_OK
        with open(os.path.join(golden_dir, "carpet_0_1_depth2.json")) as f:
            assert out == f.read()

    def test_graph_fibrations_reexport(self, capsys, golden_dir):
        path = os.path.join(golden_dir, "carpet_0_1_depth2.json")
        code, out, _ = _run(capsys, "graph-fibrations", "--graph", path)
        assert code == EXIT_OK
        assert out.startswith("digraph fibration_graph {")

    def test_graph_dual(self, capsys):
        code, out, _ = _run(capsys, "graph-dual", "--pair", LINE, "--format", "json")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data['surface']['smooth'] is False

    def test_graph_dual_lambda(self, capsys):
        pair = '{"P": ["-1/1", "1/1"], "Q": ["-2/1", "1/1"]}'
        plain = _run(capsys, "graph-dual", "--pair", pair, "--format", "json")[1]
        code, out, _ = _run(capsys, "graph-dual", "--pair", pair, "--format", "json", "--lambda", "2/1")
        assert code == EXIT_OK
        assert out != plain

    def test_graph_dual_text_rejects_lambda(self, capsys):
        assert _run(capsys, "graph-dual", "--pair", LINE, "--format", "text")[0] == EXIT_OK
        code, out, err = _run(capsys, "graph-dual", "--pair", LINE, "--format", "text", "--lambda", "1/2")
        assert (code, out) == (EXIT_USAGE, "")
        assert "--lambda only applies" in err

    def test_aut_text(self, capsys):
        pair = '{"P": ["0/1", "-1/1", "1/1"], "Q": ["0/1", "-1/1", "1/1"]}'
        code, out, _ = _run(capsys, "aut", "--pair", pair)
        assert code == EXIT_OK
        assert "free product Z/2 * G_a^inf" in out

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "case.txt"
        code, out, _ = _run(capsys, "classify", "--pair", LINE, "--output", str(path))
        assert (code, out) == (EXIT_OK, "")
        assert path.read_text() == "III\n"
