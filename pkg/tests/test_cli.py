import json

import pytest

from skewdyck.cli import run


@pytest.fixture
def capout(capsys):
    def invoke(*argv):
        code = run(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke


class TestSeries:
    def test_half_length_display(self, capout):
        code, out, _ = capout("series", "--order", "9", "--half-length")
        assert code == 0
        assert out.strip() == "1 1 2 6 20 71 262 994 3852"

    def test_full_length(self, capout):
        code, out, _ = capout("series", "--order", "9")
        assert code == 0
        assert out.strip() == "1 0 1 0 2 0 6 0 20"

    def test_json_schema(self, capout):
        code, out, _ = capout("series", "--order", "5", "--half-length", "--format", "json")
        payload = json.loads(out)
        assert payload == {
            "sequence": ["1", "1", "2", "6", "20"],
            "variable": "z(half)",
            "t_mode": "zero",
        }

    def test_byte_stable(self, capout):
        _, out1, _ = capout("series", "--order", "12", "--half-length")
        _, out2, _ = capout("series", "--order", "12", "--half-length")
        assert out1 == out2


class TestBivariate:
    def test_rows(self, capout):
        code, out, _ = capout("bivariate", "--order", "7")
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[5] == "5: 71 64 2"
        assert lines[6] == "6: 262 261 20"

    def test_json(self, capout):
        _, out, _ = capout("bivariate", "--order", "3", "--format", "json")
        payload = json.loads(out)
        assert payload["sequence"] == [["1"], ["1"], ["2", "1"]]
        assert payload["t_mode"] == "track"


class TestCount:
    def test_total(self, capout):
        code, out, _ = capout("count", "4", "0", "--t-eval", "one")
        assert code == 0
        assert out.strip() == "3"

    def test_track(self, capout):
        _, out, _ = capout("count", "10", "0")
        assert out.strip() == "[71 64 2]"

    def test_forbid(self, capout):
        _, out, _ = capout("count", "8", "0", "--t-eval", "zero")
        assert out.strip() == "20"

    def test_rational_t(self, capout):
        _, out, _ = capout("count", "10", "0", "--t-eval", "1/2")
        assert out.strip() == "207/2"  # 71 + 64/2 + 2/4


class TestLevels:
    def test_level1_starts_with_single_path(self, capout):
        code, out, _ = capout("levels", "1", "--order", "4", "--t-eval", "zero")
        assert code == 0
        assert out.strip() == "0 1 0 2"  # paths U; UUD, UDU

    def test_zero_mode_equals_series_compressed(self, capout):
        _, levels_out, _ = capout("levels", "0", "--order", "17", "--t-eval", "zero", "--half-length")
        _, series_out, _ = capout("series", "--order", "9", "--half-length")
        assert levels_out == series_out


class TestVerify:
    def test_passes_on_unmodified_build(self, capout):
        code, out, err = capout("verify", "--order", "10")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 12
        assert all(line.startswith("PASS") for line in lines)


class TestAsympt:
    def test_table(self, capout):
        code, out, _ = capout("asympt", "--n", "50", "--n", "100")
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0].split() == ["n", "exact", "estimate", "ratio"]
        assert len(lines) == 3

    def test_json(self, capout):
        _, out, _ = capout("asympt", "--n", "50", "--format", "json")
        payload = json.loads(out)
        assert payload[0]["n"] == 50
        assert 0.8 < payload[0]["ratio"] < 1.2


class TestRender:
    def test_stdout_svg(self, capout):
        code, out, _ = capout("render", "UUDR")
        assert code == 0
        assert out.startswith("<?xml")
        assert out.count("<line") == 5  # axis + 4 steps

    def test_output_file(self, capout, tmp_path):
        target = tmp_path / "path.svg"
        code, out, _ = capout("render", "UUDD", "-o", str(target))
        assert code == 0
        assert target.read_text().startswith("<?xml")

    def test_invalid_word(self, capout):
        code, _, err = capout("render", "UR")
        assert code == 2
        assert "UpRed" in err


class TestFlagErrors:
    def test_bad_t_eval(self, capout):
        with pytest.raises(SystemExit) as exc:
            run(["count", "4", "0", "--t-eval", "nope"])
        assert exc.value.code == 2

    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            run(["frobnicate"])
        assert exc.value.code == 2
