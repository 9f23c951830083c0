import json

import pytest

from tsracks.cli import main

Z12_SPEC = '{"type":"linear","n":12,"t":11,"s":2}'
Z4_SPEC = '{"type":"linear","n":4,"t":1,"s":2}'
R4_SPEC = '{"type":"linear","n":4,"t":3,"s":2}'
QUOT_SPEC = '{"type":"quotient","n":2,"p":[1,1]}'
FIG8_PD = ("pd: X[1,6,2,7] X[5,2,6,3] X[3,1,4,8] X[7,5,8,4]")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestValidateRack:
    def test_good_matrix_file(self, tmp_path, capsys):
        path = tmp_path / "rack.txt"
        path.write_text("2\n2 2\n1 1\n")
        code, out, _ = run(capsys, "validate-rack", "--rack", str(path))
        assert code == 0
        assert "valid rack" in out and "rack rank 2" in out

    def test_axiom_failure(self, tmp_path, capsys):
        path = tmp_path / "rack.txt"
        path.write_text("2\n1 1\n1 2\n")
        code, _, err = run(capsys, "validate-rack", "--rack", str(path))
        assert code == 3
        assert "axiom" in err

    def test_garbage(self, tmp_path, capsys):
        path = tmp_path / "rack.txt"
        path.write_text("banana\n")
        code, _, err = run(capsys, "validate-rack", "--rack", str(path))
        assert code == 3


class TestRackRank:
    def test_constant_action(self, tmp_path, capsys):
        path = tmp_path / "rack.txt"
        path.write_text("3\n2 2 2\n3 3 3\n1 1 1\n")
        code, out, _ = run(capsys, "rack-rank", "--rack", str(path))
        assert code == 0
        assert "rack rank: 3" in out
        assert "3 3 3" in out


class TestMakeTSRack:
    def test_linear(self, capsys):
        code, out, _ = run(capsys, "make-tsrack", "--rack", Z4_SPEC)
        assert code == 0
        assert "order: 4" in out and "rack rank: 2" in out

    def test_invalid_spec(self, capsys):
        code, _, err = run(capsys, "make-tsrack", "--rack",
                           '{"type":"linear","n":4,"t":2,"s":2}')
        assert code == 3

    def test_bad_json(self, capsys):
        code, _, err = run(capsys, "make-tsrack", "--rack", "{oops")
        assert code == 2


class TestIsoCheck:
    def test_isomorphic_pair_prints_certificate(self, capsys):
        code, out, _ = run(capsys, "iso-check",
                           "--rack", Z4_SPEC, "--rack2", QUOT_SPEC)
        assert code == 0
        assert out.startswith("isomorphic")
        assert "phi" in out

    def test_non_isomorphic(self, capsys):
        code, out, _ = run(capsys, "iso-check",
                           "--rack", Z4_SPEC, "--rack2", R4_SPEC)
        assert code == 0
        assert out.strip() == "not isomorphic"

    def test_matrix_route(self, tmp_path, capsys):
        a = tmp_path / "a.txt"
        a.write_text("2\n2 2\n1 1\n")
        b = tmp_path / "b.txt"
        b.write_text("2\n1 1\n2 2\n")
        code, out, _ = run(capsys, "iso-check",
                           "--rack", str(a), "--rack2", str(b))
        assert code == 0
        assert "not isomorphic" in out


class TestInvariant:
    def test_additive_figure_eight(self, capsys):
        code, out, _ = run(capsys, "invariant", "--rack", Z12_SPEC,
                           "--link", FIG8_PD, "--kind", "additive")
        assert code == 0
        assert "value: u + u^2 + 2u^3 + 2u^4 + 2u^6 + 4u^12" in out

    def test_malformed_pd_names_quadruple(self, capsys):
        code, _, err = run(capsys, "invariant", "--rack", Z4_SPEC,
                           "--link", "pd: X[1,4,2,5] X[3,6,4,1] X[5,2,6,9]")
        assert code == 2
        assert "9" in err

    def test_count_with_matrix_rack(self, tmp_path, capsys):
        path = tmp_path / "rack.txt"
        path.write_text("2\n2 2\n1 1\n")
        code, out, _ = run(capsys, "invariant", "--rack", str(path),
                           "--link", "unknots: 2", "--kind", "count")
        assert code == 0
        assert "counting: 4" in out

    def test_enhanced_requires_module(self, tmp_path, capsys):
        path = tmp_path / "rack.txt"
        path.write_text("2\n2 2\n1 1\n")
        code, _, err = run(capsys, "invariant", "--rack", str(path),
                           "--link", "unknots: 1", "--kind", "additive")
        assert code == 3

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "invariant", "--rack", Z4_SPEC,
                           "--link", "braid: 2: 1 1 1",
                           "--kind", "additive", "--format", "json-like")
        assert code == 0
        record = json.loads(out)
        assert record["counting_value"] == 6
        assert record["rack_spec"]["n"] == 4


class TestCache:
    def test_round_trip_byte_identical(self, tmp_path, capsys):
        args = ["--cache-dir", str(tmp_path), "invariant",
                "--rack", Z4_SPEC, "--link", "braid: 2: 1 1 1",
                "--kind", "additive", "--format", "json-like"]
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert list(tmp_path.glob("*.json"))

    def test_version_bump_misses(self, tmp_path, capsys, monkeypatch):
        args = ["--cache-dir", str(tmp_path), "invariant",
                "--rack", Z4_SPEC, "--link", "unknots: 1",
                "--kind", "count", "--format", "json-like"]
        run(capsys, *args)
        before = len(list(tmp_path.glob("*.json")))
        monkeypatch.setattr("tsracks.cli.__version__", "0.0.0-test")
        run(capsys, *args)
        after = len(list(tmp_path.glob("*.json")))
        assert after == before + 1

    def test_corrupt_entry_recomputed(self, tmp_path, capsys):
        args = ["--cache-dir", str(tmp_path), "invariant",
                "--rack", Z4_SPEC, "--link", "unknots: 1",
                "--kind", "count", "--format", "json-like"]
        code, out1, _ = run(capsys, *args)
        entry = next(tmp_path.glob("*.json"))
        entry.write_text("{corrupt")
        code, out2, err = run(capsys, *args)
        assert code == 0
        assert out1 == out2
        assert "corrupt" in err

    def test_env_var_cache(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("TSRACKS_CACHE_DIR", str(tmp_path))
        code, _, _ = run(capsys, "invariant", "--rack", Z4_SPEC,
                         "--link", "unknots: 1", "--kind", "count")
        assert code == 0
        assert list(tmp_path.glob("*.json"))


class TestTable:
    def links_file(self, tmp_path, lines):
        path = tmp_path / "links.txt"
        path.write_text("\n".join(lines) + "\n")
        return str(path)

    def test_grouping(self, tmp_path, capsys):
        path = self.links_file(tmp_path, [
            "3_1 braid: 2: 1 1 1",
            "unknot braid: 1:",
            "5_1 braid: 2: 1 1 1 1 1",
        ])
        code, out, _ = run(capsys, "table", "--rack", Z4_SPEC,
                           "--links", path, "--kind", "additive")
        assert code == 0
        rows = [ln for ln in out.splitlines() if "|" in ln]
        assert len(rows) == 1
        assert "3_1, 5_1, unknot" in rows[0]

    def test_grouping_independent_of_order(self, tmp_path, capsys):
        lines = ["a braid: 2: 1 1 1", "b braid: 1:", "c braid: 2: 1 1 1 1 1"]
        path1 = self.links_file(tmp_path, lines)
        code, out1, _ = run(capsys, "table", "--rack", Z12_SPEC,
                            "--links", path1, "--kind", "additive")
        path2 = self.links_file(tmp_path, lines[::-1])
        code, out2, _ = run(capsys, "table", "--rack", Z12_SPEC,
                            "--links", path2, "--kind", "additive")
        assert out1 == out2

    def test_single_failure_reported_and_skipped(self, tmp_path, capsys):
        path = self.links_file(tmp_path, [
            "good braid: 2: 1 1 1",
            "bad pd: X[1,2,3]",
        ])
        code, out, err = run(capsys, "table", "--rack", Z4_SPEC,
                             "--links", path, "--kind", "additive")
        assert code == 0
        assert "good" in out
        assert "failed: bad" in err

    def test_empty_file(self, tmp_path, capsys):
        path = self.links_file(tmp_path, [""])
        code, out, _ = run(capsys, "table", "--rack", Z4_SPEC,
                           "--links", path, "--kind", "additive")
        assert code == 0
        assert out.strip() == ""

    def test_ordering_report(self, tmp_path, capsys):
        path = self.links_file(tmp_path, [
            "3_1 braid: 2: 1 1 1",
            "4_1 pd: X[1,6,2,7] X[5,2,6,3] X[3,1,4,8] X[7,5,8,4]",
        ])
        code, out, _ = run(capsys, "table", "--rack", Z12_SPEC,
                           "--links", path, "--kind", "additive",
                           "--weak-order")
        assert code == 0
        assert "greater" in out or "less" in out
