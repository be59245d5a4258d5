"""File codecs, CLI subcommands, exit codes, and output determinism."""

from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest

from spectrekit import FiniteAbelian, RationalSpace, finite_set, point, pspec, series_spec
from spectrekit.cli import run
from spectrekit.errors import ParseError
from spectrekit.formats import (
    decode_group,
    decode_pspec,
    decode_series,
    decode_set,
    dumps,
    encode_group,
    encode_pspec,
    encode_series,
    encode_set,
)
from gen import rand_finab_ctx, rand_finab_set, rand_qset

Q1 = RationalSpace(1)
Q2 = RationalSpace(2)


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(dumps(obj) if not isinstance(obj, str) else obj)
    return str(path)


def sym3_path(tmp_path):
    A = finite_set(Q1, [point(-1), point(0), point(1)])
    return write(tmp_path, "sym3.json", encode_set(A))


class TestCodecs:
    def test_group_round_trip(self):
        for ctx in (Q1, Q2, RationalSpace(2, "taxicab"),
                    RationalSpace(1, "euclidean-squared"),
                    FiniteAbelian((6,)), FiniteAbelian((2, 3))):
            assert decode_group(encode_group(ctx)) == ctx

    def test_set_round_trip_random(self):
        r = random.Random(701)
        for _ in range(40):
            A = rand_qset(r)
            assert decode_set(encode_set(A)) == A
        for _ in range(40):
            ctx = rand_finab_ctx(r)
            A = rand_finab_set(r, ctx)
            assert decode_set(encode_set(A)) == A

    def test_series_round_trip(self):
        for s in (series_spec(["1/2", "1/4"]),
                  series_spec([("7/8", "1/8"), ("3/16", "3/16")]),
                  series_spec([]), series_spec([], dim=2)):
            assert decode_series(encode_series(s)) == s

    def test_pspec_round_trip(self):
        spec = pspec(["0", "1", "3/2"], ["1/4", "1/16"])
        assert decode_pspec(encode_pspec(spec)) == spec

    def test_duplicate_points_are_position_tagged(self):
        doc = {"group": {"type": "Qd", "dim": 1, "metric": "sup"},
               "points": [["0"], ["1/2"], ["0"]]}
        with pytest.raises(ParseError, match=r"points\[2\].*points\[0\]"):
            decode_set(doc)

    def test_modular_coordinates_must_be_reduced(self):
        doc = {"group": {"type": "FinAb", "moduli": [6]}, "points": [["6"]]}
        with pytest.raises(ParseError):
            decode_set(doc)

    def test_dimension_mismatch_is_rejected(self):
        doc = {"group": {"type": "Qd", "dim": 2, "metric": "sup"},
               "points": [["0"]]}
        with pytest.raises(ParseError):
            decode_set(doc)

    def test_floats_are_rejected(self):
        doc = {"group": {"type": "Qd", "dim": 1, "metric": "sup"},
               "points": [[0.5]]}
        with pytest.raises(ParseError):
            decode_set(doc)

    def test_malformed_rational_is_rejected(self):
        doc = {"group": {"type": "Qd", "dim": 1, "metric": "sup"},
               "points": [["1/0"]]}
        with pytest.raises(ParseError):
            decode_set(doc)

    def test_unknown_group_type_is_rejected(self):
        with pytest.raises(ParseError):
            decode_group({"type": "Banach", "dim": 1})

    def test_dumps_is_stable(self):
        A = finite_set(Q1, [point("1/2"), point(0)])
        assert dumps(encode_set(A)) == dumps(encode_set(A))
        assert dumps(encode_set(A)).endswith("\n")


class TestCliCore:
    def test_spectre_of_symmetric_set(self, tmp_path, capsys):
        code = run(["spectre", "--set", sym3_path(tmp_path)])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["points"] == [["-1"], ["0"], ["1"]]

    def test_spectre_oracle_mode_agrees(self, tmp_path, capsys):
        path = sym3_path(tmp_path)
        run(["spectre", "--set", path])
        first = capsys.readouterr().out
        run(["spectre", "--set", path, "--mode", "oracle"])
        assert capsys.readouterr().out == first

    def test_center_output(self, tmp_path, capsys):
        A = finite_set(Q1, [point(0), point("1/2"), point(1)])
        code = run(["center", "--set", write(tmp_path, "a.json", encode_set(A))])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert [d["value"] for d in out["values"]] == ["0", "1/2"]

    def test_netset_check_failure_exits_one(self, tmp_path, capsys):
        A = finite_set(Q1, [point(0), point(1), point(2)])
        code = run(["netset", "check", "--set", write(tmp_path, "a.json", encode_set(A))])
        out = json.loads(capsys.readouterr().out)
        assert code == 1
        assert out["ok"] is False
        assert out["witness"]["shared_value"] == ["1"]

    def test_netset_make(self, tmp_path, capsys):
        A = finite_set(Q1, [point(0), point(1)])
        code = run(["netset", "make", "--eps", "1/16",
                    "--set", write(tmp_path, "a.json", encode_set(A))])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert len(out["points"]) == 3

    def test_nonsliding_check(self, tmp_path, capsys):
        A = finite_set(Q1, [point(0), point("1/3"), point("1/9"), point(1)])
        code = run(["nonsliding", "check", "--set", write(tmp_path, "a.json", encode_set(A))])
        assert code == 0
        assert json.loads(capsys.readouterr().out)["ok"] is True

    def test_hausdorff(self, tmp_path, capsys):
        A = finite_set(Q1, [point(0), point(1)])
        B = finite_set(Q1, [point(0), point("1/2"), point(1)])
        code = run(["hausdorff", "--a", write(tmp_path, "a.json", encode_set(A)),
                    "--b", write(tmp_path, "b.json", encode_set(B))])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out == {"value": "1/2", "squared": False}

    def test_probe_continuity(self, tmp_path, capsys):
        A = finite_set(Q1, [point(0), point(1), point(2)])
        family = [finite_set(Q1, [point(0), point(1), point(2 + Fraction(1, 2 ** n))])
                  for n in range(1, 6)]
        fam_doc = {"group": encode_group(Q1),
                   "sets": [encode_set(m)["points"] for m in family]}
        code = run(["probe", "continuity", "--set", write(tmp_path, "a.json", encode_set(A)),
                    "--family", write(tmp_path, "fam.json", fam_doc),
                    "--eps", "1/8"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["verdict"] == "discontinuity-witnessed"

    def test_refute_image(self, tmp_path, capsys):
        ctx = FiniteAbelian((7,))
        target = finite_set(ctx, [point(0), point(1), point(3)])
        code = run(["refute-image", "--group", "7",
                    "--target", write(tmp_path, "t.json", encode_set(target))])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["found"] is False
        assert out["scanned"] == 127


class TestCliSeries:
    def test_enumerate(self, tmp_path, capsys):
        path = write(tmp_path, "s.json", encode_series(series_spec(["1/2", "1/4"])))
        code = run(["series", "enumerate", "--series", path])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["points"] == [["0"], ["1/4"], ["1/2"], ["3/4"]]

    def test_gaps_csv(self, tmp_path, capsys):
        path = write(tmp_path, "s.json", encode_series(series_spec(["1", "1/4", "1/16"])))
        code = run(["series", "gaps", "--series", path, "--format", "csv"])
        out = capsys.readouterr().out
        assert code == 0
        lines = out.strip().splitlines()
        assert all(line.startswith("gap,") for line in lines)
        assert "gap,5/16,1,11/16,True" in lines

    def test_third_gap_ok(self, tmp_path, capsys):
        path = write(tmp_path, "s.json", encode_series(series_spec(["1", "1/4", "1/16"])))
        assert run(["series", "third-gap", "--series", path]) == 0
        assert json.loads(capsys.readouterr().out)["passed"] is True

    def test_third_gap_unsorted_is_a_usage_error(self, tmp_path, capsys):
        path = write(tmp_path, "s.json", encode_series(series_spec(["1/4", "1/2"])))
        assert run(["series", "third-gap", "--series", path]) == 2

    def test_first_gap(self, tmp_path, capsys):
        path = write(tmp_path, "s.json", encode_series(series_spec(["1", "1/4", "1/16"])))
        code = run(["series", "first-gap", "--k", "1", "--series", path])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["gap"]["alpha"] == "5/16"
        assert out["gap"]["beta"] == "1"

    def test_spectre_props(self, tmp_path, capsys):
        path = write(tmp_path, "s.json", encode_series(series_spec(["1/2", "1/2", "1/2"])))
        assert run(["series", "spectre-props", "--series", path]) == 0
        assert json.loads(capsys.readouterr().out)["passed"] is True

    def test_budget_exit_code(self, tmp_path, capsys):
        path = write(tmp_path, "s.json", encode_series(series_spec(["1"] * 12)))
        assert run(["series", "enumerate", "--series", path, "--budget", "100"]) == 3


class TestCliPlanar:
    def test_example_check(self, capsys):
        assert run(["planar", "example", "--check"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["report"]["passed"] is True
        assert len(out["set"]["points"]) == 12
        assert out["largest_rect_gaps"] == [
            {"a": "3/8", "b": "1", "c": "3/8", "d": "1", "area": "25/64"}]

    def test_example_svg(self, tmp_path, capsys):
        svg = tmp_path / "example.svg"
        assert run(["planar", "example", "--check", "--svg", str(svg)]) == 0
        capsys.readouterr()
        text = svg.read_text()
        assert text.startswith("<svg")
        assert text.count("<circle") == 12

    def test_gaps_largest_mode(self, tmp_path, capsys):
        terms = [("7/8", "1/8"), ("1/8", "7/8"), ("3/16", "3/16"), ("3/16", "3/16")]
        path = write(tmp_path, "s.json", encode_series(series_spec(terms)))
        code = run(["planar", "gaps", "--series", path, "--mode", "largest-by-area"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert [g["a"] for g in out["rect_gaps"]] == ["3/8"]

    def test_second_gap(self, tmp_path, capsys):
        terms = [("7/8", "1/8"), ("1/8", "7/8"), ("3/16", "3/16"), ("3/16", "3/16")]
        path = write(tmp_path, "s.json", encode_series(series_spec(terms)))
        code = run(["planar", "second-gap", "--series", path,
                    "--rect", "3/8,1,3/8,1"])
        assert code == 0
        assert json.loads(capsys.readouterr().out)["passed"] is True

    def test_first_gap(self, tmp_path, capsys):
        terms = [("7/8", "1/8"), ("1/8", "7/8"), ("3/16", "3/16"), ("3/16", "3/16")]
        path = write(tmp_path, "s.json", encode_series(series_spec(terms)))
        assert run(["planar", "first-gap", "--k", "1", "--series", path]) == 0
        assert json.loads(capsys.readouterr().out)["passed"] is True


class TestCliPsum:
    def test_enumerate(self, tmp_path, capsys):
        path = write(tmp_path, "p.json", encode_pspec(pspec(["0", "1", "2"], ["1/4", "1/16"])))
        assert run(["psum", "enumerate", "--pspec", path]) == 0
        out = json.loads(capsys.readouterr().out)
        assert len(out["points"]) == 9

    def test_gap_translate(self, tmp_path, capsys):
        path = write(tmp_path, "p.json", encode_pspec(pspec(["0", "1"], ["1/2", "1/4"])))
        code = run(["psum", "gap-translate", "--gap", "1/4,1/2", "--pspec", path])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["ok"] is True and out["epsilon"] == "1/4"

    def test_gap_translate_rejects_non_gaps(self, tmp_path, capsys):
        path = write(tmp_path, "p.json", encode_pspec(pspec(["0", "1"], ["1/2", "1/4"])))
        assert run(["psum", "gap-translate", "--gap", "1/8,1/4", "--pspec", path]) == 2

    def test_cantor_demo(self, capsys):
        assert run(["psum", "cantor-demo", "--levels", "4"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["strictly_decreasing"] is True
        assert [row["epsilon"] for row in out["rows"]] == \
            ["1/4", "1/32", "1/128", "1/512", "1/2048"]


class TestCliContract:
    def test_missing_file_is_a_usage_error(self, capsys):
        assert run(["spectre", "--set", "/nonexistent/a.json"]) == 2

    def test_unknown_subcommand(self, capsys):
        assert run(["warp"]) == 2

    def test_malformed_file(self, tmp_path, capsys):
        path = write(tmp_path, "bad.json", "{not json")
        assert run(["spectre", "--set", path]) == 2

    def test_json_output_is_deterministic(self, tmp_path, capsys):
        path = sym3_path(tmp_path)
        run(["spectre", "--set", path])
        first = capsys.readouterr().out
        run(["spectre", "--set", path])
        assert capsys.readouterr().out == first

    def test_csv_output_is_deterministic(self, tmp_path, capsys):
        A = finite_set(Q1, [point(0), point("1/2"), point(1)])
        path = write(tmp_path, "a.json", encode_set(A))
        run(["center", "--set", path, "--format", "csv"])
        first = capsys.readouterr().out
        run(["center", "--set", path, "--format", "csv"])
        assert capsys.readouterr().out == first
