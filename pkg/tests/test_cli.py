import io
import json

import pytest

from supercat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTable:
    def test_t_table_frozen(self, capsys):
        code, out, err = run(capsys, "table", "T", "3", "3")
        assert code == 0
        assert out.splitlines() == [
            "-\t1\t3\t10",
            "1\t1\t2\t5",
            "3\t2\t3\t6",
            "10\t5\t6\t10",
        ]
        assert "T(0,0)" in err

    def test_catalan_row(self, capsys):
        code, out, _ = run(capsys, "table", "C", "0", "5")
        assert code == 0
        assert out.splitlines() == ["1\t1\t2\t5\t14\t42"]

    def test_t_origin_only(self, capsys):
        code, out, err = run(capsys, "table", "T", "0", "0")
        assert code == 0
        assert out.strip() == "-"
        assert "not integral" in err

    def test_s_table_has_no_hole(self, capsys):
        # S(0,0)=1, S(0,1)=S(1,0)=2, S(1,1)=2: no excluded cell
        code, out, _ = run(capsys, "table", "S", "1", "1")
        assert code == 0
        assert out.splitlines() == ["1\t2", "2\t2"]

    def test_ballot_table_domain_shape(self, capsys):
        code, out, _ = run(capsys, "table", "B", "3", "3")
        assert code == 0
        assert out.splitlines() == [
            "-\t-\t-\t-",
            "-\t1\t-\t-",
            "-\t2\t1\t-",
            "-\t5\t4\t1",
        ]

    def test_flags_override_positionals(self, capsys):
        code, out, _ = run(capsys, "table", "C", "9", "9", "--max-m", "0", "--max-n", "2")
        assert code == 0
        assert out.splitlines() == ["1\t1\t2"]

    def test_json_is_canonical_and_roundtrips(self, capsys):
        code, out, _ = run(capsys, "table", "T", "2", "2", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["rows"][2][2] == "3"
        assert payload["rows"][0][0] == "-"
        # re-rendering the parsed document reproduces the bytes
        assert json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n" == out

    def test_big_cells_survive_json_as_strings(self, capsys):
        code, out, _ = run(capsys, "table", "T", "0", "40", "--format", "json")
        payload = json.loads(out)
        assert int(payload["rows"][0][40]) > 2**63

    def test_missing_bounds(self, capsys):
        code, _, err = run(capsys, "table", "T")
        assert code == 2
        assert "bounds" in err

    def test_negative_bounds(self, capsys):
        code, _, _ = run(capsys, "table", "T", "-1", "3")
        assert code == 2


class TestVerify:
    def test_rubenstein_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "rubenstein", "--max", "15")
        assert code == 0
        assert "passed\ttrue" in out
        assert "cases\t225" in out

    def test_theorem1_with_jobs(self, capsys):
        code, out, _ = run(capsys, "verify", "theorem1", "--max-sum", "8", "--jobs", "2")
        assert code == 0
        assert "passed\ttrue" in out

    def test_unknown_identity_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "gauss"])
        assert exc.value.code == 2

    def test_enumeration_cap_refused_without_force(self, capsys):
        code, _, err = run(capsys, "verify", "theorem1", "--max-sum", "19")
        assert code == 2
        assert "--force" in err

    def test_force_flag_accepted(self, capsys):
        code, _, _ = run(capsys, "verify", "theorem4", "--max-n", "4", "--force")
        assert code == 0

    def test_all_with_small_bounds(self, capsys):
        code, out, _ = run(capsys, "verify", "all", "--max", "6", "--jobs", "1")
        assert code == 0
        assert out.count("identity\t") == 11
        assert out.count("passed\ttrue") == 11

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "verify", "symmetry", "--max-sum", "12", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["identity"] == "symmetry"
        assert payload["passed"] is True
        assert json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n" == out


class TestMap:
    @pytest.mark.parametrize(
        "kind,path,expected",
        [
            ("f", "UUUDDDUD", "UUDDUD"),
            ("f-inv", "UUDDUD", "UUUDDDUD"),
            ("g", "UUUDDUUDDD", "UUUUDDDD"),
            ("g-inv", "UUUUDDDD", "UUUDDUUDDD"),
            ("m2d", "S", "UUDD"),
            ("d2m", "UUDD", "S"),
            ("reverse", "SUD", "UDS"),
        ],
    )
    def test_frozen_maps(self, capsys, kind, path, expected):
        code, out, _ = run(capsys, "map", kind, path)
        assert code == 0
        assert out.strip() == expected

    def test_pair_emits_two_lines(self, capsys):
        code, out, _ = run(capsys, "map", "pair", "UUDUDD")
        assert code == 0
        assert out.splitlines() == ["UUDD", "UD"]

    def test_unpair_from_arguments(self, capsys):
        code, out, _ = run(capsys, "map", "unpair", "UUDD", "UD")
        assert code == 0
        assert out.strip() == "UUDUDD"

    def test_unpair_reads_two_lines_from_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("UUDD\nUD\n"))
        code, out, _ = run(capsys, "map", "unpair")
        assert code == 0
        assert out.strip() == "UUDUDD"

    def test_unpair_with_empty_component(self, capsys):
        code, out, _ = run(capsys, "map", "unpair", "", "UD")
        assert code == 0
        assert out.strip() == "UD"

    def test_wrong_class_names_condition(self, capsys):
        code, _, err = run(capsys, "map", "f", "UDUDUDUD")
        assert code == 1
        assert "up-up-up" in err

    def test_parse_error_is_failure(self, capsys):
        code, _, err = run(capsys, "map", "f", "UXD")
        assert code == 1
        assert "index 1" in err

    def test_wrong_arity(self, capsys):
        code, _, err = run(capsys, "map", "f", "UD", "UD")
        assert code == 2


class TestEnumerate:
    def test_dyck_stream(self, capsys):
        code, out, _ = run(capsys, "enumerate", "dyck", "3")
        assert code == 0
        assert out.splitlines() == ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]

    def test_count_only(self, capsys):
        code, out, _ = run(capsys, "enumerate", "motzkin2", "5", "--count")
        assert code == 0
        assert out.strip() == "132"

    def test_ballot(self, capsys):
        code, out, _ = run(capsys, "enumerate", "ballot", "2", "1")
        assert code == 0
        assert out.splitlines() == ["UUD", "UDU"]

    def test_pairs_tab_separated(self, capsys):
        code, out, _ = run(capsys, "enumerate", "pairs", "1")
        assert code == 0
        assert out.splitlines() == ["\tUD", "UD\t"]

    def test_arity_checked(self, capsys):
        code, _, err = run(capsys, "enumerate", "ballot", "3")
        assert code == 2
        assert "2 integer" in err

    def test_bad_parameters_fail_cleanly(self, capsys):
        code, _, err = run(capsys, "enumerate", "ballot", "2", "5")
        assert code == 1
        assert "1 <= r <= n" in err


class TestRender:
    def test_writes_svg_with_one_element_per_step(self, capsys, tmp_path):
        out_file = tmp_path / "path.svg"
        code, _, _ = run(capsys, "render", "UUDUDD", str(out_file))
        assert code == 0
        text = out_file.read_text()
        assert text.startswith("<svg")
        assert text.count('class="step ') == 6

    def test_markers_positions(self, capsys, tmp_path):
        out_file = tmp_path / "m.svg"
        code, _, _ = run(capsys, "render", "UUDUDD", str(out_file), "--markers")
        assert code == 0
        text = out_file.read_text()
        assert 'class="marker marker-anchor" data-x="3"' in text
        assert 'class="marker marker-rightmost" data-x="4"' in text

    def test_wavy_distinct_from_straight(self, capsys, tmp_path):
        out_file = tmp_path / "w.svg"
        code, _, _ = run(capsys, "render", "SUW", str(out_file))
        assert code == 0
        text = out_file.read_text()
        assert '<line class="step step-straight"' in text
        assert '<path class="step step-wavy"' in text

    def test_unwritable_target(self, capsys, tmp_path):
        code, _, err = run(capsys, "render", "UD", str(tmp_path / "no" / "dir.svg"))
        assert code == 1
        assert "cannot write" in err

    def test_markers_need_valid_dyck(self, capsys, tmp_path):
        code, _, err = run(capsys, "render", "SUW", str(tmp_path / "x.svg"), "--markers")
        assert code == 1
        assert "Dyck" in err


class TestJobsEnvironment:
    def test_env_var_sets_default(self, monkeypatch):
        from supercat.cli import build_parser

        monkeypatch.setenv("SUPERCAT_JOBS", "3")
        args = build_parser().parse_args(["verify", "symmetry"])
        assert args.jobs == 3

    def test_flag_overrides_env(self, monkeypatch):
        from supercat.cli import build_parser

        monkeypatch.setenv("SUPERCAT_JOBS", "3")
        args = build_parser().parse_args(["verify", "symmetry", "--jobs", "5"])
        assert args.jobs == 5
