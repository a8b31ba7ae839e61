import pytest
from hypothesis import given

from conftest import brute_family, dyck_paths, motzkin_paths
from supercat.errors import DomainError, ParseError
from supercat.paths import (
    EMPTY_PATH,
    is_dyck,
    is_even_terminal_ballot,
    is_motzkin2,
    level_at,
    make_path,
    markers,
    parse_path,
    render_path,
    reverse,
    validate,
)


class TestParse:
    def test_levels_computed(self):
        assert parse_path("UUDD", "dyck").levels == (0, 1, 2, 1, 0)

    def test_empty(self):
        path = parse_path("", "dyck")
        assert path.levels == (0,)
        assert len(path) == 0
        assert path == EMPTY_PATH

    def test_bad_character_names_index(self):
        with pytest.raises(ParseError) as exc:
            parse_path("UXD", "dyck")
        assert exc.value.index == 1
        assert "index 1" in str(exc.value)

    def test_dyck_alphabet_rejects_level_steps(self):
        with pytest.raises(ParseError) as exc:
            parse_path("SUD", "dyck")
        assert exc.value.index == 0

    def test_motzkin_alphabet(self):
        assert parse_path("SUWD", "motzkin").levels == (0, 0, 1, 1, 0)

    def test_unknown_alphabet(self):
        with pytest.raises(DomainError):
            parse_path("UD", "paren")

    def test_does_not_enforce_validity(self):
        # parsing is permissive; the path may dip below the axis
        assert parse_path("DU", "dyck").levels == (0, -1, 0)


class TestPathValue:
    def test_str_and_repr(self):
        path = make_path("UWD")
        assert str(path) == "UWD"
        assert repr(path) == "LatticePath('UWD')"
        assert render_path(path) == "UWD"

    def test_equality_and_hash(self):
        assert make_path("UD") == parse_path("UD", "dyck")
        assert len({make_path("UD"), parse_path("UD", "dyck")}) == 1

    def test_height_and_final_level(self):
        path = make_path("UUDS")
        assert path.height == 2
        assert path.final_level == 1


class TestValidate:
    def test_dyck_true(self):
        assert validate(parse_path("UDUD", "dyck"), "dyck")

    def test_dyck_dips_below(self):
        assert not validate(parse_path("UDDU", "dyck"), "dyck")

    def test_dyck_nonzero_end(self):
        assert not validate(parse_path("UUD", "dyck"), "dyck")

    def test_motzkin_level_steps(self):
        assert validate(make_path("SUWD"), "motzkin2")
        assert not validate(make_path("WDU"), "motzkin2")

    def test_dyck_rejects_level_steps(self):
        assert not validate(make_path("SS"), "dyck")

    def test_ballot_uuu(self):
        # oracle: the only nonnegative 3-step path to level 3
        assert brute_family(3, 3, "UD") == ["UUU"]
        assert validate(parse_path("UUU", "dyck"), "ballot", n=2, r=2)

    def test_ballot_wrong_terminal(self):
        assert not validate(parse_path("UUD", "dyck"), "ballot", n=2, r=2)

    def test_ballot_requires_params(self):
        with pytest.raises(DomainError):
            validate(parse_path("U", "dyck"), "ballot")

    def test_ballot_impossible_family_is_false(self):
        # family with r > n cannot be satisfied, but never raises
        assert not validate(parse_path("UUU", "dyck"), "ballot", n=1, r=5)

    def test_unknown_family(self):
        with pytest.raises(DomainError):
            validate(parse_path("UD", "dyck"), "schroeder")

    def test_even_terminal_ballot(self):
        assert is_even_terminal_ballot(make_path("UUUUUDDD"))
        assert not is_even_terminal_ballot(make_path("UUU"))
        assert not is_even_terminal_ballot(make_path("USU"))


class TestMarkers:
    @pytest.mark.parametrize(
        "steps,height,rightmost,anchor,h_minus,h_plus",
        [
            ("UUDUDD", 2, 4, 3, 2, 2),
            ("UUUDDD", 3, 3, 1, 1, 3),
            ("UD", 1, 1, 1, 1, 1),
            ("UDUDUD", 1, 5, 5, 1, 1),
        ],
    )
    def test_frozen_scans(self, steps, height, rightmost, anchor, h_minus, h_plus):
        mk = markers(parse_path(steps, "dyck"))
        assert mk.height == height
        assert mk.rightmost_max == rightmost
        assert mk.last_level_one == anchor
        assert mk.h_minus == h_minus
        assert mk.h_plus == h_plus

    def test_leftmost_max(self):
        assert markers(parse_path("UDUD", "dyck")).leftmost_max == 1
        assert markers(parse_path("UUDUDD", "dyck")).leftmost_max == 2

    def test_empty_path_rejected(self):
        with pytest.raises(DomainError, match="markers undefined for empty path"):
            markers(EMPTY_PATH)

    def test_invalid_path_rejected(self):
        with pytest.raises(DomainError):
            markers(parse_path("DU", "dyck"))

    def test_split_invariant_exhaustive(self):
        # h_minus <= h_plus == height over every Dyck path of length <= 16
        for n in range(1, 9):
            for steps in brute_family(2 * n, 0, "UD"):
                mk = markers(parse_path(steps, "dyck"))
                assert mk.h_minus <= mk.h_plus == mk.height


class TestReverse:
    @pytest.mark.parametrize("steps,expected", [("SUD", "UDS"), ("", ""), ("UWD", "UWD")])
    def test_frozen(self, steps, expected):
        assert reverse(make_path(steps)).steps == expected

    def test_requires_valid_path(self):
        with pytest.raises(DomainError):
            reverse(make_path("DU"))

    @given(motzkin_paths())
    def test_involution(self, path):
        assert reverse(reverse(path)) == path

    @given(motzkin_paths())
    def test_mirrors_levels(self, path):
        mirrored = reverse(path)
        n = len(path)
        assert all(path.levels[x] == mirrored.levels[n - x] for x in range(n + 1))

    def test_output_valid(self):
        for steps in brute_family(6, 0, "UDSW"):
            assert is_motzkin2(reverse(make_path(steps)))


class TestLevelAt:
    @pytest.mark.parametrize("steps,x,expected", [("SUD", 1, 0), ("UUDD", 2, 2), ("UDUDUD", 6, 0)])
    def test_frozen(self, steps, x, expected):
        assert level_at(make_path(steps), x) == expected

    def test_out_of_range(self):
        path = make_path("UD")
        with pytest.raises(IndexError):
            level_at(path, 3)
        with pytest.raises(IndexError):
            level_at(path, -1)


@given(motzkin_paths())
def test_parse_render_roundtrip(path):
    assert parse_path(render_path(path), "motzkin") == path


@given(dyck_paths())
def test_generated_dyck_paths_validate(path):
    assert is_dyck(path)
    assert min(path.levels) == 0
    assert len(path) % 2 == 0


@given(dyck_paths(min_n=1))
def test_markers_bounds(path):
    mk = markers(path)
    assert 0 < mk.last_level_one <= mk.rightmost_max
    assert path.levels[mk.last_level_one] == 1
    assert mk.leftmost_max <= mk.rightmost_max
