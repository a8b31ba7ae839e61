"""Lattice paths over the four-letter step alphabet.

Steps are single characters: ``U`` (up, +1), ``D`` (down, -1), ``S``
(straight level step, 0) and ``W`` (wavy level step, 0).  A path is an
immutable value: the step string plus a cached level profile, where
``levels[x]`` is the y-coordinate after ``x`` steps and ``levels[0] == 0``.

Family membership (Dyck, 2-Motzkin, ballot) is a predicate over this one
type rather than a distinct runtime type: parsing is deliberately
permissive, so a freshly parsed path may be invalid for every family.
``DyckPath``/``TwoMotzkinPath``/``BallotPath`` are aliases used in
signatures to say which family an operation expects or guarantees.

The text format is a single line over ``{U,D,S,W}`` with no separators;
the empty string is the empty path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ParseError

UP = "U"
DOWN = "D"
STRAIGHT = "S"
WAVY = "W"

RISE = {UP: 1, DOWN: -1, STRAIGHT: 0, WAVY: 0}

# Canonical step order for enumeration and golden files.
DYCK_ALPHABET = (UP, DOWN)
MOTZKIN_ALPHABET = (UP, DOWN, STRAIGHT, WAVY)

_ALPHABETS = {"dyck": frozenset(DYCK_ALPHABET), "motzkin": frozenset(MOTZKIN_ALPHABET)}

_MIRROR = str.maketrans("UD", "DU")


@dataclass(frozen=True)
class LatticePath:
    """Immutable step sequence with its level profile.

    Construct through :func:`parse_path` (or :func:`make_path`); the two
    fields must stay consistent: ``len(levels) == len(steps) + 1`` and each
    increment matches the step's rise.
    """

    steps: str
    levels: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps

    def __repr__(self) -> str:
        return f"LatticePath({self.steps!r})"

    @property
    def height(self) -> int:
        return max(self.levels)

    @property
    def final_level(self) -> int:
        return self.levels[-1]


# Signature aliases; validity is checked by the is_* predicates.
DyckPath = LatticePath
TwoMotzkinPath = LatticePath
BallotPath = LatticePath

EMPTY_PATH = LatticePath("", (0,))


def parse_path(text: str, alphabet: str) -> LatticePath:
    """Parse a path string over the ``"dyck"`` (U/D) or ``"motzkin"``
    (U/D/S/W) alphabet.

    Computes the level profile but does not enforce nonnegativity or any
    terminal condition; use :func:`validate` for that.  Raises
    :class:`ParseError` naming the first offending index.
    """
    try:
        allowed = _ALPHABETS[alphabet]
    except KeyError:
        raise DomainError(f"unknown alphabet {alphabet!r}; expected 'dyck' or 'motzkin'") from None
    levels = [0] * (len(text) + 1)
    level = 0
    for i, ch in enumerate(text):
        if ch not in allowed:
            raise ParseError(f"unknown step {ch!r} at index {i}", index=i)
        level += RISE[ch]
        levels[i + 1] = level
    return LatticePath(text, tuple(levels))


def make_path(text: str) -> LatticePath:
    """Parse over the full U/D/S/W alphabet."""
    return parse_path(text, "motzkin")


def render_path(path: LatticePath) -> str:
    """Inverse of parsing: the canonical single-line text of a path."""
    return path.steps


def level_at(path: LatticePath, x: int) -> int:
    """Level (y-coordinate) of the point after ``x`` steps, 0 <= x <= len."""
    if not 0 <= x <= len(path):
        raise IndexError(f"point index {x} out of range 0..{len(path)}")
    return path.levels[x]


def is_dyck(path: LatticePath) -> bool:
    """Up/down steps only, never below the axis, ends on the axis.

    The empty path qualifies (length 0, height 0).
    """
    if set(path.steps) - {UP, DOWN}:
        return False
    return min(path.levels) == 0 and path.levels[-1] == 0


def is_motzkin2(path: LatticePath) -> bool:
    """Never below the axis and ends on the axis; level steps allowed."""
    return min(path.levels) >= 0 and path.levels[-1] == 0


def is_ballot(path: LatticePath, n: int, r: int) -> bool:
    """Up/down path of length 2n-1 from the origin to level 2r-1, never
    below the axis."""
    if not (isinstance(n, int) and isinstance(r, int) and 1 <= r <= n):
        return False
    if set(path.steps) - {UP, DOWN}:
        return False
    return (
        len(path) == 2 * n - 1
        and path.levels[-1] == 2 * r - 1
        and min(path.levels) >= 0
    )


def is_even_terminal_ballot(path: LatticePath) -> bool:
    """Up/down path of even length ending at level 2, never below the axis."""
    if set(path.steps) - {UP, DOWN}:
        return False
    return len(path) % 2 == 0 and path.levels[-1] == 2 and min(path.levels) >= 0


def validate(path: LatticePath, family: str, n: int | None = None, r: int | None = None) -> bool:
    """True iff ``path`` satisfies every invariant of the named family.

    ``family`` is ``"dyck"``, ``"motzkin2"`` or ``"ballot"`` (the latter
    takes the ``(n, r)`` parameters).  Never raises for a well-formed path;
    a family that no path can satisfy simply yields False.
    """
    if family == "dyck":
        return is_dyck(path)
    if family == "motzkin2":
        return is_motzkin2(path)
    if family == "ballot":
        if n is None or r is None:
            raise DomainError("ballot family requires n and r")
        return is_ballot(path, n, r)
    raise DomainError(f"unknown family {family!r}")


@dataclass(frozen=True)
class PathMarkers:
    """Distinguished points and split statistics of a nonempty Dyck path.

    ``last_level_one`` is the last point at level one up to and including
    the rightmost maximum; ``h_minus``/``h_plus`` are the maximum levels
    over the prefix up to that point and the suffix from it (both
    inclusive).  Always ``h_minus <= h_plus == height``.
    """

    height: int
    leftmost_max: int
    rightmost_max: int
    last_level_one: int
    h_minus: int
    h_plus: int


def markers(path: DyckPath) -> PathMarkers:
    """Compute :class:`PathMarkers` for a valid, nonempty Dyck path."""
    if len(path) == 0:
        raise DomainError("markers undefined for empty path")
    if not is_dyck(path):
        raise DomainError("markers require a valid Dyck path")
    levels = path.levels
    h = max(levels)
    rightmost = len(levels) - 1 - levels[::-1].index(h)
    leftmost = levels.index(h)
    # a nonempty Dyck path starts with U, so x=1 is always a level-one
    # candidate and the search below cannot fail
    x = next(i for i in range(rightmost, -1, -1) if levels[i] == 1)
    return PathMarkers(
        height=h,
        leftmost_max=leftmost,
        rightmost_max=rightmost,
        last_level_one=x,
        h_minus=max(levels[: x + 1]),
        h_plus=max(levels[x:]),
    )


def reverse(path: TwoMotzkinPath) -> TwoMotzkinPath:
    """The path read right to left: step order reversed, up and down
    exchanged, level steps kept.  An involution on valid 2-Motzkin paths.
    """
    if not is_motzkin2(path):
        raise DomainError("reverse requires a valid 2-Motzkin path")
    steps = path.steps[::-1].translate(_MIRROR)
    end = path.levels[-1]
    levels = tuple(lv - end for lv in reversed(path.levels))
    return LatticePath(steps, levels)
