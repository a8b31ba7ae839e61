"""Exhaustive, deterministic generation of path families.

All streams are lazy generators produced by backtracking over prefixes,
pruned by nonnegativity and by whether the terminal level is still
reachable, so work stays linear in the output size.  Order is
lexicographic in the canonical step order U < D < S < W; two runs emit
identical sequences.
"""

from __future__ import annotations

from collections.abc import Iterator

from .errors import DomainError
from .paths import DYCK_ALPHABET, MOTZKIN_ALPHABET, RISE, LatticePath


def _iter_family(length: int, terminal: int, alphabet: tuple[str, ...]) -> Iterator[LatticePath]:
    """All nonnegative paths of ``length`` steps from 0 to ``terminal``."""
    if terminal < 0 or terminal > length:
        return
    if all(RISE[c] for c in alphabet) and (length - terminal) % 2:
        # pure up/down steps cannot change the parity of length - terminal
        return
    rises = [(c, RISE[c]) for c in alphabet]
    steps = [""] * length
    levels = [0] * (length + 1)

    def rec(pos: int, level: int) -> Iterator[LatticePath]:
        if pos == length:
            yield LatticePath("".join(steps), tuple(levels))
            return
        rem = length - pos - 1
        for ch, rise in rises:
            nl = level + rise
            if nl >= 0 and abs(nl - terminal) <= rem:
                steps[pos] = ch
                levels[pos + 1] = nl
                yield from rec(pos + 1, nl)

    yield from rec(0, 0)


def enum_dyck(n: int) -> Iterator[LatticePath]:
    """Every Dyck path of length 2n exactly once; count is catalan(n)."""
    if n < 0:
        raise DomainError("enum_dyck requires n >= 0")
    return _iter_family(2 * n, 0, DYCK_ALPHABET)


def enum_motzkin2(length: int) -> Iterator[LatticePath]:
    """Every 2-Motzkin path of the given length; count is catalan(length+1)."""
    if length < 0:
        raise DomainError("enum_motzkin2 requires length >= 0")
    return _iter_family(length, 0, MOTZKIN_ALPHABET)


def enum_ballot(n: int, r: int) -> Iterator[LatticePath]:
    """Every nonnegative up/down path of length 2n-1 ending at level 2r-1;
    count is ballot_number(n, r)."""
    if not 1 <= r <= n:
        raise DomainError(f"enum_ballot requires 1 <= r <= n, got n={n}, r={r}")
    return _iter_family(2 * n - 1, 2 * r - 1, DYCK_ALPHABET)


def enum_ballot_even(length: int) -> Iterator[LatticePath]:
    """Every nonnegative up/down path of the given even length ending at
    level 2 (the intermediate family of the two-stage injection)."""
    if length < 0:
        raise DomainError("enum_ballot_even requires length >= 0")
    return _iter_family(length, 2, DYCK_ALPHABET)


def enum_pairs_total(n: int) -> Iterator[tuple[LatticePath, LatticePath]]:
    """All ordered pairs of (possibly empty) Dyck paths of total length 2n,
    grouped by the first component's length, ascending."""
    if n < 1:
        raise DomainError("enum_pairs_total requires n >= 1")

    def gen() -> Iterator[tuple[LatticePath, LatticePath]]:
        for k in range(n + 1):
            seconds = list(enum_dyck(n - k))
            for first in enum_dyck(k):
                for second in seconds:
                    yield first, second

    return gen()
