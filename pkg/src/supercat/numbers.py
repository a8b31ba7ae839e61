"""Exact closed-form values and algebraic identity checks.

Every formula is evaluated as an exact rational whose denominator must
reduce to 1; a non-integral result raises immediately instead of silently
rounding.  Plain Python integers carry the arbitrary precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import DomainError

# Memoized so table emission does not recompute large factorials per cell.
_fact = lru_cache(maxsize=None)(math.factorial)


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise AssertionError(f"internal: {what} evaluated to non-integer {value}")
    return value.numerator


class Failure(NamedTuple):
    """One violated instance: the parameters and both sides."""

    params: tuple
    lhs: object
    rhs: object


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one identity over a parameter range."""

    identity: str
    bounds: dict[str, int]
    failures: tuple[Failure, ...]
    cases: int

    @property
    def passed(self) -> bool:
        return not self.failures


def super_catalan_s(m: int, n: int) -> int:
    """(2m)! (2n)! / (m! n! (m+n)!), always an integer."""
    if m < 0 or n < 0:
        raise DomainError("super_catalan_s requires m, n >= 0")
    q = Fraction(_fact(2 * m) * _fact(2 * n), _fact(m) * _fact(n) * _fact(m + n))
    return _as_int(q, f"S({m},{n})")


def super_catalan_t(m: int, n: int) -> int:
    """The super Catalan number: half of :func:`super_catalan_s`.

    Integral for every (m, n) except (0, 0), which is rejected.
    """
    if m < 0 or n < 0:
        raise DomainError("super_catalan_t requires m, n >= 0")
    if m == 0 and n == 0:
        raise DomainError("T(0,0) is not integral")
    s = super_catalan_s(m, n)
    if s % 2:
        raise AssertionError(f"internal: S({m},{n}) = {s} is odd")
    return s // 2


def catalan(n: int) -> int:
    """(2n)! / (n! (n+1)!)."""
    if n < 0:
        raise DomainError("catalan requires n >= 0")
    return _as_int(Fraction(_fact(2 * n), _fact(n) * _fact(n + 1)), f"C({n})")


def ballot_number(n: int, r: int) -> int:
    """(r/n) * binom(2n, n+r): nonnegative up/down paths of length 2n-1
    ending at level 2r-1."""
    if not 1 <= r <= n:
        raise DomainError(f"ballot_number requires 1 <= r <= n, got n={n}, r={r}")
    return _as_int(Fraction(r * math.comb(2 * n, n + r), n), f"B({n},{r})")


def ballot_sum_terms(m: int, n: int) -> list[tuple[int, int, int]]:
    """Unsigned terms of the alternating ballot-product sum, in both printed
    forms: ``(r, B(m,r)*B(n,r), (r^2/(m n)) * binom(2m,m+r) * binom(2n,n+r))``.

    The two forms must agree exactly for every r; a mismatch is an internal
    error.  The sum truncates at r = min(m, n) because the binomials vanish
    beyond it.
    """
    if m < 1 or n < 1:
        raise DomainError("ballot_sum_terms requires m, n >= 1")
    terms = []
    for r in range(1, min(m, n) + 1):
        product_form = ballot_number(m, r) * ballot_number(n, r)
        binomial_form = _as_int(
            Fraction(r * r * math.comb(2 * m, m + r) * math.comb(2 * n, n + r), m * n),
            f"ballot-sum term r={r} of ({m},{n})",
        )
        if product_form != binomial_form:
            raise AssertionError(
                f"internal: ballot-sum term mismatch at (m={m}, n={n}, r={r}): "
                f"{product_form} != {binomial_form}"
            )
        terms.append((r, product_form, binomial_form))
    return terms


def ballot_sum_identity(m: int, n: int) -> int:
    """Sum over r of (-1)^(r-1) B(m,r) B(n,r); equals the super Catalan
    number T(m,n)."""
    return sum(
        (term if r % 2 else -term) for r, term, _ in ballot_sum_terms(m, n)
    )


def check_rubenstein(max_m: int, max_n: int) -> VerificationReport:
    """Check 4 T(m,n) = T(m+1,n) + T(m,n+1) for all 1 <= m <= max_m,
    1 <= n <= max_n."""
    if max_m < 1 or max_n < 1:
        raise DomainError("check_rubenstein requires bounds >= 1")
    failures = []
    cases = 0
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            cases += 1
            lhs = 4 * super_catalan_t(m, n)
            rhs = super_catalan_t(m + 1, n) + super_catalan_t(m, n + 1)
            if lhs != rhs:
                failures.append(Failure((m, n), lhs, rhs))
    return VerificationReport(
        identity="rubenstein",
        bounds={"max_m": max_m, "max_n": max_n},
        failures=tuple(failures),
        cases=cases,
    )
