"""Exact rational scalars: serialization, integer roots, factorization.

All scalars are `fractions.Fraction` (arbitrary precision, always in lowest
terms, positive denominator).  Nothing in this package ever rounds.
"""

from __future__ import annotations

import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")

DEFAULT_FACTOR_BOUND = 10**6


class UnfactoredError(ValueError):
    """A rational could not be factored with the configured prime bound."""


def format_rational(q: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(q))


def parse_rational(s: str) -> Fraction:
    """Parse "p/q" or "p", optional leading minus, no whitespace."""
    if not isinstance(s, str):
        raise ValueError(f"rational must be a string, got {type(s).__name__}")
    t = s.replace("−", "-")
    if not _RATIONAL_RE.match(t):
        raise ValueError(f"malformed rational: {s!r}")
    if "/" in t:
        num, den = t.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {s!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(t))


def integer_nth_root(a: int, d: int):
    """Exact d-th root of a nonnegative integer, or None if a is not a d-th power."""
    if a < 0 or d < 1:
        raise ValueError("integer_nth_root needs a >= 0 and d >= 1")
    if a in (0, 1) or d == 1:
        return a
    # Newton iteration on integers, then an exact check.
    x = 1 << (-(-a.bit_length() // d))
    while True:
        y = ((d - 1) * x + a // x ** (d - 1)) // d
        if y >= x:
            break
        x = y
    return x if x**d == a else None


def rational_nth_root(c: Fraction, d: int):
    """Rational x with x**d == c, or None.

    For even d and positive c the positive root is returned; negative c with
    even d has no rational root.  c == 0 is rejected (multiplicative group
    only).
    """
    if d < 1:
        raise ValueError("root degree must be >= 1")
    c = Fraction(c)
    if c == 0:
        raise ValueError("rational_nth_root is undefined at 0")
    if d == 1:
        return c
    negative = c < 0
    if negative and d % 2 == 0:
        return None
    num = integer_nth_root(abs(c.numerator), d)
    if num is None:
        return None
    den = integer_nth_root(c.denominator, d)
    if den is None:
        return None
    root = Fraction(num, den)
    return -root if negative else root


def factorize(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> dict[int, int]:
    """Prime factorization of a positive integer by trial division.

    Raises UnfactoredError when a factor above `bound` remains; callers
    must surface that verdict instead of guessing.
    """
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    out: dict[int, int] = {}
    rem = n
    for p in (2, 3):
        while rem % p == 0:
            out[p] = out.get(p, 0) + 1
            rem //= p
    p = 5
    while p * p <= rem and p <= bound:
        for q in (p, p + 2):
            while rem % q == 0:
                out[q] = out.get(q, 0) + 1
                rem //= q
        p += 6
    if rem > 1:
        if rem > bound:
            raise UnfactoredError(f"prime content above bound {bound}: {rem}")
        out[rem] = out.get(rem, 0) + 1
    return out


def factorize_fraction(q: Fraction, bound: int = DEFAULT_FACTOR_BOUND) -> dict[int, int]:
    """Signed-exponent factorization of a nonzero rational (sign excluded)."""
    if q == 0:
        raise ValueError("cannot factor 0")
    out = dict(factorize(abs(q.numerator), bound))
    for p, e in factorize(q.denominator, bound).items():
        out[p] = out.get(p, 0) - e
    return {p: e for p, e in out.items() if e != 0}
