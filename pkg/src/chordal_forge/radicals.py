"""Exact comparisons of A + c*sqrt(n) against sqrt(R) for rational A, c, R.

Degree thresholds in the asymptotic extractor compare integers with
expressions carrying square roots; comparing squared forms in exact rational
arithmetic avoids float misclassification when the radicals happen to be
perfect squares (common at test sizes).
"""

from __future__ import annotations

from fractions import Fraction

Rat = Fraction


def sign_a_plus_c_sqrt(A: Fraction, c: Fraction, n: int) -> int:
    """Sign of A + c*sqrt(n), with c >= 0 and n >= 0."""
    if c < 0:
        raise ValueError("c must be nonnegative")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if A >= 0:
        return 1 if (A > 0 or (c > 0 and n > 0)) else 0
    lhs = c * c * n
    rhs = A * A
    if lhs > rhs:
        return 1
    if lhs == rhs:
        return 0
    return -1


def ge_sqrt(A: Fraction, c: Fraction, n: int, R: Fraction) -> bool:
    """Decide A + c*sqrt(n) >= sqrt(R) exactly (c >= 0, n >= 0, R >= 0)."""
    if R < 0:
        raise ValueError("R must be nonnegative")
    s = sign_a_plus_c_sqrt(A, c, n)
    if s < 0:
        return False
    if R == 0:
        return True
    # square once: A^2 + c^2 n + 2Ac sqrt(n) >= R
    D = R - A * A - c * c * n
    lhs_sign = sign_a_plus_c_sqrt(Fraction(0), 2 * abs(A) * c, n)
    lhs_sign *= 1 if A >= 0 else -1
    if D <= 0:
        if lhs_sign >= 0:
            return True
        # compare -(2Ac)sqrt(n) <= -D, both sides nonnegative
        return 4 * A * A * c * c * n <= D * D
    if lhs_sign <= 0:
        return False
    return 4 * A * A * c * c * n >= D * D
