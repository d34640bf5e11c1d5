"""Nonnegative combinations of two even integers and the asymptotic thresholds."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ..errors import BadEll, BadGcd


@dataclass(frozen=True)
class Decomposition:
    alpha: int
    beta: int
    gamma: int
    x: int
    y: int


def decompose_even(alpha: int, x: int, y: int) -> Decomposition | None:
    """Find beta, gamma >= 0 with beta*x + gamma*y == alpha, smallest gamma first.

    Every even alpha > xy/2 - x - y has a decomposition; smaller ones may not.
    """
    if x <= 0 or y <= 0 or x % 2 or y % 2 or gcd(x, y) != 2:
        raise BadGcd(f"x and y must be positive even integers with gcd 2, got x={x}, y={y}")
    if alpha < 0 or alpha % 2:
        return None
    for gamma in range(alpha // y + 1):
        rest = alpha - gamma * y
        if rest % x == 0:
            return Decomposition(alpha, rest // x, gamma, x, y)
    return None


def bound_odd(ell: int) -> int:
    """Threshold (3l^2 - 4l - 3)/2 above which HTG(m,n,l) is claimed 2-spanning cyclable for odd m."""
    if ell % 2 == 0 or ell <= 3:
        raise BadEll(f"bound_odd needs odd ell > 3, got {ell}")
    return (3 * ell * ell - 4 * ell - 3) // 2


def bound_even(ell: int) -> int:
    """Threshold (l^2 + 2l - 4)/2 above which HTG(m,n,l) is 2-spanning cyclable for even m."""
    if ell % 2 or ell <= 2:
        raise BadEll(f"bound_even needs even ell > 2, got {ell}")
    return (ell * ell + 2 * ell - 4) // 2
