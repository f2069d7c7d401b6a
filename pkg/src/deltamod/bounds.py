"""Closed-form column-count bounds, evaluated exactly.

Each bound caps the number of points (pairwise non-parallel nonzero
columns) of a rank-r delta-modular matrix; the rank-2 sandwich brackets
the exact rank-2 answer.  floor(log2 delta) is computed as
delta.bit_length() - 1, and primality by trial division, so every value
is an exact integer.
"""

from __future__ import annotations

from dataclasses import dataclass


def _check(delta: int, r: int) -> None:
    if delta < 1:
        raise ValueError(f"delta must be a positive integer, got {delta}")
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")


def bound_lpsx(delta: int, r: int) -> int:
    """delta^2 * binomial(r+1, 2): the earlier general bound."""
    _check(delta, r)
    return delta * delta * (r * (r + 1) // 2)


def bound_main(delta: int, r: int) -> int:
    """binomial(r+1, 2) + 80 * delta^7 * r."""
    _check(delta, r)
    return r * (r + 1) // 2 + 80 * delta**7 * r


def bound_final(delta: int, r: int) -> int:
    """binomial(r+1, 2) + (70*delta^7 + 8*delta^3*floor(log2 delta)^2) * r."""
    _check(delta, r)
    log2_floor = delta.bit_length() - 1
    return r * (r + 1) // 2 + (70 * delta**7 + 8 * delta**3 * log2_floor**2) * r


def smallest_prime_above(n: int) -> int:
    """Least prime strictly greater than n, by trial division."""
    candidate = max(2, n + 1)
    while True:
        is_prime = candidate >= 2 and all(
            candidate % d for d in range(2, int(candidate**0.5) + 1)
        )
        if is_prime:
            return candidate
        candidate += 1


@dataclass(frozen=True)
class Rank2Bounds:
    """The rank-2 sandwich: lower delta+2, upper min(floor(3*delta/2)+1, p+1).

    p is the smallest prime above delta.  At delta = 1 the two published
    bounds conflict (lower 3 > upper 2); consistent is False there and both
    raw values are reported rather than reconciled.
    """

    delta: int
    lower: int
    upper: int
    upper_half: int
    upper_prime: int
    prime: int

    @property
    def consistent(self) -> bool:
        return self.lower <= self.upper

    def as_dict(self) -> dict:
        return {
            "delta": self.delta,
            "lower": self.lower,
            "upper": self.upper,
            "upper_half": self.upper_half,
            "upper_prime": self.upper_prime,
            "prime": self.prime,
            "consistent": self.consistent,
        }


def rank2_bounds(delta: int) -> Rank2Bounds:
    if delta < 1:
        raise ValueError(f"delta must be a positive integer, got {delta}")
    p = smallest_prime_above(delta)
    upper_half = 3 * delta // 2 + 1
    upper_prime = p + 1
    return Rank2Bounds(
        delta=delta,
        lower=delta + 2,
        upper=min(upper_half, upper_prime),
        upper_half=upper_half,
        upper_prime=upper_prime,
        prime=p,
    )
