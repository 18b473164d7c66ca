"""Integrality of factorial ratios, three independent ways.

A ratio spec ({a_1..a_K}; {b_1..b_L}) with equal sums stands for the
sequence (a_1 n)!...(a_K n)! / ((b_1 n)!...(b_L n)!).  Integrality for
all n is equivalent to the step function

    f(x) = sum_i floor(a_i x) - sum_j floor(b_j x)

being nonnegative everywhere, which is a finite check over the
breakpoints m/v in [0, 1).  When D = L - K = 1, integrality is also
equivalent to the signed list [a_1..a_K, -b_1..-b_L] (sum zero, odd
length) having norm exactly 1/4.  A third, slower route checks prime
valuations of the factorials directly for n up to a cutoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd

from ratio_lab.lists import SignedList, make_list, norm

__all__ = [
    "RatioSpec",
    "to_list",
    "landau_min_max",
    "is_integral",
    "norm_quarter_check",
    "valuation_oracle",
    "family_membership",
]


@dataclass(frozen=True)
class RatioSpec:
    """Numerator and denominator multipliers, stored sorted."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __post_init__(self):
        num = tuple(sorted(self.numerator))
        den = tuple(sorted(self.denominator))
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)
        if not num or not den:
            raise ValueError("numerator and denominator must be non-empty")
        if any(a <= 0 for a in num + den):
            raise ValueError("entries must be positive")
        if sum(num) != sum(den):
            raise ValueError("numerator and denominator sums must agree")
        if set(num) & set(den):
            raise ValueError("shared entries must be cancelled first")

    @property
    def K(self) -> int:
        return len(self.numerator)

    @property
    def L(self) -> int:
        return len(self.denominator)

    @property
    def D(self) -> int:
        return self.L - self.K

    def is_primitive(self) -> bool:
        return reduce(gcd, self.numerator + self.denominator) == 1


def to_list(r: RatioSpec) -> SignedList:
    """The signed list [a_1..a_K, -b_1..-b_L]; its sum is zero."""
    a = make_list(list(r.numerator) + [-b for b in r.denominator])
    if a.length != r.K + r.L:
        raise ValueError("spec has cancelling entries")
    return a


def _f_at(r: RatioSpec, x: Fraction) -> int:
    total = 0
    for a in r.numerator:
        v = a * x
        total += v.numerator // v.denominator
    for b in r.denominator:
        v = b * x
        total -= v.numerator // v.denominator
    return total


def landau_min_max(r: RatioSpec) -> tuple[int, int]:
    """Exact (min, max) of f over [0, 1).

    f is 1-periodic and right-continuous, jumping only at the points
    m/v for v an entry, so its extrema over the reals are attained on
    that finite set.  The ratio is integral for all n iff min >= 0.
    """
    lo = hi = 0  # f(0) = 0
    seen = set()
    for v in set(r.numerator) | set(r.denominator):
        for m in range(1, v):
            x = Fraction(m, v)
            if x in seen:
                continue
            seen.add(x)
            val = _f_at(r, x)
            lo = min(lo, val)
            hi = max(hi, val)
    return lo, hi


def is_integral(r: RatioSpec) -> bool:
    return landau_min_max(r)[0] >= 0


def norm_quarter_check(a: SignedList) -> RatioSpec | None:
    """For a primitive odd-length sum-zero list: the corresponding ratio
    spec (with the longer side as denominator) when the norm is exactly
    1/4, else None."""
    if a.length % 2 == 0:
        raise ValueError("list must have odd length")
    if a.total != 0:
        raise ValueError("list must sum to zero")
    if not a.is_primitive():
        raise ValueError("list must be primitive")
    if norm(a) != Fraction(1, 4):
        return None
    pos = [e for e in a.elements if e > 0]
    neg = [-e for e in a.elements if e < 0]
    if len(pos) > len(neg):
        pos, neg = neg, pos
    assert len(neg) == len(pos) + 1
    return RatioSpec(numerator=tuple(pos), denominator=tuple(neg))


def _primes_upto(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [p for p in range(limit + 1) if sieve[p]]


def valuation_oracle(
    r: RatioSpec, n_max: int, p_max: int | None = None
) -> tuple[int, int] | None:
    """Check sum_i v_p((a_i n)!) >= sum_j v_p((b_j n)!) directly.

    Uses v_p(m!) = sum_t floor(m / p^t).  Scans every n <= n_max and
    every prime p up to (largest entry) * n (capped at p_max if given);
    larger primes divide none of the factorials.  Returns the first
    violating (n, p), or None on a clean pass.  Cross-validates the
    Landau criterion on the tested range; it is not a proof.
    """
    entries = [(a, 1) for a in r.numerator] + [(b, -1) for b in r.denominator]
    biggest = max(e for e, _ in entries)
    limit = biggest * n_max
    if p_max is not None:
        limit = min(limit, p_max)
    primes = _primes_upto(limit)
    for n in range(1, n_max + 1):
        top = biggest * n
        for p in primes:
            if p > top:
                break
            total = 0
            for e, sign in entries:
                m = e * n
                while m:
                    m //= p
                    total += sign * m
            if total < 0:
                return (n, p)
    return None


def _match_type_a_family(values) -> tuple[int, int] | None:
    # [2a, 2b, -a, -b, -(a+b)] with a, b coprime nonzero integers of either
    # sign; with mixed signs this is the same multiset as the third family
    # [2a', b', -a', -2b', -(a'-b')] (take b = -b'), so one matcher covers
    # both and the caller tags by the sign pattern
    target = _as_multiset(values)
    candidates = sorted({-v for v in values})
    for a in candidates:
        for b in candidates:
            if a + b == 0 or gcd(a, b) != 1:
                continue
            cand = _as_multiset([2 * a, 2 * b, -a, -b, -(a + b)])
            if cand is not None and cand == target:
                return (a, b)
    return None


def _as_multiset(values) -> tuple[int, ...] | None:
    if any(v == 0 for v in values):
        return None
    return tuple(sorted(values))


def family_membership(a: SignedList) -> str:
    """Tag a primitive odd-length sum-zero list as 'family1'/'family2'/
    'family3' (one of the three infinite families of integral ratios,
    up to global sign) or 'sporadic'."""
    if a.length % 2 == 0 or a.total != 0 or not a.is_primitive():
        raise ValueError("need a primitive odd-length sum-zero list")
    for candidate in (a.elements, tuple(-e for e in a.elements)):
        if len(candidate) == 3:
            # [a+b, -a, -b]: any sum-zero triple with one positive entry
            if sum(1 for v in candidate if v > 0) == 1:
                return "family1"
        if len(candidate) == 5:
            match = _match_type_a_family(candidate)
            if match is not None:
                fa, fb = match
                return "family2" if fa * fb > 0 else "family3"
    return "sporadic"
