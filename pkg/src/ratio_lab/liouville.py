"""Liouville divisor lists and the asymptotic upper-bound probe.

For N >= 1, the list L(N) has one element lambda(d)*d per divisor d of N,
with lambda(d) = (-1)^Omega(d).  Its norm has the closed multiplicative
form  N(L(N)) = (d(N)/12) f(N)  with

    f(p^k) = 1 + 2 sum_{j=1..k} ((k+1-j)/(k+1)) (-1)^j / p^j,

e.g. L(6) = [1, -2, -3, 6] with norm 1/9.  The lists L(N_k) for
N_k = prod_{p<=k} p^r, r = floor(2^(k/pi(k))), have d(N_k) in
[2^k, 2^(k+1)) elements and realize the slow log-log decay of minimal
norms; the probe reports the upper/lower ratio trace without asserting
any tolerance (convergence is far beyond desk scale).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ratio_lab.bounds import mertens_product_bound
from ratio_lab.lists import SignedList, make_list

__all__ = [
    "LiouvilleList",
    "build_liouville",
    "liouville_norm_formula",
    "asymptotic_ratio_probe",
]


def _factorize(n: int) -> list[tuple[int, int]]:
    """Trial division; intended for smooth desk-scale N."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


@dataclass(frozen=True)
class LiouvilleList:
    N: int
    list: SignedList
    d_of_N: int


def build_liouville(N: int) -> LiouvilleList:
    """The list {lambda(d) d : d | N}, canonical order."""
    if N < 1:
        raise ValueError("N must be positive")
    factors = _factorize(N)
    elements = [1]
    for p, k in factors:
        elements = [
            e * (-p) ** j for e in elements for j in range(k + 1)
        ]
    lst = make_list(elements)
    assert lst.length == len(elements)  # distinct |values|: nothing cancels
    return LiouvilleList(N=N, list=lst, d_of_N=len(elements))


def liouville_norm_formula(N: int) -> Fraction:
    """(d(N)/12) f(N) with f multiplicative as in the module docstring;
    must equal the directly computed norm of build_liouville(N).list."""
    if N < 1:
        raise ValueError("N must be positive")
    d = 1
    f = Fraction(1)
    for p, k in _factorize(N):
        d *= k + 1
        f *= 1 + 2 * sum(
            Fraction(k + 1 - j, k + 1) * Fraction((-1) ** j, p**j)
            for j in range(1, k + 1)
        )
    return Fraction(d, 12) * f


def _primes_upto(k: int) -> list[int]:
    return [p for p in range(2, k + 1) if all(p % q for q in range(2, p)) ]


def n_sub_k(k: int) -> int:
    """N_k = prod_{p<=k} p^r with r = floor(2^(k/pi(k)))."""
    primes = _primes_upto(k)
    if not primes:
        raise ValueError("k must be at least 2")
    r = int(2 ** (k / len(primes)))
    out = 1
    for p in primes:
        out *= p**r
    return out


def asymptotic_ratio_probe(k: int) -> tuple[Fraction, Fraction]:
    """(upper construction value, product lower bound) at n = d(N_k).

    The upper value is the exact norm of the Liouville list of N_k; the
    lower is the Mertens-style product bound at the same length.  Their
    ratio closes in on 1 only at (log log)^2 speed, so callers report the
    trace rather than asserting closeness.
    """
    N = n_sub_k(k)
    upper = liouville_norm_formula(N)
    d = 1
    for _, e in _factorize(N):
        d *= e + 1
    lower = mertens_product_bound(d)
    return upper, lower
