"""Recursive exact lower bounds for minimal norms of lists.

G_r(n) is the infimum of norms over non-degenerate length-n lists whose
elements use only the first r primes; G(n) is the unrestricted infimum,
G(n;d) the infimum after excising finitely many subspaces of dimension at
most d, and G~(n;d) the sum-zero variant.  The tables here hold certified
lower bounds computed by the separation recursion

    G_r(n) >= min_{i,j} ( G_{r-1}(n),
                          G_r(i) + G_{r-1}(n-i),
                          (1 - 1/p_r)(G_r(i) + G_{r-1}(n-i)) + G_r(j)/p_r )

over 1 <= i < n and |n-2i| <= j < n with j = n mod 2, seeded with
G_0(n) = n^2/12 and G_r(1) = 1/12; G(n) is bounded by the same shape with
G_r(n) in the first slot and p_{r+1} as the prime.  All arithmetic exact.

Landmark values: the n = 2..11 rows are
  G(n)   >= 1/12, 1/8, 1/9, 1/6, 17/108, 5/27, 37/216, 95/432, 2/9, 325/1296
  G(n;1) >= 1/6, 1/6, 1/6, 7/36, 7/36, 17/72, 2/9, 55/216, 55/216, 8/27
and G(n) > 1 for n >= 82, G(n;1) > 1 for n >= 76.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "BoundTable",
    "INFINITY",
    "build_table",
    "g1_closed_form",
    "mertens_product_bound",
    "g_nd_lower",
    "g_tilde_lower",
    "max_length_for_D",
]

# Tagged +infinity sentinel for G(n;d) with d >= n.  float('inf') compares
# correctly against Fraction and is never mistaken for a rational value.
INFINITY = float("inf")


def _primes(count: int) -> list[int]:
    out = []
    cand = 2
    while len(out) < count:
        if all(cand % p for p in out):
            out.append(cand)
        cand += 1
    return out


@dataclass(frozen=True)
class BoundTable:
    n_max: int
    r_max: int
    gr: tuple[tuple[Fraction, ...], ...]  # gr[r][n], 0 <= n <= n_max
    g: tuple[Fraction, ...]  # g[n]
    g1: tuple[Fraction, ...]  # g1[n], g1[0] = g1[1] = 0 placeholders


def build_table(n_max: int, r_max: int = 3) -> BoundTable:
    """Fill the G_r / G / G(.;1) lower-bound tables up to n_max.

    Rows are computed in increasing r, and within a row in increasing n;
    the recursion only consults same-row entries at smaller lengths, so a
    single pass suffices.  Index 0 holds 0 (the empty list), which the
    j-minimum legitimately reaches when i = n/2.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    primes = _primes(r_max + 1)

    gr: list[list[Fraction]] = [
        [Fraction(n * n, 12) for n in range(n_max + 1)]
    ]
    gr[0][0] = Fraction(0)
    for r in range(1, r_max + 1):
        p = Fraction(primes[r - 1])
        row = [Fraction(0), Fraction(1, 12)]
        prev = gr[r - 1]
        for n in range(2, n_max + 1):
            best = prev[n]
            for i in range(1, n):
                split = row[i] + prev[n - i]
                if split < best:
                    best = split
                j_min = min(row[j] for j in range(abs(n - 2 * i), n, 2))
                mixed = (1 - 1 / p) * split + j_min / p
                if mixed < best:
                    best = mixed
            row.append(best)
        gr.append(row)

    p = Fraction(primes[r_max])
    g: list[Fraction] = [Fraction(0), Fraction(1, 12)]
    top = gr[r_max]
    for n in range(2, n_max + 1):
        best = top[n]
        for i in range(1, n):
            split = g[i] + g[n - i]
            if split < best:
                best = split
            j_min = min(g[j] for j in range(abs(n - 2 * i), n, 2))
            mixed = (1 - 1 / p) * split + j_min / p
            if mixed < best:
                best = mixed
        g.append(best)

    g1: list[Fraction] = [Fraction(0), Fraction(0)]
    for n in range(2, n_max + 1):
        g1.append(min(g[i] + g[n - i] for i in range(1, n)))

    return BoundTable(
        n_max=n_max,
        r_max=r_max,
        gr=tuple(tuple(row) for row in gr),
        g=tuple(g),
        g1=tuple(g1),
    )


def g1_closed_form(n: int) -> Fraction:
    """Exact value of G_1(n), attained by the list [(-2)^j : 0 <= j < n]:
    (1/12)(n/3 + (2/3)(1 - 1/2 + 1/4 - ... + (-1)^(n-1)/2^(n-1)))."""
    if n < 1:
        raise ValueError("n must be positive")
    alt = sum(Fraction((-1) ** j, 2**j) for j in range(n))
    return Fraction(1, 12) * (Fraction(n, 3) + Fraction(2, 3) * alt)


def mertens_product_bound(n: int) -> Fraction:
    """G(n) >= (n/12) prod_{j<=m} (p_j - 1)/(p_j + 1) with 2^m <= n < 2^(m+1);
    the large-n fallback once the recursion table stops."""
    if n < 2:
        raise ValueError("n must be at least 2")
    m = n.bit_length() - 1
    primes = _primes(m)
    value = Fraction(n, 12)
    for p in primes:
        value *= Fraction(p - 1, p + 1)
    return value


def g_nd_lower(table: BoundTable, n: int, d: int):
    """Lower bound for G(n;d) = min over compositions of n into d+1
    positive parts of the sum of G-bounds; INFINITY when d >= n."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    if d >= n:
        return INFINITY
    if n > table.n_max:
        raise ValueError("table too small")
    return _composition_min(table.g, n, d + 1, min_part=1)


def _composition_min(values, n: int, parts: int, min_part: int):
    # dp[t][m]: min sum over compositions of m into t parts, parts >= min_part
    if n < parts * min_part:
        return INFINITY
    # t = 1
    prev = [values[m] if m >= min_part else INFINITY for m in range(n + 1)]
    for t in range(2, parts + 1):
        cur = [INFINITY] * (n + 1)
        for m in range(t * min_part, n + 1):
            best = INFINITY
            for i in range(min_part, m - (t - 1) * min_part + 1):
                cand = prev[m - i] + values[i]
                if cand < best:
                    best = cand
            cur[m] = best
        prev = cur
    return prev[n]


def g_tilde_lower(table: BoundTable, n: int, d: int):
    """Lower bound for the sum-zero variant:
    min( G(n;d+1), min over compositions into d+1 parts >= 3 of the sum of
    per-part sum-zero bounds ), the per-part bound being 1/4 for odd parts
    and the G table value for even parts >= 4."""
    if n < 2 or d < 0:
        raise ValueError("need n >= 2 and d >= 0")
    base = [INFINITY] * (n + 1)
    for ell in range(3, n + 1):
        if ell % 2 == 1:
            base[ell] = Fraction(1, 4)
        else:
            base[ell] = table.g[ell]
    first = g_nd_lower(table, n, d + 1)
    second = _composition_min(base, n, d + 1, min_part=3)
    return min(first, second)


def max_length_for_D(table: BoundTable, D: int, *, use_g1: bool = False) -> int:
    """Largest length K+L not ruled out by the table for excess D.

    A ratio with excess D has length K+L = 2K+D, so only lengths of D's
    parity are admissible; any list norm is at most D^2/4.  Returns one
    more than the largest admissible n with bound <= D^2/4, i.e. the
    published cutoffs: D=2 gives 81 from the g row (none beyond) and 75
    from the g1 row (finitely many beyond); D=1 gives 10.
    """
    if D < 1:
        raise ValueError("D must be at least 1")
    threshold = Fraction(D * D, 4)
    row = table.g1 if use_g1 else table.g
    admissible = [n for n in range(2, table.n_max + 1) if n % 2 == D % 2]
    if row[admissible[-1]] <= threshold:
        raise ValueError("table too small to witness the crossing")
    return max(n for n in admissible if row[n] <= threshold) + 1
