"""Exact integer tables for partition counts and spaced-subsum statistics.

Everything in this module is arbitrary-precision integer or rational
arithmetic; floating point never enters.  The statistic of interest, for a
partition lambda = (a_1 >= a_2 >= ...) and a residue class i mod m, is the
sum of the parts a_i, a_{i+m}, a_{i+2m}, ...  Totals over all partitions of
n are computed from divisor sums against the partition-count table rather
than by enumeration; see enumeration in oracle.py for the brute-force
ground truth used in tests.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, TextIO


class ConsistencyError(Exception):
    """An internal cross-check failed; indicates a bug, not bad input."""


Partition = tuple[int, ...]


def check_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize a partition given as any iterable of ints.

    Parts must be positive and weakly decreasing.  Returns a tuple.
    """
    out = tuple(parts)
    for x in out:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ValueError(f"parts must be positive integers, got {x!r}")
    for a, b in zip(out, out[1:]):
        if a < b:
            raise ValueError("parts must be weakly decreasing")
    return out


def canonical_residue(d: int, m: int) -> int:
    """Residue of d mod m, reported in 1..m (multiples of m report as m)."""
    return d % m or m


def _check_mod_class(m: int, i: int) -> None:
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if not 1 <= i <= m:
        raise ValueError(f"residue index must lie in 1..{m}, got {i}")


# ---------------------------------------------------------------------------
# partition counts
# ---------------------------------------------------------------------------

_P_LOCK = threading.Lock()
_P_VALUES: list[int] = [1]  # p(0), p(1), ...; grows monotonically


def partition_counts(max_n: int) -> list[int]:
    """Return [p(0), ..., p(max_n)] via Euler's pentagonal recurrence.

    The table grows in a process-wide cache guarded by a lock, so repeated
    calls (including from worker threads) share work.  The returned list is
    a copy; callers may mutate it freely.
    """
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    with _P_LOCK:
        values = _P_VALUES
        while len(values) <= max_n:
            n = len(values)
            total = 0
            k = 1
            while True:
                g = k * (3 * k - 1) // 2
                if g > n:
                    break
                sign = -1 if k % 2 == 0 else 1
                total += sign * values[n - g]
                g = k * (3 * k + 1) // 2
                if g <= n:
                    total += sign * values[n - g]
                k += 1
            values.append(total)
        return values[: max_n + 1]


def preload_partition_counts(values: Sequence[int]) -> None:
    """Seed the shared p-table cache, e.g. from a file written earlier.

    The supplied prefix must agree with whatever is already cached.
    """
    if not values or values[0] != 1:
        raise ValueError("a p-table must start with p(0) = 1")
    with _P_LOCK:
        n_check = min(len(values), len(_P_VALUES))
        if list(values[:n_check]) != _P_VALUES[:n_check]:
            raise ConsistencyError("supplied p-table disagrees with cached values")
        if len(values) > len(_P_VALUES):
            _P_VALUES[:] = list(values)


def restricted_counts(max_n: int, max_j: int) -> list[list[int]]:
    """Table t[n][j] = number of partitions of n into at most j parts.

    Recurrence: a partition of n into at most j parts either uses fewer
    than j parts or has all j parts >= 1 (subtract one from each).
    """
    if max_n < 0 or max_j < 0:
        raise ValueError("table bounds must be >= 0")
    table = [[0] * (max_j + 1) for _ in range(max_n + 1)]
    for j in range(max_j + 1):
        table[0][j] = 1
    for n in range(1, max_n + 1):
        row = table[n]
        for j in range(1, max_j + 1):
            row[j] = row[j - 1] + (table[n - j][j] if n >= j else 0)
    return table


# ---------------------------------------------------------------------------
# divisor sums
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DivisorSumTables:
    """Sieved divisor data for 1..max_k, specialized to a class (m, i).

    tau[k] counts all divisors of k.  tau_mod[h][k] counts divisors with
    canonical residue h in 1..m (h = m holds the divisors that are multiples
    of m; row 0 is unused).  floor_sum[k] is the weighted divisor sum
    sum_{d | k} floor((d + m - i) / m), which is the per-k kernel of the
    spaced-subsum total.  Index 0 of each k-indexed list is unused.
    """

    max_k: int
    m: int
    i: int
    tau: list[int]
    tau_mod: list[list[int]]
    floor_sum: list[int]


def divisor_tables(max_k: int, m: int, i: int) -> DivisorSumTables:
    """Sieve tau, residue-split tau, and the floor kernel up to max_k."""
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    _check_mod_class(m, i)
    tau = [0] * (max_k + 1)
    tau_mod = [[0] * (max_k + 1) for _ in range(m + 1)]
    floor_sum = [0] * (max_k + 1)
    for d in range(1, max_k + 1):
        h = canonical_residue(d, m)
        w = (d + m - i) // m
        row = tau_mod[h]
        for k in range(d, max_k + 1, d):
            tau[k] += 1
            row[k] += 1
            floor_sum[k] += w
    return DivisorSumTables(max_k, m, i, tau, tau_mod, floor_sum)


_DIV_LOCK = threading.Lock()
_DIV_CACHE: dict[tuple[int, int], DivisorSumTables] = {}


def _divisors_for(max_k: int, m: int, i: int) -> DivisorSumTables:
    """Cached divisor tables, rebuilt only when a larger range is needed."""
    key = (m, i)
    with _DIV_LOCK:
        cached = _DIV_CACHE.get(key)
        if cached is None or cached.max_k < max_k:
            cached = divisor_tables(max_k, m, i)
            _DIV_CACHE[key] = cached
        return cached


# ---------------------------------------------------------------------------
# spaced-subsum totals
# ---------------------------------------------------------------------------


def total_subsum(
    n: int,
    m: int,
    i: int,
    p: Optional[Sequence[int]] = None,
    tables: Optional[DivisorSumTables] = None,
) -> int:
    """Sum of the (m, i) spaced subsum over all partitions of n, exactly.

    Evaluates sum_{k=1..n} floor_sum[k] * p(n - k).  Pass p and tables to
    reuse precomputed data; they must cover n and match (m, i).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_mod_class(m, i)
    if n == 0:
        return 0
    if p is None:
        p = partition_counts(n)
    elif len(p) <= n - 1:
        raise ValueError("p-table too short for n")
    if tables is None:
        tables = _divisors_for(n, m, i)
    elif tables.m != m or tables.i != i or tables.max_k < n:
        raise ValueError("divisor tables do not match (n, m, i)")
    fs = tables.floor_sum
    return sum(fs[k] * p[n - k] for k in range(1, n + 1))


def expected_subsum(n: int, m: int, i: int) -> Fraction:
    """Mean of the (m, i) spaced subsum over partitions of n, as a Fraction."""
    if n < 1:
        raise ValueError("n must be >= 1")
    p = partition_counts(n)
    return Fraction(total_subsum(n, m, i, p=p), p[n])


def s_sums_exact(
    n: int,
    m: int,
    p: Optional[Sequence[int]] = None,
    tables: Optional[DivisorSumTables] = None,
) -> tuple[int, list[int]]:
    """Divisor-count convolutions S and S_1..S_m against the p-table.

    S = sum_k tau(k) p(n-k); the returned list holds S_h = the same sum with
    tau restricted to divisors of canonical residue h, at index h - 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if p is None:
        p = partition_counts(n)
    if tables is None:
        tables = _divisors_for(n, m, 1)
    elif tables.m != m or tables.max_k < n:
        raise ValueError("divisor tables do not match (n, m)")
    total = sum(tables.tau[k] * p[n - k] for k in range(1, n + 1))
    split = [
        sum(tables.tau_mod[h][k] * p[n - k] for k in range(1, n + 1))
        for h in range(1, m + 1)
    ]
    if sum(split) != total:
        raise ConsistencyError("residue-split divisor sums do not add up to S")
    return total, split


def total_subsum_from_s_sums(
    n: int, m: int, i: int, s: int, split: Sequence[int], p_n: int
) -> int:
    """Recombine S and S_1..S_m into the exact spaced-subsum total.

    total = (n/m) p(n) + ((m-i)/m) S - sum_{j=1..m-1} (j/m) S_{i+j}, with the
    residue i+j folded into 1..m.  The inputs are redundant (the residue
    sums must add up to S), so inconsistencies surface here: a split that
    does not sum to S, or a recombined value that is not an integer.
    """
    _check_mod_class(m, i)
    if len(split) != m:
        raise ValueError("need exactly m residue sums")
    if sum(split) != s:
        raise ConsistencyError("residue sums do not add up to S")
    acc = Fraction(n * p_n + (m - i) * s, m)
    for j in range(1, m):
        h = canonical_residue(i + j, m)
        acc -= Fraction(j * split[h - 1], m)
    if acc.denominator != 1:
        raise ConsistencyError("recombined total is not an integer")
    return acc.numerator


def euler_identity_check(n_max: int) -> bool:
    """Verify n p(n) = sum_{k=1..n} sigma(k) p(n-k) for every n <= n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    p = partition_counts(n_max)
    sigma = divisor_tables(n_max, 1, 1).floor_sum  # floor((d+0)/1) = d, so sigma
    for n in range(1, n_max + 1):
        if n * p[n] != sum(sigma[k] * p[n - k] for k in range(1, n + 1)):
            return False
    return True


# ---------------------------------------------------------------------------
# even-index subsum counts and the pair-count comparison
# ---------------------------------------------------------------------------


def a000712(j: int, p: Optional[Sequence[int]] = None) -> int:
    """Number of pairs of partitions with total weight j (OEIS A000712)."""
    if j < 0:
        raise ValueError("j must be >= 0")
    if p is None:
        p = partition_counts(j)
    return sum(p[t] * p[j - t] for t in range(j + 1))


def f_table(n: int) -> list[int]:
    """Counts f(n, j) of partitions of n whose even-index subsum is j.

    Returned list has length n + 1; entries beyond j = floor(n/2) are zero
    since the even-index parts can carry at most half the weight.  Each
    entry is assembled from pairs (partition of t, partition of j - t into
    at most n - 2j parts).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    half = n // 2
    p = partition_counts(half)
    bounded = restricted_counts(half, n)
    out = [0] * (n + 1)
    for j in range(half + 1):
        cap = n - 2 * j
        out[j] = sum(p[t] * bounded[j - t][cap] for t in range(j + 1))
    return out


def theorem1_check(n: int) -> Optional[int]:
    """First j where f(n, j) departs from the unrestricted pair count.

    Scans j = 0..max(n, 1), treating f(n, j) = 0 beyond the table, and
    returns the smallest j with f(n, j) != a000712(j), or None if there is
    no such j in range.  Also insists the departure is one-sided: past the
    agreement range f must fall strictly below the pair count.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    hi = max(n, 1)
    f = f_table(n)
    p = partition_counts(hi)
    first = None
    cutoff = n // 3
    for j in range(hi + 1):
        fj = f[j] if j <= n else 0
        aj = sum(p[t] * p[j - t] for t in range(j + 1))
        if fj != aj and first is None:
            first = j
        if j > cutoff and fj >= aj:
            raise ConsistencyError(
                f"f({n}, {j}) = {fj} is not below the pair count {aj}"
            )
    return first


# ---------------------------------------------------------------------------
# full distribution of the statistic
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubsumDistribution:
    """counts[k] = number of partitions of n whose (m, i) subsum equals k."""

    n: int
    m: int
    i: int
    counts: list[int]


def subsum_distribution(
    n: int, m: int, i: int, stat_cap: Optional[int] = None
) -> SubsumDistribution:
    """Joint count of partitions of n by their (m, i) spaced subsum.

    Works on the conjugate side: a column of height s = a*m + b (1 <= b <= m)
    contributes a to the statistic, plus 1 more when b >= i.  That turns the
    distribution into an unbounded knapsack over column heights with a
    (weight, statistic) pair per height.  stat_cap truncates the statistic
    axis when only small values are needed; by default it runs to n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_mod_class(m, i)
    cap = n if stat_cap is None else min(stat_cap, n)
    if cap < 0:
        raise ValueError("stat_cap must be >= 0")
    dp = [[0] * (cap + 1) for _ in range(n + 1)]
    dp[0][0] = 1
    for s in range(1, n + 1):
        a, b = divmod(s - 1, m)  # s = a*m + (b + 1) with residue b + 1 in 1..m
        w = a + (1 if b + 1 >= i else 0)
        for wt in range(s, n + 1):
            src = dp[wt - s]
            dst = dp[wt]
            top = min(wt - s + w, cap)
            for k in range(w, top + 1):
                v = src[k - w]
                if v:
                    dst[k] += v
    return SubsumDistribution(n, m, i, dp[n])


# ---------------------------------------------------------------------------
# table serialization
# ---------------------------------------------------------------------------


def save_p_table(fh: TextIO, values: Sequence[int]) -> None:
    """Write a p-table as a header line plus one decimal value per line."""
    if not values or values[0] != 1:
        raise ValueError("a p-table must start with p(0) = 1")
    fh.write(f"p-table max_n={len(values) - 1}\n")
    for v in values:
        fh.write(f"{v}\n")


def load_p_table(fh: TextIO) -> list[int]:
    """Read a table written by save_p_table, validating the header."""
    header = fh.readline().strip()
    if not header.startswith("p-table max_n="):
        raise ValueError(f"not a p-table header: {header!r}")
    try:
        max_n = int(header.split("=", 1)[1])
    except ValueError:
        raise ValueError(f"bad max_n in header: {header!r}") from None
    values = []
    for lineno, raw in enumerate(fh, 2):
        s = raw.strip()
        if not s:
            continue
        try:
            values.append(int(s))
        except ValueError:
            raise ValueError(f"line {lineno}: not an integer: {s!r}") from None
    if len(values) != max_n + 1:
        raise ValueError(f"expected {max_n + 1} values, found {len(values)}")
    if values[0] != 1:
        raise ValueError("p(0) must be 1")
    return values


def save_divisor_tables(fh: TextIO, tables: DivisorSumTables) -> None:
    """Write divisor tables; one line per k carrying tau, floor, residues."""
    fh.write(
        f"divisor-tables max_k={tables.max_k} m={tables.m} i={tables.i}\n"
    )
    for k in range(1, tables.max_k + 1):
        cells = [tables.tau[k], tables.floor_sum[k]]
        cells.extend(tables.tau_mod[h][k] for h in range(1, tables.m + 1))
        fh.write(" ".join(str(c) for c in cells) + "\n")


def load_divisor_tables(fh: TextIO) -> DivisorSumTables:
    """Read tables written by save_divisor_tables."""
    header = fh.readline().strip()
    fields = header.split()
    if len(fields) != 4 or fields[0] != "divisor-tables":
        raise ValueError(f"not a divisor-tables header: {header!r}")
    try:
        kv = dict(f.split("=", 1) for f in fields[1:])
        max_k = int(kv["max_k"])
        m = int(kv["m"])
        i = int(kv["i"])
    except (ValueError, KeyError):
        raise ValueError(f"bad divisor-tables header: {header!r}") from None
    tau = [0] * (max_k + 1)
    tau_mod = [[0] * (max_k + 1) for _ in range(m + 1)]
    floor_sum = [0] * (max_k + 1)
    for k in range(1, max_k + 1):
        cells = fh.readline().split()
        if len(cells) != 2 + m:
            raise ValueError(f"row {k}: expected {2 + m} cells")
        tau[k] = int(cells[0])
        floor_sum[k] = int(cells[1])
        for h in range(1, m + 1):
            tau_mod[h][k] = int(cells[1 + h])
    return DivisorSumTables(max_k, m, i, tau, tau_mod, floor_sum)


def adopt_divisor_tables(tables: DivisorSumTables) -> None:
    """Install externally loaded divisor tables into the shared cache."""
    key = (tables.m, tables.i)
    with _DIV_LOCK:
        cached = _DIV_CACHE.get(key)
        if cached is None or cached.max_k < tables.max_k:
            _DIV_CACHE[key] = tables
