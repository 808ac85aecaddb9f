"""Asymptotic constants and series for spaced partition subsums.

High-precision arithmetic runs on mpmath; every routine takes a Precision
switch and evaluates under that many working digits.  The residue-class
log-constants gamma_{m,h} are available by three independent routes (a
roots-of-unity sum, a closed real form, and a digamma reduction) so that
agreement between them can be checked rather than assumed.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import mpmath as mp

from .exact import ConsistencyError, _check_mod_class

Real = Union[int, float, str, Fraction, mp.mpf]


@dataclass(frozen=True)
class Precision:
    """Working precision plus the tolerance used by internal cross-checks."""

    name: str
    dps: int
    cross_tol: float


DOUBLE = Precision("double", 16, 1e-8)
EXTENDED = Precision("extended", 50, 1e-10)

_PRECISIONS = {p.name: p for p in (DOUBLE, EXTENDED)}

# Euler's constant, 30 digits.
_EULER_GAMMA = "0.577215664901532860606512090082"


def precision_named(name: str) -> Precision:
    try:
        return _PRECISIONS[name]
    except KeyError:
        raise ValueError(
            f"unknown precision {name!r}; choose from {sorted(_PRECISIONS)}"
        ) from None


def euler_gamma() -> mp.mpf:
    """Euler's constant at the current working precision (30-digit source)."""
    return mp.mpf(_EULER_GAMMA)


def growth_constant() -> mp.mpf:
    """The partition growth constant C = pi sqrt(2/3)."""
    return mp.pi * mp.sqrt(mp.mpf(2) / 3)


def _to_mpf(x: Real) -> mp.mpf:
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpf(x)


def _omega_pow(m: int, t: int) -> mp.mpc:
    """exp(2 pi i t / m), with the exponent reduced mod m exactly first."""
    return mp.expjpi(mp.mpf(2 * (t % m)) / m)


def _ensure_real(z: mp.mpc, precision: Precision, what: str) -> mp.mpf:
    if abs(z.imag) > precision.cross_tol:
        raise ConsistencyError(
            f"{what}: imaginary residue {z.imag} exceeds {precision.cross_tol}"
        )
    return z.real


# ---------------------------------------------------------------------------
# residue-class log-constants
# ---------------------------------------------------------------------------


def gamma_mh_roots(m: int, h: int, precision: Precision = EXTENDED) -> mp.mpf:
    """gamma_{m,h} via the roots-of-unity sum.

    (1/m) sum_{l=1..m-1} omega^{-h l} log(1/(1 - omega^l)) with omega the
    primitive m-th root of unity.  The imaginary part must cancel; a residue
    above the precision's tolerance raises ConsistencyError.
    """
    _check_mod_class(m, h)
    with mp.workdps(precision.dps):
        if m == 1:
            return mp.mpf(0)
        total = mp.mpc(0)
        for el in range(1, m):
            w = _omega_pow(m, el)
            total += _omega_pow(m, -h * el) * (-mp.log(1 - w))
        return _ensure_real(total / m, precision, f"gamma_({m},{h}) roots sum")


def gamma_mh_gauss(m: int, h: int, precision: Precision = EXTENDED) -> mp.mpf:
    """gamma_{m,h} via the closed real form (cotangent and log-sine sum)."""
    _check_mod_class(m, h)
    with mp.workdps(precision.dps):
        if h == m:
            return -mp.log(m) / m
        acc = mp.pi / 2 * mp.cot(mp.pi * h / m) + mp.log(2)
        for k in range(1, (m + 1) // 2 if m % 2 else m // 2):
            c = mp.cospi(mp.mpf((2 * h * k) % (2 * m)) / m)
            acc -= 2 * c * mp.log(mp.sinpi(mp.mpf(k) / m))
        return acc / m


def digamma_rational(p: int, q: int, precision: Precision = EXTENDED) -> mp.mpf:
    """digamma at the rational point p/q, 1 <= p <= q, by Gauss's formula."""
    if q < 1 or not 1 <= p <= q:
        raise ValueError(f"need 1 <= p <= q, got p = {p}, q = {q}")
    with mp.workdps(precision.dps):
        g = euler_gamma()
        if p == q:
            return -g
        acc = -g - mp.pi / 2 * mp.cot(mp.pi * p / q) - mp.log(2 * q)
        for k in range(1, (q + 1) // 2 if q % 2 else q // 2):
            c = mp.cospi(mp.mpf((2 * p * k) % (2 * q)) / q)
            acc += 2 * c * mp.log(mp.sinpi(mp.mpf(k) / q))
        return acc


def gamma_mh_digamma(m: int, h: int, precision: Precision = EXTENDED) -> mp.mpf:
    """gamma_{m,h} via the digamma reduction -(gamma + log m + psi(h/m))/m."""
    _check_mod_class(m, h)
    with mp.workdps(precision.dps):
        psi = digamma_rational(h, m, precision)
        return -(euler_gamma() + mp.log(m) + psi) / m


# ---------------------------------------------------------------------------
# expectation coefficients
# ---------------------------------------------------------------------------


def b_coeff(m: int, i: int, precision: Precision = EXTENDED) -> mp.mpf:
    """Coefficient of sqrt(n) log n in the centered expectation.

    b_{m,i} = (m + 1 - 2i) / (2 C m).  The numerator is integer arithmetic,
    so the central class of odd m gives an exact zero.
    """
    _check_mod_class(m, i)
    num = m + 1 - 2 * i
    if num == 0:
        return mp.mpf(0)
    with mp.workdps(precision.dps):
        return num / (2 * growth_constant() * m)


def c_coeff(m: int, i: int, precision: Precision = EXTENDED) -> mp.mpf:
    """Coefficient of sqrt(n) in the centered expectation.

    c_{m,i} = (gamma + log(2/C)) (m + 1 - 2i) / (C m)
              + (2/(C m)) sum_{l=1..m-1} omega^{-l(i-1)} log(1 - omega^l)
                                          / (1 - omega^l).
    The l-sum pairs conjugate terms, so the imaginary part must cancel.
    """
    _check_mod_class(m, i)
    with mp.workdps(precision.dps):
        glc = growth_constant()
        first = (
            (euler_gamma() + mp.log(2 / glc)) * (m + 1 - 2 * i) / (glc * m)
        )
        if m == 1:
            return first
        total = mp.mpc(0)
        for el in range(1, m):
            w = _omega_pow(m, el)
            total += _omega_pow(m, -el * (i - 1)) * mp.log(1 - w) / (1 - w)
        val = first + 2 * total / (glc * m)
        return _ensure_real(val, precision, f"c_({m},{i})")


def c_coeff_via_gammas(m: int, i: int, precision: Precision = EXTENDED) -> mp.mpf:
    """c_{m,i} assembled from the gamma_{m,h} constants instead.

    Independent route used for cross-validation: push the S_h asymptotics
    through the residue recombination and collect the sqrt(n) coefficient,
    c = (gamma + log(2/C)) (m + 1 - 2i)/(C m)
        - (2/C) sum_{j=1..m-1} (j/m) gamma_{m, i+j}  (residue folded to 1..m).
    """
    _check_mod_class(m, i)
    with mp.workdps(precision.dps):
        glc = growth_constant()
        acc = (euler_gamma() + mp.log(2 / glc)) * (m + 1 - 2 * i) / (glc * m)
        for j in range(1, m):
            h = (i + j) % m or m
            acc -= 2 * mp.mpf(j) / m * gamma_mh_gauss(m, h, precision) / glc
        return +acc


def predict_expected_subsum(
    n: int, m: int, i: int, precision: Precision = EXTENDED
) -> mp.mpf:
    """Two-term asymptotic prediction n/m + b sqrt(n) log n + c sqrt(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_mod_class(m, i)
    with mp.workdps(precision.dps):
        rn = mp.sqrt(n)
        return (
            mp.mpf(n) / m
            + b_coeff(m, i, precision) * rn * mp.log(n)
            + c_coeff(m, i, precision) * rn
        )


def s_sum_prediction(n: int, precision: Precision = EXTENDED) -> mp.mpf:
    """Leading asymptotics of S(n)/p(n) = sum tau(k) p(n-k)/p(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    with mp.workdps(precision.dps):
        glc = growth_constant()
        rn = mp.sqrt(n)
        return rn / glc * (mp.log(n) + 2 * euler_gamma() + 2 * mp.log(2 / glc))


def sj_sum_prediction(
    n: int, m: int, h: int, precision: Precision = EXTENDED
) -> mp.mpf:
    """Leading asymptotics of S_h(n)/p(n), the residue-restricted S."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_mod_class(m, h)
    with mp.workdps(precision.dps):
        glc = growth_constant()
        rn = mp.sqrt(n)
        bracket = (
            mp.log(n)
            + 2 * euler_gamma()
            + 2 * mp.log(2 / glc)
            + 2 * m * gamma_mh_gauss(m, h, precision)
        )
        return rn / (m * glc) * bracket


# ---------------------------------------------------------------------------
# Bernoulli data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BernoulliCache:
    """Exact Bernoulli numbers B_0..B_count, B_1 = -1/2 convention."""

    numbers: tuple[Fraction, ...]


@lru_cache(maxsize=None)
def _bernoulli_upto(count: int) -> BernoulliCache:
    nums = [Fraction(1)]
    for n in range(1, count + 1):
        s = sum(math.comb(n + 1, k) * nums[k] for k in range(n))
        nums.append(Fraction(-s, n + 1))
    return BernoulliCache(tuple(nums))


def bernoulli_numbers(count: int) -> BernoulliCache:
    """Exact B_0..B_count from the defining recurrence."""
    if count < 0:
        raise ValueError("count must be >= 0")
    return _bernoulli_upto(count)


def bernoulli_poly(cache: BernoulliCache, n: int, x: Fraction) -> Fraction:
    """Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^(n-k), exactly."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n >= len(cache.numbers):
        raise ValueError(f"cache holds B_0..B_{len(cache.numbers) - 1}")
    x = Fraction(x)
    return sum(
        math.comb(n, k) * cache.numbers[k] * x ** (n - k) for k in range(n + 1)
    )


def tail_coefficient(idx: int, m: int, h: int) -> Fraction:
    """Exact coefficient of (alpha m)^idx in the Lambert tail series.

    The tail is sum_{idx >= 0} coeff * (alpha m)^idx with
    coeff = -B_{idx+1} B_{idx+1}(h/m) / ((idx+1)! (idx+1)).
    Even idx >= 2 gives zero (odd Bernoulli numbers vanish), so consumers
    scanning for optimal truncation must skip the zero entries.
    """
    if idx < 0:
        raise ValueError("idx must be >= 0")
    _check_mod_class(m, h)
    cache = bernoulli_numbers(idx + 1)
    b_num = cache.numbers[idx + 1]
    if b_num == 0:
        return Fraction(0)
    b_val = bernoulli_poly(cache, idx + 1, Fraction(h, m))
    return -b_num * b_val / (math.factorial(idx + 1) * (idx + 1))


# ---------------------------------------------------------------------------
# Lambert-type divisor series
# ---------------------------------------------------------------------------

_EXACT_STOP = "1e-30"  # relative tail threshold for the exact sum


def lambert_tau_exact(
    alpha: Real, m: int, h: int, precision: Precision = EXTENDED
) -> mp.mpf:
    """Exact value of sum_{d = h mod m, d >= 1} exp(-d alpha)/(1 - exp(-d alpha)).

    Terms are added until one falls below 1e-30 of the running total, which
    outruns every tolerance used elsewhere in the package.  With m = h = 1
    this is the plain Lambert series generating sum_k tau(k) exp(-k alpha).
    """
    _check_mod_class(m, h)
    with mp.workdps(precision.dps):
        a = _to_mpf(alpha)
        if a <= 0:
            raise ValueError("alpha must be positive")
        stop = mp.mpf(_EXACT_STOP)
        x = mp.e ** (-a)
        q = x**h
        step = x**m
        total = mp.mpf(0)
        while True:
            term = q / (1 - q)
            if term == 0:
                break
            total += term
            if term < stop * total:
                break
            q *= step
        return total


@dataclass(frozen=True)
class SeriesEvaluation:
    """An asymptotic series value with its truncation diagnostics."""

    value: mp.mpf
    terms_used: int
    last_term_magnitude: mp.mpf


def lambert_tau_asymptotic(
    alpha: Real,
    m: int,
    h: int,
    max_terms: int = 8,
    precision: Precision = EXTENDED,
) -> SeriesEvaluation:
    """Asymptotic expansion of the residue-class Lambert series.

    Main part (1/m) alpha^-1 log(alpha^-1) + (gamma/m + gamma_{m,h}) alpha^-1,
    then the Bernoulli tail in powers of (alpha m).  The tail is truncated at
    max_terms or at the first magnitude increase among nonzero terms
    (optimal truncation), whichever comes first.  The default cap of 8 keeps
    the smallest retained term above the exactly-summable floor for the
    alpha range this expansion is meant for (roughly alpha <= 0.5).

    last_term_magnitude is the magnitude of the final retained nonzero term,
    the usual error proxy for an asymptotic series.  A warning is issued when
    truncation strikes immediately (only the constant tail term retained):
    that signals alpha is too large for the expansion to be useful.
    """
    if max_terms < 0:
        raise ValueError("max_terms must be >= 0")
    _check_mod_class(m, h)
    with mp.workdps(precision.dps):
        a = _to_mpf(alpha)
        if a <= 0:
            raise ValueError("alpha must be positive")
        inv = 1 / a
        value = inv * mp.log(inv) / m
        value += (euler_gamma() / m + gamma_mh_gauss(m, h, precision)) * inv
        am = a * m
        power = mp.mpf(1)
        prev_mag = None
        nonzero_used = 0
        terms_used = max_terms
        for idx in range(max_terms):
            coeff = tail_coefficient(idx, m, h)
            term = _to_mpf(coeff) * power
            if coeff != 0:
                mag = abs(term)
                if prev_mag is not None and mag > prev_mag:
                    terms_used = idx
                    break
                prev_mag = mag
                nonzero_used += 1
            value += term
            power *= am
        if prev_mag is None:
            last_mag = mp.inf
            if max_terms > 0:
                warnings.warn(
                    "Lambert tail produced no usable term", stacklevel=2
                )
        else:
            last_mag = prev_mag
            if nonzero_used == 1 and terms_used < max_terms:
                warnings.warn(
                    f"Lambert tail truncated at its first term; alpha = {alpha}"
                    " is too large for the asymptotic expansion",
                    stacklevel=2,
                )
        return SeriesEvaluation(value, terms_used, last_mag)


# ---------------------------------------------------------------------------
# partition growth
# ---------------------------------------------------------------------------


def hardy_ramanujan_leading(n: int, precision: Precision = EXTENDED) -> mp.mpf:
    """Leading-order p(n): exp(C sqrt(n)) / (4 n sqrt(3))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    with mp.workdps(precision.dps):
        rn = mp.sqrt(n)
        return mp.e ** (growth_constant() * rn) / (4 * n * mp.sqrt(3))


def ratio_prediction(n: int, k: int, precision: Precision = EXTENDED) -> mp.mpf:
    """First-order prediction of p(n-k)/p(n): exp(-C k / (2 sqrt(n)))."""
    if n < 1 or k < 0 or k > n:
        raise ValueError("need n >= 1 and 0 <= k <= n")
    with mp.workdps(precision.dps):
        return mp.e ** (-growth_constant() * k / (2 * mp.sqrt(n)))
