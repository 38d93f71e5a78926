"""g-adic logarithms via the Mercator series.

log(1 + u) = u - u**2/2 + u**3/3 - ... converges p-adically once u is
divisible by p (by 4 when p = 2).  Away from that disc, log_unit first
raises a unit to the power p - 1 (squares it, for p = 2) to land inside,
then divides the series value back out.  log_value strips the prime part
of its argument first; the branch choice here is log(p) = 0, so the
logarithm of a non-unit loses one digit of precision per power of p and
the logarithm of 10 in base 10 is famously not zero.

Series bookkeeping: to get N honest digits the sum runs T = N +
ceil(log_p N) + 2 terms at a working precision widened by G =
floor(log_p T) + 1 guard digits, since dividing term k by k can spend
up to log_p k digits.  Dividing by the p-part of k is an exact digit
shift; dividing by the unit part is multiplication by an inverse.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .crt import ComponentValue, factor_base, is_prime, project, recombine
from .digits import DigitExpansion, invert_unit
from .errors import GadicError


def _ceil_log(p: int, n: int) -> int:
    """Smallest t with p**t >= n."""
    t, power = 0, 1
    while power < n:
        power *= p
        t += 1
    return t


def _floor_log(p: int, n: int) -> int:
    """Largest t with p**t <= n."""
    t, power = 0, p
    while power <= n:
        power *= p
        t += 1
    return t


def term_budget(p: int, precision: int) -> tuple[int, int]:
    """(terms to sum, guard digits) for ``precision`` trustworthy digits."""
    terms = precision + _ceil_log(p, precision) + 2
    return terms, _floor_log(p, terms) + 1


@lru_cache(maxsize=None)
def _cached_inverse(n: int, p: int, precision: int) -> DigitExpansion:
    # small term divisors recur constantly across series evaluations
    return invert_unit(DigitExpansion.from_integer(n, p, precision))


@dataclass(frozen=True)
class LogSeriesPlan:
    """One Mercator sum, pinned down before any term is computed.

    The argument u = x - 1 is carried at the widened working precision;
    min_valuation is 1 for odd primes and 2 for p = 2.  The budget
    invariant: every term past term_count has valuation at least
    ``precision``, and guard_digits covers the deepest division by k.
    """

    argument: DigitExpansion
    prime: int
    min_valuation: int
    term_count: int
    guard_digits: int
    precision: int

    def __post_init__(self) -> None:
        v = self.argument.valuation()
        if v is not None and v < self.min_valuation:
            raise GadicError(
                f"x - 1 has valuation {v}, need at least {self.min_valuation} "
                "for the series to converge"
            )


def plan_log_series(x: DigitExpansion, p: int, precision: int) -> LogSeriesPlan:
    """Validate the domain and fix the term count and guard digits."""
    if not is_prime(p):
        raise GadicError(f"{p} is not prime")
    if x.base != p:
        raise GadicError(f"operand is base {x.base}, expected {p}")
    if x.precision < precision:
        raise GadicError(f"operand has {x.precision} digits, need {precision}")
    u = x.truncate(precision) - DigitExpansion.from_integer(1, p, precision)
    terms, guard = term_budget(p, precision)
    # the extra zero digits are a choice of lift; every summand is later
    # truncated back to ``precision`` digits, which the guard digits keep
    # honest even after the worst-case division by k
    return LogSeriesPlan(
        argument=u.zero_extend(precision + guard),
        prime=p,
        min_valuation=2 if p == 2 else 1,
        term_count=terms,
        guard_digits=guard,
        precision=precision,
    )


def sum_log_series(plan: LogSeriesPlan) -> DigitExpansion:
    """Run a plan: alternating sum of u**k / k, truncated each term."""
    p, precision = plan.prime, plan.precision
    wide = plan.argument.precision
    u_wide = plan.argument
    total = DigitExpansion.from_integer(0, p, precision)
    if u_wide.valuation() is None:
        return total
    power = u_wide
    for k in range(1, plan.term_count + 1):
        if k > 1:
            power = power * u_wide
        term = power
        shift = 0
        k_unit = k
        while k_unit % p == 0:
            k_unit //= p
            shift += 1
        if shift:
            term = term.shift_right(shift)
        if k_unit > 1:
            # inverting at full working precision keeps the cache hot; the
            # product truncates to the term's own precision anyway
            term = term * _cached_inverse(k_unit, p, wide)
        term = term.truncate(precision)
        total = total - term if k % 2 == 0 else total + term
    return total


def log_series(x: DigitExpansion, p: int, precision: int) -> DigitExpansion:
    """Sum the Mercator series for log at x = 1 + u, u inside the disc.

    Requires base p prime and u = x - 1 with valuation at least 1 (at
    least 2 when p = 2); otherwise the terms do not shrink and the sum
    means nothing.
    """
    return sum_log_series(plan_log_series(x, p, precision))


def log_unit(x: DigitExpansion, p: int, precision: int) -> DigitExpansion:
    """Logarithm of a unit, at the unit's precision.

    x**(p-1) is congruent to 1 mod p, so the series applies to it and
    log x = log(x**(p-1)) / (p-1).  For p = 2 the square lands in the
    convergence disc; the series value is then divisible by 8, so
    halving it is an exact digit shift, done one digit wide to avoid
    losing the top digit.
    """
    if not is_prime(p):
        raise GadicError(f"{p} is not prime")
    if x.base != p:
        raise GadicError(f"operand is base {x.base}, expected {p}")
    if x.precision < precision:
        raise GadicError(f"operand has {x.precision} digits, need {precision}")
    if not x.is_unit():
        raise GadicError("log_unit needs a unit; use log_value for non-units")
    xt = x.truncate(precision)
    if p == 2:
        # x**2 mod 2**(N+1) is determined by x mod 2**N, so the extra
        # digit of the square is trustworthy even though the lift is not
        y = xt.zero_extend(precision + 1)
        series = log_series(y * y, 2, precision + 1)
        return series.shift_right(1)
    y = xt**(p - 1)
    series = log_series(y, p, precision)
    return _divide_by_unit_int(series, p - 1)


def _divide_by_unit_int(x: DigitExpansion, m: int) -> DigitExpansion:
    return x * _cached_inverse(m, x.base, x.precision)


def log_value(x: DigitExpansion, p: int, precision: int) -> DigitExpansion:
    """Logarithm of any nonzero value, on the branch with log p = 0.

    Writing x = p**v * u with u a unit, the result is log u, known to
    precision - v digits: stripping the prime part spends digits.
    """
    if x.precision < precision:
        raise GadicError(f"operand has {x.precision} digits, need {precision}")
    xt = x.truncate(precision)
    v = xt.valuation()
    if v is None:
        raise GadicError("log of zero (all known digits are zero)")
    unit = xt.shift_right(v) if v else xt
    return log_unit(unit, p, precision - v)


def log_gadic(x: DigitExpansion, precision: int | None = None) -> DigitExpansion:
    """Logarithm in a general base, one prime component at a time.

    Each component contributes log of its unit part on the log p = 0
    branch; the results are glued back with the Chinese remainder
    theorem at the smallest precision any component can vouch for
    (components with positive valuation vouch for less).
    """
    if precision is None:
        precision = x.precision
    if not 1 <= precision <= x.precision:
        raise GadicError(f"operand has {x.precision} digits, need {precision}")
    xt = x.truncate(precision)
    fact = factor_base(xt.base)
    logs = []
    for p, e in fact.components:
        comp = project(xt, (p, e))
        lv = log_value(comp.value, p, comp.component_precision)
        logs.append((p, e, lv))
    # a component that lost digits caps the whole answer
    out_precision = min(lv.precision // e for _, e, lv in logs)
    if out_precision < 1:
        raise GadicError("every digit of the result was spent stripping prime parts")
    values = [
        ComponentValue(p, lv.truncate(e * out_precision)) for p, e, lv in logs
    ]
    return recombine(fact, values)
