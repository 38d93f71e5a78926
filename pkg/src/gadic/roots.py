"""Square roots of units, square roots of one, and the golden ratio pair.

Two independent routes compute p-adic square roots.  sqrt_hensel seeds
with a Tonelli-Shanks root modulo p and lifts by the Newton iteration
x <- (x + a/x) / 2.  sqrt_binomial normalizes a to 1 + x with x
divisible by p and sums the binomial series for (1+x)**(1/2) with exact
rational coefficients.  They must agree, and the tests hold them to it.

Also here: the square roots of one modulo base**N that belong to actual
g-adic square roots of one (one per idempotent, via 2e - 1), the digit
by digit iteration Gauss used to grow such a root, and the quadratic
period pair (-1 +/- sqrt 5)/2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .crt import idempotents
from .digits import DigitExpansion, div_exact_by_unit, invert_unit
from .errors import GadicError, NonResidueError
from .crt import is_prime


def _check_odd_prime(p: int) -> None:
    if not is_prime(p):
        raise GadicError(f"{p} is not prime")
    if p == 2:
        raise GadicError("p = 2 needs its own theory; these routes assume p odd")


def _check_unit_residue(a0: int, p: int) -> None:
    if a0 % p == 0:
        raise GadicError(f"{a0} is divisible by {p}; square roots here need units")
    if pow(a0, (p - 1) // 2, p) != 1:
        raise NonResidueError(f"non-residue: {a0} is not a square modulo {p}")


def tonelli_shanks(a: int, p: int) -> int:
    """A square root of a modulo an odd prime p, for a a unit square."""
    _check_odd_prime(p)
    a %= p
    _check_unit_residue(a, p)
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p - 1 = q * 2**s with q odd, then walk the 2-power subgroup
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _embed(a: DigitExpansion | int, p: int, precision: int) -> DigitExpansion:
    if isinstance(a, DigitExpansion):
        if a.base != p:
            raise GadicError(f"operand is base {a.base}, expected {p}")
        if a.precision < precision:
            raise GadicError(
                f"operand has {a.precision} digits, need at least {precision}"
            )
        return a.truncate(precision)
    return DigitExpansion.from_integer(a, p, precision)


def sqrt_hensel(
    a: DigitExpansion | int, p: int, precision: int
) -> tuple[DigitExpansion, DigitExpansion]:
    """Both square roots of a unit square, Newton-lifted from a mod-p seed.

    Returns (principal, other) where the principal branch is the root
    whose lowest digit lies in [1, (p-1)/2].  Truncating the principal
    root of a to fewer digits gives the principal root at that precision,
    because the branch choice only looks at the lowest digit.
    """
    _check_odd_prime(p)
    if precision < 1:
        raise GadicError(f"precision must be >= 1, got {precision}")
    ax = _embed(a, p, precision)
    _check_unit_residue(ax.digits[0], p)
    seed = tonelli_shanks(ax.digits[0], p)
    x = DigitExpansion.from_integer(seed, p, 1)
    current = 1
    while current < precision:
        current = min(2 * current, precision)
        x = x.zero_extend(current)
        at = ax.truncate(current)
        half = invert_unit(DigitExpansion.from_integer(2, p, current))
        x = (x + at * invert_unit(x)) * half
    principal = x if 1 <= x.digits[0] <= (p - 1) // 2 else -x
    return principal, -principal


@dataclass(frozen=True)
class BinomialSeriesPlan:
    """The normalization and coefficients behind one binomial square root.

    a * n**2 = 1 + argument with argument divisible by p, so
    sqrt(a) = (1/n) * sum(coefficients[k] * argument**k).  term_count
    terms are enough: the k-th term is divisible by p**k, because the
    coefficient denominators are powers of 2 and hence units.
    """

    a: int
    prime: int
    normalizer: int
    argument: int
    term_count: int
    coefficients: tuple[Fraction, ...]


def binomial_half(k: int) -> Fraction:
    """The generalized binomial coefficient (1/2 choose k), exactly."""
    num, den = 1, 1
    for i in range(k):
        num *= 1 - 2 * i
        den *= 2 * (i + 1)
    return Fraction(num, den)


def plan_binomial_sqrt(a: int, p: int, precision: int) -> BinomialSeriesPlan:
    """Pick the smallest normalizer n >= 1 with a * n**2 = 1 mod p."""
    _check_odd_prime(p)
    if precision < 1:
        raise GadicError(f"precision must be >= 1, got {precision}")
    if not isinstance(a, int) or isinstance(a, bool) or a < 1:
        raise GadicError(f"the series route wants a small positive integer, got {a!r}")
    _check_unit_residue(a, p)
    t = tonelli_shanks(pow(a, -1, p), p)
    n = min(t, p - t)
    return BinomialSeriesPlan(
        a=a,
        prime=p,
        normalizer=n,
        argument=a * n * n - 1,
        term_count=precision,
        coefficients=tuple(binomial_half(k) for k in range(precision)),
    )


def sqrt_binomial(a: int, p: int, precision: int) -> DigitExpansion:
    """The square root of a whose lowest digit is 1/n mod p.

    Sums the plan's series in digit arithmetic.  Each rational
    coefficient is applied as numerator times the inverse of its
    denominator, both exact, and the final division by the normalizer n
    runs the exact digit-by-digit division.
    """
    plan = plan_binomial_sqrt(a, p, precision)
    x = DigitExpansion.from_integer(plan.argument, p, precision)
    acc = DigitExpansion.from_integer(0, p, precision)
    power = DigitExpansion.from_integer(1, p, precision)
    for k, coeff in enumerate(plan.coefficients):
        if k:
            power = power * x
        term = DigitExpansion.from_integer(coeff.numerator, p, precision) * power
        if coeff.denominator != 1:
            term = term * invert_unit(
                DigitExpansion.from_integer(coeff.denominator, p, precision)
            )
        acc = acc + term
    return div_exact_by_unit(acc, plan.normalizer)


def unit_sqrts_of_one(base: int, precision: int) -> list[DigitExpansion]:
    """Square roots of 1 mod base**precision that come from g-adic ones.

    Each idempotent e gives the involution 2e - 1.  This deliberately
    does not enumerate all solutions of x**2 = 1 mod base**precision:
    modulo 2**k there are four such residues once k >= 3, but only two
    of them extend to all precisions, and only the extendable ones are
    wanted.  The list starts with 1, then ascends by residue.
    """
    two = DigitExpansion.from_integer(2, base, precision)
    one = DigitExpansion.from_integer(1, base, precision)
    seen = set()
    out = []
    for e in idempotents(base, precision):
        x = two * e - one
        if x not in seen:
            seen.add(x)
            out.append(x)
    return sorted(out, key=lambda x: (x.to_integer() != 1, x.to_integer()))


@dataclass(frozen=True)
class GaussStepState:
    """One step of the digit iteration: the window r and the digit it buys."""

    current: DigitExpansion
    window: int
    next_digit: int


def gauss_sqrt1_steps(seed: DigitExpansion, precision: int) -> list[GaussStepState]:
    """Grow a base-10 square root of 1 one digit at a time, keeping the steps.

    The seed must end in 9 and square to 1 at its own precision.  With n
    digits in hand, the two-digit window r at position n of 1 - a**2 is
    even, and the next digit is b = -(r/2) mod 10; then 1 - (a + b*10**n)**2
    is divisible by 10**(n+1), which is exactly the induction that drives
    the by-hand calculation.
    """
    if seed.base != 10:
        raise GadicError(f"the digit iteration is a base-10 story, got base {seed.base}")
    if seed.digits[0] != 9:
        raise GadicError("seed must end in the digit 9")
    if precision < seed.precision:
        raise GadicError(
            f"target precision {precision} is below the seed's {seed.precision}"
        )
    a = seed.to_integer()
    n = seed.precision
    tail, leftover = divmod(1 - a * a, 10**n)
    if leftover:
        raise GadicError("seed does not square to 1 at its own precision")
    steps = []
    while n < precision:
        # invariant: tail == (1 - a*a) // 10**n exactly, kept incrementally;
        # dropping the b*b term below (as a by-hand shortcut would) corrupts
        # the digit at position 2n - 1, so the update keeps it.
        r = tail % 100
        if r % 2:
            raise GadicError(f"window {r} at position {n} is odd; seed is not liftable")
        b = -(r // 2) % 10
        tail = (tail - 2 * a * b - b * b * 10**n) // 10
        a += b * 10**n
        n += 1
        steps.append(
            GaussStepState(
                current=DigitExpansion.from_integer(a, 10, n),
                window=r,
                next_digit=b,
            )
        )
    return steps


def gauss_sqrt1_iterate(seed: DigitExpansion, precision: int) -> DigitExpansion:
    """The endpoint of gauss_sqrt1_steps."""
    steps = gauss_sqrt1_steps(seed, precision)
    return steps[-1].current if steps else seed


@dataclass(frozen=True)
class PeriodPair:
    """The two quadratic periods: the roots of x**2 + x - 1."""

    a: DigitExpansion
    b: DigitExpansion


def quadratic_periods(p: int, precision: int) -> PeriodPair:
    """The golden ratio pair (-1 + sqrt 5)/2 and (-1 - sqrt 5)/2.

    The principal square root of 5 goes into a; the pair satisfies
    a + b = -1, a * b = -1 and (a - b)**2 = 5.  Needs 5 to be a square
    modulo p, so p = 11 works and p = 7 raises.
    """
    s, _ = sqrt_hensel(5, p, precision)
    minus_one = DigitExpansion.from_integer(-1, p, precision)
    half = invert_unit(DigitExpansion.from_integer(2, p, precision))
    return PeriodPair(a=(minus_one + s) * half, b=(minus_one - s) * half)
