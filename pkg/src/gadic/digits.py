"""Exact arithmetic on truncated base-g digit expansions.

A value is a residue modulo g**N stored as N digits, least significant
first: ``digits[i]`` is the coefficient of base**i.  Precision is the
digit count and never grows implicitly; binary operations truncate to
the shorter operand.  Extending a value with zero digits is a deliberate
choice of lift and must be requested explicitly via ``zero_extend``.

All arithmetic here works digit by digit with carries and borrows, the
way the schoolbook algorithms run right to left.  Nothing in this module
converts an operand to a big integer to do the actual work; that keeps
these routines honest and lets big-integer arithmetic serve as an
independent cross-check in the tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import GadicError


def check_base(base: int) -> None:
    """Reject bases that cannot carry a digit expansion."""
    if not isinstance(base, int) or isinstance(base, bool):
        raise GadicError(f"base must be an integer, got {base!r}")
    if base < 2:
        raise GadicError(f"base must be >= 2, got {base}")


@dataclass(frozen=True)
class DigitExpansion:
    """A g-adic integer known to finitely many base-g digits.

    The tuple is least significant first, so an expansion with digits
    (1, 2, 9) in base 11 denotes 1 + 2*11 + 9*11**2 as a residue modulo
    11**3.  Two expansions are equal only if base, precision and every
    digit agree; the same residue at different precisions is a different
    object on purpose.
    """

    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        check_base(self.base)
        digits = tuple(self.digits)
        if not digits:
            raise GadicError("an expansion needs at least one digit")
        for i, d in enumerate(digits):
            if not 0 <= d < self.base:
                raise GadicError(
                    f"digit {d} at position {i} is outside [0, {self.base})"
                )
        object.__setattr__(self, "digits", digits)

    @property
    def precision(self) -> int:
        return len(self.digits)

    @classmethod
    def from_integer(cls, n: int, base: int, precision: int) -> DigitExpansion:
        """Embed the integer ``n`` as a residue modulo base**precision.

        Negative integers wrap around, so from_integer(-1, 10, 6) is the
        all-nines expansion ...999999.
        """
        check_base(base)
        if precision < 1:
            raise GadicError(f"precision must be >= 1, got {precision}")
        n %= base**precision
        out = []
        for _ in range(precision):
            n, d = divmod(n, base)
            out.append(d)
        return cls(base, tuple(out))

    def to_integer(self) -> int:
        """Canonical residue in [0, base**precision)."""
        acc = 0
        for d in reversed(self.digits):
            acc = acc * self.base + d
        return acc

    def _require_same_frame(self, other: DigitExpansion) -> int:
        if not isinstance(other, DigitExpansion):
            raise TypeError(f"expected a DigitExpansion, got {type(other).__name__}")
        if self.base != other.base:
            raise GadicError(f"base mismatch: {self.base} vs {other.base}")
        return min(self.precision, other.precision)

    def __add__(self, other: DigitExpansion) -> DigitExpansion:
        """Digitwise sum with carry, at the shorter operand's precision."""
        n = self._require_same_frame(other)
        g = self.base
        out = []
        carry = 0
        for i in range(n):
            t = self.digits[i] + other.digits[i] + carry
            carry, d = divmod(t, g)
            out.append(d)
        return DigitExpansion(g, tuple(out))

    def __sub__(self, other: DigitExpansion) -> DigitExpansion:
        """Digitwise difference with borrow; the final borrow wraps away."""
        n = self._require_same_frame(other)
        g = self.base
        out = []
        borrow = 0
        for i in range(n):
            t = self.digits[i] - other.digits[i] - borrow
            if t < 0:
                t += g
                borrow = 1
            else:
                borrow = 0
            out.append(t)
        return DigitExpansion(g, tuple(out))

    def __neg__(self) -> DigitExpansion:
        """Complement every digit, then add one."""
        g = self.base
        out = []
        carry = 1
        for d in self.digits:
            t = (g - 1 - d) + carry
            carry, d2 = divmod(t, g)
            out.append(d2)
        return DigitExpansion(g, tuple(out))

    def __mul__(self, other: DigitExpansion) -> DigitExpansion:
        """Schoolbook product, truncated to the shorter operand."""
        n = self._require_same_frame(other)
        g = self.base
        acc = [0] * n
        for i in range(n):
            dx = self.digits[i]
            if dx == 0:
                continue
            yd = other.digits
            for j in range(n - i):
                acc[i + j] += dx * yd[j]
        out = []
        carry = 0
        for i in range(n):
            carry, d = divmod(acc[i] + carry, g)
            out.append(d)
        return DigitExpansion(g, tuple(out))

    def __pow__(self, exponent: int) -> DigitExpansion:
        """Non-negative integer power by repeated squaring."""
        if not isinstance(exponent, int) or isinstance(exponent, bool):
            raise TypeError("exponent must be an integer")
        if exponent < 0:
            raise GadicError("negative exponents need invert_unit, not **")
        result = DigitExpansion.from_integer(1, self.base, self.precision)
        square = self
        e = exponent
        while e:
            if e & 1:
                result = result * square
            e >>= 1
            if e:
                square = square * square
        return result

    def truncate(self, precision: int) -> DigitExpansion:
        """Keep the lowest ``precision`` digits."""
        if not 1 <= precision <= self.precision:
            raise GadicError(
                f"cannot truncate {self.precision} digits to {precision}"
            )
        if precision == self.precision:
            return self
        return DigitExpansion(self.base, self.digits[:precision])

    def zero_extend(self, precision: int) -> DigitExpansion:
        """Append zero digits up to ``precision``.

        This picks one particular lift of the residue (the one that is
        an ordinary non-negative integer below base**self.precision), so
        it never happens implicitly.  Algorithms that extend working
        precision call this on purpose and state why the extra digits of
        their result are trustworthy.
        """
        if precision < self.precision:
            raise GadicError(
                f"cannot zero-extend {self.precision} digits down to {precision}"
            )
        if precision == self.precision:
            return self
        pad = (0,) * (precision - self.precision)
        return DigitExpansion(self.base, self.digits + pad)

    def shift_right(self, count: int) -> DigitExpansion:
        """Drop the lowest ``count`` digits, i.e. divide exactly by base**count.

        The dropped digits must all be zero; anything else is an inexact
        division and raises.
        """
        if count < 0:
            raise GadicError(f"shift count must be >= 0, got {count}")
        if count == 0:
            return self
        if count >= self.precision:
            raise GadicError(
                f"shift by {count} leaves no digits out of {self.precision}"
            )
        if any(self.digits[:count]):
            raise GadicError(f"inexact shift: low {count} digits are not all zero")
        return DigitExpansion(self.base, self.digits[count:])

    def valuation(self) -> int | None:
        """Index of the lowest nonzero digit, or None when all digits are zero.

        None is deliberate: a zero residue at finite precision only says
        the valuation is at least the precision, and pretending the
        precision itself is the answer invites off-by-one reasoning.
        """
        for i, d in enumerate(self.digits):
            if d:
                return i
        return None

    def is_unit(self) -> bool:
        """True when the leading digit is coprime to the base."""
        return gcd(self.digits[0], self.base) == 1

    def is_zero(self) -> bool:
        return not any(self.digits)


def invert_unit(x: DigitExpansion) -> DigitExpansion:
    """Multiplicative inverse of a unit, to the unit's own precision.

    Runs Newton's iteration y <- y * (2 - x*y), which doubles the number
    of correct digits each round, seeded with the inverse of the lowest
    digit modulo the base.  This route stays inside digit arithmetic so
    the extended-gcd computation in the tests remains an independent
    check rather than the thing being tested.
    """
    if not x.is_unit():
        raise GadicError(
            f"not a unit: lowest digit {x.digits[0]} shares a factor with base {x.base}"
        )
    g, n = x.base, x.precision
    y = DigitExpansion.from_integer(pow(x.digits[0], -1, g), g, n)
    two = DigitExpansion.from_integer(2, g, n)
    rounds = (n - 1).bit_length()  # ceil(log2 n); 1 correct digit doubles to >= n
    for _ in range(rounds):
        y = y * (two - x * y)
    return y


def div_exact_by_unit(x: DigitExpansion, m: int) -> DigitExpansion:
    """Divide by an integer coprime to the base, one digit at a time.

    For each position the scheme picks the unique k in [0, m) making the
    current digit d satisfy d + k*base ≡ 0 (mod m); the quotient digit is
    (d + k*base) // m and k is borrowed from the next digit up.  Borrows
    keep every adjusted digit within [1-m, base), so d + k*base lands in
    [0, m*base) and the quotient digit is always a valid digit.  This is
    long division run from the wrong end, and it terminates because m is
    a unit.
    """
    if not isinstance(m, int) or isinstance(m, bool):
        raise GadicError(f"divisor must be an integer, got {m!r}")
    if m == 0:
        raise GadicError("division by zero")
    negative = m < 0
    m = abs(m)
    if gcd(m, x.base) != 1:
        raise GadicError(f"divisor {m} shares a factor with base {x.base}")
    g = x.base
    g_inv = pow(g, -1, m)  # modulus 1 gives 0, which makes k = 0 below
    out = []
    borrow = 0
    for digit in x.digits:
        d = digit - borrow
        k = (-d * g_inv) % m
        out.append((d + k * g) // m)
        borrow = k
    quotient = DigitExpansion(g, tuple(out))
    return -quotient if negative else quotient
