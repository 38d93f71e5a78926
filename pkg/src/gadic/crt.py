"""Chinese remainder plumbing between base g and its prime components.

Working modulo g**N is the same as working modulo p**(e*N) for every
prime power p**e in g, all at once.  This module carries values back
and forth: ``project`` reads off one prime component, ``recombine``
glues components into a base-g expansion, and ``idempotents`` lists the
elements that are their own square, one for every subset of the prime
components.

The recombination itself runs on ordinary integers.  That is fine here:
these are coordinate changes, not the digit arithmetic under test.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .digits import DigitExpansion, check_base
from .errors import GadicError


def is_prime(n: int) -> bool:
    """Trial division, plenty for the human-scale moduli used here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class BaseFactorization:
    """A base together with its prime factorization, primes ascending."""

    base: int
    components: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.components)

    def component_modulus(self, prime: int, precision: int) -> int:
        for p, e in self.components:
            if p == prime:
                return p ** (e * precision)
        raise GadicError(f"{prime} is not a prime factor of {self.base}")


def factor_base(base: int) -> BaseFactorization:
    """Factor a base by trial division."""
    check_base(base)
    components = []
    n = base
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            components.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        components.append((n, 1))
    return BaseFactorization(base, tuple(components))


@dataclass(frozen=True)
class ComponentValue:
    """One prime component of a base-g value.

    For a component p**e of g taken at g-precision N, the value is a
    base-p expansion with e*N digits: each base-g digit is worth e
    base-p digits of information.
    """

    prime: int
    value: DigitExpansion

    def __post_init__(self) -> None:
        if not is_prime(self.prime):
            raise GadicError(f"component prime {self.prime} is not prime")
        if self.value.base != self.prime:
            raise GadicError(
                f"component value is base {self.value.base}, expected {self.prime}"
            )

    @property
    def component_precision(self) -> int:
        return self.value.precision


def project(x: DigitExpansion, component: tuple[int, int]) -> ComponentValue:
    """Reduce a base-g value to one prime component of g.

    The result has e*N base-p digits, where N is the precision of x.
    """
    p, e = component
    fact = factor_base(x.base)
    if (p, e) not in fact.components:
        raise GadicError(
            f"{p}**{e} is not a component of base {x.base} (factors: {fact.components})"
        )
    residue = x.to_integer()
    return ComponentValue(p, DigitExpansion.from_integer(residue, p, e * x.precision))


def _crt_pair(a1: int, m1: int, a2: int, m2: int) -> int:
    """Unique residue mod m1*m2 matching a1 mod m1 and a2 mod m2."""
    t = (a2 - a1) * pow(m1, -1, m2) % m2
    return (a1 + m1 * t) % (m1 * m2)


def recombine(
    factorization: BaseFactorization, values: Sequence[ComponentValue]
) -> DigitExpansion:
    """Glue one value per prime component into a base-g expansion.

    Every component must be supplied exactly once and all must describe
    the same base-g precision N, i.e. carry e*N base-p digits.
    """
    by_prime = {}
    for cv in values:
        if cv.prime in by_prime:
            raise GadicError(f"component {cv.prime} supplied twice")
        by_prime[cv.prime] = cv
    expected = set(factorization.primes)
    if set(by_prime) != expected:
        raise GadicError(
            f"components {sorted(by_prime)} do not match factors {sorted(expected)}"
        )
    precision: int | None = None
    for p, e in factorization.components:
        cp = by_prime[p].component_precision
        n, rem = divmod(cp, e)
        if rem:
            raise GadicError(
                f"component {p} has {cp} digits, not a multiple of exponent {e}"
            )
        if precision is None:
            precision = n
        elif precision != n:
            raise GadicError(
                f"components disagree on precision: {precision} vs {n}"
            )
    assert precision is not None
    residue, modulus = 0, 1
    for p, e in factorization.components:
        cv = by_prime[p]
        residue = _crt_pair(residue, modulus, cv.value.to_integer(), p ** (e * precision))
        modulus *= p ** (e * precision)
    return DigitExpansion.from_integer(residue, factorization.base, precision)


def idempotents(base: int, precision: int) -> list[DigitExpansion]:
    """All solutions of x*x = x modulo base**precision.

    There are 2 ** (number of distinct primes in base): one for each way
    of being congruent to 1 at some components and 0 at the rest.  The
    list starts with 0 and 1, then the nontrivial ones by ascending
    residue.
    """
    if precision < 1:
        raise GadicError(f"precision must be >= 1, got {precision}")
    fact = factor_base(base)
    out = []
    k = len(fact.components)
    for mask in range(1 << k):
        residue, modulus = 0, 1
        for i, (p, e) in enumerate(fact.components):
            target = 1 if mask >> i & 1 else 0
            residue = _crt_pair(residue, modulus, target, p ** (e * precision))
            modulus *= p ** (e * precision)
        out.append(DigitExpansion.from_integer(residue, base, precision))

    def order_key(x: DigitExpansion) -> tuple[int, int]:
        n = x.to_integer()
        return (0 if n in (0, 1) else 1, n)

    return sorted(out, key=order_key)
