"""Lifting polynomial roots from a prime residue to full digit precision.

A simple root r of f modulo p (meaning f(r) = 0 but f'(r) != 0 mod p)
extends to exactly one root modulo every power of p.  The lift here is
Newton's iteration x <- x - f(x)/f'(x) run in digit arithmetic, doubling
the working precision each round; each step is justified because a value
correct to k digits yields a Newton update correct to 2k.

For a composite base the roots are found one prime component at a time
and glued with the Chinese remainder theorem, so the number of base-g
roots is the product of the per-prime counts.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .crt import ComponentValue, factor_base, is_prime, recombine
from .digits import DigitExpansion, invert_unit
from .errors import GadicError, MultipleRootError
from .polynomials import IntPolynomial


@dataclass(frozen=True)
class LiftedRoot:
    """A root expansion together with the residue it grew from."""

    root: DigitExpansion
    residue_seed: int


def roots_mod_p(f: IntPolynomial, p: int) -> list[int]:
    """All roots of f modulo a prime, by scanning every residue."""
    if not is_prime(p):
        raise GadicError(f"{p} is not prime")
    if f.is_zero_mod(p):
        raise GadicError(f"polynomial vanishes identically mod {p}")
    return [r for r in range(p) if f.evaluate_mod(r, p) == 0]


def _check_simple(f: IntPolynomial, r: int, p: int) -> None:
    if f.evaluate_mod(r, p) != 0:
        raise GadicError(f"{r} is not a root of f mod {p}")
    if f.derivative().evaluate_mod(r, p) == 0:
        raise MultipleRootError(
            f"root {r} mod {p} is not simple (f' vanishes), so the lift "
            f"is not determined digit by digit"
        )


def hensel_lift(f: IntPolynomial, r0: int, p: int, precision: int) -> LiftedRoot:
    """Lift a simple root of f mod p to ``precision`` base-p digits."""
    if not is_prime(p):
        raise GadicError(f"{p} is not prime")
    if precision < 1:
        raise GadicError(f"precision must be >= 1, got {precision}")
    r0 %= p
    _check_simple(f, r0, p)
    fprime = f.derivative()
    x = DigitExpansion.from_integer(r0, p, 1)
    current = 1
    while current < precision:
        current = min(2 * current, precision)
        x = x.zero_extend(current)
        # f'(x) is a unit because its lowest digit is f'(r0) mod p != 0.
        x = x - f.evaluate_expansion(x) * invert_unit(fprime.evaluate_expansion(x))
    return LiftedRoot(root=x, residue_seed=r0)


def gadic_roots(f: IntPolynomial, base: int, precision: int) -> list[LiftedRoot]:
    """All roots of f modulo base**precision, via the prime components.

    Every root of f modulo every prime factor of the base must be
    simple; a repeated root anywhere poisons the whole product and
    raises MultipleRootError.  Roots are ordered by their seed residue
    modulo the base.
    """
    if precision < 1:
        raise GadicError(f"precision must be >= 1, got {precision}")
    fact = factor_base(base)
    per_component: list[list[ComponentValue]] = []
    for p, e in fact.components:
        lifted = []
        for r in roots_mod_p(f, p):
            _check_simple(f, r, p)
            lifted.append(
                ComponentValue(p, hensel_lift(f, r, p, e * precision).root)
            )
        per_component.append(lifted)
    out = []
    for combo in product(*per_component):
        root = recombine(fact, combo)
        out.append(LiftedRoot(root=root, residue_seed=root.to_integer() % base))
    out.sort(key=lambda lr: (lr.residue_seed, lr.root.to_integer()))
    return out
