"""Acceptance gate: eight criteria, each reported as one PASS/FAIL line.

Every check here goes through the public API and, where the claim is
numeric, re-verifies the result through plain big-integer arithmetic
that shares no code with the digit implementation.  The conftest hook
turns the criterion tags below into ACCEPTANCE lines on the terminal.
"""

import random
import shutil
import subprocess
import sys

from gadic.crt import ComponentValue, factor_base, idempotents, project, recombine
from gadic.digits import DigitExpansion, div_exact_by_unit, invert_unit
from gadic.hensel import gadic_roots, hensel_lift, roots_mod_p
from gadic.logarithm import log_gadic, log_unit
from gadic.notation import parse_dotted, render_dotted, render_tail
from gadic.polynomials import IntPolynomial
from gadic.roots import (
    gauss_sqrt1_iterate,
    gauss_sqrt1_steps,
    quadratic_periods,
    sqrt_binomial,
    sqrt_hensel,
)

QUINTIC = IntPolynomial((3, 80, -98, -86, -20, 1))

ODD_PRIMES_UNDER_100 = (
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
    59, 61, 67, 71, 73, 79, 83, 89, 97,
)


def criterion(number, name):
    """Tag a test as one numbered acceptance criterion."""

    def wrap(fn):
        fn.acceptance_number = number
        fn.acceptance_name = name
        return fn

    return wrap


def egcd(a, b):
    """Extended gcd, the oracle side of every modular inverse here."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def int_poly_value(coefficients, x, modulus):
    return sum(c * x**k for k, c in enumerate(coefficients)) % modulus


@criterion(1, "quintic lift table mod 241**3")
def test_criterion_1_lift_table():
    table = {
        2: (2, 191, 160),
        3: (3, 238, 16),
        4: (4, 192, 221),
        5: (5, 65, 17),
        6: (6, 37, 65),
    }
    assert roots_mod_p(QUINTIC, 241) == sorted(table)
    modulus = 241**3
    for seed, digits in table.items():
        lifted = hensel_lift(QUINTIC, seed, 241, 3)
        assert lifted.root.digits == digits
        assert lifted.residue_seed == seed
        # digit route: f(root) is identically zero in the expansion ring
        assert QUINTIC.evaluate_expansion(lifted.root).is_zero()
        # independent route: plain integers, no package arithmetic
        value = digits[0] + digits[1] * 241 + digits[2] * 241**2
        assert lifted.root.to_integer() == value
        assert int_poly_value(QUINTIC.coefficients, value, modulus) == 0
    assert hensel_lift(QUINTIC, 2, 241, 3).root.to_integer() == (
        2 + 191 * 241 + 160 * 241**2
    )
    assert hensel_lift(QUINTIC, 6, 241, 3).root.to_integer() == (
        6 + 37 * 241 + 65 * 241**2
    )


@criterion(2, "sqrt 5 and binomial agreement")
def test_criterion_2_sqrt5():
    principal, negated = sqrt_hensel(5, 11, 6)
    assert render_dotted(principal) == "9.0.4.10.4.4"
    wide, _ = sqrt_hensel(5, 11, 8)
    assert wide.digits[:6] == principal.digits
    assert wide.digits[6] == 5
    assert wide.digits[7] == 8
    assert sqrt_binomial(5, 11, 6) == principal
    assert sqrt_binomial(5, 11, 8) == wide

    rng = random.Random(1800)
    seen = 0
    while seen < 50:
        p = rng.choice(ODD_PRIMES_UNDER_100)
        n = rng.randint(1, 20)
        a = rng.randrange(1, p)
        if pow(a, (p - 1) // 2, p) != 1:
            continue
        seen += 1
        ph, nh = sqrt_hensel(a, p, n)
        sb = sqrt_binomial(a, p, n)
        # the series lands on one of the two roots; digits must match it
        assert sb == ph or sb == nh
        embedded = DigitExpansion.from_integer(a, p, n)
        assert ph * ph == embedded
        assert nh * nh == embedded
        assert sb * sb == embedded
        assert ph.to_integer() ** 2 % p**n == a % p**n


@criterion(3, "subtraction figure and division by three")
def test_criterion_3_figure():
    x = parse_dotted("6.0.4.0.2.1", 11)
    y = parse_dotted("0.10.0.2.0.0", 11)
    difference = x - y
    assert render_dotted(difference) == "5.1.3.9.2.1"
    quotient = div_exact_by_unit(difference, 3)
    assert render_dotted(quotient) == "9.0.4.10.4.4"
    three = DigitExpansion.from_integer(3, 11, 6)
    assert quotient * three == difference
    assert quotient == difference * invert_unit(three)
    # independent route: big-integer residues
    m = 11**6
    assert difference.to_integer() == (x.to_integer() - y.to_integer()) % m
    g, inv3, _ = egcd(3, m)
    assert g == 1
    assert quotient.to_integer() == difference.to_integer() * inv3 % m


@criterion(4, "quadratic periods and their identities")
def test_criterion_4_periods():
    pair = quadratic_periods(11, 6)
    assert render_dotted(pair.b) == "6.5.3.0.3.3"
    # extended-gcd oracle for a: solve 2a = -1 + sqrt5 mod 11**6
    m = 11**6
    s = sqrt_hensel(5, 11, 6)[0].to_integer()
    assert s * s % m == 5
    g, inv2, _ = egcd(2, m)
    assert g == 1
    assert pair.a.to_integer() == (s - 1) * inv2 % m
    assert (2 * pair.a.to_integer() + 1) % m == s
    for n in (6, 20):
        deep = quadratic_periods(11, n)
        minus_one = DigitExpansion.from_integer(-1, 11, n)
        assert deep.a + deep.b == minus_one
        assert deep.a * deep.b == minus_one
        gap = deep.a - deep.b
        assert gap * gap == DigitExpansion.from_integer(5, 11, n)


@criterion(5, "idempotent, epsilon, and the digit iteration")
def test_criterion_5_epsilon():
    assert any(e.to_integer() == 918212890625 for e in idempotents(10, 12))

    eps = recombine(
        factor_base(10),
        [
            ComponentValue(2, DigitExpansion.from_integer(1, 2, 100)),
            ComponentValue(5, DigitExpansion.from_integer(-1, 5, 100)),
        ],
    )
    tail55 = "2001114846846461792218008213239954784512519836425781249"
    assert render_tail(eps).endswith(tail55)
    assert eps.to_integer() % 10**55 == int(tail55)
    assert str(eps.to_integer()).endswith("519836425781249")
    assert eps * eps == DigitExpansion.from_integer(1, 10, 100)
    # independent route: CRT by hand on plain integers
    g, inv, _ = egcd(2**100, 5**100)
    assert g == 1
    by_hand = (1 + 2**100 * ((-2) * inv % 5**100)) % 10**100
    assert eps.to_integer() == by_hand

    seed = DigitExpansion.from_integer(249, 10, 3)
    steps = gauss_sqrt1_steps(seed, 5)
    assert (steps[0].window, steps[0].next_digit) == (38, 1)
    assert (steps[1].window, steps[1].next_digit) == (44, 8)
    nine = gauss_sqrt1_iterate(seed, 9)
    assert nine.to_integer() == 425781249
    assert nine == eps.truncate(9)


@criterion(6, "logarithms of 31, 2, and the 5-adic congruence")
def test_criterion_6_logs():
    assert log_gadic(DigitExpansion.from_integer(31, 10, 7)).to_integer() == 666080
    assert (
        log_gadic(DigitExpansion.from_integer(31, 10, 10)).to_integer() == 3280666080
    )
    log2 = log_gadic(DigitExpansion.from_integer(2, 10, 10))
    assert log2.precision == 9
    assert log2.to_integer() == 863080960
    assert log_unit(DigitExpansion.from_integer(2, 5, 7), 5, 7).to_integer() == 34085
    four = DigitExpansion.from_integer(4, 10, 10)
    log3 = log_gadic(DigitExpansion.from_integer(3, 10, 10))
    log81 = log_gadic(DigitExpansion.from_integer(81, 10, 10))
    assert four * log3 == log81
    assert 21830960 % 5**7 == 34085
    assert 21830960 % 2**7 == 48


@criterion(7, "property suites against independent oracles")
def test_criterion_7_properties():
    rng = random.Random(90125)

    # ring laws vs big-integer residues, 10**4 cases
    bases = (2, 3, 10, 11, 12, 241)
    for _ in range(10_000):
        g = rng.choice(bases)
        n = rng.randint(1, 10)
        m = g**n
        x, y = rng.randrange(m), rng.randrange(m)
        gx = DigitExpansion.from_integer(x, g, n)
        gy = DigitExpansion.from_integer(y, g, n)
        assert (gx + gy).to_integer() == (x + y) % m
        assert (gx - gy).to_integer() == (x - y) % m
        assert (gx * gy).to_integer() == (x * y) % m
        assert (-gx).to_integer() == -x % m

    # CRT roundtrip identity
    for _ in range(300):
        g = rng.choice((6, 10, 12, 15, 60))
        n = rng.randint(1, 8)
        x = DigitExpansion.from_integer(rng.randrange(g**n), g, n)
        fact = factor_base(g)
        parts = [project(x, comp) for comp in fact.components]
        assert recombine(fact, parts) == x

    # Hensel roots verified by exhaustive scan, g**N up to 10**6
    cases = (
        (IntPolynomial((0, -1, 1)), 10, 6),
        (IntPolynomial((-1, 0, 1)), 15, 4),
        (QUINTIC, 241, 2),
    )
    for f, g, n in cases:
        m = g**n
        found = sorted(lr.root.to_integer() for lr in gadic_roots(f, g, n))
        scanned = [x for x in range(m) if int_poly_value(f.coefficients, x, m) == 0]
        assert found == scanned

    # every square root squares back exactly
    for _ in range(40):
        p = rng.choice(ODD_PRIMES_UNDER_100)
        n = rng.randint(1, 12)
        a = rng.randrange(1, p)
        if pow(a, (p - 1) // 2, p) != 1:
            continue
        target = DigitExpansion.from_integer(a, p, n)
        for root in (*sqrt_hensel(a, p, n), sqrt_binomial(a, p, n)):
            assert root * root == target

    # log homomorphism on 10**3 random unit pairs
    for _ in range(1_000):
        g = rng.choice((3, 5, 7, 10))
        n = rng.randint(3, 5)
        m = g**n

        def unit():
            while True:
                u = rng.randrange(1, m)
                if egcd(u, g)[0] == 1:
                    return u

        gx = DigitExpansion.from_integer(unit(), g, n)
        gy = DigitExpansion.from_integer(unit(), g, n)
        assert log_gadic(gx * gy) == log_gadic(gx) + log_gadic(gy)

    # truncation coherence: lift, sqrt, log
    for _ in range(25):
        shallow, deep = sorted((rng.randint(2, 6), rng.randint(2, 12)))
        if shallow == deep:
            deep += 1
        for seed in roots_mod_p(QUINTIC, 241):
            wide = hensel_lift(QUINTIC, seed, 241, deep).root
            narrow = hensel_lift(QUINTIC, seed, 241, shallow).root
            assert wide.truncate(shallow) == narrow
        p = rng.choice(ODD_PRIMES_UNDER_100)
        a = rng.randrange(1, p)
        if pow(a, (p - 1) // 2, p) == 1:
            assert sqrt_hensel(a, p, deep)[0].truncate(shallow) == (
                sqrt_hensel(a, p, shallow)[0]
            )
        u = rng.randrange(1, 10**deep)
        if egcd(u, 10)[0] == 1:
            tall = log_gadic(DigitExpansion.from_integer(u, 10, deep))
            short = log_gadic(DigitExpansion.from_integer(u, 10, shallow))
            assert tall.truncate(shallow) == short


@criterion(8, "notebook command exits clean and byte-stable")
def test_criterion_8_notebook_cli():
    gadic = shutil.which("gadic")
    cmd = [gadic, "notebook"] if gadic else [sys.executable, "-m", "gadic", "notebook"]
    first = subprocess.run(cmd, capture_output=True, timeout=300)
    second = subprocess.run(cmd, capture_output=True, timeout=300)
    assert first.returncode == 0
    assert second.returncode == 0
    assert first.stdout
    assert first.stdout == second.stdout
    lines = first.stdout.decode("utf-8").splitlines()
    assert not any(line.startswith("FAIL") for line in lines)
    assert lines[-1].endswith("expected discrepancies")
    assert " 0 fail, " in lines[-1]
