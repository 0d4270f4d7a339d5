"""Random generators and independent brute-force oracles shared by the tests."""

import math
import random
from fractions import Fraction
from itertools import permutations

from hypothesis import strategies as st

from gwa.core import GwaElement, GwaPresentation
from gwa.exactpoly import LaurentPoly, Poly


def rat(rng, num=6, den=4, nonzero=False):
    while True:
        value = Fraction(rng.randint(-num, num), rng.randint(1, den))
        if value or not nonzero:
            return value


def rand_poly(rng, degree, num=5, den=3, density=1.0):
    """Degree exactly ``degree``; lower coefficients kept with probability ``density``."""
    coeffs = {degree: rat(rng, num, den, nonzero=True)}
    for i in range(degree):
        if rng.random() < density:
            coeffs[i] = rat(rng, num, den)
    return Poly(coeffs)


def rand_element(rng, A, span=2, degree=2):
    comps = {}
    for d in range(-span, span + 1):
        if rng.random() < 0.6:
            p = rand_poly(rng, rng.randint(0, degree), num=3, den=2)
            comps[d] = A.coerce(p)
    return GwaElement(comps)


fractions = st.fractions(min_value=-20, max_value=20, max_denominator=8)
nonzero_fractions = fractions.filter(bool)


@st.composite
def polys(draw, min_degree=0, max_degree=4):
    deg = draw(st.integers(min_degree, max_degree))
    coeffs = draw(st.lists(fractions, min_size=deg + 1, max_size=deg + 1))
    coeffs[-1] = draw(nonzero_fractions)
    return Poly(coeffs)


quantum_q = st.sampled_from([Fraction(2), Fraction(3), Fraction(1, 2), Fraction(-2),
                             Fraction(5, 3), Fraction(-1, 3)])


# -- brute-force oracles ------------------------------------------------------

def divisors(n):
    n = abs(n)
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(p):
    """All rational roots by the rational-root theorem (with multiplicity)."""
    roots = []
    while p.degree >= 1 and p.coeff(0) == 0:
        roots.append(Fraction(0))
        p = p.exact_div(Poly.h())
    if p.degree < 1:
        return roots
    lcm = 1
    for c in p.coeffs.values():
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = {k: int(c * lcm) for k, c in p.coeffs.items()}
    # candidates come from the undeflated polynomial; they cover every factor
    dens = divisors(ints[p.degree])
    for num in divisors(ints[0]):
        for den in dens:
            for cand in (Fraction(num, den), Fraction(-num, den)):
                while p.degree >= 1 and p(cand) == 0:
                    roots.append(cand)
                    p = p.exact_div(Poly({1: 1, 0: -cand}))
    return roots


def brute_quantum_rational(a1, a2):
    """Search ``a2 = rho * a1(alpha*h)`` with rational ``alpha`` by root candidates."""
    if a1.is_monomial() and a2.is_monomial():
        return a1.degree == a2.degree
    if a1.is_monomial() != a2.is_monomial() or a1.support != a2.support:
        return False
    sup = a1.support
    i, j = sup[0], sup[1]
    c = (a2.coeff(j) / a1.coeff(j)) / (a2.coeff(i) / a1.coeff(i))
    # alpha is a root of X^(j-i) - c
    candidates = rational_roots(Poly({j - i: 1, 0: -c}))
    for alpha in candidates:
        rho = a2.coeff(i) / (a1.coeff(i) * alpha ** i)
        if a1.scale_var(alpha) * rho == a2:
            return True
    return False


def brute_simple_classical(roots):
    if len(set(roots)) != len(roots):
        return False
    return not any((r - s).denominator == 1 for r in roots for s in roots if r != s)


def brute_simple_quantum(roots, q):
    """Direct ratio inspection: no repeated roots, no ``r/s`` a power of ``q``."""
    roots = [r for r in roots if r != 0]
    if q in (1, -1):
        return False
    if len(set(roots)) != len(roots):
        return False
    for r in roots:
        for s in roots:
            if r == s:
                continue
            ratio = r / s
            # |q^k| grows monotonically; stop once past |ratio| either way
            for sign in (1, -1):
                power, base = Fraction(1), (q if sign > 0 else 1 / q)
                for _ in range(200):
                    power *= base
                    if power == ratio:
                        return False
                    if abs(power) > abs(ratio) and abs(base) > 1:
                        break
                    if abs(power) < abs(ratio) and abs(base) < 1:
                        break
    return True


def brute_sufficient(r1, r2, exponent):
    for tau in permutations(range(len(r1))):
        if all(exponent(r1[i], r2[tau[i]]) is not None for i in range(len(r1))):
            return True
    return False


def quantum(q, a):
    return GwaPresentation.quantum(q, a)


def laurent(q, a):
    return GwaPresentation.laurent(q, a if isinstance(a, LaurentPoly) else a.to_laurent())


def seeded(seed):
    return random.Random(seed)
