"""Exact univariate arithmetic over the rationals.

Rationals are :class:`fractions.Fraction`.  :class:`Poly` is a sparse
polynomial in ``h`` (degree -> nonzero coefficient) and :class:`LaurentPoly`
allows negative exponents.  Both are immutable value types.

The helpers at the bottom (affine substitution, depression, gcd, root
bounds, exact n-th roots) are the primitives every decision procedure in the
package builds on.
"""

from fractions import Fraction
from math import isqrt
from numbers import Rational as _RationalABC

from .errors import InvalidArgument

__all__ = [
    "Fraction", "Poly", "LaurentPoly", "ZERO_DEGREE", "as_fraction",
    "compose_affine", "depress", "poly_gcd", "cauchy_root_bound",
    "rational_nth_root", "ext_gcd", "squarefree_decompose", "power_exponent",
]

#: Degree reported for the zero polynomial.
ZERO_DEGREE = -1


def as_fraction(value):
    """Coerce ints, Fractions and ``"p/q"`` strings to :class:`Fraction`."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InvalidArgument(f"not an exact rational: {value!r}") from None
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _clean(coeffs):
    return {int(k): as_fraction(v) for k, v in coeffs.items() if v != 0}


def _format_terms(items, var="h"):
    # items: sorted (exponent, coefficient) pairs, highest exponent first
    if not items:
        return "0"
    out = []
    for k, c in items:
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}*{power}"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


class Poly:
    """Univariate polynomial in ``h`` with rational coefficients.

    >>> Poly({2: 1, 0: -1}) * Poly.h() == Poly({3: 1, 1: -1})
    True
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = dict(enumerate(coeffs))
        c = _clean(coeffs)
        if any(k < 0 for k in c):
            raise InvalidArgument("Poly exponents must be non-negative")
        self._c = c
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, value):
        return cls({0: value})

    @classmethod
    def h(cls):
        return cls({1: 1})

    @classmethod
    def monomial(cls, coeff, exp):
        return cls({exp: coeff})

    @classmethod
    def from_roots(cls, roots, lead=1):
        """Build ``lead * prod(h - r)``."""
        p = cls.constant(lead)
        for r in roots:
            p = p * cls({1: 1, 0: -as_fraction(r)})
        return p

    # -- inspection -------------------------------------------------------
    @property
    def coeffs(self):
        return dict(self._c)

    @property
    def degree(self):
        return max(self._c) if self._c else ZERO_DEGREE

    @property
    def valuation(self):
        if not self._c:
            raise InvalidArgument("zero polynomial has no valuation")
        return min(self._c)

    @property
    def support(self):
        return sorted(self._c)

    def coeff(self, k):
        return self._c.get(k, Fraction(0))

    @property
    def lc(self):
        return self._c[self.degree] if self._c else Fraction(0)

    def is_zero(self):
        return not self._c

    def is_constant(self):
        return self.degree <= 0

    def is_monomial(self):
        return len(self._c) == 1

    def monic(self):
        if not self._c:
            raise InvalidArgument("zero polynomial cannot be made monic")
        return self.scale(1 / self.lc)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _lift(other, Poly)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return Poly(c)

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = _lift(other, Poly)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _lift(other, Poly)
        if other is NotImplemented:
            return other
        c = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                c[i + j] = c.get(i + j, 0) + a * b
        return Poly(c)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise InvalidArgument("Poly powers must be non-negative integers")
        result, base = Poly.constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        c = as_fraction(c)
        return Poly({k: v * c for k, v in self._c.items()})

    def divmod(self, other):
        """Euclidean division; returns ``(quotient, remainder)``."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q, r = {}, dict(self._c)
        dd, lc = other.degree, other.lc
        while r:
            dr = max(r)
            if dr < dd:
                break
            t = r[dr] / lc
            q[dr - dd] = t
            for k, v in other._c.items():
                r[k + dr - dd] = r.get(k + dr - dd, 0) - t * v
            r = {k: v for k, v in r.items() if v != 0}
        return Poly(q), Poly(r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        """Quotient if ``other`` divides ``self`` exactly, else ``None``."""
        q, r = self.divmod(other)
        return q if r.is_zero() else None

    def derivative(self):
        return Poly({k - 1: k * v for k, v in self._c.items() if k})

    def __call__(self, value):
        if isinstance(value, (Poly, LaurentPoly)):
            return self.compose(value)
        value = as_fraction(value)
        acc = Fraction(0)
        for k in range(self.degree, -1, -1):
            acc = acc * value + self._c.get(k, 0)
        return acc

    def compose(self, inner):
        """Return ``self(inner)`` for a polynomial (or Laurent) ``inner``."""
        one = Poly.constant(1) if isinstance(inner, Poly) else LaurentPoly.constant(1)
        acc = one * 0
        for k in range(self.degree, -1, -1):
            acc = acc * inner + one.scale(self._c.get(k, 0))
        return acc

    def scale_var(self, c):
        """Return ``self(c*h)``."""
        c = as_fraction(c)
        return Poly({k: v * c**k for k, v in self._c.items()})

    # -- protocol ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, LaurentPoly):
            return other == self
        if isinstance(other, (int, Fraction)):
            return self._c == _clean({0: other})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Poly", frozenset(self._c.items())))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return _format_terms(sorted(self._c.items(), reverse=True))

    def to_laurent(self):
        return LaurentPoly(self._c)


class LaurentPoly:
    """Laurent polynomial ``h^m * u(h)`` with ``u(0) != 0``.

    Stored as a sparse exponent map; :attr:`valuation` and
    :attr:`unit_part` expose the unique normalised factorisation.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        self._c = _clean(coeffs or {})
        self._hash = None

    @classmethod
    def constant(cls, value):
        return cls({0: value})

    @classmethod
    def h(cls, exp=1):
        return cls({exp: 1})

    @classmethod
    def from_parts(cls, valuation, unit_part):
        if not unit_part.is_zero() and unit_part.coeff(0) == 0:
            raise InvalidArgument("unit part must have a nonzero constant term")
        return cls({k + valuation: v for k, v in unit_part.coeffs.items()})

    @property
    def coeffs(self):
        return dict(self._c)

    @property
    def support(self):
        return sorted(self._c)

    def coeff(self, k):
        return self._c.get(k, Fraction(0))

    def is_zero(self):
        return not self._c

    def is_monomial(self):
        return len(self._c) == 1

    @property
    def valuation(self):
        if not self._c:
            raise InvalidArgument("zero Laurent polynomial has no valuation")
        return min(self._c)

    @property
    def top_degree(self):
        if not self._c:
            return ZERO_DEGREE
        return max(self._c)

    @property
    def unit_part(self):
        if not self._c:
            return Poly()
        m = self.valuation
        return Poly({k - m: v for k, v in self._c.items()})

    def is_polynomial(self):
        return all(k >= 0 for k in self._c)

    def to_poly(self):
        if not self.is_polynomial():
            raise InvalidArgument(f"{self} has negative exponents")
        return Poly(self._c)

    def __add__(self, other):
        other = _lift(other, LaurentPoly)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = _lift(other, LaurentPoly)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _lift(other, LaurentPoly)
        if other is NotImplemented:
            return other
        c = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                c[i + j] = c.get(i + j, 0) + a * b
        return LaurentPoly(c)

    __rmul__ = __mul__

    def inverse(self):
        """Inverse of a unit; only monomials ``c h^k`` are invertible."""
        if not self.is_monomial():
            raise InvalidArgument(f"{self} is not a unit of k[h, 1/h]")
        (k, c), = self._c.items()
        return LaurentPoly({-k: 1 / c})

    def __pow__(self, n):
        if not isinstance(n, int):
            raise InvalidArgument("Laurent powers must be integers")
        base = self
        if n < 0:
            base, n = self.inverse(), -n
        result = LaurentPoly.constant(1)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        c = as_fraction(c)
        return LaurentPoly({k: v * c for k, v in self._c.items()})

    def scale_var(self, c):
        """Return ``self(c*h)``; ``c`` must be nonzero."""
        c = as_fraction(c)
        if c == 0:
            raise InvalidArgument("Laurent substitution h -> 0 is undefined")
        return LaurentPoly({k: v * c**k for k, v in self._c.items()})

    def invert_var(self):
        """Return ``self(1/h)``."""
        return LaurentPoly({-k: v for k, v in self._c.items()})

    def shift(self, m):
        """Return ``h^m * self``."""
        return LaurentPoly({k + m: v for k, v in self._c.items()})

    def compose(self, inner):
        """``self(inner)`` where ``inner`` must be a Laurent monomial."""
        inner = inner if isinstance(inner, LaurentPoly) else LaurentPoly(inner.coeffs)
        acc = LaurentPoly()
        for k, v in self._c.items():
            acc = acc + (inner ** k).scale(v)
        return acc

    def __call__(self, value):
        if isinstance(value, (Poly, LaurentPoly)):
            return self.compose(value)
        value = as_fraction(value)
        if value == 0 and any(k < 0 for k in self._c):
            raise ZeroDivisionError("Laurent polynomial evaluated at 0")
        return sum((v * value**k for k, v in self._c.items()), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == _clean({0: other})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Poly", frozenset(self._c.items())))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return _format_terms(sorted(self._c.items(), reverse=True))


def _lift(value, cls):
    if isinstance(value, cls):
        return value
    if cls is LaurentPoly and isinstance(value, Poly):
        return LaurentPoly(value.coeffs)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return cls.constant(value)
    return NotImplemented


# -- substitutions and classical algorithms ----------------------------------

def compose_affine(p, alpha, beta):
    """Return ``p(alpha*h + beta)``; ``alpha`` must be nonzero."""
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    if alpha == 0:
        raise InvalidArgument("affine substitution needs alpha != 0")
    return p.compose(Poly({1: alpha, 0: beta}))


def depress(p):
    """Shift away the subleading coefficient.

    Returns ``(c, q)`` with ``q(h) = p(h + c)`` and ``q`` having no
    ``h^(n-1)`` term.
    """
    n = p.degree
    if n < 1:
        raise InvalidArgument("depress needs a polynomial of degree >= 1")
    c = -p.coeff(n - 1) / (n * p.lc)
    return c, compose_affine(p, 1, c)


def poly_gcd(p, q):
    """Monic greatest common divisor (Euclid over the rationals)."""
    if p.is_zero() and q.is_zero():
        raise InvalidArgument("gcd(0, 0) is undefined")
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def cauchy_root_bound(p):
    """``1 + max |a_i / a_n|``: every complex root has modulus at most this."""
    n = p.degree
    if n < 1:
        raise InvalidArgument("root bound needs a polynomial of degree >= 1")
    lc = p.lc
    return 1 + max((abs(p.coeff(i) / lc) for i in range(n)), default=Fraction(0))


def _int_nth_root(m, n):
    """Exact non-negative integer n-th root of ``m >= 0`` or ``None``."""
    if m < 2:
        return m
    r = int(round(m ** (1.0 / n))) if m.bit_length() < 1000 else 1 << (m.bit_length() // n)
    # Newton refinement from above
    x = max(r, 1)
    while True:
        y = ((n - 1) * x + m // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    for cand in (x - 1, x, x + 1):
        if cand >= 0 and cand**n == m:
            return cand
    # Newton from a low start can stall; fall back to bisection
    lo, hi = 0, 1 << (m.bit_length() // n + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        v = mid**n
        if v == m:
            return mid
        if v < m:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def rational_nth_root(c, n):
    """Rational ``r`` with ``r**n == c``, or ``None``.

    For even ``n`` the positive root is returned.
    """
    c = as_fraction(c)
    if c == 0:
        raise InvalidArgument("nth root of zero is excluded")
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument("root index must be a positive integer")
    sign = 1
    if c < 0:
        if n % 2 == 0:
            return None
        sign, c = -1, -c
    num = _int_nth_root(c.numerator, n)
    den = _int_nth_root(c.denominator, n)
    if num is None or den is None:
        return None
    return sign * Fraction(num, den)


def ext_gcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
        old_t, t = t, old_t - quot * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def bezout_combination(values):
    """Coefficients ``u`` with ``sum(u_i * v_i) == gcd(values)``.

    Folds :func:`ext_gcd` across the list.  Returns ``(g, u)``.
    """
    values = list(values)
    if not values:
        return 0, []
    g, u = values[0], [1]
    if g < 0:
        g, u = -g, [-1]
    for v in values[1:]:
        g2, s, t = ext_gcd(g, v)
        u = [s * ui for ui in u] + [t]
        g = g2
    return g, u


def _squarefree_int(n):
    """Split ``n > 0`` as ``(s, f)`` with ``n == s*s*f`` and ``f`` square-free."""
    square, free = 1, 1
    p = 2
    while p * p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            square *= p ** (e // 2)
            if e % 2:
                free *= p
        p += 1 if p == 2 else 2
    # cofactor has at most two prime factors
    if n > 1:
        r = isqrt(n)
        if r * r == n:
            square *= r
        else:
            free *= n
    return square, free


def squarefree_decompose(value):
    """Write a nonzero rational as ``c**2 * d`` with ``d`` a square-free integer.

    ``d`` carries the sign, so ``sqrt(value) == c * sqrt(d)`` exactly.
    Returns ``(c, d)`` with ``c > 0``.
    """
    value = as_fraction(value)
    if value == 0:
        raise InvalidArgument("zero has no square-free decomposition")
    sign = -1 if value < 0 else 1
    # value = num/den = num*den / den^2
    s, f = _squarefree_int(abs(value.numerator) * value.denominator)
    return Fraction(s, value.denominator), sign * f


def power_exponent(base, target, cap=None):
    """Integer ``m`` with ``base**m == target`` or ``None``.

    ``base`` must be a rational other than 0 and +-1.  The search walks
    ``base**m`` upward and downward; since ``|base| != 1`` the height
    (``max(|num|, den)``) of ``base**m`` is ``height(base)**|m| >= 2**|m|``,
    so the scan stops once it overtakes ``target``.  ``cap`` (default
    ``max(64, bits(height(target)) + 2)``) guards against runaway loops.
    """
    base, target = as_fraction(base), as_fraction(target)
    if base in (0, 1, -1):
        raise InvalidArgument("power_exponent needs |base| != 1 and base != 0")
    if target == 0:
        return None

    def height(x):
        return max(abs(x.numerator), x.denominator)

    limit = height(target)
    if cap is None:
        cap = max(64, limit.bit_length() + 2)
    for step in (base, 1 / base):
        value, m = Fraction(1), 0
        for _ in range(cap):
            if value == target:
                return m if step == base else -m
            if height(value) > limit:
                break
            value *= step
            m += 1
        else:
            raise ArithmeticError("power_exponent iteration cap exceeded")
    return None
