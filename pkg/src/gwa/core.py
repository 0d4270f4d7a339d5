"""Degree-one generalized Weyl algebras and their graded elements.

A presentation ``k[h](sigma, a)`` has ``sigma(h) = q*h - h0``.  Elements are
stored in the graded normal form

    sum_d p_d(h) * v_d,   v_d = x^d (d > 0),  1 (d = 0),  y^-d (d < 0),

and multiplied by pushing coefficients left through ``v_m r = sigma^m(r) v_m``
and collapsing mixed products with ``xy = sigma(a)``, ``yx = a``.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .errors import InvalidArgument, Unsupported
from .exactpoly import Fraction, LaurentPoly, Poly, as_fraction


class Base(Enum):
    POLY = "PolyRing"
    LAURENT = "LaurentRing"


@dataclass(frozen=True)
class GwaPresentation:
    """The datum ``(R, sigma, a)`` with ``R = k[h]`` or ``k[h, 1/h]``."""

    q: Fraction
    h0: Fraction
    a: object
    base: Base = Base.POLY

    def __post_init__(self):
        object.__setattr__(self, "q", as_fraction(self.q))
        object.__setattr__(self, "h0", as_fraction(self.h0))
        if self.q == 0:
            raise InvalidArgument("q must be nonzero (sigma must be an automorphism)")
        a = self.a
        if self.base is Base.LAURENT:
            if self.h0 != 0:
                raise InvalidArgument("Laurent presentations need h0 = 0")
            if isinstance(a, Poly):
                a = a.to_laurent()
        elif isinstance(a, LaurentPoly):
            a = a.to_poly()
        if not isinstance(a, (Poly, LaurentPoly)):
            raise TypeError("defining element must be a Poly or LaurentPoly")
        if a.is_zero():
            raise InvalidArgument("defining polynomial a must be nonzero")
        object.__setattr__(self, "a", a)

    @classmethod
    def quantum(cls, q, a):
        return cls(q, 0, a)

    @classmethod
    def classical(cls, a, h0=1):
        return cls(1, h0, a)

    @classmethod
    def laurent(cls, q, a):
        return cls(q, 0, a, Base.LAURENT)

    @property
    def is_quantum(self):
        """``q`` has infinite order: for rationals, ``q`` not in ``{1, -1}``."""
        return self.q not in (1, -1)

    @property
    def is_laurent(self):
        return self.base is Base.LAURENT

    def zero(self):
        return LaurentPoly() if self.is_laurent else Poly()

    def coerce(self, value):
        """Bring a scalar or polynomial into this presentation's base ring."""
        if isinstance(value, (int, Fraction)):
            value = Poly.constant(value)
        if self.is_laurent:
            return value if isinstance(value, LaurentPoly) else value.to_laurent()
        if isinstance(value, LaurentPoly):
            return value.to_poly()
        return value

    def require_quantum(self, what="this operation"):
        if not self.is_quantum:
            raise Unsupported(f"{what} needs q not a root of unity (q = {self.q})")


def sigma_power_apply(A, p, n):
    """``sigma^n(p)`` for ``sigma(h) = q*h - h0``; ``n`` may be negative."""
    return _sigma_power(A.q, A.h0, A.coerce(p), n)


def _sigma_power(q, h0, p, n):
    if n == 0 or p.is_zero():
        return p
    if isinstance(p, LaurentPoly):
        return p.scale_var(q**n)
    # sigma^n(h) = q^n h - h0 (q^n - 1)/(q - 1), or h - n h0 when q = 1
    if q == 1:
        shift = -n * h0
    else:
        shift = -h0 * (q**n - 1) / (q - 1)
    return p.compose(Poly({1: q**n, 0: shift}))


@dataclass(frozen=True)
class GwaElement:
    """Finite sum ``sum_d components[d] * v_d`` in graded normal form."""

    components: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(d): p for d, p in self.components.items() if not p.is_zero()}
        object.__setattr__(self, "components", clean)

    @classmethod
    def scalar(cls, A, value):
        return cls({0: A.coerce(value)})

    @classmethod
    def h(cls, A):
        return cls({0: A.coerce(Poly.h())})

    @classmethod
    def x(cls, A):
        return cls({1: A.coerce(Poly.constant(1))})

    @classmethod
    def y(cls, A):
        return cls({-1: A.coerce(Poly.constant(1))})

    @classmethod
    def homogeneous(cls, coeff, degree):
        return cls({degree: coeff})

    @property
    def support(self):
        return sorted(self.components)

    def is_zero(self):
        return not self.components

    def is_homogeneous(self):
        return len(self.components) == 1

    def component(self, d):
        return self.components.get(d)

    def __add__(self, other):
        c = dict(self.components)
        for d, p in other.components.items():
            c[d] = c[d] + p if d in c else p
        return GwaElement(c)

    def __neg__(self):
        return GwaElement({d: -p for d, p in self.components.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return GwaElement({d: p.scale(c) for d, p in self.components.items()})

    def __eq__(self, other):
        if not isinstance(other, GwaElement):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(frozenset(self.components.items()))

    def __str__(self):
        if not self.components:
            return "0"
        parts = []
        for d in sorted(self.components, reverse=True):
            p = self.components[d]
            gen = "" if d == 0 else ("x" if d > 0 else "y")
            power = "" if abs(d) <= 1 else f"^{abs(d)}"
            if d == 0:
                parts.append(f"({p})")
            else:
                parts.append(f"({p})*{gen}{power}")
        return " + ".join(parts)

    __repr__ = __str__


class _SigmaCache:
    """Memoised ``sigma^k(a)`` for one presentation."""

    def __init__(self, A):
        self.A = A
        self._cache = {0: A.a}

    def __call__(self, k):
        if k not in self._cache:
            self._cache[k] = _sigma_power(self.A.q, self.A.h0, self.A.a, k)
        return self._cache[k]


@lru_cache(maxsize=64)
def _sigma_cache(A):
    return _SigmaCache(A)


def _mono_product(A, m, n):
    """Normal form of ``v_m * v_n`` as ``(coefficient, degree)``."""
    one = A.coerce(Poly.constant(1))
    if m == 0 or n == 0 or (m > 0) == (n > 0):
        return one, m + n
    sig = _sigma_cache(A)
    coeff = one
    if m > 0:
        # x^m y^k = sigma^m(a) sigma^(m-1)(a) ... x^(m-j) y^(k-j)
        j = min(m, -n)
        for i in range(j):
            coeff = coeff * sig(m - i)
    else:
        # y^k x^l = sigma^-(k-1)(a) ... sigma^-(k-j)(a) y^(k-j) x^(l-j)
        k = -m
        j = min(k, n)
        for i in range(1, j + 1):
            coeff = coeff * sig(-(k - i))
    return coeff, m + n


def multiply(A, u, v):
    """Product ``u * v`` in ``A``, returned in graded normal form."""
    out = {}
    for m, p in u.components.items():
        for n, r in v.components.items():
            mono, d = _mono_product(A, m, n)
            term = p * _sigma_power(A.q, A.h0, r, m) * mono
            out[d] = out[d] + term if d in out else term
    return GwaElement(out)


def power(A, u, n):
    if n < 0:
        raise InvalidArgument("element powers must be non-negative")
    result = GwaElement.scalar(A, 1)
    for _ in range(n):
        result = multiply(A, result, u)
    return result


def evaluate_poly_at(A, p, image):
    """``p(image)`` for a polynomial ``p`` and a degree-0 element ``image``."""
    if image.support not in ([], [0]):
        raise InvalidArgument("substituted image of h must lie in degree 0")
    inner = image.component(0) or A.zero()
    return GwaElement({0: A.coerce(p.compose(inner))})


# -- normalizing elements ------------------------------------------------------

@dataclass(frozen=True)
class NormalityVerdict:
    normal: bool
    conjugators: dict = None
    refutation: str = None

    def __bool__(self):
        return self.normal


def _solve_left(A, u, g):
    """Find ``w = t(h) * g`` with ``u*g == w*u``, or ``None``."""
    ug = multiply(A, u, g)
    d = ug.support[0]
    gu = multiply(A, g, u)
    t = ug.components[d].exact_div(gu.components[d])
    if t is None:
        return None
    w = multiply(A, GwaElement({0: t}), g)
    return w if multiply(A, w, u) == ug else None


def _solve_right(A, u, g):
    """Find ``w' = t(h) * g`` with ``g*u == u*w'``, or ``None``."""
    ug = multiply(A, u, g)
    gu = multiply(A, g, u)
    d = ug.support[0]
    (du,) = u.support
    # u * (t g) = sigma^du(t) * (u g)
    s = gu.components[d].exact_div(ug.components[d])
    if s is None:
        return None
    t = _sigma_power(A.q, A.h0, s, -du)
    w = multiply(A, GwaElement({0: t}), g)
    return w if multiply(A, u, w) == gu else None


def normality_witness(A, u):
    """Decide whether ``u`` is normalizing (``uA = Au``) in a quantum GWA.

    Mixed-degree elements are rejected because conjugating ``h`` past each
    component ``p_i v_i`` demands the distinct twist ``sigma^i(h)``.  For a
    homogeneous ``u`` the conjugators of ``h``, ``x`` and ``y`` are solved for
    by exact division in both directions; the first generator that admits
    no polynomial solution is reported.
    """
    if A.is_laurent:
        raise Unsupported("normality_witness is implemented for k[h] only")
    A.require_quantum("normality_witness")
    if u.is_zero():
        raise InvalidArgument("zero element is not a valid candidate")
    if not u.is_homogeneous():
        return NormalityVerdict(
            False,
            refutation=f"multi-degree support {u.support}: h would need "
                       "distinct twists in each degree",
        )
    hh, xx, yy = GwaElement.h(A), GwaElement.x(A), GwaElement.y(A)
    (d,) = u.support
    # h always conjugates: u h = sigma^d(h) u
    w_h = GwaElement({0: _sigma_power(A.q, A.h0, Poly.h(), d)})
    conj = {"h": w_h}
    for name, g in (("x", xx), ("y", yy)):
        w = _solve_left(A, u, g)
        if w is None:
            return NormalityVerdict(
                False, refutation=f"u*{name} is not a left multiple of u "
                                  f"(h-part {u.components[d]} with a = {A.a})")
        if _solve_right(A, u, g) is None:
            return NormalityVerdict(
                False, refutation=f"{name}*u is not a right multiple of u "
                                  f"(h-part {u.components[d]} with a = {A.a})")
        conj[name] = w
    assert multiply(A, u, hh) == multiply(A, w_h, u)
    return NormalityVerdict(True, conjugators=conj)
