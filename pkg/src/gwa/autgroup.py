"""Automorphism groups of quantum GWAs ``A_q(a) = k[h](sigma_q, a)``.

Non-monomial ``a = sum_{i >= i0} a_i h^i``: every automorphism is

    x -> alpha*x,  h -> gamma*h,  y -> gamma^i0 * alpha^-1 * y

with ``gamma^p = 1``, ``p = gcd`` of the support gaps, so
``Aut ~= Z/p x k*``.  Monomial ``a = c h^n``: ``gamma`` is free and
``y -> gamma^n alpha^-1 y``, so ``Aut ~= k* x k*``.

Roots of unity are kept symbolic as :class:`CycloScalar` values
``c * zeta^e`` with ``zeta`` a primitive ``p``-th root.  Relation checks only
ever compare single products coefficient-wise, so no general cyclotomic
arithmetic is required.
"""

from dataclasses import dataclass
from functools import reduce
from math import gcd

from .errors import InvalidArgument, StructuralError, Unsupported
from .exactpoly import Fraction, Poly, as_fraction


@dataclass(frozen=True)
class AutDescriptor:
    monomial: bool
    p: int
    i0: int
    structure: str

    def __str__(self):
        return self.structure


def aut_descriptor(a):
    if a.degree < 1:
        raise Unsupported("automorphism groups need a non-constant a")
    i0 = a.valuation
    if a.is_monomial():
        return AutDescriptor(True, 1, i0, "k* x k*")
    p = reduce(gcd, (i - i0 for i in a.support[1:]))
    return AutDescriptor(False, p, i0, f"Z/{p} x k*")


@dataclass(frozen=True)
class CycloScalar:
    """``coefficient * zeta**zeta_exponent`` in the ``p``-th cyclotomic field."""

    coefficient: Fraction
    zeta_exponent: int = 0
    p: int = 1

    def __post_init__(self):
        object.__setattr__(self, "coefficient", as_fraction(self.coefficient))
        if self.p < 1:
            raise InvalidArgument("cyclotomic modulus must be positive")
        e = self.zeta_exponent % self.p if self.coefficient else 0
        object.__setattr__(self, "zeta_exponent", e)

    def _check(self, other):
        if self.p != other.p:
            raise StructuralError(f"mixed cyclotomic moduli {self.p} and {other.p}")

    def __mul__(self, other):
        if not isinstance(other, CycloScalar):
            other = CycloScalar(other, 0, self.p)
        self._check(other)
        return CycloScalar(self.coefficient * other.coefficient,
                           self.zeta_exponent + other.zeta_exponent, self.p)

    __rmul__ = __mul__

    def __add__(self, other):
        self._check(other)
        if not self.coefficient:
            return other
        if not other.coefficient:
            return self
        if self.zeta_exponent != other.zeta_exponent:
            raise StructuralError(
                f"cannot add zeta^{self.zeta_exponent} and zeta^{other.zeta_exponent} terms")
        return CycloScalar(self.coefficient + other.coefficient, self.zeta_exponent, self.p)

    def __pow__(self, n):
        return CycloScalar(self.coefficient ** n, self.zeta_exponent * n, self.p)

    def inverse(self):
        return CycloScalar(1 / self.coefficient, -self.zeta_exponent, self.p)

    def __eq__(self, other):
        if not isinstance(other, CycloScalar):
            return NotImplemented
        if not self.coefficient and not other.coefficient:
            return True
        return (self.p == other.p and self.coefficient == other.coefficient
                and self.zeta_exponent == other.zeta_exponent)

    def __hash__(self):
        return hash((self.coefficient, self.zeta_exponent, self.p))

    def __str__(self):
        if not self.zeta_exponent:
            return str(self.coefficient)
        z = "zeta" if self.zeta_exponent == 1 else f"zeta^{self.zeta_exponent}"
        return z if self.coefficient == 1 else f"{self.coefficient}*{z}"


@dataclass(frozen=True)
class ScalingMap:
    """``x -> sx*x``, ``h -> sh*h``, ``y -> sy*y`` with cyclotomic scalars."""

    sx: CycloScalar
    sh: CycloScalar
    sy: CycloScalar

    @property
    def p(self):
        return self.sx.p

    def compose(self, other):
        """``self o other`` (apply ``other`` first)."""
        return ScalingMap(self.sx * other.sx, self.sh * other.sh, self.sy * other.sy)


def make_automorphism(d, alpha, e=0, gamma=None):
    """Automorphism with parameters ``(alpha, e)`` (or ``(alpha, gamma)`` if monomial)."""
    alpha = as_fraction(alpha)
    if alpha == 0:
        raise InvalidArgument("alpha must be nonzero")
    if d.monomial:
        gamma = as_fraction(1 if gamma is None else gamma)
        if gamma == 0:
            raise InvalidArgument("gamma must be nonzero")
        n = d.i0
        return ScalingMap(CycloScalar(alpha), CycloScalar(gamma),
                          CycloScalar(gamma**n / alpha))
    if not 0 <= e < d.p:
        raise InvalidArgument(f"e must lie in [0, {d.p})")
    p = d.p
    return ScalingMap(CycloScalar(alpha, 0, p), CycloScalar(1, e, p),
                      CycloScalar(1 / alpha, e * d.i0, p))


def _eval_scaled(poly, sh):
    """Coefficients of ``poly(sh*h)`` as ``{i: CycloScalar}``."""
    return {i: sh**i * c for i, c in poly.coeffs.items()}


def _times(terms, s):
    return {i: s * c for i, c in terms.items()}


def _const(poly, p):
    return {i: CycloScalar(c, 0, p) for i, c in poly.coeffs.items()}


def _same(lhs, rhs):
    keys = set(lhs) | set(rhs)
    zero = CycloScalar(0)
    return all(lhs.get(k, zero) == rhs.get(k, zero) for k in keys)


def check_automorphism(phi, A):
    """``(ok, reason)`` for a scaling map on a quantum presentation."""
    if A.is_laurent:
        raise Unsupported("automorphism checks are implemented for k[h] only")
    A.require_quantum("automorphism verification")
    p = phi.p
    if not (phi.sh.p == p and phi.sy.p == p):
        return False, "generator scalars use different cyclotomic moduli"
    if any(not s.coefficient for s in (phi.sx, phi.sh, phi.sy)):
        return False, "a generator is sent to zero"
    q, h0 = A.q, A.h0
    sigma_h = Poly({1: q, 0: -h0})
    sigma_inv_h = Poly({1: 1 / q, 0: h0 / q})
    sigma_a = A.a.compose(sigma_h)
    try:
        relations = [
            # phi(x)phi(h) = sx sh x h = sx sh sigma(h) x  vs  sigma(sh h) sx x
            ("xh = sigma(h)x",
             _times(_const(sigma_h, p), phi.sx * phi.sh),
             _times(_eval_scaled(sigma_h, phi.sh), phi.sx)),
            ("yh = sigma^-1(h)y",
             _times(_const(sigma_inv_h, p), phi.sy * phi.sh),
             _times(_eval_scaled(sigma_inv_h, phi.sh), phi.sy)),
            ("xy = sigma(a)",
             _times(_const(sigma_a, p), phi.sx * phi.sy),
             _eval_scaled(sigma_a, phi.sh)),
            ("yx = a",
             _times(_const(A.a, p), phi.sy * phi.sx),
             _eval_scaled(A.a, phi.sh)),
        ]
        for name, lhs, rhs in relations:
            if not _same(lhs, rhs):
                return False, f"relation {name} fails"
    except StructuralError as exc:
        return False, f"malformed map: {exc}"
    return True, "all four relations hold"


def verify_automorphism(phi, A):
    return check_automorphism(phi, A)[0]
