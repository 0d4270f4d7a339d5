"""Quantum Smith algebras ``R(f)`` and the deformations that reduce to them.

``R(f)`` has ``xh = q h x``, ``hy = y q h`` and ``xy - yx = f(h)`` with
``f(0) = 0``.  Then ``f(h) = a(qh) - a(h)`` for an ``a`` unique up to its
constant term; we store the representative with ``a(0) = 0``.  Two Smith
algebras are isomorphic iff ``a1(h) = rho * a2(beta*h) + alpha``.
"""

from dataclasses import dataclass

from . import canonical as _canon
from .errors import InvalidArgument, Unsupported
from .exactpoly import Fraction, Poly, as_fraction
from .iso import FieldMode, MonomialDegree, iso_quantum


def _check_q(q):
    q = as_fraction(q)
    if q in (0, 1, -1):
        raise Unsupported(f"quantum Smith algebras need q not in {{0, 1, -1}} (q = {q})")
    return q


def solve_a_from_f(f, q):
    """The ``a`` with ``a(0) = 0`` and ``a(q*h) - a(h) = f(h)``."""
    if f.coeff(0) != 0:
        raise InvalidArgument("f(0) = 0 required")
    q = _check_q(q)
    return Poly({i: c / (q**i - 1) for i, c in f.coeffs.items()})


@dataclass(frozen=True)
class SmithPresentation:
    q: Fraction
    f: Poly
    a: Poly

    def __post_init__(self):
        object.__setattr__(self, "q", _check_q(self.q))
        if self.f.coeff(0) != 0:
            raise InvalidArgument("f(0) = 0 required")
        if self.a.coeff(0) != 0:
            raise InvalidArgument("stored representative must satisfy a(0) = 0")
        if self.a.scale_var(self.q) - self.a != self.f:
            raise InvalidArgument("a(qh) - a(h) != f(h)")

    @classmethod
    def from_f(cls, f, q):
        return cls(as_fraction(q), f, solve_a_from_f(f, q))

    @classmethod
    def from_a(cls, a, q):
        """Any ``a``; its constant term is dropped."""
        q = _check_q(q)
        a = a - a.coeff(0)
        return cls(q, a.scale_var(q) - a, a)

    @property
    def degenerate(self):
        return self.f.is_zero()

    @property
    def casimir(self):
        """``Omega = yx - a(h)`` described as text (it is central in ``R(f)``)."""
        return f"yx - ({self.a})"


@dataclass(frozen=True)
class SmithWitness:
    """``a1(h) = rho * a2(beta*h) + alpha``."""
    rho: object
    beta: object
    alpha: Fraction


def smith_iso(S1, S2, mode=FieldMode.OVER_CLOSURE):
    if S1.q != S2.q:
        raise InvalidArgument(f"Smith algebras have different q ({S1.q} vs {S2.q})")
    if S1.a.degree < 1 or S2.a.degree < 1:
        raise Unsupported("Smith isomorphism needs non-constant a")
    # representatives have a(0) = 0, so the additive constant is always 0
    w = iso_quantum(S2.a, S1.a, mode, q=S1.q)
    if w is None:
        return None
    if isinstance(w, MonomialDegree):
        return SmithWitness(w.rho, Fraction(1), Fraction(0))
    return SmithWitness(w.rho, w.alpha, Fraction(0))


@dataclass(frozen=True)
class WittenParams:
    eps1: Fraction
    eps2: Fraction
    eps3: Fraction
    eps4: Fraction
    eps5: Fraction
    eps6: Fraction
    eps7: Fraction

    def __post_init__(self):
        for name in ("eps1", "eps2", "eps3", "eps4", "eps5", "eps6", "eps7"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    @classmethod
    def from_sequence(cls, values):
        values = list(values)
        if len(values) != 7:
            raise InvalidArgument("a Witten deformation has exactly 7 parameters")
        return cls(*values)

    def as_tuple(self):
        return (self.eps1, self.eps2, self.eps3, self.eps4, self.eps5, self.eps6, self.eps7)


def witten_violations(w):
    """Names of the violated clauses of the Smith-reduction conditions."""
    bad = []
    if w.eps1 != w.eps3:
        bad.append("eps1 = eps3")
    if w.eps1 in (0, 1, -1):
        bad.append("eps1 not in {0, -1, 1}")
    if w.eps2 != w.eps4:
        bad.append("eps2 = eps4")
    if w.eps5 != 1:
        bad.append("eps5 = 1")
    if w.eps1 not in (1, -1) and w.eps7 != 2 * w.eps6 * w.eps1 * w.eps2 / (w.eps1**2 - 1):
        bad.append("eps7 = 2*eps6*eps1*eps2/(eps1^2 - 1)")
    return bad


@dataclass(frozen=True)
class WittenReduction:
    smith: SmithPresentation
    canonical: Poly
    sigma_class: _canon.CanonicalClass
    witness: SmithWitness
    affine_f_matches: bool


def witten_to_smith(w):
    """Smith data of ``M(eps)`` and its canonical defining polynomial.

    ``a(z) = eps6/(eps1^2-1) z^2 - eps6 eps2^2/(eps1 (eps1^2-1)) z`` is taken as
    the Smith representative at ``q = eps1`` and matched against
    ``z^2 - (eps2^2/eps1) z`` with :func:`smith_iso`.  ``affine_f_matches``
    records whether ``a(sigma(z)) - a(z)`` reproduces ``eps6 z^2 + eps7 z``
    for the affine ``sigma(z) = eps2 + eps1 z`` itself (true iff ``eps2 = 0``).
    """
    bad = witten_violations(w)
    if bad:
        raise InvalidArgument("Witten parameters violate: " + "; ".join(bad))
    e1, e2, e6, e7 = w.eps1, w.eps2, w.eps6, w.eps7
    if e6 == 0:
        raise InvalidArgument("eps6 must be nonzero for a degree-2 canonical form")
    a = Poly({2: e6 / (e1**2 - 1), 1: -e6 * e2**2 / (e1 * (e1**2 - 1))})
    smith = SmithPresentation.from_a(a, e1)
    canonical = Poly({2: 1, 1: -e2**2 / e1})
    witness = smith_iso(smith, SmithPresentation.from_a(canonical, e1))
    if witness is None:
        raise AssertionError(f"{a} and {canonical} are not Smith-isomorphic")
    # sigma(z) = eps1 z + eps2 = q z - h0 with h0 = -eps2
    sigma_class = _canon.canonicalize(e1, -e2, a)
    affine_f = a.compose(Poly({1: e1, 0: e2})) - a
    return WittenReduction(smith, canonical, sigma_class, witness,
                           affine_f == Poly({2: e6, 1: e7}))


def witten_exceptional_form(w):
    """Informational canonical polynomial for the ``eps1 = +-1`` branches, or ``None``.

    These branches have ``q = +-1`` and fall outside the quantum machinery;
    the returned ``z^2 - z`` is reported, not computed.
    """
    if w.eps1 == 1 and w.eps6 == 0 and w.eps2 != 0:
        return Poly({2: 1, 1: -1})
    if w.eps1 == -1 and w.eps6 == 0 and w.eps2 not in (0, 1):
        return Poly({2: 1, 1: -1})
    return None


def lebruyn_to_smith(alpha, beta):
    """Conformal ``sl2`` algebra (``gamma = 1``) as a Smith presentation.

    ``a(z) = beta/(alpha^2-1) z^2 + beta/(alpha (1-alpha^2)) z``; for
    ``beta != 0`` it is checked to be Smith-isomorphic to ``z^2 - z/alpha``.
    ``beta = 0`` gives the degenerate presentation with ``f = 0``.
    """
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    if alpha in (0, 1, -1):
        raise Unsupported("Le Bruyn reduction needs alpha not in {0, 1, -1}")
    a = Poly({2: beta / (alpha**2 - 1), 1: beta / (alpha * (1 - alpha**2))})
    S = SmithPresentation.from_a(a, alpha)
    if beta != 0:
        target = SmithPresentation.from_a(Poly({2: 1, 1: -1 / alpha}), alpha)
        if smith_iso(S, target) is None:
            raise AssertionError(f"{a} is not Smith-isomorphic to z^2 - z/{alpha}")
    return S
