"""Isomorphism deciders for degree-one GWAs.

Classical (``sigma(h) = h - 1``):  ``A(a1) ~= A(a2)`` iff
``a2(h) = rho * a1(eps*h + alpha)``.

Quantum over ``k[h]``:  iff ``a2(h) = rho * a1(alpha*h)``; monomials are
isomorphic exactly when degrees agree and never to non-monomials.

Quantum over ``k[h, 1/h]``:  iff ``a2(h) = rho * h^m * a1(alpha * h^eps)``.

Every positive answer carries a witness; rational witnesses are turned into
explicit generator maps which are checked against the defining relations
by direct multiplication.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import permutations

from . import canonical as _canon
from .core import (GwaElement, GwaPresentation, evaluate_poly_at,
                   multiply, power, sigma_power_apply)
from .errors import InvalidArgument, Unsupported
from .exactpoly import (Fraction, LaurentPoly, Poly, as_fraction,
                        bezout_combination, compose_affine, rational_nth_root)


class FieldMode(Enum):
    OVER_RATIONALS = "rationals"
    OVER_CLOSURE = "closure"


@dataclass(frozen=True)
class AlgebraicScalar:
    """``coefficient * theta**exponent`` where ``theta`` is any root of ``X^g = beta``."""

    coefficient: Fraction
    exponent: int
    g: int
    beta: Fraction

    @property
    def is_rational(self):
        return False

    def inverse(self):
        return algebraic(1 / self.coefficient, -self.exponent, self.g, self.beta)

    def __str__(self):
        theta = "theta" if self.exponent == 1 else f"theta^{self.exponent}"
        lead = "" if self.coefficient == 1 else f"{self.coefficient}*"
        return f"{lead}{theta} (theta = any root of X^{self.g} = {self.beta})"


def algebraic(coefficient, exponent, g, beta):
    """``coefficient * theta**exponent`` with ``theta**g = beta``, reduced.

    Powers of ``theta**g`` are folded into the coefficient, so a rational
    value comes back as a :class:`Fraction`.
    """
    k, e = divmod(exponent, g)
    coefficient = as_fraction(coefficient) * as_fraction(beta) ** k
    return coefficient if e == 0 else AlgebraicScalar(coefficient, e, g, beta)


def _is_rational(s):
    return isinstance(s, Fraction)


def _inv(s):
    return 1 / s if _is_rational(s) else s.inverse()


@dataclass(frozen=True)
class ClassicalShift:
    """``a2(h) = rho * a1(epsilon*h + alpha)``."""
    rho: Fraction
    epsilon: int
    alpha: Fraction


@dataclass(frozen=True)
class QuantumScale:
    """``a2(h) = rho * a1(alpha*h)``; scalars may be algebraic descriptors."""
    rho: object
    alpha: object


@dataclass(frozen=True)
class LaurentScale:
    """``a2(h) = rho * h^m * a1(alpha * h^epsilon)``."""
    rho: object
    alpha: object
    m: int
    epsilon: int


@dataclass(frozen=True)
class MonomialDegree:
    """Both defining polynomials are monomials of degree ``n``; ``a2 = rho*a1``."""
    n: int
    rho: Fraction


@dataclass(frozen=True)
class GeneratorMap:
    image_of_h: GwaElement
    image_of_x: GwaElement
    image_of_y: GwaElement


def _require_nonconstant(*polys):
    for p in polys:
        if p.is_zero() or p.degree < 1:
            raise Unsupported(f"defining polynomial {p} must be non-constant")


# -- classical ---------------------------------------------------------------

def iso_classical(a1, a2):
    """Witness ``(rho, eps, alpha)`` with ``a2(h) = rho*a1(eps*h + alpha)`` or ``None``.

    For each sign the scale and shift are forced by the two leading
    coefficients, then confirmed by exact comparison.
    """
    _require_nonconstant(a1, a2)
    n = a1.degree
    if a2.degree != n:
        return None
    for eps in (1, -1):
        b = compose_affine(a1, eps, 0)
        rho = a2.lc / b.lc
        shift = (a2.coeff(n - 1) / rho - b.coeff(n - 1)) / (n * b.lc)
        if compose_affine(b, 1, shift).scale(rho) == a2:
            # b(h + shift) = a1(eps*h + eps*shift)
            return ClassicalShift(rho, eps, eps * shift)
    return None


def root_condition_oracle(roots1, roots2):
    """Root-level isomorphism test for classical GWAs by enumeration.

    True iff some permutation ``tau`` and sign ``eps`` give
    ``r1[i] - r1[0] == eps*(r2[tau(i)] - r2[tau(0)])`` for every ``i``.  The
    squared-difference formulation is evaluated alongside and must agree.
    """
    r1 = [as_fraction(r) for r in roots1]
    r2 = [as_fraction(r) for r in roots2]
    if len(r1) != len(r2):
        return False
    n = len(r1)
    if n > 8:
        raise Unsupported("root_condition_oracle is capped at 8 roots")
    if n == 0:
        return True
    shifted = any(
        all(r1[i] - r1[0] == eps * (r2[t[i]] - r2[t[0]]) for i in range(n))
        for t in permutations(range(n)) for eps in (1, -1)
    )
    squared = any(
        all((r1[i] - r1[j]) ** 2 == (r2[t[i]] - r2[t[j]]) ** 2
            for i in range(n) for j in range(i + 1, n))
        for t in permutations(range(n))
    )
    if shifted != squared:
        raise AssertionError(f"root conditions disagree on {r1} vs {r2}")
    return shifted


# -- scaling criterion (quantum and Laurent) ---------------------------------

def _scaling_solve(ratios, mode):
    """Solve ``ratios[i] == rho * alpha**i`` for all ``i``.

    Returns ``(rho, alpha)`` (rational or :class:`AlgebraicScalar`) or
    ``None``.  ``alpha`` is pinned down only through ``alpha**g == beta``
    where ``g`` is the gcd of exponent gaps and ``beta`` is assembled from a
    Bezout combination of the gap ratios.
    """
    exps = sorted(ratios)
    i0 = exps[0]
    r0 = ratios[i0]
    gaps = [i - i0 for i in exps[1:]]
    if not gaps:
        return r0, Fraction(1)
    c = {d: ratios[i0 + d] / r0 for d in gaps}
    g, u = bezout_combination(gaps)
    beta = Fraction(1)
    for d, ud in zip(gaps, u):
        beta *= c[d] ** ud
    if any(beta ** (d // g) != c[d] for d in gaps):
        return None
    alpha = rational_nth_root(beta, g)
    if alpha is None:
        if mode is FieldMode.OVER_RATIONALS:
            return None
        theta = AlgebraicScalar(Fraction(1), 1, g, beta)
        return algebraic(r0, -i0, g, beta), theta
    return r0 / alpha**i0, alpha


def iso_quantum(a1, a2, mode=FieldMode.OVER_CLOSURE, q=None):
    """Decide ``A_q(a1) ~= A_q(a2)`` over ``k[h]`` for ``q`` of infinite order."""
    if q is not None and as_fraction(q) in (0, 1, -1):
        raise Unsupported(f"quantum decider needs q not a root of unity (q = {q})")
    _require_nonconstant(a1, a2)
    mode = FieldMode(mode)
    m1, m2 = a1.is_monomial(), a2.is_monomial()
    if m1 and m2:
        if a1.degree != a2.degree:
            return None
        return MonomialDegree(a1.degree, a2.lc / a1.lc)
    if m1 != m2:
        return None
    if a1.support != a2.support:
        return None
    ratios = {i: a2.coeff(i) / a1.coeff(i) for i in a1.support}
    solved = _scaling_solve(ratios, mode)
    if solved is None:
        return None
    return QuantumScale(*solved)


def iso_laurent(a1, a2, q, mode=FieldMode.OVER_CLOSURE, epsilon=None):
    """Decide ``k[h^+-1](sigma_q, a1) ~= k[h^+-1](sigma_q, a2)``.

    ``epsilon`` restricts the search to one orientation; by default ``+1``
    is tried before ``-1``.
    """
    q = as_fraction(q)
    if q in (0, 1, -1):
        raise Unsupported(f"Laurent decider needs q not a root of unity (q = {q})")
    a1, a2 = _as_laurent(a1), _as_laurent(a2)
    if a1.is_zero() or a2.is_zero():
        raise InvalidArgument("Laurent defining elements must be nonzero")
    mode = FieldMode(mode)
    for eps in ((1, -1) if epsilon is None else (epsilon,)):
        image_support = sorted(eps * i for i in a1.support)
        m = a2.support[0] - image_support[0]
        if [i + m for i in image_support] != a2.support:
            continue
        ratios = {i: a2.coeff(eps * i + m) / a1.coeff(i) for i in a1.support}
        solved = _scaling_solve(ratios, mode)
        if solved is not None:
            rho, alpha = solved
            return LaurentScale(rho, alpha, m, eps)
    return None


def _as_laurent(p):
    return p if isinstance(p, LaurentPoly) else LaurentPoly(p.coeffs)


def invert_witness(w):
    """Witness for the reverse direction ``A2 -> A1``."""
    if isinstance(w, ClassicalShift):
        return ClassicalShift(1 / w.rho, w.epsilon, -w.epsilon * w.alpha)
    if isinstance(w, MonomialDegree):
        return MonomialDegree(w.n, 1 / w.rho)
    if isinstance(w, QuantumScale):
        return QuantumScale(_inv(w.rho), _inv(w.alpha))
    if isinstance(w, LaurentScale):
        if not (_is_rational(w.rho) and _is_rational(w.alpha)):
            raise Unsupported("inverting algebraic Laurent witnesses is not implemented")
        eps, m = w.epsilon, w.m
        return LaurentScale(w.alpha ** (eps * m) / w.rho, w.alpha ** (-eps), -eps * m, eps)
    raise TypeError(f"unknown witness {w!r}")


def apply_witness(w, a1):
    """The polynomial the witness predicts for ``a2`` (rational scalars only)."""
    if isinstance(w, ClassicalShift):
        return compose_affine(a1, w.epsilon, w.alpha).scale(w.rho)
    if isinstance(w, MonomialDegree):
        return a1.scale(w.rho)
    if isinstance(w, QuantumScale):
        _require_rational_witness(w.rho, w.alpha)
        return a1.scale_var(w.alpha).scale(w.rho)
    if isinstance(w, LaurentScale):
        _require_rational_witness(w.rho, w.alpha)
        b = _as_laurent(a1).scale_var(w.alpha)
        if w.epsilon == -1:
            b = b.invert_var()
        return b.shift(w.m).scale(w.rho)
    raise TypeError(f"unknown witness {w!r}")


def _require_rational_witness(*scalars):
    if not all(_is_rational(s) for s in scalars):
        raise Unsupported("unsupported-over-field: witness has algebraic scalars")


# -- generator maps -----------------------------------------------------------

def _h_image(A, coeffs):
    return GwaElement({0: A.coerce(LaurentPoly(coeffs) if A.is_laurent else Poly(coeffs))})


def invert_sigma_transform(A):
    """``k[h](sigma, a) ~= k[h](sigma^-1, sigma(a))`` via ``x <-> y``.

    Returns the new presentation and the map ``A -> A'``.
    """
    q2 = 1 / A.q
    h02 = -A.h0 / A.q
    a2 = sigma_power_apply(A, A.a, 1)
    A2 = GwaPresentation(q2, h02, a2, A.base)
    phi = GeneratorMap(GwaElement.h(A2), GwaElement.y(A2), GwaElement.x(A2))
    return A2, phi


def apply_map(A1, A2, phi, u):
    """Image of ``u`` in ``A1`` under a generator map into ``A2``."""
    out = GwaElement()
    for d, p in u.components.items():
        img = evaluate_poly_at(A2, p, phi.image_of_h)
        gen = phi.image_of_x if d > 0 else phi.image_of_y
        out = out + multiply(A2, img, power(A2, gen, abs(d)))
    return out


def compose_maps(A1, A2, A3, phi, psi):
    """``psi o phi`` for ``phi: A1 -> A2`` and ``psi: A2 -> A3``."""
    return GeneratorMap(
        apply_map(A2, A3, psi, phi.image_of_h),
        apply_map(A2, A3, psi, phi.image_of_x),
        apply_map(A2, A3, psi, phi.image_of_y),
    )


def verify_morphism(phi, A1, A2):
    """Names of the defining relations of ``A1`` that fail in ``A2`` (empty = ok)."""
    H, X, Y = phi.image_of_h, phi.image_of_x, phi.image_of_y
    failed = []
    if X.is_zero() or Y.is_zero():
        failed.append("nonzero images")
        return failed

    def img(p):
        return evaluate_poly_at(A2, p, H)

    sigma_h = sigma_power_apply(A1, A1.coerce(Poly.h()), 1)
    sigma_inv_h = sigma_power_apply(A1, A1.coerce(Poly.h()), -1)
    checks = [
        ("xh = sigma(h)x", multiply(A2, X, H), multiply(A2, img(sigma_h), X)),
        ("yh = sigma^-1(h)y", multiply(A2, Y, H), multiply(A2, img(sigma_inv_h), Y)),
        ("xy = sigma(a)", multiply(A2, X, Y), img(sigma_power_apply(A1, A1.a, 1))),
        ("yx = a", multiply(A2, Y, X), img(A1.a)),
    ]
    for name, lhs, rhs in checks:
        if lhs != rhs:
            failed.append(name)
    return failed


def witness_map(w, A1, A2):
    """Generator map ``A1 -> A2`` prescribed by a rational witness."""
    one = A2.coerce(Poly.constant(1))
    xx, yy = GwaElement.x(A2), GwaElement.y(A2)
    if isinstance(w, ClassicalShift):
        if w.epsilon == 1:
            return GeneratorMap(_h_image(A2, {1: 1, 0: w.alpha}), xx, yy.scale(1 / w.rho))
        return GeneratorMap(_h_image(A2, {1: -1, 0: w.alpha + A2.h0}), yy, xx.scale(1 / w.rho))
    if isinstance(w, MonomialDegree):
        return GeneratorMap(GwaElement.h(A2), xx.scale(1 / w.rho), yy)
    if isinstance(w, QuantumScale):
        _require_rational_witness(w.rho, w.alpha)
        return GeneratorMap(_h_image(A2, {1: w.alpha}), xx.scale(1 / w.rho), yy)
    if isinstance(w, LaurentScale):
        _require_rational_witness(w.rho, w.alpha)
        rho, alpha, m, q = w.rho, w.alpha, w.m, A2.q
        if w.epsilon == 1:
            y_img = GwaElement({-1: one * LaurentPoly({-m: 1 / rho})})
            return GeneratorMap(_h_image(A2, {1: alpha}), xx, y_img)
        x_img = GwaElement({1: one * LaurentPoly({-m: 1 / (rho * q**m)})})
        return GeneratorMap(_h_image(A2, {-1: alpha / q}), yy, x_img)
    raise TypeError(f"unknown witness {w!r}")


def build_and_verify_morphism(w, A1, A2):
    """Construct the witness map and check all four relations; ``(map, ok)``."""
    phi = witness_map(w, A1, A2)
    return phi, not verify_morphism(phi, A1, A2)


# -- whole-presentation decision ---------------------------------------------

@dataclass
class IsoResult:
    isomorphic: bool
    witness: object = None
    generator_map: GeneratorMap = None
    verified: bool = None
    reason: str = ""

    def __bool__(self):
        return bool(self.isomorphic)


def _to_canonical_map(A, C, cls):
    # a_C(h') = a(scale*h' + shift), so h corresponds to scale*h' + shift
    s, t = cls.scale, cls.shift
    return GeneratorMap(_h_image(C, {1: s, 0: t}), GwaElement.x(C), GwaElement.y(C))


def _from_canonical_map(C, A, cls):
    s, t = cls.scale, cls.shift
    return GeneratorMap(_h_image(A, {1: 1 / s, 0: -t / s}),
                        GwaElement.x(A), GwaElement.y(A))


def _finish(A1, A2, w, chain, reason):
    """Compose the chain of maps into ``A1 -> A2`` and verify it."""
    if not all(_is_rational(s) for s in _witness_scalars(w)):
        return IsoResult(True, w, None, None, reason + "; witness has algebraic scalars")
    phi = None
    for src, dst, m in chain:
        phi = m if phi is None else compose_maps(chain[0][0], src, dst, phi, m)
    ok = not verify_morphism(phi, A1, A2)
    return IsoResult(True, w, phi, ok, reason)


def _witness_scalars(w):
    if isinstance(w, (QuantumScale,)):
        return (w.rho, w.alpha)
    if isinstance(w, LaurentScale):
        return (w.rho, w.alpha)
    return ()


def decide_isomorphism(A1, A2, mode=FieldMode.OVER_CLOSURE):
    """Decide ``A1 ~= A2`` for arbitrary presentations.

    Presentations are brought to canonical form, separated by their
    fraction-field class, aligned to a common ``q`` via ``x <-> y`` when
    ``q2 = 1/q1``, and handed to the matching decider.  Rational witnesses
    come back with a composed, relation-checked map ``A1 -> A2``.
    """
    mode = FieldMode(mode)
    if A1.is_laurent != A2.is_laurent:
        raise Unsupported("comparing k[h] with k[h, 1/h] presentations is not covered")
    if A1.is_laurent:
        return _decide_laurent(A1, A2, mode)
    _require_nonconstant(A1.a, A2.a)
    c1 = _canon.canonicalize_presentation(A1)
    c2 = _canon.canonicalize_presentation(A2)
    if _canon.Variant.COMMUTATIVE in (c1.variant, c2.variant):
        if c1.variant is c2.variant:
            raise Unsupported("commutative presentations (sigma = id) are not classified")
        return IsoResult(False, reason="one algebra is commutative, the other is not")
    f1, f2 = _canon.fraction_field_class(c1), _canon.fraction_field_class(c2)
    check = _canon.rational_equivalence_check(f1, f2)
    if not check:
        return IsoResult(False, reason=check.reason)
    C1 = GwaPresentation(c1.q, 0 if c1.q != 1 else 1, c1.a)
    C2 = GwaPresentation(c2.q, 0 if c2.q != 1 else 1, c2.a)
    chain = [(A1, C1, _to_canonical_map(A1, C1, c1))]
    tail = [(C2, A2, _from_canonical_map(C2, A2, c2))]
    if c1.variant is _canon.Variant.CLASSICAL:
        w = iso_classical(C1.a, C2.a)
        if w is None:
            return IsoResult(False, reason="no rho, eps, alpha with a2(h) = rho*a1(eps*h+alpha)")
        chain.append((C1, C2, witness_map(w, C1, C2)))
        return _finish(A1, A2, w, chain + tail, "classical shift")
    target = C2
    if C2.q != C1.q:
        # C2 ~= C2' with q' = 1/q2 = q1; the inverse of the swap is the swap of C2'
        C2p, _ = invert_sigma_transform(C2)
        _, back = invert_sigma_transform(C2p)
        tail.insert(0, (C2p, C2, back))
        target = C2p
    w = iso_quantum(C1.a, target.a, mode, q=C1.q)
    if w is None:
        return IsoResult(False, reason="no alpha, rho with a2(h) = rho*a1(alpha*h)")
    if isinstance(w, MonomialDegree) or all(_is_rational(s) for s in _witness_scalars(w)):
        chain.append((C1, target, witness_map(w, C1, target)))
    return _finish(A1, A2, w, chain + tail, "quantum scaling")


def _decide_laurent(A1, A2, mode):
    if not A1.is_quantum or not A2.is_quantum:
        raise Unsupported("Laurent decider needs q not a root of unity")
    if not _canon.same_cyclic_group(A1.q, A2.q):
        return IsoResult(False, reason=f"G invariants differ: <{A1.q}> != <{A2.q}>")
    target, tail = A2, []
    if A2.q != A1.q:
        A2p, _ = invert_sigma_transform(A2)
        _, back = invert_sigma_transform(A2p)
        tail = [(A2p, A2, back)]
        target = A2p
    w = iso_laurent(A1.a, target.a, A1.q, mode)
    if w is None:
        return IsoResult(False, reason="no rho, alpha, m, eps with a2 = rho h^m a1(alpha h^eps)")
    chain = []
    if all(_is_rational(s) for s in _witness_scalars(w)):
        chain = [(A1, target, witness_map(w, A1, target))]
    return _finish(A1, A2, w, chain + tail, "Laurent scaling")
