from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gwa import iso
from gwa.core import GwaPresentation
from gwa.errors import Unsupported
from gwa.exactpoly import LaurentPoly, Poly, compose_affine
from helpers import laurent, nonzero_fractions, polys, quantum

h = Poly.h()
L = LaurentPoly.h()
CLOSURE, RATIONALS = iso.FieldMode.OVER_CLOSURE, iso.FieldMode.OVER_RATIONALS


def test_classical_examples():
    assert iso.iso_classical(h**2 - h, h**2 - 11 * h + 30) == iso.ClassicalShift(1, 1, -5)
    assert iso.iso_classical(h**2 - h, h**2 - 2 * h) is None
    assert iso.iso_classical(h, 5 * h + 3) == iso.ClassicalShift(5, 1, Fraction(3, 5))


def test_classical_reflection():
    a1 = h * (h - 1) * (h - 3)
    a2 = compose_affine(a1, -1, 7).scale(2)
    w = iso.iso_classical(a1, a2)
    assert w is not None and iso.apply_witness(w, a1) == a2


def test_root_oracle_examples():
    assert iso.root_condition_oracle([0, 1], [5, 6])
    assert not iso.root_condition_oracle([0, 1], [0, 2])
    assert iso.root_condition_oracle([0, 1, 3], [10, 9, 7])
    with pytest.raises(Unsupported):
        iso.root_condition_oracle(range(9), range(9))


def test_quantum_examples():
    w = iso.iso_quantum(h**2 + h + 1, 4 * h**2 + 2 * h + 1)
    assert w == iso.QuantumScale(1, 2)
    assert iso.iso_quantum(h**2 + 1, 2 * h**2 + 1, RATIONALS) is None
    alg = iso.iso_quantum(h**2 + 1, 2 * h**2 + 1, CLOSURE)
    assert isinstance(alg.alpha, iso.AlgebraicScalar)
    assert (alg.alpha.g, alg.alpha.beta) == (2, 2)
    assert iso.iso_quantum(h**2, 5 * h**3) is None
    assert iso.iso_quantum(h**2, 5 * h**2) == iso.MonomialDegree(2, 5)


def test_quantum_rejects_roots_of_unity():
    with pytest.raises(Unsupported):
        iso.iso_quantum(h + 1, h + 2, q=-1)


def test_algebraic_scalars_reduce_to_rationals():
    assert iso.algebraic(3, 4, 2, 5) == 75
    s = iso.algebraic(1, 3, 2, 5)
    assert isinstance(s, iso.AlgebraicScalar) and (s.coefficient, s.exponent) == (5, 1)


def test_laurent_examples():
    a1 = L**2 + 3 + L**-1
    assert iso.iso_laurent(a1, L * a1, 2) == iso.LaurentScale(1, 1, 1, 1)
    pal = L + L**-1
    w = iso.iso_laurent(pal, pal, 2, epsilon=-1)
    assert w.epsilon == -1
    assert iso.iso_laurent(L + 1, L + 2, 2) == iso.LaurentScale(2, Fraction(1, 2), 0, 1)


@settings(max_examples=40, deadline=None)
@given(polys(min_degree=1, max_degree=4), nonzero_fractions, nonzero_fractions)
def test_quantum_completeness(a1, rho, alpha):
    a2 = a1.scale_var(alpha).scale(rho)
    w = iso.iso_quantum(a1, a2, RATIONALS)
    assert w is not None
    assert iso.apply_witness(w, a1) == a2


@settings(max_examples=30, deadline=None)
@given(polys(min_degree=1, max_degree=4), nonzero_fractions, nonzero_fractions)
def test_invert_witness(a1, rho, alpha):
    a2 = a1.scale_var(alpha).scale(rho)
    w = iso.iso_quantum(a1, a2, RATIONALS)
    assert iso.apply_witness(iso.invert_witness(w), a2) == a1


def test_witness_maps_verify():
    a1 = h**2 + h + 1
    A1, A2 = quantum(2, a1), quantum(2, 4 * h**2 + 2 * h + 1)
    phi, ok = iso.build_and_verify_morphism(iso.QuantumScale(Fraction(1), Fraction(2)), A1, A2)
    assert ok
    _, ok = iso.build_and_verify_morphism(iso.QuantumScale(Fraction(1), Fraction(1)), A1, A1)
    assert ok
    _, ok = iso.build_and_verify_morphism(iso.QuantumScale(Fraction(1), Fraction(2)), A1, A1)
    assert not ok


def test_algebraic_witness_cannot_be_built():
    A = quantum(2, h**2 + 1)
    w = iso.iso_quantum(h**2 + 1, 2 * h**2 + 1)
    with pytest.raises(Unsupported, match="unsupported-over-field"):
        iso.build_and_verify_morphism(w, A, quantum(2, 2 * h**2 + 1))


@pytest.mark.parametrize("eps", [1, -1])
def test_laurent_maps_verify(eps):
    a1 = 3 * L**2 + L - 2 + L**-1
    w = iso.LaurentScale(Fraction(5), Fraction(3, 2), 2, eps)
    a2 = iso.apply_witness(w, a1)
    _, ok = iso.build_and_verify_morphism(w, laurent(3, a1), laurent(3, a2))
    assert ok


def test_invert_sigma_transform():
    a = h**2 + 3 * h
    A2, phi = iso.invert_sigma_transform(quantum(2, a))
    assert A2.q == Fraction(1, 2) and A2.a == a(2 * h)
    assert not iso.verify_morphism(phi, quantum(2, a), A2)
    C2, _ = iso.invert_sigma_transform(GwaPresentation.classical(a))
    assert C2.h0 == -1 and C2.a == a(h - 1)
    B, _ = iso.invert_sigma_transform(A2)
    assert (B.q, B.h0) == (2, 0) and B.a == a


def test_decide_isomorphism_paths():
    a = h**2 + h + 1
    r = iso.decide_isomorphism(quantum(2, a), quantum(Fraction(1, 2), a(2 * h)))
    assert r.isomorphic and r.verified
    r = iso.decide_isomorphism(GwaPresentation.classical(h**2 - h, 1),
                               GwaPresentation.classical((h**2 - h).scale_var(Fraction(1, 3)), 3))
    assert r.isomorphic and r.verified
    r = iso.decide_isomorphism(GwaPresentation.classical(h), quantum(2, h))
    assert not r.isomorphic
    r = iso.decide_isomorphism(quantum(2, h + 1), quantum(3, h + 1))
    assert not r.isomorphic
    r = iso.decide_isomorphism(laurent(2, L + 1), laurent(Fraction(1, 2), L + 2))
    assert r.isomorphic and r.verified
    with pytest.raises(Unsupported):
        iso.decide_isomorphism(GwaPresentation(1, 0, h), GwaPresentation(1, 0, h))


def test_affine_quantum_presentations():
    a = h**2 - 2 * h
    A1 = GwaPresentation(3, 4, a)
    # shifting h by the fixed point moves sigma to h -> 3h
    A2 = GwaPresentation(3, 0, compose_affine(a, 1, 2).scale(7))
    r = iso.decide_isomorphism(A1, A2)
    assert r.isomorphic and r.verified


@given(st.integers(1, 5))
def test_monomial_witness_map(n):
    A1, A2 = quantum(3, h**n), quantum(3, 4 * h**n)
    _, ok = iso.build_and_verify_morphism(iso.MonomialDegree(n, Fraction(4)), A1, A2)
    assert ok
