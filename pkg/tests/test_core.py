from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gwa.core import (Base, GwaElement, GwaPresentation, multiply, normality_witness,
                      power, sigma_power_apply)
from gwa.errors import InvalidArgument, Unsupported
from gwa.exactpoly import LaurentPoly, Poly
from helpers import polys, quantum_q, rand_element, seeded

h = Poly.h()


def test_sigma_power_examples():
    assert sigma_power_apply(GwaPresentation(2, 0, h), h**2, 1) == 4 * h**2
    assert sigma_power_apply(GwaPresentation(2, 0, h), h, -1) == h.scale(Fraction(1, 2))
    assert sigma_power_apply(GwaPresentation.classical(h), h**2, 3) == (h - 3) ** 2


def test_sigma_powers_compose():
    A = GwaPresentation(3, 2, h**2 + 1)
    p = h**3 - h
    assert sigma_power_apply(A, sigma_power_apply(A, p, 2), -5) == sigma_power_apply(A, p, -3)


def test_presentation_validation():
    with pytest.raises(InvalidArgument):
        GwaPresentation(0, 0, h)
    with pytest.raises(InvalidArgument):
        GwaPresentation(2, 0, Poly.constant(0))
    with pytest.raises(InvalidArgument):
        GwaPresentation(2, 1, h, Base.LAURENT)


def test_relations_hold():
    a = h**2 + h + 1
    A = GwaPresentation.quantum(2, a)
    x, y, hh = GwaElement.x(A), GwaElement.y(A), GwaElement.h(A)
    assert multiply(A, x, hh) == GwaElement({1: 2 * h})
    assert multiply(A, y, x) == GwaElement({0: a})
    assert multiply(A, x, y) == GwaElement({0: a(2 * h)})
    assert multiply(A, y, hh) == GwaElement({-1: h.scale(Fraction(1, 2))})


def test_x2y2_closed_form():
    a = h**2 + 1
    A = GwaPresentation.quantum(2, a)
    x2 = power(A, GwaElement.x(A), 2)
    y2 = power(A, GwaElement.y(A), 2)
    assert multiply(A, x2, y2) == GwaElement({0: a(4 * h) * a(2 * h)})


def test_laurent_multiplication():
    L = LaurentPoly.h()
    A = GwaPresentation.laurent(2, L + L**-1)
    hinv = GwaElement({0: L**-1})
    x = GwaElement.x(A)
    assert multiply(A, x, hinv) == GwaElement({1: (L**-1).scale(Fraction(1, 2))})


def test_power_zero_is_one():
    A = GwaPresentation.quantum(3, h)
    assert power(A, GwaElement.x(A), 0) == GwaElement.scalar(A, 1)


@settings(max_examples=40, deadline=None)
@given(quantum_q, polys(min_degree=1, max_degree=3), st.integers(0, 10**6))
def test_associativity_random(q, a, seed):
    A = GwaPresentation(q, Fraction(1, 2), a)
    rng = seeded(seed)
    u, v, w = (rand_element(rng, A) for _ in range(3))
    assert multiply(A, multiply(A, u, v), w) == multiply(A, u, multiply(A, v, w))


@settings(max_examples=40, deadline=None)
@given(polys(min_degree=1, max_degree=3), st.integers(0, 10**6))
def test_distributivity_classical(a, seed):
    A = GwaPresentation.classical(a, 2)
    rng = seeded(seed)
    u, v, w = (rand_element(rng, A) for _ in range(3))
    assert multiply(A, u, v + w) == multiply(A, u, v) + multiply(A, u, w)


def test_normality_examples():
    A = GwaPresentation.quantum(2, h**2 + 1)
    assert normality_witness(A, GwaElement({0: 3 * h**2})).normal
    bad = normality_witness(A, GwaElement({0: h + 1}))
    assert not bad.normal and bad.refutation
    M = GwaPresentation.quantum(2, h**2)
    assert normality_witness(M, GwaElement({1: h})).normal


def test_normality_conjugators_are_correct():
    A = GwaPresentation.quantum(3, h**3 + 2 * h)
    u = GwaElement({0: 5 * h**4})
    v = normality_witness(A, u)
    for name, g in (("x", GwaElement.x(A)), ("y", GwaElement.y(A)), ("h", GwaElement.h(A))):
        assert multiply(A, u, g) == multiply(A, v.conjugators[name], u)


def test_normality_rejects_mixed_degree_and_bad_inputs():
    A = GwaPresentation.quantum(2, h**2 + 1)
    mixed = GwaElement({0: h, 1: Poly.constant(1)})
    assert not normality_witness(A, mixed).normal
    with pytest.raises(InvalidArgument):
        normality_witness(A, GwaElement({}))
    with pytest.raises(Unsupported):
        normality_witness(GwaPresentation.classical(h), GwaElement({0: h}))
