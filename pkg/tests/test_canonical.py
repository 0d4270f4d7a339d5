from fractions import Fraction

import pytest
from hypothesis import given

from gwa import canonical as C
from gwa.errors import InvalidArgument
from gwa.exactpoly import Poly
from helpers import fractions, polys

h = Poly.h()
a = h**2 - 3 * h + 7


def test_three_branches():
    assert C.canonicalize(1, 0, a).variant is C.Variant.COMMUTATIVE
    cl = C.canonicalize(1, 2, a)
    assert cl.variant is C.Variant.CLASSICAL and cl.a == a(2 * h)
    qu = C.canonicalize(3, 1, a)
    assert qu.variant is C.Variant.QUANTUM and qu.a == a(h + Fraction(1, 2))


def test_rejects_q_zero_and_zero_a():
    with pytest.raises(InvalidArgument):
        C.canonicalize(0, 1, a)
    with pytest.raises(InvalidArgument):
        C.canonicalize(2, 1, Poly.constant(0))


@given(fractions.filter(bool), fractions, polys(min_degree=1))
def test_original_is_recovered(q, h0, p):
    c = C.canonicalize(q, h0, p)
    assert c.original() == p


def test_fraction_field_classes():
    weyl = C.fraction_field_class(C.canonicalize(1, 5, a))
    assert weyl.kind is C.FieldKind.WEYL1
    assert weyl.e_value is C.EValue.ALL_OF_K and weyl.g_description == "Trivial"
    skew = C.fraction_field_class(C.canonicalize(2, 0, a))
    assert skew.e_value is C.EValue.ZERO_ONLY
    assert skew.g_description == ("CyclicGeneratedBy", 2)
    comm = C.fraction_field_class(C.canonicalize(1, 0, a))
    assert comm.kind is C.FieldKind.COMMUTATIVE_RATIONAL


def test_rational_equivalence_check():
    weyl = C.FractionFieldClass(C.FieldKind.WEYL1)
    s2 = C.FractionFieldClass(C.FieldKind.QUANTUM_SKEW, Fraction(2))
    s_half = C.FractionFieldClass(C.FieldKind.QUANTUM_SKEW, Fraction(1, 2))
    s3 = C.FractionFieldClass(C.FieldKind.QUANTUM_SKEW, Fraction(3))
    assert C.rational_equivalence_check(weyl, s2).label == "Incompatible"
    assert C.rational_equivalence_check(s2, s_half).label == "CompatibleNecessary"
    assert not C.rational_equivalence_check(s2, s3)


def test_same_cyclic_group():
    assert C.same_cyclic_group(2, Fraction(1, 2))
    assert not C.same_cyclic_group(2, 4)
    assert not C.same_cyclic_group(2, 3)
    assert C.same_cyclic_group(-1, -1) and not C.same_cyclic_group(1, -1)
