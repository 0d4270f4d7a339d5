"""Canonical forms of degree-one GWAs and their fraction-field classes.

Every ``sigma(h) = q*h - h0`` falls in exactly one of three branches:

* ``(q, h0) = (1, 0)``  - commutative, fraction field ``k(h, x)``;
* ``q = 1, h0 != 0``     - classical, rescale ``h = h0*h'`` to get
  ``sigma(h') = h' - 1`` and fraction field the first Weyl division algebra;
* ``q != 1``             - quantum, shift ``h = h' - h0/(1-q)`` to get
  ``sigma(h') = q*h'`` and fraction field the quantum skew-field.

The Alev-Dumas invariants E and G are read off from the class, never
computed from elements.
"""

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidArgument
from .exactpoly import Fraction, as_fraction, compose_affine, power_exponent


class Variant(Enum):
    COMMUTATIVE = "Commutative"
    CLASSICAL = "Classical"
    QUANTUM = "Quantum"


@dataclass(frozen=True)
class CanonicalClass:
    """Branch, canonical polynomial ``a'`` and the change of variable.

    ``a'(h') = a(scale*h' + shift)``, i.e. ``a' = compose_affine(a, scale, shift)``.
    """

    variant: Variant
    a: object
    q: Fraction
    scale: Fraction
    shift: Fraction

    @property
    def change_of_variable(self):
        return self.scale, self.shift

    def original(self):
        """Recover the input polynomial by undoing the substitution."""
        return compose_affine(self.a, 1 / self.scale, -self.shift / self.scale)


def canonicalize(q, h0, a):
    q, h0 = as_fraction(q), as_fraction(h0)
    if q == 0:
        raise InvalidArgument("q must be nonzero (sigma must be an automorphism)")
    if a.is_zero():
        raise InvalidArgument("defining polynomial a must be nonzero")
    if q == 1 and h0 == 0:
        return CanonicalClass(Variant.COMMUTATIVE, a, q, Fraction(1), Fraction(0))
    if q == 1:
        return CanonicalClass(Variant.CLASSICAL, compose_affine(a, h0, 0), q, h0, Fraction(0))
    shift = -h0 / (1 - q)
    return CanonicalClass(Variant.QUANTUM, compose_affine(a, 1, shift), q, Fraction(1), shift)


def canonicalize_presentation(A):
    if A.is_laurent:
        # sigma(h) = q h already; nothing to shift
        return CanonicalClass(Variant.QUANTUM if A.q != 1 else Variant.COMMUTATIVE,
                              A.a, A.q, Fraction(1), Fraction(0))
    return canonicalize(A.q, A.h0, A.a)


class FieldKind(Enum):
    COMMUTATIVE_RATIONAL = "CommutativeRational"
    WEYL1 = "Weyl1"
    QUANTUM_SKEW = "QuantumSkew"


class EValue(Enum):
    ZERO_ONLY = "ZeroOnly"
    ALL_OF_K = "AllOfK"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class FractionFieldClass:
    kind: FieldKind
    q: Fraction = None

    @property
    def e_value(self):
        return {
            FieldKind.WEYL1: EValue.ALL_OF_K,
            FieldKind.QUANTUM_SKEW: EValue.ZERO_ONLY,
        }.get(self.kind, EValue.NOT_APPLICABLE)

    @property
    def g_description(self):
        """``"Trivial"``, ``("CyclicGeneratedBy", q)`` or ``"NotApplicable"``."""
        if self.kind is FieldKind.WEYL1:
            return "Trivial"
        if self.kind is FieldKind.QUANTUM_SKEW:
            return ("CyclicGeneratedBy", self.q)
        return "NotApplicable"

    def __str__(self):
        if self.kind is FieldKind.QUANTUM_SKEW:
            return f"QuantumSkew({self.q})"
        return self.kind.value


def fraction_field_class(c):
    if c.variant is Variant.COMMUTATIVE:
        return FractionFieldClass(FieldKind.COMMUTATIVE_RATIONAL)
    if c.variant is Variant.CLASSICAL:
        return FractionFieldClass(FieldKind.WEYL1)
    return FractionFieldClass(FieldKind.QUANTUM_SKEW, c.q)


def same_cyclic_group(q1, q2):
    """``<q1> == <q2>`` in ``k*``.

    For rationals of infinite order this means ``q2 = q1**(+-1)``; the test is
    made by membership both ways so it also covers ``q = +-1``.
    """
    q1, q2 = as_fraction(q1), as_fraction(q2)
    if q1 in (1, -1) or q2 in (1, -1):
        # finite groups {1} or {1, -1}
        return q1 == q2
    return power_exponent(q1, q2) is not None and power_exponent(q2, q1) is not None


@dataclass(frozen=True)
class EquivalenceCheck:
    compatible: bool
    reason: str

    def __bool__(self):
        return self.compatible

    @property
    def label(self):
        return "CompatibleNecessary" if self.compatible else "Incompatible"


def rational_equivalence_check(c1, c2):
    """Necessary condition for ``Frac(A1) ~= Frac(A2)``; never a sufficiency claim."""
    if c1.kind is not c2.kind:
        return EquivalenceCheck(False, f"fraction fields differ: {c1} vs {c2} "
                                       "(E/G invariants separate them)")
    if c1.kind is FieldKind.QUANTUM_SKEW and not same_cyclic_group(c1.q, c2.q):
        return EquivalenceCheck(False, f"G invariants differ: <{c1.q}> != <{c2.q}>")
    return EquivalenceCheck(True, f"same class {c1}")
