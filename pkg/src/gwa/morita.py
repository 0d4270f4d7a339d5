"""Simplicity criteria and Morita-equivalence conditions.

Everything here is exact.  Integer-shift and ``q``-power scans are made
finite with Cauchy root bounds: two roots of modulus at most ``B`` differ by
at most ``2B``, and a ratio of roots lies between ``Rmin/Rmax`` and
``Rmax/Rmin``.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations
from math import floor

from . import canonical as _canon
from .core import GwaPresentation
from .errors import Inapplicable, InvalidArgument, Unsupported
from .exactpoly import (Fraction, Poly, as_fraction,
                        cauchy_root_bound, compose_affine, poly_gcd,
                        power_exponent, squarefree_decompose)


@dataclass(frozen=True)
class SimplicityCertificate:
    simple: bool
    reason: str
    m: int = None
    repeated_factor: Poly = None

    def __bool__(self):
        return self.simple


def _repeated_factor(a):
    g = poly_gcd(a, a.derivative())
    return g if g.degree >= 1 else None


def is_simple_classical(a):
    """Simplicity of ``k[h](sigma_cl, a)``: simple roots, no integer root gaps."""
    if a.degree < 1:
        raise Unsupported("simplicity test needs a non-constant a")
    rep = _repeated_factor(a)
    if rep is not None:
        return SimplicityCertificate(False, f"repeated root: {rep} divides a and a'",
                                     repeated_factor=rep)
    bound = floor(2 * cauchy_root_bound(a))
    for m in range(1, bound + 1):
        common = poly_gcd(a, compose_affine(a, 1, m))
        if common.degree >= 1:
            return SimplicityCertificate(
                False, f"roots differ by the integer {m} (common factor {common})", m=m)
    return SimplicityCertificate(True, f"simple roots, no integer gaps up to {bound}")


def _q_scan_bound(u, Q):
    """Smallest ``M`` with ``Q**M >= Rmax/Rmin`` (``Q > 1``), computed exactly."""
    rmax = cauchy_root_bound(u)
    # roots of the reciprocal polynomial are 1/root
    recip = Poly({u.degree - k: c for k, c in u.coeffs.items()})
    rmin = 1 / cauchy_root_bound(recip)
    ratio = rmax / rmin
    M, power = 0, Fraction(1)
    while power < ratio:
        power *= Q
        M += 1
    return M


def is_simple_quantum(a, q):
    """Simplicity of ``k[h, 1/h](sigma_q, a)``.

    Requires ``q`` of infinite order, simple roots of the unit part, and no
    two roots with ratio a power of ``q``.
    """
    q = as_fraction(q)
    if isinstance(a, Poly):
        a = a.to_laurent()
    if a.is_zero():
        raise InvalidArgument("a must be nonzero")
    if q in (0, 1, -1):
        return SimplicityCertificate(False, f"q = {q} is a root of unity")
    u = a.unit_part
    if u.degree < 1:
        return SimplicityCertificate(True, "a is a unit: no roots")
    rep = _repeated_factor(u)
    if rep is not None:
        return SimplicityCertificate(False, f"repeated root: {rep} divides a and a'",
                                     repeated_factor=rep)
    Q = abs(q) if abs(q) > 1 else 1 / abs(q)
    M = _q_scan_bound(u, Q)
    for m in range(1, M + 1):
        # roots of u(q^m h) are root/q^m; a common root means root1 = q^m root2
        common = poly_gcd(u, u.scale_var(q**m))
        if common.degree >= 1:
            return SimplicityCertificate(
                False, f"two roots have ratio q^{m} (common factor {common})", m=m)
    return SimplicityCertificate(True, f"simple roots, no q-power ratios up to q^{M}")


# -- Morita necessary conditions --------------------------------------------

class MoritaVerdict(Enum):
    NOT_EQUIVALENT = "NotEquivalent"
    NECESSARY_PASS = "NecessaryConditionsPass"
    SUFFICIENT_MET = "SufficientConditionMet"


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass
class MoritaReport:
    verdict: MoritaVerdict
    checks: list = field(default_factory=list)
    reason: str = ""
    witness: object = None

    def failed(self):
        return [c for c in self.checks if not c.passed]


def _defining_poly(P):
    return P.a.unit_part if P.is_laurent else P.a


def _field_class(P):
    if P.is_laurent:
        return _canon.FractionFieldClass(_canon.FieldKind.QUANTUM_SKEW, P.q)
    return _canon.fraction_field_class(_canon.canonicalize_presentation(P))


def morita_necessary(P1, P2):
    """Run the necessary conditions in order; stop at the first failure."""
    a1, a2 = _defining_poly(P1), _defining_poly(P2)
    if (not P1.is_laurent and a1.degree < 1) or (not P2.is_laurent and a2.degree < 1):
        raise Unsupported("Morita checks need non-constant defining polynomials")
    f1, f2 = _field_class(P1), _field_class(P2)
    checks = []

    def done(verdict, reason):
        return MoritaReport(verdict, checks, reason)

    same_kind = f1.kind is f2.kind
    checks.append(Check("fraction-field class", same_kind, f"{f1} vs {f2}"))
    if not same_kind:
        return done(MoritaVerdict.NOT_EQUIVALENT,
                    "fraction fields are not isomorphic (E/G invariants differ)")
    if f1.kind is _canon.FieldKind.COMMUTATIVE_RATIONAL:
        raise Unsupported("commutative presentations are not covered")
    if f1.kind is _canon.FieldKind.QUANTUM_SKEW:
        ok = _canon.same_cyclic_group(f1.q, f2.q)
        checks.append(Check("q-group", ok, f"<{f1.q}> vs <{f2.q}>"))
        if not ok:
            return done(MoritaVerdict.NOT_EQUIVALENT, "G invariants differ")
    ok = a1.degree == a2.degree
    checks.append(Check("deg(a)", ok, f"{a1.degree} vs {a2.degree}"))
    if not ok:
        return done(MoritaVerdict.NOT_EQUIVALENT, "degrees of a differ")
    g1 = poly_gcd(a1, a1.derivative()).degree if a1.degree >= 1 else 0
    g2 = poly_gcd(a2, a2.derivative()).degree if a2.degree >= 1 else 0
    ok = g1 == g2
    checks.append(Check("deg(gcd(a, a'))", ok, f"{g1} vs {g2}"))
    if not ok:
        return done(MoritaVerdict.NOT_EQUIVALENT, "degrees of gcd(a, a') differ")
    if P1.is_laurent and P2.is_laurent and is_simple_quantum(P1.a, P1.q) \
            and is_simple_quantum(P2.a, P2.q):
        ok = P2.q in (P1.q, 1 / P1.q)
        checks.append(Check("q2 = q1^(+-1)", ok, f"{P2.q} vs {P1.q}"))
        if not ok:
            return done(MoritaVerdict.NOT_EQUIVALENT, "simple pair with q2 != q1^(+-1)")
    return done(MoritaVerdict.NECESSARY_PASS,
                "all necessary conditions hold (no equivalence is claimed)")


# -- degree two (Hodges) ------------------------------------------------------

@dataclass(frozen=True)
class QuadraticRootGap:
    """Root difference ``rational_part + coefficient*sqrt(radicand)``.

    The radicand is a square-free integer other than 1; it is negative when
    the roots are complex conjugates.
    """

    rational_part: Fraction
    radical_part: tuple = None

    @classmethod
    def of(cls, a):
        if a.degree != 2:
            raise InvalidArgument("QuadraticRootGap needs a degree-2 polynomial")
        disc = a.coeff(1) ** 2 - 4 * a.coeff(2) * a.coeff(0)
        if disc == 0:
            raise Inapplicable("repeated root: the degree-2 criterion needs distinct roots")
        c, d = squarefree_decompose(disc)
        c = c / a.coeff(2)
        if d == 1:
            return cls(c)
        return cls(Fraction(0), (c, d))

    def __str__(self):
        if self.radical_part is None:
            return str(self.rational_part)
        c, d = self.radical_part
        return f"{c}*sqrt({d})"


def _is_integer(x):
    return x.denominator == 1


def hodges_morita_deg2(a1, a2):
    """Degree-2 classical criterion: ``gap1 = eps*gap2 + m`` with ``m`` an integer."""
    if a1.degree != 2 or a2.degree != 2:
        raise InvalidArgument("hodges_morita_deg2 needs two degree-2 polynomials")
    g1, g2 = QuadraticRootGap.of(a1), QuadraticRootGap.of(a2)
    if (g1.radical_part is None) != (g2.radical_part is None):
        return False
    if g1.radical_part is None:
        return any(_is_integer(g1.rational_part - e * g2.rational_part) for e in (1, -1))
    (c1, d1), (c2, d2) = g1.radical_part, g2.radical_part
    if d1 != d2 or abs(c1) != abs(c2):
        return False
    return _is_integer(g1.rational_part - g2.rational_part)


# -- degree >= 3 sufficient condition ----------------------------------------

class Mode(Enum):
    CLASSICAL = "classical"
    QUANTUM = "quantum"


@dataclass(frozen=True)
class MoritaWitness:
    tau: tuple
    m: tuple


def morita_sufficient(roots1, roots2, mode=Mode.CLASSICAL, q=None):
    """Search for ``tau`` and integers ``m_i`` matching the two root lists.

    Classical: ``roots1[i] = roots2[tau(i)] + m_i``.
    Quantum: ``roots1[i] = q**m_i * roots2[tau(i)]``.
    Both root lists must define algebras passing the matching simplicity
    test; otherwise :class:`Inapplicable` is raised.
    """
    r1 = [as_fraction(r) for r in roots1]
    r2 = [as_fraction(r) for r in roots2]
    mode = Mode(mode)
    n = len(r1)
    if len(r2) != n or not 3 <= n <= 8:
        raise Unsupported("morita_sufficient needs two root lists of equal size in [3, 8]")
    if mode is Mode.QUANTUM:
        q = as_fraction(q)
        if q in (0, 1, -1):
            raise Unsupported(f"quantum mode needs q not a root of unity (q = {q})")
        if 0 in r1 or 0 in r2:
            raise Inapplicable("quantum roots must be nonzero")
        for r in (r1, r2):
            cert = is_simple_quantum(Poly.from_roots(r), q)
            if not cert:
                raise Inapplicable(f"simplicity criterion fails: {cert.reason}")

        def exponent(x, y):
            return power_exponent(q, x / y)
    else:
        for r in (r1, r2):
            cert = is_simple_classical(Poly.from_roots(r))
            if not cert:
                raise Inapplicable(f"simplicity criterion fails: {cert.reason}")

        def exponent(x, y):
            d = x - y
            return int(d) if _is_integer(d) else None

    table = [[exponent(r1[i], r2[j]) for j in range(n)] for i in range(n)]
    for tau in permutations(range(n)):
        ms = [table[i][tau[i]] for i in range(n)]
        if all(m is not None for m in ms):
            return MoritaWitness(tuple(tau), tuple(ms))
    return None


def presentation_from_roots(roots, mode=Mode.CLASSICAL, q=None):
    """The GWA whose defining polynomial has the given roots."""
    a = Poly.from_roots(roots)
    if Mode(mode) is Mode.QUANTUM:
        return GwaPresentation.laurent(q, a.to_laurent())
    return GwaPresentation.classical(a)


def morita_report(P1, P2):
    """Necessary checks, then the degree-2 criterion for classical pairs.

    In degree 2 with distinct roots the criterion is an equivalence, so the
    report is either NotEquivalent or SufficientConditionMet there.
    """
    report = morita_necessary(P1, P2)
    if report.verdict is not MoritaVerdict.NECESSARY_PASS:
        return report
    c1 = _canon.canonicalize_presentation(P1)
    c2 = _canon.canonicalize_presentation(P2)
    classical = _canon.Variant.CLASSICAL
    if c1.variant is c2.variant is classical and c1.a.degree == c2.a.degree == 2:
        try:
            ok = hodges_morita_deg2(c1.a, c2.a)
        except Inapplicable as exc:
            report.checks.append(Check("degree-2 root gap", True, f"not applicable: {exc}"))
            return report
        gaps = f"{QuadraticRootGap.of(c1.a)} vs {QuadraticRootGap.of(c2.a)}"
        report.checks.append(Check("degree-2 root gap", ok, gaps))
        if ok:
            return MoritaReport(MoritaVerdict.SUFFICIENT_MET, report.checks,
                                "root gaps agree up to sign and an integer", gaps)
        return MoritaReport(MoritaVerdict.NOT_EQUIVALENT, report.checks,
                            "root gaps differ beyond sign and integer shift")
    return report
