"""Rank-1 and rank-2 Drinfeld modules over A = F_q[T].

A module is stored by the tau-coefficients of phi_T beyond the constant term;
the constant is always T itself (generic characteristic, gamma the inclusion
of A into its fraction field).  Reductions at primes build the
finite-characteristic picture over the residue field.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    NotGoodReduction,
    WrongRank,
    ZeroJInvariant,
    ZeroPolynomial,
)
from .fields import FieldCtx
from .polys import POS_INF, Poly, PrimeIdeal, factor, gcd, valuation
from .residues import ResidueRing
from .skew import PolyCoefficients, ResidueCoefficients, SkewPoly, ht_deg, skew_mul


class DrinfeldModule:
    """phi_T = T + g_1 tau (+ g_2 tau^2); g_i are the stored coefficients."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs):
        gs = [c if isinstance(c, Poly) else Poly.constant(ctx, c)
              for c in coeffs]
        if len(gs) not in (1, 2):
            raise WrongRank(f"rank must be 1 or 2, got {len(gs)}")
        for g in gs:
            if g.ctx != ctx:
                raise WrongRank("coefficient over a different field")
        if gs[-1].is_zero():
            raise ZeroPolynomial("leading coefficient of phi_T must be nonzero")
        self.ctx = ctx
        self.coeffs = tuple(gs)

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    @property
    def g1(self) -> Poly:
        return self.coeffs[0]

    @property
    def g2(self) -> Poly:
        if self.rank != 2:
            raise WrongRank("g2 exists only in rank 2")
        return self.coeffs[1]

    def phi_T(self) -> SkewPoly:
        ring = PolyCoefficients(self.ctx)
        return SkewPoly(ring, (Poly.T(self.ctx),) + self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, DrinfeldModule) and self.ctx == other.ctx
                and self.coeffs == other.coeffs)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        parts = ["T"] + [f"({g!r})t^{i + 1}"
                         for i, g in enumerate(self.coeffs)]
        return "DrinfeldModule(" + " + ".join(parts) + ")"


def carlitz_module(ctx: FieldCtx) -> DrinfeldModule:
    """The rank-1 module with phi_T = T + tau."""
    return DrinfeldModule(ctx, [Poly.one(ctx)])


def carlitz_det_module(ctx: FieldCtx, g1: Poly, g2: Poly) -> DrinfeldModule:
    """Rank-2 module T + g1*tau - g2^(q-1)*tau^2.

    The leading coefficient is minus a (q-1)-th power, which makes the
    determinant side isomorphic to the Carlitz module over F.
    """
    if g2.is_zero():
        raise ZeroPolynomial("g2 must be nonzero")
    lead = -(g2 ** (ctx.q - 1))
    return DrinfeldModule(ctx, [g1, lead])


def phi_of(phi: DrinfeldModule, a) -> SkewPoly:
    """phi_a over A by Horner on the coefficients of a."""
    ctx = phi.ctx
    if not isinstance(a, Poly):
        a = Poly.constant(ctx, a)
    ring = PolyCoefficients(ctx)
    if a.is_zero():
        return SkewPoly.zero(ring)
    phi_t = phi.phi_T()
    acc = SkewPoly.constant(ring, a.coefficient(len(a.coeffs) - 1))
    for i in range(len(a.coeffs) - 2, -1, -1):
        acc = skew_mul(acc, phi_t) + SkewPoly.constant(ring, a.coefficient(i))
    return acc


class ReducedModule:
    """phi with coefficients reduced into the residue field at a prime."""

    __slots__ = ("ring", "rc", "coeffs", "prime")

    def __init__(self, phi: DrinfeldModule, prime: PrimeIdeal):
        self.prime = prime
        self.ring = ResidueRing(prime.gen)
        self.rc = ResidueCoefficients(self.ring)
        self.coeffs = tuple(self.ring.element(g) for g in
                            (Poly.T(phi.ctx),) + phi.coeffs)

    @property
    def is_good(self) -> bool:
        return not self.coeffs[-1].is_zero()

    def phi_T(self) -> SkewPoly:
        return SkewPoly(self.rc, self.coeffs)

    def of(self, a) -> SkewPoly:
        if not isinstance(a, Poly):
            a = Poly.constant(self.ring.ctx, a)
        if a.is_zero():
            return SkewPoly.zero(self.rc)
        phi_t = self.phi_T()
        acc = SkewPoly.constant(self.rc, a.coefficient(len(a.coeffs) - 1))
        for i in range(len(a.coeffs) - 2, -1, -1):
            acc = skew_mul(acc, phi_t) + SkewPoly.constant(
                self.rc, a.coefficient(i))
        return acc

    def act(self, a: Poly, x):
        """Evaluate the linearized polynomial phi_a at a residue x."""
        f = self.of(a)
        q = self.ring.ctx.q
        acc = self.ring.zero
        for i, c in enumerate(f.coeffs):
            if not c.is_zero():
                acc = acc + c * x ** (q ** i)
        return acc


def reduce_module(phi: DrinfeldModule, prime: PrimeIdeal) -> ReducedModule:
    return ReducedModule(phi, prime)


def j_invariant(phi: DrinfeldModule) -> tuple[Poly, Poly]:
    """(numerator, denominator) of g_1^(q+1)/g_2, reduced, monic denominator."""
    if phi.rank != 2:
        raise WrongRank("j-invariant needs rank 2")
    ctx = phi.ctx
    num = phi.g1 ** (ctx.q + 1)
    den = phi.g2
    if num.is_zero():
        return Poly.zero(ctx), Poly.one(ctx)
    g = gcd(num, den)
    num, den = num // g, den // g
    inv = den.lead().inverse()
    return num * inv, den * inv


def valuation_of_j(phi: DrinfeldModule, lam: PrimeIdeal):
    """nu_lambda of the j-invariant; POS_INF when j = 0."""
    if phi.rank != 2:
        raise WrongRank("j-invariant needs rank 2")
    num, den = j_invariant(phi)
    if num.is_zero():
        return POS_INF
    return valuation(num, lam) - valuation(den, lam)


class ReductionData:
    """Reduction kind and height of a module at one prime."""

    __slots__ = ("prime", "kind", "height")

    def __init__(self, prime: PrimeIdeal, kind: str, height):
        self.prime = prime
        self.kind = kind
        self.height = height

    def __repr__(self):
        return f"ReductionData({self.prime!r}, {self.kind}, H={self.height})"


def reduction_type(phi: DrinfeldModule, lam: PrimeIdeal) -> ReductionData:
    """Classify the reduction at lam: good, stable of rank 1, or unstable.

    Good means the leading coefficient is a lam-unit.  The rank-2 stable
    detection implements the valuation-normalized twist: k = nu(g_1)/(q-1)
    must be a nonnegative integer leaving the twisted leading coefficient
    with positive valuation.  Anything else reports unstable.
    """
    if phi.rank == 1:
        if valuation(phi.g1, lam) == 0:
            return ReductionData(lam, "good", reduction_height(phi, lam))
        return ReductionData(lam, "unstable", None)
    q = phi.ctx.q
    nu_lead = valuation(phi.g2, lam)
    if nu_lead == 0:
        return ReductionData(lam, "good", reduction_height(phi, lam))
    if phi.g1.is_zero():
        return ReductionData(lam, "unstable", None)
    nu_g1 = valuation(phi.g1, lam)
    if nu_g1 % (q - 1) != 0:
        return ReductionData(lam, "unstable", None)
    k = nu_g1 // (q - 1)
    if nu_lead - k * (q * q - 1) <= 0:
        return ReductionData(lam, "unstable", None)
    g1_twisted = phi.g1 if k == 0 else phi.g1 // lam.gen ** (k * (q - 1))
    rank1 = DrinfeldModule(phi.ctx, [g1_twisted])
    red = reduce_module(rank1, lam)
    lam_image = red.of(lam.gen)
    ht, _ = ht_deg(lam_image)
    height = ht // lam.degree
    return ReductionData(lam, "stable_rank_1", height)


def reduction_height(phi: DrinfeldModule, lam: PrimeIdeal) -> int:
    """ht_tau of the reduction of phi_lambda divided by deg(lambda)."""
    red = reduce_module(phi, lam)
    if not red.is_good:
        raise NotGoodReduction(f"{phi!r} has bad reduction at {lam!r}")
    image = red.of(lam.gen)
    ht, _ = ht_deg(image)
    if ht % lam.degree != 0:
        raise AssertionError("tau-height not divisible by the prime degree")
    return ht // lam.degree


def e_phi(phi: DrinfeldModule, lam: PrimeIdeal, a: Poly) -> int:
    """Order of nu_lambda(j)/((q-1) N(a)) in Q/Z: the reduced denominator."""
    if phi.rank != 2:
        raise WrongRank("e_phi is for rank 2")
    if not a.is_monic():
        raise ValueError("the level polynomial must be monic")
    nu = valuation_of_j(phi, lam)
    if nu is POS_INF:
        raise ZeroJInvariant("e_phi needs a nonzero j-invariant")
    q = phi.ctx.q
    deg_a = len(a.coeffs) - 1
    return Fraction(nu, (q - 1) * q ** deg_a).denominator


class NewtonPolygonReport:
    """Lower-hull segments of phi_p(x)/x as (root valuation, length) pairs."""

    __slots__ = ("prime", "segments")

    def __init__(self, prime: PrimeIdeal, segments):
        self.segments = tuple((Fraction(s), int(l)) for s, l in segments)
        self.prime = prime

    @property
    def total_length(self) -> int:
        return sum(l for _, l in self.segments)

    def __eq__(self, other):
        return (isinstance(other, NewtonPolygonReport)
                and self.prime == other.prime
                and self.segments == other.segments)

    def __repr__(self):
        return f"NewtonPolygon({self.prime!r}, {list(self.segments)})"


def newton_polygon(phi: DrinfeldModule, p: PrimeIdeal) -> NewtonPolygonReport:
    """Valuations of the p-torsion: hull of (q^i - 1, nu_p(c_i)) for the
    coefficients c_i of phi_p; slopes are reported negated (root valuations),
    in hull order."""
    red = reduce_module(phi, p)
    if not red.is_good:
        raise NotGoodReduction(f"bad reduction at {p!r}")
    q = phi.ctx.q
    f = phi_of(phi, p.gen)
    points = []
    for i, c in enumerate(f.coeffs):
        if not c.is_zero():
            points.append((q ** i - 1, valuation(c, p)))
    hull = _lower_hull(points)
    segments = []
    for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
        slope = Fraction(y1 - y0, x1 - x0)
        segments.append((-slope, x1 - x0))
    return NewtonPolygonReport(p, segments)


def _lower_hull(points):
    hull = []
    for pt in points:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            # pop if the middle point is not strictly below the chord
            if (y1 - y0) * (pt[0] - x1) >= (pt[1] - y1) * (x1 - x0):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def carlitz_twist_witness(h: Poly):
    """g in A with g^(q-1) = h, or None when no such g exists."""
    if h.is_zero():
        raise ZeroPolynomial("witness search needs a nonzero input")
    ctx = h.ctx
    q = ctx.q
    if not h.is_monic():
        return None
    deg_h = len(h.coeffs) - 1
    if deg_h % (q - 1) != 0:
        return None
    if deg_h == 0:
        return Poly.one(ctx)
    g = Poly.one(ctx)
    for prime, mult in factor(h):
        if mult % (q - 1) != 0:
            return None
        g = g * prime.gen ** (mult // (q - 1))
    if g ** (q - 1) != h:
        return None
    return g
