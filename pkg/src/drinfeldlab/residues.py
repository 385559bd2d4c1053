"""Arithmetic in A/(f): quotient rings of F_q[T] by a monic modulus.

When the modulus is irreducible the ring is the field F_{q^n} and carries the
Euler-criterion square test, the norm down to F_q, and the quadratic
irreducibility test that drives the certificate machinery.  Non-prime moduli
(level p^2 work) support arithmetic only.
"""

from __future__ import annotations

from .errors import NotAField, NotInvertible, RingMismatch
from .fields import FieldCtx, FqElement
from .polys import Poly, gcd, is_irreducible, powmod


class ResidueRing:
    """A/(modulus) for a monic modulus of degree >= 1."""

    __slots__ = ("modulus", "is_prime", "cardinality")

    def __init__(self, modulus: Poly):
        if not modulus.is_monic() or len(modulus.coeffs) - 1 < 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.modulus = modulus
        self.is_prime = is_irreducible(modulus)
        self.cardinality = modulus.ctx.q ** (len(modulus.coeffs) - 1)

    @property
    def ctx(self) -> FieldCtx:
        return self.modulus.ctx

    @property
    def degree(self) -> int:
        return len(self.modulus.coeffs) - 1

    def element(self, value) -> "ResidueElement":
        """Reduce a Poly, FqElement or int into the ring."""
        if isinstance(value, ResidueElement):
            if value.ring != self:
                raise RingMismatch("element from a different residue ring")
            return value
        if isinstance(value, (FqElement, int)):
            value = Poly.constant(self.ctx, value)
        return ResidueElement(self, value % self.modulus)

    @property
    def zero(self) -> "ResidueElement":
        return ResidueElement(self, Poly.zero(self.ctx))

    @property
    def one(self) -> "ResidueElement":
        return ResidueElement(self, Poly.one(self.ctx))

    @property
    def t(self) -> "ResidueElement":
        """The class of T."""
        return self.element(Poly.T(self.ctx))

    def elements(self):
        """All residues, ascending index order (constant digit fastest)."""
        return [self.from_index(i) for i in range(self.cardinality)]

    def from_index(self, idx: int) -> "ResidueElement":
        q, n = self.ctx.q, self.degree
        coeffs = []
        for _ in range(n):
            coeffs.append(idx % q)
            idx //= q
        return ResidueElement(self, Poly(self.ctx, coeffs))

    def index_of(self, x: "ResidueElement") -> int:
        q = self.ctx.q
        idx = 0
        for i, c in enumerate(x.rep.coeffs):
            idx += c * q ** i
        return idx

    def units(self):
        return [x for x in self.elements() if x.is_unit()]

    def __eq__(self, other):
        return isinstance(other, ResidueRing) and self.modulus == other.modulus

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(("ring", self.modulus))

    def __repr__(self):
        return f"ResidueRing(mod {self.modulus!r})"


class ResidueElement:
    """Residue class with its fully reduced representative."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring: ResidueRing, rep: Poly):
        self.ring = ring
        self.rep = rep

    def _same(self, other) -> "ResidueElement":
        if isinstance(other, ResidueElement):
            if other.ring != self.ring:
                raise RingMismatch("elements from different residue rings")
            return other
        if isinstance(other, (int, FqElement, Poly)):
            return self.ring.element(other)
        raise TypeError(f"cannot combine ResidueElement with {type(other)}")

    def __add__(self, other):
        other = self._same(other)
        return ResidueElement(self.ring,
                              (self.rep + other.rep) % self.ring.modulus)

    __radd__ = __add__

    def __neg__(self):
        return ResidueElement(self.ring, (-self.rep) % self.ring.modulus)

    def __sub__(self, other):
        other = self._same(other)
        return ResidueElement(self.ring,
                              (self.rep - other.rep) % self.ring.modulus)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._same(other)
        return ResidueElement(self.ring,
                              (self.rep * other.rep) % self.ring.modulus)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return residue_inv(self) ** (-e)
        return ResidueElement(self.ring,
                              powmod(self.rep, e, self.ring.modulus))

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def is_unit(self) -> bool:
        return gcd(self.rep, self.ring.modulus).is_one()

    def frobenius(self, k: int = 1) -> "ResidueElement":
        """k-fold q-power Frobenius x -> x^(q^k)."""
        return self ** (self.ring.ctx.q ** k)

    def __eq__(self, other):
        if isinstance(other, (int, FqElement, Poly)):
            try:
                other = self.ring.element(other)
            except RingMismatch:
                return False
        return (isinstance(other, ResidueElement) and self.ring == other.ring
                and self.rep == other.rep)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(("residue", self.ring.modulus, self.rep))

    def __repr__(self):
        return f"[{self.rep!r}]"


def residue_arith(op: str, x: ResidueElement, y: ResidueElement) -> ResidueElement:
    """Dispatch one of {add, sub, mul} on two residues."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown op {op!r}")


def residue_inv(x: ResidueElement) -> ResidueElement:
    """Multiplicative inverse; NotInvertible carries the offending gcd."""
    g, u, _ = _xgcd(x.rep, x.ring.modulus)
    if not g.is_one():
        raise NotInvertible(f"{x!r} shares the factor {g!r} with the modulus",
                            gcd=g)
    return ResidueElement(x.ring, u % x.ring.modulus)


def _xgcd(a: Poly, b: Poly):
    """Extended Euclid: returns monic g and u, v with u*a + v*b = g."""
    ctx = a.ctx
    r0, r1 = a, b
    s0, s1 = Poly.one(ctx), Poly.zero(ctx)
    t0, t1 = Poly.zero(ctx), Poly.one(ctx)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lead_inv = r0.lead().inverse()
    return r0 * lead_inv, s0 * lead_inv, t0 * lead_inv


def norm_to_base(x: ResidueElement) -> FqElement:
    """Field norm F_{q^n} -> F_q: the product of the q-power conjugates."""
    ring = x.ring
    if not ring.is_prime:
        raise NotAField("norm needs a prime modulus")
    ctx = ring.ctx
    if x.is_zero():
        return FqElement(ctx, 0)
    q, n = ctx.q, ring.degree
    e = (q ** n - 1) // (q - 1)
    nr = x ** e
    if nr.rep.degree > 0:
        raise AssertionError("norm did not land in the base field")
    return nr.rep.coefficient(0)


def is_square_mod_prime(x: ResidueElement) -> bool:
    """Euler criterion in F_{q^n}; zero counts as a square."""
    ring = x.ring
    if not ring.is_prime:
        raise NotAField("square test needs a prime modulus")
    if x.is_zero():
        return True
    e = (ring.cardinality - 1) // 2
    return (x ** e) == ring.one


def quadratic_is_irreducible(r: FqElement, s: ResidueElement) -> bool:
    """Whether X^2 - r*X + s has no root over the prime residue ring.

    Decided by the discriminant r^2 - 4s: irreducible iff the discriminant
    is a non-square (q odd); a zero discriminant means a double root.
    """
    ring = s.ring
    if not ring.is_prime:
        raise NotAField("quadratic test needs a prime modulus")
    if r.ctx != ring.ctx:
        raise RingMismatch("linear coefficient from a different base field")
    disc = ring.element(r) * ring.element(r) - ring.element(4) * s
    if disc.is_zero():
        return False
    return not is_square_mod_prime(disc)
