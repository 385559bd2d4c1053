"""Frobenius characteristic polynomials of rank-2 modules at good primes.

The pair (a, b) with X^2 - aX + b is produced by the norm formula for b and,
at general primes, an F_q-linear solve for a; two independent oracles (the
defining identity in the twisted ring, and the characteristic ideal of the
induced T-action on the residue field) cross-validate every output.
"""

from __future__ import annotations

from .drinfeld import DrinfeldModule, reduce_module
from .errors import (
    BruteCapExceeded,
    InternalInconsistency,
    NotCoprime,
    NotGoodReduction,
    ParamsOutOfRange,
    WrongDegree,
    WrongRank,
)
from .fields import FqElement
from .polys import (
    DEFAULT_ENUMERATION_CAP,
    Poly,
    PrimeIdeal,
    enumerate_monic_irreducibles,
    eval_at,
    gcd,
)
from .residues import ResidueRing, norm_to_base
from .skew import SkewPoly, linear_solve_left, skew_mul

DEFAULT_BRUTE_CAP = 5 ** 4


class FrobCharpoly:
    """X^2 - aX + b for the Frobenius at one good prime."""

    __slots__ = ("prime", "a", "b")

    def __init__(self, prime: PrimeIdeal, a: Poly, b: Poly):
        if not a.is_zero() and 2 * (len(a.coeffs) - 1) > prime.degree:
            raise WrongDegree("trace degree exceeds deg(prime)/2")
        quot, rem = divmod(b, prime.gen)
        if not rem.is_zero() or len(quot.coeffs) != 1:
            raise WrongDegree("the determinant must be a unit times the prime")
        self.prime = prime
        self.a = a
        self.b = b

    @property
    def unit(self) -> FqElement:
        """b divided by the monic prime generator."""
        return (self.b // self.prime.gen).coefficient(0)

    def __eq__(self, other):
        return (isinstance(other, FrobCharpoly) and self.prime == other.prime
                and self.a == other.a and self.b == other.b)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return f"FrobCharpoly(X^2 - ({self.a!r})X + ({self.b!r}))"


def _require_rank2(phi: DrinfeldModule):
    if phi.rank != 2:
        raise WrongRank("Frobenius charpoly machinery needs rank 2")


def frob_deg1(phi: DrinfeldModule, lam: PrimeIdeal) -> FrobCharpoly:
    """Closed form at a degree-1 prime (T - c): a = -Delta(c)^{-1} g_1(c),
    b = -Delta(c)^{-1} (T - c), Delta the leading coefficient of phi_T."""
    _require_rank2(phi)
    if lam.degree != 1:
        raise WrongDegree(f"{lam!r} does not have degree 1")
    c = -lam.gen.coefficient(0)
    delta_c = eval_at(phi.g2, c)
    if delta_c.is_zero():
        raise NotGoodReduction(f"bad reduction at {lam!r}")
    u = -(delta_c.inverse())
    a = Poly.constant(phi.ctx, u * eval_at(phi.g1, c))
    b = lam.gen * u
    return FrobCharpoly(lam, a, b)


def frob_general(phi: DrinfeldModule, lam: PrimeIdeal) -> FrobCharpoly:
    """Norm formula for b, F_q-linear solve for a, identity check enforced.

    Runs the general route at every degree (no closed-form shortcut), so
    degree-1 agreement with frob_deg1 is a genuine cross-check.
    """
    _require_rank2(phi)
    red = reduce_module(phi, lam)
    if not red.is_good:
        raise NotGoodReduction(f"bad reduction at {lam!r}")
    m = lam.degree
    ctx = phi.ctx
    delta_bar = red.coeffs[2]
    nr = norm_to_base(delta_bar)
    sign_val = 1 if m % 2 == 0 else (-1) % ctx.p
    u = FqElement(ctx, ctx.mul(sign_val, ctx.inv(nr.val)))
    b = lam.gen * u
    phi_b = red.of(b)
    tau_m = SkewPoly.tau(red.rc, m)
    target = SkewPoly.tau(red.rc, 2 * m) + phi_b
    basis = [skew_mul(red.of(Poly.T(ctx) ** i), tau_m)
             for i in range(m // 2 + 1)]
    alphas = linear_solve_left(target, basis)
    a = Poly.from_coeffs(ctx, [al.val for al in alphas])
    cp = FrobCharpoly(lam, a, b)
    if not frob_identity_check(phi, cp):
        raise InternalInconsistency(
            "norm formula and linear solve disagree; this is a bug")
    return cp


def frob_identity_check(phi: DrinfeldModule, cp: FrobCharpoly) -> bool:
    """Whether tau^{2m} - phi_a tau^m + phi_b = 0 over the residue field."""
    _require_rank2(phi)
    lam = cp.prime
    red = reduce_module(phi, lam)
    if not red.is_good:
        raise NotGoodReduction(f"bad reduction at {lam!r}")
    m = lam.degree
    tau_m = SkewPoly.tau(red.rc, m)
    lhs = SkewPoly.tau(red.rc, 2 * m) - skew_mul(red.of(cp.a), tau_m) \
        + red.of(cp.b)
    return lhs.is_zero()


def euler_poincare_oracle(phi: DrinfeldModule, lam: PrimeIdeal,
                          cap: int = DEFAULT_BRUTE_CAP) -> Poly:
    """Characteristic ideal of the induced A-module structure on the residue
    field: the characteristic polynomial of the F_q-linear T-action.

    Independent of the charpoly solve; for rank 2 it must equal the monic
    associate of P(1) = 1 - a + b.
    """
    ctx = phi.ctx
    m = lam.degree
    if ctx.q ** m > cap:
        raise BruteCapExceeded(f"residue field of size {ctx.q}^{m} over cap")
    red = reduce_module(phi, lam)
    if not red.is_good:
        raise NotGoodReduction(f"bad reduction at {lam!r}")
    ring = red.ring
    q = ctx.q
    lin = [(q ** i, c) for i, c in enumerate(red.coeffs) if not c.is_zero()]
    cols = []
    for j in range(m):
        basis_j = ring.element(Poly.T(ctx) ** j)
        img = ring.zero
        for exp, c in lin:
            img = img + c * basis_j ** exp
        rep = img.rep.coeffs
        cols.append([rep[i] if i < len(rep) else 0 for i in range(m)])
    # charpoly det(X I - M) over A by cofactor expansion (m <= 4)
    entries = [[Poly(ctx, (ctx.neg(cols[j][i]),)) for j in range(m)]
               for i in range(m)]
    for i in range(m):
        entries[i][i] = entries[i][i] + Poly.T(ctx)
    return _det(entries)


def _det(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    ctx = mat[0][0].ctx
    total = Poly.zero(ctx)
    for j, top in enumerate(mat[0]):
        if top.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = top * _det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def det_level_check(phi: DrinfeldModule, lam: PrimeIdeal, a_mod: Poly) -> bool:
    """Whether b = det-side Frobenius value is congruent to lam mod a_mod.

    For modules whose leading coefficient is minus a (q-1)-th power this is
    the finite-level determinant comparison with the Carlitz module, where it
    must always hold.
    """
    _require_rank2(phi)
    if not a_mod.is_monic() or len(a_mod.coeffs) - 1 < 1:
        raise NotCoprime("level must be a monic polynomial of degree >= 1")
    if not gcd(lam.gen, a_mod).is_one():
        raise NotCoprime(f"{lam!r} divides the level {a_mod!r}")
    cp = frob_general(phi, lam)
    return ((cp.b - lam.gen) % a_mod).is_zero()


def det_generation_check(p: PrimeIdeal, level: int, max_deg: int,
                         cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """Whether the primes of degree <= max_deg away from p generate the whole
    unit group of A/p^level (the finite shadow of determinant surjectivity)."""
    if level not in (1, 2):
        raise ParamsOutOfRange(f"level {level} unsupported (use 1 or 2)")
    ctx = p.ctx
    ring = ResidueRing(p.gen ** level)
    generators = []
    for d in range(1, max_deg + 1):
        for lam in enumerate_monic_irreducibles(ctx, d, cap):
            if lam != p:
                generators.append(ring.element(lam.gen))
    d = p.degree
    unit_count = ctx.q ** (level * d) - ctx.q ** ((level - 1) * d)
    seen = {ring.one}
    frontier = [ring.one]
    while frontier:
        x = frontier.pop()
        for g in generators:
            y = x * g
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen) == unit_count
