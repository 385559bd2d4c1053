"""Box counts for the congruence family behind the positive-density result.

W(X) is the height-bounded coefficient box; S(X) the sub-family cut out by
the two congruences fixing the behaviour at (T - c_1) and (T - c_2).  All
ratios are exact rationals; formula mode evaluates closed forms, brute mode
enumerates and filters.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BruteCapExceeded, ParamsOutOfRange
from .fields import FieldCtx, FqElement
from .polys import Poly, eval_at

DEFAULT_BRUTE_CAP = 1_000_000


class CensusParams:
    """Height weights (d1, d2), box size X and the congruence data for S."""

    __slots__ = ("ctx", "d1", "d2", "X", "c1", "c2", "b1", "b2")

    def __init__(self, ctx: FieldCtx, d1: int, d2: int, X: int,
                 c1: FqElement | None = None, c2: FqElement | None = None,
                 b1: Poly | None = None, b2: Poly | None = None):
        if d1 < 1 or d2 < 1:
            raise ParamsOutOfRange("height weights must be positive")
        if X < 1:
            raise ParamsOutOfRange("X must be a positive integer")
        self.ctx = ctx
        self.d1 = d1
        self.d2 = d2
        self.X = X
        if c1 is not None or c2 is not None or b1 is not None or b2 is not None:
            if c1 is None or c2 is None or b1 is None or b2 is None:
                raise ParamsOutOfRange(
                    "congruence data needs all of c1, c2, b1, b2")
            if c1 == c2:
                raise ParamsOutOfRange("c1 and c2 must differ")
            _validate_class(ctx, c1, c2, b1, b2)
        self.c1 = c1
        self.c2 = c2
        self.b1 = b1
        self.b2 = b2

    def with_X(self, X: int) -> "CensusParams":
        return CensusParams(self.ctx, self.d1, self.d2, X, self.c1, self.c2,
                            self.b1, self.b2)


def _lin(ctx: FieldCtx, c: FqElement) -> Poly:
    return Poly.T(ctx) - Poly.constant(ctx, c)


def _validate_class(ctx, c1, c2, b1, b2):
    l1, l2 = _lin(ctx, c1), _lin(ctx, c2)
    if not (b1.degree < 2 and b2.degree < 3):
        raise ParamsOutOfRange("class representatives must have deg b1 < 2, "
                               "deg b2 < 3")
    if not (b1 % l1).is_zero() or eval_at(b1, c2).is_zero():
        raise ParamsOutOfRange(
            "b1 must be divisible by T-c1 and coprime to T-c2")
    div_once = (b2 % l2).is_zero() and not (b2 % (l2 * l2)).is_zero()
    if not div_once or eval_at(b2, c1).is_zero():
        raise ParamsOutOfRange(
            "b2 must be exactly divisible by T-c2 and coprime to T-c1")


def valid_congruence_classes(ctx: FieldCtx, c1: FqElement, c2: FqElement):
    """All (b1, b2) pairs admitted by the proof, lexicographic order."""
    if c1 == c2:
        raise ParamsOutOfRange("c1 and c2 must differ")
    l1, l2 = _lin(ctx, c1), _lin(ctx, c2)
    b1s = []
    for beta in ctx.elements():
        if beta.val != 0:
            b1s.append(l1 * beta)
    b2s = []
    q = ctx.q
    for idx in range(q * q):
        e = Poly(ctx, [idx % q, idx // q])
        if eval_at(e, c1).is_zero() or eval_at(e, c2).is_zero():
            continue
        b2s.append(l2 * e)
    return [(b1, b2) for b1 in b1s for b2 in b2s]


def default_congruence_class(ctx: FieldCtx, c1: FqElement, c2: FqElement):
    """The lexicographically first valid (b1, b2) pair."""
    return valid_congruence_classes(ctx, c1, c2)[0]


def _all_polys_below(ctx: FieldCtx, deg_bound: int):
    """Every polynomial of degree < deg_bound (including zero)."""
    q = ctx.q
    for idx in range(q ** deg_bound):
        coeffs = []
        v = idx
        for _ in range(deg_bound):
            coeffs.append(v % q)
            v //= q
        yield Poly(ctx, coeffs)


def count_W(params: CensusParams, mode: str = "formula",
            cap: int = DEFAULT_BRUTE_CAP) -> int:
    """#W(X) = q^(d1 X) (q^(d2 X) - 1): pairs with g2 nonzero in the box."""
    q = params.ctx.q
    n1, n2 = params.d1 * params.X, params.d2 * params.X
    if mode == "formula":
        return q ** n1 * (q ** n2 - 1)
    if mode != "brute":
        raise ValueError(f"unknown mode {mode!r}")
    if q ** n1 * q ** n2 > cap:
        raise BruteCapExceeded(f"{q}^{n1 + n2} pairs exceed cap {cap}")
    count = 0
    for g1 in _all_polys_below(params.ctx, n1):
        for g2 in _all_polys_below(params.ctx, n2):
            if not g2.is_zero():
                count += 1
    return count


def _s_degree_bounds(params: CensusParams):
    q = params.ctx.q
    n1 = params.d1 * params.X
    # the proof's displayed bound: deg(g2) < d2 X / (q-1)
    n2_frac = Fraction(params.d2 * params.X, q - 1)
    return n1, n2_frac


def count_S(params: CensusParams, mode: str = "formula",
            cap: int = DEFAULT_BRUTE_CAP, all_classes: bool = False,
            g2_deg_bound: int | None = None) -> int:
    """#S(X) = q^(d1 X + d2 X/(q-1) - 5) for one congruence class.

    Formula mode needs both degree floors integral and >= 3 (the proof's
    range).  Brute mode enumerates the box and filters the congruences;
    g2_deg_bound overrides the g2 box when the slot-degree reading is wanted.
    all_classes sums over every valid (b1, b2) pair.
    """
    if params.b1 is None:
        raise ParamsOutOfRange("count_S needs congruence data")
    ctx = params.ctx
    q = ctx.q
    n1, n2_frac = _s_degree_bounds(params)
    if mode == "formula":
        if n1 < 3 or n2_frac < 3 or n2_frac.denominator != 1:
            raise ParamsOutOfRange(
                "formula mode needs d1 X and d2 X/(q-1) integral and >= 3")
        n2 = int(n2_frac)
        per_class = q ** (n1 - 2) * q ** (n2 - 3)
        if all_classes:
            return per_class * len(
                valid_congruence_classes(ctx, params.c1, params.c2))
        return per_class
    if mode != "brute":
        raise ValueError(f"unknown mode {mode!r}")
    if g2_deg_bound is None:
        # coefficient slots for deg(g2) strictly below the rational bound
        n2 = int(n2_frac) if n2_frac.denominator == 1 else int(n2_frac) + 1
    else:
        n2 = g2_deg_bound
    if q ** n1 * q ** n2 > cap:
        raise BruteCapExceeded(f"{q}^{n1 + n2} pairs exceed cap {cap}")
    l1, l2 = _lin(ctx, params.c1), _lin(ctx, params.c2)
    m1 = l1 * l2
    m2 = l1 * l2 * l2
    classes = ([(params.b1, params.b2)] if not all_classes
               else valid_congruence_classes(ctx, params.c1, params.c2))
    g1_pool = list(_all_polys_below(ctx, n1))
    g2_pool = list(_all_polys_below(ctx, n2))
    total = 0
    for b1, b2 in classes:
        r1 = b1 % m1
        r2 = b2 % m2
        c1_count = sum(1 for g1 in g1_pool if g1 % m1 == r1)
        c2_count = sum(1 for g2 in g2_pool if g2 % m2 == r2)
        total += c1_count * c2_count
    return total


def density_table(params: CensusParams, xs) -> list:
    """(X, #S(X)/#W(X)) as exact rationals for each X in the sweep."""
    out = []
    for x in xs:
        p = params.with_X(x)
        ratio = Fraction(count_S(p, "formula"), count_W(p, "formula"))
        out.append((x, ratio))
    return out


def density_closed_form(params: CensusParams) -> Fraction:
    """q^-5 * q^(d2 X (1/(q-1) - 1)) / (1 - q^(-d2 X)) as an exact rational."""
    q = params.ctx.q
    d2x = params.d2 * params.X
    expo = Fraction(d2x, q - 1) - d2x
    if expo.denominator != 1:
        raise ParamsOutOfRange("closed form needs d2 X divisible by q-1")
    num = Fraction(q) ** int(expo)
    return Fraction(1, q ** 5) * num / (1 - Fraction(1, q ** d2x))
