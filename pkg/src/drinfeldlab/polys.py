"""Arithmetic and number theory in A = F_q[T].

Polynomials are dense tuples of encoded field values, ascending degree, no
trailing zeros.  The zero polynomial has degree NEG_INF (a sentinel, never a
number); valuation of the zero polynomial is POS_INF.

For prime base fields the hot routines (powmod, gcd, irreducibility) run on
raw int lists, which keeps the degree-4 scans over q = 11 in seconds.
"""

from __future__ import annotations

import random
import re

from .errors import (
    ContextMismatch,
    DegreeCapExceeded,
    DegreeZeroInput,
    DivisionByZero,
    EnumerationCapExceeded,
    NotIrreducibleModulus,
    ZeroPolynomial,
)
from .fields import FieldCtx, FqElement, _vgcd, _vpowmod, _vtrim


class _NegInfType:
    """Degree of the zero polynomial; orders below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __repr__(self):
        return "NEG_INF"


class _PosInfType:
    """Valuation of the zero polynomial; orders above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __repr__(self):
        return "POS_INF"


NEG_INF = _NegInfType()
POS_INF = _PosInfType()

DEFAULT_ENUMERATION_CAP = 10_000_000
DEFAULT_FACTOR_DEGREE_CAP = 512

_FACTOR_SEED = 20240801  # fixed stream: reproducible factorizations


class Poly:
    """Element of A = F_q[T]."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs):
        self.ctx = ctx
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors --

    @classmethod
    def from_coeffs(cls, ctx: FieldCtx, coeffs) -> "Poly":
        enc = []
        for c in coeffs:
            if isinstance(c, FqElement):
                if c.ctx != ctx:
                    raise ContextMismatch("coefficient from a different field")
                enc.append(c.val)
            else:
                enc.append(int(c) % ctx.p)
        return cls(ctx, enc)

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, (1,))

    @classmethod
    def T(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, (0, 1))

    @classmethod
    def constant(cls, ctx: FieldCtx, c) -> "Poly":
        if isinstance(c, FqElement):
            if c.ctx != ctx:
                raise ContextMismatch("constant from a different field")
            return cls(ctx, (c.val,))
        return cls(ctx, (int(c) % ctx.p,))

    # -- basic queries --

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def lead(self) -> FqElement:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return FqElement(self.ctx, self.coeffs[-1])

    def coefficient(self, i: int) -> FqElement:
        v = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return FqElement(self.ctx, v)

    def _same(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise ContextMismatch("polynomials over different fields")
            return other
        if isinstance(other, (FqElement, int)):
            return Poly.constant(self.ctx, other)
        raise TypeError(f"cannot combine Poly with {type(other)}")

    # -- ring operations --

    def __add__(self, other):
        other = self._same(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add(out[i], c)
        return Poly(ctx, out)

    __radd__ = __add__

    def __neg__(self):
        ctx = self.ctx
        return Poly(ctx, [ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._same(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(ctx)
        if ctx.m == 1:
            p = ctx.p
            out = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        out[i + j] = (out[i + j] + ai * bj) % p
        else:
            out = [0] * (len(a) + len(b) - 1)
            add, mul = ctx.add, ctx.mul
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly(ctx, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.ctx)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._same(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        ctx = self.ctx
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        inv_lead = ctx.inv(b[-1])
        q = [0] * max(len(a) - db, 0)
        while len(a) - 1 >= db and a:
            lead = a[-1]
            if lead:
                c = ctx.mul(lead, inv_lead)
                off = len(a) - 1 - db
                q[off] = c
                for k in range(db + 1):
                    a[off + k] = ctx.sub(a[off + k], ctx.mul(c, b[k]))
            else:
                a.pop()
                continue
            a.pop()
            while a and a[-1] == 0:
                a.pop()
        return Poly(ctx, q), Poly(ctx, a)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        if self.is_monic():
            return self
        ctx = self.ctx
        inv = ctx.inv(self.coeffs[-1])
        return Poly(ctx, [ctx.mul(c, inv) for c in self.coeffs])

    def derivative(self) -> "Poly":
        ctx = self.ctx
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(ctx.mul(i % ctx.p, self.coeffs[i]))
        return Poly(ctx, out)

    def shift(self, k: int) -> "Poly":
        """Multiply by T^k."""
        if self.is_zero():
            return self
        return Poly(self.ctx, (0,) * k + self.coeffs)

    def __call__(self, c):
        return eval_at(self, c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, (int, FqElement)):
            return self == Poly.constant(self.ctx, other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        if self.ctx.m == 1:
            return poly_to_text(self)
        return f"Poly({self.coeffs})"


class PrimeIdeal:
    """Non-zero prime of A: a monic irreducible generator plus its degree."""

    __slots__ = ("gen", "degree")

    def __init__(self, gen: Poly, _trusted: bool = False):
        if not gen.is_monic():
            raise NotIrreducibleModulus("prime generator must be monic")
        if not _trusted and not is_irreducible(gen):
            raise NotIrreducibleModulus(f"{gen!r} is not irreducible")
        self.gen = gen
        self.degree = len(gen.coeffs) - 1

    @property
    def ctx(self) -> FieldCtx:
        return self.gen.ctx

    def __eq__(self, other):
        return isinstance(other, PrimeIdeal) and self.gen == other.gen

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(("prime", self.gen))

    def __repr__(self):
        return f"({self.gen!r})"


# -- ring and number-theory operations --


def poly_arith(op: str, f: Poly, g: Poly) -> Poly:
    """Dispatch one of {add, sub, mul} on two polynomials."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")


def eval_at(f: Poly, c) -> FqElement:
    """f(c) by Horner; equals the remainder of f mod (T - c)."""
    ctx = f.ctx
    if isinstance(c, FqElement):
        if c.ctx != ctx:
            raise ContextMismatch("evaluation point from a different field")
        cv = c.val
    else:
        cv = int(c) % ctx.p
    acc = 0
    for coef in reversed(f.coeffs):
        acc = ctx.add(ctx.mul(acc, cv), coef)
    return FqElement(ctx, acc)


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    if f.ctx != g.ctx:
        raise ContextMismatch("gcd over different fields")
    ctx = f.ctx
    if ctx.m == 1:
        a, b = list(f.coeffs), list(g.coeffs)
        g_ = _vgcd(a, b, ctx.p)
        return Poly(ctx, g_).monic()
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def powmod(f: Poly, e: int, mod: Poly) -> Poly:
    """f^e mod `mod` by square-and-multiply."""
    if f.ctx != mod.ctx:
        raise ContextMismatch("powmod over different fields")
    ctx = f.ctx
    if ctx.m == 1:
        out = _vpowmod(list((f % mod).coeffs), e, list(mod.coeffs), ctx.p)
        return Poly(ctx, out)
    result = Poly.one(ctx)
    base = f % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        e >>= 1
        if e:
            base = (base * base) % mod
    return result


def is_irreducible(f: Poly) -> bool:
    """Rabin's test: gcd conditions against T^(q^d) - T."""
    n = len(f.coeffs) - 1
    if n < 1:
        raise DegreeZeroInput("irreducibility needs degree >= 1")
    if n == 1:
        return True
    ctx = f.ctx
    q = ctx.q
    fm = f.monic()
    if ctx.m == 1:
        return _irreducible_fast(list(fm.coeffs), q, ctx.p)
    x = Poly.T(ctx)
    if powmod(x, q ** n, fm) != x % fm:
        return False
    for ell in _prime_divisors(n):
        h = powmod(x, q ** (n // ell), fm)
        if gcd(h - x, fm).degree >= 1:
            return False
    return True


def _irreducible_fast(fv, q, p) -> bool:
    n = len(fv) - 1
    x = [0, 1]
    if _vpowmod(x, q ** n, fv, p) != x:
        return False
    for ell in _prime_divisors(n):
        h = _vpowmod(x, q ** (n // ell), fv, p)
        diff = [((h[i] if i < len(h) else 0) - (x[i] if i < len(x) else 0)) % p
                for i in range(max(len(h), len(x)))]
        _vtrim(diff)
        g = _vgcd(list(fv), diff, p)
        if len(g) - 1 >= 1:
            return False
    return True


def _prime_divisors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def monic_polys(ctx: FieldCtx, degree: int):
    """Monic degree-d polynomials in lexicographic coefficient order
    (leading-side coefficients most significant)."""
    q = ctx.q
    total = q ** degree
    for idx in range(total):
        coeffs = [0] * degree + [1]
        v = idx
        for pos in range(degree):
            coeffs[pos] = v % q
            v //= q
        yield Poly(ctx, coeffs)


def enumerate_monic_irreducibles(ctx: FieldCtx, degree: int,
                                 cap: int = DEFAULT_ENUMERATION_CAP):
    """All monic irreducibles of exactly the given degree, in the same
    lexicographic order as monic_polys."""
    if degree < 1:
        raise DegreeZeroInput("degree must be >= 1")
    if ctx.q ** degree > cap:
        raise EnumerationCapExceeded(
            f"{ctx.q}^{degree} candidates exceed cap {cap}")
    out = []
    if degree == 1:
        for f in monic_polys(ctx, 1):
            out.append(PrimeIdeal(f, _trusted=True))
        return out
    for f in monic_polys(ctx, degree):
        if is_irreducible(f):
            out.append(PrimeIdeal(f, _trusted=True))
    return out


def irreducible_count(q: int, n: int) -> int:
    """Necklace formula (1/n) * sum_{d|n} mu(d) q^(n/d)."""
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            mu = _moebius(d)
            if mu:
                total += mu * q ** (n // d)
    return total // n


def _moebius(n: int) -> int:
    mu = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            mu = -mu
        d += 1
    if n > 1:
        mu = -mu
    return mu


def valuation(f: Poly, lam: PrimeIdeal):
    """Largest k with lam^k | f; POS_INF for the zero polynomial."""
    if f.ctx != lam.gen.ctx:
        raise ContextMismatch("valuation over different fields")
    if f.is_zero():
        return POS_INF
    k = 0
    cur = f
    while True:
        qt, r = divmod(cur, lam.gen)
        if not r.is_zero():
            return k
        k += 1
        cur = qt


def factor(f: Poly, cap: int = DEFAULT_FACTOR_DEGREE_CAP):
    """Complete factorization into monic irreducibles.

    Returns a list of (PrimeIdeal, multiplicity) sorted by (degree, coeffs);
    the unit is the leading coefficient of f.  Equal-degree splitting draws
    from a fixed seeded stream, so output is reproducible.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if len(f.coeffs) - 1 > cap:
        raise DegreeCapExceeded(f"degree {len(f.coeffs) - 1} exceeds cap {cap}")
    rng = random.Random(_FACTOR_SEED)
    found: dict[tuple, int] = {}
    _factor_monic(f.monic(), 1, found, rng)
    ctx = f.ctx
    items = sorted(found.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return [(PrimeIdeal(Poly(ctx, cs), _trusted=True), e) for cs, e in items]


def _factor_monic(f: Poly, outer_mult: int, found: dict, rng) -> None:
    ctx = f.ctx
    if len(f.coeffs) - 1 == 0:
        return
    deriv = f.derivative()
    if deriv.is_zero():
        # f = g(T^p) with p-th-power coefficients
        p = ctx.p
        root_coeffs = []
        e_root = ctx.p ** (ctx.m - 1) if ctx.m > 1 else 1
        for i in range(0, len(f.coeffs), p):
            c = f.coeffs[i]
            root_coeffs.append(ctx.pow(c, e_root) if ctx.m > 1 else c)
        _factor_monic(Poly(ctx, root_coeffs), outer_mult * p, found, rng)
        return
    w = gcd(f, deriv)
    squarefree = f // w
    for h in _squarefree_factors(squarefree, rng):
        mult = 0
        cur = f
        while True:
            qt, r = divmod(cur, h)
            if not r.is_zero():
                break
            mult += 1
            cur = qt
        found[h.coeffs] = found.get(h.coeffs, 0) + outer_mult * mult
        # remove fully so the residual is a pure p-th power
        f = cur
    if len(f.coeffs) - 1 > 0:
        _factor_monic(f, outer_mult, found, rng)


def _squarefree_factors(g: Poly, rng):
    """Distinct-degree then equal-degree splitting of a squarefree monic g."""
    ctx = g.ctx
    q = ctx.q
    out = []
    x = Poly.T(ctx)
    h = x
    d = 0
    while len(g.coeffs) - 1 >= 1:
        d += 1
        if 2 * d > len(g.coeffs) - 1:
            out.append(g)
            break
        h = powmod(h, q, g)
        gd = gcd(h - x, g)
        if gd.degree >= 1:
            out.extend(_equal_degree_split(gd, d, rng))
            g = g // gd
            h = h % g
    return out


def _equal_degree_split(g: Poly, d: int, rng):
    """Cantor-Zassenhaus for odd q: g is a product of degree-d irreducibles."""
    ctx = g.ctx
    n = len(g.coeffs) - 1
    if n == d:
        return [g]
    exp = (ctx.q ** d - 1) // 2
    while True:
        r = Poly(ctx, [rng.randrange(ctx.q) for _ in range(n)])
        if r.is_zero():
            continue
        s = powmod(r, exp, g)
        t = gcd(s - Poly.one(ctx), g)
        if 1 <= t.degree < n:
            left = _equal_degree_split(t, d, rng)
            right = _equal_degree_split(g // t, d, rng)
            return left + right


# -- text grammar (prime fields only) --

_TERM_RE = re.compile(
    r"^(?:(?P<c1>\d+)\*T\^(?P<k1>\d+)|(?P<c2>\d+)\*T|T\^(?P<k2>\d+)|T"
    r"|(?P<c3>\d+))$")
_SPLIT_RE = re.compile(r"(?=[+-])")


def parse_poly(ctx: FieldCtx, text: str) -> Poly:
    """Parse `term ('+' term)*` with terms c, c*T, c*T^k, T, T^k.

    Coefficients run over 0..p-1; a leading `-` on a term is accepted as an
    input convenience and negates it mod p (canonical output never uses it).
    """
    if ctx.m != 1:
        raise ContextMismatch("text grammar is defined for prime fields only")
    text = text.strip().replace(" ", "")
    if not text:
        raise ValueError("empty polynomial text")
    acc: dict[int, int] = {}
    for raw in _SPLIT_RE.split(text):
        if not raw:
            continue
        term = raw
        sign = 1
        if term[0] == "+":
            term = term[1:]
        elif term[0] == "-":
            sign = -1
            term = term[1:]
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"bad polynomial term {raw!r}")
        if m.group("c1") is not None:
            c, k = int(m.group("c1")), int(m.group("k1"))
        elif m.group("c2") is not None:
            c, k = int(m.group("c2")), 1
        elif m.group("k2") is not None:
            c, k = 1, int(m.group("k2"))
        elif m.group("c3") is not None:
            c, k = int(m.group("c3")), 0
        else:
            c, k = 1, 1
        if c >= ctx.p:
            raise ValueError(
                f"coefficient {c} out of range 0..{ctx.p - 1}")
        acc[k] = (acc.get(k, 0) + sign * c) % ctx.p
    deg = max(acc) if acc else 0
    coeffs = [acc.get(i, 0) for i in range(deg + 1)]
    return Poly(ctx, coeffs)


def poly_to_text(f: Poly) -> str:
    """Canonical text: descending degree, e.g. `T^2+4*T+3`."""
    if f.ctx.m != 1:
        raise ContextMismatch("text grammar is defined for prime fields only")
    if f.is_zero():
        return "0"
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append("T" if c == 1 else f"{c}*T")
        else:
            parts.append(f"T^{i}" if c == 1 else f"{c}*T^{i}")
    return "+".join(parts)
