"""Exact arithmetic in F_q, q = p^m with p an odd prime and q >= 5.

Elements are encoded as integers in [0, q): the base-p digits of the encoded
value are the coefficients of the canonical representative, constant digit
first.  FieldCtx owns the encoded-integer primitives; FqElement is a thin
value wrapper around (ctx, encoded value).
"""

from __future__ import annotations

import itertools

from .errors import (
    ContextMismatch,
    DivisionByZero,
    FieldTooSmall,
    NotIrreducibleModulus,
    NotPrime,
)

# Extension fields up to this order get dense add/mul lookup tables.
_TABLE_CAP = 128


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
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


# -- raw polynomial helpers over Z/p (lists of ints, ascending degree) --
# These exist so modulus validation does not depend on the poly module.


def _vtrim(v):
    while v and v[-1] == 0:
        v.pop()
    return v


def _vmulmod(a, b, mod, p):
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    dm = len(mod) - 1
    while len(res) > dm:
        lead = res.pop()
        if lead:
            off = len(res) - dm
            for k in range(dm):
                res[off + k] = (res[off + k] - lead * mod[k]) % p
    return _vtrim(res)


def _vpowmod(a, e, mod, p):
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _vmulmod(result, base, mod, p)
        e >>= 1
        if e:
            base = _vmulmod(base, base, mod, p)
    return result


def _vmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and a:
        lead = a.pop()
        if lead:
            c = lead * inv % p
            off = len(a) - db
            for k in range(db):
                a[off + k] = (a[off + k] - c * b[k]) % p
        _vtrim(a)
    return a


def _vgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _vmod(a, b, p)
    return a


def _modulus_irreducible(mod, p) -> bool:
    """Distinct-degree irreducibility test for a monic modulus over Z/p."""
    m = len(mod) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    if _vpowmod(x, p ** m, mod, p) != x:
        return False
    for ell in _prime_divisors(m):
        h = _vpowmod(x, p ** (m // ell), mod, p)
        diff = [((h[i] if i < len(h) else 0) - (x[i] if i < len(x) else 0)) % p
                for i in range(max(len(h), len(x)))]
        _vtrim(diff)
        g = _vgcd(list(mod), diff, p)
        if len(g) - 1 >= 1:
            return False
    return True


_MODULUS_CACHE: dict[tuple[int, int], tuple[int, ...]] = {}


def _default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m over Z/p.

    Smallest in lexicographic order on (c_{m-1}, ..., c_0), so the choice is
    reproducible without external data.
    """
    key = (p, m)
    if key not in _MODULUS_CACHE:
        for tail in itertools.product(range(p), repeat=m):
            cand = [tail[m - 1 - i] for i in range(m)] + [1]
            if _modulus_irreducible(cand, p):
                _MODULUS_CACHE[key] = tuple(cand)
                break
    return _MODULUS_CACHE[key]


class FieldCtx:
    """The field F_{p^m} with its modulus; owns encoded-int arithmetic."""

    __slots__ = ("p", "m", "q", "modulus", "_red", "_mul_table", "_add_table",
                 "_dec")

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not isinstance(p, int) or not _is_prime(p):
            raise NotPrime(f"p = {p!r} is not prime")
        if not isinstance(m, int) or m < 1:
            raise NotIrreducibleModulus(f"extension degree m = {m!r} invalid")
        if p == 2 or p ** m < 5:
            raise FieldTooSmall(f"q = {p}^{m} is not an odd prime power >= 5")
        self.p = p
        self.m = m
        self.q = p ** m
        if m == 1:
            if modulus is not None:
                mod = tuple(int(c) % p for c in modulus)
                if len(mod) != 2 or mod[-1] != 1:
                    raise NotIrreducibleModulus(
                        "modulus for a prime field must be monic of degree 1")
            self.modulus = None
        else:
            if modulus is None:
                mod = _default_modulus(p, m)
            else:
                mod = tuple(int(c) % p for c in modulus)
                if len(mod) != m + 1 or mod[-1] != 1:
                    raise NotIrreducibleModulus(
                        f"modulus must be monic of degree {m}")
                if not _modulus_irreducible(list(mod), p):
                    raise NotIrreducibleModulus(
                        f"modulus {mod} is reducible over F_{p}")
            self.modulus = mod
        self._init_tables()

    def _init_tables(self):
        p, m, q = self.p, self.m, self.q
        self._mul_table = None
        self._add_table = None
        self._dec = None
        self._red = None
        if m == 1:
            return
        self._dec = [tuple((v // p ** i) % p for i in range(m))
                     for v in range(q)]
        # x^k mod modulus for k in [m, 2m-2], as coefficient tuples
        red = []
        prev = [(-c) % p for c in self.modulus[:-1]]
        red.append(tuple(prev))
        for _ in range(m - 2):
            shifted = [0] + prev[:-1]
            lead = prev[-1]
            nxt = [(shifted[i] + lead * red[0][i]) % p for i in range(m)]
            red.append(tuple(nxt))
            prev = nxt
        self._red = red
        if q <= _TABLE_CAP:
            self._add_table = [
                [self._add_slow(a, b) for b in range(q)] for a in range(q)]
            self._mul_table = [
                [self._mul_slow(a, b) for b in range(q)] for a in range(q)]

    # -- encoding --

    def encode(self, coeffs) -> int:
        p = self.p
        val = 0
        for i, c in enumerate(coeffs):
            val += (int(c) % p) * p ** i
        return val

    def decode(self, val: int) -> tuple:
        if self.m == 1:
            return (val,)
        return self._dec[val]

    # -- encoded-int primitives --

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_slow(a, b)

    def _add_slow(self, a, b):
        p = self.p
        da, db = self._dec[a], self._dec[b]
        return self.encode([(x + y) % p for x, y in zip(da, db)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        return self.encode([(-x) % p for x in self._dec[a]])

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_slow(a, b)

    def _mul_slow(self, a, b):
        p, m = self.p, self.m
        da, db = self._dec[a], self._dec[b]
        conv = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] = (conv[i + j] + x * y) % p
        out = list(conv[:m])
        for k in range(m, 2 * m - 1):
            c = conv[k]
            if c:
                row = self._red[k - m]
                for i in range(m):
                    out[i] = (out[i] + c * row[i]) % p
        return self.encode(out)

    def pow(self, a: int, e: int) -> int:
        if self.m == 1:
            return pow(a, e, self.p) if e >= 0 else pow(self.inv(a), -e, self.p)
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("division by zero in " + str(self))
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def qpow(self, a: int, k: int = 1) -> int:
        """a^(q^k): the k-fold q-power Frobenius (identity on this field)."""
        return a  # every element of F_q is fixed by x -> x^q

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    # -- element constructors --

    def element(self, value) -> "FqElement":
        """Build an element from an int (constant, reduced mod p) or a
        coefficient sequence of length <= m."""
        if isinstance(value, FqElement):
            if value.ctx != self:
                raise ContextMismatch("element from a different field")
            return value
        if isinstance(value, int):
            return FqElement(self, value % self.p)
        coeffs = list(value)
        if len(coeffs) > self.m:
            raise ContextMismatch(
                f"coefficient vector longer than m = {self.m}")
        return FqElement(self, self.encode(coeffs))

    def from_encoded(self, val: int) -> "FqElement":
        return FqElement(self, val)

    def elements(self):
        """All q elements, constants first, ascending encoded order."""
        return [FqElement(self, v) for v in range(self.q)]

    # -- value semantics --

    def __eq__(self, other):
        return (isinstance(other, FieldCtx) and self.p == other.p
                and self.m == other.m and self.modulus == other.modulus)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"FieldCtx(F_{self.p})"
        return f"FieldCtx(F_{self.p}^{self.m}, modulus={self.modulus})"


class FqElement:
    """An element of F_q tied to its FieldCtx.  Immutable value type."""

    __slots__ = ("ctx", "val")

    def __init__(self, ctx: FieldCtx, val: int):
        self.ctx = ctx
        self.val = val

    @property
    def coeffs(self) -> tuple:
        """Canonical coefficient vector of length m over Z/p."""
        c = self.ctx.decode(self.val)
        return c if self.ctx.m > 1 else (self.val,)

    def _check(self, other) -> "FqElement":
        if not isinstance(other, FqElement):
            if isinstance(other, int):
                return self.ctx.element(other)
            raise TypeError(f"cannot combine FqElement with {type(other)}")
        if other.ctx != self.ctx:
            raise ContextMismatch("elements from different field contexts")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FqElement(self.ctx, self.ctx.add(self.val, other.val))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return FqElement(self.ctx, self.ctx.sub(self.val, other.val))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return FqElement(self.ctx, self.ctx.neg(self.val))

    def __mul__(self, other):
        other = self._check(other)
        return FqElement(self.ctx, self.ctx.mul(self.val, other.val))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        if other.val == 0:
            raise DivisionByZero("division by zero")
        return FqElement(self.ctx, self.ctx.mul(self.val,
                                                self.ctx.inv(other.val)))

    def __pow__(self, e: int):
        return FqElement(self.ctx, self.ctx.pow(self.val, e))

    def inverse(self) -> "FqElement":
        return FqElement(self.ctx, self.ctx.inv(self.val))

    def is_zero(self) -> bool:
        return self.val == 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.val == other % self.ctx.p and (
                self.val < self.ctx.p)
        return (isinstance(other, FqElement) and self.ctx == other.ctx
                and self.val == other.val)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.m, self.ctx.modulus, self.val))

    def __repr__(self):
        if self.ctx.m == 1:
            return str(self.val)
        return f"Fq({self.coeffs})"


def make_field(p: int, m: int = 1, modulus=None) -> FieldCtx:
    """Validated field context; deterministic built-in modulus when omitted."""
    return FieldCtx(p, m, modulus)


def arith(op: str, x: FqElement, y: FqElement) -> FqElement:
    """Dispatch one of {add, sub, mul, div} on two elements."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")


def is_square(x: FqElement) -> bool:
    """Euler criterion x^((q-1)/2); zero counts as a square."""
    if x.val == 0:
        return True
    return x.ctx.pow(x.val, (x.ctx.q - 1) // 2) == 1


def enumerate_elements(ctx: FieldCtx) -> list[FqElement]:
    """All q elements in the documented order: constants first, then by
    ascending canonical coefficient vector (most-significant digit last)."""
    return ctx.elements()
