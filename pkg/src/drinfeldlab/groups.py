"""Brute-force verification lab for the group-theoretic ingredients.

Everything runs on explicit element sets: subgroup closure in GL_2 of a
residue ring, irreducibility of the line action, SL_2 containment, and the
two sampled suites (the SL_2-criterion lemma over small fields and the
level-two full-group criterion in GL_2(A/p^2)).

Closures run on matrices encoded as 4-tuples of residue indices with dense
add/mul lookup tables; the public Mat2 type stays ResidueElement-based.
"""

from __future__ import annotations

import random

from .errors import CapExceeded, NotAField, NotInvertible, ParamsOutOfRange
from .polys import PrimeIdeal, poly_to_text
from .residues import ResidueRing

DEFAULT_CLOSURE_CAP = 400_000
_TABLE_RING_CAP = 256


class Mat2:
    """2x2 matrix over a residue ring."""

    __slots__ = ("ring", "entries")

    def __init__(self, ring: ResidueRing, entries):
        rows = tuple(tuple(ring.element(e) for e in row) for row in entries)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("need a 2x2 entry array")
        self.ring = ring
        self.entries = rows

    def det(self):
        (a, b), (c, d) = self.entries
        return a * d - b * c

    def is_invertible(self) -> bool:
        return self.det().is_unit()

    def __mul__(self, other: "Mat2") -> "Mat2":
        (a, b), (c, d) = self.entries
        (e, f), (g, h) = other.entries
        return Mat2(self.ring, ((a * e + b * g, a * f + b * h),
                                (c * e + d * g, c * f + d * h)))

    def __eq__(self, other):
        return (isinstance(other, Mat2) and self.ring == other.ring
                and self.entries == other.entries)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.ring, self.entries))

    def __repr__(self):
        (a, b), (c, d) = self.entries
        return f"Mat2[[{a!r},{b!r}],[{c!r},{d!r}]]"


def identity(ring: ResidueRing) -> Mat2:
    return Mat2(ring, ((1, 0), (0, 1)))


class _Tables:
    """Dense index tables for one residue ring."""

    def __init__(self, ring: ResidueRing):
        n = ring.cardinality
        if n > _TABLE_RING_CAP:
            raise CapExceeded(f"ring of size {n} too large for dense tables")
        self.ring = ring
        self.n = n
        elems = ring.elements()
        self.elems = elems
        self.add = [[ring.index_of(x + y) for y in elems] for x in elems]
        self.mul = [[ring.index_of(x * y) for y in elems] for x in elems]
        self.neg = [ring.index_of(-x) for x in elems]
        self.units = {i for i, x in enumerate(elems) if x.is_unit()}

    def encode(self, m: Mat2):
        idx = self.ring.index_of
        (a, b), (c, d) = m.entries
        return (idx(a), idx(b), idx(c), idx(d))

    def decode(self, t) -> Mat2:
        e = self.elems
        return Mat2(self.ring, ((e[t[0]], e[t[1]]), (e[t[2]], e[t[3]])))

    def mat_mul(self, x, y):
        a, b, c, d = x
        e, f, g, h = y
        MUL, ADD = self.mul, self.add
        return (ADD[MUL[a][e]][MUL[b][g]], ADD[MUL[a][f]][MUL[b][h]],
                ADD[MUL[c][e]][MUL[d][g]], ADD[MUL[c][f]][MUL[d][h]])

    def mat_det(self, x):
        a, b, c, d = x
        return self.add[self.mul[a][d]][self.neg[self.mul[b][c]]]

    def closure(self, gens, cap: int):
        """BFS product closure of encoded generators from the identity."""
        one = self.ring.index_of(self.ring.one)
        zero = self.ring.index_of(self.ring.zero)
        ident = (one, zero, zero, one)
        seen = {ident}
        frontier = [ident]
        mat_mul = self.mat_mul
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mat_mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            if len(seen) > cap:
                raise CapExceeded(f"closure exceeded cap {cap}")
            frontier = nxt
        return seen


_TABLE_CACHE: dict = {}


def _tables(ring: ResidueRing) -> _Tables:
    key = ring.modulus
    tab = _TABLE_CACHE.get(key)
    if tab is None:
        tab = _Tables(ring)
        _TABLE_CACHE[key] = tab
    return tab


def closure(generators, cap: int = DEFAULT_CLOSURE_CAP) -> set:
    """The subgroup generated by the given matrices, as an explicit set."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    ring = gens[0].ring
    for g in gens:
        if not g.is_invertible():
            raise NotInvertible(f"{g!r} is not invertible", gcd=None)
    tab = _tables(ring)
    enc = tab.closure([tab.encode(g) for g in gens], cap)
    return {tab.decode(t) for t in enc}


def acts_irreducibly(H) -> bool:
    """No line of (A/p)^2 is fixed by every element of H (prime ring)."""
    H = list(H)
    if not H:
        raise ValueError("empty matrix set")
    ring = H[0].ring
    if not ring.is_prime:
        raise NotAField("irreducibility of the line action needs a field")
    tab = _tables(ring)
    enc = [tab.encode(m) for m in H]
    return _acts_irreducibly_encoded(tab, enc)


def _acts_irreducibly_encoded(tab: _Tables, enc) -> bool:
    n = tab.n
    one = tab.ring.index_of(tab.ring.one)
    zero = tab.ring.index_of(tab.ring.zero)
    lines = [(one, x) for x in range(n)] + [(zero, one)]
    MUL, ADD, NEG = tab.mul, tab.add, tab.neg
    for v0, v1 in lines:
        fixed = True
        for a, b, c, d in enc:
            w0 = ADD[MUL[a][v0]][MUL[b][v1]]
            w1 = ADD[MUL[c][v0]][MUL[d][v1]]
            # parallel iff v0*w1 - v1*w0 = 0
            if ADD[MUL[v0][w1]][NEG[MUL[v1][w0]]] != zero:
                fixed = False
                break
        if fixed:
            return False
    return True


def _sl2_generators(ring: ResidueRing):
    """Standard unipotents over an additive F_p-basis of the residue field.

    For a prime-field ring this is exactly the two matrices [[1,1],[0,1]]
    and [[1,0],[1,1]]; extension fields need the basis family x^i T^j, since
    the two integer unipotents only generate SL_2 of the prime subfield.
    """
    ctx = ring.ctx
    basis = []
    for i in range(ctx.m):
        # x^i encodes as p^i for i < m (the i-th coefficient basis vector)
        x_power = ring.element(ctx.from_encoded(ctx.p ** i))
        t_power = ring.one
        for _ in range(ring.degree):
            basis.append(x_power * t_power)
            t_power = t_power * ring.t
    gens = []
    for b in basis:
        gens.append(Mat2(ring, ((ring.one, b), (ring.zero, ring.one))))
        gens.append(Mat2(ring, ((ring.one, ring.zero), (b, ring.one))))
    return gens


def sl2_group(ring: ResidueRing, cap: int = DEFAULT_CLOSURE_CAP) -> set:
    """SL_2 of the residue field as an explicit unipotent closure."""
    return closure(_sl2_generators(ring), cap)


def contains_sl2(H, cap: int = DEFAULT_CLOSURE_CAP) -> bool:
    """Whether H contains the closure of the two standard unipotents."""
    H = set(H)
    if not H:
        raise ValueError("empty matrix set")
    ring = next(iter(H)).ring
    if not ring.is_prime:
        raise NotAField("SL_2 containment check needs a field")
    return sl2_group(ring, cap) <= H


def _find_unit_generator(ring: ResidueRing):
    """Element generating the unit group (cyclic for the rings used here)."""
    target = len(ring.units())
    for x in ring.elements():
        if not x.is_unit():
            continue
        order = 1
        y = x
        while y != ring.one:
            y = y * x
            order += 1
            if order > target:
                break
        if order == target:
            return x
    raise ValueError("unit group has no single generator")


def _nonsplit_cartan(ring: ResidueRing) -> set:
    """The multiplicative group of the quadratic extension acting on itself:
    all aI + bM, (a, b) != 0, with M the companion matrix of a quadratic
    X^2 - rX - s irreducible over the residue field."""
    from .residues import is_square_mod_prime

    companion = None
    for r in ring.elements():
        for s in ring.elements():
            disc = r * r + ring.element(4) * s
            if disc.is_zero() or is_square_mod_prime(disc):
                continue
            companion = Mat2(ring, ((ring.zero, s), (ring.one, r)))
            break
        if companion:
            break
    out = set()
    for a in ring.elements():
        for b in ring.elements():
            if a.is_zero() and b.is_zero():
                continue
            out.add(Mat2(ring, ((a + b * companion.entries[0][0],
                                 b * companion.entries[0][1]),
                                (b * companion.entries[1][0],
                                 a + b * companion.entries[1][1]))))
    return out


def verify_lemma_A1(ring: ResidueRing, samples: int, seed: int,
                    cap: int = DEFAULT_CLOSURE_CAP) -> dict:
    """Sampled check of the SL_2 criterion: any subgroup with a subgroup of
    order #F acting irreducibly must contain SL_2(F).

    Forced taxonomy cases (Borel, split/non-split Cartan, SL_2, GL_2) run
    before the seeded random generator sets.  Expected violations: none.
    """
    if not ring.is_prime:
        raise NotAField("the lemma lab works over a field")
    N = ring.cardinality
    if N > 25:
        raise CapExceeded("closure budget limits the field to q^n <= 25")
    tab = _tables(ring)
    g = _find_unit_generator(ring)

    def enc_closure(mats):
        return tab.closure([tab.encode(m) for m in mats], cap)

    forced = {
        "borel": enc_closure([Mat2(ring, ((g, 0), (0, 1))),
                              Mat2(ring, ((1, 0), (0, g))),
                              Mat2(ring, ((1, 1), (0, 1)))]),
        "split_cartan": enc_closure([Mat2(ring, ((g, 0), (0, 1))),
                                     Mat2(ring, ((1, 0), (0, g)))]),
        "nonsplit_cartan": {tab.encode(m) for m in _nonsplit_cartan(ring)},
        "sl2": enc_closure(_sl2_generators(ring)),
        "gl2": enc_closure([Mat2(ring, ((1, 1), (0, 1))),
                            Mat2(ring, ((1, 0), (1, 1))),
                            Mat2(ring, ((g, 0), (0, 1)))]),
    }
    sl2 = forced["sl2"]
    rng = random.Random(seed)
    violations = []
    forced_records = []
    hypothesis_hits = 0

    def examine(name, H):
        nonlocal hypothesis_hits
        order = len(H)
        has_field_subgroup = (order % N == 0)
        irreducible = _acts_irreducibly_encoded(tab, H)
        hypotheses = has_field_subgroup and irreducible
        contains = sl2 <= H
        if hypotheses:
            hypothesis_hits += 1
            if not contains:
                violations.append({"case": name, "order": order})
        return {"case": name, "order": order,
                "has_subgroup_of_field_order": has_field_subgroup,
                "acts_irreducibly": irreducible,
                "hypotheses_met": hypotheses,
                "contains_sl2": contains}

    for name, H in forced.items():
        forced_records.append(examine(name, H))
    for i in range(samples):
        k = rng.choice((1, 2, 3))
        gens = [_random_invertible(rng, ring) for _ in range(k)]
        examine(f"sample_{i}", enc_closure(gens))
    return {
        "op": "verify_lemma_A1",
        "ring": poly_to_text(ring.modulus),
        "q_field": N,
        "seed": seed,
        "samples": samples,
        "hypothesis_hits": hypothesis_hits,
        "violations": violations,
        "forced_cases": forced_records,
    }


def _random_invertible(rng, ring: ResidueRing) -> Mat2:
    n = ring.cardinality
    while True:
        m = Mat2(ring, ((ring.from_index(rng.randrange(n)),
                         ring.from_index(rng.randrange(n))),
                        (ring.from_index(rng.randrange(n)),
                         ring.from_index(rng.randrange(n)))))
        if m.is_invertible():
            return m


def pink_rutsche_level2(p: PrimeIdeal, samples: int, seed: int,
                        cap: int = DEFAULT_CLOSURE_CAP) -> dict:
    """Finite shadow of the full-group criterion in GL_2(A/p^2): any sampled
    subgroup with full determinant image, full mod-p image, and a non-scalar
    element congruent to the identity mod p must be all of GL_2(A/p^2)."""
    if p.degree != 1:
        raise ParamsOutOfRange("materialized level-2 lab needs deg(p) = 1")
    ctx = p.ctx
    q = ctx.q
    full_order = (q * q - 1) * (q * q - q) * q ** 4
    if full_order > cap:
        raise CapExceeded(
            f"GL_2(A/p^2) order {full_order} exceeds closure cap {cap}")
    ring2 = ResidueRing(p.gen ** 2)
    ring1 = ResidueRing(p.gen)
    tab2 = _tables(ring2)
    unit_count = q * q - q
    gl2_modp_order = (q * q - 1) * (q * q - q)

    # index maps for the mod-p projection and the pi-digit of each residue
    proj = []
    pi_digit = []
    for i in range(ring2.cardinality):
        x = ring2.from_index(i)
        proj.append(ring1.index_of(ring1.element(x.rep)))
        digit = (x.rep - (x.rep % p.gen)) // p.gen
        pi_digit.append(ring1.index_of(ring1.element(digit)))

    one1 = ring1.index_of(ring1.one)
    zero1 = ring1.index_of(ring1.zero)

    def mod_p_image(H_enc):
        return {(proj[a], proj[b], proj[c], proj[d]) for a, b, c, d in H_enc}

    def det_image(H_enc):
        return {tab2.mat_det(x) for x in H_enc}

    def has_level1_nonscalar(H_enc):
        for a, b, c, d in H_enc:
            if (proj[a], proj[b], proj[c], proj[d]) != (one1, zero1, zero1,
                                                        one1):
                continue
            n00, n01, n10, n11 = (pi_digit[a], pi_digit[b], pi_digit[c],
                                  pi_digit[d])
            if n01 != zero1 or n10 != zero1 or n00 != n11:
                return True
        return False

    def examine(name, H_enc):
        order = len(H_enc)
        det_full = len(det_image(H_enc)) == unit_count
        modp_full = len(mod_p_image(H_enc)) == gl2_modp_order
        nonscalar = has_level1_nonscalar(H_enc)
        hypotheses = det_full and modp_full and nonscalar
        record = {"case": name, "order": order, "det_full": det_full,
                  "mod_p_full": modp_full,
                  "level1_nonscalar": nonscalar,
                  "hypotheses_met": hypotheses,
                  "is_full_group": order == full_order}
        if hypotheses and order != full_order:
            violations.append(record)
        return record

    g2 = _find_unit_generator(ring2)
    pi = ring2.element(p.gen)
    forced_sets = {
        "full_group": [Mat2(ring2, ((1, 1), (0, 1))),
                       Mat2(ring2, ((1, 0), (1, 1))),
                       Mat2(ring2, ((ring2.one, pi), (0, 1))),
                       Mat2(ring2, ((1, 0), (pi, ring2.one))),
                       Mat2(ring2, ((g2, 0), (0, 1)))],
        "teichmuller_lift": [Mat2(ring2, ((1, 1), (0, 1))),
                             Mat2(ring2, ((1, 0), (1, 1))),
                             Mat2(ring2, ((_find_unit_generator(ring1).rep, 0),
                                          (0, 1)))],
    }
    rng = random.Random(seed)
    violations = []
    forced_records = []
    sample_records = []
    for name, gens in forced_sets.items():
        enc = tab2.closure([tab2.encode(m) for m in gens], cap)
        forced_records.append(examine(name, enc))
    for i in range(samples):
        k = rng.choice((2, 2, 3))
        gens = [_random_invertible(rng, ring2) for _ in range(k)]
        enc = tab2.closure([tab2.encode(m) for m in gens], cap)
        sample_records.append(examine(f"sample_{i}", enc))
    filtered_out = sum(1 for r in forced_records + sample_records
                       if not r["hypotheses_met"])
    return {
        "op": "pink_rutsche_level2",
        "ring": poly_to_text(ring2.modulus),
        "prime": poly_to_text(p.gen),
        "seed": seed,
        "samples": samples,
        "full_order": full_order,
        "filtered_out": filtered_out,
        "violations": violations,
        "forced_cases": forced_records,
        "sample_cases": sample_records,
    }
