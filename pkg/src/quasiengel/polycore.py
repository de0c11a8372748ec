"""Sparse multivariate polynomials over GF(p) or the rationals, Groebner bases,
colon ideals, Hilbert polynomials and the matrix-equation ideals.

Coefficients are Python ints reduced mod p, or ints/Fractions over Q.
A polynomial is a dict from exponent tuples to nonzero coefficients.
"""
from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Optional, Sequence


class ResourceLimit(RuntimeError):
    """A Groebner computation exceeded its configured caps."""


# -- rings ---------------------------------------------------------------------

@dataclass(frozen=True)
class Ring:
    names: tuple[str, ...]
    p: int = 0  # 0 means the rationals

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("repeated variable names")

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError("unknown variable %r in ring %s" % (name, ",".join(self.names)))

    def coerce(self, c):
        if self.p:
            if isinstance(c, Fraction):
                return c.numerator * pow(c.denominator, -1, self.p) % self.p
            return int(c) % self.p
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        return c

    def div(self, a, b):
        if self.p:
            return a * pow(b, -1, self.p) % self.p
        r = Fraction(a, b) if isinstance(a, int) and isinstance(b, int) else Fraction(a) / Fraction(b)
        return r.numerator if r.denominator == 1 else r

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.coerce(c)
        return Polynomial(self, {(0,) * self.n: c} if c else {})

    def var(self, name: str) -> "Polynomial":
        e = [0] * self.n
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self) -> list["Polynomial"]:
        return [self.var(v) for v in self.names]

    def parse(self, text: str) -> "Polynomial":
        return parse_poly(text, self)

    def with_char(self, p: int) -> "Ring":
        return Ring(self.names, p)

    def __repr__(self):
        return "Ring(%s; %s)" % (",".join(self.names), "Q" if not self.p else "GF(%d)" % self.p)


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _sub_exp(a, b):
    return tuple(y - x for x, y in zip(b, a))


def _lcm_exp(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    # arithmetic
    def _lift(self, o) -> "Polynomial":
        if isinstance(o, Polynomial):
            if o.ring != self.ring:
                raise ValueError("ring mismatch: %r vs %r" % (self.ring, o.ring))
            return o
        return self.ring.const(o)

    def __add__(self, o):
        o = self._lift(o)
        t = dict(self.terms)
        p = self.ring.p
        for e, c in o.terms.items():
            v = t.get(e, 0) + c
            if p:
                v %= p
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {e: (-c % p if p else -c) for e, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        p = self.ring.p
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = _add_exp(e1, e2)
                t[e] = t.get(e, 0) + c1 * c2
        if p:
            t = {e: c % p for e, c in t.items() if c % p}
        else:
            t = {e: _norm(c) for e, c in t.items() if c}
        return Polynomial(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        r = self.ring.one()
        a = self
        while k:
            if k & 1:
                r = r * a
            a = a * a
            k >>= 1
        return r

    def scale(self, c, mon=None) -> "Polynomial":
        """c * mon * self for a coefficient c and exponent tuple mon."""
        c = self.ring.coerce(c)
        if not c:
            return self.ring.zero()
        p = self.ring.p
        t = {}
        for e, v in self.terms.items():
            if mon is not None:
                e = _add_exp(e, mon)
            v = v * c
            t[e] = v % p if p else _norm(v)
        return Polynomial(self.ring, t)

    def __eq__(self, o):
        if isinstance(o, Polynomial):
            return self.ring == o.ring and self.terms == o.terms
        if isinstance(o, (int, Fraction)):
            return self == self.ring.const(o)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, var: str) -> int:
        i = self.ring.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def variables(self) -> list[str]:
        used = set()
        for e in self.terms:
            used.update(i for i, k in enumerate(e) if k)
        return [self.ring.names[i] for i in sorted(used)]

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def leading(self, order: "MonomialOrder") -> tuple[tuple, object]:
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def lm(self, order):
        return self.leading(order)[0]

    def monic(self, order) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading(order)
        return self.scale(self.ring.div(1, c))

    def coefficients_in(self, var: str) -> dict[int, "Polynomial"]:
        """Write self as sum of coeff_k * var^k."""
        i = self.ring.index(var)
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            e2 = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[e2] = c
        return {k: Polynomial(self.ring, t) for k, t in out.items()}

    def evaluate(self, values: dict, add=None, mul=None, one=None, coerce=None):
        """Evaluate with values[name]; default arithmetic is Python's."""
        names = self.ring.names
        vals = [values.get(v) for v in names]
        total = None
        for e, c in self.terms.items():
            term = coerce(c) if coerce else c
            for v, k in zip(vals, e):
                if k:
                    if v is None:
                        raise ValueError("missing value for a variable")
                    term = term * v ** k
            total = term if total is None else total + term
        if total is None:
            return coerce(0) if coerce else 0
        return total

    def substitute(self, subs: dict[str, "Polynomial"], ring: Optional[Ring] = None) -> "Polynomial":
        """Replace variables by polynomials (of `ring`, default the same ring)."""
        ring = ring or self.ring
        images = []
        for v in self.ring.names:
            if v in subs:
                images.append(subs[v])
            elif v in ring.names:
                images.append(ring.var(v))
            else:
                images.append(None)
        cache: dict = {}
        out = ring.zero()
        for e, c in self.terms.items():
            t = ring.const(c)
            for i, k in enumerate(e):
                if k:
                    if images[i] is None:
                        raise ValueError("no image for %s" % self.ring.names[i])
                    key = (i, k)
                    if key not in cache:
                        cache[key] = images[i] ** k
                    t = t * cache[key]
            out = out + t
        return out

    def change_ring(self, ring: Ring) -> "Polynomial":
        """Map into a ring with a superset of the variables (and maybe a characteristic)."""
        idx = [ring.index(v) for v in self.ring.names]
        t: dict = {}
        for e, c in self.terms.items():
            ne = [0] * ring.n
            for i, k in zip(idx, e):
                ne[i] += k
            ne = tuple(ne)
            c = ring.coerce(c)
            v = t.get(ne, 0) + c
            if ring.p:
                v %= ring.p
            if v:
                t[ne] = v
            else:
                t.pop(ne, None)
        return Polynomial(ring, t)

    def homogenize(self, var: str, ring: Optional[Ring] = None) -> "Polynomial":
        if ring is None:
            ring = Ring(self.ring.names + (var,), self.ring.p)
        f = self.change_ring(ring)
        d = self.total_degree()
        j = ring.index(var)
        t = {}
        for e, c in f.terms.items():
            e = list(e)
            e[j] += d - sum(e)
            t[tuple(e)] = c
        return Polynomial(ring, t)

    def to_text(self, order: Optional["MonomialOrder"] = None, caret: bool = False) -> str:
        return poly_to_text(self, order, caret)

    def __str__(self):
        return poly_to_text(self)

    def __repr__(self):
        return "Polynomial(%s)" % poly_to_text(self)


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# -- monomial orders -------------------------------------------------------------

class MonomialOrder:
    """lex, degrevlex, or a block order built from them.

    `perm` lists variable indices from the largest variable down.
    """

    def __init__(self, kind: str, perm: Sequence[int], blocks: Optional[list] = None):
        if kind not in ("lex", "degrevlex", "block"):
            raise ValueError("unknown order %r" % kind)
        self.kind = kind
        self.perm = tuple(perm)
        self.blocks = blocks or []
        if kind == "lex":
            pr = self.perm
            self.key = lambda e: tuple(e[i] for i in pr)
        elif kind == "degrevlex":
            rev = tuple(reversed(self.perm))
            self.key = lambda e: (sum(e),) + tuple(-e[i] for i in rev)
        else:
            keys = [b.key for b in self.blocks]
            self.key = lambda e: tuple(k(e) for k in keys)

    @classmethod
    def make(cls, ring: Ring, kind: str = "lex", variables: Optional[Sequence[str]] = None) -> "MonomialOrder":
        variables = variables or ring.names
        if sorted(variables) != sorted(ring.names):
            raise ValueError("order must mention every variable once")
        return cls(kind, [ring.index(v) for v in variables])

    @classmethod
    def elimination(cls, ring: Ring, first: Sequence[str], rest_kind: str = "degrevlex") -> "MonomialOrder":
        """Block order eliminating the variables in `first`."""
        a = [ring.index(v) for v in first]
        b = [i for i in range(ring.n) if i not in a]
        # a block order compares the first block on its own variables only
        blk1 = cls("degrevlex", a)
        blk2 = cls(rest_kind, b)
        return cls("block", a + b, [_Restricted(blk1, a), _Restricted(blk2, b)])

    def is_degree_compatible(self) -> bool:
        return self.kind == "degrevlex"

    def __repr__(self):
        return "MonomialOrder(%s, %s)" % (self.kind, self.perm)


class _Restricted:
    def __init__(self, order: MonomialOrder, idx: Sequence[int]):
        # the block's own order already reads only the indices it was built with
        self.key = order.key


# -- parsing and printing --------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\^|\*\*)|([-+*/()]))")


def parse_poly(text: str, ring: Ring) -> Polynomial:
    """Parse transcript notation.

    Accepts compressed monomials like c2b3t2 (single-letter variables followed by
    exponents), caret forms like c^2*b^3, parenthesised coefficients like
    (a8+a6c2)*v6, implicit products and rational constants.
    """
    toks = _tokenize(text)
    pos = [0]

    def peek():
        return toks[pos[0]] if pos[0] < len(toks) else (None, None)

    def take():
        t = toks[pos[0]]
        pos[0] += 1
        return t

    def expr():
        sign = 1
        kind, val = peek()
        if kind == "op" and val in "+-":
            take()
            sign = -1 if val == "-" else 1
        acc = term()
        if sign < 0:
            acc = -acc
        while True:
            kind, val = peek()
            if kind == "op" and val in "+-":
                take()
                t = term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term():
        acc = factor()
        while True:
            kind, val = peek()
            if kind == "op" and val == "*":
                take()
                acc = acc * factor()
            elif kind == "op" and val == "/":
                take()
                f = factor()
                if not f.is_constant() or f.is_zero():
                    raise ValueError("division only by nonzero constants")
                acc = acc.scale(ring.div(1, f.terms[(0,) * ring.n]))
            elif kind in ("num", "word") or (kind == "op" and val == "("):
                acc = acc * factor()  # implicit product
            else:
                return acc

    def factor():
        base = atom()
        kind, val = peek()
        if kind == "pow":
            take()
            k2, v2 = take()
            if k2 != "num":
                raise ValueError("exponent must be a nonnegative integer in %r" % text)
            base = base ** int(v2)
        return base

    def atom():
        kind, val = peek()
        if kind is None:
            raise ValueError("unexpected end of %r" % text)
        take()
        if kind == "num":
            return ring.const(int(val))
        if kind == "word":
            return _compressed(val, ring)
        if kind == "op" and val == "(":
            e = expr()
            k2, v2 = take() if pos[0] < len(toks) else (None, None)
            if v2 != ")":
                raise ValueError("unbalanced parenthesis in %r" % text)
            return e
        raise ValueError("unexpected %r in %r" % (val, text))

    if not toks:
        raise ValueError("empty polynomial text")
    result = expr()
    if pos[0] != len(toks):
        raise ValueError("trailing input %r in %r" % (toks[pos[0]][1], text))
    return result


def _tokenize(text: str):
    s = text.strip().rstrip(";")
    out = []
    i = 0
    while i < len(s):
        m = _TOKEN.match(s, i)
        if not m or m.end() == i:
            if s[i:].strip() == "":
                break
            raise ValueError("malformed token at %r" % s[i:i + 10])
        i = m.end()
        if m.group(1):
            out.append(("num", m.group(1)))
        elif m.group(2):
            out.append(("word", m.group(2)))
        elif m.group(3):
            # in "c2b^3" the caret binds to the last letter only
            if out and out[-1][0] == "word" and len(out[-1][1]) > 1 and out[-1][1][-1].isalpha():
                w = out.pop()[1]
                out += [("word", w[:-1]), ("word", w[-1])]
            out.append(("pow", m.group(3)))
        else:
            out.append(("op", m.group(4)))
    return out


def _compressed(word: str, ring: Ring) -> Polynomial:
    """A run like 'c2bt2' (leading digits were already split off as a number)."""
    if word in ring.names:
        return ring.var(word)
    parts = list(re.finditer(r"([A-Za-z_])(\d*)", word))
    if "".join(m.group(0) for m in parts) != word:
        raise ValueError("malformed token %r" % word)
    e = [0] * ring.n
    for m in parts:
        v = m.group(1)
        if v not in ring.names:
            raise ValueError("unknown variable %r in token %r" % (v, word))
        e[ring.index(v)] += int(m.group(2)) if m.group(2) else 1
    return Polynomial(ring, {tuple(e): 1})


def poly_to_text(f: Polynomial, order: Optional[MonomialOrder] = None, caret: bool = False) -> str:
    ring = f.ring
    if not f.terms:
        return "0"
    compressed = not caret and all(len(v) == 1 for v in ring.names)
    order = order or MonomialOrder("degrevlex", range(ring.n))
    parts = []
    for e in sorted(f.terms, key=order.key, reverse=True):
        c = f.terms[e]
        if ring.p and c > ring.p // 2 and ring.p > 2:
            c = c - ring.p
        mons = []
        for v, k in zip(ring.names, e):
            if k:
                if compressed:
                    mons.append(v if k == 1 else "%s%d" % (v, k))
                else:
                    mons.append(v if k == 1 else "%s^%d" % (v, k))
        mon = ("" if compressed else "*").join(mons)
        neg = c < 0
        a = -c if neg else c
        if not mon:
            s = str(a)
        elif a == 1:
            s = mon
        elif isinstance(a, Fraction):
            s = "(%s)*%s" % (a, mon)
        else:
            s = ("%d%s" % (a, mon)) if compressed else "%d*%s" % (a, mon)
        parts.append(("-" if neg else "+") + s)
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out


# -- ideals and Groebner bases ---------------------------------------------------

@dataclass
class Ideal:
    ring: Ring
    generators: list

    def __post_init__(self):
        self.generators = [g for g in self.generators if not g.is_zero()]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, i):
        return self.generators[i]


def _reduce_setup(G, order):
    return [(g.leading(order), g) for g in G if g.terms]


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder,
                full: bool = True) -> Polynomial:
    """Remainder of multivariate division; divisors are tried in list order."""
    ring = f.ring
    lead = _reduce_setup(G, order)
    p = dict(f.terms)
    rem: dict = {}
    key = order.key
    P = ring.p
    while p:
        e = max(p, key=key)
        c = p[e]
        for (ge, gc), g in lead:
            if _divides(ge, e):
                q = ring.div(c, gc)
                shift = _sub_exp(e, ge)
                for ee, cc in g.terms.items():
                    ne = _add_exp(ee, shift)
                    v = p.get(ne, 0) - q * cc
                    if P:
                        v %= P
                    else:
                        v = _norm(v)
                    if v:
                        p[ne] = v
                    else:
                        p.pop(ne, None)
                break
        else:
            if not full:
                rem.update(p)
                break
            rem[e] = c
            del p[e]
    return Polynomial(ring, rem)


def divide(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder):
    """Return (quotients, remainder) with f = sum q_i G_i + r."""
    ring = f.ring
    lead = _reduce_setup(G, order)
    idx = [i for i, g in enumerate(G) if g.terms]
    quots = [dict() for _ in G]
    p = dict(f.terms)
    rem: dict = {}
    key = order.key
    P = ring.p
    while p:
        e = max(p, key=key)
        c = p[e]
        for j, ((ge, gc), g) in enumerate(lead):
            if _divides(ge, e):
                q = ring.div(c, gc)
                shift = _sub_exp(e, ge)
                quots[idx[j]][shift] = quots[idx[j]].get(shift, 0) + q
                for ee, cc in g.terms.items():
                    ne = _add_exp(ee, shift)
                    v = p.get(ne, 0) - q * cc
                    v = v % P if P else _norm(v)
                    if v:
                        p[ne] = v
                    else:
                        p.pop(ne, None)
                break
        else:
            rem[e] = c
            del p[e]
    qs = [Polynomial(ring, {e: (c % P if P else _norm(c)) for e, c in q.items() if c}) for q in quots]
    return qs, Polynomial(ring, rem)


def spoly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    (fe, fc), (ge, gc) = f.leading(order), g.leading(order)
    L = _lcm_exp(fe, ge)
    ring = f.ring
    return f.scale(ring.div(1, fc), _sub_exp(L, fe)) - g.scale(ring.div(1, gc), _sub_exp(L, ge))


def is_groebner(G: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    G = [g for g in G if g.terms]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if normal_form(spoly(G[i], G[j], order), G, order, full=False).terms:
                return False
    return True


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder,
               max_pairs: int = 200000, max_terms: int = 200000,
               reduce: bool = True) -> list[Polynomial]:
    """Reduced Groebner basis, with the product and chain criteria and normal selection."""
    G: list[Polynomial] = []
    LM: list[tuple] = []
    pairs: list[tuple] = []
    key = order.key
    processed = 0

    def add(h):
        h = h.monic(order)
        e = h.lm(order)
        k = len(G)
        G.append(h)
        LM.append(e)
        # chain criterion (Gebauer-Moeller style): drop old pairs (i,j) whose lcm
        # is divisible by the new lead term and differs from both new lcms
        keep = []
        for (i, j, L) in pairs:
            if _divides(e, L) and _lcm_exp(LM[i], e) != L and _lcm_exp(LM[j], e) != L:
                continue
            keep.append((i, j, L))
        pairs[:] = keep
        new = []
        for i in range(k):
            if G[i] is None:
                continue
            L = _lcm_exp(LM[i], e)
            new.append((i, k, L))
        # among new pairs with the same lcm keep one; drop those whose lcm is a
        # proper multiple of another new lcm
        new.sort(key=lambda t: key(t[2]))
        chosen = []
        for t in new:
            if any(_divides(s[2], t[2]) for s in chosen):
                continue
            chosen.append(t)
        for t in chosen:
            i = t[0]
            if all(a == 0 or b == 0 for a, b in zip(LM[i], e)):
                continue  # coprime lead terms
            pairs.append(t)

    for g in gens:
        if g.terms:
            r = normal_form(g, [h for h in G if h is not None], order)
            if r.terms:
                add(r)
    while pairs:
        pairs.sort(key=lambda t: (sum(t[2]), key(t[2])), reverse=True)
        i, j, L = pairs.pop()
        processed += 1
        if processed > max_pairs:
            raise ResourceLimit("more than %d pairs processed" % max_pairs)
        s = spoly(G[i], G[j], order)
        r = normal_form(s, [h for h in G if h is not None], order)
        if len(r.terms) > max_terms:
            raise ResourceLimit("intermediate polynomial with %d terms" % len(r.terms))
        if r.terms:
            add(r)
    out = [g for g in G if g is not None]
    return reduced_basis(out, order) if reduce else out


def reduced_basis(G: Sequence[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    G = [g.monic(order) for g in G if g.terms]
    # minimalise
    mins = []
    lms = [g.lm(order) for g in G]
    for i, g in enumerate(G):
        drop = False
        for j in range(len(G)):
            if j != i and _divides(lms[j], lms[i]) and (lms[j] != lms[i] or j < i):
                drop = True
                break
        if not drop:
            mins.append(g)
    # interreduce tails
    out = []
    for i, g in enumerate(mins):
        others = mins[:i] + mins[i + 1:]
        e, c = g.leading(order)
        tail = Polynomial(g.ring, {k: v for k, v in g.terms.items() if k != e})
        r = normal_form(tail, others, order)
        out.append((Polynomial(g.ring, {e: c}) + r).monic(order))
    out.sort(key=lambda g: order.key(g.lm(order)))
    return out


def ideal_contains(G: Sequence[Polynomial], f: Polynomial, order: MonomialOrder) -> bool:
    """Membership test; G must be a Groebner basis."""
    return normal_form(f, G, order, full=False).is_zero()


def ideals_equal(F1: Sequence[Polynomial], F2: Sequence[Polynomial], order: MonomialOrder) -> bool:
    G1 = buchberger(F1, order)
    G2 = buchberger(F2, order)
    return all(ideal_contains(G1, f, order) for f in F2) and all(ideal_contains(G2, f, order) for f in F1)


def lift_verify(I_gens: Sequence[Polynomial], J_gens: Sequence[Polynomial], M) -> bool:
    """True iff J[k] = sum_l M[l][k] * I[l] for all k."""
    if len(M) != len(I_gens) or any(len(row) != len(J_gens) for row in M):
        raise ValueError("lift matrix must be len(I) x len(J)")
    for k, Jk in enumerate(J_gens):
        s = Jk.ring.zero()
        for l, Il in enumerate(I_gens):
            if M[l][k].terms:
                s = s + M[l][k] * Il
        if s != Jk:
            return False
    return True


def _fresh(ring: Ring, base: str = "s") -> str:
    name = base
    k = 0
    while name in ring.names:
        k += 1
        name = "%s%d" % (base, k)
    return name


def ideal_intersection(F1, F2, order: MonomialOrder) -> list[Polynomial]:
    ring = F1[0].ring if F1 else F2[0].ring
    s = _fresh(ring)
    R2 = Ring((s,) + ring.names, ring.p)
    sv = R2.var(s)
    gens = [sv * f.change_ring(R2) for f in F1] + [(R2.one() - sv) * g.change_ring(R2) for g in F2]
    elim = MonomialOrder("block", [], [_Shift(MonomialOrder("lex", [0]), 0),
                                       _Shift(order, 1)])
    G = buchberger(gens, elim)
    out = []
    for g in G:
        if g.degree(s) <= 0:
            out.append(_drop_first(g, ring))
    return out


class _Shift:
    """Order on a suffix of the exponent vector (for block orders)."""

    def __init__(self, order: MonomialOrder, offset: int):
        k = order.key
        if offset:
            self.key = lambda e: k(e[offset:])
        else:
            self.key = lambda e: k(e[:1])


def _drop_first(g: Polynomial, ring: Ring) -> Polynomial:
    return Polynomial(ring, {e[1:]: c for e, c in g.terms.items()})


def exact_divide(f: Polynomial, h: Polynomial, order: MonomialOrder) -> Polynomial:
    (q,), r = divide(f, [h], order)
    if r.terms:
        raise ValueError("division is not exact")
    return q


def ideal_quotient(I: Sequence[Polynomial], h: Polynomial, order: MonomialOrder) -> list[Polynomial]:
    """I : h via I intersect <h> computed by elimination, then division by h."""
    if h.is_zero():
        raise ValueError("quotient by zero")
    # a basis of I in the target order keeps the elimination small
    G = reduced_basis(buchberger(list(I), order), order)
    inter = ideal_intersection(G, [h], order)
    return reduced_basis([exact_divide(g, h, order) for g in inter], order)


def saturate(I: Sequence[Polynomial], f: Polynomial, order: MonomialOrder,
             max_steps: int = 50) -> list[Polynomial]:
    """I : f^infinity by iterating the quotient until the ideal stops growing."""
    cur = buchberger(list(I), order)
    for _ in range(max_steps):
        nxt = ideal_quotient(cur, f, order)
        if all(ideal_contains(cur, g, order) for g in nxt):
            return cur
        cur = nxt
    raise ResourceLimit("saturation did not stabilise")


# -- Hilbert polynomials ----------------------------------------------------------

@dataclass(frozen=True)
class HilbertData:
    coefficients: tuple  # Hilbert polynomial, constant term first, Fractions
    dimension: int
    degree: int
    arithmetic_genus: Optional[int]

    def __call__(self, t: int):
        return sum(c * t ** i for i, c in enumerate(self.coefficients))

    def __str__(self):
        return poly_to_text(Polynomial(Ring(("t",)), {(i,): c for i, c in enumerate(self.coefficients) if c}),
                            caret=True)


def minimal_monomials(mons: Iterable[tuple]) -> list[tuple]:
    mons = sorted(set(mons), key=sum)
    out = []
    for m in mons:
        if not any(_divides(o, m) for o in out):
            out.append(m)
    return out


def hilbert_polynomial_of_monomials(mons: Sequence[tuple], nvars: int, max_gens: int = 22) -> tuple:
    """Hilbert polynomial of k[x_1..x_n]/(mons) for a homogeneous monomial ideal.

    Inclusion-exclusion over subsets of the minimal generators.
    """
    mons = minimal_monomials(mons)
    if len(mons) > max_gens:
        raise ResourceLimit("%d monomial generators is too many for inclusion-exclusion" % len(mons))
    n = nvars
    # binomial(s - e + n - 1, n - 1) as a polynomial in s
    acc = [Fraction(0)] * n

    def binom_poly(e):
        poly = [Fraction(1)]
        for i in range(1, n):
            # multiply by (s - e + i)
            a = -e + i
            nxt = [Fraction(0)] * (len(poly) + 1)
            for k, c in enumerate(poly):
                nxt[k] += c * a
                nxt[k + 1] += c
            poly = nxt
        f = factorial(n - 1)
        return [c / f for c in poly]

    for r in range(len(mons) + 1):
        for sub in itertools.combinations(mons, r):
            if sub:
                L = sub[0]
                for m in sub[1:]:
                    L = _lcm_exp(L, m)
                e = sum(L)
            else:
                e = 0
            bp = binom_poly(e)
            sgn = -1 if r % 2 else 1
            for k, c in enumerate(bp):
                acc[k] += sgn * c
    while len(acc) > 1 and acc[-1] == 0:
        acc.pop()
    if len(acc) == 1 and acc[0] == 0:
        return ()
    return tuple(acc)


def homogenize_hilbert(I: Sequence[Polynomial], order: Optional[MonomialOrder] = None,
                       hvar: str = "w", assume_groebner: bool = False) -> HilbertData:
    """Hilbert polynomial of the projective closure of V(I).

    A degree-compatible Groebner basis is computed (or verified), homogenised with
    `hvar`; its leading monomials generate the leading ideal of the homogenisation.
    """
    ring = I[0].ring
    order = order or MonomialOrder("degrevlex", range(ring.n))
    if not order.is_degree_compatible():
        raise ValueError("homogenisation needs a degree-compatible order")
    if assume_groebner:
        if not is_groebner(I, order):
            raise ValueError("input is not a Groebner basis for the given order")
        G = list(I)
    else:
        G = buchberger(I, order)
    hring = Ring(ring.names + (hvar,), ring.p)
    horder = MonomialOrder("degrevlex", list(order.perm) + [ring.n])
    H = [g.homogenize(hvar, hring) for g in G]
    lms = [h.lm(horder) for h in H]
    coeffs = hilbert_polynomial_of_monomials(lms, hring.n)
    dim = len(coeffs) - 1 if coeffs else -1
    deg = int(coeffs[-1] * factorial(dim)) if coeffs else 0
    pa = None
    if dim == 1:
        pa = int(1 - coeffs[0])
    return HilbertData(coeffs, dim, deg, pa)


def curve_hilbert(I, order=None, hvar="w", assume_groebner=False) -> tuple[int, int, HilbertData]:
    """(degree, arithmetic genus, Hilbert polynomial) for a curve; errors otherwise."""
    h = homogenize_hilbert(I, order, hvar, assume_groebner)
    if h.dimension != 1:
        raise ValueError("projective closure has dimension %d, not a curve" % h.dimension)
    return h.degree, h.arithmetic_genus, h


# -- polynomial matrices and the matrix-equation ideals ---------------------------

def mat_mul(A, B):
    n, m, k = len(A), len(B[0]), len(B)
    ring = A[0][0].ring
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = ring.zero()
            for l in range(k):
                if A[i][l].terms and B[l][j].terms:
                    s = s + A[i][l] * B[l][j]
            row.append(s)
        out.append(row)
    return out


def mat_det(A):
    n = len(A)
    if n == 1:
        return A[0][0]
    if n == 2:
        return A[0][0] * A[1][1] - A[0][1] * A[1][0]
    ring = A[0][0].ring
    d = ring.zero()
    for j in range(n):
        if A[0][j].terms:
            minor = [[A[r][c] for c in range(n) if c != j] for r in range(1, n)]
            t = A[0][j] * mat_det(minor)
            d = d - t if j % 2 else d + t
    return d


def mat_adjugate(A):
    n = len(A)
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[A[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            d = mat_det(minor) if n > 1 else A[0][0].ring.one()
            out[j][i] = -d if (i + j) % 2 else d
    return out


def mat_inverse(A):
    """Inverse through the adjugate; the determinant must be a unit constant."""
    d = mat_det(A)
    if not d.is_constant() or d.is_zero():
        raise ValueError("matrix determinant is not a unit")
    ring = d.ring
    c = d.terms[(0,) * ring.n]
    if ring.p == 0 and c not in (1, -1):
        raise ValueError("determinant %s is not a unit over Z" % c)
    inv = ring.div(1, c)
    return [[e.scale(inv) for e in row] for row in mat_adjugate(A)]


def mat_identity(ring: Ring, n: int):
    return [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)]


def word_matrix(word, X, Y, Xi=None, Yi=None):
    Xi = Xi or mat_inverse(X)
    Yi = Yi or mat_inverse(Y)
    gens = {1: X, -1: Xi, 2: Y, -2: Yi}
    r = None
    for a in word.letters:
        r = gens[a] if r is None else mat_mul(r, gens[a])
    return r if r is not None else mat_identity(X[0][0].ring, len(X))


def matrix_equation_ideal(X, Y, equation=(1, 2), spec=None) -> list[Polynomial]:
    """Entries (row-major) of lhs(X,Y) - rhs(X,Y) for the equation u_i = u_j.

    `equation` is either an index pair or an explicit (lhs, rhs) pair of words.
    For (1, 2) with the default initial word the short equivalent form is used.
    """
    from .freewords import build_sequence, quasi_engel, short_equation_sides, W0, FreeWord
    if isinstance(equation[0], FreeWord):
        lhs, rhs = equation
    else:
        i, j = equation
        if i == j:
            raise ValueError("need i != j")
        spec = spec or quasi_engel()
        if (i, j) == (1, 2) and spec.kind == "quasi_engel" and spec.initial == W0:
            lhs, rhs = short_equation_sides()
        else:
            lhs, rhs = build_sequence(spec, i), build_sequence(spec, j)
    Xi, Yi = mat_inverse(X), mat_inverse(Y)
    L = word_matrix(lhs, X, Y, Xi, Yi)
    R = word_matrix(rhs, X, Y, Xi, Yi)
    return [L[i][j] - R[i][j] for i in range(len(L)) for j in range(len(L))]


def psl2_symbolic(ring: Ring):
    t, b, c = ring.var("t"), ring.var("b"), ring.var("c")
    one, zero = ring.one(), ring.zero()
    X = [[t, -one], [one, zero]]
    Y = [[one, b], [c, one + b * c]]
    return X, Y


def suzuki_symbolic(ring: Ring, twin: bool = False):
    """x = T S(a,b,v,w), y = T S(c,d,x,y) over GF(2)[a,b,c,d,v,w,x,y]; the twin uses S0."""
    g = {n: ring.var(n) for n in "abcdvwxy"}
    one, zero = ring.one(), ring.zero()

    def S(a, b, a0, b0):
        return [[one, zero, zero, zero],
                [a, one, zero, zero],
                [a * a0 + b, a0, one, zero],
                [a * a * a0 + a * b + b0, b, a, one]]

    def S0(a, b, a0, b0):
        return [[one, zero, zero, zero],
                [a0, one, zero, zero],
                [a0 * a * a + b0, a * a, one, zero],
                [a0 * a0 * a * a + a0 * b0 + b * b, b0, a0, one]]

    T = [[one if i + j == 3 else zero for j in range(4)] for i in range(4)]
    mk = S0 if twin else S
    X = mat_mul(T, mk(g["a"], g["b"], g["v"], g["w"]))
    Y = mat_mul(T, mk(g["c"], g["d"], g["x"], g["y"]))
    return X, Y


def same_up_to_sign(F1: Sequence[Polynomial], F2: Sequence[Polynomial]) -> bool:
    """Set equality allowing a sign flip per generator."""
    rest = list(F2)
    for f in F1:
        for k, g in enumerate(rest):
            if f == g or f == -g:
                rest.pop(k)
                break
        else:
            return False
    return not rest


# -- rational substitution ------------------------------------------------------

def substitute_rational(f: Polynomial, var: str, num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """f with var = num/den, as (numerator, den^deg_var f)."""
    parts = f.coefficients_in(var)
    d = max(parts) if parts else 0
    out = f.ring.zero()
    for k, g in parts.items():
        out = out + g * num ** k * den ** (d - k)
    return out, den ** d


def substitution_identity_check(J: Sequence[Polynomial], identities, var: str,
                                num: Polynomial, den: Polynomial) -> list[bool]:
    """For each (k, multiplier, target): multiplier * J[k](var = num/den) == target.

    Identities are checked after clearing denominators.
    """
    out = []
    for k, mult, target in identities:
        n, dpow = substitute_rational(J[k], var, num, den)
        out.append(mult * n == target * dpow)
    return out


# -- data assets -----------------------------------------------------------------

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")
_asset_dir = [DATA_DIR]


def set_asset_dir(path: Optional[str]):
    """Redirect asset lookups (None restores the shipped data directory)."""
    _asset_dir[0] = path or DATA_DIR


def asset_path(name: str) -> str:
    if os.path.isabs(name) or os.path.exists(name):
        return name
    return os.path.join(_asset_dir[0], name)

_ENTRY = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)\[(\d+)(?:,(\d+))?\]\s*=\s*([^;]*);")


@dataclass
class System:
    ring: Ring
    order: MonomialOrder
    header: dict
    entries: dict  # name -> {index tuple: Polynomial}

    def vector(self, name: str) -> list[Polynomial]:
        d = self.entries[name]
        n = max(k[0] for k in d)
        return [d.get((i,), self.ring.zero()) for i in range(1, n + 1)]

    def matrix(self, name: str) -> list[list[Polynomial]]:
        d = self.entries[name]
        r = max(k[0] for k in d)
        c = max(k[1] for k in d)
        return [[d.get((i, j), self.ring.zero()) for j in range(1, c + 1)] for i in range(1, r + 1)]


def read_system(path: str, char: Optional[int] = None, ring_names: Optional[Sequence[str]] = None) -> System:
    """Load a transcript asset: '# key: value' header lines, then NAME[i]=expr; entries."""
    path = asset_path(path)
    header: dict = {}
    body = []
    with open(path) as fh:
        for line in fh:
            if line.startswith("#"):
                k, _, v = line[1:].partition(":")
                header[k.strip()] = v.strip()
            else:
                body.append(line)
    names = tuple(ring_names or header["ring"].split(","))
    p = int(header.get("char", 0)) if char is None else char
    ring = Ring(names, p)
    kind = header.get("order", "lex")
    order = MonomialOrder.make(ring, kind if kind in ("lex", "degrevlex") else "lex")
    entries: dict = {}
    for m in _ENTRY.finditer("".join(body)):
        idx = (int(m.group(2)),) if m.group(3) is None else (int(m.group(2)), int(m.group(3)))
        entries.setdefault(m.group(1), {})[idx] = parse_poly(m.group(4), ring)
    return System(ring, order, header, entries)


def write_system(path: str, ring: Ring, header: dict, entries: dict):
    with open(path, "w") as fh:
        fh.write("# ring: %s\n# char: %d\n" % (",".join(ring.names), ring.p))
        for k, v in header.items():
            if k not in ("ring", "char"):
                fh.write("# %s: %s\n" % (k, v))
        for name, d in entries.items():
            for idx, f in sorted(d.items()):
                fh.write("%s[%s]=%s;\n" % (name, ",".join(map(str, idx)), poly_to_text(f)))
