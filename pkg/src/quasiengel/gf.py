"""Finite fields GF(p^k).

Elements are stored as integers: the coefficient of t^i of the residue
polynomial is the i-th base-p digit.  For p = 2 this is the usual
bit-vector representation, so GF(2^n) arithmetic is carry-less
multiplication followed by reduction modulo the field polynomial.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in (2, 3, 5, 7, 11, 13):
        if n % d == 0:
            return n == d
    d = 17
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
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


def prime_power(q: int) -> Optional[tuple[int, int]]:
    """Return (p, k) with q = p^k, or None."""
    if q < 2:
        return None
    for p in prime_factors(q)[:1]:
        k = 0
        while q % p == 0:
            q //= p
            k += 1
        return (p, k) if q == 1 else None
    return None


# -- univariate polynomials over GF(p), coefficient lists low degree first --

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = list(a)
    inv = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _ptrim(a[:dm] if len(a) > dm else a)


def _pmulmod(a, b, m, p):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] = (r[i + j] + x * y) % p
    return _pmod(r, m, p)


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppow_x(e, m, p):
    """x^e mod m over GF(p)."""
    result, base = [1], _pmod([0, 1], m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    m = [c % p for c in modulus]
    k = len(m) - 1
    if k < 1 or m[-1] != 1:
        return False
    if k == 1:
        return True
    if m[0] == 0:
        return False
    for r in prime_factors(k):
        h = _ppow_x(p ** (k // r), m, p)
        h = h + [0] * (2 - len(h)) if len(h) < 2 else list(h)
        h[1] = (h[1] - 1) % p
        if len(_pgcd(m, _ptrim(h), p)) != 1:
            return False
    h = _ppow_x(p ** k, m, p)
    return _ptrim(list(h)) == [0, 1]


@lru_cache(maxsize=None)
def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible polynomial of degree k over GF(p)."""
    if k == 1:
        return (0, 1)
    # counting upward in base p compares coefficients from t^(k-1) down
    for code in range(1, p ** k):
        m = tuple(_digits(code, p, k)) + (1,)
        if is_irreducible(m, p):
            return m
    raise ValueError("no irreducible polynomial found")


def _digits(code: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        code, r = divmod(code, p)
        out.append(r)
    return out


def _clmul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int
    degree: int
    modulus: tuple[int, ...]
    generator_hint: Optional[int] = field(default=None, compare=False)

    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def q(self) -> int:
        return self.characteristic ** self.degree

    @property
    def _modint(self) -> int:
        # modulus as a bit-vector, only meaningful for p = 2
        return sum(c << i for i, c in enumerate(self.modulus))

    def __repr__(self):
        return "GF(%d^%d) mod %s" % (self.p, self.degree, poly_to_text(self.modulus))

    # -- integer-code arithmetic --------------------------------------
    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.degree == 1:
            return (a + b) % p
        r, s = 0, 1
        while a or b:
            r += ((a % p + b % p) % p) * s
            a //= p
            b //= p
            s *= p
        return r

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.degree == 1:
            return -a % p
        r, s = 0, 1
        while a:
            r += (-(a % p) % p) * s
            a //= p
            s *= p
        return r

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        p, k = self.p, self.degree
        if k == 1:
            return a * b % p
        if p == 2:
            r = _clmul(a, b)
            m = self._modint
            for i in range(r.bit_length() - 1, k - 1, -1):
                if (r >> i) & 1:
                    r ^= m << (i - k)
            return r
        prod = _pmulmod(_digits(a, p, k), _digits(b, p, k), list(self.modulus), p)
        return sum(c * p ** i for i, c in enumerate(prod))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in %r" % (self,))
        return self.pow(a, self.q - 2)

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    # -- element construction -----------------------------------------
    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise ValueError("element of a different field")
            return value
        if isinstance(value, str):
            return parse_element(value, self)
        if isinstance(value, (list, tuple)):
            code = 0
            for i, c in enumerate(value):
                code += (c % self.p) * self.p ** i
            return FieldElement(self, code)
        return FieldElement(self, int(value) % self.p)

    def elem(self, code: int) -> "FieldElement":
        if not 0 <= code < self.q:
            raise ValueError("code out of range")
        return FieldElement(self, code)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def gen(self) -> "FieldElement":
        """The class of t."""
        if self.generator_hint is not None:
            return FieldElement(self, self.generator_hint)
        if self.degree == 1:
            return FieldElement(self, (-self.modulus[0]) % self.p)
        return FieldElement(self, self.p)

    def elements(self) -> Iterator["FieldElement"]:
        for c in range(self.q):
            yield FieldElement(self, c)

    def is_primitive(self, a: int) -> bool:
        if a == 0:
            return False
        n = self.q - 1
        return all(self.pow(a, n // r) != 1 for r in prime_factors(n))

    def primitive_elements(self) -> Iterator[int]:
        for c in range(1, self.q):
            if self.is_primitive(c):
                yield c

    def tables(self) -> "FieldTables":
        return _tables(self)


def field_make(p: int, k: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """Build GF(p^k).  modulus is a coefficient list, lowest degree first,
    or a string like "t^3+t+1"."""
    if not is_prime(p):
        raise ValueError("%d is not prime" % p)
    if k < 1:
        raise ValueError("degree must be positive")
    if modulus is None:
        m = default_modulus(p, k)
    else:
        if isinstance(modulus, str):
            modulus = text_to_poly(modulus, p)
        m = tuple(int(c) % p for c in modulus)
        while len(m) > 1 and m[-1] == 0:
            m = m[:-1]
        if len(m) != k + 1 or m[-1] != 1:
            raise ValueError("modulus must be monic of degree %d" % k)
        if not is_irreducible(m, p):
            raise ValueError("modulus %s is reducible over GF(%d)" % (poly_to_text(m), p))
    return _make(p, k, m)


@lru_cache(maxsize=None)
def _make(p, k, m):
    return FieldSpec(p, k, m)


def gf(q: int) -> FieldSpec:
    """GF(q) with the default modulus."""
    pk = prime_power(q)
    if pk is None:
        raise ValueError("%d is not a prime power" % q)
    return field_make(*pk)


class FieldElement:
    __slots__ = ("spec", "code")

    def __init__(self, spec: FieldSpec, code: int):
        self.spec = spec
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(_ptrim(_digits(self.code, self.spec.p, self.spec.degree)))

    def _other(self, o):
        if isinstance(o, FieldElement):
            if o.spec != self.spec:
                raise ValueError("field mismatch: %r vs %r" % (self.spec, o.spec))
            return o.code
        if isinstance(o, int):
            return o % self.spec.p
        return NotImplemented

    def __add__(self, o):
        c = self._other(o)
        return NotImplemented if c is NotImplemented else FieldElement(self.spec, self.spec.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, o):
        c = self._other(o)
        return NotImplemented if c is NotImplemented else FieldElement(self.spec, self.spec.sub(self.code, c))

    def __rsub__(self, o):
        c = self._other(o)
        return NotImplemented if c is NotImplemented else FieldElement(self.spec, self.spec.sub(c, self.code))

    def __mul__(self, o):
        c = self._other(o)
        return NotImplemented if c is NotImplemented else FieldElement(self.spec, self.spec.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, o):
        c = self._other(o)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.code, self.spec.inv(c)))

    def __rtruediv__(self, o):
        c = self._other(o)
        return FieldElement(self.spec, self.spec.mul(c, self.spec.inv(self.code)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.code, e))

    def inv(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.code))

    def __eq__(self, o):
        if isinstance(o, FieldElement):
            return self.spec == o.spec and self.code == o.code
        if isinstance(o, int):
            return self.code == o % self.spec.p
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.p, self.spec.degree, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return element_to_text(self)

    __str__ = __repr__


def elem_arith(a: FieldElement, b: Optional[FieldElement], op: str) -> FieldElement:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "sub":
        return a - b
    if op == "inv":
        return a.inv()
    if op == "neg":
        return -a
    raise ValueError("unknown op %r" % op)


def frob_pow(a: FieldElement, j: int) -> FieldElement:
    """a^(p^j)."""
    s = a.spec
    j %= s.degree
    c = a.code
    for _ in range(j):
        c = s.pow(c, s.p)
    return FieldElement(s, c)


def theta_map(a: FieldElement) -> FieldElement:
    """The Suzuki automorphism a -> a^(2^(m+1)) of GF(2^(2m+1))."""
    s = a.spec
    if s.p != 2 or s.degree % 2 == 0:
        raise ValueError("theta needs GF(2^n) with n odd, got %r" % (s,))
    return frob_pow(a, s.degree // 2 + 1)


# -- text forms ----------------------------------------------------------

_TERM = re.compile(r"^(\d*)\*?(?:([A-Za-z])(?:\^\{?(\d+)\}?|(\d+))?)?$")


def text_to_poly(text: str, p: int, var: str = "t") -> list[int]:
    """Parse "t^4+t^2+1" (or "t4+t2+1", "t^{12}") into coefficients mod p."""
    s = text.replace(" ", "").replace("$", "")
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    for sign, term in re.findall(r"([+-]?)([^+-]+)", s):
        m = _TERM.match(term)
        if not m or (m.group(2) and m.group(2) != var):
            raise ValueError("bad term %r in %r" % (term, text))
        c = int(m.group(1)) if m.group(1) else 1
        if m.group(2):
            e = int(m.group(3) or m.group(4) or 1)
        else:
            if not m.group(1):
                raise ValueError("bad term %r" % term)
            e = 0
        if sign == "-":
            c = -c
        coeffs[e] = (coeffs.get(e, 0) + c) % p
    deg = max(coeffs)
    return _ptrim([coeffs.get(i, 0) for i in range(deg + 1)])


def poly_to_text(coeffs: Sequence[int], var: str = "t") -> str:
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        if e == 0:
            parts.append(str(c))
            continue
        mon = var if e == 1 else "%s^%d" % (var, e)
        parts.append(mon if c == 1 else "%d*%s" % (c, mon))
    return "+".join(parts) if parts else "0"


def parse_element(text: str, spec: FieldSpec, var: str = "t") -> FieldElement:
    """Accepts polynomial-in-t text and, for p = 2, hex like 0x1f."""
    s = text.strip()
    if s.lower().startswith("0x"):
        if spec.p != 2:
            raise ValueError("hex form is only for GF(2^n)")
        code = int(s, 16)
        if code >= spec.q:
            raise ValueError("hex value too large for %r" % (spec,))
        return FieldElement(spec, code)
    coeffs = text_to_poly(s, spec.p, var)
    if len(coeffs) > spec.degree:
        # reduce by the modulus (handles witness text like t^{22} in GF(2^5))
        g = spec.gen.code
        acc = 0
        for e, c in enumerate(coeffs):
            if c:
                acc = spec.add(acc, spec.mul(c % spec.p, spec.pow(g, e)))
        return FieldElement(spec, acc)
    return spec(coeffs)


def element_to_text(a: FieldElement, hexform: bool = False) -> str:
    if hexform and a.spec.p == 2:
        return hex(a.code)
    return poly_to_text(a.coeffs)


# -- vectorised tables ---------------------------------------------------

class FieldTables:
    """Log/antilog tables for batched arithmetic on integer codes."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        q = spec.q
        self.q = q
        self.order = q - 1
        g = next(spec.primitive_elements()) if q > 2 else 1
        self.primitive = g
        exp = np.zeros(q - 1, dtype=np.int64)
        c = 1
        for i in range(q - 1):
            exp[i] = c
            c = spec.mul(c, g)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        # zero maps to a sentinel so that any sum involving it lands in the zero region
        self.zlog = 2 * (q - 1)
        log[0] = self.zlog
        self.log = log
        full = np.zeros(4 * (q - 1) + 1, dtype=np.int64)
        full[: 2 * (q - 1)] = np.concatenate([exp, exp])
        self.exp = full
        self.exp_cycle = exp
        self._digit_pows = [spec.p ** i for i in range(spec.degree)]

    def add(self, a, b):
        p = self.spec.p
        if p == 2:
            return np.bitwise_xor(a, b)
        if self.spec.degree == 1:
            return (a + b) % p
        r = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for s in self._digit_pows:
            r += ((a // s % p + b // s % p) % p) * s
        return r

    def neg(self, a):
        p = self.spec.p
        if p == 2:
            return a
        if self.spec.degree == 1:
            return (-a) % p
        r = np.zeros(np.shape(a), dtype=np.int64)
        for s in self._digit_pows:
            r += ((-(a // s % p)) % p) * s
        return r

    def mul(self, a, b):
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a):
        la = self.log[a]
        if np.any(la == self.zlog):
            raise ZeroDivisionError("inverse of zero")
        return self.exp_cycle[(-la) % self.order]

    def pow(self, a, e: int):
        if e == 0:
            return np.ones(np.shape(a), dtype=np.int64)
        la = self.log[a]
        out = self.exp_cycle[(la * e) % self.order]
        return np.where(la == self.zlog, 0, out)

    def frob(self, a, j: int):
        return self.pow(a, self.spec.p ** (j % self.spec.degree))


@lru_cache(maxsize=64)
def _tables(spec: FieldSpec) -> FieldTables:
    if spec.q > 1 << 24:
        raise ValueError("field too large for tables")
    return FieldTables(spec)


# -- univariate polynomials over GF(q), coefficient codes low degree first --

def upoly_trim(a: list[int]) -> list[int]:
    return _ptrim(a)


def upoly_mod(a: list[int], m: list[int], F: FieldSpec) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    inv = F.inv(m[-1])
    for i in range(len(a) - 1, dm - 1, -1):
        if a[i]:
            c = F.mul(a[i], inv)
            for j in range(dm + 1):
                if m[j]:
                    a[i - dm + j] = F.sub(a[i - dm + j], F.mul(c, m[j]))
    return _ptrim(a[:dm] if len(a) > dm else a)


def upoly_mulmod(a, b, m, F):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    r[i + j] = F.add(r[i + j], F.mul(x, y))
    return upoly_mod(r, m, F)


def upoly_gcd(a, b, F):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, upoly_mod(a, b, F)
    return a


def upoly_distinct_roots(f: list[int], F: FieldSpec) -> int:
    """Number of distinct roots in GF(q) of a univariate polynomial; q if f = 0."""
    f = _ptrim(list(f))
    if not f:
        return F.q
    if len(f) == 1:
        return 0
    # b^q mod f by square-and-multiply, then gcd(f, b^q - b)
    result, base, e = [1], upoly_mod([0, 1], f, F), F.q
    while e:
        if e & 1:
            result = upoly_mulmod(result, base, f, F)
        base = upoly_mulmod(base, base, f, F)
        e >>= 1
    h = list(result) + [0] * max(0, 2 - len(result))
    h[1] = F.sub(h[1], 1)
    g = upoly_gcd(f, _ptrim(h), F)
    return len(g) - 1
