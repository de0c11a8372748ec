"""Matrices over finite fields: the PSL(2) pair x(t), y(b,c), PSL(3,3), and Suzuki matrices."""
from __future__ import annotations

import re
from typing import Sequence

from .freewords import FreeWord
from .gf import FieldElement, FieldSpec, parse_element, element_to_text, theta_map


class MatrixElement:
    """Square matrix over a finite field; entries are integer field codes, row-major."""

    __slots__ = ("spec", "dim", "entries")

    def __init__(self, spec: FieldSpec, dim: int, entries: Sequence):
        if len(entries) != dim * dim:
            raise ValueError("need %d entries" % (dim * dim))
        self.spec = spec
        self.dim = dim
        self.entries = tuple(_code(spec, e) for e in entries)

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows) -> "MatrixElement":
        return cls(spec, len(rows), [e for r in rows for e in r])

    @classmethod
    def identity(cls, spec: FieldSpec, dim: int) -> "MatrixElement":
        return cls(spec, dim, [1 if i == j else 0 for i in range(dim) for j in range(dim)])

    def __getitem__(self, ij) -> FieldElement:
        i, j = ij
        return FieldElement(self.spec, self.entries[i * self.dim + j])

    def rows(self) -> list[list[FieldElement]]:
        return [[self[i, j] for j in range(self.dim)] for i in range(self.dim)]

    def _check(self, other: "MatrixElement"):
        if other.spec != self.spec or other.dim != self.dim:
            raise ValueError("matrix dimension or field mismatch")

    def __mul__(self, other: "MatrixElement") -> "MatrixElement":
        self._check(other)
        F, n = self.spec, self.dim
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            for j in range(n):
                s = 0
                for k in range(n):
                    x, y = a[i * n + k], b[k * n + j]
                    if x and y:
                        s = F.add(s, F.mul(x, y))
                out.append(s)
        return MatrixElement._raw(F, n, tuple(out))

    @classmethod
    def _raw(cls, spec, dim, entries):
        m = object.__new__(cls)
        m.spec, m.dim, m.entries = spec, dim, entries
        return m

    def scale(self, c: int) -> "MatrixElement":
        F = self.spec
        return MatrixElement._raw(F, self.dim, tuple(F.mul(c, e) for e in self.entries))

    def det(self) -> FieldElement:
        return FieldElement(self.spec, _det(self.spec, self.entries, self.dim))

    def adjugate(self) -> "MatrixElement":
        F, n = self.spec, self.dim
        if n == 1:
            return MatrixElement._raw(F, 1, (1,))
        out = [0] * (n * n)
        for i in range(n):
            for j in range(n):
                minor = [self.entries[r * n + c] for r in range(n) if r != i for c in range(n) if c != j]
                d = _det(F, minor, n - 1)
                if (i + j) % 2:
                    d = F.neg(d)
                out[j * n + i] = d
        return MatrixElement._raw(F, n, tuple(out))

    def inverse(self) -> "MatrixElement":
        d = _det(self.spec, self.entries, self.dim)
        if d == 0:
            raise ZeroDivisionError("singular matrix")
        adj = self.adjugate()
        return adj if d == 1 else adj.scale(self.spec.inv(d))

    def __pow__(self, e: int) -> "MatrixElement":
        if e < 0:
            return self.inverse() ** (-e)
        r = MatrixElement.identity(self.spec, self.dim)
        a = self
        while e:
            if e & 1:
                r = r * a
            a = a * a
            e >>= 1
        return r

    def __eq__(self, other):
        return (isinstance(other, MatrixElement) and self.spec == other.spec
                and self.dim == other.dim and self.entries == other.entries)

    def __hash__(self):
        return hash((self.dim, self.entries))

    def is_identity(self) -> bool:
        return self == MatrixElement.identity(self.spec, self.dim)

    def projective_normal(self) -> "MatrixElement":
        """Scale so that the first nonzero entry is 1."""
        for e in self.entries:
            if e:
                return self if e == 1 else self.scale(self.spec.inv(e))
        return self

    def is_projective_identity(self) -> bool:
        return projective_eq(self, MatrixElement.identity(self.spec, self.dim))

    def __str__(self):
        return matrix_to_text(self)

    __repr__ = __str__


def _code(spec: FieldSpec, e) -> int:
    if isinstance(e, FieldElement):
        if e.spec != spec:
            raise ValueError("entry from another field")
        return e.code
    if isinstance(e, str):
        return parse_element(e, spec).code
    return int(e) % spec.p


def _det(F: FieldSpec, m: Sequence[int], n: int) -> int:
    if n == 1:
        return m[0]
    if n == 2:
        return F.sub(F.mul(m[0], m[3]), F.mul(m[1], m[2]))
    d = 0
    for j in range(n):
        if m[j]:
            minor = [m[r * n + c] for r in range(1, n) for c in range(n) if c != j]
            t = F.mul(m[j], _det(F, minor, n - 1))
            d = F.sub(d, t) if j % 2 else F.add(d, t)
    return d


def projective_eq(A: MatrixElement, B: MatrixElement) -> bool:
    """A = lambda B for a nonzero scalar lambda."""
    A._check(B)
    F = A.spec
    lam = None
    for a, b in zip(A.entries, B.entries):
        if (a == 0) != (b == 0):
            return False
        if a:
            r = F.mul(a, F.inv(b))
            if lam is None:
                lam = r
            elif r != lam:
                return False
    return True


def word_eval(word: FreeWord, x: MatrixElement, y: MatrixElement) -> MatrixElement:
    x._check(y)
    xi, yi = x.inverse(), y.inverse()
    pw = {1: x, -1: xi, 2: y, -2: yi}
    r = MatrixElement.identity(x.spec, x.dim)
    for g, e in word.syllables():
        base = pw[g if e > 0 else -g]
        r = r * (base ** abs(e))
    return r


# -- named matrices ----------------------------------------------------------

def psl2_gens(t, b, c) -> tuple[MatrixElement, MatrixElement]:
    """x(t) = [[t,-1],[1,0]] and y(b,c) = [[1,b],[c,1+bc]]."""
    F = _common_field(t, b, c)
    t, b, c = (F(v) for v in (t, b, c))
    x = MatrixElement.from_rows(F, [[t, -F.one], [F.one, F.zero]])
    y = MatrixElement.from_rows(F, [[F.one, b], [c, F.one + b * c]])
    return x, y


def _common_field(*vals) -> FieldSpec:
    specs = {v.spec for v in vals if isinstance(v, FieldElement)}
    if len(specs) != 1:
        raise ValueError("arguments must be elements of one field")
    return specs.pop()


PSL33_X = [[0, 0, 1], [0, 1, 0], [1, 0, 1]]
PSL33_Y = [[2, 0, 2], [0, 1, 1], [2, 1, 1]]


def psl33_pair() -> tuple[MatrixElement, MatrixElement]:
    from .gf import field_make
    F = field_make(3)
    return MatrixElement.from_rows(F, PSL33_X), MatrixElement.from_rows(F, PSL33_Y)


def suzuki_S(a, b, a0, b0) -> MatrixElement:
    """Lower unitriangular matrix with the twisted entries replaced by a0, b0."""
    F = _common_field(a, b, a0, b0)
    o, z = F.one, F.zero
    return MatrixElement.from_rows(F, [
        [o, z, z, z],
        [a, o, z, z],
        [a * a0 + b, a0, o, z],
        [a * a * a0 + a * b + b0, b, a, o],
    ])


def suzuki_S0(a, b, a0, b0) -> MatrixElement:
    """The twin matrix obtained by applying the Suzuki operator to the parameters."""
    F = _common_field(a, b, a0, b0)
    o, z = F.one, F.zero
    return MatrixElement.from_rows(F, [
        [o, z, z, z],
        [a0, o, z, z],
        [a0 * a * a + b0, a * a, o, z],
        [a0 * a0 * a * a + a0 * b0 + b * b, b0, a0, o],
    ])


def suzuki_U(a, b) -> MatrixElement:
    return suzuki_S(a, b, theta_map(a), theta_map(b))


def suzuki_M(c) -> MatrixElement:
    F = c.spec
    if not c:
        raise ZeroDivisionError("M(c) needs c != 0")
    m = F.degree // 2
    e = 2 ** m
    z = F.zero
    return MatrixElement.from_rows(F, [
        [c ** (1 + e), z, z, z],
        [z, c ** e, z, z],
        [z, z, c ** (-e), z],
        [z, z, z, c ** (-1 - e)],
    ])


def suzuki_T(F: FieldSpec) -> MatrixElement:
    return MatrixElement(F, 4, [1 if i + j == 3 else 0 for i in range(4) for j in range(4)])


def suzuki_gens(a, b, c) -> tuple[MatrixElement, MatrixElement, MatrixElement]:
    F = _common_field(a, b, c)
    if F.p != 2 or F.degree % 2 == 0:
        raise ValueError("Suzuki matrices need GF(2^n) with n odd")
    return suzuki_U(a, b), suzuki_M(c), suzuki_T(F)


def suzuki_xy(a, b, c, d) -> tuple[MatrixElement, MatrixElement]:
    """x = T U(a,b), y = T U(c,d)."""
    T = suzuki_T(a.spec)
    return T * suzuki_U(a, b), T * suzuki_U(c, d)


# -- text I/O ----------------------------------------------------------------

def matrix_to_text(m: MatrixElement) -> str:
    return "[" + ",".join("[" + ",".join(element_to_text(e) for e in row) + "]" for row in m.rows()) + "]"


def parse_matrix(text: str, spec: FieldSpec) -> MatrixElement:
    s = text.replace(" ", "")
    rows = re.findall(r"\[([^\[\]]*)\]", s)
    if not rows:
        raise ValueError("no rows in %r" % text)
    data = [[parse_element(e, spec) for e in r.split(",")] for r in rows]
    if any(len(r) != len(data) for r in data):
        raise ValueError("matrix must be square")
    return MatrixElement.from_rows(spec, data)
