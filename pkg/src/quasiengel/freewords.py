"""Reduced words in the free group on x, y and the word sequences built from them.

Letters are small integers: x = 1, y = 2 and their inverses -1, -2.
Commutators follow [A, B] = A B A^-1 B^-1.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, TypeVar

X, Y = 1, 2
_NAMES = {1: "x", 2: "y"}
_CODES = {"x": 1, "y": 2, "X": -1, "Y": -2}

G = TypeVar("G")


def free_reduce(letters: Iterable) -> "FreeWord":
    out: list[int] = []
    for a in letters:
        a = _letter(a)
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return FreeWord._raw(tuple(out))


def _letter(a) -> int:
    if isinstance(a, int):
        if a not in (1, -1, 2, -2):
            raise ValueError("bad letter %r" % a)
        return a
    if a in _CODES:
        return _CODES[a]
    if a in ("x^-1", "x-1"):
        return -1
    if a in ("y^-1", "y-1"):
        return -2
    raise ValueError("bad letter %r" % (a,))


class FreeWord:
    __slots__ = ("letters",)

    def __init__(self, letters: Iterable = ()):
        self.letters = free_reduce(letters).letters

    @classmethod
    def _raw(cls, letters: tuple) -> "FreeWord":
        w = object.__new__(cls)
        w.letters = letters
        return w

    @classmethod
    def parse(cls, text: str) -> "FreeWord":
        """Read "x^-2*y^-1*x", "x^-2 y^-1 x" or "x-2y-1x"."""
        s = text.replace("*", "").replace(" ", "").replace("⁻", "-")
        if s in ("", "1", "e"):
            return cls._raw(())
        out = []
        pos = 0
        for m in re.finditer(r"([xyXY])(?:\^?(-?\d+))?", s):
            if m.start() != pos:
                raise ValueError("cannot parse word %r" % text)
            pos = m.end()
            a = _CODES[m.group(1)]
            e = int(m.group(2)) if m.group(2) else 1
            if e < 0:
                a, e = -a, -e
            out.extend([a] * e)
        if pos != len(s):
            raise ValueError("cannot parse word %r" % text)
        return free_reduce(out)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return free_reduce(self.letters + other.letters)

    def __invert__(self) -> "FreeWord":
        return FreeWord._raw(tuple(-a for a in reversed(self.letters)))

    inverse = __invert__

    def __pow__(self, n: int) -> "FreeWord":
        if n < 0:
            return (~self) ** (-n)
        return free_reduce(self.letters * n)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __lt__(self, other):
        return _sort_key(self) < _sort_key(other)

    def is_identity(self) -> bool:
        return not self.letters

    def syllables(self) -> list[tuple[int, int]]:
        """Runs of equal generators as (generator, signed exponent)."""
        out: list[list[int]] = []
        for a in self.letters:
            g, s = abs(a), 1 if a > 0 else -1
            if out and out[-1][0] == g:
                out[-1][1] += s
            else:
                out.append([g, s])
        return [(g, e) for g, e in out]

    def __str__(self):
        if not self.letters:
            return "1"
        parts = []
        for g, e in self.syllables():
            parts.append(_NAMES[g] if e == 1 else "%s^%d" % (_NAMES[g], e))
        return "*".join(parts)

    def __repr__(self):
        return "FreeWord(%r)" % str(self)

    def evaluate(self, x: G, y: G, mul: Callable[[G, G], G], inv: Callable[[G], G], one: G) -> G:
        gens = {1: x, 2: y, -1: inv(x), -2: inv(y)}
        r = one
        for a in self.letters:
            r = mul(r, gens[a])
        return r

    def cyclic_reduction(self) -> "FreeWord":
        w = list(self.letters)
        while len(w) > 1 and w[0] == -w[-1]:
            w = w[1:-1]
        return FreeWord._raw(tuple(w))

    def is_cyclic_conjugate(self, other: "FreeWord") -> bool:
        a = self.cyclic_reduction().letters
        b = other.cyclic_reduction().letters
        if len(a) != len(b):
            return False
        if not a:
            return True
        return any(a[i:] + a[:i] == b for i in range(len(a)))


def _sort_key(w: FreeWord):
    order = {1: 0, -1: 1, 2: 2, -2: 3}
    return (len(w), [order[a] for a in w.letters])


x = FreeWord._raw((X,))
y = FreeWord._raw((Y,))
W0 = FreeWord.parse("x^-2*y^-1*x")


def commutator(a: FreeWord, b: FreeWord) -> FreeWord:
    return a * b * ~a * ~b


@dataclass(frozen=True)
class SequenceSpec:
    kind: str = "quasi_engel"
    initial: FreeWord = W0
    engel_variable: str = "x"

    def __post_init__(self):
        if self.kind not in ("engel", "quasi_engel"):
            raise ValueError("kind must be engel or quasi_engel")
        if self.engel_variable not in ("x", "y"):
            raise ValueError("engel_variable must be x or y")
        if self.kind == "quasi_engel" and self.initial.is_identity():
            raise ValueError("quasi-Engel sequence needs a nonempty initial word")


def quasi_engel(w: FreeWord = W0) -> SequenceSpec:
    return SequenceSpec("quasi_engel", w)


def engel(initial: FreeWord | None = None, variable: str = "x") -> SequenceSpec:
    """Engel sequence; by default e_1 = [y, x] and e_{n+1} = [e_n, x]."""
    if initial is None:
        initial = commutator(y, x)
    return SequenceSpec("engel", initial, variable)


def next_term(spec: SequenceSpec, u: FreeWord) -> FreeWord:
    if spec.kind == "quasi_engel":
        return commutator(x * u * ~x, y * u * ~y)
    v = x if spec.engel_variable == "x" else y
    return commutator(u, v)


def iter_sequence(spec: SequenceSpec) -> Iterator[FreeWord]:
    u = spec.initial
    while True:
        yield u
        u = next_term(spec, u)


def build_sequence(spec: SequenceSpec, n: int) -> FreeWord:
    """The n-th term (1-based); its reduced length is len(result)."""
    if n < 1:
        raise ValueError("sequence index starts at 1")
    for i, u in enumerate(iter_sequence(spec), 1):
        if i == n:
            return u
    raise AssertionError


def sequence_lengths(spec: SequenceSpec, n: int) -> list[int]:
    out = []
    for i, u in enumerate(iter_sequence(spec), 1):
        out.append(len(u))
        if i == n:
            return out
    return out


def equation_normalize(i: int, j: int, spec: SequenceSpec | None = None) -> FreeWord:
    """u_i * u_j^-1, whose vanishing is the equation u_i = u_j."""
    if i == j:
        raise ValueError("u_i = u_i is not an equation")
    spec = spec or quasi_engel()
    return build_sequence(spec, i) * ~build_sequence(spec, j)


def short_equation_sides() -> tuple[FreeWord, FreeWord]:
    """A short form of u_1 = u_2 for w = x^-2 y^-1 x, used to build matrix ideals.

    x^-1 y x^-1 y^-1 x^2 = y x^-2 y^-1 x y^-1; the left-minus-right word is a
    cyclic conjugate of the inverse of u_1 u_2^-1.
    """
    return FreeWord.parse("x^-1*y*x^-1*y^-1*x^2"), FreeWord.parse("y*x^-2*y^-1*x*y^-1")


def enumerate_initial_words(max_length: int) -> list[FreeWord]:
    """All nonempty reduced words up to the given length, shortlex order."""
    if max_length < 1:
        raise ValueError("max_length must be at least 1")
    alphabet = (1, -1, 2, -2)
    out: list[FreeWord] = []
    layer: list[tuple] = [()]
    for _ in range(max_length):
        nxt = []
        for w in layer:
            for a in alphabet:
                if w and w[-1] == -a:
                    continue
                nxt.append(w + (a,))
        out.extend(FreeWord._raw(w) for w in nxt)
        layer = nxt
    return out


# -- group-level recursion -------------------------------------------------

def sequence_values(spec: SequenceSpec, g: G, h: G, n_max: int,
                    mul: Callable[[G, G], G], inv: Callable[[G], G], one: G) -> list[G]:
    """Values u_1(g,h) .. u_{n_max}(g,h) by recursion on group elements."""
    u = spec.initial.evaluate(g, h, mul, inv, one)
    vals = [u]
    gi, hi = inv(g), inv(h)
    v = g if spec.engel_variable == "x" else h
    vi = inv(v)
    for _ in range(n_max - 1):
        if spec.kind == "quasi_engel":
            a = mul(mul(g, u), gi)
            b = mul(mul(h, u), hi)
            u = mul(mul(a, b), mul(inv(a), inv(b)))
        else:
            u = mul(mul(u, v), mul(inv(u), vi))
        vals.append(u)
    return vals
