"""Finite groups as closures of generators, with numpy Cayley tables.

Identity checks run the word recursions on all |G|^2 pairs at once: each step
is a handful of table lookups over index arrays.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional, Sequence

import numpy as np

from .freewords import FreeWord, SequenceSpec, engel, quasi_engel
from .matgroups import MatrixElement
from .polycore import asset_path


class CapExceeded(RuntimeError):
    pass


def perm_mul(g: tuple, h: tuple) -> tuple:
    """(g h)(i) = g(h(i))."""
    return tuple(g[i] for i in h)


def _matrix_ops(projective: bool):
    def canon(m):
        return m.projective_normal() if projective else m
    return (lambda a, b: canon(a * b)), canon


class FiniteGroup:
    """Elements in breadth-first order from the identity, plus a lazily built table."""

    def __init__(self, elements: list, parents: list, gens: list, gen_table: np.ndarray,
                 name: str = "", table_cap: int = 4000):
        self.elements = elements
        self.index = {e: i for i, e in enumerate(elements)}
        self.parents = parents  # (parent index, generator index) for i > 0
        self.gens = gens
        self.gen_table = gen_table  # gen_table[i, s] = index of elements[i] * gens[s]
        self.name = name
        self.table_cap = table_cap

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return "FiniteGroup(%s, order %d)" % (self.name or "?", self.order)

    @cached_property
    def table(self) -> np.ndarray:
        """table[i, j] = index of elements[i] * elements[j]."""
        n = self.order
        if n > self.table_cap:
            raise CapExceeded("Cayley table for order %d exceeds cap %d" % (n, self.table_cap))
        t = np.zeros((n, n), dtype=np.int32)
        t[:, 0] = np.arange(n)
        # elements[j] = elements[parent] * gens[s], so column j is column parent pushed through s
        for j in range(1, n):
            par, s = self.parents[j]
            t[:, j] = self.gen_table[t[:, par], s]
        return t

    @cached_property
    def inverse(self) -> np.ndarray:
        rows, cols = np.nonzero(self.table == 0)
        inv = np.empty(self.order, dtype=np.int32)
        inv[rows] = cols
        return inv

    def mul(self, a, b):
        return self.table[a, b]

    def commutator(self, a, b):
        t, inv = self.table, self.inverse
        return t[t[a, b], t[inv[a], inv[b]]]

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def subgroup(self, gens: Sequence[int]) -> np.ndarray:
        """Sorted indices of the subgroup generated by gens."""
        gens = np.unique(np.asarray(list(gens), dtype=np.int64))
        gens = gens[gens != 0]
        have = np.zeros(self.order, dtype=bool)
        have[0] = True
        frontier = np.array([0])
        while len(frontier) and len(gens):
            new = np.unique(self.table[np.ix_(frontier, gens)].ravel())
            new = new[~have[new]]
            have[new] = True
            frontier = new
        return np.nonzero(have)[0]

    def commutator_subgroup(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        a = np.repeat(A, len(B))
        b = np.tile(B, len(A))
        return self.subgroup(np.unique(self.commutator(a, b)))

    def word_values(self, word: FreeWord, g: np.ndarray, h: np.ndarray) -> np.ndarray:
        inv = self.inverse
        gens = {1: g, -1: inv[g], 2: h, -2: inv[h]}
        r = np.zeros(len(g), dtype=np.int32)
        for a in word.letters:
            r = self.table[r, gens[a]]
        return r

    def all_pairs(self):
        n = self.order
        return np.repeat(np.arange(n, dtype=np.int32), n), np.tile(np.arange(n, dtype=np.int32), n)


def generate_group(gens: Sequence, cap: int = 100000, mul: Optional[Callable] = None,
                   canon: Optional[Callable] = None, projective: bool = False,
                   identity=None, name: str = "") -> FiniteGroup:
    """Closure of gens under right multiplication, breadth first.

    Matrices use their own product (projective classes if projective=True);
    permutations are tuples composed right to left.
    """
    if not gens:
        raise ValueError("need at least one generator")
    g0 = gens[0]
    if isinstance(g0, MatrixElement):
        mul2, can2 = _matrix_ops(projective)
        mul = mul or mul2
        canon = canon or can2
        if identity is None:
            identity = MatrixElement.identity(g0.spec, g0.dim)
    else:
        mul = mul or perm_mul
        canon = canon or (lambda e: e)
        if identity is None:
            identity = tuple(range(len(g0)))
    gens = [canon(g) for g in gens]
    identity = canon(identity)
    elements = [identity]
    index = {identity: 0}
    parents = [None]
    rows = []
    i = 0
    while i < len(elements):
        e = elements[i]
        row = []
        for s, g in enumerate(gens):
            p = mul(e, g)
            j = index.get(p)
            if j is None:
                j = len(elements)
                if j >= cap:
                    raise CapExceeded("group order exceeds cap %d" % cap)
                index[p] = j
                elements.append(p)
                parents.append((i, s))
            row.append(j)
        rows.append(row)
        i += 1
    gen_table = np.array(rows, dtype=np.int32).reshape(len(elements), len(gens))
    return FiniteGroup(elements, parents, gens, gen_table, name)


# -- series --------------------------------------------------------------------

def derived_series(G: FiniteGroup, max_len: int = 64) -> list[int]:
    H = np.arange(G.order)
    sizes = [len(H)]
    for _ in range(max_len):
        K = G.commutator_subgroup(H, H)
        if len(K) == len(H):
            break
        H = K
        sizes.append(len(H))
    return sizes


def solvability_class(G: FiniteGroup) -> Optional[int]:
    """Derived length, or None if the derived series stops above the identity."""
    sizes = derived_series(G)
    return len(sizes) - 1 if sizes[-1] == 1 else None


def lower_central_series(G: FiniteGroup, max_len: int = 64) -> list[int]:
    full = np.arange(G.order)
    H = full
    sizes = [len(H)]
    for _ in range(max_len):
        K = G.commutator_subgroup(H, full)
        if len(K) == len(H):
            break
        H = K
        sizes.append(len(H))
    return sizes


def nilpotency_class(G: FiniteGroup) -> Optional[int]:
    sizes = lower_central_series(G)
    return len(sizes) - 1 if sizes[-1] == 1 else None


# -- word sequences on all pairs ---------------------------------------------------

def sequence_pair_values(G: FiniteGroup, spec: SequenceSpec, n_max: int, g=None, h=None):
    """Yield the arrays u_1, u_2, ... over the given pairs (all pairs by default)."""
    if g is None:
        g, h = G.all_pairs()
    t, inv = G.table, G.inverse
    u = G.word_values(spec.initial, g, h)
    yield u
    v = g if spec.engel_variable == "x" else h
    for _ in range(n_max - 1):
        if spec.kind == "quasi_engel":
            a = t[t[g, u], inv[g]]
            b = t[t[h, u], inv[h]]
            u = G.commutator(a, b)
        else:
            u = G.commutator(u, v)
        yield u


def identity_index(G: FiniteGroup, spec: Optional[SequenceSpec] = None, n_max: int = 8) -> Optional[int]:
    """Least n <= n_max such that the n-th word is an identity on G."""
    if n_max < 1:
        raise ValueError("n_max >= 1")
    spec = spec or quasi_engel()
    for n, u in enumerate(sequence_pair_values(G, spec, n_max), 1):
        if not u.any():
            return n
    return None


def identity_profile(G: FiniteGroup, spec: Optional[SequenceSpec] = None, n_max: int = 8) -> list[bool]:
    """For each n <= n_max, whether the n-th word is an identity on G."""
    spec = spec or quasi_engel()
    return [not u.any() for u in sequence_pair_values(G, spec, n_max)]


def pointwise_monotone(G: FiniteGroup, spec: Optional[SequenceSpec] = None, n_max: int = 6) -> bool:
    """u_n(g,h) = 1 implies u_{n+1}(g,h) = 1 for every pair and n < n_max."""
    spec = spec or quasi_engel()
    prev = None
    for u in sequence_pair_values(G, spec, n_max):
        if prev is not None and (u[prev == 0] != 0).any():
            return False
        prev = u
    return True


# -- relation graphs -------------------------------------------------------------------

@dataclass
class RelationGraph:
    kind: str
    vertices: list
    edges: list  # sorted (i, j) with i < j, after symmetrising
    bound: int
    asymmetric: list = field(default_factory=list)

    def adjacency(self) -> dict:
        adj = {v: [] for v in self.vertices}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return {k: sorted(v) for k, v in adj.items()}

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind, "bound": self.bound,
                           "adjacency": {str(k): v for k, v in self.adjacency().items()},
                           "asymmetric_pairs": self.asymmetric}, indent=1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["source", "target"])
        w.writerows(self.edges)
        return buf.getvalue()

    def is_complete(self) -> bool:
        n = len(self.vertices)
        return len(self.edges) == n * (n - 1) // 2


def relation_graph(G: FiniteGroup, kind: str = "solvability", n_max: int = 8) -> RelationGraph:
    """Vertices are non-identity element indices; (g, h) is detected when the
    relevant word vanishes at (g, h) for some n <= n_max. Edges are the
    symmetric closure; pairs detected in one direction only are listed."""
    g, h = G.all_pairs()
    if kind == "commuting":
        hit = G.commutator(g, h) == 0
    elif kind in ("solvability", "nilpotency"):
        spec = quasi_engel() if kind == "solvability" else engel()
        hit = np.zeros(len(g), dtype=bool)
        for u in sequence_pair_values(G, spec, n_max):
            hit |= u == 0
            if hit.all():
                break
    else:
        raise ValueError("kind must be commuting, nilpotency or solvability")
    n = G.order
    D = hit.reshape(n, n)
    D[0, :] = D[:, 0] = False
    np.fill_diagonal(D, False)
    sym = D | D.T
    asym = D & ~D.T
    ii, jj = np.nonzero(np.triu(sym, 1))
    ai, aj = np.nonzero(asym)
    return RelationGraph(kind, list(range(1, n)), list(zip(ii.tolist(), jj.tolist())), n_max,
                         list(zip(ai.tolist(), aj.tolist())))


def zorn_variant_check(G: FiniteGroup, w: FreeWord, n_max: int = 6) -> dict:
    """Compare nilpotency of G with the identities [w, x, ..., x] = 1."""
    idx = identity_index(G, SequenceSpec("engel", w, "x"), n_max)
    nil = nilpotency_class(G)
    return {"group": G.name, "order": G.order, "nilpotency_class": nil, "engel_index": idx,
            "consistent": (nil is not None) == (idx is not None)}


# -- corpus ----------------------------------------------------------------------------

def _cycles_to_perm(n: int, cycles: Sequence[Sequence[int]]) -> tuple:
    p = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            p[a] = b
    return tuple(p)


def group_from_preset(entry: dict, cap: int = 1000) -> FiniteGroup:
    from .gf import gf
    kind = entry["kind"]
    if kind == "perm":
        n = entry["degree"]
        gens = [_cycles_to_perm(n, c) for c in entry["generators"]]
        return generate_group(gens, cap, name=entry["name"])
    if kind in ("matrix", "projective"):
        F = gf(entry["q"])
        gens = [MatrixElement.from_rows(F, [[F(x) for x in row] for row in m]) for m in entry["generators"]]
        return generate_group(gens, cap, projective=kind == "projective", name=entry["name"])
    raise ValueError("unknown preset kind %r" % kind)


def load_corpus(path: Optional[str] = None) -> list[dict]:
    with open(path or asset_path("group_corpus.json")) as fh:
        return json.load(fh)["groups"]


def corpus_groups(path: Optional[str] = None, cap: int = 1000) -> list[FiniteGroup]:
    return [group_from_preset(e, cap) for e in load_corpus(path)]


def cyclic(n: int) -> FiniteGroup:
    return generate_group([tuple((i + 1) % n for i in range(n))], name="C%d" % n)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    r = tuple((i + 1) % n for i in range(n))
    s = tuple((-i) % n for i in range(n))
    return generate_group([r, s], name="D%d" % n)


def symmetric(n: int) -> FiniteGroup:
    return generate_group([_cycles_to_perm(n, [list(range(n))]), _cycles_to_perm(n, [[0, 1]])],
                          name="S%d" % n)
