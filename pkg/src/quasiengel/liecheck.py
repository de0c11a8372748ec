"""Finite-dimensional Lie algebras over GF(p) given by structure constants.

C[i, j, k] is the coefficient of e_k in [e_i, e_j]. The sequence
v_1 = [x, y], v_{n+1} = [[v_n, x], [v_n, y]] is evaluated on coordinate vectors.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .gf import is_prime

# the equivalence for Lie algebras is stated away from these characteristics
EXCLUDED_CHARACTERISTICS = (2, 3, 5)


class LieAlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    p: int
    C: np.ndarray
    name: str = ""

    def bracket(self, x, y) -> np.ndarray:
        """Bracket of coordinate vectors; batched along a leading axis."""
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        r = np.einsum("...i,...j,ijk->...k", x, y, self.C)
        return r % self.p

    def basis(self) -> np.ndarray:
        return np.eye(self.dim, dtype=np.int64)

    @property
    def theorem_applies(self) -> bool:
        return self.p not in EXCLUDED_CHARACTERISTICS


def lie_make(constants, p: int, name: str = "") -> LieAlgebra:
    """Validate antisymmetry and the Jacobi identity on basis triples.

    constants is an array C[i][j][k] or a dict {(i, j): {k: c}} listing [e_i, e_j]
    for i < j (the rest follows by antisymmetry).
    """
    if not is_prime(p):
        raise LieAlgebraError("p must be prime")
    if isinstance(constants, dict):
        dim = 1 + max(max(i, j, *d.keys()) for (i, j), d in constants.items()) if constants else 0
        C = np.zeros((dim, dim, dim), dtype=np.int64)
        for (i, j), d in constants.items():
            for k, c in d.items():
                C[i, j, k] = c % p
                if i != j:
                    C[j, i, k] = (-c) % p
    else:
        C = np.asarray(constants, dtype=np.int64) % p
        if C.ndim != 3 or len(set(C.shape)) != 1:
            raise LieAlgebraError("constants must be a dim x dim x dim array")
    dim = C.shape[0]
    for i in range(dim):
        if C[i, i].any():
            raise LieAlgebraError("[e%d, e%d] != 0" % (i, i))
        for j in range(i + 1, dim):
            if ((C[i, j] + C[j, i]) % p).any():
                raise LieAlgebraError("[e%d, e%d] != -[e%d, e%d]" % (i, j, j, i))
    L = LieAlgebra(dim, p, C, name)
    E = L.basis()
    for i, j, k in itertools.combinations(range(dim), 3):
        a, b, c = E[i], E[j], E[k]
        s = (L.bracket(a, L.bracket(b, c)) + L.bracket(b, L.bracket(c, a))
             + L.bracket(c, L.bracket(a, b))) % p
        if s.any():
            raise LieAlgebraError("Jacobi identity fails on (e%d, e%d, e%d)" % (i, j, k))
    return L


def v_sequence_eval(L: LieAlgebra, x, y, n: int) -> np.ndarray:
    if n < 1:
        raise ValueError("n >= 1")
    v = L.bracket(x, y)
    for _ in range(n - 1):
        v = L.bracket(L.bracket(v, x), L.bracket(v, y))
    return v


def row_reduce(M: np.ndarray, p: int) -> np.ndarray:
    """Row echelon basis of the row space mod p."""
    M = np.array(M, dtype=np.int64) % p
    rows, cols = M.shape if M.ndim == 2 else (0, 0)
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i, c]), None)
        if piv is None:
            continue
        M[[r, piv]] = M[[piv, r]]
        M[r] = M[r] * pow(int(M[r, c]), -1, p) % p
        others = np.nonzero(M[:, c])[0]
        for i in others:
            if i != r:
                M[i] = (M[i] - M[i, c] * M[r]) % p
        r += 1
        if r == rows:
            break
    return M[:r]


def span_bracket(L: LieAlgebra, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if len(A) == 0 or len(B) == 0:
        return np.zeros((0, L.dim), dtype=np.int64)
    a = np.repeat(A, len(B), axis=0)
    b = np.tile(B, (len(A), 1))
    return row_reduce(L.bracket(a, b), L.p)


def derived_series(L: LieAlgebra, max_len: int = 64) -> list[int]:
    S = L.basis()
    dims = [len(S)]
    for _ in range(max_len):
        if len(S) == 0:
            break
        T = span_bracket(L, S, S)
        if len(T) == len(S):
            break
        S = T
        dims.append(len(S))
    return dims


def lie_solvable(L: LieAlgebra) -> Optional[int]:
    """Derived length, or None when the derived series stabilises at a nonzero ideal."""
    dims = derived_series(L)
    return len(dims) - 1 if dims[-1] == 0 else None


def all_vectors(L: LieAlgebra) -> np.ndarray:
    return np.array(list(itertools.product(range(L.p), repeat=L.dim)), dtype=np.int64)


@dataclass
class IdentityReport:
    index: Optional[int]
    mode: str  # exhaustive | sampled
    pairs: int
    theorem_applies: bool


def v_identity_check(L: LieAlgebra, n_max: int = 4, samples: int = 20000,
                     rng: Optional[np.random.Generator] = None,
                     exhaustive_limit: int = 200000) -> IdentityReport:
    """Least n <= n_max with v_n(x, y) = 0 on every tested pair.

    All pairs are tested when there are at most exhaustive_limit of them;
    otherwise a random sample is used and the result is only evidence.
    """
    total = L.p ** (2 * L.dim)
    if total <= exhaustive_limit:
        V = all_vectors(L)
        x = np.repeat(V, len(V), axis=0)
        y = np.tile(V, (len(V), 1))
        mode = "exhaustive"
    else:
        rng = rng or np.random.default_rng(0)
        x = rng.integers(0, L.p, size=(samples, L.dim))
        y = rng.integers(0, L.p, size=(samples, L.dim))
        mode = "sampled"
    v = L.bracket(x, y)
    idx = None
    for n in range(1, n_max + 1):
        if not v.any():
            idx = n
            break
        v = L.bracket(L.bracket(v, x), L.bracket(v, y))
    return IdentityReport(idx, mode, len(x), L.theorem_applies)


def v_identity_index(L: LieAlgebra, n_max: int = 4, **kw) -> Optional[int]:
    return v_identity_check(L, n_max, **kw).index


def v_in_derived(L: LieAlgebra, n: int, pairs: int = 500, rng=None) -> bool:
    """v_n lies in the n-th derived algebra, on random pairs."""
    rng = rng or np.random.default_rng(1)
    S = L.basis()
    for _ in range(n):
        S = span_bracket(L, S, S)
    x = rng.integers(0, L.p, size=(pairs, L.dim))
    y = rng.integers(0, L.p, size=(pairs, L.dim))
    v = v_sequence_eval(L, x, y, n)
    base = len(S)
    for row in v:
        if row.any() and len(row_reduce(np.vstack([S, row]) if base else row[None, :], L.p)) > base:
            return False
    return True


# -- examples ------------------------------------------------------------------------

def abelian(dim: int, p: int) -> LieAlgebra:
    return lie_make(np.zeros((dim, dim, dim), dtype=np.int64), p, "abelian%d" % dim)


def sl2(p: int) -> LieAlgebra:
    """Basis e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f."""
    return lie_make({(0, 1): {2: 1}, (2, 0): {0: 2}, (2, 1): {1: -2}}, p, "sl2")


def nonabelian2(p: int) -> LieAlgebra:
    """[a, b] = b."""
    return lie_make({(0, 1): {1: 1}}, p, "aff1")


def heisenberg(p: int) -> LieAlgebra:
    return lie_make({(0, 1): {2: 1}}, p, "heis3")


def borel_sl3(p: int) -> LieAlgebra:
    """Traceless upper triangular 3x3 matrices: h1, h2, e12, e23, e13."""
    c = {
        (0, 2): {2: 2}, (0, 3): {3: -1}, (0, 4): {4: 1},
        (1, 2): {2: -1}, (1, 3): {3: 2}, (1, 4): {4: 1},
        (2, 3): {4: 1},
    }
    return lie_make(c, p, "borel_sl3")


def parse_constants(text: str) -> dict:
    """Lines 'i j : k c, k c' meaning [e_i, e_j] = sum c e_k."""
    out: dict = {}
    for line in text.splitlines():
        line = line.split("#")[0].strip()
        if not line:
            continue
        lhs, _, rhs = line.partition(":")
        i, j = (int(s) for s in lhs.split())
        terms = {}
        for part in rhs.split(","):
            if part.strip():
                k, c = part.split()
                terms[int(k)] = int(c)
        out[(i, j)] = terms
    return out
