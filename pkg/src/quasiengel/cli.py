"""Command-line front end and the initial-word screening driver.

Every subcommand produces a list of flat records and an overall verdict; the
process exits nonzero when any requested check fails.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import groupkit, liecheck, polycore, varietylab as vl
from .freewords import FreeWord, enumerate_initial_words
from .gf import gf, is_prime, prime_power


@dataclass
class RunConfig:
    command: str
    action: Optional[str]
    fmt: str = "text"
    jobs: int = 1
    assets: Optional[str] = None
    stretch: bool = False
    out: Optional[str] = None
    max_tuples: int = 1 << 24
    max_pairs: int = 1 << 20

    def __post_init__(self):
        if self.fmt not in ("json", "csv", "text"):
            raise ValueError("format must be json, csv or text")
        if self.jobs < 1 or self.max_tuples < 1 or self.max_pairs < 1:
            raise ValueError("caps and worker count must be positive")


class CapError(RuntimeError):
    pass


# -- screening ---------------------------------------------------------------------

@dataclass
class ScreeningReport:
    word: str
    counts: dict = field(default_factory=dict)  # p -> triples with u1 = u2 != 1
    flagged: bool = False

    def as_dict(self):
        d = {"word": self.word, "flagged": self.flagged}
        d.update({"p%d" % p: c for p, c in self.counts.items()})
        return d


def _m2(A, B, p):
    """Batched 2x2 products; matrices are (N, 4) arrays a, b, c, d row-major."""
    a, b, c, d = A[:, 0], A[:, 1], A[:, 2], A[:, 3]
    e, f, g, h = B[:, 0], B[:, 1], B[:, 2], B[:, 3]
    return np.stack([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h], axis=1) % p


def _inv2(A, p):
    # determinant one throughout
    return np.stack([A[:, 3], -A[:, 1], -A[:, 2], A[:, 0]], axis=1) % p


def psl2_pair_grid(p: int):
    """x(t) and y(b, c) for every (t, b, c) in GF(p)^3."""
    t, b, c = (a.ravel() for a in np.meshgrid(*[np.arange(p, dtype=np.int64)] * 3, indexing="ij"))
    one, zero = np.ones_like(t), np.zeros_like(t)
    X = np.stack([t, -one % p, one, zero], axis=1)
    Y = np.stack([one, b, c, (1 + b * c) % p], axis=1)
    return X, Y


def _word2(word: FreeWord, gens: dict, p: int):
    n = len(next(iter(gens.values())))
    r = np.tile(np.array([1, 0, 0, 1], dtype=np.int64), (n, 1))
    for a in word.letters:
        r = _m2(r, gens[a], p)
    return r


def screen_counts(word: FreeWord, p: int) -> int:
    """Triples (t, b, c) over GF(p) with u1 = u2 and u1 != 1 in PSL(2, p)."""
    X, Y = psl2_pair_grid(p)
    Xi, Yi = _inv2(X, p), _inv2(Y, p)
    u1 = _word2(word, {1: X, -1: Xi, 2: Y, -2: Yi}, p)
    A = _m2(_m2(X, u1, p), Xi, p)
    B = _m2(_m2(Y, u1, p), Yi, p)
    u2 = _m2(_m2(A, B, p), _m2(_inv2(A, p), _inv2(B, p), p), p)
    # proportional iff every 2x2 minor of the stacked entry vectors vanishes
    eq = np.ones(len(X), dtype=bool)
    for i in range(4):
        for j in range(i + 1, 4):
            eq &= (u1[:, i] * u2[:, j] - u1[:, j] * u2[:, i]) % p == 0
    scalar = (u1[:, 1] == 0) & (u1[:, 2] == 0) & (u1[:, 0] == u1[:, 3])
    return int((eq & ~scalar).sum())


def _screen_one(args):
    word, primes = args
    w = FreeWord.parse(word)
    counts = {p: screen_counts(w, p) for p in primes}
    return ScreeningReport(word, counts, all(c > 0 for c in counts.values()))


def screen_words(max_length: int, primes: Sequence[int], jobs: int = 1,
                 max_tuples: int = 1 << 24) -> list[ScreeningReport]:
    """Screen every reduced word up to max_length over PSL(2, p) for the given primes.

    Returns one report per word; callers filter on .flagged.
    """
    primes = sorted(set(primes))
    if not primes or any(p < 5 or not is_prime(p) for p in primes):
        raise ValueError("primes must be primes >= 5")
    if max(primes) ** 3 > max_tuples:
        raise CapError("p^3 = %d exceeds the tuple cap" % max(primes) ** 3)
    words = [str(w) for w in enumerate_initial_words(max_length)]
    tasks = [(w, tuple(primes)) for w in words]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            return list(ex.map(_screen_one, tasks, chunksize=8))
    return [_screen_one(t) for t in tasks]


# -- helpers -------------------------------------------------------------------------

def _field(text: str):
    """'p^k', 'p**k' or a prime power q."""
    s = text.replace("**", "^")
    if "^" in s:
        p, k = (int(v) for v in s.split("^"))
        q = p ** k
    else:
        q = int(s)
    if prime_power(q) is None:
        raise ValueError("%s is not a prime power" % text)
    return q


def _load(path: str, name: str, char: Optional[int]):
    S = polycore.read_system(path, char)
    if name not in S.entries:
        raise KeyError("%s has no entry %s (have %s)" % (path, name, ", ".join(S.entries)))
    return S


def _order(S, kind: Optional[str]):
    return polycore.MonomialOrder.make(S.ring, kind) if kind else S.order


def _text(f) -> str:
    return polycore.poly_to_text(f, caret=True)


# -- poly ------------------------------------------------------------------------------

def cmd_poly(a, cfg):
    char = getattr(a, "char", None)
    if a.action == "parse":
        R = polycore.Ring(tuple(a.ring.split(",")), char or 0)
        f = polycore.parse_poly(a.text, R)
        return [{"input": a.text, "parsed": _text(f), "terms": len(f.terms),
                 "degree": f.total_degree()}], True
    if a.action == "subst-check":
        res = vl.substitution_identities()
        return [{"identity": i + 1, "holds": ok} for i, ok in enumerate(res)], all(res)
    if a.action == "lift-verify":
        src, dst, mat = (r.partition(":") for r in (a.source, a.target, a.matrix))
        I = _load(src[0], src[2], char).vector(src[2])
        J = _load(dst[0], dst[2], char).vector(dst[2])
        M = _load(mat[0], mat[2], char).matrix(mat[2])
        M = [[m.change_ring(I[0].ring) for m in row] for row in M]
        ok = polycore.lift_verify(I, J, M)
        return [{"from": a.source, "to": a.target, "matrix": a.matrix, "char": char or 0, "ok": ok}], ok
    S = _load(a.system, a.name, char)
    G = S.vector(a.name)
    order = _order(S, a.order)
    if a.action == "nf":
        f = polycore.parse_poly(a.poly, S.ring)
        r = polycore.normal_form(f, G, order)
        ok = r.is_zero() if a.expect_zero else True
        return [{"poly": a.poly, "normal_form": _text(r), "zero": r.is_zero()}], ok
    if a.action == "gb":
        if a.check:
            ok = polycore.is_groebner(G, order)
            return [{"system": a.system, "name": a.name, "char": S.ring.p, "is_groebner": ok}], ok
        B = polycore.reduced_basis(polycore.buchberger(G, order, max_pairs=cfg.max_pairs), order)
        return [{"index": i + 1, "generator": _text(g)} for i, g in enumerate(B)], True
    if a.action == "quotient":
        h = polycore.parse_poly(a.by, S.ring)
        Q = polycore.ideal_quotient(G, h, order)
        same = polycore.ideals_equal(Q, G, order)
        recs = [{"index": i + 1, "generator": _text(g)} for i, g in enumerate(Q)]
        recs.append({"equal_to_input": same, "char": S.ring.p})
        return recs, same if a.expect_equal else True
    if a.action == "hilb":
        d, pa, H = polycore.curve_hilbert(G, order, hvar=a.hvar)
        return [{"system": a.system, "char": S.ring.p, "hilbert": str(H), "dimension": H.dimension,
                 "degree": d, "arithmetic_genus": pa}], True
    raise ValueError(a.action)


# -- count -----------------------------------------------------------------------------

def _table_value(name, key, keycol, valcol):
    for r in vl.read_table(name):
        if int(r[keycol]) == key and r[valcol].strip():
            return int(r[valcol])
    return None


def cmd_count(a, cfg):
    if a.action == "plane":
        q = _field(a.field or str(a.q))
        if q > 1 << 16 and not cfg.stretch:
            raise CapError("q > 65536 needs --stretch")
        rec = vl.plane_curve_count(q, a.method or "auto").as_dict()
        pp = prime_power(q)
        exp = _table_value("table5.csv", q, "q", "A") if pp[1] > 1 or pp[0] < 5 else None
        if exp is None:
            exp = _table_value("table6.csv", q, "p", "A")
        rec["expected"] = exp
        return [rec], exp is None or exp == rec["count"]
    if a.action == "curveC":
        q = _field(a.field or str(a.q))
        if q ** 3 > cfg.max_tuples and not cfg.stretch:
            raise CapError("q^3 tuples exceed the cap; use --stretch")
        I, _ = vl.psl2_system()
        t0 = time.time()
        pts = vl.zeros_of_system(I, gf(q), "tbc")
        return [vl.CountRecord("C", prime_power(q), len(pts), "enumeration", time.time() - t0).as_dict()], True
    if a.action == "suzuki":
        n = a.n
        if n >= 7 and not cfg.stretch:
            raise CapError("n = 7 needs --stretch")
        rec = vl.suzuki_equation_count(n, method=a.method or "matrix").as_dict()
        return [rec], True
    if a.action == "fixpoints":
        if not (a.upto or a.n):
            raise ValueError("give --n or --upto")
        ns = range(1, a.upto + 1) if a.upto else [a.n]
        table = vl.read_table3()
        recs, ok = [], True
        for n in ns:
            if n > 7 and not cfg.stretch:
                raise CapError("n > 7 needs --stretch")
            rec = vl.fixpoint_count(n).as_dict()
            rec["expected"] = table.get(n)
            ok &= rec["expected"] is None or rec["expected"] == rec["count"]
            recs.append(rec)
        return recs, ok
    raise ValueError(a.action)


# -- verify ----------------------------------------------------------------------------

def _verify_t1(row):
    return vl.verify_psl2_witness(int(row["q"]), [int(row[k]) for k in ("c", "b", "t")])


def cmd_verify(a, cfg):
    if a.action == "witness":
        table = a.table.replace(".csv", "")
        rows = vl.read_table(table + ".csv")
        if a.row is not None:
            rows = [r for r in rows if int(r["q"]) == a.row]
            if not rows:
                raise KeyError("no row with q = %d" % a.row)
        fn = _verify_t1 if table == "table1" else vl.verify_table2_row
        if cfg.jobs > 1:
            with ProcessPoolExecutor(cfg.jobs) as ex:
                recs = list(ex.map(fn, rows))
        else:
            recs = [fn(r) for r in rows]
        for r in recs:
            r.pop("point", None)
        return recs, all(r["valid"] for r in recs)
    if a.action == "fixpoint":
        entries = vl.fixpoint_witnesses()
        if a.p is not None:
            entries = [e for e in entries if e["p"] == a.p]
            if not entries:
                raise KeyError("no witness for p = %d" % a.p)
        recs = [vl.verify_witness_entry(e) for e in entries]
        for r in recs:
            r["resolved"] = "; ".join(r["resolved"])
        return recs, all(r["valid"] for r in recs)
    if a.action == "psl33":
        from .matgroups import psl33_pair, word_eval, projective_eq
        from .freewords import build_sequence, quasi_engel
        x, y = psl33_pair()
        spec = quasi_engel()
        u1 = word_eval(build_sequence(spec, 1), x, y)
        u2 = word_eval(build_sequence(spec, 2), x, y)
        eq, nontriv = projective_eq(u1, u2), not u1.is_projective_identity()
        G = groupkit.generate_group([x, y], cap=10000, projective=True, name="PSL(3,3)")
        ok = eq and nontriv and G.order == 5616
        return [{"u1_eq_u2": eq, "u1_nontrivial": nontriv, "order": G.order}], ok
    if a.action == "v-equals-w":
        ok, info = vl.v_equals_w_check(a.k)
        info["equal"] = ok
        return [info], ok
    if a.action == "singular":
        ok, counts = vl.singular_locus_fixfree(a.n)
        return [{"n": a.n, **counts, "fixpoint_free": ok}], ok
    if a.action in ("table5", "table6"):
        recs = vl.compare_table5() if a.action == "table5" else vl.compare_table6()
        return recs, all(r["ok"] for r in recs)
    if a.action == "boundary":
        ok, info = vl.projective_boundary_check()
        return [{"identity": info["identity"], "homogenisation": info["homogenisation"],
                 "ok": ok}], ok
    raise ValueError(a.action)


# -- bound -----------------------------------------------------------------------------

def cmd_bound(a, cfg):
    if a.action == "hw":
        if a.q is None:
            th = vl.hw_threshold(a.pa, a.d, prime_power_only=a.prime_power)
            return [{"bound": "hasse_weil", "p_a": a.pa, "d": a.d, "threshold": th}], True
        return [vl.hasse_weil(a.q, a.pa, a.d).as_dict()], True
    if a.action == "lefschetz":
        if a.n is None:
            th = vl.lefschetz_threshold(a.b1, a.b2)
            return [{"bound": "lefschetz", "b1": a.b1, "b2": a.b2, "threshold": th}], True
        rep = vl.lefschetz_bound(a.n, a.b1, a.b2)
        return [rep.as_dict()], True
    if a.action == "as":
        v = vl.adolphson_sperber(a.N, a.r, a.d)
        return [{"bound": "adolphson_sperber", "N": a.N, "r": a.r, "d": a.d, "value": v}], True
    if a.action == "genus":
        deltas = [int(s) for s in a.deltas.split(",") if s.strip()] if a.deltas else []
        g = vl.genus_from_singularities(a.d, deltas)
        return [{"d": a.d, "deltas": a.deltas or "", "genus": g}], True
    if a.action == "chi-w":
        return [vl.euler_bound_report().as_dict()], True
    raise ValueError(a.action)


# -- zeta, screen, group, lie --------------------------------------------------------------

def cmd_zeta(a, cfg):
    rows = vl.read_table(a.counts)
    key = "N" if "N" in rows[0] else list(rows[0])[1]
    counts = [int(r[key]) for r in sorted(rows, key=lambda r: int(list(r.values())[0]))]
    trunc = a.order or len(counts)
    co = vl.zeta_series(counts, trunc)
    recs = [{"power": i, "coefficient": str(c)} for i, c in enumerate(co)]
    ok = True
    if a.compare:
        exp = {int(r["power"]): r["coefficient"] for r in vl.read_table(a.compare)}
        for r in recs:
            e = exp.get(r["power"])
            r["expected"] = e
            ok &= e is None or str(e) == r["coefficient"]
    recs.append({"series": vl.series_to_text(co)})
    return recs, ok


def cmd_screen(a, cfg):
    primes = [int(s) for s in a.primes.split(",")]
    reps = screen_words(a.max_length, primes, cfg.jobs, cfg.max_tuples)
    flagged = {r.word for r in reps if r.flagged}
    ok = True
    missing = []
    for w in a.require or []:
        canon = str(FreeWord.parse(w))
        if canon not in flagged:
            ok = False
            missing.append(canon)
    out = [r.as_dict() for r in reps if r.flagged or a.all]
    out.append({"words": len(reps), "flagged": len(flagged), "missing_required": " ".join(missing)})
    return out, ok


def cmd_group(a, cfg):
    entries = groupkit.load_corpus(a.corpus)
    if a.name:
        entries = [e for e in entries if e["name"] in a.name.split(",")]
        if not entries:
            raise KeyError("no corpus group named %s" % a.name)
    recs, ok = [], True
    for e in entries:
        G = groupkit.group_from_preset(e, cap=a.cap)
        if G.order ** 2 > cfg.max_pairs and not cfg.stretch:
            raise CapError("%s has %d pairs; raise --max-pairs or use --stretch" % (G.name, G.order ** 2))
        sol = groupkit.solvability_class(G)
        idx = groupkit.identity_index(G, n_max=a.n_max)
        mono = groupkit.pointwise_monotone(G, n_max=min(a.n_max, 6))
        z = groupkit.zorn_variant_check(G, FreeWord.parse("y"))
        good = (idx is not None) == (sol is not None) and mono and z["consistent"]
        ok &= good
        rec = {"group": G.name, "order": G.order, "solvable_class": sol,
               "nilpotency_class": z["nilpotency_class"], "quasi_engel_index": idx,
               "engel_index": z["engel_index"], "monotone": mono, "ok": good}
        if a.graph:
            g = groupkit.relation_graph(G, a.graph, a.n_max)
            rec["graph_edges"] = len(g.edges)
            rec["graph_complete"] = g.is_complete()
            if a.graph_out:
                path = "%s.%s.%s" % (a.graph_out, G.name.replace("/", "_"), a.graph_format)
                with open(path, "w") as fh:
                    fh.write(g.to_json() if a.graph_format == "json" else g.to_csv())
                rec["graph_file"] = path
        recs.append(rec)
    return recs, ok


_ALGEBRAS = {"sl2": liecheck.sl2, "aff1": liecheck.nonabelian2, "heis3": liecheck.heisenberg,
             "borel_sl3": liecheck.borel_sl3}


def _algebra(a) -> liecheck.LieAlgebra:
    if a.constants:
        with open(a.constants) as fh:
            return liecheck.lie_make(liecheck.parse_constants(fh.read()), a.p, a.constants)
    if a.algebra.startswith("abelian"):
        return liecheck.abelian(int(a.algebra[7:] or 2), a.p)
    return _ALGEBRAS[a.algebra](a.p)


def cmd_lie(a, cfg):
    try:
        L = _algebra(a)
    except liecheck.LieAlgebraError as e:
        return [{"valid": False, "error": str(e)}], False
    base = {"algebra": L.name, "dim": L.dim, "p": L.p, "theorem_applies": L.theorem_applies}
    if a.action == "check":
        rep = liecheck.v_identity_check(L, a.n_max, samples=a.samples)
        sol = liecheck.lie_solvable(L)
        consistent = (rep.index is not None) == (sol is not None)
        rec = {**base, "valid": True, "solvable_class": sol, "v_index": rep.index,
               "mode": rep.mode, "pairs": rep.pairs, "consistent": consistent}
        # outside the theorem's characteristics the comparison is informational
        return [rec], consistent or not L.theorem_applies
    if a.action == "vseq":
        x = np.array([int(s) for s in a.x.split(",")]) % L.p
        y = np.array([int(s) for s in a.y.split(",")]) % L.p
        v = liecheck.v_sequence_eval(L, x, y, a.n)
        return [{**base, "n": a.n, "v": ",".join(map(str, v.tolist())), "zero": not v.any()}], True
    if a.action == "solvable":
        return [{**base, "derived_series": ",".join(map(str, liecheck.derived_series(L))),
                 "solvable_class": liecheck.lie_solvable(L)}], True
    raise ValueError(a.action)


# -- parser and output -------------------------------------------------------------------

def _global_flags(ap, defaults):
    d = (lambda k: defaults[k]) if defaults else (lambda k: argparse.SUPPRESS)
    ap.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default=d("fmt"))
    ap.add_argument("--jobs", type=int, default=d("jobs"))
    ap.add_argument("--assets", default=d("assets"), help="directory with replacement data assets")
    ap.add_argument("--stretch", action="store_true", default=d("stretch"),
                    help="lift the conservative size caps")
    ap.add_argument("--out", default=d("out"), help="write the report here instead of stdout")
    ap.add_argument("--max-tuples", type=int, default=d("max_tuples"))
    ap.add_argument("--max-pairs", type=int, default=d("max_pairs"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quasiengel", description=__doc__.splitlines()[0])
    _global_flags(ap, dict(fmt="text", jobs=1, assets=None, stretch=False, out=None,
                           max_tuples=1 << 24, max_pairs=1 << 20))
    # the same flags are accepted after the subcommand too
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, None)
    sub = ap.add_subparsers(dest="command", required=True)

    poly = sub.add_parser("poly", help="polynomial systems and certificates")
    ps = poly.add_subparsers(dest="action", required=True)
    p = ps.add_parser("parse", parents=[common])
    p.add_argument("text")
    p.add_argument("--ring", default="c,b,t")
    p.add_argument("--char", type=int, default=0)
    for name in ("nf", "gb", "quotient", "hilb"):
        p = ps.add_parser(name, parents=[common])
        p.add_argument("--system", required=True, help="asset file, e.g. psl2_J.txt")
        p.add_argument("--name", required=True, help="vector name inside the file")
        p.add_argument("--char", type=int)
        p.add_argument("--order", choices=("lex", "degrevlex"))
        if name == "nf":
            p.add_argument("--poly", required=True)
            p.add_argument("--expect-zero", action="store_true")
        if name == "gb":
            p.add_argument("--check", action="store_true", help="only test the Groebner property")
        if name == "quotient":
            p.add_argument("--by", required=True)
            p.add_argument("--expect-equal", action="store_true")
        if name == "hilb":
            p.add_argument("--hvar", default="w")
    p = ps.add_parser("lift-verify", parents=[common])
    p.add_argument("--from", dest="source", required=True, help="file:NAME")
    p.add_argument("--to", dest="target", required=True, help="file:NAME")
    p.add_argument("--matrix", required=True, help="file:NAME")
    p.add_argument("--char", type=int)
    ps.add_parser("subst-check", parents=[common])

    count = sub.add_parser("count", help="point and fixpoint counts")
    cs = count.add_subparsers(dest="action", required=True)
    for name in ("plane", "curveC"):
        p = cs.add_parser(name, parents=[common])
        p.add_argument("--field", help="p^k or q")
        p.add_argument("--q", type=int)
        p.add_argument("--method", choices=("auto", "brute", "root-count"))
    p = cs.add_parser("suzuki", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("matrix", "ideal"))
    p = cs.add_parser("fixpoints", parents=[common])
    p.add_argument("--n", type=int)
    p.add_argument("--upto", type=int)

    ver = sub.add_parser("verify", help="witness tables and structure checks")
    vs = ver.add_subparsers(dest="action", required=True)
    p = vs.add_parser("witness", parents=[common])
    p.add_argument("--table", default="table1")
    p.add_argument("--row", type=int, help="q of the row")
    p = vs.add_parser("fixpoint", parents=[common])
    p.add_argument("--p", type=int)
    vs.add_parser("psl33", parents=[common])
    p = vs.add_parser("v-equals-w", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p = vs.add_parser("singular", parents=[common])
    p.add_argument("--n", type=int, required=True)
    vs.add_parser("table5", parents=[common])
    vs.add_parser("table6", parents=[common])
    vs.add_parser("boundary", parents=[common])

    bd = sub.add_parser("bound", help="point-count bounds")
    bs = bd.add_subparsers(dest="action", required=True)
    p = bs.add_parser("hw", parents=[common])
    p.add_argument("--q", type=int, help="omit for the threshold")
    p.add_argument("--pa", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--prime-power", action="store_true")
    p = bs.add_parser("lefschetz", parents=[common])
    p.add_argument("--n", type=int, help="omit for the threshold")
    p.add_argument("--b1", type=int, required=True)
    p.add_argument("--b2", type=int, required=True)
    p = bs.add_parser("as", parents=[common])
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p = bs.add_parser("genus", parents=[common])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--deltas", default="")
    bs.add_parser("chi-w", parents=[common])

    z = sub.add_parser("zeta", parents=[common], help="zeta series from fixpoint counts")
    z.add_argument("--counts", default="table3.csv")
    z.add_argument("--order", type=int)
    z.add_argument("--compare", help="csv of expected coefficients, e.g. zeta_series.csv")

    s = sub.add_parser("screen", parents=[common], help="screen initial words over PSL(2, p)")
    s.add_argument("--max-length", type=int, default=5)
    s.add_argument("--primes", default="5,7,11,13")
    s.add_argument("--require", nargs="*", help="words that must be flagged")
    s.add_argument("--all", action="store_true", help="report unflagged words too")

    g = sub.add_parser("group", parents=[common], help="identity checks on the group corpus")
    g.add_argument("--corpus")
    g.add_argument("--name", help="comma separated corpus names")
    g.add_argument("--n-max", type=int, default=8)
    g.add_argument("--cap", type=int, default=1000)
    g.add_argument("--graph", choices=("commuting", "nilpotency", "solvability"))
    g.add_argument("--graph-format", choices=("json", "csv"), default="json")
    g.add_argument("--graph-out", help="file prefix for graph exports")

    lie = sub.add_parser("lie", help="Lie algebras by structure constants")
    ls = lie.add_subparsers(dest="action", required=True)
    for name in ("check", "vseq", "solvable"):
        p = ls.add_parser(name, parents=[common])
        p.add_argument("--algebra", default="sl2", help="sl2, aff1, heis3, borel_sl3, abelianN")
        p.add_argument("--constants", help="structure-constant file")
        p.add_argument("--p", type=int, default=7)
        if name == "check":
            p.add_argument("--n-max", type=int, default=4)
            p.add_argument("--samples", type=int, default=20000)
        if name == "vseq":
            p.add_argument("--x", required=True)
            p.add_argument("--y", required=True)
            p.add_argument("--n", type=int, default=1)
    return ap


COMMANDS = {"poly": cmd_poly, "count": cmd_count, "verify": cmd_verify, "bound": cmd_bound,
            "zeta": cmd_zeta, "screen": cmd_screen, "group": cmd_group, "lie": cmd_lie}


def format_records(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(records, indent=1, default=str)
    if fmt == "csv":
        cols: list = []
        for r in records:
            cols += [k for k in r if k not in cols]
        buf = io.StringIO()
        w = csv.DictWriter(buf, cols)
        w.writeheader()
        w.writerows(records)
        return buf.getvalue().rstrip("\n")
    return "\n".join("  ".join("%s=%s" % kv for kv in r.items()) for r in records)


def _set_assets(path: Optional[str]):
    polycore.set_asset_dir(path)
    for fn in (vl.psl2_system, vl.suzuki_systems, vl.twin_generators, vl.plane_curve):
        fn.cache_clear()


def run(cfg: RunConfig, args: argparse.Namespace) -> tuple[int, list[dict]]:
    _set_assets(cfg.assets)
    try:
        records, ok = COMMANDS[cfg.command](args, cfg)
    finally:
        if cfg.assets:
            _set_assets(None)
    text = format_records(records, cfg.fmt)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return (0 if ok else 1), records


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = RunConfig(args.command, getattr(args, "action", None), args.fmt, args.jobs,
                        args.assets, args.stretch, args.out, args.max_tuples, args.max_pairs)
        status, _ = run(cfg, args)
        return status
    except (ValueError, KeyError, FileNotFoundError, CapError, polycore.ResourceLimit,
            groupkit.CapExceeded) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
