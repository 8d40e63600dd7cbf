"""Exhaustive small-instance verification.

Everything here recomputes its reference values by brute force (sorting by
level, scanning every divider placement, backtracking over prefix sums) and
never calls the routine it is checking to produce the expected side.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import accumulate, combinations_with_replacement, product
from math import comb
from typing import Iterable, Sequence

from . import equitable as eq
from . import general as gen
from . import lattice as lat
from .errors import BudgetExceeded
from .modular import PresweepFailure, inverse_presweep, sweep_mod, unsweep_mod
from .words import ModWord, PartitionedWord, block_vector, from_block_vector

DEFAULT_WORD_BUDGET = 10**6
DEFAULT_PARTITION_BUDGET = 10**6


@dataclass
class Check:
    name: str
    passed: bool = True
    examined: int = 0
    failures: int = 0
    counterexample: str | None = None


@dataclass
class VerifyReport:
    instance: str
    checks: dict[str, Check] = field(default_factory=dict)
    totals: dict[str, int] = field(default_factory=dict)

    def record(self, name: str, ok: bool, counterexample=None):
        c = self.checks.setdefault(name, Check(name))
        c.examined += 1
        if not ok:
            c.failures += 1
            if c.passed:
                c.passed = False
                c.counterexample = counterexample() if callable(counterexample) else str(counterexample)

    def count(self, key: str, n: int = 1):
        self.totals[key] = self.totals.get(key, 0) + n

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def merge(self, other: VerifyReport) -> VerifyReport:
        out = VerifyReport(f"{self.instance}; {other.instance}")
        for rep in (self, other):
            for name, c in rep.checks.items():
                d = out.checks.setdefault(name, Check(name))
                d.examined += c.examined
                d.failures += c.failures
                if not c.passed and d.passed:
                    d.passed, d.counterexample = False, c.counterexample
            for k, v in rep.totals.items():
                out.count(k, v)
        return out

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "passed": self.passed,
            "totals": dict(self.totals),
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "examined": c.examined,
                    "failures": c.failures,
                    "counterexample": c.counterexample,
                }
                for c in self.checks.values()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        width = max([len(n) for n in self.checks] + [5])
        lines = [f"instance: {self.instance}"]
        lines.append("totals: " + ", ".join(f"{k}={v}" for k, v in self.totals.items()))
        for c in self.checks.values():
            mark = "PASS" if c.passed else "FAIL"
            line = f"  {mark}  {c.name.ljust(width)}  {c.examined:>8}"
            if not c.passed:
                line += f"  ({c.failures} failures; e.g. {c.counterexample})"
            lines.append(line)
        lines.append("result: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)

    __str__ = to_text


# -- brute-force references -----------------------------------------------------

def _brute_presweep(letters: Sequence[int], m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(swept letters, block vector) by sorting positions on (level, position) descending."""
    levels = [s % m for s in accumulate(letters)]
    order = sorted(range(len(letters)), key=lambda j: (levels[j], j), reverse=True)
    return tuple(letters[j] for j in order), tuple(levels[j] for j in order)


def _brute_is_equitable(letters: Sequence[int], bv: Sequence[int], m: int) -> bool:
    grid = [[False] * m for _ in letters]
    for row, x, b in zip(grid, letters, bv):
        for t in range(x):
            row[(b - t) % m] = True
    total = sum(letters)
    for j in range(m):
        want = total // m + (1 if 1 <= j <= total % m else 0)
        if sum(row[j] for row in grid) != want:
            return False
    return True


def _partition_count(n: int, m: int) -> int:
    return comb(n + m - 1, m - 1)


def brute_equitable(u: ModWord, budget: int = DEFAULT_PARTITION_BUDGET) -> list[PartitionedWord]:
    """Every equitable partition of u, found by trying all divider placements."""
    m, n = u.modulus, len(u)
    if _partition_count(n, m) > budget:
        raise BudgetExceeded(f"{_partition_count(n, m)} partitioned words exceed budget {budget}")
    out = []
    for bv in combinations_with_replacement(range(m - 1, -1, -1), n):
        if _brute_is_equitable(u.letters, bv, m):
            out.append(from_block_vector(u, bv))
    return sorted(out, key=block_vector)


def brute_dyck(p: gen.DyckParams) -> list[tuple[int, ...]]:
    """Dyck words of D_{a,b} by backtracking on nonnegative prefix sums."""
    a, b = p.a, p.b
    na, nb = -b, a
    out = []

    def rec(word, level, ra, rb):
        if not ra and not rb:
            out.append(tuple(word))
            return
        for x, ok in ((b, rb > 0 and level + b >= 0), (a, ra > 0)):
            if ok:
                word.append(x)
                rec(word, level + x, ra - (x == a), rb - (x == b))
                word.pop()

    rec([], 0, na, nb)
    return sorted(out)


def order_covers(nodes: Iterable[tuple[int, ...]]) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Cover pairs (lower, upper) of block vectors under the rightward order."""
    nodes = list(nodes)

    def lt(p, q):
        return p != q and all(x >= y for x, y in zip(p, q))

    out = set()
    for p in nodes:
        for q in nodes:
            if lt(p, q) and not any(lt(p, r) and lt(r, q) for r in nodes):
                out.add((p, q))
    return out


# -- verifiers --------------------------------------------------------------------

def _words(m: int, n: int, budget: int):
    if m**n > budget:
        raise BudgetExceeded(f"{m}^{n} = {m**n} words exceed budget {budget}")
    for letters in product(range(m), repeat=n):
        yield ModWord(m, letters)


def verify_sweep_bijective(m: int, n: int, budget: int = DEFAULT_WORD_BUDGET) -> VerifyReport:
    rep = VerifyReport(f"m={m} N={n}")
    images: dict[ModWord, ModWord] = {}
    for w in _words(m, n, budget):
        rep.count("words")
        u = sweep_mod(w)
        brute, _ = _brute_presweep(w.letters, m)
        rep.record("sweep matches level sort", u.letters == brute, lambda: f"--mod {m} {w}")
        rep.record("sweep permutes letters", sorted(u.letters) == sorted(w.letters), lambda: f"--mod {m} {w}")
        rep.record("sweep is injective", u not in images, lambda: f"--mod {m} {w} and {images[u]}")
        images[u] = w
        back = unsweep_mod(u)
        rep.record("unsweep(sweep(w)) = w", back == w, lambda: f"--mod {m} {w} -> {u} -> {back}")
    rep.record("sweep is onto", len(images) == m**n, f"{len(images)} images of {m**n} words")
    for u in _words(m, n, budget):
        again = sweep_mod(unsweep_mod(u))
        rep.record("sweep(unsweep(u)) = u", again == u, lambda: f"--mod {m} {u} -> {again}")
    return rep


def verify_theorems(
    m: int,
    n: int,
    budget: int = DEFAULT_WORD_BUDGET,
    partition_budget: int = DEFAULT_PARTITION_BUDGET,
) -> VerifyReport:
    rep = VerifyReport(f"m={m} N={n}")
    if _partition_count(n, m) > partition_budget:
        raise BudgetExceeded(f"{_partition_count(n, m)} partitioned words per word exceed budget")
    # the successful partition of each word, from the definition: presweep images
    preimage_bv: dict[tuple[int, ...], tuple[int, ...]] = {}
    for w in _words(m, n, budget):
        letters, bv = _brute_presweep(w.letters, m)
        preimage_bv[letters] = bv

    for u in _words(m, n, budget):
        rep.count("words")
        tag = f"--mod {m} {u}"
        nodes = brute_equitable(u, partition_budget)
        bvs = [block_vector(p) for p in nodes]
        bvset = set(bvs)
        rep.count("partitions", _partition_count(n, m))
        rep.count("equitable", len(nodes))

        succ_bv = preimage_bv.get(u.letters)
        rep.record("every word is a sweep image", succ_bv is not None, tag)
        if succ_bv is None:
            continue
        rep.record("successful partitions are equitable", succ_bv in bvset, tag)
        succ = [p for p in nodes if eq.is_successful(p)]
        rep.record("exactly one successful partition", len(succ) == 1,
                   lambda: f"{tag}: {[str(p) for p in succ]}")
        rep.record("successful partition is the presweep image",
                   [block_vector(p) for p in succ] == [succ_bv], tag)

        top = eq.rightmost(u)
        bottom = lat.leftmost(u)
        lo = tuple(map(min, *bvs)) if len(bvs) > 1 else bvs[0]
        hi = tuple(map(max, *bvs)) if len(bvs) > 1 else bvs[0]
        rep.record("rightmost = successful", block_vector(top) == succ_bv, lambda: f"{tag}: {top}")
        rep.record("rightmost is componentwise rightmost", block_vector(top) == lo, lambda: f"{tag}: {top}")
        rep.record("leftmost is componentwise leftmost", block_vector(bottom) == hi, lambda: f"{tag}: {bottom}")

        for p in nodes:
            got = eq.successful_from(p)
            rep.record("successful_from converges to rightmost", got == top, lambda: f"{tag} from {p}: {got}")
            res = inverse_presweep(p)
            if isinstance(res, PresweepFailure):
                allb = lat.left_bbs_all(p)
                union = set()
                for s in allb:
                    union.update(s.positions(p))
                rep.record("failed residue is the maximal left block-suffix",
                           set(res.positions) == union and bool(allb), lambda: f"{tag} at {p}")

        L = lat.enumerate_lattice(u)
        rep.record("cover closure reaches every equitable partition",
                   {block_vector(p) for p in L.nodes} == bvset, tag)
        rep.record("bottom/top of lattice are leftmost/rightmost",
                   L.nodes[L.bottom] == bottom and L.nodes[L.top] == top, tag)

        for i, p in enumerate(nodes):
            for q in nodes[i:]:
                rep.count("pairs")
                jn, mt = lat.join(p, q), lat.meet(p, q)
                a, b = bvs[i], block_vector(q)
                ok = (block_vector(jn) == tuple(map(min, a, b)) and block_vector(mt) == tuple(map(max, a, b))
                      and block_vector(jn) in bvset and block_vector(mt) in bvset)
                rep.record("join and meet are equitable", ok, lambda: f"{tag}: {p} , {q}")
        for a, b, c in product(bvs, repeat=3):
            rep.count("triples")
            j = lambda x, y: tuple(map(min, x, y))  # noqa: E731
            mt = lambda x, y: tuple(map(max, x, y))  # noqa: E731
            ok = j(a, mt(b, c)) == mt(j(a, b), j(a, c)) and mt(a, j(b, c)) == j(mt(a, b), mt(a, c))
            ok = ok and j(a, b) in bvset and mt(a, b) in bvset
            rep.record("distributive lattice laws", ok, lambda: f"{tag}: {a} {b} {c}")

        want = order_covers(bvs)
        got = {(block_vector(p), block_vector(q)) for p in nodes for q in lat.covers(p)}
        rep.record("covers are shifts of minimal left block-suffixes", got == want,
                   lambda: f"{tag}: extra {sorted(got - want)} missing {sorted(want - got)}")
    return rep


def verify_zeta(params: Iterable[tuple[int, int]], budget: int = DEFAULT_WORD_BUDGET) -> VerifyReport:
    params = [tuple(p) for p in params]
    rep = VerifyReport("(a,b) in " + " ".join(f"({a},{b})" for a, b in params))
    for a, b in params:
        P = gen.DyckParams(a, b)
        tag = f"--a {a} --b {b}"
        n = a - b
        if comb(n, a) > budget:
            raise BudgetExceeded(f"C({n},{a}) arrangements exceed budget {budget}")
        D = brute_dyck(P)
        Dset = set(D)
        rep.count("dyck words", len(D))
        rep.record("Dyck enumeration: backtracking = filtering",
                   D == [w.letters for w in gen.dyck_words(P)], tag)
        if P.coprime:
            rep.record("|D_{a,b}| = C(a-b, a)/(a-b) when coprime", len(D) == comb(n, a) // n,
                       f"{tag}: {len(D)}")
        images = []
        for w in D:
            z = gen.zeta(w, P)
            images.append(z.letters)
            wt = ",".join(map(str, w))
            rep.record("zeta maps D_{a,b} into itself", z.letters in Dset, lambda: f"{tag} {wt}")
            zd = gen.zeta_direct(w, P)
            rep.record("zeta = direct description", zd == z, lambda: f"{tag} {wt}: {z} vs {zd}")
            back = gen.unzeta(z, P)
            rep.record("unzeta(zeta(w)) = w", back.letters == w, lambda: f"{tag} {wt}")
            s = gen.sweep_int(gen.IntWord(P.content, w))
            rep.record("sweep preserves Dyck words", gen.is_dyck(s), lambda: f"{tag} {wt}")
            rep.record("unsweep inverts sweep on Dyck words", gen.unsweep_int(s).letters == w, lambda: f"{tag} {wt}")
            if P.coprime:
                L = lat.enumerate_lattice(gen.lift(gen.IntWord(P.content, w)))
                rep.count("chain nodes", len(L))
                rep.record("coprime lattices are chains", L.is_chain(), lambda: f"{tag} {wt}")
        rep.record("zeta is a bijection of D_{a,b}", sorted(images) == D, tag)
    return rep
