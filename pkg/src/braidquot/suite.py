"""The reproduction battery: every quantitative claim as a check record.

Each record states the expected value, the observed value and a status.
``INCONCLUSIVE`` is the observed value of an enumeration that hit its cap;
it is the expected value for groups claimed infinite, since enumeration
cannot prove infiniteness.  Those records pass by design and are flagged.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import catalog as cat
from .abelianizer import (AbelianInvariants, abelian_invariants, certify_infinite,
                          integer_det, is_smith_form, smith_normal_form)
from .enumerator import element_order, enumerate_cosets
from .identify import analyze
from .words import Presentation, conjugate, invert, multiply, quotient_by_normal_closure

INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class Claim:
    claim_id: str
    anchor: str
    parameters: dict
    expected: object
    run: Callable[["Runner"], object]
    by_design: bool = False


@dataclass
class Record:
    claim_id: str
    paper_anchor: str
    parameters: dict
    expected: object
    observed: object
    status: str
    runtime_ms: int | None = None
    by_design: bool = False

    def to_json(self) -> dict:
        return {"claim_id": self.claim_id, "paper_anchor": self.paper_anchor,
                "parameters": self.parameters, "expected": self.expected,
                "observed": self.observed, "status": self.status,
                "by_design": self.by_design, "runtime_ms": self.runtime_ms}


@dataclass
class Runner:
    max_cosets: int | None = None
    strategy: str = "hlt"
    _orders: dict = field(default_factory=dict)

    def order(self, p: Presentation):
        key = (p.generators, p.relators)
        if key not in self._orders:
            res = enumerate_cosets(p, (), self.max_cosets, self.strategy)
            self._orders[key] = res.index if res.finite else INCONCLUSIVE
        return self._orders[key]

    def report(self, p: Presentation):
        return analyze(p, self.max_cosets, self.strategy)


def _ab(inv: AbelianInvariants) -> dict:
    return inv.to_json()


def random_word(rng: np.random.Generator, rank: int, max_len: int) -> tuple[int, ...]:
    n = int(rng.integers(0, max_len + 1))
    gens = rng.integers(1, rank + 1, size=n)
    signs = rng.choice([-1, 1], size=n)
    return tuple(int(g * s) for g, s in zip(gens, signs))


def random_consequence(p: Presentation, rng: np.random.Generator, factors: int = 3) -> tuple[int, ...]:
    """A random product of conjugates of relators of ``p`` and their inverses."""
    rels = [r for r in p.relators if r]
    out: tuple[int, ...] = ()
    for _ in range(int(rng.integers(1, factors + 1))):
        r = rels[int(rng.integers(len(rels)))]
        if rng.random() < 0.5:
            r = invert(r)
        out = multiply(out, conjugate(r, random_word(rng, p.rank, 4)))
    return out


TIETZE_POOL = (
    lambda: cat.coxeter_quotient(cat.sphere_braid(4), 3),
    lambda: cat.coxeter_quotient(cat.projective_plane_braid(3), 4),
    lambda: cat.crystallographic_surface(1, 2),
    lambda: cat.nonorientable_abelianized(3, 4),
    lambda: cat.artin_braid(4),
    lambda: cat.crystallographic_disk(3, 6),
)


def tietze_battery(trials: int = 200, seed: int = 2) -> int:
    """Number of randomized relator augmentations that changed the abelian invariants."""
    rng = np.random.default_rng(seed)
    pool = [build() for build in TIETZE_POOL]
    base = [abelian_invariants(p) for p in pool]
    bad = 0
    for t in range(trials):
        p = pool[t % len(pool)]
        q = p.with_relators([random_consequence(p, rng) for _ in range(int(rng.integers(1, 4)))])
        bad += abelian_invariants(q) != base[t % len(pool)]
    return bad


def snf_battery(trials: int = 1000, seed: int = 1) -> int:
    """Number of random small matrices whose decomposition breaks an invariant."""
    rng = np.random.default_rng(seed)
    bad = 0
    for _ in range(trials):
        m, n = (int(x) for x in rng.integers(1, 7, size=2))
        A = rng.integers(-9, 10, size=(m, n)).astype(object)
        s = smith_normal_form(A)
        ok = ((s.U.dot(A).dot(s.V) == s.D).all() and abs(integer_det(s.U)) == 1
              and abs(integer_det(s.V)) == 1 and is_smith_form(s.D))
        bad += not ok
    return bad


def gcd_grid_battery(limit: int = 30) -> int:
    bad = 0
    for a in range(1, limit + 1):
        for b in range(1, limit + 1):
            inv = abelian_invariants(Presentation(("g",), ((1,) * a, (1,) * b)))
            d = math.gcd(a, b)
            bad += inv != AbelianInvariants(0, (d,) if d > 1 else ())
    return bad


CONSISTENCY_POOL = (
    lambda: cat.symmetric_group(4),
    lambda: cat.coxeter_quotient(cat.artin_braid(3), 4),
    lambda: cat.coxeter_quotient(cat.artin_braid(4), 3),
    lambda: cat.sphere_braid(3),
    lambda: cat.coxeter_quotient(cat.sphere_braid(4), 3),
    lambda: cat.coxeter_quotient(cat.sphere_braid(4), 4),
    lambda: cat.crystallographic_disk(3, 4),
    lambda: cat.triangle_group(2, 3, 5),
)


def consistency_battery() -> list[int]:
    """Debug enumerations (consistency checked after every coincidence) under
    both strategies; returns the orders, which must agree pairwise."""
    out = []
    for build in CONSISTENCY_POOL:
        p = build()
        orders = {s: enumerate_cosets(p, (), 100_000, s, debug=True).index for s in ("hlt", "felsch")}
        out.append(orders["hlt"] if orders["hlt"] == orders["felsch"] else -1)
    return out


TABLE_ONE = {(3, 3): 24, (4, 3): 648, (3, 4): 96, (5, 3): 155520, (3, 5): 600}


def claims() -> list[Claim]:
    out: list[Claim] = []

    def add(cid, anchor, params, expected, run, by_design=False):
        out.append(Claim(cid, anchor, params, expected, run, by_design))

    for (n, q), order in TABLE_ONE.items():
        p = cat.coxeter_quotient(cat.artin_braid(n), q)
        add(f"01-platonic/B{n}({q})/order", "platonic-type Coxeter quotients: orders table",
            {"n": n, "q": q}, order, lambda r, p=p: r.order(p))
        add(f"01-platonic/B{n}({q})/formula", "platonic-type Coxeter quotients: (f/2)^(n-1) n!",
            {"n": n, "q": q}, order, lambda r, n=n, q=q: cat.coxeter_expected_order(n, q))

    for n in range(3, 6):
        for q in range(3, 7):
            finite = cat.coxeter_is_finite(n, q)
            p = cat.coxeter_quotient(cat.artin_braid(n), q)
            add(f"02-boundary/B{n}({q})", "Coxeter quotient finite iff (q-2)(n-2) < 4",
                {"n": n, "q": q}, "finite" if finite else INCONCLUSIVE,
                lambda r, p=p: "finite" if r.order(p) != INCONCLUSIVE else INCONCLUSIVE,
                by_design=not finite)

    for q in (3, 4, 5, 6):
        p = cat.coxeter_quotient(cat.sphere_braid(2), q)
        add(f"03-sphere2/q={q}", "two-strand sphere quotient: Z2 for even q, trivial for odd q",
            {"q": q}, 2 if q % 2 == 0 else 1, lambda r, p=p: r.order(p))

    s3 = cat.sphere_braid(3)
    add("04-sphere3/order", "three-strand sphere braid group has order 12", {}, 12,
        lambda r: r.order(s3))
    add("04-sphere3/element-order-s1", "three-strand sphere braid group: s1 has order 4", {}, 4,
        lambda r: element_order(enumerate_cosets(s3, (), r.max_cosets, r.strategy).table, (1,)))
    for q in (3, 4, 5, 6, 7, 8, 10):
        d = math.gcd(4, q)
        p = cat.coxeter_quotient(s3, q)
        if d == 4:
            add(f"04-sphere3/q={q}", "three-strand sphere quotient: whole group when 4 | q",
                {"q": q}, 12, lambda r, p=p: r.order(p))
        else:
            add(f"04-sphere3/q={q}", "three-strand sphere quotient: S3 / trivial by gcd(4, q)",
                {"q": q}, "S3" if d == 2 else "trivial",
                lambda r, p=p: r.report(p).identified_name)

    s4 = cat.sphere_braid(4)
    for q, expected in ((3, "A4"), (5, "A5")):
        p = cat.coxeter_quotient(s4, q)
        add(f"05-sphere4/q={q}/order", "four-strand sphere quotient orders",
            {"q": q}, 12 if q == 3 else 60, lambda r, p=p: r.order(p))
        add(f"05-sphere4/q={q}/name", "four-strand sphere quotient identification",
            {"q": q}, expected, lambda r, p=p: r.report(p).identified_name)
    add("05-sphere4/q=5/perfect", "four-strand sphere quotient with q=5 is perfect", {"q": 5}, True,
        lambda r: abelian_invariants(cat.coxeter_quotient(s4, 5)).is_trivial)
    add("05-sphere4/q=4/order", "four-strand sphere quotient with q=4 has order 192", {"q": 4}, 192,
        lambda r: r.order(cat.coxeter_quotient(s4, 4)))
    for q in (6, 7):
        add(f"05-sphere4/q={q}/order", "four-strand sphere quotient infinite for q >= 6",
            {"q": q}, INCONCLUSIVE, lambda r, q=q: r.order(cat.coxeter_quotient(s4, q)),
            by_design=True)
        add(f"05-sphere4/q={q}/triangle-witness", "T(2,3,q) infinite for q >= 6",
            {"q": q}, False, lambda r, q=q: cat.triangle_is_finite(2, 3, q))

    for q, order in ((3, 12), (4, 24), (5, 60)):
        quot = quotient_by_normal_closure(cat.coxeter_quotient(s4, q), [(1, -3)])
        add(f"06-triangle/q={q}/quotient", "quotient by s1 s3^-1 is T(2,3,q)",
            {"q": q}, order, lambda r, p=quot: r.order(p))
        add(f"06-triangle/q={q}/T(2,3,q)", "triangle group orders", {"q": q}, order,
            lambda r, q=q: r.order(cat.triangle_group(2, 3, q)))

    for n in range(3, 7):
        for q in range(2, 10):
            d = math.gcd(q, 2 * (n - 1))
            p = cat.coxeter_quotient(cat.sphere_braid(n), q)
            add(f"07-sphere-ab/n={n}/q={q}", "sphere quotient abelianization Z_gcd(q, 2(n-1))",
                {"n": n, "q": q}, {"free_rank": 0, "torsion": [d] if d > 1 else [], "perfect": d == 1},
                lambda r, p=p: {**_ab(abelian_invariants(p)),
                                "perfect": abelian_invariants(p).is_trivial})

    for n in (2, 3, 4):
        for q in (3, 4, 5, 6):
            p = cat.coxeter_quotient(cat.projective_plane_braid(n), q)
            add(f"08-rp2-ab/n={n}/q={q}", "projective-plane quotient: Z2 (q odd), Klein four (q even)",
                {"n": n, "q": q}, {"free_rank": 0, "torsion": [2, 2] if q % 2 == 0 else [2]},
                lambda r, p=p: _ab(abelian_invariants(p)))

    for g in (2, 3, 4):
        for q in range(2, 7):
            p = cat.nonorientable_abelianized(g, q)
            expected = cat.normalize_abelian(g - 1, [math.gcd(2, q), 2])
            add(f"09-nonorientable/g={g}/q={q}", "non-orientable quotient: Z_gcd(2,q) + H1",
                {"g": g, "q": q}, {**_ab(expected), "infinite": True},
                lambda r, p=p: {**_ab(abelian_invariants(p)), "infinite": certify_infinite(p)})

    for n, q in ((3, 3), (3, 5), (4, 3), (4, 5)):
        p = cat.crystallographic_disk(n, q)
        add(f"10-cryst-disk/n={n}/q={q}", "crystallographic disk quotient is Z_q for odd q",
            {"n": n, "q": q}, {"order": q, "abelian": {"free_rank": 0, "torsion": [q]}},
            lambda r, p=p: {"order": r.order(p), "abelian": _ab(abelian_invariants(p))})
    for n, q in ((3, 4), (4, 4), (3, 6), (4, 6)):
        p = cat.crystallographic_disk(n, q)
        add(f"10-cryst-disk/n={n}/q={q}", "crystallographic disk quotient order n(n-1)k/2 * n! for q=2k",
            {"n": n, "q": q}, cat.crystallographic_disk_expected_order(n, q),
            lambda r, p=p: r.order(p))

    for g in (1, 2):
        for n in (2, 3):
            p = cat.crystallographic_surface(g, n)
            add(f"11-cryst-surface/g={g}/n={n}", "crystallographic surface quotient: Z2 + Z^2g",
                {"g": g, "n": n}, {"free_rank": 2 * g, "torsion": [2], "infinite": True},
                lambda r, p=p: {**_ab(abelian_invariants(p)), "infinite": certify_infinite(p)})
            for q in (3, 5):
                pq = cat.crystallographic_surface(g, n, q)
                killed = quotient_by_normal_closure(pq, cat.surface_generators(pq))
                add(f"11-cryst-surface/g={g}/n={n}/q={q}",
                    "odd-q crystallographic surface quotient is free abelian of rank 2g",
                    {"g": g, "n": n, "q": q},
                    {"free_rank": 2 * g, "torsion": [], "infinite": True, "order_mod_a": 1},
                    lambda r, pq=pq, killed=killed: {**_ab(abelian_invariants(pq)),
                                                     "infinite": certify_infinite(pq),
                                                     "order_mod_a": r.order(killed)})

    add("12-property/snf-random", "SNF invariants on 1000 random matrices", {"trials": 1000}, 0,
        lambda r: snf_battery(1000))
    add("12-property/tietze", "abelian invariants stable under 200 random relator augmentations",
        {"trials": 200}, 0, lambda r: tietze_battery(200))
    add("12-property/gcd-grid", "<g | g^a, g^b> abelianizes to Z_gcd(a,b), a,b <= 30",
        {"limit": 30}, 0, lambda r: gcd_grid_battery(30))
    add("12-property/consistency", "coset tables consistent after every coincidence; strategies agree",
        {}, [24, 96, 648, 12, 12, 192, 48, 60], lambda r: consistency_battery())

    out.sort(key=lambda c: c.claim_id)
    return out


def run_suite(max_cosets: int | None = None, strategy: str = "hlt", only: str | None = None,
              timings: bool = False) -> list[Record]:
    runner = Runner(max_cosets, strategy)
    records = []
    for c in claims():
        if only and not c.claim_id.startswith(only):
            continue
        t0 = time.perf_counter()
        observed = c.run(runner)
        ms = round((time.perf_counter() - t0) * 1000) if timings else None
        if observed == c.expected:
            status = "pass"
        elif observed == INCONCLUSIVE or (isinstance(observed, dict) and INCONCLUSIVE in observed.values()):
            status = "inconclusive"
        else:
            status = "fail"
        records.append(Record(c.claim_id, c.anchor, c.parameters, c.expected, observed,
                              status, ms, c.by_design))
    return records


def exit_code(records: list[Record]) -> int:
    statuses = {r.status for r in records}
    if "fail" in statuses:
        return 1
    if "inconclusive" in statuses:
        return 2
    return 0


def to_markdown(records: list[Record]) -> str:
    lines = ["| claim | parameters | expected | observed | status |",
             "|---|---|---|---|---|"]
    for r in records:
        params = ", ".join(f"{k}={v}" for k, v in r.parameters.items())
        status = r.status + (" (by design)" if r.by_design and r.status == "pass" else "")
        lines.append(f"| {r.claim_id} | {params} | {r.expected} | {r.observed} | {status} |")
    counts = {s: sum(r.status == s for r in records) for s in ("pass", "fail", "inconclusive")}
    lines.append("")
    lines.append(", ".join(f"{k}: {v}" for k, v in counts.items()))
    return "\n".join(lines) + "\n"
