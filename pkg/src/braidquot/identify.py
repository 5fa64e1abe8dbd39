"""Name small finite groups from a handful of invariants.

A group is named only when its (order, abelianization, perfect, abelian)
fingerprint pins down the isomorphism type; each table entry carries the
argument for that.  Anything else is reported unnamed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .abelianizer import AbelianInvariants, abelian_invariants
from .catalog import coxeter_quotient, sphere_braid
from .enumerator import enumerate_cosets, permutation_representation
from .words import Presentation


@dataclass(frozen=True)
class Fingerprint:
    order: int
    abelian_invariants: AbelianInvariants
    is_abelian: bool

    @property
    def is_perfect(self) -> bool:
        return self.abelian_invariants.is_trivial


@dataclass(frozen=True)
class FingerprintEntry:
    name: str | Callable[[Fingerprint], str]
    matches: Callable[[Fingerprint], bool]
    justification: str

    def label(self, fp: Fingerprint) -> str:
        return self.name(fp) if callable(self.name) else self.name


FINGERPRINTS = (
    FingerprintEntry(
        "trivial", lambda fp: fp.order == 1,
        "order 1"),
    FingerprintEntry(
        "Z2", lambda fp: fp.order == 2,
        "every group of prime order is cyclic"),
    FingerprintEntry(
        lambda fp: f"Z{fp.order}",
        lambda fp: (fp.order >= 3 and fp.is_abelian and fp.abelian_invariants.free_rank == 0
                    and fp.abelian_invariants.torsion == (fp.order,)),
        "an abelian group equals its abelianization, which is cyclic of the group's order"),
    FingerprintEntry(
        "S3", lambda fp: (fp.order == 6 and not fp.is_abelian
                          and fp.abelian_invariants.torsion == (2,)),
        "S3 is the only non-abelian group of order 6"),
    FingerprintEntry(
        "A4", lambda fp: (fp.order == 12 and not fp.is_abelian
                          and fp.abelian_invariants.torsion == (3,)),
        "of the order-12 groups only A4 has abelianization Z3 "
        "(D6 -> Z2+Z2, Dic3 -> Z4, Z12 and Z2+Z6 are abelian)"),
    FingerprintEntry(
        "A5", lambda fp: fp.order == 60 and fp.is_perfect,
        "A5 is the only perfect group of order 60"),
)


def identify_fingerprint(fp: Fingerprint) -> tuple[str | None, str]:
    hits = [e for e in FINGERPRINTS if e.matches(fp)]
    if len(hits) > 1:
        raise RuntimeError(f"fingerprint table is ambiguous for {fp}")
    if not hits:
        return None, "no table entry matches; left unnamed"
    return hits[0].label(fp), hits[0].justification


@dataclass(frozen=True)
class StructureReport:
    order: int | None          # None: enumeration inconclusive
    abelian_invariants: AbelianInvariants
    is_abelian: bool | None    # None when the order is unknown
    is_perfect: bool
    identified_name: str | None
    evidence: str

    def to_json(self) -> dict:
        return {
            "order": self.order if self.order is not None else "inconclusive",
            "abelian_invariants": self.abelian_invariants.to_json(),
            "is_abelian": self.is_abelian,
            "is_perfect": self.is_perfect,
            "identified_name": self.identified_name,
            "evidence": self.evidence,
        }


def generators_commute(perms: list[np.ndarray]) -> bool:
    for i, a in enumerate(perms):
        for b in perms[i + 1:]:
            if not np.array_equal(a[b], b[a]):
                return False
    return True


def analyze(p: Presentation, max_cosets: int | None = None, strategy: str = "hlt") -> StructureReport:
    ab = abelian_invariants(p)
    res = enumerate_cosets(p, (), max_cosets, strategy)
    if not res.finite:
        evidence = f"enumeration inconclusive at {res.max_cosets} cosets ({strategy})"
        if ab.free_rank:
            evidence += f"; abelianization has free rank {ab.free_rank}, so the group is infinite"
        return StructureReport(None, ab, None, ab.is_trivial, None, evidence)
    is_abelian = generators_commute(permutation_representation(res.table))
    fp = Fingerprint(res.index, ab, is_abelian)
    name, why = identify_fingerprint(fp)
    evidence = (f"order {res.index} by {strategy} enumeration; abelianization {ab}; "
                f"{'abelian' if is_abelian else 'non-abelian'}; {why}")
    return StructureReport(res.index, ab, is_abelian, fp.is_perfect, name, evidence)


class ClaimMismatch(RuntimeError):
    pass


def verify_three_strand_sphere_quotient(q: int, max_cosets: int | None = None) -> StructureReport:
    """Check ``B_3(S^2)(q)`` against the gcd(4, q) classification:
    all of ``B_3(S^2)`` (order 12), ``S3`` or trivial."""
    if q < 3:
        raise ValueError("q must be >= 3")
    report = analyze(coxeter_quotient(sphere_braid(3), q), max_cosets)
    d = math.gcd(4, q)
    ok = {4: report.order == 12, 2: report.identified_name == "S3",
          1: report.identified_name == "trivial"}[d]
    if not ok:
        raise ClaimMismatch(f"B3(S2)({q}): gcd(4, q) = {d} but got {report.to_json()}")
    return report
