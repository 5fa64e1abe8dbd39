"""Todd-Coxeter coset enumeration.

The heavy lifting happens in :mod:`braidquot._kernel`; this module encodes
presentations for it and wraps the output as :class:`CosetTable` /
:class:`EnumerationResult`.  Cosets are 0-based in the returned table, with
coset 0 the subgroup itself and ``-1`` marking undefined entries.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernel
from .words import Presentation, Word, invert

DEFAULT_MAX_COSETS = 5_000_000
STRATEGIES = ("hlt", "felsch")


class EnumerationError(RuntimeError):
    pass


class IncompleteTableError(ValueError):
    pass


def default_max_cosets() -> int:
    value = os.environ.get("BRAIDQUOT_MAX_COSETS")
    return int(value) if value else DEFAULT_MAX_COSETS


def column(letter: int) -> int:
    return 2 * (abs(letter) - 1) + (letter < 0)


@dataclass(frozen=True)
class CosetTable:
    table: np.ndarray          # shape (cosets, 2 * rank); column 2k is s_{k+1}, 2k+1 its inverse
    complete: bool

    @property
    def index(self) -> int:
        return self.table.shape[0]

    @property
    def rank(self) -> int:
        return self.table.shape[1] // 2

    @property
    def status(self) -> str:
        return "complete" if self.complete else "capped"

    def act(self, coset: int, w: Sequence[int]) -> int:
        """Image of ``coset`` under right multiplication by ``w`` (-1 if undefined)."""
        for x in w:
            coset = int(self.table[coset, column(x)])
            if coset < 0:
                return -1
        return coset

    def is_consistent(self) -> bool:
        t = self.table
        rows = np.arange(t.shape[0])
        for x in range(t.shape[1]):
            defined = t[:, x] >= 0
            back = t[t[defined, x], x ^ 1]
            if not np.array_equal(back, rows[defined]):
                return False
        return True

    def closes(self, relators: Sequence[Word], subgroup: Sequence[Word] = ()) -> bool:
        """Every relator loops at every coset and subgroup words fix coset 0."""
        if not self.complete:
            return False
        t = self.table
        for r in relators:
            c = np.arange(t.shape[0])
            for x in r:
                c = t[c, column(x)]
            if not np.array_equal(c, np.arange(t.shape[0])):
                return False
        return all(self.act(0, h) == 0 for h in subgroup)


@dataclass(frozen=True)
class EnumerationResult:
    outcome: str               # "finite" or "inconclusive"
    table: CosetTable
    peak: int
    strategy: str
    max_cosets: int
    defined: int = 0

    @property
    def finite(self) -> bool:
        return self.outcome == "finite"

    @property
    def index(self) -> int | None:
        return self.table.index if self.finite else None

    def to_json(self) -> dict:
        out = {"outcome": self.outcome}
        if self.finite:
            out["index"] = self.index
        out["peak"] = self.peak
        out["strategy"] = self.strategy
        return out


def _pack(words: Sequence[Sequence[int]]):
    lens = np.array([len(w) for w in words], dtype=np.int64)
    starts = np.zeros(len(words), dtype=np.int64)
    if len(words):
        starts[1:] = np.cumsum(lens)[:-1]
    data = np.array([column(x) for w in words for x in w] or [0], dtype=np.int32)
    return data, starts, lens


def _conjugates_by_column(relators: Sequence[Word], ncols: int):
    rotations = set()
    for r in relators:
        for w in (tuple(r), invert(r)):
            for k in range(len(w)):
                rotations.add(w[k:] + w[:k])
    words = sorted(rotations, key=lambda w: (column(w[0]), len(w), w))
    data, starts, lens = _pack(words)
    firsts = np.array([column(w[0]) for w in words], dtype=np.int64)
    begin = np.searchsorted(firsts, np.arange(ncols), side="left").astype(np.int64)
    end = np.searchsorted(firsts, np.arange(ncols), side="right").astype(np.int64)
    return data, starts, lens, begin, end


def enumerate_cosets(p: Presentation, subgroup: Sequence[Sequence[int]] = (),
                     max_cosets: int | None = None, strategy: str = "hlt",
                     debug: bool = False) -> EnumerationResult:
    """Enumerate the cosets of ``<subgroup>`` in the group presented by ``p``.

    Returns a ``finite`` result with a complete table when the enumeration
    closes within ``max_cosets`` live cosets, otherwise ``inconclusive``.
    With ``debug`` the table is checked for consistency after every
    coincidence and an inconsistency raises :class:`EnumerationError`.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if max_cosets is None:
        max_cosets = default_max_cosets()
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    subgroup = [p.check_word(h) for h in subgroup]
    ncols = 2 * p.rank
    relators = [r for r in p.relators if r]
    subgroup_nonempty = [h for h in subgroup if h]

    if ncols == 0:
        table = CosetTable(np.zeros((1, 0), dtype=np.int32), True)
        return EnumerationResult("finite", table, 1, strategy, max_cosets, 1)

    rel = _pack(relators)
    sub = _pack(subgroup_nonempty)
    if strategy == "felsch":
        conj = _conjugates_by_column(relators, ncols)
    else:
        conj = (np.zeros(1, np.int32), np.zeros(0, np.int64), np.zeros(0, np.int64),
                np.zeros(ncols, np.int64), np.zeros(ncols, np.int64))
    status, raw, st = _kernel.enumerate_cosets(
        ncols, max_cosets, *rel, *sub, *conj,
        _kernel.FELSCH if strategy == "felsch" else _kernel.HLT,
        debug, 1 << 20)
    if status == _kernel.INCONSISTENT:
        raise EnumerationError(f"coset table lost consistency while enumerating {p.label!r}")

    n = int(st[_kernel.N_ALLOC])
    table = raw[1:n + 1] - 1
    del raw
    complete = status == _kernel.COMPLETE
    result = CosetTable(table, complete)
    if complete and not result.closes(relators, subgroup_nonempty):
        raise EnumerationError(f"enumeration of {p.label!r} produced a table that does not close")
    return EnumerationResult("finite" if complete else "inconclusive", result,
                             int(st[_kernel.PEAK]), strategy, max_cosets,
                             int(st[_kernel.DEFINED]))


def group_order(p: Presentation, max_cosets: int | None = None, strategy: str = "hlt") -> int | None:
    res = enumerate_cosets(p, (), max_cosets, strategy)
    return res.index


def permutation_representation(t: CosetTable) -> list[np.ndarray]:
    """One permutation of ``range(index)`` per generator, from the coset action."""
    if not t.complete:
        raise IncompleteTableError("permutation representation needs a complete coset table")
    return [t.table[:, 2 * k].copy() for k in range(t.rank)]


def word_permutation(t: CosetTable, w: Sequence[int]) -> np.ndarray:
    if not t.complete:
        raise IncompleteTableError("word action needs a complete coset table")
    c = np.arange(t.index)
    for x in w:
        c = t.table[c, column(x)]
    return c


def permutation_order(perm: np.ndarray) -> int:
    seen = np.zeros(len(perm), dtype=bool)
    order = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        order = math.lcm(order, length)
    return order


def element_order(t: CosetTable, w: Sequence[int]) -> int:
    """Order of ``w``; ``t`` must be the regular table (trivial subgroup)."""
    return permutation_order(word_permutation(t, w))
