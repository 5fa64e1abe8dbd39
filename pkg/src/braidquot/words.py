"""Free-group words, finite presentations and presentation surgery.

A word is a tuple of non-zero signed integers: ``+k`` is the k-th generator
(1-based) and ``-k`` its inverse.  The empty tuple is the identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Word = tuple[int, ...]
Permutation = tuple[int, ...]


class PresentationError(ValueError):
    pass


def free_reduce(w: Iterable[int]) -> Word:
    out: list[int] = []
    for letter in w:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def invert(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def multiply(*words: Sequence[int]) -> Word:
    return free_reduce(x for w in words for x in w)


def power(w: Sequence[int], k: int) -> Word:
    if k < 0:
        w, k = invert(w), -k
    return free_reduce(tuple(w) * k)


def conjugate(w: Sequence[int], by: Sequence[int]) -> Word:
    """Return ``by * w * by^-1`` freely reduced."""
    return multiply(by, w, invert(by))


def commutator(u: Sequence[int], v: Sequence[int]) -> Word:
    """``[u, v] = u v u^-1 v^-1``."""
    return multiply(u, v, invert(u), invert(v))


def cyclically_reduce(w: Sequence[int]) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return tuple(w[i:j + 1])


def exponent_sum(w: Sequence[int], generator: int) -> int:
    return sum(1 if x == generator else -1 if x == -generator else 0 for x in w)


@dataclass(frozen=True)
class GeneratorSymbol:
    index: int
    display_name: str


@dataclass(frozen=True)
class Presentation:
    """A finite presentation ``<generators | relators>``.

    Relators are freely and cyclically reduced on construction, so two
    presentations built from conjugate relators compare equal.
    """

    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()
    label: str = ""
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise PresentationError(f"duplicate generator names in {gens}")
        rels = []
        for r in self.relators:
            r = tuple(int(x) for x in r)
            for x in r:
                if x == 0 or abs(x) > len(gens):
                    raise PresentationError(f"unknown generator {x} in relator {r}")
            rels.append(cyclically_reduce(r))
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))
        object.__setattr__(self, "_index", {g: i + 1 for i, g in enumerate(gens)})

    @property
    def symbols(self) -> list[GeneratorSymbol]:
        return [GeneratorSymbol(i + 1, g) for i, g in enumerate(self.generators)]

    @property
    def rank(self) -> int:
        return len(self.generators)

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise PresentationError(f"unknown generator {name!r}") from None

    def check_word(self, w: Sequence[int]) -> Word:
        w = tuple(int(x) for x in w)
        for x in w:
            if x == 0 or abs(x) > self.rank:
                raise PresentationError(f"unknown generator {x}")
        return w

    def parse_word(self, text: str) -> Word:
        """Parse ``"s1 s3^-1 rho2^2"`` style text into a word."""
        letters: list[int] = []
        for token in text.split():
            name, _, exp = token.partition("^")
            letters.extend(power((self.index_of(name),), int(exp) if exp else 1))
        return free_reduce(letters)

    def format_word(self, w: Sequence[int]) -> str:
        if not w:
            return "1"
        parts = []
        for x in w:
            name = self.generators[abs(x) - 1]
            parts.append(name if x > 0 else name + "^-1")
        return " ".join(parts)

    def with_relators(self, extra: Iterable[Sequence[int]], label: str | None = None) -> "Presentation":
        return Presentation(self.generators, self.relators + tuple(tuple(w) for w in extra),
                            self.label if label is None else label)

    def to_json(self) -> dict:
        return {"label": self.label,
                "generators": list(self.generators),
                "relators": [list(r) for r in self.relators]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "Presentation":
        if not isinstance(data, dict):
            raise PresentationError("presentation JSON must be an object")
        try:
            gens = data["generators"]
            rels = data["relators"]
        except KeyError as exc:
            raise PresentationError(f"missing field {exc}") from None
        if not all(isinstance(g, str) for g in gens):
            raise PresentationError("generator names must be strings")
        if not all(isinstance(r, list) and all(isinstance(x, int) for x in r) for r in rels):
            raise PresentationError("relators must be lists of signed integers")
        return cls(tuple(gens), tuple(tuple(r) for r in rels), str(data.get("label", "")))

    @classmethod
    def loads(cls, text: str) -> "Presentation":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PresentationError(f"malformed JSON: {exc}") from None
        return cls.from_json(data)


def quotient_by_normal_closure(p: Presentation, extra: Iterable[Sequence[int]],
                               label: str | None = None) -> Presentation:
    """Present ``p`` modulo the normal closure of the words in ``extra``."""
    extra = [p.check_word(w) for w in extra]
    if not extra and label is None:
        return p
    return p.with_relators(extra, label)


def braid_permutation(w: Sequence[int], n: int) -> Permutation:
    """Image of a braid word in S_n, as a 0-based image tuple.

    ``s_i`` maps to the transposition of points ``i-1`` and ``i``; letters are
    applied left to right.
    """
    image = list(range(n))
    for x in w:
        i = abs(x)
        if not 1 <= i < n:
            raise PresentationError(f"generator s{i} out of range for {n} strands")
        image = [i if p == i - 1 else i - 1 if p == i else p for p in image]
    return tuple(image)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: apply ``p`` first, then ``q``."""
    return tuple(q[i] for i in p)


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Non-trivial cycles of ``p`` with 1-based points."""
    seen, out = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, i = [], start
        while i not in seen:
            seen.add(i)
            cyc.append(i + 1)
            i = p[i]
        out.append(tuple(cyc))
    return out
