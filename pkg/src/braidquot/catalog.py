"""Presentations of braid groups, the quotients by s1^q and related
groups, plus the closed-form orders and abelianizations they are checked
against.

Generator naming is fixed per builder: ``s<i>`` for Artin generators,
``rho<i>`` for the projective-plane / non-orientable loops, ``a_<i>_<r>``
for the surface generators of the crystallographic quotients and ``a``,
``b`` for triangle groups.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .abelianizer import AbelianInvariants
from .words import (Presentation, Word, commutator, invert, multiply, power,
                    quotient_by_normal_closure)

SURFACE_KINDS = ("disk", "sphere", "projective_plane", "orientable_closed", "nonorientable_closed")

# faces of the platonic solid of type (edges per face, faces per vertex)
PLATONIC_FACES = {(3, 3): 4, (4, 3): 6, (3, 4): 8, (5, 3): 12, (3, 5): 20}

CRYSTALLOGRAPHIC_DISK_MAX_STRANDS = 6


class ParameterError(ValueError):
    pass


class NotFiniteError(ValueError):
    pass


def _require(cond: bool, message: str):
    if not cond:
        raise ParameterError(message)


@dataclass(frozen=True)
class SurfaceClass:
    kind: str
    genus: int = 0

    def __post_init__(self):
        _require(self.kind in SURFACE_KINDS, f"unknown surface kind {self.kind!r}")
        if self.kind == "orientable_closed":
            _require(self.genus >= 1, "orientable closed surfaces need genus >= 1")
        if self.kind == "nonorientable_closed":
            _require(self.genus >= 2, "non-orientable closed surfaces need genus >= 2")


def _artin_relators(n: int) -> list[Word]:
    rels = []
    for i in range(1, n):
        for j in range(i + 1, n):
            if j == i + 1:
                rels.append((i, j, i, -j, -i, -j))
            else:
                rels.append((i, j, -i, -j))
    return rels


def _artin_names(n: int) -> tuple[str, ...]:
    return tuple(f"s{i}" for i in range(1, n))


def surface_word(n: int) -> Word:
    """``s1 ... s_{n-2} s_{n-1}^2 s_{n-2} ... s1``; equals ``s1^2`` when n = 2."""
    up = tuple(range(1, n - 1))
    return up + (n - 1, n - 1) + tuple(reversed(up))


def artin_braid(n: int) -> Presentation:
    _require(n >= 2, "artin_braid needs n >= 2")
    return Presentation(_artin_names(n), tuple(_artin_relators(n)), f"B{n}")


def symmetric_group(n: int) -> Presentation:
    _require(n >= 2, "symmetric_group needs n >= 2")
    return artin_braid(n).with_relators([(1, 1)], f"S{n}")


def coxeter_quotient(p: Presentation, q: int) -> Presentation:
    """Add ``s1^q`` to ``p``."""
    s1 = p.index_of("s1")
    label = f"{p.label}({q})" if p.label else ""
    return quotient_by_normal_closure(p, [power((s1,), q)], label)


def sphere_braid(n: int) -> Presentation:
    _require(n >= 2, "sphere_braid needs n >= 2")
    return Presentation(_artin_names(n), tuple(_artin_relators(n)) + (surface_word(n),),
                        f"B{n}(S2)")


def projective_plane_braid(n: int) -> Presentation:
    """Braid group of the projective plane on ``n`` strands.

    Generators ``s1..s_{n-1}, rho1..rho_n`` (indices ``n..2n-1`` for the rho).
    Relators are grouped I-VI: far commutation, braid relations, ``s_i``
    commuting with ``rho_j`` for ``j`` not in ``{i, i+1}``,
    ``rho_i = s_i rho_{i+1} s_i``, ``rho_{i+1}^-1 rho_i^-1 rho_{i+1} rho_i = s_i^2``
    and ``rho_1^2 = s1 ... s_{n-1}^2 ... s1``.
    """
    _require(n >= 1, "projective_plane_braid needs n >= 1")
    names = _artin_names(n) + tuple(f"rho{j}" for j in range(1, n + 1))

    def rho(j):
        return n - 1 + j

    far = [(i, j, -i, -j) for i in range(1, n) for j in range(i + 2, n)]
    braid = [(i, i + 1, i, -(i + 1), -i, -(i + 1)) for i in range(1, n - 1)]
    mixed = [commutator((i,), (rho(j),)) for i in range(1, n) for j in range(1, n + 1)
             if j not in (i, i + 1)]
    swap = [multiply((rho(i),), invert((i, rho(i + 1), i))) for i in range(1, n)]
    twist = [multiply((-rho(i + 1), -rho(i), rho(i + 1), rho(i)), (-i, -i)) for i in range(1, n)]
    total = multiply((rho(1), rho(1)), invert(surface_word(n))) if n >= 2 else (rho(1), rho(1))
    rels = far + braid + mixed + swap + twist + [total]
    return Presentation(names, tuple(rels), f"B{n}(RP2)")


def pure_braid_generator_word(i: int, j: int, n: int) -> Word:
    """``A_{i,j} = (s_{j-1} ... s_{i+1}) s_i^2 (s_{j-1} ... s_{i+1})^-1``."""
    _require(1 <= i < j <= n, f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    prefix = tuple(range(j - 1, i, -1))
    return multiply(prefix, (i, i), invert(prefix))


def crystallographic_disk(n: int, q: int | None = None) -> Presentation:
    """``B_n / [P_n, P_n]``, optionally with ``s1^q`` added.

    The commutator subgroup of ``P_n`` is normal in ``B_n``, so it is the
    normal closure of the commutators of the pure generators ``A_{i,j}``.
    One relator per unordered pair of distinct pure generators.
    """
    _require(2 <= n <= CRYSTALLOGRAPHIC_DISK_MAX_STRANDS,
             f"crystallographic_disk supports 2 <= n <= {CRYSTALLOGRAPHIC_DISK_MAX_STRANDS}")
    _require(q is None or q >= 2, "q must be >= 2")
    pure = [pure_braid_generator_word(i, j, n) for i, j in combinations(range(1, n + 1), 2)]
    rels = _artin_relators(n) + [commutator(u, v) for u, v in combinations(pure, 2)]
    label = f"B{n}/[P{n},P{n}]"
    if q is not None:
        rels.append(power((1,), q))
        label += f"({q})"
    return Presentation(_artin_names(n), tuple(rels), label)


def crystallographic_surface(g: int, n: int, q: int | None = None) -> Presentation:
    """Crystallographic quotient ``B_n(M)/[P_n(M), P_n(M)]`` of a closed
    orientable genus-``g`` surface, optionally with ``s1^q`` added."""
    _require(g >= 1, "genus must be >= 1")
    _require(n >= 1, "n must be >= 1")
    _require(q is None or q >= 2, "q must be >= 2")
    names = list(_artin_names(n))
    index = {}
    for i in range(1, n + 1):
        for r in range(1, 2 * g + 1):
            names.append(f"a_{i}_{r}")
            index[i, r] = len(names)
    rels = _artin_relators(n)
    rels += [(i, i) for i in range(1, n)]
    a_gens = list(index.values())
    rels += [commutator((x,), (y,)) for x, y in combinations(a_gens, 2)]
    for i in range(1, n):
        for j in range(1, n + 1):
            tj = i + 1 if j == i else i if j == i + 1 else j
            for r in range(1, 2 * g + 1):
                rels.append((i, index[j, r], -i, -index[tj, r]))
    label = f"B{n}(T{g})/[P,P]"
    if q is not None:
        _require(n >= 2, "s1^q needs n >= 2")
        rels.append(power((1,), q))
        label += f"({q})"
    return Presentation(tuple(names), tuple(rels), label)


def surface_generators(p: Presentation) -> list[Word]:
    """The ``a_<i>_<r>`` generators of a crystallographic surface presentation."""
    return [(k + 1,) for k, name in enumerate(p.generators) if name.startswith("a_")]


def triangle_group(l: int, m: int, n: int) -> Presentation:
    _require(min(l, m, n) >= 2, "triangle group exponents must be >= 2")
    return Presentation(("a", "b"), (power((1,), l), power((2,), m), power((1, 2), n)),
                        f"T({l},{m},{n})")


def nonorientable_abelianized(g: int, q: int) -> Presentation:
    """Abelianized presentation of ``B_n(M)(q)`` for the non-orientable
    closed surface of genus ``g``: all generators commute, ``s1^2``,
    ``s1^q`` and ``rho_g^2 ... rho_1^2``."""
    _require(g >= 2, "non-orientable genus must be >= 2")
    _require(q >= 2, "q must be >= 2")
    names = ("s1",) + tuple(f"rho{j}" for j in range(1, g + 1))
    rels = [commutator((x,), (y,)) for x, y in combinations(range(1, g + 2), 2)]
    rels += [(1, 1), power((1,), q)]
    rels.append(tuple(x for j in range(g, 0, -1) for x in (j + 1, j + 1)))
    return Presentation(names, tuple(rels), f"N{g}-ab({q})")


def triangle_is_finite(l: int, m: int, n: int) -> bool:
    # 1/l + 1/m + 1/n > 1, in integers
    return m * n + l * n + l * m > l * m * n


def coxeter_is_finite(n: int, q: int) -> bool:
    return (q - 2) * (n - 2) < 4


def coxeter_expected_order(n: int, q: int) -> int:
    """Order of ``B_n(q)``: ``(f/2)^(n-1) n!`` for the platonic type ``(n, q)``."""
    _require(n >= 2 and q >= 2, "need n, q >= 2")
    if not coxeter_is_finite(n, q):
        raise NotFiniteError(f"B_{n}({q}) is not finite")
    if q == 2:
        return math.factorial(n)
    if n == 2:
        return q
    f = PLATONIC_FACES[n, q]
    return (f // 2) ** (n - 1) * math.factorial(n)


def crystallographic_disk_expected_order(n: int, q: int) -> int:
    _require(n >= 3 and q >= 3, "need n, q >= 3")
    if q % 2:
        return q
    k = q // 2
    return n * (n - 1) * k // 2 * math.factorial(n)


def _factor(m: int) -> dict[int, int]:
    out, p = {}, 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def normalize_abelian(free_rank: int, cyclic_orders) -> AbelianInvariants:
    """``Z^free_rank + sum Z_c`` as a divisibility chain (orders 0 count as Z)."""
    free_rank += sum(1 for c in cyclic_orders if c == 0)
    by_prime: dict[int, list[int]] = {}
    for c in cyclic_orders:
        for p, e in _factor(abs(c)).items() if c else ():
            by_prime.setdefault(p, []).append(p ** e)
    length = max((len(v) for v in by_prime.values()), default=0)
    chain = [1] * length
    for powers in by_prime.values():
        powers.sort()
        for k, pe in enumerate(powers):
            chain[length - len(powers) + k] *= pe
    return AbelianInvariants(free_rank, tuple(chain))


def expected_abelianization(surface: SurfaceClass, n: int, q: int) -> AbelianInvariants:
    _require(q >= 2, "q must be >= 2")
    kind = surface.kind
    if kind == "disk":
        raise ParameterError("disk quotients are covered by the crystallographic formulas")
    if kind == "sphere":
        _require(n >= 3, "the sphere formula needs n >= 3")
        return normalize_abelian(0, [math.gcd(q, 2 * (n - 1))])
    _require(n >= 2, "need n >= 2")
    if kind == "projective_plane":
        return normalize_abelian(0, [2, 2] if q % 2 == 0 else [2])
    if kind == "orientable_closed":
        return normalize_abelian(2 * surface.genus, [q])
    return normalize_abelian(surface.genus - 1, [math.gcd(2, q), 2])
