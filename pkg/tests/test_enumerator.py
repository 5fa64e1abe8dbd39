import math

import numpy as np
import pytest
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from braidquot import catalog as cat
from braidquot.enumerator import (DEFAULT_MAX_COSETS, IncompleteTableError, column,
                                  default_max_cosets, element_order, enumerate_cosets,
                                  group_order, permutation_order, permutation_representation,
                                  word_permutation)
from braidquot.suite import consistency_battery
from braidquot.words import Presentation


def sympy_order(p: Presentation) -> int:
    F, *gens = free_group(",".join(f"x{i}" for i in range(p.rank)))
    rels = []
    for r in p.relators:
        w = F.identity
        for x in r:
            w = w * (gens[abs(x) - 1] ** (1 if x > 0 else -1))
        rels.append(w)
    return int(FpGroup(F, rels).order())


@pytest.mark.parametrize("strategy", ["hlt", "felsch"])
def test_examples(strategy):
    assert group_order(cat.symmetric_group(3), strategy=strategy) == 6
    assert group_order(cat.coxeter_quotient(cat.artin_braid(3), 4), strategy=strategy) == 96
    assert group_order(cat.sphere_braid(3), strategy=strategy) == 12


@pytest.mark.parametrize("p", [
    cat.symmetric_group(4),
    cat.triangle_group(2, 3, 5),
    cat.coxeter_quotient(cat.sphere_braid(4), 3),
    cat.projective_plane_braid(2),
], ids=lambda p: p.label)
def test_orders_agree_with_sympy(p):
    assert group_order(p, 100_000) == sympy_order(p)


def test_trivial_presentations():
    assert group_order(Presentation((), ())) == 1
    assert group_order(Presentation(("a",), ((1,),))) == 1
    assert group_order(Presentation(("a",), ((1, 1, 1, 1, 1),))) == 5


def test_free_group_is_inconclusive():
    res = enumerate_cosets(Presentation(("a", "b"), ()), (), 1000)
    assert not res.finite and res.index is None
    assert res.to_json() == {"outcome": "inconclusive", "peak": res.peak, "strategy": "hlt"}
    assert res.peak <= 1000


def test_json_shape():
    res = enumerate_cosets(cat.sphere_braid(3), (), 1000, "felsch")
    assert res.to_json() == {"outcome": "finite", "index": 12, "peak": res.peak, "strategy": "felsch"}
    assert res.peak >= 12


def test_unknown_strategy_and_bad_cap():
    with pytest.raises(ValueError):
        enumerate_cosets(cat.sphere_braid(3), (), 100, "random")
    with pytest.raises(ValueError):
        enumerate_cosets(cat.sphere_braid(3), (), 0)


def test_default_cap(monkeypatch):
    monkeypatch.delenv("BRAIDQUOT_MAX_COSETS", raising=False)
    assert default_max_cosets() == DEFAULT_MAX_COSETS == 5_000_000
    monkeypatch.setenv("BRAIDQUOT_MAX_COSETS", "1234")
    assert default_max_cosets() == 1234
    assert enumerate_cosets(cat.sphere_braid(3)).max_cosets == 1234


def test_column_layout():
    assert [column(x) for x in (1, -1, 2, -2, 3)] == [0, 1, 2, 3, 4]


def test_table_is_complete_consistent_and_closes():
    p = cat.coxeter_quotient(cat.artin_braid(4), 3)
    t = enumerate_cosets(p).table
    assert t.complete and t.status == "complete"
    assert t.table.min() >= 0 and t.index == 648
    assert t.is_consistent()
    assert t.closes(p.relators)
    for perm in permutation_representation(t):
        assert sorted(perm.tolist()) == list(range(648))


def test_tables_are_reproducible():
    p = cat.coxeter_quotient(cat.sphere_braid(4), 4)
    a = enumerate_cosets(p).table.table
    b = enumerate_cosets(p).table.table
    assert np.array_equal(a, b)


def test_strategies_agree_on_suite_groups():
    assert consistency_battery() == [24, 96, 648, 12, 12, 192, 48, 60]


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("strategy", ["hlt", "felsch"])
def test_index_times_stabilizer_order_is_group_order(n, strategy):
    sn = cat.symmetric_group(n)
    index = enumerate_cosets(sn, [(1,)], 10_000, strategy).index
    s1 = element_order(enumerate_cosets(sn, (), 10_000, strategy).table, (1,))
    assert index * s1 == math.factorial(n)


def test_subgroup_index():
    b3s2 = cat.sphere_braid(3)
    assert enumerate_cosets(b3s2, [(1,)]).index == 3
    assert enumerate_cosets(b3s2, [(1,), (2,)]).index == 1


def test_larger_cap_keeps_finite_index():
    p = cat.coxeter_quotient(cat.artin_braid(3), 5)
    small = enumerate_cosets(p, (), 5_000)
    assert small.finite
    for cap in (10_000, 100_000, 1_000_000):
        assert enumerate_cosets(p, (), cap).index == small.index == 600


def test_element_orders():
    assert element_order(enumerate_cosets(cat.sphere_braid(3)).table, (1,)) == 4
    assert element_order(enumerate_cosets(cat.coxeter_quotient(cat.sphere_braid(4), 3)).table, (1,)) == 3
    t = enumerate_cosets(cat.symmetric_group(4)).table
    assert element_order(t, ()) == 1
    assert element_order(t, (1, 2)) == 3
    assert element_order(t, (1, 2, 3)) == 4


def test_word_permutation_is_a_homomorphism():
    t = enumerate_cosets(cat.triangle_group(2, 3, 5)).table
    u, v = (1, 2, -1), (2, 2, 1)
    assert np.array_equal(word_permutation(t, u + v), word_permutation(t, v)[word_permutation(t, u)])


def test_permutation_order():
    assert permutation_order(np.array([1, 2, 0, 4, 3])) == 6
    assert permutation_order(np.arange(5)) == 1


def test_incomplete_table_errors():
    res = enumerate_cosets(Presentation(("a", "b"), ()), (), 500)
    with pytest.raises(IncompleteTableError):
        permutation_representation(res.table)
    with pytest.raises(IncompleteTableError):
        element_order(res.table, (1,))


@pytest.mark.parametrize("strategy", ["hlt", "felsch"])
def test_debug_mode_on_capped_run(strategy):
    res = enumerate_cosets(cat.triangle_group(2, 3, 7), (), 20_000, strategy, debug=True)
    assert not res.finite
    assert res.table.is_consistent()


@pytest.mark.slow
def test_four_strand_sphere_six_is_inconclusive_at_default_cap():
    res = enumerate_cosets(cat.coxeter_quotient(cat.sphere_braid(4), 6))
    assert res.outcome == "inconclusive"
