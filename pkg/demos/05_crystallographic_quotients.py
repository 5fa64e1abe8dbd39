"""Quotients of B_n by [P_n, P_n], on the disk and on closed surfaces."""
from braidquot import catalog as cat
from braidquot.abelianizer import abelian_invariants, certify_infinite
from braidquot.enumerator import enumerate_cosets
from braidquot.words import quotient_by_normal_closure

for n in (3, 4):
    for q in (3, 4, 5, 6):
        p = cat.crystallographic_disk(n, q)
        res = enumerate_cosets(p)
        print(f"n={n} q={q}: order {res.index:6d}  abelianization {abelian_invariants(p)}"
              f"  closed-form {cat.crystallographic_disk_expected_order(n, q)}")
# For even q the enumerated order is k^(n(n-1)/2) n! with q = 2k, not the closed form above.

for g in (1, 2):
    for n in (2, 3):
        p = cat.crystallographic_surface(g, n)
        pq = cat.crystallographic_surface(g, n, 3)
        killed = quotient_by_normal_closure(pq, cat.surface_generators(pq))
        print(f"g={g} n={n}: {abelian_invariants(p)}; with q=3: {abelian_invariants(pq)},"
              f" infinite {certify_infinite(pq)}, order mod surface generators"
              f" {enumerate_cosets(killed).index}")
