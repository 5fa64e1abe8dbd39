"""Group orders by coset enumeration, and what happens when a group is infinite."""
import time

from braidquot import catalog as cat
from braidquot.enumerator import element_order, enumerate_cosets

for n, q in [(3, 3), (4, 3), (3, 4), (5, 3), (3, 5)]:
    p = cat.coxeter_quotient(cat.artin_braid(n), q)
    t0 = time.perf_counter()
    res = enumerate_cosets(p)
    dt = time.perf_counter() - t0
    print(f"{p.label:8s} order {res.index:7d}  formula {cat.coxeter_expected_order(n, q):7d}"
          f"  peak {res.peak:8d}  {dt:.2f}s")

# Both strategies agree; Felsch keeps fewer cosets alive
p = cat.coxeter_quotient(cat.artin_braid(4), 3)
for strategy in ("hlt", "felsch"):
    print(strategy, enumerate_cosets(p, strategy=strategy).to_json())

# A complete table gives a permutation action, so element orders come for free
t = enumerate_cosets(cat.sphere_braid(3)).table
print("order of s1 in B3(S2):", element_order(t, (1,)))

# Index of a subgroup: <s1> in S4 has index 12, and s1 has order 2
s4 = cat.symmetric_group(4)
print("[S4 : <s1>] =", enumerate_cosets(s4, [(1,)]).index)

# (q-2)(n-2) >= 4: the enumeration just hits its cap
res = enumerate_cosets(cat.coxeter_quotient(cat.artin_braid(4), 4), max_cosets=200_000)
print("B4(4):", res.outcome, "after", res.peak, "live cosets")
