"""Abelianizations through Smith normal form."""
import numpy as np

from braidquot import catalog as cat
from braidquot.abelianizer import (abelian_invariants, certify_infinite, relation_matrix,
                                   smith_normal_form)
from braidquot.words import Presentation

A = np.array([[4, 6, 2], [8, -3, 5], [0, 7, 1]], dtype=object)
s = smith_normal_form(A)
print("diagonal:", s.diagonal)
print("U A V == D:", (s.U.dot(A).dot(s.V) == s.D).all())

# <g | g^a, g^b> collapses to the cyclic group of order gcd(a, b)
print(abelian_invariants(Presentation(("g",), ((1,) * 12, (1,) * 18))))

print("sphere quotients, n strands (rows) by q (columns)")
for n in range(3, 7):
    row = [str(abelian_invariants(cat.coxeter_quotient(cat.sphere_braid(n), q))) for q in range(2, 10)]
    print(n, " ".join(f"{x:>5s}" for x in row))

for q in (3, 4):
    p = cat.coxeter_quotient(cat.projective_plane_braid(3), q)
    print(p.label, abelian_invariants(p))

p = cat.nonorientable_abelianized(3, 4)
print(p.label, relation_matrix(p).tolist())
print(abelian_invariants(p), "infinite:", certify_infinite(p))
