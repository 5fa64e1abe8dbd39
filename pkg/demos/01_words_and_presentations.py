"""Words, presentations and the braid-to-permutation map."""
from braidquot import catalog as cat
from braidquot.words import (braid_permutation, conjugate, cycles, cyclically_reduce,
                             free_reduce, invert, quotient_by_normal_closure)

# Words are tuples of signed generator indices: 2 is s2, -2 is its inverse.
w = (1, 2, -2, 3, -3, -1, 2)
print("reduced:", free_reduce(w))
print("inverse of s1 s2:", invert((1, 2)))
print("s2 conjugated by s1:", conjugate((2,), (1,)))
print("cyclic core of s2^-1 s1 s2:", cyclically_reduce((-2, 1, 2)))

# The four-strand braid group and its sphere cousin
b4 = cat.artin_braid(4)
print(b4.label, b4.generators)
for r in b4.relators:
    print("  ", b4.format_word(r))

s4 = cat.sphere_braid(4)
print(s4.label, "extra relator:", s4.format_word(s4.relators[-1]))

# Adding s1^3 gives a finite quotient; JSON round-trips exactly.
q = cat.coxeter_quotient(s4, 3)
print(q.dumps())

# Forget braiding: every pure braid maps to the identity permutation
a13 = cat.pure_braid_generator_word(1, 3, 4)
print("A_13 =", b4.format_word(a13), "->", braid_permutation(a13, 4))
print("s1 s2 s3 ->", cycles(braid_permutation((1, 2, 3), 4)))

smaller = quotient_by_normal_closure(q, [(1, -3)], label="killed s1 s3^-1")
print(smaller.label, len(smaller.relators), "relators")
