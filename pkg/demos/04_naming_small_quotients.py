"""Structure reports for the three- and four-strand sphere quotients."""
from braidquot import catalog as cat
from braidquot.identify import FINGERPRINTS, analyze, verify_three_strand_sphere_quotient
from braidquot.words import quotient_by_normal_closure

for e in FINGERPRINTS:
    print("-", e.justification)

for q in range(3, 11):
    r = verify_three_strand_sphere_quotient(q)
    print(f"B3(S2)({q}): order {r.order}, name {r.identified_name}")

s4 = cat.sphere_braid(4)
for q in (3, 4, 5):
    r = analyze(cat.coxeter_quotient(s4, q))
    print(f"B4(S2)({q}):", r.to_json())

# Killing s1 s3^-1 lands on the triangle group (2, 3, q)
for q in (3, 4, 5):
    quot = quotient_by_normal_closure(cat.coxeter_quotient(s4, q), [(1, -3)])
    print(q, analyze(quot).order, analyze(cat.triangle_group(2, 3, q)).order)

r = analyze(cat.coxeter_quotient(s4, 6), max_cosets=300_000)
print("B4(S2)(6):", r.order, "-", r.evidence)
print("T(2,3,6) finite?", cat.triangle_is_finite(2, 3, 6))
