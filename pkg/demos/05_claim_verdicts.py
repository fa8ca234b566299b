"""Evaluating the claims catalog on concrete instances.

Seventeen cataloged inequality and identity claims evaluate to verdicts:
HOLDS, VIOLATED, NOT_APPLICABLE (a stated condition or required quantity
is missing), or UNDEFINED (zero denominator, root of a negative).  All
comparisons are exact; square roots are compared by squaring, so a
verdict's direction is never a rounding artifact.
"""

from irrforge import (
    DegreeSequence,
    Instance,
    catalog,
    evaluate_all,
    evaluate_bound,
    extremal_over_realizations,
    greedy_tree,
    make_tree,
    verdict_to_json,
)

print("catalog:")
for record in catalog():
    print(f"  {record.bound_id:5s} {record.relation:5s} {record.location}")

# a star with four leaves, with realization extremal data attached
seq = DegreeSequence((1, 1, 1, 1, 4))
inst = Instance.from_tree(greedy_tree(seq)).with_extremal(extremal_over_realizations(seq))

print("\nverdicts on the 4-leaf star:")
for v in evaluate_all(inst):
    print(f"  {v.bound_id:5s} {v.status:15s} {v.note}")

# one verdict in full JSON, as the command line emits it
v = evaluate_bound("B01", inst)
print("\n" + verdict_to_json(v, inst))

# proof mode applies the assumptions made inside proofs as extra gates,
# so its not-applicable set always contains the literal one
p4 = Instance.from_tree(make_tree(4, [(1, 2), (2, 3), (3, 4)]))
lit = evaluate_bound("B13", p4, mode="literal")
prf = evaluate_bound("B13", p4, mode="proof")
print(f"\nB13 on the 4-path: literal {lit.status}, proof {prf.status}")
