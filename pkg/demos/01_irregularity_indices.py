"""Four irregularity indices on small trees.

The edge-difference index sums |deg(u) - deg(v)| over edges; its three
companions extend the sum to all vertex pairs, square the differences, or
rewrite the spread through the degree variance.  All four are exact
integers and ignore vertex labels.
"""

from irrforge import (
    albertson_index,
    make_tree,
    sigma_index,
    total_irregularity,
    variance_form,
)

# a path, a star, and a broom on six vertices
path = make_tree(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)])
star = make_tree(6, [(1, k) for k in range(2, 7)])
broom = make_tree(6, [(1, 2), (2, 3), (3, 4), (3, 5), (3, 6)])

for name, tree in [("path", path), ("star", star), ("broom", broom)]:
    print(f"{name:6s} degrees {tree.degrees}")
    print(f"       edge-difference  {albertson_index(tree)}")
    print(f"       all-pairs        {total_irregularity(tree)}")
    print(f"       variance form    {variance_form(tree)}")
    print(f"       squared          {sigma_index(tree)}")

# labels never matter: reverse the path's labels and recompute
reversed_path = make_tree(6, [(7 - u, 7 - v) for u, v in path.edges])
assert albertson_index(reversed_path) == albertson_index(path)
print("\nrelabeling the path leaves every index unchanged")

# the edge sum can never exceed the all-pairs sum, and the variance form
# vanishes exactly when every degree is equal (only the 2-vertex tree)
assert albertson_index(broom) <= total_irregularity(broom)
assert variance_form(make_tree(2, [(1, 2)])) == 0
print("edge sum <= pair sum; variance form is zero only on the single edge")
