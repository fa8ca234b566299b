"""Minimum and maximum index values, under two distinct readings.

A degree tuple can mean two different families: the orderings of a
caterpillar spine, or the full degree sequence of a tree.  The searches
are kept separate because the same tuple usually admits only one of the
readings; (2,4,5,7,9) has odd sum, so no tree has it as a full degree
sequence, yet it is a perfectly good spine.
"""

from irrforge import (
    DegreeSequence,
    compare_greedy_to_bruteforce,
    extremal_over_arrangements,
    extremal_over_realizations,
    is_tree_realizable,
    min_adjacency_arrangement,
)

tuple_a = (2, 4, 5, 7, 9)
print(f"{tuple_a}: realizable as a full degree sequence? "
      f"{is_tree_realizable(DegreeSequence(tuple_a))}")

res = extremal_over_arrangements(tuple_a)
print(f"spine reading: min {res.min_value} at {res.argmin.spine}, "
      f"max {res.max_value} at {res.argmax.spine}, "
      f"{res.instances_examined} arrangements")

# the adjacent-difference term alone is minimized by sorting, and its
# minimum is always max - min
arrangement, value = min_adjacency_arrangement(tuple_a)
print(f"adjacency term minimum {value} at {arrangement}")

tuple_b = (1, 1, 1, 1, 1, 2, 3, 4)
seq = DegreeSequence(tuple_b)
res = extremal_over_realizations(seq)
print(f"\n{tuple_b}: realization classes {res.instances_examined}, "
      f"min {res.min_value}, max {res.max_value}")

cmp = compare_greedy_to_bruteforce(seq)
print(f"greedy gives {cmp.greedy_value}; equals the brute minimum? {cmp.equal}")
