"""Explicit contradiction witnesses and what makes them tick.

Four perfect correlations of the four-qubit fully connected state cannot be
satisfied by any +-1 assignment: each single-qubit observable appears an
even number of times, yet the signs multiply to -1.
"""

from avnproofs import (
    assignment_consistent,
    complete_graph,
    find_witness,
    format_witness,
    is_critical,
    parse_distribution,
    path_graph,
    underrepresented_qubits,
    verify_witness,
)

fc4 = complete_graph(4)
singles = parse_distribution("1|2|3|4", 4)
w = find_witness(fc4, singles, max_size=4)
print("fully connected, one qubit per party:")
for eq in format_witness(w, fc4):
    print(f"  {eq}")
print(f"  verified: {verify_witness(w, fc4)}, critical: {is_critical(w, fc4)}")
print(f"  qubits with fewer than two observables: {underrepresented_qubits(w, fc4)}")

# dropping any one correlation restores a consistent assignment
ops = w.operators(fc4)
check = assignment_consistent(ops[:-1])
print(f"\nwithout the last correlation, consistent: {check.consistent}")
values = {k: v for k, v in check.model.items() if v == -1}
print(f"one satisfying assignment sets these observables to -1: {sorted(values)}")

# the linear cluster split {1,4}|{2,3} also has a four-correlation witness
lc4 = path_graph(4)
w = find_witness(lc4, parse_distribution("1,4|2,3", 4), max_size=4)
print("\nlinear cluster, {1,4} vs {2,3}:")
for eq in format_witness(w, lc4):
    print(f"  {eq}")
print(f"  subsets: {[s.indices_1based() for s in w.subsets]}")
print(f"  critical: {is_critical(w, lc4)}")

# no contradiction is possible with only two qubits
edge = parse_distribution("1|2", 2)
from avnproofs import Graph

print(
    "\ntwo-qubit state, exhaustive search finds:",
    find_witness(Graph.from_edges(2, [(1, 2)]), edge, max_size=8, exhaustive=True),
)
