"""Census of graph-state classes under local complementation + isomorphism.

Counts grow 1, 1, 2, 4, 11, 26, 101 for n = 2..8; this demo stops at n = 6
to stay instant (n = 8 takes a dozen seconds).
"""

from avnproofs import classify_all, lc_orbit, local_complement, star_graph

for n in range(2, 7):
    records = classify_all(n)
    print(f"n={n}: {len(records)} classes")
    for rec in records:
        edges = ", ".join(f"{i}-{j}" for i, j in rec.representative.edges())
        print(
            f"  class {rec.class_id}: orbit size {rec.orbit_size}, "
            f"|Aut| {rec.aut_order}, edges {edges}"
        )

# a star turns into the fully connected graph by complementing its center,
# so the two sit in one class
star = star_graph(5)
print(f"\nstar on 5 vertices: {star}")
print(f"complement neighbors of its center: {local_complement(star, 1)}")
print(f"orbit size of the star: {len(lc_orbit(star))}")
