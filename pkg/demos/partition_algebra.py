"""Partition diagrams, their products and the Jucys-Murphy elements."""
from artifact import palgebra as P
from artifact import partition_core as pc

a = pc.Diagram(5, ((1, 2, -2, 3), (-3,), (-1, 4, -4), (5, -5)))
b = pc.Diagram(5, ((1, -1, -2), (2, -4), (3,), (4,), (5, -3, -5)))
r = pc.compose(a, b)
print("a * b =", r.diagram, "with", r.middle_components, "closed middle component(s)")

print("diagram counts:", {k: len(pc.enumerate_diagrams(2 * k)) for k in (1, 2, 3)})

k = 2
for i in range(1, 2 * k + 1):
    print(f"L{i} =", P.jm_L(i, k))

rows = P.verify_suite("HR", k)
print(f"HR relations at k={k}: {sum(ok for _, ok in rows)}/{len(rows)} hold")
