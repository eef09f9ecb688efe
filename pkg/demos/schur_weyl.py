"""The partition algebra acting on tensor space (C^n)^{(x)k}."""
from artifact import palgebra as P
from artifact import schur_weyl as sw

n, k = 3, 2
e2 = sw.psi("e2", n, k)
for a in ((1, 1), (1, 2)):
    print(f"e2 . v{a} =", sw.format_vector(e2.apply({(0, a): 1})))

s1 = sw.psi("s1", n, k)
print("s1 . v(1,2) =", sw.format_vector(s1.apply({(0, (1, 2)): 1})))

# at n >= 2k the action is faithful, so equality of operators certifies identities
lhs = P.e(1, k) * P.e(1, k)
print("e1 e1 == z e1 certified at n=4:", sw.certify_identity(lhs, P.zvar(k) * P.e(1, k), 4))
print("witness of infinite dimension (rank 4):", sw.witness_independence(3, k=2, n=5))
