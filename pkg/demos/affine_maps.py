"""One affine element seen through each evaluation map."""
from artifact import affine as af
from artifact import schur_weyl as sw

k = 2
u = af.AffineElement.parse("t2 x3 e1 + z1", k)
print("u =", u)
print("pr(u) =", af.eval_pr(u))
print("f_lambda(u) =", af.eval_f_lambda(u))
op = af.eval_psi_M(u, 3, sw.permutation_module(3))
print("psi(u) on V(3), first column:", sw.format_vector(op.apply({(0, (1, 2)): 1})))
print("phi(u) =", af.eval_phi(u))

rows = af.verify_relations(1)
print(f"k=1 relations under all targets: {sum(ok for *_, ok in rows)}/{len(rows)} hold")
