"""Heisenberg string diagrams: local relations and explicit preimages."""
from artifact import affine as af
from artifact import heis as H

print("ccw circle ->", H.reduce(H.circle(clockwise=False)))
print("cw circle  ->", H.reduce(H.circle(clockwise=True)))
print("left curl  ->", H.reduce(H.threaded_curl(())))
print("right curl ->", H.reduce(H.threaded_curl((), clockwise=True)))

w = H.up_down(2)
sims = H.simple_diagrams(w, w)
print(len(sims), "simple diagrams in End((ud)^2)")
alpha = next(d for d in sims if d.has_crossing())
pre = H.decompose_endo(alpha)
print("preimage of", alpha, "is", pre)
print("phi(preimage) == alpha:", af.eval_phi(pre) == H.HeisMorphism.basis(alpha))
