"""Rough H-sets: approximations valued in a five-element Heyting algebra."""

# %%
import numpy as np

from int2gc.fixtures import example_context
from int2gc.rough import box_g, box_h, dia_f, dia_p, power_algebra, verify_rough_laws
from int2gc.algebra import fs_flags
from int2gc.semantics import valid_in_algebra

ctx = example_context()
h = ctx.algebra
print("elements:", h.names)
print("universe:", ctx.universe)
print("relation:\n", np.array(h.names)[ctx.relation])

# %%
# The four operators on the named H-sets.  phi is constantly 0, psi constantly 1.
for name, s in ctx.sets.items():
    for op in (dia_f, box_g, dia_p, box_h):
        print(f"{op.__name__}({name}) =", ctx.named(op(ctx, s)))

# %%
# G distributes badly over joins: G(phi | psi) is 1 at x, while G phi | F psi is only c.
phi, psi = ctx.sets["phi"], ctx.sets["psi"]
lhs = box_g(ctx, h.join[phi, psi])
rhs = h.join[box_g(ctx, phi), dia_f(ctx, psi)]
print("G(phi|psi):", ctx.named(lhs))
print("G phi | F psi:", ctx.named(rhs))

# %%
# The Galois laws, units, counits and the Dunn-style identities all hold.
rep = verify_rough_laws(ctx)
print(rep.summary())

# %%
# All 25 H-sets form an H2GC algebra satisfying the FS identities, which still
# refutes G(p|q) -> G p | F q.
alg = power_algebra(ctx)
print(alg.n, "elements;", fs_flags(alg))
v = valid_in_algebra("G(p|q) -> G p | F q", alg)
print("valid:", v.ok, "witness:", v.witness)
