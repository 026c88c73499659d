"""Why F-monotonicity needs the FS identities: the chain 0 < u < 1."""

# %%
from int2gc.algebra import check_h2gc, fs_flags, identity_witness
from int2gc.canonical import canonical_frame, key_lemma_check
from int2gc.fixtures import three_chain_algebra
from int2gc.formula import enumerate_formulas
from int2gc.semantics import eval_formula, find_algebraic_countermodel, valid_in_algebra

alg = three_chain_algebra()
for op in ("fdia", "gbox", "pdia", "hbox"):
    print(op, [alg.names[i] for i in alg.op(op)])
print("Galois pairs:", check_h2gc(alg))

# %%
f = "G(p->q) -> (F p -> F q)"
print(f, "at p=1, q=u:", alg.names[eval_formula(f, alg, {"p": "1", "q": "u"})])
print("first refuting valuation:", valid_in_algebra(f, alg).witness)

# %%
fl = fs_flags(alg)
print(fl)
i, j = identity_witness(alg, "fs1")
print("fs1 fails at", alg.names[i], alg.names[j])

# %%
# Over FS algebras the same formula has no countermodel up to five elements.
print(find_algebraic_countermodel(f, 5, require_fs=True))
alg2, val = find_algebraic_countermodel(f, 3)
print("smallest H2GC countermodel:", alg2.n, "elements,", val)

# %%
# The canonical Int2GC frame of the chain has two prime filters.
cf = canonical_frame(alg, "int2gc")
print(cf.worlds)
print("R1:\n", cf.r1.astype(int), "\nR2:\n", cf.r2.astype(int))
forms = list(enumerate_formulas(["p"], 2))
for e in alg.names:
    print(e, key_lemma_check(alg, {"p": e}, forms, "int2gc", cf).summary())
