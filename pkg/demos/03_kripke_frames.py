"""Kripke frames: FS frames, derived Int2GC frames and persistence."""

# %%
from int2gc.kripke import (KripkeModel, build_preference_frame, check_frame,
                           check_persistence, derived_int2gc_frame,
                           enumerate_frames, find_kripke_countermodel,
                           make_frame, satisfies, up_sets, valid_in_frame)
from int2gc.formula import enumerate_formulas

fr = make_frame("fs", ["w0", "w1"], [("w0", "w1")],
                r=[("w0", "w0"), ("w0", "w1"), ("w1", "w1")])
print(fr.kind, check_frame(fr).ok)
bad = make_frame("fs", ["w0", "w1"], [("w0", "w1")], r=[("w0", "w1")])
print("R alone:", check_frame(bad))

# %%
# An FS frame read through R o >= and <= o R.
d = derived_int2gc_frame(fr)
print(d.r1.astype(int), d.r2.astype(int), sep="\n")
m = KripkeModel.make(fr, {"p": ["w1"]})
for f in ["F p", "G p", "P p", "H p", "p -> H F p"]:
    print(f, [satisfies(m, w, f) for w in fr.worlds])

# %%
# Truth sets of all depth-2 formulas stay up-closed.
forms = list(enumerate_formulas(["p"], 2))
print(len(forms), "formulas;", check_persistence(m, forms).ok)

# %%
frames = list(enumerate_frames(3, "fs"))
print(len(frames), "FS frames up to 3 worlds")
print("D-or valid on all:", all(valid_in_frame("G(p|q) -> G p | F q", f) for f in frames))
m, w = find_kripke_countermodel("G(p|q) -> G p | F q", 3)
print("countermodel at", w, m.frame.leq.astype(int).tolist(), m.valuation)

# %%
# Preference frames: worlds ranked in levels, R relating worlds on the same level.
pf = build_preference_frame([["x1"], ["x2", "x3"]])
print(pf.worlds, check_frame(pf).ok)
print([s.astype(int).tolist() for s in up_sets(pf.leq)])
