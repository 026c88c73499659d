"""Hilbert-style proof scripts: build, check, break."""

# %%
from dataclasses import replace

from int2gc.jsonio import dumps, proof_to_json
from int2gc.proof import Justification, ProofLine, check_proof, get_system
from int2gc.proof.builder import Builder
from int2gc.proof.derivations import CORPUS, build_script, script_corpus

s = build_script("gc1-unit")
print(s.system, "proves", s.conclusion)
for k, ln in enumerate(s.lines, 1):
    print(k, ln.f, ln.just)
print(check_proof(s))

# %%
# Citing the wrong rule on the last line is caught.
last = s.lines[-1]
bad = replace(s, lines=s.lines[:-1] + [ProofLine(last.f, Justification.rule("GC_FH_elim", last.just.i))])
print(check_proof(bad))

# %%
# Scripts are produced by a small builder with a deduction-theorem context.
b = Builder("Int2GC+FS")
got = CORPUS["ik6-in-fs"].run(b)
print(got, "in", len(b.lines), "lines")

# %%
ik = get_system("IKt-Ewald")
print(sorted(ik.axioms), sorted(ik.rules))
corpus = script_corpus()
print(sum(bool(check_proof(x)) for x in corpus.values()), "of", len(corpus), "scripts accepted")

# %%
print(dumps(proof_to_json(s))[:400])
