"""
Nested and batched search
=========================

``pv`` splits one ∧-member at a time. ``pv_parallel`` splits every
∧-member of a sequent at once, so n of them give 2**n children.
"""

# %%
from lkg0 import BranchStats, pv, pv_parallel
from lkg0.formula import And, Atom, Sequent

for n in range(1, 7):
    seq = Sequent(And(Atom(f"a{i}"), Atom(f"b{i}")) for i in range(n))
    nested = BranchStats()
    pv(seq, nested)
    _, batched = pv_parallel(seq)
    print(f"n={n}  nested max width={nested.max_batch_width}  "
          f"batched top-level branches={batched.top_level_branches}")

# %%
# The verdicts agree. When pv answers Yes early on a stable sequent that
# still has ∧-members, the proof uses the Succ+ axiom, which only the pv
# checking mode accepts.
from lkg0 import check_proof, parse_sequent

v = pv(parse_sequent("p, ~p, q & r"))
print(v.proof.to_text())
print("strict:", bool(check_proof(v.proof)), " pv:", bool(check_proof(v.proof, mode="pv")))

# %%
# Worker processes decide the top-level children concurrently. The first
# No cancels the rest.
seq = parse_sequent("(p | q) & (r | s), ~p & ~q")
verdict, stats = pv_parallel(seq, workers=2)
print(verdict)
print(stats)
