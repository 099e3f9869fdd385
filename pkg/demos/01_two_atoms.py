"""
A first proof
=============

Parse a sequent, prove it with the four-rule calculus, print the proof
and check it.
"""

# %%
from lkg0 import check_proof, parse_sequent, prove_full

seq = parse_sequent("p(a) & p(b), ~p(a) | ~p(b)")
print(seq)

# %%
# The full calculus splits the ∧-member first, then expands the
# ∨-member on each branch until both leaves close.
verdict = prove_full(seq)
print(verdict)
print(verdict.proof.to_text())

# %%
# The checker re-derives every line from its premises.
print(check_proof(verdict.proof))

# %%
# Proofs serialize to JSON and come back intact.
from lkg0.proof import Proof

back = Proof.from_json(verdict.proof.to_json())
print(check_proof(back), len(back), "lines")

# %%
# An invalid sequent gets a countermodel instead of a proof.
no = prove_full(parse_sequent("p & q, ~p"))
print(no)
print("failing leaf:", no.failing)
