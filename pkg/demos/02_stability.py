"""
Stability
=========

Literalization replaces each ∧-member by T and each ∨-member by F. A
sequent is stable when that literal disjunction is valid.
"""

# %%
from lkg0 import is_stable, is_stable_fast, literalize_sequent, parse_sequent, tt_valid
from lkg0.formula import render

for text in ["p(a) & p(b), ~p(a) | ~p(b)", "p(b), ~p(a) | ~p(b)", "p, ~p, q | r", "p | q, T"]:
    s = parse_sequent(text)
    lit = literalize_sequent(s)
    print(f"{text:32} -> {render(lit):12} stable={is_stable(s)}")

# %%
# Stable holds exactly when some member is T, a literal meets its
# complement, or some member is a conjunction. The one-pass check agrees
# with the definition on every small sequent.
from itertools import combinations_with_replacement

from lkg0.formula import Sequent
from lkg0.oracle import enumerate_formulas

fs = list(enumerate_formulas(["p", "q"], 1))
pairs = [Sequent(c) for c in combinations_with_replacement(fs, 2)]
print(len(pairs), "pairs,", sum(is_stable(s) != is_stable_fast(s) for s in pairs), "mismatches")

# %%
# Stability is a property of the literalization alone, so it is decided
# by a truth table over that literal disjunction.
s = parse_sequent("q, (p | q) & r")
print(is_stable_fast(s), tt_valid([literalize_sequent(s)]))
