"""
Differential testing against truth tables
=========================================

Every engine is compared with a bitset truth table on generated formulas.
"""

# %%
import io
import time

from lkg0.cli import ENGINES, cmd_diff
from lkg0.formula import render
from lkg0.oracle import GenParams, random_corpus

params = GenParams(max_connectives=40, seed=42)
for f in random_corpus(GenParams(max_connectives=12, seed=3), 4):
    print(render(f))

# %%
t0 = time.perf_counter()
buf = io.StringIO()
bad = cmd_diff(params, 2000, buf)
print(f"{bad} disagreements in {time.perf_counter() - t0:.1f} s")

# %%
# A deliberately wrong engine shows what a report looks like. Each case
# is a comment followed by a sequent that re-parses.
from lkg0.proof import Provable


def always_yes(s, stats, workers=None):
    return Provable(build=lambda: None)


buf = io.StringIO()
bad = cmd_diff(GenParams(max_connectives=6, seed=1), 20, buf, {"pv": ENGINES["pv"], "yes": always_yes})
print(bad, "disagreements")
print(buf.getvalue()[:400])
