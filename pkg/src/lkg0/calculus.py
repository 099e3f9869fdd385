"""Sequent rules, full proof search and the proof checker.

A proof is a list of numbered lines, premises before conclusions. Each line
holds a sequent, a rule label and the numbers of its premise lines:

* ``Succ``: no premises; the sequent has no surface ∧-member and is stable.
* ``Or``:   one premise Γ,F,G for the line Γ,F∨G.
* ``And``:  two premises Γ,F and Γ,G for the line Γ,F∧G.

``Fail`` is an outcome of the search, never a line.
"""

from __future__ import annotations

from dataclasses import dataclass

from lkg0.formula import And, Or, Sequent
from lkg0.literal import is_stable
from lkg0.proof import (  # noqa: F401  (re-exported)
    Proof, ProofFormatError, ProofLine, Provable, RuleLabel, Unprovable, Verdict,
)
from lkg0.search import (  # noqa: F401  (re-exported)
    RuleError, SearchNode, SearchTimeout, apply_and, apply_or, build_proof,
    decide, leftmost, linearize, replay,
)


def succ_applicable(s: Sequent) -> bool:
    return leftmost(s, And) is None and is_stable(s)


def prove_full(s: Sequent, stats=None, timeout: float | None = None) -> Verdict:
    """Decide ``s`` with the four-rule strategy.

    A stable sequent splits its leftmost ∧-member, or closes by Succ when it
    has none; an unstable one expands its leftmost ∨-member, or fails when it
    has none. A Yes carries a strict proof (built on first access), a No
    carries the failing literal sequent and a countermodel read off it.
    """
    found = decide(s, "full", stats, timeout)
    if found is None:
        return Provable(build=lambda: build_proof(s, "full"))
    return Unprovable(found.countermodel, find=lambda: replay(s, "full", found.choices))


# -- checking -----------------------------------------------------------------

def check_line(proof: Proof, i: int, mode: str = "strict") -> tuple[bool, str]:
    """Check that line ``i`` follows from its premises by its rule.

    ``mode="pv"`` additionally accepts Succ+ axioms. Returns ``(ok, reason)``.
    """
    for pos, ln in enumerate(proof.lines):
        if ln.index == i:
            break
    else:
        return False, f"no line {i}"
    earlier = {x.index: x.sequent for x in proof.lines[:pos]}
    return _check_line(ln, earlier, mode)


def _check_line(ln: ProofLine, earlier: dict[int, Sequent], mode: str) -> tuple[bool, str]:
    rule = ln.rule
    if len(ln.premises) != rule.arity:
        return False, f"{rule.value} takes {rule.arity} premise(s), got {len(ln.premises)}"
    for j in ln.premises:
        if j not in earlier:
            return False, f"premise {j} is not an earlier line"
    s = ln.sequent
    if rule is RuleLabel.SUCC:
        if leftmost(s, And) is not None:
            return False, "Succ with a surface ∧-member"
        if not is_stable(s):
            return False, "Succ on an unstable sequent"
        return True, ""
    if rule is RuleLabel.SUCC_PLUS:
        if mode != "pv":
            return False, "Succ+ is only accepted in pv mode"
        if not is_stable(s):
            return False, "Succ+ on an unstable sequent"
        return True, ""
    if rule is RuleLabel.OR:
        want = earlier[ln.premises[0]]
        for p, f in enumerate(s):
            if isinstance(f, Or) and apply_or(s, p) == want:
                return True, ""
        return False, f"no ∨-member yields line {ln.premises[0]}"
    a, b = (earlier[j] for j in ln.premises)
    for p, f in enumerate(s):
        if isinstance(f, And):
            x, y = apply_and(s, p)
            if (x == a and y == b) or (x == b and y == a):
                return True, ""
    return False, f"no ∧-member yields lines {ln.premises[0]},{ln.premises[1]}"


@dataclass(frozen=True)
class ProofCheck:
    ok: bool
    diagnostics: tuple[tuple[int | None, str], ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "proof OK"
        return "\n".join(f"line {i}: {msg}" if i is not None else msg
                         for i, msg in self.diagnostics)


def check_proof(proof: Proof, mode: str = "strict") -> ProofCheck:
    diags: list[tuple[int | None, str]] = []
    if not proof.lines:
        return ProofCheck(False, ((None, "empty proof"),))
    seen = set()
    last = None
    for ln in proof.lines:
        if ln.index in seen or (last is not None and ln.index <= last):
            diags.append((ln.index, "line numbers must be strictly increasing"))
        seen.add(ln.index)
        last = ln.index
    earlier: dict[int, Sequent] = {}
    for ln in proof.lines:
        ok, why = _check_line(ln, earlier, mode)
        if not ok:
            diags.append((ln.index, why))
        earlier.setdefault(ln.index, ln.sequent)
    if proof.lines[-1].sequent != proof.target:
        diags.append((proof.lines[-1].index, "last line differs from the target sequent"))
    return ProofCheck(not diags, tuple(diags))
