"""Search machinery shared by the engines.

Two representations of the same search live here. The tree builders
(:func:`explore`) materialize every sequent so that proofs can be emitted.
The deciders (:func:`decide`) keep only the literal sets and the ordered
list of compound members per node, which is all the dispatch looks at, and
report the first failing leaf by its ∧-choices and literals. Both visit
the same nodes in the same order; :func:`replay` recovers the failing
sequent from the choices.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from lkg0.formula import And, Atom, Formula, NegAtom, Or, Sequent, Top, render
from lkg0.literal import has_top_or_pair
from lkg0.proof import Proof, ProofLine, RuleLabel


class RuleError(ValueError):
    pass


class SearchTimeout(RuntimeError):
    def __init__(self, nodes: int, seconds: float):
        self.nodes = nodes
        super().__init__(f"search gave up after {seconds:g}s ({nodes} nodes)")


# -- rules -------------------------------------------------------------------

def _member(s: Sequent, position: int, kind: type) -> Formula:
    if not 0 <= position < len(s):
        raise RuleError(f"position {position} out of range for a {len(s)}-member sequent")
    f = s[position]
    if not isinstance(f, kind):
        raise RuleError(f"member {position} is {render(f)!r}, not a {kind.__name__}-formula")
    return f


def apply_or(s: Sequent, position: int) -> Sequent:
    """Γ,F∨G  ↦  Γ,F,G  (the children take the member's place)."""
    f = _member(s, position, Or)
    return s.replace(position, f.l, f.r)


def apply_and(s: Sequent, position: int) -> tuple[Sequent, Sequent]:
    """Γ,F∧G  ↦  (Γ,F), (Γ,G)."""
    f = _member(s, position, And)
    return s.replace(position, f.l), s.replace(position, f.r)


def leftmost(s: Sequent, kind: type) -> int | None:
    for i, f in enumerate(s):
        if type(f) is kind:
            return i
    return None


# -- search trees and their linearization ------------------------------------

@dataclass(eq=False)
class SearchNode:
    """One sequent of a search tree.

    ``positions`` lists the members decomposed at this node. The nested
    engines decompose one member; the batched engine may decompose several,
    which linearization unfolds into a chain of ordinary rule applications.
    """

    sequent: Sequent
    rule: RuleLabel | None = None
    positions: tuple[int, ...] = ()
    children: list[SearchNode] = field(default_factory=list)
    line: int = 0


def linearize(root: SearchNode, target: Sequent | None = None) -> Proof:
    """Emit a proof with premises before conclusions, left branch first."""
    lines: list[ProofLine] = []

    def emit(seq, rule, premises=(), principal=None) -> int:
        idx = len(lines) + 1
        lines.append(ProofLine(idx, seq, rule, tuple(premises), principal))
        return idx

    stack = [(root, False)]
    while stack:
        node, ready = stack.pop()
        if not ready:
            stack.append((node, True))
            stack.extend((c, False) for c in reversed(node.children))
            continue
        rule, seq = node.rule, node.sequent
        if rule.arity == 0:
            node.line = emit(seq, rule)
        elif rule is RuleLabel.OR:
            node.line = _emit_or_chain(emit, seq, node.positions, node.children[0].line)
        else:
            node.line = _emit_and_tree(emit, seq, node.positions,
                                       [c.line for c in node.children])
    return Proof(tuple(lines), root.sequent if target is None else target)


def _emit_or_chain(emit, seq: Sequent, positions: Sequence[int], child: int) -> int:
    # expand rightmost first so the remaining positions stay valid
    desc = sorted(positions, reverse=True)
    chain = [seq]
    for p in desc[:-1]:
        chain.append(apply_or(chain[-1], p))
    prev = child
    for t in range(len(desc) - 1, -1, -1):
        prev = emit(chain[t], RuleLabel.OR, (prev,), desc[t])
    return prev


def _emit_and_tree(emit, seq: Sequent, positions: Sequence[int], leaves: list[int]) -> int:
    # leaves are ordered as itertools.product over (left, right) choices,
    # first position most significant
    order = sorted(positions)
    n = len(order)
    assert len(leaves) == 2 ** n
    level = leaves
    for k in range(n - 1, -1, -1):
        nxt = []
        for m in range(2 ** k):
            partial = seq
            for bit, p in enumerate(order[:k]):
                f = seq[p]
                partial = partial.replace(p, f.r if (m >> (k - 1 - bit)) & 1 else f.l)
            nxt.append(emit(partial, RuleLabel.AND, (level[2 * m], level[2 * m + 1]), order[k]))
        level = nxt
    return level[0]


# -- one step of each strategy on materialized sequents ---------------------

def _axiom(seq: Sequent) -> RuleLabel:
    return RuleLabel.SUCC if leftmost(seq, And) is None else RuleLabel.SUCC_PLUS


def expand_full(node: SearchNode, stats=None) -> bool:
    """Full calculus: split ∧ while stable, Succ when stable without ∧, else ∨ or fail."""
    seq = node.sequent
    j = leftmost(seq, And)
    if j is not None:
        # a surface ∧-member makes the sequent stable
        node.rule, node.positions = RuleLabel.AND, (j,)
        node.children = [SearchNode(x) for x in apply_and(seq, j)]
        if stats is not None:
            stats.record_and_step(2)
        return True
    if has_top_or_pair(seq):
        node.rule = RuleLabel.SUCC
        return True
    j = leftmost(seq, Or)
    if j is None:
        return False
    node.rule, node.positions = RuleLabel.OR, (j,)
    node.children = [SearchNode(apply_or(seq, j))]
    return True


def expand_nested(node: SearchNode, stats=None) -> bool:
    """pv: ⊤ or a complementary pair, else leftmost ∧, else leftmost ∨, else fail."""
    seq = node.sequent
    if has_top_or_pair(seq):
        node.rule = _axiom(seq)
        return True
    j = leftmost(seq, And)
    if j is not None:
        node.rule, node.positions = RuleLabel.AND, (j,)
        node.children = [SearchNode(x) for x in apply_and(seq, j)]
        if stats is not None:
            stats.record_and_step(2)
        return True
    j = leftmost(seq, Or)
    if j is not None:
        node.rule, node.positions = RuleLabel.OR, (j,)
        node.children = [SearchNode(apply_or(seq, j))]
        return True
    return False


def expand_batched(node: SearchNode, stats=None) -> bool:
    """Batched pv: all ∧-members at once (2ⁿ children), else all ∨-members at once."""
    seq = node.sequent
    if has_top_or_pair(seq):
        node.rule = _axiom(seq)
        return True
    items = seq.items
    ands = [i for i, f in enumerate(items) if type(f) is And]
    if ands:
        node.rule, node.positions = RuleLabel.AND, tuple(ands)
        for pick in itertools.product(*[(items[i].l, items[i].r) for i in ands]):
            new = list(items)
            for i, f in zip(ands, pick):
                new[i] = f
            node.children.append(SearchNode(Sequent(new)))
        if stats is not None:
            stats.record_and_step(len(node.children))
        return True
    ors = [i for i, f in enumerate(items) if type(f) is Or]
    if ors:
        node.rule, node.positions = RuleLabel.OR, tuple(ors)
        new = []
        for f in items:
            if type(f) is Or:
                new += (f.l, f.r)
            else:
                new.append(f)
        node.children = [SearchNode(Sequent(new))]
        return True
    return False


EXPANDERS = {"full": expand_full, "nested": expand_nested, "batched": expand_batched}


def explore(seq: Sequent, strategy: str, stats=None) -> SearchNode | Sequent:
    """Build the whole search tree, or return the first failing sequent."""
    expand = EXPANDERS[strategy]
    root = SearchNode(seq)
    stack = [root]
    while stack:
        node = stack.pop()
        if stats is not None:
            stats.nodes_visited += 1
        if not expand(node, stats):
            return node.sequent
        stack.extend(reversed(node.children))
    return root


def build_proof(seq: Sequent, strategy: str) -> Proof:
    tree = explore(seq, strategy)
    if isinstance(tree, Sequent):
        raise AssertionError(f"no proof: {render(tree)} fails")
    return linearize(tree)


def replay(seq: Sequent, strategy: str, choices: Sequence[int]) -> Sequent:
    """Follow ``choices`` at each ∧-step from ``seq`` down to the failing leaf."""
    expand = EXPANDERS[strategy]
    node = SearchNode(seq)
    k = 0
    while expand(node, None):
        if node.rule is RuleLabel.AND:
            node = node.children[choices[k]]
            k += 1
        elif node.rule is RuleLabel.OR:
            node = node.children[0]
        else:
            raise AssertionError("choices lead to an axiom")
    return node.sequent


# -- verdict-only search ------------------------------------------------------

class Failure(NamedTuple):
    """First failing leaf: the ∧-choices that reach it and its countermodel."""

    choices: list[int]
    countermodel: dict[str, bool]


def _put(g: Formula, pos: frozenset, neg: frozenset, closed: bool, out: list):
    t = type(g)
    if t is And or t is Or:
        out.append(g)
    elif t is Atom:
        if g.name not in pos:
            closed = closed or g.name in neg
            pos = pos | {g.name}
    elif t is NegAtom:
        if g.name not in neg:
            closed = closed or g.name in pos
            neg = neg | {g.name}
    elif t is Top:
        closed = True
    return pos, neg, closed


def decide(seq: Sequent, strategy: str, stats=None,
           timeout: float | None = None) -> Failure | None:
    """Run ``strategy`` without building sequents.

    Returns None when every leaf succeeds, otherwise a :class:`Failure`
    for the first failing leaf. Raises
    :class:`SearchTimeout` once ``timeout`` seconds have passed.
    """
    batched = strategy == "batched"
    close_first = strategy != "full"
    deadline = None if timeout is None else time.monotonic() + timeout
    pos, neg, closed = frozenset(), frozenset(), False
    comps: list = []
    for f in seq:
        pos, neg, closed = _put(f, pos, neg, closed, comps)
    stack = [(pos, neg, closed, tuple(comps), None)]
    n = 0
    try:
        while stack:
            pos, neg, closed, comps, path = stack.pop()
            n += 1
            if deadline is not None and not n & 1023 and time.monotonic() > deadline:
                raise SearchTimeout(n, timeout)
            if closed and close_first:
                continue
            ands = [i for i, f in enumerate(comps) if type(f) is And]
            if ands:
                if not batched:
                    del ands[1:]
                children = []
                for k, pick in enumerate(itertools.product(
                        *[(comps[i].l, comps[i].r) for i in ands])):
                    new: list = []
                    p, q, c = pos, neg, closed
                    it = iter(zip(ands, pick))
                    nxt = next(it)
                    for i, f in enumerate(comps):
                        if nxt is not None and i == nxt[0]:
                            p, q, c = _put(nxt[1], p, q, c, new)
                            nxt = next(it, None)
                        else:
                            new.append(f)
                    children.append((p, q, c, tuple(new), (k, path)))
                if stats is not None:
                    stats.record_and_step(len(children))
                stack.extend(reversed(children))
            elif closed:
                continue
            elif comps:
                # no ∧ left, so every compound member is a disjunction
                new = []
                p, q, c = pos, neg, closed
                for f in (comps if batched else comps[:1]):
                    p, q, c = _put(f.l, p, q, c, new)
                    p, q, c = _put(f.r, p, q, c, new)
                if not batched:
                    new.extend(comps[1:])
                stack.append((p, q, c, tuple(new), path))
            else:
                choices = []
                while path is not None:
                    choices.append(path[0])
                    path = path[1]
                # positive literals false, negated ones true
                model = {a: a in neg for a in sorted(pos | neg)}
                return Failure(choices[::-1], model)
        return None
    finally:
        if stats is not None:
            stats.nodes_visited += n
