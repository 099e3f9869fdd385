"""Corpus builders, a brute-force validity check, and proof mutations used across tests."""

from __future__ import annotations

import itertools
import random
from dataclasses import replace

from lkg0.calculus import Proof, ProofLine, RuleLabel
from lkg0.formula import And, Atom, NegAtom, Or, Sequent, atoms, connective_count, evaluate, to_nnf
from lkg0.oracle import GenParams, enumerate_formulas, random_corpus

EXHAUSTIVE_ATOMS = ("p", "q")
EXHAUSTIVE_MAX = 3
RANDOM_PARAMS = GenParams(atom_pool=("p", "q", "r", "s", "t", "u"), max_connectives=40, seed=42)
RANDOM_COUNT = 10_000


def brute_valid(seq: Sequent) -> bool:
    """Validity by enumerating assignments with itertools and evaluate()."""
    names = sorted(atoms(seq))
    if not len(seq):
        return False
    for bits in itertools.product((False, True), repeat=len(names)):
        a = dict(zip(names, bits))
        if not any(evaluate(f, a) for f in seq):
            return False
    return True


def exhaustive_corpus() -> list[Sequent]:
    """Sequents of one or two formulas over {p, q} with at most 3 connectives in total.

    Two-formula sequents are taken once per multiset.
    """
    formulas = list(enumerate_formulas(EXHAUSTIVE_ATOMS, EXHAUSTIVE_MAX))
    by_size: list[list] = [[] for _ in range(EXHAUSTIVE_MAX + 1)]
    for f in formulas:
        by_size[connective_count(f)].append(f)
    out = [Sequent([f]) for f in formulas]
    for a in range(EXHAUSTIVE_MAX + 1):
        for b in range(a, EXHAUSTIVE_MAX + 1 - a):
            if a == b:
                fs = by_size[a]
                out += [Sequent([fs[i], fs[j]])
                        for i in range(len(fs)) for j in range(i, len(fs))]
            else:
                out += [Sequent([x, y]) for x in by_size[a] for y in by_size[b]]
    return out


def random_sequents(params: GenParams = RANDOM_PARAMS, count: int = RANDOM_COUNT) -> list[Sequent]:
    return [Sequent([to_nnf(f)]) for f in random_corpus(params, count)]


# -- reference proof ------------------------------------------------------------

def reference_proof() -> Proof:
    """Hand-written five-line proof of the two-atom example, right branch first."""
    pa, pb = Atom("p(a)"), Atom("p(b)")
    npa, npb = NegAtom("p(a)"), NegAtom("p(b)")
    return Proof((
        ProofLine(1, Sequent([pb, npa, npb]), RuleLabel.SUCC),
        ProofLine(2, Sequent([pa, npa, npb]), RuleLabel.SUCC),
        ProofLine(3, Sequent([pb, Or(npa, npb)]), RuleLabel.OR, (1,)),
        ProofLine(4, Sequent([pa, Or(npa, npb)]), RuleLabel.OR, (2,)),
        ProofLine(5, Sequent([And(pa, pb), Or(npa, npb)]), RuleLabel.AND, (3, 4)),
    ), Sequent([And(pa, pb), Or(npa, npb)]))


def isomorphic(a: Proof, b: Proof) -> bool:
    """Same lines up to renumbering: match by sequent, then compare rules and premises."""
    if len(a) != len(b):
        return False
    mapping = {}
    for la in a.lines:
        matches = [lb for lb in b.lines if lb.sequent == la.sequent]
        if len(matches) != 1:
            return False
        mapping[la.index] = matches[0]
    for la in a.lines:
        lb = mapping[la.index]
        if la.rule is not lb.rule:
            return False
        if sorted(mapping[j].index for j in la.premises) != sorted(lb.premises):
            return False
    return True


# -- proof mutations ------------------------------------------------------------

MUTATIONS = ("flip_rule", "drop_premise", "retarget_premise", "replace_member")

_FLIP = {RuleLabel.SUCC: RuleLabel.AND, RuleLabel.SUCC_PLUS: RuleLabel.OR,
         RuleLabel.AND: RuleLabel.OR, RuleLabel.OR: RuleLabel.AND}


def _with_line(proof: Proof, k: int, line) -> Proof:
    lines = list(proof.lines)
    lines[k] = line
    return Proof(tuple(lines), proof.target)


def mutate(proof: Proof, kind: str, rng: random.Random) -> Proof | None:
    """Apply one mutation to a random applicable line; None if no line qualifies."""
    lines = proof.lines
    if kind == "flip_rule":
        k = rng.randrange(len(lines))
        return _with_line(proof, k, replace(lines[k], rule=_FLIP[lines[k].rule]))
    if kind == "drop_premise":
        cands = [k for k, ln in enumerate(lines) if ln.premises]
        if not cands:
            return None
        k = rng.choice(cands)
        return _with_line(proof, k, replace(lines[k], premises=lines[k].premises[:-1]))
    if kind == "retarget_premise":
        seqs = {ln.index: ln.sequent for ln in lines}
        options = []
        for k, ln in enumerate(lines):
            for slot, j in enumerate(ln.premises):
                wrong = [x.index for x in lines[:k] if x.sequent != seqs[j]]
                if wrong:
                    options.append((k, slot, wrong))
        if not options:
            return None
        k, slot, wrong = rng.choice(options)
        prem = list(lines[k].premises)
        prem[slot] = rng.choice(wrong)
        return _with_line(proof, k, replace(lines[k], premises=tuple(prem)))
    if kind == "replace_member":
        cands = [k for k, ln in enumerate(lines) if len(ln.sequent)]
        k = rng.choice(cands)
        seq = lines[k].sequent
        m = rng.randrange(len(seq))
        fresh = Atom("zz_mutant")
        return _with_line(proof, k, replace(lines[k], sequent=seq.replace(m, fresh)))
    raise ValueError(kind)
