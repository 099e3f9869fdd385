"""Surface classification, literalization and stability.

Within a sequent only the root of each member is a surface occurrence, so
literalizing a sequent replaces every ∧-member by ⊤ and every ∨-member by ⊥.
A sequent is stable when that literal disjunction is valid.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import reduce

from lkg0.formula import (
    BOTTOM, TOP, And, Assignment, Atom, Bottom, Formula, NegAtom, Or,
    Sequent, Top,
)


class SurfaceKind(enum.Enum):
    AND_FORM = "AndForm"
    OR_FORM = "OrForm"
    LITERAL_ATOM = "LiteralAtom"
    LITERAL_NEG_ATOM = "LiteralNegAtom"
    TOP_CONST = "TopConst"
    BOTTOM_CONST = "BottomConst"


_KINDS = {
    And: SurfaceKind.AND_FORM,
    Or: SurfaceKind.OR_FORM,
    Atom: SurfaceKind.LITERAL_ATOM,
    NegAtom: SurfaceKind.LITERAL_NEG_ATOM,
    Top: SurfaceKind.TOP_CONST,
    Bottom: SurfaceKind.BOTTOM_CONST,
}


class NotLiteralError(ValueError):
    pass


def surface_kind(f: Formula) -> SurfaceKind:
    return _KINDS[type(f)]


def is_literal(f: Formula) -> bool:
    return not isinstance(f, (And, Or))


@dataclass(frozen=True)
class LiteralSequentView:
    has_top: bool
    literals: Counter  # (name, polarity) -> multiplicity
    has_bottom: bool

    @classmethod
    def of(cls, s: Sequent) -> LiteralSequentView:
        lits: Counter = Counter()
        has_top = has_bottom = False
        for f in s:
            if isinstance(f, Atom):
                lits[(f.name, True)] += 1
            elif isinstance(f, NegAtom):
                lits[(f.name, False)] += 1
            elif isinstance(f, Top):
                has_top = True
            elif isinstance(f, Bottom):
                has_bottom = True
            else:
                raise NotLiteralError(f"compound member in literal sequent: {f!r}")
        return cls(has_top, lits, has_bottom)


def literalize_formula(f: Formula) -> Formula:
    if isinstance(f, And):
        return TOP
    if isinstance(f, Or):
        return BOTTOM
    return f


def literalize_sequent(s: Sequent) -> Formula:
    """The disjunction of the literalized members; ⊥ for the empty sequent."""
    parts = [literalize_formula(f) for f in s]
    if not parts:
        return BOTTOM
    return reduce(Or, parts)


def literal_valid(s: Sequent) -> bool:
    view = LiteralSequentView.of(s)
    if view.has_top:
        return True
    return any((name, False) in view.literals
               for (name, pos) in view.literals if pos)


def is_stable(s: Sequent) -> bool:
    """Stability by definition: literalize every member, then test the literals."""
    return literal_valid(Sequent(literalize_formula(f) for f in s))


def is_stable_fast(s: Sequent) -> bool:
    """One-pass test: a surface ⊤, a surface ∧-member, or a complementary pair."""
    pos: set[str] = set()
    neg: set[str] = set()
    for f in s:
        t = type(f)
        if t is Atom:
            if f.name in neg:
                return True
            pos.add(f.name)
        elif t is NegAtom:
            if f.name in pos:
                return True
            neg.add(f.name)
        elif t is And or t is Top:
            return True
    return False


def has_top_or_pair(s: Sequent) -> bool:
    """True iff ``s`` has a surface ⊤ or a complementary literal pair."""
    pos: set[str] = set()
    neg: set[str] = set()
    for f in s:
        t = type(f)
        if t is Atom:
            if f.name in neg:
                return True
            pos.add(f.name)
        elif t is NegAtom:
            if f.name in pos:
                return True
            neg.add(f.name)
        elif t is Top:
            return True
    return False


def extract_countermodel(failing: Sequent) -> Assignment:
    """Falsify every literal of a failing sequent.

    Positive atoms map to false, negated atoms to true. The sequent must
    consist of literals and ⊥ only, with no complementary pair.
    """
    out: Assignment = {}
    for f in failing:
        if isinstance(f, Atom):
            want = False
        elif isinstance(f, NegAtom):
            want = True
        elif isinstance(f, Bottom):
            continue
        elif isinstance(f, Top):
            raise NotLiteralError("⊤ in a failing sequent")
        else:
            raise NotLiteralError(f"compound member in failing sequent: {f!r}")
        if out.setdefault(f.name, want) != want:
            raise NotLiteralError(f"complementary pair on {f.name!r}")
    return out
