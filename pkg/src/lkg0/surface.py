"""Surface syntax: the full propositional language accepted by the parser.

Negation and implication may appear anywhere here. Engines never see these
nodes; :func:`lkg0.formula.to_nnf` turns them into NNF first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True, slots=True)
class Atom:
    name: str


@dataclass(frozen=True, slots=True)
class Top:
    pass


@dataclass(frozen=True, slots=True)
class Bottom:
    pass


@dataclass(frozen=True, slots=True)
class Not:
    f: SurfaceFormula


@dataclass(frozen=True, slots=True)
class And:
    l: SurfaceFormula
    r: SurfaceFormula


@dataclass(frozen=True, slots=True)
class Or:
    l: SurfaceFormula
    r: SurfaceFormula


@dataclass(frozen=True, slots=True)
class Implies:
    l: SurfaceFormula
    r: SurfaceFormula


SurfaceFormula = Union[Atom, Top, Bottom, Not, And, Or, Implies]


def truth_value(f: SurfaceFormula, assignment) -> bool:
    """Classical value of a surface formula; unmapped atoms are false."""
    if isinstance(f, Atom):
        return bool(assignment.get(f.name, False))
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Not):
        return not truth_value(f.f, assignment)
    if isinstance(f, And):
        return truth_value(f.l, assignment) and truth_value(f.r, assignment)
    if isinstance(f, Or):
        return truth_value(f.l, assignment) or truth_value(f.r, assignment)
    if isinstance(f, Implies):
        return (not truth_value(f.l, assignment)) or truth_value(f.r, assignment)
    raise TypeError(f"not a surface formula: {f!r}")


def surface_atoms(f: SurfaceFormula) -> set[str]:
    out: set[str] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            out.add(g.name)
        elif isinstance(g, Not):
            stack.append(g.f)
        elif isinstance(g, (And, Or, Implies)):
            stack.append(g.l)
            stack.append(g.r)
    return out


def surface_size(f: SurfaceFormula) -> int:
    """Number of connective nodes (including negations)."""
    n = 0
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Not):
            n += 1
            stack.append(g.f)
        elif isinstance(g, (And, Or, Implies)):
            n += 1
            stack.append(g.l)
            stack.append(g.r)
    return n
