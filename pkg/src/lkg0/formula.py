"""NNF formulas, sequents, and the operations every engine shares."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from lkg0 import surface as S

Assignment = dict[str, bool]


@dataclass(frozen=True, slots=True)
class Atom:
    name: str

    def __repr__(self) -> str:
        return f"Atom({self.name!r})"


@dataclass(frozen=True, slots=True)
class NegAtom:
    name: str

    def __repr__(self) -> str:
        return f"NegAtom({self.name!r})"


@dataclass(frozen=True, slots=True)
class Top:
    def __repr__(self) -> str:
        return "Top()"


@dataclass(frozen=True, slots=True)
class Bottom:
    def __repr__(self) -> str:
        return "Bottom()"


@dataclass(frozen=True, slots=True)
class And:
    l: Formula
    r: Formula


@dataclass(frozen=True, slots=True)
class Or:
    l: Formula
    r: Formula


Formula = Union[Atom, NegAtom, Top, Bottom, And, Or]
TOP = Top()
BOTTOM = Bottom()


class Sequent:
    """A multiset of formulas, read disjunctively.

    Iteration and display follow insertion order; ``==`` and ``hash`` ignore
    order.
    """

    __slots__ = ("items", "_counts")

    def __init__(self, items: Iterable[Formula] = ()):
        self.items: tuple[Formula, ...] = tuple(items)
        self._counts: Counter | None = None

    @classmethod
    def of(cls, *items: Formula) -> Sequent:
        return cls(items)

    def counts(self) -> Counter:
        if self._counts is None:
            self._counts = Counter(self.items)
        return self._counts

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __getitem__(self, i: int) -> Formula:
        return self.items[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Sequent):
            return NotImplemented
        if len(self.items) != len(other.items):
            return False
        return self.counts() == other.counts()

    def __hash__(self) -> int:
        return hash(frozenset(self.counts().items()))

    def __repr__(self) -> str:
        return f"Sequent({list(self.items)!r})"

    def __str__(self) -> str:
        return render(self)

    def replace(self, position: int, *new: Formula) -> Sequent:
        """Copy with the member at ``position`` replaced by ``new`` (in place)."""
        return Sequent(self.items[:position] + new + self.items[position + 1:])


def to_nnf(f: S.SurfaceFormula) -> Formula:
    return _nnf(f, False)


def _nnf(f: S.SurfaceFormula, negate: bool) -> Formula:
    if isinstance(f, S.Atom):
        return NegAtom(f.name) if negate else Atom(f.name)
    if isinstance(f, S.Top):
        return BOTTOM if negate else TOP
    if isinstance(f, S.Bottom):
        return TOP if negate else BOTTOM
    if isinstance(f, S.Not):
        return _nnf(f.f, not negate)
    if isinstance(f, S.And):
        l, r = _nnf(f.l, negate), _nnf(f.r, negate)
        return Or(l, r) if negate else And(l, r)
    if isinstance(f, S.Or):
        l, r = _nnf(f.l, negate), _nnf(f.r, negate)
        return And(l, r) if negate else Or(l, r)
    if isinstance(f, S.Implies):
        # a -> b  ==  ~a | b ;  ~(a -> b)  ==  a & ~b
        l, r = _nnf(f.l, not negate), _nnf(f.r, negate)
        return And(l, r) if negate else Or(l, r)
    raise TypeError(f"not a surface formula: {f!r}")


def to_surface(f: Formula) -> S.SurfaceFormula:
    """Embed an NNF formula into the surface syntax (NegAtom becomes Not(Atom))."""
    if isinstance(f, Atom):
        return S.Atom(f.name)
    if isinstance(f, NegAtom):
        return S.Not(S.Atom(f.name))
    if isinstance(f, Top):
        return S.Top()
    if isinstance(f, Bottom):
        return S.Bottom()
    if isinstance(f, And):
        return S.And(to_surface(f.l), to_surface(f.r))
    if isinstance(f, Or):
        return S.Or(to_surface(f.l), to_surface(f.r))
    raise TypeError(f"not an NNF formula: {f!r}")


def evaluate(f: Formula, assignment: Mapping[str, bool]) -> bool:
    """Classical truth value of ``f``; atoms missing from ``assignment`` read as false."""
    if isinstance(f, Atom):
        return bool(assignment.get(f.name, False))
    if isinstance(f, NegAtom):
        return not assignment.get(f.name, False)
    if isinstance(f, And):
        return evaluate(f.l, assignment) and evaluate(f.r, assignment)
    if isinstance(f, Or):
        return evaluate(f.l, assignment) or evaluate(f.r, assignment)
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    raise TypeError(f"not an NNF formula: {f!r}")


def evaluate_sequent(s: Sequent, assignment: Mapping[str, bool]) -> bool:
    """Value of the disjunction of ``s``; the empty sequent is false."""
    return any(evaluate(f, assignment) for f in s)


def connective_count(x: Formula | Sequent) -> int:
    stack = list(x) if isinstance(x, Sequent) else [x]
    n = 0
    while stack:
        f = stack.pop()
        if isinstance(f, (And, Or)):
            n += 1
            stack.append(f.l)
            stack.append(f.r)
    return n


def atoms(x: Formula | Sequent) -> set[str]:
    stack = list(x) if isinstance(x, Sequent) else [x]
    out: set[str] = set()
    while stack:
        f = stack.pop()
        if isinstance(f, (Atom, NegAtom)):
            out.add(f.name)
        elif isinstance(f, (And, Or)):
            stack.append(f.l)
            stack.append(f.r)
    return out


# binding strength used by render; higher binds tighter
_IMP, _OR, _AND, _UNARY = 1, 2, 3, 4


def render(x: Formula | S.SurfaceFormula | Sequent) -> str:
    """ASCII text for a formula or sequent, with minimal parentheses.

    The output re-parses to the same tree: ``&`` and ``|`` associate to the
    left, so a right-nested chain keeps its parentheses.
    """
    if isinstance(x, Sequent):
        return ", ".join(_render(f, 0) for f in x)
    return _render(x, 0)


def _render(f, ctx: int) -> str:
    if isinstance(f, (Atom, S.Atom)):
        return f.name
    if isinstance(f, NegAtom):
        return "~" + f.name
    if isinstance(f, (Top, S.Top)):
        return "T"
    if isinstance(f, (Bottom, S.Bottom)):
        return "F"
    if isinstance(f, S.Not):
        return "~" + _render(f.f, _UNARY)
    if isinstance(f, (And, S.And)):
        prec, text = _AND, f"{_render(f.l, _AND)} & {_render(f.r, _AND + 1)}"
    elif isinstance(f, (Or, S.Or)):
        prec, text = _OR, f"{_render(f.l, _OR)} | {_render(f.r, _OR + 1)}"
    elif isinstance(f, S.Implies):
        prec, text = _IMP, f"{_render(f.l, _IMP + 1)} -> {_render(f.r, _IMP)}"
    else:
        raise TypeError(f"cannot render {f!r}")
    return f"({text})" if prec < ctx else text


def render_assignment(a: Mapping[str, bool]) -> str:
    return " ".join(f"{k}={'true' if v else 'false'}" for k, v in a.items())
