"""Proof objects and verdicts."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Callable, Union

from lkg0.formula import (
    TOP, Assignment, Sequent, render, render_assignment, to_nnf,
)


class ProofFormatError(ValueError):
    pass


class RuleLabel(enum.Enum):
    SUCC = "Succ"
    # stable axiom that still has ∧-members; only emitted for pv proofs
    SUCC_PLUS = "Succ+"
    AND = "And"
    OR = "Or"

    @property
    def arity(self) -> int:
        return {"Succ": 0, "Succ+": 0, "And": 2, "Or": 1}[self.value]

    @property
    def symbol(self) -> str:
        return {"Succ": "Succ", "Succ+": "Succ+", "And": "∧", "Or": "∨"}[self.value]


@dataclass(frozen=True)
class ProofLine:
    index: int
    sequent: Sequent
    rule: RuleLabel
    premises: tuple[int, ...] = ()
    # position of the decomposed member in ``sequent`` (And/Or lines)
    principal: int | None = None

    def describe(self) -> str:
        if self.rule.arity == 0:
            return self.rule.symbol
        text = f"{self.rule.symbol} from {','.join(map(str, self.premises))}"
        if self.principal is not None and 0 <= self.principal < len(self.sequent):
            text += f"  [{render(self.sequent[self.principal])}]"
        return text


@dataclass(frozen=True)
class Proof:
    lines: tuple[ProofLine, ...]
    target: Sequent

    def __len__(self) -> int:
        return len(self.lines)

    def line(self, index: int) -> ProofLine:
        for ln in self.lines:
            if ln.index == index:
                return ln
        raise KeyError(index)

    def count(self, rule: RuleLabel) -> int:
        return sum(1 for ln in self.lines if ln.rule is rule)

    def with_top_line(self) -> Proof:
        """Prepend line 0 holding the sequent ⊤, as in the textbook proof format."""
        if self.lines and self.lines[0].index == 0:
            return self
        zero = ProofLine(0, Sequent([TOP]), RuleLabel.SUCC)
        return Proof((zero,) + self.lines, self.target)

    def to_text(self) -> str:
        rows = [(f"{ln.index}.", render(ln.sequent), ln.describe()) for ln in self.lines]
        w0 = max((len(r[0]) for r in rows), default=0)
        w1 = max((len(r[1]) for r in rows), default=0)
        return "\n".join(f"{a:<{w0}} {b:<{w1}}   {c}" for a, b, c in rows)

    def to_dict(self) -> dict:
        return {
            "target": [render(f) for f in self.target],
            "lines": [
                {"i": ln.index, "sequent": [render(f) for f in ln.sequent],
                 "rule": ln.rule.value, "premises": list(ln.premises)}
                for ln in self.lines
            ],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_json(cls, data: str | dict) -> Proof:
        from lkg0.parser import ParseError, parse_formula

        def seq(items, where):
            if not isinstance(items, list) or not all(isinstance(x, str) for x in items):
                raise ProofFormatError(f"{where}: expected a list of formula strings")
            try:
                return Sequent(to_nnf(parse_formula(x)) for x in items)
            except ParseError as e:
                raise ProofFormatError(f"{where}: {e}") from None

        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as e:
                raise ProofFormatError(f"malformed JSON: {e}") from None
        if not isinstance(data, dict) or "target" not in data or "lines" not in data:
            raise ProofFormatError("expected an object with 'target' and 'lines'")
        if not isinstance(data["lines"], list):
            raise ProofFormatError("'lines' must be a list")
        lines = []
        for k, raw in enumerate(data["lines"]):
            where = f"lines[{k}]"
            if not isinstance(raw, dict):
                raise ProofFormatError(f"{where}: expected an object")
            try:
                index, rule, premises = raw["i"], raw["rule"], raw.get("premises", [])
            except KeyError as e:
                raise ProofFormatError(f"{where}: missing key {e}") from None
            if not isinstance(index, int) or isinstance(index, bool):
                raise ProofFormatError(f"{where}: 'i' must be an integer")
            if not isinstance(premises, list) or not all(
                    isinstance(p, int) and not isinstance(p, bool) for p in premises):
                raise ProofFormatError(f"{where}: 'premises' must be a list of integers")
            try:
                label = RuleLabel(rule)
            except ValueError:
                raise ProofFormatError(f"{where}: unknown rule {rule!r}") from None
            lines.append(ProofLine(index, seq(raw.get("sequent"), where), label,
                                   tuple(premises)))
        return cls(tuple(lines), seq(data["target"], "target"))


class Provable:
    """A Yes answer. The proof may be built lazily on first access."""

    provable = True

    def __init__(self, proof: Proof | None = None, *,
                 build: Callable[[], Proof] | None = None):
        if proof is None and build is None:
            raise ValueError("need a proof or a way to build one")
        self._proof = proof
        self._build = build

    @property
    def proof(self) -> Proof:
        if self._proof is None:
            self._proof = self._build()
            self._build = None
        return self._proof

    def __repr__(self) -> str:
        return "Provable(...)"

    def __str__(self) -> str:
        return "PROVABLE"


class Unprovable:
    """A No answer: a falsifying assignment and the failing literal sequent.

    The failing sequent may be recovered lazily through ``find``.
    """

    provable = False

    def __init__(self, countermodel: Assignment, failing: Sequent | None = None, *,
                 find: Callable[[], Sequent] | None = None):
        if failing is None and find is None:
            raise ValueError("need a failing sequent or a way to find it")
        self.countermodel = countermodel
        self._failing = failing
        self._find = find

    @property
    def failing(self) -> Sequent:
        if self._failing is None:
            self._failing = self._find()
            self._find = None
        return self._failing

    def __repr__(self) -> str:
        return f"Unprovable({self.countermodel!r})"

    def __str__(self) -> str:
        return f"UNPROVABLE {render_assignment(self.countermodel)}".rstrip()


Verdict = Union[Provable, Unprovable]
