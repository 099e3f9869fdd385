"""Ground truth by truth tables, plus formula generators for differential tests.

Nothing here goes through :func:`lkg0.formula.evaluate` or the engines. A
formula over ``k`` atoms is evaluated on all ``2**k`` rows at once: each
atom's column is a Python integer used as a bitset, and the connectives
become ``&``, ``|`` and complement.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from lkg0 import formula as N
from lkg0 import surface as S

DEFAULT_ATOM_LIMIT = 24


class OracleLimitError(ValueError):
    pass


def atom_limit() -> int:
    raw = os.environ.get("LKG_ATOM_LIMIT")
    return int(raw) if raw else DEFAULT_ATOM_LIMIT


def _collect_atoms(fs) -> list[str]:
    names: set[str] = set()
    stack = list(fs)
    while stack:
        f = stack.pop()
        if isinstance(f, (N.Atom, N.NegAtom, S.Atom)):
            names.add(f.name)
        elif isinstance(f, (N.And, N.Or, S.And, S.Or, S.Implies)):
            stack.append(f.l)
            stack.append(f.r)
        elif isinstance(f, S.Not):
            stack.append(f.f)
    return sorted(names)


class _Table:
    """Columns of the full truth table over ``names`` (first name most significant)."""

    def __init__(self, names: Sequence[str], limit: int | None = None):
        limit = atom_limit() if limit is None else limit
        k = len(names)
        if k > limit:
            raise OracleLimitError(
                f"{k} atoms exceed the truth-table limit of {limit} (set LKG_ATOM_LIMIT)")
        self.names = list(names)
        self.rows = 1 << k
        self.full = (1 << self.rows) - 1
        self.cols = {}
        for i, name in enumerate(names):
            half = 1 << (k - 1 - i)          # run length of equal values
            block = ((1 << half) - 1) << half  # 0...0 1...1 within one period
            width = 2 * half
            while width < self.rows:           # tile by doubling
                block |= block << width
                width *= 2
            self.cols[name] = block

    def value(self, f) -> int:
        cols, full = self.cols, self.full
        if isinstance(f, (N.Atom, S.Atom)):
            return cols[f.name]
        if isinstance(f, N.NegAtom):
            return full ^ cols[f.name]
        if isinstance(f, (N.Top, S.Top)):
            return full
        if isinstance(f, (N.Bottom, S.Bottom)):
            return 0
        if isinstance(f, (N.And, S.And)):
            return self.value(f.l) & self.value(f.r)
        if isinstance(f, (N.Or, S.Or)):
            return self.value(f.l) | self.value(f.r)
        if isinstance(f, S.Not):
            return full ^ self.value(f.f)
        if isinstance(f, S.Implies):
            return (full ^ self.value(f.l)) | self.value(f.r)
        raise TypeError(f"not a formula: {f!r}")

    def row(self, j: int) -> dict[str, bool]:
        k = len(self.names)
        return {name: bool((j >> (k - 1 - i)) & 1) for i, name in enumerate(self.names)}


def _disjunction_table(fs, limit):
    table = _Table(_collect_atoms(fs), limit)
    acc = 0
    for f in fs:
        acc |= table.value(f)
        if acc == table.full:
            break
    return table, acc


def tt_valid(s, limit: int | None = None) -> bool:
    """Truth-table validity of the disjunction of ``s`` (a Sequent or a list of formulas).

    Surface formulas are accepted too. The empty sequent is not valid.
    """
    fs = list(s)
    table, acc = _disjunction_table(fs, limit)
    return bool(fs) and acc == table.full


def tt_countermodel(s, limit: int | None = None) -> dict[str, bool] | None:
    """First falsifying row in lexicographic order (atoms sorted, false before true)."""
    fs = list(s)
    table, acc = _disjunction_table(fs, limit)
    if fs and acc == table.full:
        return None
    missing = table.full ^ acc
    j = (missing & -missing).bit_length() - 1
    return table.row(j)


def truth_table(f, names: Sequence[str] | None = None) -> int:
    """The column of ``f`` as an integer bitset over ``names`` (default: its atoms)."""
    table = _Table(_collect_atoms([f]) if names is None else names)
    return table.value(f)


# -- generators ----------------------------------------------------------------

_CONNECTIVES = ("and", "or", "not", "implies")


@dataclass(frozen=True)
class GenParams:
    atom_pool: tuple[str, ...] = ("p", "q", "r", "s", "t", "u")
    max_connectives: int = 40
    seed: int = 42
    weights: dict = field(default_factory=lambda: {c: 1.0 for c in _CONNECTIVES})
    min_connectives: int = 0
    # chance that a leaf is T or F instead of an atom
    constant_rate: float = 0.05

    def __post_init__(self):
        object.__setattr__(self, "atom_pool", tuple(self.atom_pool))
        if not self.atom_pool:
            raise ValueError("atom_pool must not be empty")
        if self.max_connectives < 0 or self.min_connectives < 0:
            raise ValueError("connective bounds must be nonnegative")
        if self.min_connectives > self.max_connectives:
            raise ValueError("min_connectives exceeds max_connectives")
        unknown = set(self.weights) - set(_CONNECTIVES)
        if unknown:
            raise ValueError(f"unknown connectives in weights: {sorted(unknown)}")
        w = [self.weights.get(c, 0.0) for c in _CONNECTIVES]
        if any(x < 0 for x in w) or not any(x > 0 for x in w):
            raise ValueError("weights must be nonnegative and not all zero")


def gen_random_formula(params: GenParams) -> S.SurfaceFormula:
    rng = random.Random(params.seed)
    return _gen(rng, params, rng.randint(params.min_connectives, params.max_connectives))


def _gen(rng: random.Random, params: GenParams, n: int) -> S.SurfaceFormula:
    if n == 0:
        if rng.random() < params.constant_rate:
            return S.Top() if rng.random() < 0.5 else S.Bottom()
        return S.Atom(rng.choice(params.atom_pool))
    ops = list(_CONNECTIVES)
    op = rng.choices(ops, weights=[params.weights.get(c, 0.0) for c in ops])[0]
    if op == "not":
        return S.Not(_gen(rng, params, n - 1))
    k = rng.randint(0, n - 1)
    left = _gen(rng, params, k)
    right = _gen(rng, params, n - 1 - k)
    return {"and": S.And, "or": S.Or, "implies": S.Implies}[op](left, right)


def random_corpus(params: GenParams, count: int) -> Iterator[S.SurfaceFormula]:
    """``count`` formulas, each generated from a sub-seed drawn from ``params.seed``."""
    rng = random.Random(params.seed)
    for _ in range(count):
        sub = GenParams(params.atom_pool, params.max_connectives, rng.getrandbits(64),
                        params.weights, params.min_connectives, params.constant_rate)
        yield gen_random_formula(sub)


def enumerate_formulas(atoms: Sequence[str], max_connectives: int) -> Iterator[N.Formula]:
    """Every NNF formula over ``atoms`` with at most ``max_connectives`` ∧/∨ nodes.

    Ordered by connective count, then ∧ before ∨, then left size; each formula
    appears exactly once.
    """
    levels: list[list[N.Formula]] = []
    leaves: list[N.Formula] = []
    for a in atoms:
        leaves += [N.Atom(a), N.NegAtom(a)]
    leaves += [N.TOP, N.BOTTOM]
    for n in range(max_connectives + 1):
        if n == 0:
            level = leaves
        else:
            level = [op(l, r)
                     for op in (N.And, N.Or)
                     for k in range(n)
                     for l in levels[k]
                     for r in levels[n - 1 - k]]
        levels.append(level)
        yield from level
