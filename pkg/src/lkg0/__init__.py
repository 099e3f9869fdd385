"""Propositional validity with a one-sided sequent calculus and the pv procedure."""

from lkg0.calculus import (
    Proof, ProofCheck, ProofLine, Provable, RuleLabel, Unprovable, Verdict,
    apply_and, apply_or, check_line, check_proof, prove_full, succ_applicable,
)
from lkg0.formula import (
    And, Assignment, Atom, Bottom, Formula, NegAtom, Or, Sequent, Top,
    atoms, connective_count, evaluate, evaluate_sequent, render, to_nnf,
)
from lkg0.literal import (
    SurfaceKind, extract_countermodel, is_stable, is_stable_fast,
    literal_valid, literalize_formula, literalize_sequent, surface_kind,
)
from lkg0.oracle import (
    GenParams, enumerate_formulas, gen_random_formula, tt_countermodel, tt_valid,
)
from lkg0.parser import ParseError, parse_formula, parse_sequent
from lkg0.pv import BranchStats, pv, pv_parallel
from lkg0.search import SearchTimeout

__version__ = "0.1.0"
