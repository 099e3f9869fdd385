"""Command-line front end: ``lkg0 prove | check | oracle | diff``.

Exit codes: 0 provable / valid / no disagreement, 1 unprovable / invalid /
disagreement, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Mapping, TextIO

from lkg0.calculus import (
    Proof, ProofFormatError, Verdict, check_proof, prove_full,
)
from lkg0.formula import Sequent, evaluate_sequent, render, render_assignment, to_nnf
from lkg0.oracle import GenParams, OracleLimitError, random_corpus, tt_countermodel, tt_valid
from lkg0.parser import ParseError, parse_sequent, read_sequent_file
from lkg0.pv import BranchStats, pv, pv_parallel

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    engine: str = "pv"
    proof: str = "none"
    out: Path | None = None
    countermodel: bool = False
    compat_top: bool = False
    stats: bool = False
    expression: str | None = None
    file: Path | None = None
    workers: int | None = None

    def __post_init__(self):
        if (self.expression is None) == (self.file is None):
            raise UsageError("give exactly one of an inline expression or --file")
        if self.engine not in ENGINES:
            raise UsageError(f"unknown engine {self.engine!r}")
        if self.proof not in ("none", "text", "json"):
            raise UsageError(f"unknown proof format {self.proof!r}")
        if self.out is not None and self.proof != "json":
            raise UsageError("--out is only used with --proof json")


def _run_full(s, stats, workers=None):
    return prove_full(s, stats)


def _run_pv(s, stats, workers=None):
    return pv(s, stats)


def _run_par(s, stats, workers=None):
    verdict, got = pv_parallel(s, workers=workers)
    if stats is not None:
        stats.__dict__.update(got.__dict__)
    return verdict


ENGINES: dict[str, Callable[..., Verdict]] = {
    "full": _run_full, "pv": _run_pv, "par": _run_par,
}


def _inputs(expression: str | None, file: Path | None) -> list[tuple[int | None, Sequent]]:
    if file is not None:
        return read_sequent_file(file)
    return [(None, parse_sequent(expression))]


def cmd_prove(cfg: RunConfig, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    items = _inputs(cfg.expression, cfg.file)
    engine = ENGINES[cfg.engine]
    status = EXIT_OK
    proofs = []
    for lineno, seq in items:
        prefix = f"line {lineno}: " if lineno is not None else ""
        stats = BranchStats()
        verdict = engine(seq, stats, cfg.workers)
        print(f"{prefix}{'PROVABLE' if verdict.provable else 'UNPROVABLE'}", file=out)
        if verdict.provable:
            proof = verdict.proof.with_top_line() if cfg.compat_top else verdict.proof
            if cfg.proof == "text":
                print(proof.to_text(), file=out)
            elif cfg.proof == "json":
                proofs.append(proof.to_dict())
        else:
            status = EXIT_NO
            if cfg.countermodel:
                print(f"countermodel: {render_assignment(verdict.countermodel)}", file=out)
        if cfg.stats:
            print(f"stats: {stats}", file=out)
    if cfg.proof == "json" and proofs:
        payload = proofs[0] if len(items) == 1 else proofs
        text = json.dumps(payload, indent=2, ensure_ascii=False)
        if cfg.out is None:
            print(text, file=out)
        else:
            cfg.out.write_text(text + "\n", encoding="utf-8")
    return status


def cmd_check(path: Path, mode: str = "strict", out: TextIO | None = None) -> int:
    out = out or sys.stdout
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ProofFormatError(f"malformed JSON: {e}") from None
    docs = raw if isinstance(raw, list) else [raw]
    if not docs:
        raise ProofFormatError("no proofs in file")
    status = EXIT_OK
    for k, doc in enumerate(docs):
        prefix = f"proof {k + 1}: " if len(docs) > 1 else ""
        result = check_proof(Proof.from_json(doc), mode=mode)
        if result:
            print(f"{prefix}OK", file=out)
        else:
            status = EXIT_NO
            print(f"{prefix}REJECTED", file=out)
            for i, why in result.diagnostics:
                print(f"  line {i}: {why}" if i is not None else f"  {why}", file=out)
    return status


def cmd_oracle(expression: str | None, file: Path | None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    if (expression is None) == (file is None):
        raise UsageError("give exactly one of an inline expression or --file")
    status = EXIT_OK
    for lineno, seq in _inputs(expression, file):
        prefix = f"line {lineno}: " if lineno is not None else ""
        cm = tt_countermodel(seq)
        if cm is None:
            print(f"{prefix}VALID", file=out)
        else:
            status = EXIT_NO
            print(f"{prefix}INVALID {render_assignment(cm)}".rstrip(), file=out)
    return status


def _verdict_of(engine, seq) -> tuple[bool, dict | None]:
    v = engine(seq, None)
    return v.provable, (None if v.provable else v.countermodel)


def cmd_diff(params: GenParams, count: int, out: TextIO | None = None,
             engines: Mapping[str, Callable[..., Verdict]] | None = None) -> int:
    """Compare every engine with the truth-table oracle on a generated corpus.

    Each disagreement is written as a ``#`` comment naming the verdicts,
    followed by the sequent itself, so the report is a valid sequent file.
    Returns the number of disagreeing sequents.
    """
    out = out or sys.stdout
    engines = ENGINES if engines is None else engines
    bad = 0
    for k, f in enumerate(random_corpus(params, count)):
        seq = Sequent([to_nnf(f)])
        truth = tt_valid(seq)
        answers = {}
        problems = []
        for name, engine in engines.items():
            provable, cm = _verdict_of(engine, seq)
            answers[name] = provable
            if provable != truth:
                problems.append(f"{name} disagrees")
            elif cm is not None and evaluate_sequent(seq, cm):
                problems.append(f"{name} countermodel does not falsify")
        if problems:
            bad += 1
            summary = " ".join(f"{n}={'Yes' if a else 'No'}" for n, a in answers.items())
            print(f"# case {k}: {summary} oracle={'Yes' if truth else 'No'}; "
                  f"{'; '.join(problems)}", file=out)
            print(render(seq), file=out)
    return bad


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lkg0", description="Propositional validity prover.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prove", help="decide sequents with one of the engines")
    p.add_argument("expression", nargs="?", help="inline sequent, e.g. 'p & q, ~p'")
    p.add_argument("--file", type=Path, help="sequent file, one sequent per line")
    p.add_argument("--engine", choices=sorted(ENGINES), default="pv")
    p.add_argument("--proof", choices=["none", "text", "json"], default="none")
    p.add_argument("--out", type=Path, help="where to write the JSON proof")
    p.add_argument("--countermodel", action="store_true")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--compat-top", action="store_true",
                   help="prepend a line 0 holding T to emitted proofs")
    p.add_argument("--workers", type=int, default=None,
                   help="process pool size for --engine par")

    c = sub.add_parser("check", help="check a JSON proof file")
    c.add_argument("path", type=Path)
    c.add_argument("--mode", choices=["strict", "pv"], default="strict",
                   help="pv also accepts Succ+ axioms")

    o = sub.add_parser("oracle", help="truth-table validity")
    o.add_argument("expression", nargs="?")
    o.add_argument("--file", type=Path)

    d = sub.add_parser("diff", help="differential test of all engines against the oracle")
    d.add_argument("--seed", type=int, default=42)
    d.add_argument("--count", type=int, default=10_000)
    d.add_argument("--max-connectives", type=int, default=40)
    d.add_argument("--atoms", default="p,q,r,s,t,u", help="comma-separated atom pool")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "prove":
            cfg = RunConfig(engine=args.engine, proof=args.proof, out=args.out,
                            countermodel=args.countermodel, compat_top=args.compat_top,
                            stats=args.stats, expression=args.expression, file=args.file,
                            workers=args.workers)
            return cmd_prove(cfg)
        if args.command == "check":
            return cmd_check(args.path, args.mode)
        if args.command == "oracle":
            return cmd_oracle(args.expression, args.file)
        atoms = tuple(a.strip() for a in args.atoms.split(",") if a.strip())
        params = GenParams(atom_pool=atoms, max_connectives=args.max_connectives,
                           seed=args.seed)
        if args.count < 0:
            raise UsageError("--count must be nonnegative")
        bad = cmd_diff(params, args.count)
        print(f"checked {args.count} sequents, {bad} disagreement(s)", file=sys.stderr)
        return EXIT_NO if bad else EXIT_OK
    except (UsageError, ParseError, ProofFormatError, OracleLimitError, ValueError,
            OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
