"""The simplified decision procedure pv and its batched variant.

``pv`` answers Yes as soon as a sequent holds ⊤ or a complementary pair,
otherwise splits the leftmost ∧-member, otherwise expands the leftmost
∨-member, otherwise answers No. ``pv_parallel`` handles all surface
∧-members (2ⁿ choice sequents) or all surface ∨-members in one step.

Yes-answers carry a proof that :func:`~lkg0.calculus.check_proof` accepts
with ``mode="pv"``: an early exit on a sequent that still holds ∧-members
is recorded as a ``Succ+`` axiom, and batched steps are unfolded into
single rule applications.
"""

from __future__ import annotations

from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass

from lkg0.formula import Sequent
from lkg0.literal import extract_countermodel
from lkg0.proof import Provable, RuleLabel, Unprovable, Verdict
from lkg0.search import Failure, SearchNode, build_proof, decide, expand_batched, replay

__all__ = ["BranchStats", "pv", "pv_parallel", "extract_countermodel"]


@dataclass
class BranchStats:
    nodes_visited: int = 0
    max_batch_width: int = 0
    # width of the first ∧-step below the root (∨-steps have one child)
    top_level_branches: int = 0
    and_steps: int = 0

    def record_and_step(self, width: int) -> None:
        if self.and_steps == 0:
            self.top_level_branches = width
        self.and_steps += 1
        self.max_batch_width = max(self.max_batch_width, width)

    def merge(self, other: BranchStats) -> None:
        self.nodes_visited += other.nodes_visited
        self.max_batch_width = max(self.max_batch_width, other.max_batch_width)
        self.and_steps += other.and_steps

    def __str__(self) -> str:
        return (f"nodes_visited={self.nodes_visited} "
                f"max_batch_width={self.max_batch_width} "
                f"top_level_branches={self.top_level_branches}")


def _verdict(s: Sequent, strategy: str, found: Failure | None) -> Verdict:
    if found is None:
        return Provable(build=lambda: build_proof(s, strategy))
    return Unprovable(found.countermodel, find=lambda: replay(s, strategy, found.choices))


def pv(s: Sequent, stats: BranchStats | None = None,
       timeout: float | None = None) -> Verdict:
    return _verdict(s, "nested", decide(s, "nested", stats, timeout))


def _decide_batched(seq: Sequent) -> tuple[Failure | None, BranchStats]:
    stats = BranchStats()
    return decide(seq, "batched", stats), stats


def pv_parallel(s: Sequent, workers: int | None = None,
                timeout: float | None = None) -> tuple[Verdict, BranchStats]:
    """Batched pv. Returns the verdict and branch statistics.

    With ``workers > 1`` the children of the first ∧-step are decided in a
    process pool and the first No cancels the branches still pending. The
    Yes/No answer does not depend on scheduling; the reported countermodel
    may.
    """
    stats = BranchStats()
    if not workers or workers <= 1:
        return _verdict(s, "batched", decide(s, "batched", stats, timeout)), stats

    # walk the ∨-spine down to the first ∧-step
    node = SearchNode(s)
    while True:
        stats.nodes_visited += 1
        if not expand_batched(node, stats):
            return Unprovable(extract_countermodel(node.sequent), node.sequent), stats
        if node.rule is not RuleLabel.OR:
            break
        node = node.children[0]
    if node.rule is not RuleLabel.AND:
        return Provable(build=lambda: build_proof(s, "batched")), stats

    with ProcessPoolExecutor(max_workers=workers) as pool:
        pending = {pool.submit(_decide_batched, c.sequent): c for c in node.children}
        while pending:
            done, _ = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                child = pending.pop(fut)
                found, sub = fut.result()
                stats.merge(sub)
                if found is not None:
                    for other in pending:
                        other.cancel()
                    failing = replay(child.sequent, "batched", found.choices)
                    return Unprovable(found.countermodel, failing), stats
    return Provable(build=lambda: build_proof(s, "batched")), stats
