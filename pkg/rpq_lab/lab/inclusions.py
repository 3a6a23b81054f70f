"""
Inclusion lattice checker.

Every edge sub ⊆ sup is tested on each random trial, with all semantics
evaluated on one shared instance stream. Each edge carries a directed witness:
for a verified edge it shows the inclusion is strict, for an edge expected to
be refuted it is the counterexample.
"""

import logging
import random
import sys
from typing import Callable, Dict, List, NamedTuple, Optional

import pandas as pd

from rpq_lab.core.errors import ResultCapError
from rpq_lab.lab import fixtures as fx
from rpq_lab.lab.generators import gen_database, gen_regex
from rpq_lab.lab.instances import LabInstance
from rpq_lab.lab.models import GenParams, InclusionReport, InclusionStatus
from rpq_lab.lab.runner import lab_spec
from rpq_lab.matcher.walkset import WalkSet
from rpq_lab.semantics.evaluate import evaluate
from rpq_lab.semantics.spec import SemanticsId

logger = logging.getLogger(__name__)

S = SemanticsId
VERIFIED, REFUTED = InclusionStatus.VERIFIED, InclusionStatus.REFUTED


class LatticeEdge(NamedTuple):
    sub: SemanticsId
    sup: SemanticsId
    expected: InclusionStatus
    witness: Callable[[], LabInstance]


LATTICE: List[LatticeEdge] = [
    LatticeEdge(S.ACYCLIC, S.SWC, VERIFIED, lambda: fx.fix_loop("a")),
    LatticeEdge(S.SWC, S.TRAIL, VERIFIED, lambda: fx.fix_abcd()),
    LatticeEdge(S.TRAIL, S.BINDING_TRAIL, VERIFIED, lambda: fx.fix_loop("a a")),
    LatticeEdge(S.SHMS, S.MIN_MULTISET, VERIFIED, fx.fix_shms),
    LatticeEdge(S.MIN_MULTISET, S.SUBWALK_MIN, VERIFIED, fx.fix_bag),
    LatticeEdge(S.SUBWALK_MIN, S.BINDING_TRAIL, VERIFIED, lambda: fx.fix_loop("a*")),
    LatticeEdge(S.SHORTEST, S.SHVC, VERIFIED, fx.fix_vsc),
    LatticeEdge(S.SHVC, S.SHEC, VERIFIED, lambda: fx.fix_loop("a*")),
    LatticeEdge(S.ACYCLIC, S.SHMS, VERIFIED, lambda: fx.fix_loop("a")),
    LatticeEdge(S.SHORTEST, S.SHAC, VERIFIED, fx.fix_vsc),
    # refuted edges and incomparable pairs
    LatticeEdge(S.SHMS, S.SHORTEST, REFUTED, fx.fix_sh_prime),
    LatticeEdge(S.SHAC, S.BINDING_TRAIL, REFUTED, fx.fix_acbt),
    LatticeEdge(S.SHORTEST, S.TRAIL, REFUTED, lambda: fx.fix_loop("a a")),
    LatticeEdge(S.TRAIL, S.SHORTEST, REFUTED, fx.fix_sh_prime),
    LatticeEdge(S.SHORTEST, S.SHMS, REFUTED, fx.fix_shms_sh),
]


def _first_outside(sub: WalkSet, sup: WalkSet) -> Optional[str]:
    extra = sub - sup
    return str(next(iter(extra))) if len(extra) else None


class InclusionChecker:
    """
    Checks the lattice on directed witnesses and random trials.

    Args:
        params: random instance parameters
        progress_callback: Optional function called as callback(step, progress, message)
    """

    def __init__(self, params: Optional[GenParams] = None, progress_callback=None):
        self.params = params or GenParams()
        self.progress_callback = progress_callback

    def _update_progress(self, step: str, progress: int, message: str):
        """Update progress if callback is provided"""
        if self.progress_callback:
            self.progress_callback(step, progress, message)
        print(f"  [{progress}%] {step}: {message}", file=sys.stderr)

    def _results(self, inst: LabInstance, sids) -> Optional[Dict[SemanticsId, WalkSet]]:
        try:
            return {sid: evaluate(inst.db, inst.query, lab_spec(sid)) for sid in sids}
        except ResultCapError as e:
            logger.debug("%s skipped: %s", inst.name, e)
            return None

    def run(self, edges: Optional[List[LatticeEdge]] = None) -> List[InclusionReport]:
        edges = edges if edges is not None else LATTICE
        sids = sorted({e.sub for e in edges} | {e.sup for e in edges}, key=lambda s: s.value)

        print(f"\n{'='*60}", file=sys.stderr)
        print("INCLUSION LATTICE", file=sys.stderr)
        print(f"{'='*60}", file=sys.stderr)
        print(f"Seed: {self.params.seed}  Trials: {self.params.trials}", file=sys.stderr)
        print(f"{'='*60}\n", file=sys.stderr)

        reports: List[InclusionReport] = []
        for edge in edges:
            inst = edge.witness()
            results = self._results(inst, (edge.sub, edge.sup)) or {}
            sub, sup = results.get(edge.sub), results.get(edge.sup)
            outside = _first_outside(sub, sup) if results else None
            report = InclusionReport(
                sub=edge.sub.short,
                sup=edge.sup.short,
                expected=edge.expected,
                status=VERIFIED,
                witness=inst.name,
                ok=False,
            )
            if outside is not None:
                report.status = REFUTED
                report.counterexample = {"instance": inst.to_dict(), "walk": outside}
            elif results:
                report.strict = len(sup - sub) > 0
            reports.append(report)
        self._update_progress("inclusions", 5, f"{len(edges)} witnesses evaluated")

        checkpoint = max(self.params.trials // 10, 1)
        for i in range(self.params.trials):
            rng = random.Random(f"{self.params.seed}:inclusions:{i}")
            db = gen_database(rng, self.params)
            inst = LabInstance(name=f"random-{i}", db=db, queries=(gen_regex(rng, self.params),))
            results = self._results(inst, sids)
            for edge, report in zip(edges, reports):
                if results is None:
                    report.skipped_trials += 1
                    continue
                report.trials += 1
                if report.status is VERIFIED:
                    outside = _first_outside(results[edge.sub], results[edge.sup])
                    if outside is not None:
                        report.status = REFUTED
                        report.counterexample = {"instance": inst.to_dict(), "walk": outside}
                        logger.info("%s not within %s on %s: %s", report.sub, report.sup, inst.name, outside)
            if (i + 1) % checkpoint == 0:
                self._update_progress(
                    "inclusions", 5 + int(95 * (i + 1) / self.params.trials), f"{i + 1} trials"
                )

        for report in reports:
            report.ok = report.status is report.expected and report.strict is not False
        return reports


def check_inclusions(params: Optional[GenParams] = None, progress_callback=None) -> List[InclusionReport]:
    return InclusionChecker(params, progress_callback).run()


def inclusion_table(reports: List[InclusionReport]) -> str:
    df = pd.DataFrame([
        {
            "sub": r.sub,
            "sup": r.sup,
            "expected": r.expected.value,
            "status": r.status.value,
            "trials": r.trials,
            "witness": r.witness or "",
            "strict": "" if r.strict is None else ("yes" if r.strict else "no"),
            "ok": "✅" if r.ok else "❌",
        }
        for r in reports
    ])
    return df.to_string(index=False)
