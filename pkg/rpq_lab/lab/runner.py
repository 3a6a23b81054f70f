"""
Property lab runner: one property against one semantics, or the full matrix
against the checked-in expectations.
"""

import logging
import random
import sys
import time
from dataclasses import replace
from datetime import datetime
from typing import Iterable, List, Optional, Tuple

import pandas as pd

from rpq_lab.config.config import HOLDS_TRIALS, LAB_COSTS, LAB_DEFAULT_COST, LAB_RESULT_CAP, SAMPLE_ATTEMPTS
from rpq_lab.core.errors import ContractError, InputError, ResultCapError
from rpq_lab.lab.expectations import EXPECTATIONS, expected
from rpq_lab.lab.instances import LabInstance
from rpq_lab.lab.models import (
    CrossCheck,
    Expectation,
    GenParams,
    MatrixResult,
    MatrixRow,
    PropertyReport,
    Verdict,
)
from rpq_lab.lab.properties import PROPERTIES, PROPERTY_NAMES, Property
from rpq_lab.semantics.spec import ORDER_BASED, SemanticsId, SemanticsSpec

logger = logging.getLogger(__name__)


def lab_spec(sid: SemanticsId) -> SemanticsSpec:
    """The SemanticsSpec the lab evaluates a semantics with: lab costs for ChW, lab result cap."""
    if sid is SemanticsId.CHEAPEST:
        return SemanticsSpec(id=sid, costs=dict(LAB_COSTS), default_cost=LAB_DEFAULT_COST, cap=LAB_RESULT_CAP)
    return SemanticsSpec(id=sid, cap=LAB_RESULT_CAP)


def _property(prop: str) -> Property:
    try:
        return PROPERTIES[prop]
    except KeyError:
        raise InputError(f"unknown property {prop!r} (known: {', '.join(PROPERTY_NAMES)})")


def _run_one(p: Property, spec: SemanticsSpec, inst: LabInstance) -> Tuple[Optional[bool], Optional[str]]:
    """(violated, message); violated is None when the trial hit a cap."""
    try:
        message = p.violation(spec, inst)
    except ResultCapError as e:
        logger.debug("%s on %s skipped: %s", p.name, inst.name, e)
        return None, None
    return message is not None, message


class PropertyLab:
    """
    Runs property searches and the expectation matrix.

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

    def check(self, prop: str, spec: SemanticsSpec, params: Optional[GenParams] = None) -> PropertyReport:
        """
        Search for a counterexample: directed fixtures first, then random trials.

        The search stops at the first counterexample. A trial that exceeds a
        cap, or a sample the sampler declines, is counted as skipped and
        replaced by a fresh draw, up to SAMPLE_ATTEMPTS draws per requested
        random trial.
        """
        p = _property(prop)
        params = params or self.params
        if spec.cap is None:
            spec = spec.with_cap(LAB_RESULT_CAP)
        report = PropertyReport(prop=prop, semantics=spec.name, verdict=Verdict.SKIPPED, seed=params.seed)
        if not p.applies(spec.id):
            report.message = "not applicable"
            return report

        start = time.perf_counter()
        for inst in p.fixtures():
            violated, message = _run_one(p, spec, inst)
            if violated is None:
                report.skipped_trials += 1
                continue
            report.trials += 1
            if violated:
                return self._found(report, inst, message, start, fixture=inst.name)

        if p.sample is not None:
            gen = params.small() if p.small else params
            for i in range(gen.trials * SAMPLE_ATTEMPTS):
                if report.random_trials >= gen.trials:
                    break
                rng = random.Random(f"{gen.seed}:{prop}:{i}")
                inst = p.sample(rng, gen)
                if inst is None:
                    report.skipped_trials += 1
                    continue
                inst = replace(inst, name=f"random-{i}")
                violated, message = _run_one(p, spec, inst)
                if violated is None:
                    report.skipped_trials += 1
                    continue
                report.trials += 1
                report.random_trials += 1
                if violated:
                    return self._found(report, inst, message, start, trial=i)

        report.elapsed = time.perf_counter() - start
        report.verdict = Verdict.NO_COUNTEREXAMPLE if report.trials else Verdict.SKIPPED
        logger.info("%s", report.line())
        return report

    def _found(self, report: PropertyReport, inst: LabInstance, message: str, start: float,
               fixture: Optional[str] = None, trial: Optional[int] = None) -> PropertyReport:
        report.verdict = Verdict.COUNTEREXAMPLE
        report.elapsed = time.perf_counter() - start
        report.fixture = fixture
        report.trial = trial
        report.instance = inst.to_dict()
        report.message = message
        logger.info("%s: %s", report.line(), message)
        return report

    def run_matrix(
        self,
        props: Optional[Iterable[str]] = None,
        semantics: Optional[Iterable[SemanticsId]] = None,
        holds_trials: Optional[int] = None,
    ) -> MatrixResult:
        """
        Check every (property, semantics) pair against its expectation.

        "holds" entries run at least `holds_trials` random trials (default
        RPQLAB_HOLDS_TRIALS) and pass when no counterexample turns up; "fails"
        entries pass when a counterexample is found; "unknown" entries always pass.
        A "holds" entry whose sampler could not supply the requested number of
        random trials is reported inconclusive and fails.
        """
        props = list(props) if props is not None else list(EXPECTATIONS)
        for prop in props:
            _property(prop)
        sids = list(semantics) if semantics is not None else list(SemanticsId)
        holds_trials = HOLDS_TRIALS if holds_trials is None else holds_trials

        print(f"\n{'='*60}", file=sys.stderr)
        print("PROPERTY MATRIX", file=sys.stderr)
        print(f"{'='*60}", file=sys.stderr)
        print(f"Seed: {self.params.seed}  Trials: {self.params.trials}", file=sys.stderr)
        print(f"{'='*60}\n", file=sys.stderr)

        rows: List[MatrixRow] = []
        reports: List[PropertyReport] = []
        total = len(props) * len(sids)
        done = 0
        for prop in props:
            for sid in sids:
                exp = expected(prop, sid)
                params = self.params
                if exp.status is Expectation.HOLDS:
                    params = params.with_trials(max(params.trials, holds_trials))
                report = self.check(prop, lab_spec(sid), params)
                if (exp.status is Expectation.HOLDS and PROPERTIES[prop].sample is not None
                        and report.verdict is Verdict.NO_COUNTEREXAMPLE and report.random_trials < params.trials):
                    report.verdict = Verdict.INCONCLUSIVE
                    report.message = f"only {report.random_trials} of {params.trials} random trials ran"
                    logger.warning("%s %s: %s", prop, sid.short, report.message)
                reports.append(report)
                rows.append(MatrixRow(
                    prop=prop,
                    semantics=sid.short,
                    expected=exp.status,
                    verdict=report.verdict,
                    trials=report.trials,
                    skipped_trials=report.skipped_trials,
                    witness=report.fixture or (f"random-{report.trial}" if report.trial is not None else exp.witness),
                    ok=_agrees(exp.status, report.verdict),
                ))
                done += 1
            self._update_progress("matrix", int(100 * done / total), f"{prop} checked on {len(sids)} semantics")

        result = MatrixResult(
            params=self.params,
            rows=rows,
            reports=reports,
            cross_checks=_cross_checks(reports),
            generated_at=datetime.now().isoformat(),
        )
        logger.info("matrix: %d entries, %d mismatches", len(rows), len(result.mismatches))
        return result


def _agrees(exp: Expectation, verdict: Verdict) -> bool:
    if exp is Expectation.HOLDS:
        return verdict is Verdict.NO_COUNTEREXAMPLE
    if exp is Expectation.FAILS:
        return verdict is Verdict.COUNTEREXAMPLE
    return True


def _cross_checks(reports: List[PropertyReport]) -> List[CrossCheck]:
    """Monotony must fail exactly when element inclusion is not respected."""
    by_key = {(r.prop, r.semantics): r for r in reports}
    out: List[CrossCheck] = []
    for sid in sorted(ORDER_BASED, key=lambda s: s.value):
        mono = by_key.get(("monotony", sid.short))
        elem = by_key.get(("element-inclusion", sid.short))
        if mono is None or elem is None:
            continue
        out.append(CrossCheck(
            semantics=sid.short,
            monotony=mono.verdict,
            element_inclusion=elem.verdict,
            ok=(mono.verdict is Verdict.COUNTEREXAMPLE) == (elem.verdict is Verdict.COUNTEREXAMPLE),
        ))
    return out


def check_property(prop: str, spec: SemanticsSpec, params: Optional[GenParams] = None) -> PropertyReport:
    return PropertyLab(params).check(prop, spec)


def run_matrix(
    params: Optional[GenParams] = None,
    props: Optional[Iterable[str]] = None,
    semantics: Optional[Iterable[SemanticsId]] = None,
    holds_trials: Optional[int] = None,
    progress_callback=None,
) -> MatrixResult:
    return PropertyLab(params, progress_callback).run_matrix(props, semantics, holds_trials)


def replay_report(report: PropertyReport) -> bool:
    """
    Re-run the checker on the stored counterexample.

    Returns:
        True when the violation reproduces

    Raises:
        ContractError: the report carries no counterexample
    """
    if report.instance is None:
        raise ContractError(f"report {report.line()} has no counterexample to replay")
    inst = LabInstance.from_dict(report.instance)
    spec = lab_spec(SemanticsId.from_token(report.semantics))
    violated, _ = _run_one(_property(report.prop), spec, inst)
    return bool(violated)


# ============================================================================
# TABLES
# ============================================================================

def matrix_table(result: MatrixResult) -> str:
    df = pd.DataFrame([
        {
            "property": r.prop,
            "semantics": r.semantics,
            "expected": r.expected.value,
            "verdict": r.verdict.value,
            "trials": r.trials,
            "skipped": r.skipped_trials,
            "witness": r.witness or "",
            "ok": "✅" if r.ok else "❌",
        }
        for r in result.rows
    ])
    return df.to_string(index=False)


def cross_check_table(result: MatrixResult) -> str:
    if not result.cross_checks:
        return ""
    df = pd.DataFrame([c.model_dump(mode="json") for c in result.cross_checks])
    return df.to_string(index=False)
