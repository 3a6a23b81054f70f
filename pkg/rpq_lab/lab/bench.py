"""
Micro-benchmarks on scaling families.

    path         a-paths of n edges, query a*, endpoints (p0, pn)
    random       BENCH_RANDOM_VERTICES vertices and BENCH_RANDOM_EDGES edges, query BENCH_QUERY
    flashlight   streaming enumeration on a-paths, recording the longest delay between walks
"""

import logging
import random
import sys
import time
from typing import List, Optional

import pandas as pd

from rpq_lab.config.config import (
    BENCH_FLASHLIGHT_SIZES,
    BENCH_LABELS,
    BENCH_PATH_SIZES,
    BENCH_QUERY,
    BENCH_RANDOM_EDGES,
    BENCH_RANDOM_VERTICES,
    RESULT_CAP,
)
from rpq_lab.core.database import Database
from rpq_lab.lab.fixtures import path_db
from rpq_lab.lab.models import BenchRecord, GenParams
from rpq_lab.problems.flashlight import Flashlight
from rpq_lab.rpq.parser import parse_query
from rpq_lab.semantics.evaluate import evaluate
from rpq_lab.semantics.spec import SemanticsId, SemanticsSpec

logger = logging.getLogger(__name__)

PATH_SEMANTICS = [SemanticsId.SHORTEST, SemanticsId.TRAIL]
FLASHLIGHT_SEMANTICS = [SemanticsId.SHORTEST, SemanticsId.SHVC]


def _millis(start: float) -> int:
    return int(round((time.perf_counter() - start) * 1000))


def random_database(rng: random.Random, n: int, m: int, labels: List[str]) -> Database:
    vertices = [f"r{i}" for i in range(1, n + 1)]
    edges = [
        (f"g{j}", rng.choice(vertices), rng.choice(vertices), rng.choice(labels))
        for j in range(1, m + 1)
    ]
    return Database.build(vertices, edges)


class BenchRunner:
    """
    Times evaluation and streaming enumeration.

    Args:
        params: only the seed is used, for the random family
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

    def path(self, n: int, sid: SemanticsId) -> BenchRecord:
        db = path_db(n)
        start = time.perf_counter()
        result = evaluate(db, parse_query("a*"), SemanticsSpec(id=sid, cap=RESULT_CAP), ("p0", f"p{n}"))
        return BenchRecord(family="path", semantics=sid.short, n=n, millis=_millis(start), results=len(result))

    def random_graph(self) -> BenchRecord:
        rng = random.Random(f"{self.params.seed}:bench")
        db = random_database(rng, BENCH_RANDOM_VERTICES, BENCH_RANDOM_EDGES, BENCH_LABELS)
        vertices = [f"r{i}" for i in range(1, BENCH_RANDOM_VERTICES + 1)]
        start = time.perf_counter()
        result = evaluate(
            db, parse_query(BENCH_QUERY), SemanticsSpec(id=SemanticsId.SHORTEST, cap=RESULT_CAP),
            (vertices[0], vertices[-1]),
        )
        return BenchRecord(
            family="random", semantics=SemanticsId.SHORTEST.short, n=BENCH_RANDOM_VERTICES,
            millis=_millis(start), results=len(result),
        )

    def flashlight(self, n: int, sid: SemanticsId) -> BenchRecord:
        db = path_db(n)
        light = Flashlight(db, parse_query("a*"), SemanticsSpec(id=sid))
        start = last = time.perf_counter()
        max_delay = 0.0
        for _ in light.enumerate("p0", f"p{n}"):
            now = time.perf_counter()
            max_delay = max(max_delay, now - last)
            last = now
        return BenchRecord(
            family="flashlight", semantics=sid.short, n=n, millis=_millis(start),
            results=light.emitted, max_delay_ms=round(max_delay * 1000, 3),
        )

    def run(self) -> List[BenchRecord]:
        print(f"\n{'='*60}", file=sys.stderr)
        print("BENCHMARKS", file=sys.stderr)
        print(f"{'='*60}", file=sys.stderr)
        print(f"Seed: {self.params.seed}", file=sys.stderr)
        print(f"{'='*60}\n", file=sys.stderr)

        records: List[BenchRecord] = []
        for n in BENCH_PATH_SIZES:
            for sid in PATH_SEMANTICS:
                records.append(self.path(n, sid))
        self._update_progress("bench", 40, f"path family done ({len(records)} runs)")

        records.append(self.random_graph())
        self._update_progress("bench", 70, "random graph done")

        for n in BENCH_FLASHLIGHT_SIZES:
            for sid in FLASHLIGHT_SEMANTICS:
                records.append(self.flashlight(n, sid))
        self._update_progress("bench", 100, "flashlight series done")

        for r in records:
            logger.info("%s (%s, %d results)", r.line(), r.family, r.results)
        return records


def run_bench(params: Optional[GenParams] = None, progress_callback=None) -> List[BenchRecord]:
    return BenchRunner(params, progress_callback).run()


def bench_table(records: List[BenchRecord]) -> str:
    df = pd.DataFrame([r.model_dump() for r in records])
    return df.to_string(index=False)
