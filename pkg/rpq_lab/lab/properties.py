"""
Property checkers and the registry the lab runner iterates over.

A checker takes a semantics spec and one instance and returns None when the
instance satisfies the property, or a one-line description of the violation.
Checkers let ResultCapError escape; the runner counts such trials as skipped.
"""

import logging
import random
from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Set

from rpq_lab.config.config import LAB_ORACLE_CAP, LAB_PAIR_CAP, LAB_RESULT_CAP, LAB_WALK_LEN, UNBOUNDED_MAX
from rpq_lab.core.database import Database
from rpq_lab.core.renaming import Relabeling, apply_relabeling, apply_renaming
from rpq_lab.core.subwalk import subwalk_leq
from rpq_lab.core.walk import Walk, consistent_with, elemset, walk_concat
from rpq_lab.lab import fixtures as fx
from rpq_lab.lab.generators import (
    gen_database,
    gen_equivalent,
    gen_extension,
    gen_regex,
    gen_relabeling,
    gen_renaming,
)
from rpq_lab.lab.instances import LabInstance
from rpq_lab.lab.models import GenParams
from rpq_lab.matcher.matches import matches_upto, minimal_walk_bound, product_of
from rpq_lab.matcher.walkset import CappedCollector, WalkSet
from rpq_lab.rpq.ast import Atom, Concat, Regex, Star, Union, atom_count, power_upto
from rpq_lab.rpq.equivalence import regex_equivalent
from rpq_lab.rpq.glushkov import glushkov
from rpq_lab.rpq.parser import to_text
from rpq_lab.semantics.covering import edge_marking, vertex_marking
from rpq_lab.semantics.evaluate import evaluate, order_for
from rpq_lab.semantics.oracle import oracle
from rpq_lab.semantics.orders import minima_per_endpoints, trim
from rpq_lab.semantics.spec import ORDER_BASED, SemanticsId, SemanticsSpec

logger = logging.getLogger(__name__)

Checker = Callable[[SemanticsSpec, LabInstance], Optional[str]]
Sampler = Callable[[random.Random, GenParams], Optional[LabInstance]]


@dataclass(frozen=True)
class Property:
    """
    One checkable property.

    Attributes:
        name: property id, as printed in PROP lines
        violation: the checker
        fixtures: directed instances, run before any random trial
        sample: random instance generator; None for fixture-only properties
        applies: whether the property is meaningful for a semantics
        small: draw random instances with GenParams.small()
    """

    name: str
    violation: Checker
    fixtures: Callable[[], List[LabInstance]]
    sample: Optional[Sampler] = None
    applies: Callable[[SemanticsId], bool] = lambda sid: True
    small: bool = False


def _s(spec: SemanticsSpec, db: Database, regex: Regex) -> WalkSet:
    return evaluate(db, regex, spec)


def _differ(name: str, got: WalkSet, other: str, want: WalkSet) -> Optional[str]:
    """Describe the first walk (in canonical order) on which two sets disagree."""
    if got == want:
        return None
    only_got = got - want
    if len(only_got):
        return f"{next(iter(only_got))} is in {name} but not in {other}"
    return f"{next(iter(want - got))} is in {other} but not in {name}"


def _q(regex: Regex) -> str:
    return f"S({to_text(regex)})"


# ============================================================================
# INDEPENDENCE
# ============================================================================

def check_id_independence(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    nu = inst.renaming
    renamed = WalkSet(apply_renaming(nu, w) for w in _s(spec, inst.db, inst.query))
    direct = _s(spec, apply_renaming(nu, inst.db), inst.query)
    return _differ("the renamed result", renamed, "the result on the renamed database", direct)


def check_label_independence(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    lam = inst.relabeling
    plain = _s(spec, inst.db, inst.query)
    relabeled = _s(spec, apply_relabeling(lam, inst.db), apply_relabeling(lam, inst.query))
    return _differ("the result", plain, "the relabeled result", relabeled)


def check_expression_independence(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    r1, r2 = inst.queries[:2]
    return _differ(_q(r1), _s(spec, inst.db, r1), _q(r2), _s(spec, inst.db, r2))


def check_unboundedness(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    """A result of length n for the n-atom query, on the path or on its padded copy."""
    n = atom_count(inst.query)
    if _s(spec, inst.db, inst.query).max_length() >= n:
        return None
    if inst.db_ext is not None and _s(spec, inst.db_ext, inst.query).max_length() >= n:
        return None
    return f"no result of length {n} for {to_text(inst.query)}, with or without padding"


# ============================================================================
# MONOTONY
# ============================================================================

def check_monotony(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    small = _s(spec, inst.db, inst.query)
    big = _s(spec, inst.db_ext, inst.query)
    lost = small - big
    if len(lost):
        return f"{next(iter(lost))} is a result on D but not on the extension D'"
    return None


def check_co_monotony(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    small = _s(spec, inst.db, inst.query)
    big = _s(spec, inst.db_ext, inst.query)
    for w in big:
        if consistent_with(inst.db, w) and w not in small:
            return f"{w} is a result on D' and a walk of D, but not a result on D"
    return None


def check_restrictibility(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    return check_monotony(spec, inst) or check_co_monotony(spec, inst)


def check_atom_compatibility(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    atom = inst.query
    if not isinstance(atom, Atom):
        return None
    matches = matches_upto(inst.db, atom, 1, cap=LAB_RESULT_CAP)
    return _differ(_q(atom), _s(spec, inst.db, atom), "the matches", matches)


# ============================================================================
# COMPOSITION
# ============================================================================

def check_plus_composability(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    r1, r2 = inst.queries[:2]
    joint = _s(spec, inst.db, Union(r1, r2))
    parts = _s(spec, inst.db, r1) | _s(spec, inst.db, r2)
    lost = parts - joint
    if len(lost):
        return f"{next(iter(lost))} is in {_q(r1)} or {_q(r2)} but not in {_q(Union(r1, r2))}"
    return None


def check_plus_decomposability(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    r1, r2 = inst.queries[:2]
    joint = _s(spec, inst.db, Union(r1, r2))
    parts = _s(spec, inst.db, r1) | _s(spec, inst.db, r2)
    extra = joint - parts
    if len(extra):
        return f"{next(iter(extra))} is in {_q(Union(r1, r2))} but in neither part"
    return None


def check_concat_composability(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    r1, r2 = inst.queries[:2]
    joint = _s(spec, inst.db, Concat(r1, r2))
    right: Dict[str, List[Walk]] = {}
    for w2 in _s(spec, inst.db, r2):
        right.setdefault(w2.src, []).append(w2)
    for w1 in _s(spec, inst.db, r1):
        for w2 in right.get(w1.tgt, []):
            w = walk_concat(w1, w2)
            if w not in joint:
                return f"{w1} . {w2} is missing from {_q(Concat(r1, r2))}"
    return None


def check_concat_decomposability(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    r1, r2 = inst.queries[:2]
    left, right = _s(spec, inst.db, r1), _s(spec, inst.db, r2)
    for w in _s(spec, inst.db, Concat(r1, r2)):
        if not any(w.prefix(i) in left and w.suffix_from(i) in right for i in range(len(w) + 1)):
            return f"{w} has no split into {_q(r1)} . {_q(r2)}"
    return None


def star_closure(db: Database, pieces: WalkSet, bound: int, cap: Optional[int]) -> WalkSet:
    """
    Concatenations of zero or more non-trivial pieces, up to `bound` edges.

    Raises:
        ResultCapError: more than `cap` walks
    """
    by_src: Dict[str, List[Walk]] = {}
    for p in pieces:
        if not p.is_trivial:
            by_src.setdefault(p.src, []).append(p)
    out = CappedCollector(cap, "star closure")
    queue = deque(Walk.trivial(v) for v in db.sorted_vertices())
    out.update(queue)
    while queue:
        w = queue.popleft()
        for p in by_src.get(w.tgt, []):
            if len(w) + len(p) > bound:
                continue
            longer = walk_concat(w, p)
            if longer not in out.walks:
                out.add(longer)
                queue.append(longer)
    return out.result()


def check_star_composability(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    db, r = inst.db, inst.query
    star = Star(r)
    bound = max(minimal_walk_bound(db, star), 2 * len(db.vertices) + 1, len(db.edge_table) + 1)
    joint = _s(spec, db, star)
    for w in star_closure(db, _s(spec, db, r), bound, LAB_RESULT_CAP):
        if w not in joint:
            return f"{w} is a concatenation of results of {to_text(r)} but not in {_q(star)}"
    return None


def check_star_decomposability(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    db, r = inst.db, inst.query
    pieces = _s(spec, db, r)
    for w in _s(spec, db, Star(r)):
        n = len(w)
        reach = [True] + [False] * n
        for j in range(1, n + 1):
            reach[j] = any(reach[i] and w.suffix_from(i).prefix(j - i) in pieces for i in range(j))
        if not reach[n]:
            return f"{w} does not factor into results of {to_text(r)}"
    return None


# ============================================================================
# LIMITS
# ============================================================================

def stabilization_horizon(spec: SemanticsSpec, db: Database, regex: Regex) -> int:
    """1 + the longest result of R* under the semantics, shortest walks and trails."""
    limit = Star(regex)
    lengths = [_s(spec, db, limit).max_length()]
    for sid in (SemanticsId.SHORTEST, SemanticsId.TRAIL):
        lengths.append(evaluate(db, limit, SemanticsSpec(id=sid, cap=spec.cap)).max_length())
    return max(0, 1 + max(lengths))


def check_stabilization(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    db, r = inst.db, inst.query
    n = stabilization_horizon(spec, db, r)
    return _differ(
        f"the {n}-fold truncation", _s(spec, db, power_upto(r, n)),
        f"the {n + 1}-fold truncation", _s(spec, db, power_upto(r, n + 1)),
    )


def check_continuity(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    db, r = inst.db, inst.query
    n = stabilization_horizon(spec, db, r)
    return _differ(
        f"the {n}-fold truncation", _s(spec, db, power_upto(r, n)),
        _q(Star(r)), _s(spec, db, Star(r)),
    )


# ============================================================================
# COVERAGE
# ============================================================================

def check_vertex_coverage(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    db, r = inst.db, inst.query
    product = product_of(db, r)
    covered = {(w.src, w.tgt, x) for w in _s(spec, db, r) for x in w.vertex_seq}
    for s in db.sorted_vertices():
        for x in db.sorted_vertices():
            for t in sorted(vertex_marking(product, x).shortest_covering(s)):
                if (s, t, x) not in covered:
                    return f"a match {s} -> {t} visits {x} but no result {s} -> {t} does"
    return None


def check_edge_coverage(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    db, r = inst.db, inst.query
    product = product_of(db, r)
    covered = {(w.src, w.tgt, x) for w in _s(spec, db, r) for x in w.edge_seq}
    for s in db.sorted_vertices():
        for x in sorted(db.edges):
            for t in sorted(edge_marking(product, x).shortest_covering(s)):
                if (s, t, x) not in covered:
                    return f"a match {s} -> {t} uses {x} but no result {s} -> {t} does"
    return None


def check_subwalk_guarantee(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    db, r = inst.db, inst.query
    by_ep = _s(spec, db, r).by_endpoints()
    for w in matches_upto(db, r, LAB_WALK_LEN, cap=LAB_RESULT_CAP):
        if not any(subwalk_leq(res, w) for res in by_ep.get(w.ep, [])):
            return f"the match {w} has no result among its subwalks"
    return None


def check_atom_coverage(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    db, r = inst.db, inst.query
    product = product_of(db, r)
    covered: Set[int] = set()
    for w in _s(spec, db, r):
        covered |= product.nfa.covered_positions(w.label(db))
    missing = sorted(product.covered_positions() - covered)
    if missing:
        return f"atom position {missing[0]} is used by some match but by no result"
    return None


# ============================================================================
# ORDER DIAGNOSTICS
# ============================================================================

def check_trimmed_equivalence(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    db, r = inst.db, inst.query
    order = order_for(spec, db)
    candidates = matches_upto(db, r, minimal_walk_bound(db, r), cap=LAB_PAIR_CAP)
    plain = WalkSet(minima_per_endpoints(candidates, order))
    trimmed = WalkSet(minima_per_endpoints(candidates, trim(order)))
    return (
        _differ("the minima", plain, "the trimmed minima", trimmed)
        or _differ("the trimmed minima", trimmed, "the result", _s(spec, db, r))
    )


def check_element_inclusion(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    """The order only ranks a walk below walks that use all of its elements."""
    db, r = inst.db, inst.query
    order = order_for(spec, db)
    candidates = matches_upto(db, r, LAB_WALK_LEN, cap=LAB_PAIR_CAP)
    for group in candidates.by_endpoints().values():
        for w in group:
            for w2 in group:
                if w != w2 and order.lt(w, w2) and not elemset(w) <= elemset(w2):
                    return f"{w} ranks below {w2} but uses elements {w2} does not"
    return None


# ============================================================================
# CONSISTENCY ACROSS INSTANCES
# ============================================================================

def check_filter_consistency(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    """No walk is a result in one instance and a rejected match in another."""
    dbs = [inst.db] + ([inst.db_ext] if inst.db_ext is not None else [])
    combos = [(db, r) for db in dbs for r in inst.queries]
    accepted = [_s(spec, db, r) for db, r in combos]
    for i, (db_i, r_i) in enumerate(combos):
        for j, (db_j, r_j) in enumerate(combos):
            if i == j:
                continue
            nfa = glushkov(r_j)
            for w in accepted[i]:
                if consistent_with(db_j, w) and nfa.accepts(w.label(db_j)) and w not in accepted[j]:
                    return f"{w} is accepted for {to_text(r_i)} but rejected for {to_text(r_j)}"
    return None


def check_order_consistency(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    """
    Every rejected match keeps a possible dominator.

    A result w' of R_i at the endpoints of a rejected match w cannot rank below
    w when some other query R_j accepts w while matching w'. If every such
    candidate is excluded, no order explains the results.
    """
    db, queries = inst.db, inst.queries
    accepted = [_s(spec, db, r) for r in queries]
    nfas = [glushkov(r) for r in queries]
    for i, r in enumerate(queries):
        by_ep = accepted[i].by_endpoints()
        for w in matches_upto(db, r, LAB_WALK_LEN, cap=LAB_RESULT_CAP) - accepted[i]:
            allowed = [
                d for d in by_ep.get(w.ep, [])
                if not any(
                    w in accepted[j] and nfas[j].accepts(d.label(db))
                    for j in range(len(queries)) if j != i
                )
            ]
            if not allowed:
                return f"{w} is rejected for {to_text(r)} but no result can dominate it"
    return None


def check_oracle_agreement(spec: SemanticsSpec, inst: LabInstance) -> Optional[str]:
    db, r = inst.db, inst.query
    return _differ("the engine result", _s(spec, db, r), "the oracle", oracle(db, r, spec, cap=LAB_ORACLE_CAP))


# ============================================================================
# SAMPLERS
# ============================================================================

def _random(rng: random.Random, params: GenParams, queries: int = 1, depth: Optional[int] = None,
            extension: bool = False) -> LabInstance:
    db = gen_database(rng, params)
    regexes = tuple(gen_regex(rng, params, depth) for _ in range(queries))
    db_ext = gen_extension(rng, db, params) if extension else None
    return LabInstance(name="random", db=db, queries=regexes, db_ext=db_ext)


def sample_single(rng: random.Random, params: GenParams) -> LabInstance:
    return _random(rng, params)


def sample_extension(rng: random.Random, params: GenParams) -> LabInstance:
    return _random(rng, params, extension=True)


def sample_pair(rng: random.Random, params: GenParams) -> LabInstance:
    return _random(rng, params, queries=2, depth=params.depth - 1)


def sample_star(rng: random.Random, params: GenParams) -> LabInstance:
    return _random(rng, params, depth=params.depth - 1)


def sample_renaming(rng: random.Random, params: GenParams) -> LabInstance:
    inst = _random(rng, params)
    return LabInstance(name=inst.name, db=inst.db, queries=inst.queries, renaming=gen_renaming(rng, inst.db))


def sample_relabeling(rng: random.Random, params: GenParams) -> LabInstance:
    inst = _random(rng, params)
    lam = gen_relabeling(rng, inst.db, inst.query)
    return LabInstance(name=inst.name, db=inst.db, queries=inst.queries, relabeling=lam)


def sample_equivalent(rng: random.Random, params: GenParams) -> Optional[LabInstance]:
    inst = _random(rng, params)
    other = gen_equivalent(rng, inst.query)
    if not regex_equivalent(inst.query, other):
        logger.warning("rewrite changed the language of %s", to_text(inst.query))
        return None
    return LabInstance(name=inst.name, db=inst.db, queries=(inst.query, other))


def sample_atom(rng: random.Random, params: GenParams) -> LabInstance:
    db = gen_database(rng, params)
    return LabInstance(name="random", db=db, queries=(Atom(rng.choice(params.labels)),))


def sample_filter_combos(rng: random.Random, params: GenParams) -> LabInstance:
    return _random(rng, params, queries=2, extension=True)


def sample_order_combos(rng: random.Random, params: GenParams) -> LabInstance:
    return _random(rng, params, queries=3)


# ============================================================================
# REGISTRY
# ============================================================================

def _order_based(sid: SemanticsId) -> bool:
    return sid in ORDER_BASED


def _monotony_fixtures() -> List[LabInstance]:
    return [fx.fix_sh(), fx.fix_mono(), fx.fix_grow_loop()]


def _co_monotony_fixtures() -> List[LabInstance]:
    return [fx.fix_ll(), fx.fix_weird_comono()]


def _label_swap() -> LabInstance:
    return fx.instance("FIX-SH'", fx.sh_db_ext(), ["a a + b"], relabeling=Relabeling.swaps([("a", "b")]))


_REGISTRY = [
    Property("id-independence", check_id_independence,
             lambda: [fx.fix_parallel(with_swap=True)], sample_renaming),
    Property("label-independence", check_label_independence, lambda: [_label_swap()], sample_relabeling),
    Property("expression-independence", check_expression_independence,
             lambda: [fx.fix_loop("a*", "a* + a a")], sample_equivalent),
    Property("unboundedness", check_unboundedness,
             lambda: [fx.fix_path(n) for n in range(1, UNBOUNDED_MAX + 1)]),
    Property("monotony", check_monotony, _monotony_fixtures, sample_extension),
    Property("co-monotony", check_co_monotony, _co_monotony_fixtures, sample_extension),
    Property("restrictibility", check_restrictibility,
             lambda: _monotony_fixtures() + _co_monotony_fixtures(), sample_extension),
    Property("a-compatibility", check_atom_compatibility,
             lambda: [fx.fix_loop("a"), fx.fix_parallel()], sample_atom),
    Property("plus-composability", check_plus_composability,
             lambda: [
                 fx.fix_loop("a", "a a"), fx.fix_triangle("a", "a a"), fx.fix_loop("a", "a*"),
                 fx.fix_mono_prime("a b + c d", "a e d"),
             ], sample_pair),
    Property("plus-decomposability", check_plus_decomposability,
             lambda: [fx.fix_loop("a", "a a"), fx.fix_loop("a", "a*")], sample_pair),
    Property("concat-composability", check_concat_composability,
             lambda: [
                 fx.fix_loop("a", "a"), fx.fix_two_cycle("a", "a"), fx.fix_abcd("a + a b", "c d + d"),
                 fx.fix_mono_prime("a + c + a e", "b + d"),
             ], sample_pair),
    Property("concat-decomposability", check_concat_decomposability,
             lambda: [fx.fix_loop("a", "a"), fx.fix_abcd("a + a b", "c d + d")], sample_pair),
    Property("star-composability", check_star_composability,
             lambda: [fx.fix_loop("a"), fx.fix_two_cycle("a")], sample_star),
    Property("star-decomposability", check_star_decomposability,
             lambda: [fx.fix_loop("a"), fx.fix_two_cycle("a")], sample_star),
    Property("stabilization", check_stabilization, lambda: [fx.fix_loop("a")], sample_star, small=True),
    Property("continuity", check_continuity, lambda: [fx.fix_loop("a")], sample_star, small=True),
    Property("vertex-coverage", check_vertex_coverage,
             lambda: [
                 fx.fix_loop("a a a"), fx.fix_loop("a"), fx.fix_loop("a*"), fx.fix_sh_prime(),
                 fx.fix_abcd(),
             ], sample_single),
    Property("edge-coverage", check_edge_coverage,
             lambda: [fx.fix_loop("a"), fx.fix_loop("a a"), fx.fix_loop("a*"), fx.fix_sh_prime()],
             sample_single),
    Property("subwalk-guarantee", check_subwalk_guarantee,
             lambda: [
                 fx.fix_loop("a"), fx.fix_loop("a a"), fx.fix_loop("a*"), fx.fix_sh_prime(),
                 fx.fix_bag(), fx.fix_subw(),
             ], sample_single),
    Property("atom-coverage", check_atom_coverage,
             lambda: [fx.fix_loop("a* + a a"), fx.fix_sh_prime()], sample_single),
    Property("trimmed-equivalence", check_trimmed_equivalence,
             lambda: [fx.fix_sh_prime()], sample_single, applies=_order_based, small=True),
    Property("element-inclusion", check_element_inclusion,
             lambda: [fx.fix_sh_prime()], sample_single, applies=_order_based, small=True),
    Property("filter-consistency", check_filter_consistency,
             lambda: [fx.fix_sh(), fx.fix_loop("a", "a*"), fx.fix_ll()], sample_filter_combos),
    Property("order-consistency", check_order_consistency, lambda: [fx.fix_vsc()], sample_order_combos),
    Property("oracle-agreement", check_oracle_agreement,
             lambda: [fx.fix_sh_prime(), fx.fix_loop("a*"), fx.fix_abcd(), fx.fix_vsc(), fx.fix_bag()],
             sample_single, small=True),
]

PROPERTIES: Dict[str, Property] = {p.name: p for p in _REGISTRY}
PROPERTY_NAMES: List[str] = [p.name for p in _REGISTRY]
