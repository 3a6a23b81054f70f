"""
Directed fixture corpus.

Small hand-built databases on which a property is known to fail (or an
inclusion is known to be strict) for a given semantics. Every property check
runs its fixtures before any random trial, so an expected failure never
depends on the random stream.
"""

from typing import Optional, Sequence

from rpq_lab.core.database import Database
from rpq_lab.core.renaming import Relabeling, Renaming
from rpq_lab.lab.instances import LabInstance
from rpq_lab.rpq.parser import parse_query


def instance(
    name: str,
    db: Database,
    queries: Sequence[str],
    db_ext: Optional[Database] = None,
    renaming: Optional[Renaming] = None,
    relabeling: Optional[Relabeling] = None,
) -> LabInstance:
    return LabInstance(
        name=name,
        db=db,
        queries=tuple(parse_query(q) for q in queries),
        db_ext=db_ext,
        renaming=renaming,
        relabeling=relabeling,
    )


# ============================================================================
# DATABASES
# ============================================================================

def sh_db() -> Database:
    """v1 -a-> v2 -a-> v3"""
    return Database.build(["v1", "v2", "v3"], [("e1", "v1", "v2", "a"), ("e2", "v2", "v3", "a")])


def sh_db_ext() -> Database:
    """sh_db plus a b-shortcut v1 -> v3"""
    return sh_db().extend([], [("e3", "v1", "v3", "b")])


def loop_db() -> Database:
    return Database.build(["v"], [("e", "v", "v", "a")])


def abcd_db() -> Database:
    """v1 -a-> v2, a b/c two-cycle through v3, then v2 -d-> v4"""
    return Database.build(
        ["v1", "v2", "v3", "v4"],
        [
            ("e1", "v1", "v2", "a"),
            ("e2", "v2", "v3", "b"),
            ("e3", "v3", "v2", "c"),
            ("e4", "v2", "v4", "d"),
        ],
    )


def vsc_db() -> Database:
    return Database.build(
        ["v1", "v2", "v3", "v4"],
        [
            ("ea", "v1", "v2", "a"),
            ("eb", "v2", "v4", "b"),
            ("ec", "v1", "v3", "c"),
            ("ed", "v3", "v4", "d"),
            ("ee", "v2", "v3", "e"),
            ("ef", "v3", "v2", "f"),
        ],
    )


def mono_db() -> Database:
    return Database.build(
        ["v1", "v2", "v3", "v4"],
        [
            ("ea", "v1", "v2", "a"),
            ("ec", "v1", "v3", "c"),
            ("ed", "v3", "v4", "d"),
            ("ee", "v2", "v3", "e"),
        ],
    )


def mono_db_ext() -> Database:
    return mono_db().extend([], [("eb", "v2", "v4", "b")])


def subw_db() -> Database:
    """An a-triangle v1 -> v2 -> v3 -> v1 plus b two-cycles v1 <-> v2 and v1 <-> v3."""
    return Database.build(
        ["v1", "v2", "v3"],
        [
            ("ea1", "v1", "v2", "a"),
            ("ea2", "v2", "v3", "a"),
            ("ea3", "v3", "v1", "a"),
            ("eb1", "v1", "v2", "b"),
            ("eb2", "v2", "v1", "b"),
            ("eb3", "v1", "v3", "b"),
            ("eb4", "v3", "v1", "b"),
        ],
    )


def parallel_db() -> Database:
    return Database.build(["s", "t"], [("e1", "s", "t", "a"), ("e2", "s", "t", "a")])


def triangle_db() -> Database:
    return Database.build(
        ["v1", "v2", "v3"],
        [("e1", "v1", "v2", "a"), ("e2", "v2", "v3", "a"), ("e3", "v1", "v3", "a")],
    )


def two_cycle_db() -> Database:
    return Database.build(["u", "v"], [("e1", "u", "v", "a"), ("e2", "v", "u", "a")])


def bag_db() -> Database:
    """
    s -a-> x, then b/d edges x -> y and c/e edges y -> x, then x -f-> t.

    The adcf match uses a strict sub-bag of the elements of the abcdef match
    without being one of its subwalks.
    """
    return Database.build(
        ["s", "x", "y", "t"],
        [
            ("e1", "s", "x", "a"),
            ("e2", "x", "y", "b"),
            ("e3", "y", "x", "c"),
            ("e4", "x", "y", "d"),
            ("e5", "y", "x", "e"),
            ("e6", "x", "t", "f"),
        ],
    )


def shms_db() -> Database:
    return Database.build(
        ["s", "t"],
        [("e", "s", "s", "a"), ("g", "s", "s", "b"), ("f", "s", "t", "c")],
    )


def shms_sh_db() -> Database:
    return Database.build(
        ["s", "x", "y", "z", "t"],
        [
            ("e1", "s", "x", "a"),
            ("e2", "x", "y", "b"),
            ("e3", "y", "x", "c"),
            ("e4", "x", "t", "d"),
            ("e5", "x", "z", "e"),
            ("e6", "z", "x", "f"),
        ],
    )


def acbt_db() -> Database:
    return Database.build(["u", "x"], [("e", "u", "x", "a"), ("f", "x", "u", "b")])


def path_db(n: int, padding: int = 0) -> Database:
    """An a-path p0 -> ... -> pn, plus `padding` isolated vertices."""
    vertices = [f"p{i}" for i in range(n + 1)] + [f"q{i}" for i in range(1, padding + 1)]
    edges = [(f"f{i}", f"p{i - 1}", f"p{i}", "a") for i in range(1, n + 1)]
    return Database.build(vertices, edges)


# ============================================================================
# NAMED INSTANCES
# ============================================================================

def fix_sh() -> LabInstance:
    return instance("FIX-SH", sh_db(), ["a a + b"], db_ext=sh_db_ext())


def fix_sh_prime(*queries: str) -> LabInstance:
    return instance("FIX-SH'", sh_db_ext(), queries or ["a a + b"])


def fix_loop(*queries: str) -> LabInstance:
    return instance("FIX-LOOP", loop_db(), queries)


def fix_abcd(*queries: str) -> LabInstance:
    return instance("FIX-ABCD", abcd_db(), queries or ["a (b c)* d"])


def fix_vsc() -> LabInstance:
    return instance("FIX-VSC", vsc_db(), ["a b + a e f b", "c d + a e f b", "a b + c d + a e f b"])


def fix_mono() -> LabInstance:
    return instance("FIX-MONO", mono_db(), ["a b + c d + a e d"], db_ext=mono_db_ext())


def fix_mono_prime(*queries: str) -> LabInstance:
    return instance("FIX-MONO'", mono_db_ext(), queries)


def fix_subw() -> LabInstance:
    return instance("FIX-SUBW", subw_db(), ["a a a + b b"])


def fix_parallel(with_swap: bool = False) -> LabInstance:
    renaming = Renaming.swaps(edge_pairs=[("e1", "e2")]) if with_swap else None
    return instance("FIX-PARALLEL", parallel_db(), ["a"], renaming=renaming)


def fix_triangle(*queries: str) -> LabInstance:
    return instance("FIX-TRIANGLE", triangle_db(), queries)


def fix_two_cycle(*queries: str) -> LabInstance:
    return instance("FIX-TWO-CYCLE", two_cycle_db(), queries)


def fix_grow_loop() -> LabInstance:
    return instance("FIX-GROW-LOOP", Database.build(["v"]), ["a*"], db_ext=loop_db())


def fix_ll() -> LabInstance:
    return instance("FIX-LL", loop_db(), ["a"], db_ext=loop_db().extend(["w1", "w2", "w3"]))


def fix_weird_comono() -> LabInstance:
    db = triangle_db()
    return instance("FIX-WEIRD-COMONO", db, ["a*"], db_ext=db.extend([], [("e4", "v1", "v1", "a")]))


def fix_bag() -> LabInstance:
    return instance("FIX-BAG", bag_db(), ["a b c d e f + a d c f"])


def fix_shms() -> LabInstance:
    return instance("FIX-SHMS", shms_db(), ["a b c + a a c"])


def fix_shms_sh() -> LabInstance:
    return instance("FIX-SHMS-SH", shms_sh_db(), ["a b c e f d + a b c b c b c d"])


def fix_acbt() -> LabInstance:
    return instance("FIX-ACBT", acbt_db(), ["(a (b + eps))*"])


def fix_path(n: int) -> LabInstance:
    """A path of n a-edges with R = a^n; the extension pads it with 2^(n+1) isolated vertices."""
    return instance(
        f"FIX-PATH-{n}", path_db(n), [" ".join(["a"] * n)], db_ext=path_db(n, padding=2 ** (n + 1))
    )
