"""
Expected outcome of every (property, semantics) pair.

H = holds, F = fails (the fixture that exhibits the failure is recorded),
U = unknown. Restrictibility is derived from monotony and co-monotony.
"""

from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from rpq_lab.lab.models import Expectation
from rpq_lab.semantics.spec import SHORT_NAMES, SemanticsId

H, F, U = Expectation.HOLDS, Expectation.FAILS, Expectation.UNKNOWN

ALL = [s.short for s in SemanticsId]
FILTERS = ["Tr", "Ac", "SWC", "2Ac"]
ORDERS = ["Sh", "ShL", "SM", "MM", "ShMS", "ChW"]
DECOMPOSABLE = ["Sh", "ShL", "SM", "MM", "ChW", "ShVC", "BT", "LL"]

_BY_SHORT = {short: sid for sid, short in SHORT_NAMES.items()}


class Expected(NamedTuple):
    status: Expectation
    witness: Optional[str] = None


def _row(
    default: Expectation,
    fails: Iterable[Tuple[Iterable[str], str]] = (),
    holds: Iterable[str] = (),
    unknown: Iterable[str] = (),
) -> Dict[SemanticsId, Expected]:
    row = {sid: Expected(default) for sid in SemanticsId}
    for name in holds:
        row[_BY_SHORT[name]] = Expected(H)
    for name in unknown:
        row[_BY_SHORT[name]] = Expected(U)
    for names, witness in fails:
        for name in names:
            row[_BY_SHORT[name]] = Expected(F, witness)
    return row


_BASE: Dict[str, Dict[SemanticsId, Expected]] = {
    "id-independence": _row(H, fails=[(["ShL"], "FIX-PARALLEL")]),
    "label-independence": _row(H, fails=[(["ChW"], "FIX-SH'")]),
    "expression-independence": _row(H, fails=[(["ShAC", "BT"], "FIX-LOOP")]),
    "unboundedness": _row(H, unknown=["LL"]),
    "monotony": _row(
        H,
        fails=[
            (["Sh", "ShT", "ShL", "ChW"], "FIX-SH"),
            (["ShVC"], "FIX-MONO"),
            (["GU"], "FIX-GROW-LOOP"),
        ],
        unknown=["ShEC", "ShAC", "WEIRD"],
    ),
    "co-monotony": _row(H, fails=[(["LL"], "FIX-LL"), (["WEIRD"], "FIX-WEIRD-COMONO")]),
    "a-compatibility": _row(
        H, fails=[(["Ac"], "FIX-LOOP"), (["ShL"], "FIX-PARALLEL"), (["LL"], "FIX-LOOP")]
    ),
    "plus-composability": _row(
        H,
        fails=[
            (["Sh", "ShT", "ShL", "SM", "MM", "ShMS", "ShVC", "ShEC", "ChW"], "FIX-LOOP"),
            (["GU", "WEIRD"], "FIX-LOOP"),
        ],
    ),
    "plus-decomposability": _row(H, unknown=["WEIRD"]),
    "concat-composability": _row(
        U,
        holds=["BT", "GU"],
        fails=[
            (["Tr", "SWC", "2Ac"], "FIX-LOOP"),
            (["Ac", "LL"], "FIX-TWO-CYCLE"),
            (["Sh", "ShT", "ShL", "SM", "MM", "ShMS", "ChW", "WEIRD"], "FIX-ABCD"),
            (["ShVC"], "FIX-MONO'"),
        ],
    ),
    "concat-decomposability": _row(U, holds=FILTERS + DECOMPOSABLE),
    "star-composability": _row(
        F,
        fails=[
            ([n for n in ALL if n not in ("Ac", "LL")], "FIX-LOOP"),
            (["Ac", "LL"], "FIX-TWO-CYCLE"),
        ],
    ),
    "star-decomposability": _row(U, holds=FILTERS + DECOMPOSABLE),
    "stabilization": _row(H, fails=[(["GU", "BT"], "FIX-LOOP")], unknown=["ShEC", "ShAC"]),
    "continuity": _row(H, fails=[(["GU", "BT", "WEIRD"], "FIX-LOOP")], unknown=["ShEC", "ShAC"]),
    "vertex-coverage": _row(
        U,
        holds=["ShVC", "ShEC"],
        fails=[
            (FILTERS, "FIX-LOOP"),
            (["Sh", "ShT", "ShL", "ChW", "WEIRD"], "FIX-SH'"),
            (["SM", "MM", "ShMS"], "FIX-ABCD"),
            (["GU", "LL"], "FIX-LOOP"),
        ],
    ),
    "edge-coverage": _row(
        U,
        holds=["ShEC"],
        fails=[
            (FILTERS + ORDERS + ["ShT", "ShVC"], "FIX-LOOP"),
            (["GU", "LL"], "FIX-LOOP"),
            (["WEIRD"], "FIX-SH'"),
        ],
    ),
    "subwalk-guarantee": _row(
        U,
        holds=["SM", "BT"],
        fails=[
            (FILTERS, "FIX-LOOP"),
            (["Sh", "ShT", "ShL", "ChW", "WEIRD"], "FIX-SH'"),
            (["MM", "ShMS"], "FIX-BAG"),
            (["ShVC"], "FIX-SUBW"),
            (["GU", "LL"], "FIX-LOOP"),
        ],
    ),
    "atom-coverage": _row(
        F,
        holds=["ShAC", "BT"],
        fails=[([n for n in ALL if n not in ("ShAC", "BT")], "FIX-LOOP")],
    ),
    "trimmed-equivalence": _row(U, holds=ORDERS),
    "element-inclusion": _row(U, holds=["SM", "MM", "ShMS"], fails=[(["Sh", "ShL", "ChW"], "FIX-SH'")]),
    "filter-consistency": _row(
        U,
        holds=FILTERS,
        fails=[
            (["Sh", "ShT", "ShL", "ChW", "WEIRD"], "FIX-SH"),
            (["SM", "MM", "ShMS", "ShVC", "GU"], "FIX-LOOP"),
            (["LL"], "FIX-LL"),
        ],
    ),
    "order-consistency": _row(U, holds=ORDERS, fails=[(["ShVC"], "FIX-VSC")]),
    "oracle-agreement": _row(H),
}


def _derive_restrictibility() -> Dict[SemanticsId, Expected]:
    row: Dict[SemanticsId, Expected] = {}
    for sid in SemanticsId:
        mono, comono = _BASE["monotony"][sid], _BASE["co-monotony"][sid]
        if mono.status is H and comono.status is H:
            row[sid] = Expected(H)
        elif mono.status is F or comono.status is F:
            row[sid] = mono if mono.status is F else comono
        else:
            row[sid] = Expected(U)
    return row


EXPECTATIONS: Dict[str, Dict[SemanticsId, Expected]] = dict(_BASE)
EXPECTATIONS["restrictibility"] = _derive_restrictibility()


def expected(prop: str, sid: SemanticsId) -> Expected:
    return EXPECTATIONS[prop][sid]


def matrix_rows() -> List[Tuple[str, str, str, Optional[str]]]:
    """(property, semantics, expectation, witness) for every entry, for display."""
    return [
        (prop, sid.short, exp.status.value, exp.witness)
        for prop, row in EXPECTATIONS.items()
        for sid, exp in row.items()
    ]
