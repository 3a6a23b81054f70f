"""
Example script showing the lab used programmatically: evaluate one query under
several semantics, then search for a monotony counterexample.
"""

from rpq_lab.lab.fixtures import sh_db, sh_db_ext
from rpq_lab.lab.models import GenParams
from rpq_lab.lab.runner import check_property, replay_report
from rpq_lab.rpq.parser import parse_query
from rpq_lab.semantics.evaluate import evaluate
from rpq_lab.semantics.spec import SemanticsSpec


def run_example():
    """Compare semantics on a two-edge a-path and its extension by a b-shortcut"""

    query = parse_query("a a + b")
    print("\n" + "="*80)
    print("Running Example: a a + b, before and after adding a shortcut")
    print("="*80 + "\n")

    for name, db in (("before", sh_db()), ("after", sh_db_ext())):
        for token in ("shortest", "trail", "subwalk-min"):
            result = evaluate(db, query, SemanticsSpec.of(token))
            print(f"{name:>6} {token:<12} {', '.join(result.lines()) or '(none)'}")

    print()
    report = check_property("monotony", SemanticsSpec.of("shortest"), GenParams(trials=20))
    print(report.line())
    if report.message:
        print(f"  {report.message}")
        print(f"  replays: {replay_report(report)}")

    print("\n✅ Done")


if __name__ == "__main__":
    try:
        run_example()
    except Exception as e:
        print(f"\n❌ Error: {e}")
        import traceback
        traceback.print_exc()
