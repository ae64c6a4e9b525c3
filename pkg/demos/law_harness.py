"""Run the law harness at small bounds, then search for a witness.

Run with ``python3 demos/law_harness.py``.
"""

from tspaces.dsl import serialize_document
from tspaces.dynamics import SearchBounds, is_T_transitive, is_transitive, search_witness
from tspaces.laws import Bounds, run_all


def main():
    reports, summary = run_all(Bounds(max_group_order=2, max_space_size=2))
    for r in reports:
        print(f"{r.id:<4} {r.status:<19} {r.instances_checked:>6}")
    counts = {k: v for k, v in summary.items() if k != "out_of_scope"}
    print("summary:", counts)

    refuted = [r for r in reports if r.status == "Refuted"]
    for r in refuted:
        print(f"\n{r.id} witness ({r.note}):")
        print(r.witness)

    found = search_witness("t_transitive_not_transitive", SearchBounds(2, 2))
    a, f = found.bundle["action"], found.bundle["map"]
    print(f"search examined {found.examined} candidates")
    print(f"map {f.table}: T-transitive={bool(is_T_transitive(f, a))} transitive={bool(is_transitive(f))}")


if __name__ == "__main__":
    main()
