"""Quotient of a non-Hausdorff action: the orbit space loses separation.

Run with ``python3 demos/quotient_plane.py``.
"""

from tspaces.corpus import plane_analog
from tspaces.laws import Instance, check_l11
from tspaces.quotient import build_quotient, projection_profile
from tspaces.topology import members


def main():
    a = plane_analog()
    q = build_quotient(a)
    X, Q = a.space, q.space
    print(f"{X.size} points, {Q.size} orbits")
    for k, c in enumerate(q.partition.classes):
        print(f"  orbit {Q.names[k]}: " + " ".join(X.names[x] for x in members(c)))
    prof = projection_profile(q)
    print(f"projection open={prof.open_map} closed={prof.closed_map}")
    print("quotient hausdorff:", prof.quotient_hausdorff)

    out = check_l11(Instance(action=a))
    print(f"Hausdorff quotient law: hypotheses={out.hypotheses} conclusion={out.conclusion}")
    print("the hypotheses fail, so this instance is informative rather than a counterexample")


if __name__ == "__main__":
    main()
