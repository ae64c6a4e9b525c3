"""Walk through the sign instance: classification, orbits and equivariance.

The group {+1, -1} (left-zero multiplication, discrete) acts on the
three-point space {-1, 0, 1}.  Run with ``python3 demos/sign_action.py``.
"""

from tspaces.action import classify_action
from tspaces.corpus import negation_map, sign_instance
from tspaces.dynamics import equivariance_profile, is_T_transitive
from tspaces.quotient import build_quotient
from tspaces.topology import members


def show(mask, names):
    return "{" + " ".join(names[p] for p in members(mask)) + "}"


def main():
    a = sign_instance()
    X = a.space
    print("action table (rows are group elements):")
    for t, row in enumerate(a.table):
        print(f"  {a.group.names[t]:>2}: " + " ".join(X.names[x] for x in row))

    p = classify_action(a)
    print(f"effective={p.effective} transitive={p.transitive} free={p.free} perfect={p.perfect}")
    print("singular set:", show(p.singular_set, X.names))

    q = build_quotient(a)
    print("orbits:", " ".join(show(c, X.names) for c in q.partition.classes))

    neg = negation_map()
    e = equivariance_profile(neg, a, a)
    print(f"negation: equivariant={e.equivariant} pseudoequivariant={e.pseudoequivariant}")
    print("negation T-transitive:", bool(is_T_transitive(neg, a)))


if __name__ == "__main__":
    main()
