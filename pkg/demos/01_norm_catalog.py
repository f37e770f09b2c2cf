"""
Walking the closed-form norm catalog
====================================

Every entry the catalog knows about, printed with its status tag.
EXACT_NORM means the constant is the operator norm, attained or
approached by a known family.  UPPER_BOUND means the catalog only
certifies one side.  Queries with no catalog answer raise, they do
not silently fall back to a guess.
"""

from disknorms import NormQuery, Target, UnsupportedQueryError, closed_form_norm

OPS = ("cauchy", "bergman", "j0", "j0star", "cdelta")
P_GRID = (1.0, 1.5, 2.0, 3.0, 4.0, 10.0, float("inf"))


def describe(op, p, target):
    try:
        res = closed_form_norm(NormQuery(op, p, target))
    except UnsupportedQueryError as exc:
        return f"    (refused: {exc})"
    return f"    {res.value:.10g}  [{res.kind.name}]  {res.provenance}"


print("p-to-p operator norms")
print("---------------------")
for op in OPS:
    print(op)
    for p in P_GRID:
        print(f"  p = {p:<5g}" + describe(op, p, Target.SAME_P))
    print()

print("p-to-sup norms (only defined for p > 2)")
print("---------------------------------------")
for op in ("cauchy", "j0", "j0star"):
    print(op)
    for p in (3.0, 4.0, 10.0, float("inf")):
        print(f"  p = {p:<5g}" + describe(op, p, Target.L_INFINITY))
    print()

# The refusals above are part of the contract: the catalog carries no
# p-to-p entry for the Bergman projection (it is unbounded at both
# endpoint exponents, and no entry for the interior made the cut), so
# it raises instead of reporting a number it cannot stand behind.
