"""Compare the engine with a brute-force group computation.

When the inertia image is tame and the good-reduction field is abelian over
Q_ell, the image of Galois on E[p] is generated by a Frobenius matrix F and an
inertia matrix Z that commute.  The script enumerates <F, Z> inside GL2(F_{p^2})
and checks its order against d for a family of twisted curves.  Branches outside
that setting (wild or non-abelian) only get the divisibility checks.
"""

import itertools
from collections import Counter

from ptord import CurveModel, compute_degree
from ptord.oracles import TAME_BRANCHES, verify_result

tally = Counter()
for ell in (5, 7, 13):
    for A, B in itertools.product(range(-3, 4), repeat=2):
        family = (
            CurveModel(0, 0, 0, A * ell**2, B * ell**3),  # e = 2
            CurveModel(0, 0, 0, 0, B * ell**2),  # e = 3
            CurveModel(0, 0, 0, A * ell, 0),  # e = 4
            CurveModel(0, 0, 0, 0, B * ell),  # e = 6
        )
        for model in family:
            for p in (3, 5, 7, 11):
                if p == ell:
                    continue
                try:
                    res = compute_degree(model, ell, p)
                except ValueError:
                    continue  # singular member of the family
                problems = verify_result(res)
                oracle = res.branch.split(".")[0] in TAME_BRANCHES and res.branch not in ("T5.2", "T7.2")
                how = "group order" if oracle else "invariants only"
                tally[(res.branch, how, "ok" if not problems else "MISMATCH")] += 1

for (branch, how, status), n in sorted(tally.items()):
    print(f"{branch:<9} {how:<16} {status:<8} {n}")
