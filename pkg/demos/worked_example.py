"""Walk through y^2 = x^3 - 432x - 864 at ell = 2, 3, 5, 7.

The curve has additive reduction at 2 and 3, multiplicative reduction at 5 and
good reduction at 7, so one curve exercises four different parts of the case
analysis.  Run:  python demos/worked_example.py
"""

from ptord import CurveModel, compute_degree, discriminant_exponent, minimal_model_at
from ptord.cli import explain_lines

E = CurveModel(0, 0, 0, -432, -864)
inv = E.invariants()
print(f"c4 = {inv.c4}, c6 = {inv.c6}, Delta = {inv.disc}, j = {inv.j}\n")

for ell in (2, 3, 5, 7):
    data = minimal_model_at(E, ell)
    print(f"--- ell = {ell}: Kodaira {data.kodaira}, conductor exponent {data.conductor_exponent}")
    row = []
    for p in (3, 5, 7, 11):
        if p == ell:
            continue
        res = compute_degree(E, ell, p)
        row.append(f"d_{p} = {res.d} ({res.branch})")
    print("    " + ", ".join(row))

# the full decision path for one query
print()
for line in explain_lines(compute_degree(E, 7, 3)):
    print("  " + line)

# With wild ramification the different exponent D has to come from elsewhere;
# for this curve D = 50 at 2 and D = 9 at 3.
print()
for ell, p, D in ((2, 3, 50), (3, 5, 9)):
    res = compute_degree(E, ell, p)
    print(f"discriminant of Q_{ell}(E[{p}]): ({ell})^{discriminant_exponent(res.d, res.reduction.e, D)}")

res = compute_degree(E, 3, 11)
print(f"\n(ell, p) = (3, 11): d = {res.d} = 2 * e * r with e = {res.reduction.e}, r = {res.intermediates['r']}")
