"""Family scans, jump detection, complete intersections, and the
projective hypersurface comparison.

Run:  python demos/families_and_projective.py
"""

from fractions import Fraction

from germcalc import (
    GermInput,
    catalog,
    embedding_check,
    icis_tjurina,
    parse_poly,
    projective_closed_form,
    projective_t1_dimension,
    scan,
    tjurina_number,
)

# Sweep the mixed-term coefficient of the three-term cubic.  The fiber at
# lambda = -3 contains a singular curve, and the scan flags it.
spec = catalog("tpqr:3,3,3")
report = scan(spec, [{"lambda": v} for v in (0, 1, 2, -3)], with_modular=False)
print("family:", spec.name)
for row in report.rows:
    print(f"   lambda = {row.point['lambda']}: tau = {row.tau}")
print("jump rows:", list(report.jump_indices))
print()

# The plane-curve family with a Milnor jump.  Exact rational points only;
# t = 1/4 is the deepest point of this chart.
spec7 = catalog("example7-martin")
points = []
for t in (1, Fraction(1, 4), 0):
    p = {f"s{i}": 0 for i in range(1, 7)}
    p["t"] = t
    points.append(p)
report7 = scan(spec7, points, with_modular=False)
print("family:", spec7.name)
for row in report7.rows:
    print(f"   t = {row.point['t']}: mu = {row.mu}, tau = {row.tau}")
print()

# A complete intersection curve in 3-space: two equations, module-valued
# first-order data.
f1 = parse_poly("x^4+y^4+2*z^2", ("x", "y", "z"))
f2 = parse_poly("2*z-x*y", ("x", "y", "z"))
print("complete intersection:", f1, "=", f2, "= 0")
print("   tjurina number:", icis_tjurina(GermInput((f1, f2))))
print()

# Smooth projective quartic surface: first-order deformations of the
# hypersurface versus the degree-4 slice of its cone's Tjurina algebra.
V4 = ("x", "y", "z", "w")
q = parse_poly("x^4+y^4+z^4+w^4", V4)
dim = projective_t1_dimension(q)
print("projective quartic:", q)
print("   projective T1 dimension:", dim)
print("   closed form:", projective_closed_form(4, 4))
tau, t1 = tjurina_number(GermInput((q,)))
print("   cone tjurina number:", tau)
print("   matches the weight-4 slice:", embedding_check(q, t1))
