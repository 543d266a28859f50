"""Tour of the basic germ invariants.

Run:  python demos/invariants_tour.py
"""

from germcalc import (
    GermInput,
    find_weights,
    graded_piece,
    milnor_number,
    parse_poly,
    tjurina_number,
)

V = ("x", "y", "z")

# The three-term cubic with a mixed term: the classic weighted homogeneous
# surface germ.  All arithmetic is exact, so these are true integers.
f = parse_poly("x^3+y^3+z^3+x*y*z", V)
germ = GermInput((f,))

print("germ:", f)
print("milnor number :", milnor_number(germ))

tau, t1 = tjurina_number(germ)
print("tjurina number:", tau)

# Weighted homogeneous in these coordinates, so tau = mu.
w = find_weights(f)
print("weights       :", w.weights, "degree:", w.degree)

# The Tjurina algebra comes with a monomial basis and a weight per element.
print("T1 basis      :")
for mono, weight in zip(t1.monomials, t1.weights):
    name = "*".join(f"{v}^{e}" if e > 1 else v for v, e in zip(V, mono) if e) or "1"
    print(f"   {name:8s} weight {weight}")

# The slice at the weight of f itself is the first-order modular direction.
top = graded_piece(t1, w, w.degree)
print("weight-3 slice:", len(top), "element(s)")

# A simple germ for contrast: an A_4 point has no top-weight directions.
g = parse_poly("x^5+y^2+z^2", V)
tau_g, t1_g = tjurina_number(GermInput((g,)))
w_g = find_weights(g)
print()
print("germ:", g)
print("tjurina number:", tau_g, " weights:", w_g.weights, " degree:", w_g.degree)
print("weight-d slice:", len(graded_piece(t1_g, w_g, w_g.degree)), "element(s)")

# Non-isolated input is detected exactly, never by a degree cutoff.
h = parse_poly("x^3+y^3+z^3-3*x*y*z", V)
print()
print("germ:", h)
print("tjurina number:", tjurina_number(GermInput((h,)))[0], "(non-isolated)")
