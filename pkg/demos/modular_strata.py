"""Tangent vector fields and the modular tangent space.

Run:  python demos/modular_strata.py
"""

from germcalc import (
    GermInput,
    action_matrix,
    derivation_module,
    linalg,
    modular_tangent_space,
    parse_poly,
    tjurina_number,
)

V = ("x", "y", "z")

f = parse_poly("x^3+y^3+z^3+x*y*z", V)
print("germ:", f)

# Vector fields tangent to {f = 0}: each satisfies v(f) = h * f exactly.
ders = derivation_module(f)
print(f"{len(ders)} tangent-field generators, for example:")
for d in ders[:4]:
    coeffs = ", ".join(str(c) for c in d.coefficients)
    print(f"   ({coeffs})   cofactor {d.cofactor}")

# Every generator acts on the Tjurina algebra; the common kernel is the
# Zariski tangent space of the maximal modular stratum.
mt = modular_tangent_space(f)
print("modular tangent dimension:", mt.dimension)
basis_names = [
    "*".join(f"{v}^{e}" if e > 1 else v for v, e in zip(V, m) if e) or "1"
    for m in mt.t1.monomials
]
for vec in mt.kernel_basis:
    combo = " + ".join(f"{c}*[{n}]" for c, n in zip(vec, basis_names) if c != 0)
    print("   kernel class:", combo)

# A germ that is not weighted homogeneous: the action of every tangent
# field is nilpotent, which forces a positive modular dimension.
g = parse_poly("x^4+y^3+z^3+x*y*z", V)
print()
print("germ:", g, "(not weighted homogeneous in these coordinates)")
tau, t1 = tjurina_number(GermInput((g,)))
nilpotent = all(
    linalg.is_nilpotent(action_matrix(d, t1, g).rows()) for d in derivation_module(g)
)
print("all actions nilpotent:", nilpotent)
print("modular tangent dimension:", modular_tangent_space(g).dimension)
