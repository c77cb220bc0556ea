"""Walk through deriving the five-point scheme, then print all bundled tables.

The derivation has three stages: pick the first m monomials in the graded
order, build the exact Lagrange basis on the matching stencil nodes, and
integrate each basis function over the propagation disc.  Offsets whose
integrals vanish drop out of the final stencil.
"""

from poisson_stencils import (
    NAMED_SCHEMES,
    a_on_polynomial,
    b_on_polynomial,
    lagrange_basis,
    named_scheme,
    serialize_tables,
)

# Stage 1+2: the size-6 basis covers all second-degree polynomials.
basis = lagrange_basis(6)
print("monomial segment:", basis.monomials)
print("stencil nodes:   ", basis.nodes)
print("evaluation matrix determinant:", basis.det)
print()

# Stage 3: disc integrals of each basis function give the update weights.
print("per-node update weights (exact polynomials in the Courant number):")
for s, node in enumerate(basis.nodes):
    poly = basis.polynomial(s)
    u_weight = a_on_polynomial(poly)
    v_weight = b_on_polynomial(poly)
    note = "   <- drops out (both weights vanish)" if not u_weight and not v_weight else ""
    print(f"  node {node}: displacement {u_weight!r}, velocity {v_weight!r}{note}")
print()

# The node (-1,-1) vanished, so the assembled scheme is the five-point one.
p5 = named_scheme("P5")
print(f"assembled {p5.name}: {len(p5.offsets)} offsets, radius {p5.radius}")
print()

print("all bundled schemes in the plain-text table format:")
for name in NAMED_SCHEMES:
    spec = named_scheme(name)
    print(f"--- {name} ({len(spec.offsets)} offsets)")
    print(serialize_tables(spec))
