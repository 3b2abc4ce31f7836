"""How big is the family of determinantal subvarieties with given degrees?

A b x a matrix of homogeneous forms on P^n, with entry (i, j) of degree
alphas[j] - betas[i], drops rank on a subvariety of codimension a - b + 1
cut out by its b x b minors.  Sweeping over all matrices with the same
degree pattern traces out a family inside the Hilbert scheme, and the
dimension of that family has a closed form.  This demo evaluates it on a
few classical instances.
"""
from detscheme import DegreeData, derive, family_dimension, validate_main, validate_standard

print(__doc__)

# The 2x3 matrix of linear forms on P^4: its minors cut out the cubic
# scroll surface, one of the oldest determinantal examples.
scroll = DegreeData(4, (1, 1, 1), (0, 0))
print(f"Degree data {scroll}:")
print(f"  admissibility: standard={validate_standard(scroll)}, interlacing={validate_main(scroll)}")
print(f"  invariants: {derive(scroll)}")
report = family_dimension(scroll)
print(f"  family dimension: {report.dim_y}")
print(f"  canonical class coefficients: {report.canonical_h} H + {report.canonical_p} P")
print()

# A homogeneous 3x4 matrix of linear forms on P^4 gives the Bordiga
# surface.  Homogeneous data has a particularly compact closed form,
# reported alongside the general one; both must agree.
bordiga = DegreeData(4, (1, 1, 1, 1), (0, 0, 0))
report = family_dimension(bordiga)
print(f"Degree data {bordiga} (homogeneous):")
print(f"  family dimension: {report.dim_y}, compact closed form: {report.corollary_value}")
print()

# With codimension >= 3 the formula picks up correction terms from the
# resolution tail.  Usually they vanish...
tall = DegreeData(5, (1, 1, 1, 1), (0, 0))
print(f"Degree data {tall}: corrections {list(family_dimension(tall).k_terms)}, "
      f"dimension {family_dimension(tall).dim_y}")

# ...but not always: spreading the degrees makes them bite.
spread = DegreeData(5, (1, 1, 4), (0,))
report = family_dimension(spread)
print(f"Degree data {spread}: base {report.lambda_c} + corrections {list(report.k_terms)} "
      f"= {report.dim_y}")
print("  (a complete intersection (1,1,4) in P^5: two hyperplanes from an")
print("   8-dimensional family, then a quartic surface with 34 moduli: 42.)")
print()

# Square matrices (codimension 1) describe determinantal hypersurfaces.
# The formula still evaluates; for a generic 2x2 matrix with degrees
# (1,2)/(0,0) on P^3 the determinant is a cubic surface, and the family
# fills the full 19-dimensional space of cubics.
cubic = DegreeData(3, (1, 2), (0, 0))
print(f"Degree data {cubic} (hypersurface): dimension {family_dimension(cubic).dim_y}")
