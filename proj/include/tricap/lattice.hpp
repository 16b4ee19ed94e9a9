#pragma once

#include <string>
#include <vector>

#include "tricap/snf.hpp"
#include "tricap/surface.hpp"

namespace tricap {

// Isomorphism type of a finitely generated abelian group.
struct AbelianGroup {
  Int free_rank = 0;
  std::vector<Int> torsion;  // coefficients > 1, each dividing the next

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;
  std::string to_string() const;  // "0", "Z", "Z^2 + Z/2", ...
};

// Sublattice of H1(surface) spanned by curve classes. The stored basis is a
// canonical basis of the lattice; elementary_divisors describe its inclusion
// into the ambient coordinate lattice (all 1 exactly when the sublattice is
// a direct summand). A family of disjoint curves always spans an isotropic
// sublattice.
struct LagrangianSubgroup {
  SurfaceModel surface;
  std::vector<H1Class> basis;  // linearly independent over Q
  Int rank = 0;                // = basis.size()
  std::vector<Int> elementary_divisors;
  bool isotropic = false;
  bool direct_summand = false;

  IntMatrix basis_matrix() const { return classes_to_matrix(basis, surface); }
};

LagrangianSubgroup lagrangian_span(const std::vector<H1Class>& classes,
                                   const SurfaceModel& s);

// A + B and A ∩ B, computed exactly over the integers. Both require the two
// arguments to live on the same surface.
LagrangianSubgroup lattice_sum(const LagrangianSubgroup& a,
                               const LagrangianSubgroup& b);
LagrangianSubgroup lattice_intersect(const LagrangianSubgroup& a,
                                     const LagrangianSubgroup& b);

// Isomorphism type of ambient / (A + B).
AbelianGroup quotient_torsion(const LagrangianSubgroup& a,
                              const LagrangianSubgroup& b);
// Isomorphism type of ambient / L.
AbelianGroup ambient_quotient(const LagrangianSubgroup& l);

bool lattice_contains(const LagrangianSubgroup& l, const H1Class& x);

}  // namespace tricap
