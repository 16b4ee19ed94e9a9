#pragma once

#include <utility>
#include <vector>

#include "tricap/intmath.hpp"

namespace tricap {

// Compact connected oriented surface of genus g with b boundary circles,
// carried at the level of its first homology. Coordinates have dimension
// 2g + max(b-1, 0) with ordered basis (a1, b1, ..., ag, bg, d1, ..., d_{b-1}),
// where ai, bi are the standard handle classes and dj is the class of the
// j-th boundary circle. Only b-1 boundary classes appear: the sum of all
// boundary circles is null-homologous.
struct SurfaceModel {
  Int genus = 0;
  Int boundary = 0;

  SurfaceModel() = default;
  SurfaceModel(Int g, Int b) : genus(g), boundary(b) {
    if (g < 0 || b < 0)
      throw std::invalid_argument("surface parameters must be non-negative");
  }

  Int coordinate_dim() const {
    return 2 * genus + (boundary > 1 ? boundary - 1 : 0);
  }
  bool closed() const { return boundary == 0; }
  bool operator==(const SurfaceModel&) const = default;
};

// First-homology class of a curve, as integer coordinates in the basis above.
struct H1Class {
  IntVector coords;

  H1Class() : coords(0) {}
  explicit H1Class(IntVector c) : coords(std::move(c)) {}

  Int dim() const { return coords.size(); }
  bool is_zero() const { return coords.isZero(); }
  bool is_primitive() const;  // gcd of coordinates is 1
  bool primitive_or_zero() const { return is_zero() || is_primitive(); }
  bool operator==(const H1Class& o) const {
    return coords.size() == o.coords.size() && coords == o.coords;
  }
};

H1Class operator+(const H1Class& x, const H1Class& y);
H1Class operator-(const H1Class& x, const H1Class& y);
H1Class operator*(Int n, const H1Class& x);

// 1-based basis accessors: a(i), b(i) for i in [1, g]; d(j) for j in [1, b-1].
H1Class basis_a(const SurfaceModel& s, Int i);
H1Class basis_b(const SurfaceModel& s, Int i);
H1Class basis_d(const SurfaceModel& s, Int j);
H1Class zero_class(const SurfaceModel& s);

// Gram matrix J of the intersection pairing: omega(ai, bi) = +1,
// omega(bi, ai) = -1, boundary classes pair to zero with everything.
IntMatrix symplectic_gram(const SurfaceModel& s);

// omega(x, y) = x^T J y. Throws on a coordinate-dimension mismatch.
Int symplectic_pairing(const H1Class& x, const H1Class& y,
                       const SurfaceModel& s);

// Glue a disk to every boundary circle: Sigma_{g,b} -> Sigma_{g,0}. On
// homology the boundary-parallel coordinates are deleted and the handle
// block is kept; the map is linear and preserves the pairing.
std::pair<SurfaceModel, std::vector<H1Class>> cap_classes(
    const SurfaceModel& s, const std::vector<H1Class>& classes);

// Columns of the result are the classes; checks every class against s.
IntMatrix classes_to_matrix(const std::vector<H1Class>& classes,
                            const SurfaceModel& s);
std::vector<H1Class> matrix_to_classes(const IntMatrix& m);

}  // namespace tricap
