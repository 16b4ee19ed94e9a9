#include "tricap/surface.hpp"

#include <numeric>

namespace tricap {

bool H1Class::is_primitive() const {
  Int g = 0;
  for (Int i = 0; i < coords.size(); ++i)
    g = std::gcd(g, coords[i]);
  return g == 1;
}

H1Class operator+(const H1Class& x, const H1Class& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("incompatible surface");
  IntVector out(x.dim());
  for (Int i = 0; i < x.dim(); ++i)
    out[i] = checked_add(x.coords[i], y.coords[i]);
  return H1Class(std::move(out));
}

H1Class operator-(const H1Class& x, const H1Class& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("incompatible surface");
  IntVector out(x.dim());
  for (Int i = 0; i < x.dim(); ++i)
    out[i] = checked_sub(x.coords[i], y.coords[i]);
  return H1Class(std::move(out));
}

H1Class operator*(Int n, const H1Class& x) {
  IntVector out(x.dim());
  for (Int i = 0; i < x.dim(); ++i) out[i] = checked_mul(n, x.coords[i]);
  return H1Class(std::move(out));
}

namespace {

H1Class unit_class(const SurfaceModel& s, Int index) {
  IntVector v = IntVector::Zero(s.coordinate_dim());
  v[index] = 1;
  return H1Class(std::move(v));
}

}  // namespace

H1Class basis_a(const SurfaceModel& s, Int i) {
  if (i < 1 || i > s.genus) throw std::out_of_range("handle index out of range");
  return unit_class(s, 2 * (i - 1));
}

H1Class basis_b(const SurfaceModel& s, Int i) {
  if (i < 1 || i > s.genus) throw std::out_of_range("handle index out of range");
  return unit_class(s, 2 * (i - 1) + 1);
}

H1Class basis_d(const SurfaceModel& s, Int j) {
  if (j < 1 || j > s.boundary - 1)
    throw std::out_of_range("boundary index out of range");
  return unit_class(s, 2 * s.genus + (j - 1));
}

H1Class zero_class(const SurfaceModel& s) {
  return H1Class(IntVector::Zero(s.coordinate_dim()));
}

IntMatrix symplectic_gram(const SurfaceModel& s) {
  const Int n = s.coordinate_dim();
  IntMatrix j = IntMatrix::Zero(n, n);
  for (Int i = 0; i < s.genus; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

Int symplectic_pairing(const H1Class& x, const H1Class& y,
                       const SurfaceModel& s) {
  const Int n = s.coordinate_dim();
  if (x.dim() != n || y.dim() != n)
    throw std::invalid_argument("incompatible surface");
  Int acc = 0;
  for (Int i = 0; i < s.genus; ++i) {
    acc = checked_add(acc, checked_mul(x.coords[2 * i], y.coords[2 * i + 1]));
    acc = checked_sub(acc, checked_mul(x.coords[2 * i + 1], y.coords[2 * i]));
  }
  return acc;
}

std::pair<SurfaceModel, std::vector<H1Class>> cap_classes(
    const SurfaceModel& s, const std::vector<H1Class>& classes) {
  if (s.closed()) throw std::invalid_argument("already closed");
  const Int n = s.coordinate_dim();
  SurfaceModel capped(s.genus, 0);
  std::vector<H1Class> out;
  out.reserve(classes.size());
  for (const H1Class& c : classes) {
    if (c.dim() != n) throw std::invalid_argument("incompatible surface");
    out.emplace_back(IntVector(c.coords.head(2 * s.genus)));
  }
  return {capped, std::move(out)};
}

IntMatrix classes_to_matrix(const std::vector<H1Class>& classes,
                            const SurfaceModel& s) {
  const Int n = s.coordinate_dim();
  IntMatrix m(n, static_cast<Int>(classes.size()));
  for (Int j = 0; j < m.cols(); ++j) {
    if (classes[j].dim() != n)
      throw std::invalid_argument("incompatible surface");
    m.col(j) = classes[j].coords;
  }
  return m;
}

std::vector<H1Class> matrix_to_classes(const IntMatrix& m) {
  std::vector<H1Class> out;
  out.reserve(m.cols());
  for (Int j = 0; j < m.cols(); ++j) out.emplace_back(IntVector(m.col(j)));
  return out;
}

}  // namespace tricap
