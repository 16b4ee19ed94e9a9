#include "tricap/lattice.hpp"

namespace tricap {

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::string out;
  if (free_rank == 1) out = "Z";
  else if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
  for (Int t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(t);
  }
  return out;
}

LagrangianSubgroup lagrangian_span(const std::vector<H1Class>& classes,
                                   const SurfaceModel& s) {
  const IntMatrix m = classes_to_matrix(classes, s);
  ColumnLattice cl = column_lattice(m);

  LagrangianSubgroup out;
  out.surface = s;
  out.basis = matrix_to_classes(cl.basis);
  out.rank = static_cast<Int>(out.basis.size());
  out.elementary_divisors = std::move(cl.divisors);
  out.direct_summand = true;
  for (Int d : out.elementary_divisors)
    if (d != 1) out.direct_summand = false;

  const IntMatrix gram =
      cl.basis.transpose() * symplectic_gram(s) * cl.basis;
  out.isotropic = gram.isZero();
  return out;
}

namespace {

void require_same_surface(const LagrangianSubgroup& a,
                          const LagrangianSubgroup& b) {
  if (!(a.surface == b.surface))
    throw std::invalid_argument("incompatible surface");
}

}  // namespace

LagrangianSubgroup lattice_sum(const LagrangianSubgroup& a,
                               const LagrangianSubgroup& b) {
  require_same_surface(a, b);
  std::vector<H1Class> all = a.basis;
  all.insert(all.end(), b.basis.begin(), b.basis.end());
  return lagrangian_span(all, a.surface);
}

LagrangianSubgroup lattice_intersect(const LagrangianSubgroup& a,
                                     const LagrangianSubgroup& b) {
  require_same_surface(a, b);
  if (a.rank == 0 || b.rank == 0)
    return lagrangian_span({}, a.surface);
  const IntMatrix p = a.basis_matrix();
  const IntMatrix q = b.basis_matrix();

  // Solve p x = q y: the kernel of [p | -q] projects onto all coefficient
  // vectors x with p x in both lattices.
  IntMatrix stacked(p.rows(), p.cols() + q.cols());
  stacked << p, -q;
  const IntMatrix ker = kernel_basis(stacked);

  std::vector<H1Class> generators;
  generators.reserve(ker.cols());
  for (Int j = 0; j < ker.cols(); ++j) {
    IntVector x = IntVector::Zero(p.rows());
    for (Int c = 0; c < p.cols(); ++c)
      for (Int r = 0; r < p.rows(); ++r)
        x[r] = checked_add(x[r], checked_mul(p(r, c), ker(c, j)));
    generators.emplace_back(std::move(x));
  }
  return lagrangian_span(generators, a.surface);
}

AbelianGroup quotient_torsion(const LagrangianSubgroup& a,
                              const LagrangianSubgroup& b) {
  return ambient_quotient(lattice_sum(a, b));
}

AbelianGroup ambient_quotient(const LagrangianSubgroup& l) {
  AbelianGroup g;
  g.free_rank = l.surface.coordinate_dim() - l.rank;
  for (Int d : l.elementary_divisors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

bool lattice_contains(const LagrangianSubgroup& l, const H1Class& x) {
  if (x.dim() != l.surface.coordinate_dim())
    throw std::invalid_argument("incompatible surface");
  if (l.rank == 0) return x.is_zero();
  return solve_integer(l.basis_matrix(), x.coords).has_value();
}

}  // namespace tricap
