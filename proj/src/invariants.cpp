#include "tricap/invariants.hpp"

#include <limits>
#include <sstream>

#include "tricap/moves.hpp"

namespace tricap {

namespace {

// Sign convention for the H2 pairing, pinned so that the model diagram
// ({a1}, {b1}, {a1+b1}) of CP^2 has form [+1].
constexpr Int kPairingSign = -1;

struct Lagrangians {
  LagrangianSubgroup la, lb, lg;
};

Lagrangians family_lagrangians(const ClosedTrisectionDiagram& d) {
  return {lagrangian_span(d.alpha, d.surface),
          lagrangian_span(d.beta, d.surface),
          lagrangian_span(d.gamma, d.surface)};
}

ValidationReport validate_or_throw(const ClosedTrisectionDiagram& d) {
  ValidationReport report = validate_closed(d);
  if (!report.ok)
    throw std::invalid_argument("diagram is not homologically valid\n" +
                                report.to_string());
  return report;
}

// Lifted basis of the free part of N / Dn, where N = L_a ∩ (L_b + L_g) and
// Dn = (L_a ∩ L_b) + (L_a ∩ L_g). N carries H2 of the induced manifold.
struct H2Presentation {
  LagrangianSubgroup n, dn;
  std::vector<H1Class> free_basis;
};

H2Presentation h2_presentation(const ClosedTrisectionDiagram& d,
                               const Lagrangians& l) {
  H2Presentation out;
  out.n = lattice_intersect(l.la, lattice_sum(l.lb, l.lg));
  out.dn = lattice_sum(lattice_intersect(l.la, l.lb),
                       lattice_intersect(l.la, l.lg));

  if (out.n.rank == 0) return out;

  // Express Dn in coordinates of the basis of N, then split the quotient
  // with one more Smith decomposition.
  const IntMatrix bn = out.n.basis_matrix();
  IntMatrix c(out.n.rank, out.dn.rank);
  for (Int j = 0; j < out.dn.rank; ++j) {
    const auto x = solve_integer(bn, out.dn.basis[j].coords);
    if (!x) throw std::logic_error("Dn is not contained in N");
    c.col(j) = *x;
  }
  const SmithNormalForm snf = smith_normal_form(c);
  const Int r = snf.rank();
  const Int dim = d.surface.coordinate_dim();
  for (Int j = r; j < out.n.rank; ++j) {
    std::vector<BigInt> acc(dim);
    for (Int i = 0; i < out.n.rank; ++i)
      for (Int row = 0; row < dim; ++row)
        acc[row] += snf.Uinv(i, j) * BigInt(bn(row, i));
    IntVector lift(dim);
    for (Int row = 0; row < dim; ++row) {
      if (acc[row] > std::numeric_limits<Int>::max() ||
          acc[row] < std::numeric_limits<Int>::min())
        throw std::overflow_error("H2 basis lift exceeds 64-bit range");
      lift[row] = static_cast<Int>(acc[row]);
    }
    out.free_basis.emplace_back(std::move(lift));
  }
  return out;
}

AbelianGroup free_part(const AbelianGroup& g) {
  return AbelianGroup{g.free_rank, {}};
}

}  // namespace

std::string HomologyProfile::to_string() const {
  std::string s = "H* = (" + h0.to_string() + ", " + h1.to_string() + ", " +
                  h2.to_string() + ", " + h3.to_string() + ", " +
                  h4.to_string() + ")";
  if (reduced_confidence) s += " [reduced confidence: h2 torsion by duality]";
  return s;
}

const char* parity_name(IntersectionForm::Parity p) {
  return p == IntersectionForm::Parity::Even ? "even" : "odd";
}

std::string IntersectionForm::to_string() const {
  std::ostringstream os;
  os << "intersection form: rank " << rank << ", signature " << signature
     << ", parity " << parity_name(parity) << "\n";
  os << "matrix:";
  if (matrix.rows() == 0) {
    os << " (empty)";
  } else {
    for (Int i = 0; i < matrix.rows(); ++i) {
      os << "\n  [";
      for (Int j = 0; j < matrix.cols(); ++j) {
        if (j) os << " ";
        os << matrix(i, j);
      }
      os << "]";
    }
  }
  return os.str();
}

std::string InvariantReport::to_string() const {
  std::ostringstream os;
  os << "closed type " << closed_type.to_string() << "\n"
     << homology.to_string() << "\n"
     << "euler characteristic " << euler << "\n"
     << form.to_string() << "\n";
  return os.str();
}

std::string DistinguishVerdict::to_string() const {
  std::ostringstream os;
  if (outcome == Outcome::Distinguished) {
    os << "distinguished; witness " << *witness << "\n";
    os << "the diagrams are not diffeomorphism and handleslide equivalent\n";
  } else {
    os << "inconclusive: all computed invariants agree\n";
  }
  os << "--- first diagram " << relative_type_first.to_string() << ", capped:\n"
     << report_first.to_string();
  os << "--- second diagram " << relative_type_second.to_string()
     << ", capped:\n"
     << report_second.to_string();
  return os.str();
}

Int euler_characteristic_relative(Int g, Int k, Int p, Int b) {
  if (g < 0 || k < 0 || p < 0 || b < 1 || 2 * p + b - 1 > k ||
      k > g + p + b - 1)
    throw std::invalid_argument("type constraint violated");
  return g - 3 * k + 3 * p + 2 * b - 1;
}

Int euler_characteristic_closed(Int g, Int k) {
  if (g < 0 || k < 0 || k > g)
    throw std::invalid_argument("type constraint violated");
  return 2 + g - 3 * k;
}

HomologyProfile homology(const ClosedTrisectionDiagram& d) {
  const ValidationReport report = validate_or_throw(d);
  const Lagrangians l = family_lagrangians(d);

  HomologyProfile h;
  h.h0 = AbelianGroup{1, {}};
  h.h4 = AbelianGroup{1, {}};
  h.h1 = ambient_quotient(lattice_sum(lattice_sum(l.la, l.lb), l.lg));

  const H2Presentation pres = h2_presentation(d, l);
  h.h2 = AbelianGroup{pres.n.rank - pres.dn.rank, h.h1.torsion};
  h.h3 = free_part(h.h1);
  h.reduced_confidence = !h.h1.torsion.empty();

  const Int chi = 2 - 2 * h.h1.free_rank + h.h2.free_rank;
  const InferredType t = *report.inferred_type;
  if (chi != euler_characteristic_closed(t.g, t.k))
    throw std::domain_error(
        "homology profile inconsistent with diagram type; the diagram "
        "satisfies the necessary homological conditions but is not induced "
        "by any trisection");
  return h;
}

IntersectionForm intersection_form(const ClosedTrisectionDiagram& d) {
  validate_or_throw(d);
  const Lagrangians l = family_lagrangians(d);
  const H2Presentation pres = h2_presentation(d, l);
  const Int r = static_cast<Int>(pres.free_basis.size());

  // Integral decompositions y = y_beta + y_gamma of each basis class.
  const IntMatrix bb = l.lb.basis_matrix();
  const IntMatrix bg = l.lg.basis_matrix();
  IntMatrix stacked(d.surface.coordinate_dim(), bb.cols() + bg.cols());
  if (stacked.cols() > 0) stacked << bb, bg;

  std::vector<H1Class> beta_parts;
  for (const H1Class& y : pres.free_basis) {
    const auto w = solve_integer(stacked, y.coords);
    if (!w) throw std::logic_error("H2 class without beta+gamma decomposition");
    IntVector yb = IntVector::Zero(y.dim());
    for (Int c = 0; c < bb.cols(); ++c)
      for (Int row = 0; row < y.dim(); ++row)
        yb[row] = checked_add(yb[row], checked_mul(bb(row, c), (*w)[c]));
    beta_parts.emplace_back(std::move(yb));
  }

  auto pairing_matrix = [&](const std::vector<H1Class>& parts) {
    IntMatrix q(r, r);
    for (Int i = 0; i < r; ++i)
      for (Int j = 0; j < r; ++j)
        q(i, j) = checked_mul(
            kPairingSign,
            symplectic_pairing(pres.free_basis[i], parts[j], d.surface));
    return q;
  };

  IntersectionForm form;
  form.matrix = pairing_matrix(beta_parts);
  if (form.matrix != form.matrix.transpose())
    throw std::logic_error("intersection pairing not symmetric");

  // The pairing must not depend on the chosen decomposition: shift each
  // beta part by a generator of L_beta ∩ L_gamma and recompute.
  const LagrangianSubgroup common = lattice_intersect(l.lb, l.lg);
  for (const H1Class& z : common.basis) {
    std::vector<H1Class> shifted = beta_parts;
    for (H1Class& yb : shifted) yb = yb + z;
    if (pairing_matrix(shifted) != form.matrix)
      throw std::domain_error("pairing ill-defined on this input");
  }

  form.rank = matrix_rank(form.matrix);
  form.signature = symmetric_signature(form.matrix);

  bool even = true;
  for (Int i = 0; i < r && even; ++i)
    if (form.matrix(i, i) % 2 != 0) even = false;
  for (Int i = 0; i < r && even; ++i)
    for (Int j = i + 1; j < r && even; ++j) {
      // Q(e_i + e_j, e_i + e_j)
      const Int v = form.matrix(i, i) + 2 * form.matrix(i, j) +
                    form.matrix(j, j);
      if (v % 2 != 0) even = false;
    }
  form.parity = even ? IntersectionForm::Parity::Even
                     : IntersectionForm::Parity::Odd;
  return form;
}

InvariantReport invariant_report(const ClosedTrisectionDiagram& d) {
  const ValidationReport report = validate_or_throw(d);
  InvariantReport out;
  out.closed_type = *report.inferred_type;
  out.homology = homology(d);
  out.form = intersection_form(d);
  out.euler = euler_characteristic_closed(out.closed_type.g, out.closed_type.k);
  return out;
}

DistinguishVerdict distinguish(const RelativeTrisectionDiagram& d1,
                               const RelativeTrisectionDiagram& d2) {
  const ValidationReport r1 = validate_relative(d1);
  if (!r1.ok)
    throw std::invalid_argument("first diagram is not homologically valid\n" +
                                r1.to_string());
  const ValidationReport r2 = validate_relative(d2);
  if (!r2.ok)
    throw std::invalid_argument("second diagram is not homologically valid\n" +
                                r2.to_string());

  DistinguishVerdict v;
  v.relative_type_first = *r1.inferred_type;
  v.relative_type_second = *r2.inferred_type;
  v.report_first = invariant_report(cap_off(d1));
  v.report_second = invariant_report(cap_off(d2));

  auto found = [&](std::string witness) {
    v.outcome = DistinguishVerdict::Outcome::Distinguished;
    v.witness = std::move(witness);
  };

  const InvariantReport& a = v.report_first;
  const InvariantReport& b = v.report_second;
  if (!(v.relative_type_first == v.relative_type_second))
    found("relative type: " + v.relative_type_first.to_string() + " vs " +
          v.relative_type_second.to_string());
  else if (!(a.closed_type == b.closed_type))
    found("closed type: " + a.closed_type.to_string() + " vs " +
          b.closed_type.to_string());
  else if (!(a.homology.h1 == b.homology.h1))
    found("h1: " + a.homology.h1.to_string() + " vs " +
          b.homology.h1.to_string());
  else if (!(a.homology.h2 == b.homology.h2))
    found("h2: " + a.homology.h2.to_string() + " vs " +
          b.homology.h2.to_string());
  else if (!(a.homology.h3 == b.homology.h3))
    found("h3: " + a.homology.h3.to_string() + " vs " +
          b.homology.h3.to_string());
  else if (a.form.rank != b.form.rank)
    found("intersection form rank: " + std::to_string(a.form.rank) + " vs " +
          std::to_string(b.form.rank));
  else if (a.form.signature != b.form.signature)
    found("intersection form signature: " + std::to_string(a.form.signature) +
          " vs " + std::to_string(b.form.signature));
  else if (a.form.parity != b.form.parity)
    found(std::string("intersection form parity: ") + parity_name(a.form.parity) +
          " vs " + parity_name(b.form.parity));
  return v;
}

}  // namespace tricap
