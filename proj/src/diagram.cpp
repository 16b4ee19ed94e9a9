#include "tricap/diagram.hpp"

#include <sstream>

namespace tricap {

const char* family_name(Family f) {
  switch (f) {
    case Family::Alpha: return "alpha";
    case Family::Beta: return "beta";
    case Family::Gamma: return "gamma";
  }
  return "?";
}

namespace {

void check_families(const SurfaceModel& s,
                    const std::vector<H1Class>* families[3]) {
  const Int dim = s.coordinate_dim();
  for (int f = 0; f < 3; ++f)
    for (const H1Class& c : *families[f])
      if (c.dim() != dim) throw std::invalid_argument("incompatible surface");
}

}  // namespace

RelativeTrisectionDiagram::RelativeTrisectionDiagram(SurfaceModel s,
                                                     std::vector<H1Class> a,
                                                     std::vector<H1Class> b,
                                                     std::vector<H1Class> c)
    : surface(s), alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)) {
  if (surface.boundary < 1)
    throw std::invalid_argument(
        "relative trisection diagram requires boundary >= 1");
  const std::vector<H1Class>* fams[3] = {&alpha, &beta, &gamma};
  check_families(surface, fams);
}

ClosedTrisectionDiagram::ClosedTrisectionDiagram(SurfaceModel s,
                                                 std::vector<H1Class> a,
                                                 std::vector<H1Class> b,
                                                 std::vector<H1Class> c)
    : surface(s), alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)) {
  if (!surface.closed())
    throw std::invalid_argument(
        "closed trisection diagram requires boundary = 0");
  const std::vector<H1Class>* fams[3] = {&alpha, &beta, &gamma};
  check_families(surface, fams);
}

const std::vector<H1Class>& RelativeTrisectionDiagram::family(Family f) const {
  switch (f) {
    case Family::Alpha: return alpha;
    case Family::Beta: return beta;
    default: return gamma;
  }
}
std::vector<H1Class>& RelativeTrisectionDiagram::family(Family f) {
  switch (f) {
    case Family::Alpha: return alpha;
    case Family::Beta: return beta;
    default: return gamma;
  }
}
const std::vector<H1Class>& ClosedTrisectionDiagram::family(Family f) const {
  switch (f) {
    case Family::Alpha: return alpha;
    case Family::Beta: return beta;
    default: return gamma;
  }
}
std::vector<H1Class>& ClosedTrisectionDiagram::family(Family f) {
  switch (f) {
    case Family::Alpha: return alpha;
    case Family::Beta: return beta;
    default: return gamma;
  }
}

std::string InferredType::to_string() const {
  std::ostringstream os;
  if (closed)
    os << "(" << g << "," << k << ")";
  else
    os << "(" << g << "," << k << ";" << p << "," << b << ")";
  return os.str();
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  if (ok) {
    os << "homologically valid: type " << inferred_type->to_string() << "\n";
  } else {
    os << "not homologically valid";
    if (inferred_type)
      os << " (candidate type " << inferred_type->to_string() << ")";
    os << "\n";
    for (const std::string& f : failures) os << "  failure: " << f << "\n";
  }
  static const char* pair_names[3] = {"(alpha,beta)", "(beta,gamma)",
                                      "(gamma,alpha)"};
  os << "pair types:";
  for (int i = 0; i < 3; ++i) {
    os << " A" << pair_names[i] << "=";
    if (pair_types[i]) os << *pair_types[i];
    else os << "-";
  }
  os << "\n";
  return os.str();
}

std::optional<Int> pair_type(const std::vector<H1Class>& delta,
                             const std::vector<H1Class>& epsilon,
                             const SurfaceModel& s) {
  if (delta.size() != epsilon.size())
    throw std::invalid_argument("family length mismatch");
  const Int n = static_cast<Int>(delta.size());
  if (n == 0) return 0;

  IntMatrix m(n, n);
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j)
      m(i, j) = symplectic_pairing(delta[i], epsilon[j], s);

  const SmithNormalForm snf = smith_normal_form(m);
  for (Int d : snf.divisors())
    if (d != 1) return std::nullopt;
  const Int a = snf.rank();

  IntMatrix combined(s.coordinate_dim(), 2 * n);
  combined << classes_to_matrix(delta, s), classes_to_matrix(epsilon, s);
  if (matrix_rank(combined) != n + a) return std::nullopt;
  return a;
}

namespace {

struct Checker {
  ValidationReport report;

  void fail(std::string msg) { report.failures.push_back(std::move(msg)); }

  // Shared checks for the three families of either diagram kind. Returns the
  // common A-value when all three pairs are standard and consistent.
  std::optional<Int> run_family_checks(const SurfaceModel& s,
                                       const std::vector<H1Class>& alpha,
                                       const std::vector<H1Class>& beta,
                                       const std::vector<H1Class>& gamma) {
    const std::vector<H1Class>* fams[3] = {&alpha, &beta, &gamma};

    for (int f = 0; f < 3; ++f) {
      const auto& fam = *fams[f];
      for (size_t i = 0; i < fam.size(); ++i)
        if (!fam[i].primitive_or_zero())
          fail(std::string("class not primitive (") +
               family_name(kFamilies[f]) + ", curve " + std::to_string(i + 1) +
               ")");
      for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = i + 1; j < fam.size(); ++j)
          if (symplectic_pairing(fam[i], fam[j], s) != 0)
            fail(std::string("curves not homologically disjoint (") +
                 family_name(kFamilies[f]) + ", curves " +
                 std::to_string(i + 1) + " and " + std::to_string(j + 1) + ")");
    }

    static const char* pair_names[3] = {"(alpha,beta)", "(beta,gamma)",
                                        "(gamma,alpha)"};
    const std::vector<H1Class>* pairs[3][2] = {
        {&alpha, &beta}, {&beta, &gamma}, {&gamma, &alpha}};
    for (int i = 0; i < 3; ++i) {
      report.pair_types[i] = pair_type(*pairs[i][0], *pairs[i][1], s);
      if (!report.pair_types[i])
        fail(std::string("nonstandard pair (homological): ") + pair_names[i]);
    }
    if (!report.pair_types[0] || !report.pair_types[1] || !report.pair_types[2])
      return std::nullopt;

    const Int a = *report.pair_types[0];
    if (*report.pair_types[1] != a || *report.pair_types[2] != a) {
      std::ostringstream os;
      os << "inconsistent pair types (A = " << *report.pair_types[0] << ", "
         << *report.pair_types[1] << ", " << *report.pair_types[2] << ")";
      fail(os.str());
      return std::nullopt;
    }
    return a;
  }
};

}  // namespace

ValidationReport validate_relative(const RelativeTrisectionDiagram& d) {
  Checker ck;
  const Int g = d.surface.genus;
  const Int b = d.surface.boundary;

  const size_t n = d.alpha.size();
  if (d.beta.size() != n || d.gamma.size() != n) {
    ck.fail("family cardinalities differ (alpha " + std::to_string(n) +
            ", beta " + std::to_string(d.beta.size()) + ", gamma " +
            std::to_string(d.gamma.size()) + ")");
    return ck.report;
  }
  if (static_cast<Int>(n) > g) {
    ck.fail("family cardinality exceeds genus");
    return ck.report;
  }
  const Int p = g - static_cast<Int>(n);

  const std::optional<Int> a =
      ck.run_family_checks(d.surface, d.alpha, d.beta, d.gamma);
  if (a) {
    const Int k = g + p + b - 1 - *a;
    ck.report.inferred_type = InferredType{g, k, p, b, false};
    if (*a < 0 || *a > g - p)
      ck.fail("pair count A out of range");
    if (!(2 * p + b - 1 <= k && k <= g + p + b - 1))
      ck.fail("type constraint violated: k = " + std::to_string(k));
  }
  ck.report.ok = ck.report.failures.empty();
  return ck.report;
}

ValidationReport validate_closed(const ClosedTrisectionDiagram& d) {
  Checker ck;
  const Int g = d.surface.genus;

  const size_t n = d.alpha.size();
  if (d.beta.size() != n || d.gamma.size() != n) {
    ck.fail("family cardinalities differ (alpha " + std::to_string(n) +
            ", beta " + std::to_string(d.beta.size()) + ", gamma " +
            std::to_string(d.gamma.size()) + ")");
    return ck.report;
  }
  if (static_cast<Int>(n) != g) {
    ck.fail("family cardinality must equal genus");
    return ck.report;
  }

  const std::optional<Int> a =
      ck.run_family_checks(d.surface, d.alpha, d.beta, d.gamma);
  if (a) {
    const Int k = g - *a;
    ck.report.inferred_type = InferredType{g, k, 0, 0, true};
    if (!(0 <= k && k <= g))
      ck.fail("type constraint violated: k = " + std::to_string(k));
  }
  ck.report.ok = ck.report.failures.empty();
  return ck.report;
}

namespace {

// Three-family completion of the standard (delta, epsilon) pattern: crossing
// pairs i <= A use (a_i, b_i, a_i + b_i), parallel pairs use (a_i, a_i, a_i),
// so that all three pair types come out equal to A.
void standard_families(const SurfaceModel& s, Int p, Int a_count,
                       std::vector<H1Class>& alpha, std::vector<H1Class>& beta,
                       std::vector<H1Class>& gamma) {
  const Int n = s.genus - p;
  for (Int i = 1; i <= n; ++i) {
    const Int idx = p + i;
    alpha.push_back(basis_a(s, idx));
    if (i <= a_count) {
      beta.push_back(basis_b(s, idx));
      gamma.push_back(basis_a(s, idx) + basis_b(s, idx));
    } else {
      beta.push_back(basis_a(s, idx));
      gamma.push_back(basis_a(s, idx));
    }
  }
}

}  // namespace

RelativeTrisectionDiagram standard_relative_diagram(Int g, Int k, Int p,
                                                    Int b) {
  if (g < 0 || k < 0 || p < 0 || b < 1 || 2 * p + b - 1 > k ||
      k > g + p + b - 1)
    throw std::invalid_argument("type constraint violated");
  const SurfaceModel s(g, b);
  const Int a_count = g + p + b - 1 - k;
  std::vector<H1Class> alpha, beta, gamma;
  standard_families(s, p, a_count, alpha, beta, gamma);
  return RelativeTrisectionDiagram(s, std::move(alpha), std::move(beta),
                                   std::move(gamma));
}

ClosedTrisectionDiagram standard_closed_diagram(Int g, Int k) {
  if (g < 0 || k < 0 || k > g)
    throw std::invalid_argument("type constraint violated");
  const SurfaceModel s(g, 0);
  std::vector<H1Class> alpha, beta, gamma;
  standard_families(s, 0, g - k, alpha, beta, gamma);
  return ClosedTrisectionDiagram(s, std::move(alpha), std::move(beta),
                                 std::move(gamma));
}

}  // namespace tricap
