#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tricap/lattice.hpp"
#include "tricap/surface.hpp"

namespace tricap {

enum class Family { Alpha, Beta, Gamma };
const char* family_name(Family f);
inline constexpr std::array<Family, 3> kFamilies = {Family::Alpha, Family::Beta,
                                                    Family::Gamma};

// A surface with boundary plus three ordered curve families, recorded by the
// homology classes of the curves.
struct RelativeTrisectionDiagram {
  SurfaceModel surface;
  std::vector<H1Class> alpha, beta, gamma;

  RelativeTrisectionDiagram(SurfaceModel s, std::vector<H1Class> a,
                            std::vector<H1Class> b, std::vector<H1Class> c);

  const std::vector<H1Class>& family(Family f) const;
  std::vector<H1Class>& family(Family f);
  bool operator==(const RelativeTrisectionDiagram&) const = default;
};

// Same data on a closed surface.
struct ClosedTrisectionDiagram {
  SurfaceModel surface;
  std::vector<H1Class> alpha, beta, gamma;

  ClosedTrisectionDiagram(SurfaceModel s, std::vector<H1Class> a,
                          std::vector<H1Class> b, std::vector<H1Class> c);

  const std::vector<H1Class>& family(Family f) const;
  std::vector<H1Class>& family(Family f);
  bool operator==(const ClosedTrisectionDiagram&) const = default;
};

// (g,k;p,b) of a relative diagram or (g,k) of a closed one.
struct InferredType {
  Int g = 0, k = 0, p = 0, b = 0;
  bool closed = false;

  std::string to_string() const;  // "(g,k;p,b)" / "(g,k)"
  bool operator==(const InferredType&) const = default;
};

// Outcome of the homological validity checks. A passing report asserts
// necessary conditions only; deciding full diffeomorphism-and-handleslide
// standardness is out of reach of homology.
struct ValidationReport {
  bool ok = false;
  std::optional<InferredType> inferred_type;
  // A-value of the pairs (alpha,beta), (beta,gamma), (gamma,alpha)
  std::array<std::optional<Int>, 3> pair_types;
  std::vector<std::string> failures;

  std::string to_string() const;
};

// Number A of crossing pairs in the standard two-family model the pair
// (delta, epsilon) matches homologically, or nullopt when it cannot match
// any standard pair. With M(i,j) = omega(delta_i, epsilon_j), the pair is
// accepted when every nonzero divisor of M is 1 and the combined span of
// both families has rank n + rank(M); parallel pairs must be homologically
// identical up to a change of basis.
std::optional<Int> pair_type(const std::vector<H1Class>& delta,
                             const std::vector<H1Class>& epsilon,
                             const SurfaceModel& s);

ValidationReport validate_relative(const RelativeTrisectionDiagram& d);
ValidationReport validate_closed(const ClosedTrisectionDiagram& d);

// Homological model of the standard diagram of type (g,k;p,b), completed to
// three families with equal pair types: with A = g+p+b-1-k and i = 1..g-p,
// alpha_i = a_{p+i}; beta_i = b_{p+i} and gamma_i = a_{p+i} + b_{p+i} for
// crossing pairs i <= A, beta_i = gamma_i = a_{p+i} for parallel pairs.
RelativeTrisectionDiagram standard_relative_diagram(Int g, Int k, Int p, Int b);
// Closed counterpart with A = g - k.
ClosedTrisectionDiagram standard_closed_diagram(Int g, Int k);

}  // namespace tricap
