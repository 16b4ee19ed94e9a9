#pragma once

#include <optional>
#include <string>

#include "tricap/diagram.hpp"
#include "tricap/lattice.hpp"

namespace tricap {

// Graded homology of the closed 4-manifold induced by a closed diagram.
// h0 and h4 are Z; h3 is the free part of h1 and h2 carries the torsion of
// h1, by Poincare duality. When h1 has torsion the h2 torsion is inferred
// rather than computed from a chain complex, and the profile is marked
// reduced-confidence.
struct HomologyProfile {
  AbelianGroup h0, h1, h2, h3, h4;
  bool reduced_confidence = false;

  bool operator==(const HomologyProfile&) const = default;
  std::string to_string() const;
};

struct IntersectionForm {
  enum class Parity { Even, Odd };

  IntMatrix matrix;  // symmetric, on a basis of the free part of H2
  Int rank = 0;
  Int signature = 0;
  Parity parity = Parity::Even;

  std::string to_string() const;
};
const char* parity_name(IntersectionForm::Parity p);

// Everything this library can say about the closed 4-manifold of a diagram.
struct InvariantReport {
  InferredType closed_type;
  HomologyProfile homology;
  IntersectionForm form;
  Int euler = 0;

  std::string to_string() const;
};

struct DistinguishVerdict {
  enum class Outcome { Distinguished, Inconclusive };

  Outcome outcome = Outcome::Inconclusive;
  std::optional<std::string> witness;  // first differing invariant, both values
  InferredType relative_type_first, relative_type_second;
  InvariantReport report_first, report_second;

  std::string to_string() const;
};

// Euler characteristic g - 3k + 3p + 2b - 1 of the 4-manifold of a
// (g,k;p,b)-relative trisection; parameters must be admissible.
Int euler_characteristic_relative(Int g, Int k, Int p, Int b);
// Euler characteristic 2 + g - 3k for a closed (g,k)-trisection.
Int euler_characteristic_closed(Int g, Int k);

HomologyProfile homology(const ClosedTrisectionDiagram& d);
IntersectionForm intersection_form(const ClosedTrisectionDiagram& d);
InvariantReport invariant_report(const ClosedTrisectionDiagram& d);

// Caps both diagrams and compares invariants of the induced closed
// 4-manifolds in a fixed order. A difference proves the relative diagrams
// are not diffeomorphism-and-handleslide equivalent; agreement is reported
// as inconclusive, never as equivalence.
DistinguishVerdict distinguish(const RelativeTrisectionDiagram& d1,
                               const RelativeTrisectionDiagram& d2);

}  // namespace tricap
