#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tricap/diagram.hpp"
#include "tricap/invariants.hpp"
#include "tricap/params.hpp"

namespace tricap {

// Structural violation of the diagram file schema (field types, tuple
// lengths, magnitude cap). JSON syntax errors surface as
// nlohmann::json::parse_error with line/column information.
struct DiagramFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr Int kMaxCoordinate = 1'000'000;
inline constexpr const char* kFormatVersion = "1";

// One diagram file: surface, the three curve families, optional metadata.
// The boundary count dispatches between the relative and closed readings.
struct DiagramDocument {
  std::string format_version = kFormatVersion;
  SurfaceModel surface;
  std::vector<H1Class> alpha, beta, gamma;
  std::optional<std::string> name;
  std::optional<std::string> description;

  bool closed() const { return surface.closed(); }
  RelativeTrisectionDiagram as_relative() const;
  ClosedTrisectionDiagram as_closed() const;
  bool operator==(const DiagramDocument&) const = default;
};

DiagramDocument to_document(const RelativeTrisectionDiagram& d,
                            std::optional<std::string> name = std::nullopt,
                            std::optional<std::string> description = std::nullopt);
DiagramDocument to_document(const ClosedTrisectionDiagram& d,
                            std::optional<std::string> name = std::nullopt,
                            std::optional<std::string> description = std::nullopt);

// Parses the documented JSON schema. Structural validation only; homological
// validation is a separate step. Unknown fields are reported as warnings.
DiagramDocument parse_diagram(std::string_view text,
                              std::vector<std::string>* warnings = nullptr);

// Canonical serialization: fixed key order, two-space indent, trailing
// newline. parse ∘ serialize is the identity on document values.
std::string serialize_diagram(const DiagramDocument& doc);

// Example diagrams shipped with the library. d1 and d2 are homological
// models of two (2,1;0,2)-relative trisection diagrams of S^2 x D^2 whose
// cap-offs carry the even and the odd rank-2 intersection form; the class
// coordinates pin exactly that data, not any particular geometric picture.
namespace bundled {
RelativeTrisectionDiagram d1();
RelativeTrisectionDiagram d2();
ClosedTrisectionDiagram s4();      // (0,0), empty families
ClosedTrisectionDiagram s1xs3();   // ({a1},{a1},{a1})
ClosedTrisectionDiagram cp2();     // ({a1},{b1},{a1+b1})
ClosedTrisectionDiagram cp2_bar(); // ({a1},{b1},{a1-b1})
DiagramDocument d1_document();
DiagramDocument d2_document();
DiagramDocument s4_document();
DiagramDocument s1xs3_document();
DiagramDocument cp2_document();
DiagramDocument cp2_bar_document();
std::vector<DiagramDocument> all_documents();
}  // namespace bundled

// One-shot pipeline over the bundled pair d1/d2: validate both, run the
// genus-bound enumeration for chi = 2 over S^2 x S^1, cap both, compute
// invariants, and distinguish. The summary is deterministic text.
struct PaperDemoResult {
  ValidationReport d1_report, d2_report;
  std::vector<RelativeTrisectionType> chi2_types_g1;
  std::vector<FilteredType> chi2_types_g1_filtered;
  MinimalGenusBound genus_bound;
  InvariantReport d1_invariants, d2_invariants;
  DistinguishVerdict verdict;
  bool ok = false;        // every expected outcome reproduced
  std::string summary;
};
PaperDemoResult run_paper_demo();

}  // namespace tricap
