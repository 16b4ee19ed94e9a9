#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tricap/intmath.hpp"

namespace tricap {

// Admissible parameter quadruple of a relative trisection: g,k,p >= 0,
// b >= 1, 2p+b-1 <= k <= g+p+b-1, and the derived pair count
// A = g+p+b-1-k lies in [0, g-p]. Construction enforces all of it.
struct RelativeTrisectionType {
  Int g = 0, k = 0, p = 0;
  Int b = 1;

  RelativeTrisectionType() = default;
  RelativeTrisectionType(Int g_, Int k_, Int p_, Int b_);

  Int pair_count() const { return g + p + b - 1 - k; }  // A
  Int euler() const { return g - 3 * k + 3 * p + 2 * b - 1; }

  bool operator==(const RelativeTrisectionType&) const = default;
  auto operator<=>(const RelativeTrisectionType&) const = default;
  std::string to_string() const;  // "(g,k;p,b)"
};

// Page Sigma_{p,b} of the open book induced on the boundary.
struct OpenBookPage {
  Int genus = 0;
  Int boundary = 1;
  bool operator==(const OpenBookPage&) const = default;
};
OpenBookPage page_of(const RelativeTrisectionType& t);

enum class BoundaryKind { S3, S2xS1, Lens, Other };
const char* boundary_name(BoundaryKind b);
std::optional<BoundaryKind> boundary_from_name(const std::string& name);

// All admissible types with the given Euler characteristic and g <= g_max,
// sorted lexicographically by (g,k,p,b).
std::vector<RelativeTrisectionType> enumerate_types(Int chi, Int g_max);

// What the page rule table can say about a surviving type. Only disk and
// annulus pages carry a rule; everything else passes unconstrained.
enum class FilterStatus { Allowed, Unconstrained };
struct FilteredType {
  RelativeTrisectionType type;
  FilterStatus status = FilterStatus::Allowed;
  bool operator==(const FilteredType&) const = default;
};

// Removes types whose induced page cannot produce the declared boundary:
// disk pages (p=0, b=1) only fiber S^3; annulus pages (p=0, b=2) only fiber
// S^3, S^2 x S^1 or a lens space.
std::vector<FilteredType> openbook_boundary_filter(
    const std::vector<RelativeTrisectionType>& types, BoundaryKind boundary);

// Least genus admitting a surviving type for the given Euler characteristic
// and boundary, scanning g upward to the cap; evidence lists the survivors
// at that genus.
struct MinimalGenusBound {
  std::optional<Int> genus;  // nullopt: no bound found up to the cap
  Int scan_cap = 16;
  std::vector<FilteredType> evidence;
  std::string to_string() const;
};
MinimalGenusBound minimal_genus_bound(Int chi, BoundaryKind boundary,
                                      Int scan_cap = 16);

}  // namespace tricap
