#include "tricap/params.hpp"

#include <algorithm>
#include <sstream>

namespace tricap {

RelativeTrisectionType::RelativeTrisectionType(Int g_, Int k_, Int p_, Int b_)
    : g(g_), k(k_), p(p_), b(b_) {
  if (g < 0 || k < 0 || p < 0 || b < 1 || 2 * p + b - 1 > k ||
      k > g + p + b - 1)
    throw std::invalid_argument("type constraint violated");
  const Int a = pair_count();
  if (a < 0 || a > g - p)
    throw std::invalid_argument("type constraint violated");
}

std::string RelativeTrisectionType::to_string() const {
  std::ostringstream os;
  os << "(" << g << "," << k << ";" << p << "," << b << ")";
  return os.str();
}

OpenBookPage page_of(const RelativeTrisectionType& t) {
  return OpenBookPage{t.p, t.b};
}

const char* boundary_name(BoundaryKind b) {
  switch (b) {
    case BoundaryKind::S3: return "s3";
    case BoundaryKind::S2xS1: return "s2xs1";
    case BoundaryKind::Lens: return "lens";
    case BoundaryKind::Other: return "other";
  }
  return "?";
}

std::optional<BoundaryKind> boundary_from_name(const std::string& name) {
  if (name == "s3") return BoundaryKind::S3;
  if (name == "s2xs1") return BoundaryKind::S2xS1;
  if (name == "lens") return BoundaryKind::Lens;
  if (name == "other") return BoundaryKind::Other;
  return std::nullopt;
}

std::vector<RelativeTrisectionType> enumerate_types(Int chi, Int g_max) {
  if (g_max < 0) throw std::invalid_argument("g_max must be non-negative");
  std::vector<RelativeTrisectionType> out;
  // chi = g - 3k + 3p + 2b - 1 and A = g+p+b-1-k give b = 2 - chi + 3A - 2g,
  // so (g, p, A) determines the quadruple.
  for (Int g = 0; g <= g_max; ++g)
    for (Int p = 0; p <= g; ++p)
      for (Int a = 0; a <= g - p; ++a) {
        const Int b = 2 - chi + 3 * a - 2 * g;
        if (b < 1) continue;
        const Int k = g + p + b - 1 - a;
        if (k < 0 || k < 2 * p + b - 1) continue;
        out.emplace_back(g, k, p, b);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FilteredType> openbook_boundary_filter(
    const std::vector<RelativeTrisectionType>& types, BoundaryKind boundary) {
  std::vector<FilteredType> out;
  for (const RelativeTrisectionType& t : types) {
    const OpenBookPage page = page_of(t);
    if (page.genus == 0 && page.boundary == 1) {
      // disk page: the open book is the trivial one on S^3
      if (boundary == BoundaryKind::S3)
        out.push_back({t, FilterStatus::Allowed});
    } else if (page.genus == 0 && page.boundary == 2) {
      // annulus page: S^3, S^2 x S^1 or a lens space
      if (boundary == BoundaryKind::S3 || boundary == BoundaryKind::S2xS1 ||
          boundary == BoundaryKind::Lens)
        out.push_back({t, FilterStatus::Allowed});
    } else {
      out.push_back({t, FilterStatus::Unconstrained});
    }
  }
  return out;
}

std::string MinimalGenusBound::to_string() const {
  std::ostringstream os;
  if (!genus) {
    os << "no bound found <= " << scan_cap;
    return os.str();
  }
  os << "minimal genus " << *genus << "; evidence:";
  for (const FilteredType& f : evidence) os << " " << f.type.to_string();
  return os.str();
}

MinimalGenusBound minimal_genus_bound(Int chi, BoundaryKind boundary,
                                      Int scan_cap) {
  MinimalGenusBound out;
  out.scan_cap = scan_cap;
  for (Int g = 0; g <= scan_cap; ++g) {
    std::vector<RelativeTrisectionType> at_genus;
    for (const RelativeTrisectionType& t : enumerate_types(chi, g))
      if (t.g == g) at_genus.push_back(t);
    std::vector<FilteredType> surviving =
        openbook_boundary_filter(at_genus, boundary);
    if (!surviving.empty()) {
      out.genus = g;
      out.evidence = std::move(surviving);
      return out;
    }
  }
  return out;
}

}  // namespace tricap
