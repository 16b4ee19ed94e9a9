#include "tricap/io.hpp"

#include <json.hpp>

namespace tricap {

using ordered_json = nlohmann::ordered_json;

RelativeTrisectionDiagram DiagramDocument::as_relative() const {
  return RelativeTrisectionDiagram(surface, alpha, beta, gamma);
}

ClosedTrisectionDiagram DiagramDocument::as_closed() const {
  return ClosedTrisectionDiagram(surface, alpha, beta, gamma);
}

DiagramDocument to_document(const RelativeTrisectionDiagram& d,
                            std::optional<std::string> name,
                            std::optional<std::string> description) {
  DiagramDocument doc;
  doc.surface = d.surface;
  doc.alpha = d.alpha;
  doc.beta = d.beta;
  doc.gamma = d.gamma;
  doc.name = std::move(name);
  doc.description = std::move(description);
  return doc;
}

DiagramDocument to_document(const ClosedTrisectionDiagram& d,
                            std::optional<std::string> name,
                            std::optional<std::string> description) {
  DiagramDocument doc;
  doc.surface = d.surface;
  doc.alpha = d.alpha;
  doc.beta = d.beta;
  doc.gamma = d.gamma;
  doc.name = std::move(name);
  doc.description = std::move(description);
  return doc;
}

namespace {

void warn_unknown_keys(const ordered_json& obj,
                       std::initializer_list<const char*> known,
                       const char* where, std::vector<std::string>* warnings) {
  if (!warnings) return;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : known)
      if (it.key() == k) ok = true;
    if (!ok)
      warnings->push_back(std::string("unknown field '") + it.key() + "' in " +
                          where);
  }
}

Int require_nonneg_int(const ordered_json& j, const char* what) {
  if (!j.is_number_integer())
    throw DiagramFormatError(std::string(what) + ": expected an integer");
  const Int v = j.get<Int>();
  if (v < 0)
    throw DiagramFormatError(std::string(what) + ": must be non-negative");
  return v;
}

std::vector<H1Class> read_family(const ordered_json& families,
                                 const char* fam_name, Int dim) {
  if (!families.contains(fam_name))
    throw DiagramFormatError(std::string("missing family '") + fam_name + "'");
  const ordered_json& fam = families[fam_name];
  if (!fam.is_array())
    throw DiagramFormatError(std::string("family ") + fam_name +
                             ": expected an array of integer tuples");
  std::vector<H1Class> out;
  Int index = 1;  // curves are reported 1-based, matching the CLI
  for (const ordered_json& tuple : fam) {
    const std::string where =
        std::string("family ") + fam_name + ", curve " + std::to_string(index);
    if (!tuple.is_array())
      throw DiagramFormatError(where + ": expected an integer tuple");
    if (static_cast<Int>(tuple.size()) != dim)
      throw DiagramFormatError(where + ": expected length " +
                               std::to_string(dim));
    IntVector coords(dim);
    Int pos = 0;
    for (const ordered_json& entry : tuple) {
      if (!entry.is_number_integer())
        throw DiagramFormatError(where + ": expected an integer tuple");
      const Int v = entry.get<Int>();
      if (v > kMaxCoordinate || v < -kMaxCoordinate)
        throw DiagramFormatError(where + ": coordinate magnitude exceeds " +
                                 std::to_string(kMaxCoordinate));
      coords[pos++] = v;
    }
    out.emplace_back(std::move(coords));
    ++index;
  }
  return out;
}

}  // namespace

DiagramDocument parse_diagram(std::string_view text,
                              std::vector<std::string>* warnings) {
  const ordered_json j = ordered_json::parse(text);
  if (!j.is_object())
    throw DiagramFormatError("top level: expected an object");
  warn_unknown_keys(j, {"format_version", "surface", "families", "metadata"},
                    "top level", warnings);

  DiagramDocument doc;
  if (!j.contains("format_version") || !j["format_version"].is_string())
    throw DiagramFormatError("missing or non-string 'format_version'");
  doc.format_version = j["format_version"].get<std::string>();
  if (doc.format_version != kFormatVersion)
    throw DiagramFormatError("unsupported format_version '" +
                             doc.format_version + "'");

  if (!j.contains("surface") || !j["surface"].is_object())
    throw DiagramFormatError("missing 'surface' object");
  const ordered_json& surf = j["surface"];
  warn_unknown_keys(surf, {"genus", "boundary"}, "surface", warnings);
  if (!surf.contains("genus") || !surf.contains("boundary"))
    throw DiagramFormatError("surface: needs 'genus' and 'boundary'");
  doc.surface = SurfaceModel(require_nonneg_int(surf["genus"], "surface.genus"),
                             require_nonneg_int(surf["boundary"],
                                                "surface.boundary"));

  if (!j.contains("families") || !j["families"].is_object())
    throw DiagramFormatError("missing 'families' object");
  const ordered_json& fams = j["families"];
  warn_unknown_keys(fams, {"alpha", "beta", "gamma"}, "families", warnings);
  const Int dim = doc.surface.coordinate_dim();
  doc.alpha = read_family(fams, "alpha", dim);
  doc.beta = read_family(fams, "beta", dim);
  doc.gamma = read_family(fams, "gamma", dim);

  if (j.contains("metadata")) {
    const ordered_json& meta = j["metadata"];
    if (!meta.is_object())
      throw DiagramFormatError("metadata: expected an object");
    warn_unknown_keys(meta, {"name", "description"}, "metadata", warnings);
    if (meta.contains("name")) {
      if (!meta["name"].is_string())
        throw DiagramFormatError("metadata.name: expected a string");
      doc.name = meta["name"].get<std::string>();
    }
    if (meta.contains("description")) {
      if (!meta["description"].is_string())
        throw DiagramFormatError("metadata.description: expected a string");
      doc.description = meta["description"].get<std::string>();
    }
  }
  return doc;
}

// Canonical form, stable byte for byte: fixed key order, two-space indent,
// coordinate tuples on one line.
std::string serialize_diagram(const DiagramDocument& doc) {
  std::string out;
  out += "{\n";
  out += "  \"format_version\": " + ordered_json(doc.format_version).dump() +
         ",\n";
  out += "  \"surface\": { \"genus\": " + std::to_string(doc.surface.genus) +
         ", \"boundary\": " + std::to_string(doc.surface.boundary) + " },\n";
  out += "  \"families\": {\n";

  const std::vector<H1Class>* fams[3] = {&doc.alpha, &doc.beta, &doc.gamma};
  const char* names[3] = {"alpha", "beta", "gamma"};
  for (int f = 0; f < 3; ++f) {
    out += std::string("    \"") + names[f] + "\": [";
    for (size_t c = 0; c < fams[f]->size(); ++c) {
      if (c) out += ", ";
      out += "[";
      const H1Class& cls = (*fams[f])[c];
      for (Int i = 0; i < cls.dim(); ++i) {
        if (i) out += ", ";
        out += std::to_string(cls.coords[i]);
      }
      out += "]";
    }
    out += (f < 2) ? "],\n" : "]\n";
  }
  out += "  }";

  if (doc.name || doc.description) {
    out += ",\n  \"metadata\": {\n";
    if (doc.name) {
      out += "    \"name\": " + ordered_json(*doc.name).dump();
      out += doc.description ? ",\n" : "\n";
    }
    if (doc.description)
      out += "    \"description\": " + ordered_json(*doc.description).dump() +
             "\n";
    out += "  }";
  }
  out += "\n}\n";
  return out;
}

namespace bundled {

namespace {

const SurfaceModel kSigma22(2, 2);
const SurfaceModel kSigma1(1, 0);

}  // namespace

RelativeTrisectionDiagram d1() {
  return RelativeTrisectionDiagram(
      kSigma22, {basis_a(kSigma22, 1), basis_a(kSigma22, 2)},
      {basis_b(kSigma22, 1), basis_b(kSigma22, 2)},
      {basis_a(kSigma22, 1) + basis_b(kSigma22, 2),
       basis_a(kSigma22, 2) + basis_b(kSigma22, 1)});
}

RelativeTrisectionDiagram d2() {
  return RelativeTrisectionDiagram(
      kSigma22, {basis_a(kSigma22, 1), basis_a(kSigma22, 2)},
      {basis_b(kSigma22, 1), basis_b(kSigma22, 2)},
      {basis_a(kSigma22, 1) + basis_b(kSigma22, 1),
       basis_a(kSigma22, 2) - basis_b(kSigma22, 2)});
}

ClosedTrisectionDiagram s4() {
  return ClosedTrisectionDiagram(SurfaceModel(0, 0), {}, {}, {});
}

ClosedTrisectionDiagram s1xs3() {
  return ClosedTrisectionDiagram(kSigma1, {basis_a(kSigma1, 1)},
                                 {basis_a(kSigma1, 1)}, {basis_a(kSigma1, 1)});
}

ClosedTrisectionDiagram cp2() {
  return ClosedTrisectionDiagram(
      kSigma1, {basis_a(kSigma1, 1)}, {basis_b(kSigma1, 1)},
      {basis_a(kSigma1, 1) + basis_b(kSigma1, 1)});
}

ClosedTrisectionDiagram cp2_bar() {
  return ClosedTrisectionDiagram(
      kSigma1, {basis_a(kSigma1, 1)}, {basis_b(kSigma1, 1)},
      {basis_a(kSigma1, 1) - basis_b(kSigma1, 1)});
}

DiagramDocument d1_document() {
  return to_document(
      d1(), "d1",
      "Relative trisection diagram of S^2 x D^2, type (2,1;0,2). Homological "
      "model: the curve classes are pinned by the requirement that the "
      "cap-off carries the even rank-2 intersection form (S^2 x S^2).");
}

DiagramDocument d2_document() {
  return to_document(
      d2(), "d2",
      "Relative trisection diagram of S^2 x D^2, type (2,1;0,2). Homological "
      "model: the curve classes are pinned by the requirement that the "
      "cap-off carries the odd rank-2 intersection form (CP^2 # CP^2-bar).");
}

DiagramDocument s4_document() {
  return to_document(s4(), "s4", "Genus-0 trisection diagram of S^4.");
}

DiagramDocument s1xs3_document() {
  return to_document(s1xs3(), "s1xs3",
                     "Genus-1 trisection diagram of S^1 x S^3.");
}

DiagramDocument cp2_document() {
  return to_document(cp2(), "cp2",
                     "Genus-1 trisection diagram of CP^2; pins the sign "
                     "convention of the intersection pairing to Q = [+1].");
}

DiagramDocument cp2_bar_document() {
  return to_document(cp2_bar(), "cp2_bar",
                     "Genus-1 trisection diagram of CP^2 with reversed "
                     "orientation; Q = [-1].");
}

std::vector<DiagramDocument> all_documents() {
  return {d1_document(),    d2_document(),  s4_document(),
          s1xs3_document(), cp2_document(), cp2_bar_document()};
}

}  // namespace bundled

}  // namespace tricap
