// Command-line front end for the tricap library: validation, cap-off,
// invariants, diagram moves, parameter enumeration, and the bundled
// S^2 x D^2 demonstration pipeline.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "tricap/io.hpp"
#include "tricap/moves.hpp"

namespace {

using namespace tricap;

// Exit codes, stable as a compatibility contract.
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInconclusive = 2;
constexpr int kUsage = 64;
constexpr int kIoError = 74;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoFailure("read error on '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoFailure("write error on '" + path + "'");
}

DiagramDocument load_document(const std::string& path) {
  std::vector<std::string> warnings;
  DiagramDocument doc = parse_diagram(read_file(path), &warnings);
  for (const std::string& w : warnings)
    std::cerr << "warning: " << path << ": " << w << "\n";
  return doc;
}

int cmd_validate(const std::string& path) {
  const DiagramDocument doc = load_document(path);
  const ValidationReport report = doc.closed()
                                      ? validate_closed(doc.as_closed())
                                      : validate_relative(doc.as_relative());
  std::cout << report.to_string();
  return report.ok ? kOk : kFailure;
}

int cmd_cap(const std::string& path, const std::string& out_path) {
  const DiagramDocument doc = load_document(path);
  if (doc.closed()) {
    std::cerr << "error: already closed\n";
    return kFailure;
  }
  const ClosedTrisectionDiagram capped = cap_off(doc.as_relative());
  write_file(out_path, serialize_diagram(
                           to_document(capped, doc.name, doc.description)));
  const ValidationReport report = validate_closed(capped);
  std::cout << "capped to closed type " << report.inferred_type->to_string()
            << ", written to " << out_path << "\n";
  return kOk;
}

int cmd_invariants(const std::string& path) {
  const DiagramDocument doc = load_document(path);
  if (doc.closed()) {
    std::cout << invariant_report(doc.as_closed()).to_string();
    return kOk;
  }
  // relative diagrams only support the Euler characteristic directly
  const ValidationReport report = validate_relative(doc.as_relative());
  if (!report.ok) {
    std::cerr << "error: diagram is not homologically valid\n"
              << report.to_string();
    return kFailure;
  }
  const InferredType t = *report.inferred_type;
  std::cout << "relative type " << t.to_string() << "\n"
            << "euler characteristic "
            << euler_characteristic_relative(t.g, t.k, t.p, t.b) << "\n"
            << "(cap the diagram for homology and the intersection form)\n";
  return kOk;
}

Family parse_family(const std::string& name) {
  if (name == "a" || name == "alpha") return Family::Alpha;
  if (name == "b" || name == "beta") return Family::Beta;
  if (name == "g" || name == "gamma") return Family::Gamma;
  throw CLI::ValidationError("--family", "expected a|b|g");
}

template <typename Diagram>
DiagramDocument slide_diagram(const Diagram& d, const DiagramDocument& doc,
                              Family fam, Int curve, Int over, Int sign) {
  return to_document(handleslide(d, fam, curve - 1, over - 1, sign), doc.name,
                     doc.description);
}

int cmd_slide(const std::string& path, const std::string& out_path,
              const std::string& family, Int curve, Int over,
              const std::string& sign_text) {
  Int sign = 0;
  if (sign_text == "+" || sign_text == "+1") sign = 1;
  else if (sign_text == "-" || sign_text == "-1") sign = -1;
  else throw CLI::ValidationError("--sign", "expected + or -");

  const DiagramDocument doc = load_document(path);
  const Family fam = parse_family(family);
  if (curve < 1 || over < 1) {
    std::cerr << "error: curve indices are 1-based\n";
    return kFailure;
  }
  const DiagramDocument out =
      doc.closed()
          ? slide_diagram(doc.as_closed(), doc, fam, curve, over, sign)
          : slide_diagram(doc.as_relative(), doc, fam, curve, over, sign);
  write_file(out_path, serialize_diagram(out));
  std::cout << "slid " << family_name(fam) << "[" << curve << "] "
            << (sign > 0 ? "+" : "-") << " " << family_name(fam) << "[" << over
            << "], written to " << out_path << "\n";
  return kOk;
}

int cmd_twist(const std::string& path, const std::string& out_path,
              const std::string& class_text, Int power) {
  const DiagramDocument doc = load_document(path);

  IntVector coords(doc.surface.coordinate_dim());
  {
    std::istringstream in(class_text);
    std::string token;
    Int pos = 0;
    while (std::getline(in, token, ',')) {
      if (pos >= coords.size()) {
        std::cerr << "error: twisting class: expected length "
                  << coords.size() << "\n";
        return kFailure;
      }
      try {
        coords[pos++] = std::stoll(token);
      } catch (const std::exception&) {
        std::cerr << "error: twisting class: '" << token
                  << "' is not an integer\n";
        return kFailure;
      }
    }
    if (pos != coords.size()) {
      std::cerr << "error: twisting class: expected length " << coords.size()
                << "\n";
      return kFailure;
    }
  }
  const H1Class c{coords};

  const DiagramDocument out =
      doc.closed() ? to_document(transvection(doc.as_closed(), c, power),
                                 doc.name, doc.description)
                   : to_document(transvection(doc.as_relative(), c, power),
                                 doc.name, doc.description);
  write_file(out_path, serialize_diagram(out));
  std::cout << "applied twist^" << power << ", written to " << out_path
            << "\n";
  return kOk;
}

int cmd_distinguish(const std::string& path1, const std::string& path2) {
  const DiagramDocument doc1 = load_document(path1);
  const DiagramDocument doc2 = load_document(path2);
  if (doc1.closed() || doc2.closed()) {
    std::cerr << "error: distinguish expects two relative diagrams\n";
    return kFailure;
  }
  const DistinguishVerdict v =
      distinguish(doc1.as_relative(), doc2.as_relative());
  std::cout << v.to_string();
  return v.outcome == DistinguishVerdict::Outcome::Distinguished
             ? kOk
             : kInconclusive;
}

int cmd_params(Int chi, Int gmax, const std::string& boundary) {
  const std::vector<RelativeTrisectionType> types = enumerate_types(chi, gmax);

  std::optional<BoundaryKind> kind;
  if (!boundary.empty()) {
    kind = boundary_from_name(boundary);
    if (!kind)
      throw CLI::ValidationError("--boundary", "expected s3|s2xs1|lens|other");
  }

  std::cout << "admissible (g,k;p,b) with chi = " << chi << ", g <= " << gmax;
  if (kind) std::cout << ", boundary " << boundary_name(*kind);
  std::cout << "\n";
  std::cout << "  g  k  p  b  A  page      filter\n";

  size_t shown = 0;
  auto row = [&](const RelativeTrisectionType& t, const char* status) {
    const OpenBookPage page = page_of(t);
    std::ostringstream pg;
    pg << "(" << page.genus << "," << page.boundary << ")";
    std::ostringstream os;
    os.width(3); os << t.g;
    os.width(3); os << t.k;
    os.width(3); os << t.p;
    os.width(3); os << t.b;
    os.width(3); os << t.pair_count();
    std::cout << os.str() << "  " << pg.str();
    for (size_t i = pg.str().size(); i < 10; ++i) std::cout << ' ';
    std::cout << status << "\n";
    ++shown;
  };

  if (kind) {
    for (const FilteredType& f : openbook_boundary_filter(types, *kind))
      row(f.type, f.status == FilterStatus::Allowed ? "allowed" : "unconstrained");
  } else {
    for (const RelativeTrisectionType& t : types) row(t, "-");
  }

  if (shown == 0) {
    std::cout << "  (none)\n";
    std::cout << "note: no surviving types with g <= " << gmax
              << "; any such relative trisection has genus >= " << (gmax + 1)
              << "\n";
  }
  if (kind) {
    const MinimalGenusBound bound = minimal_genus_bound(chi, *kind);
    std::cout << bound.to_string() << "\n";
  }
  return kOk;
}

int cmd_paper_demo() {
  const PaperDemoResult r = run_paper_demo();
  std::cout << r.summary;
  return r.ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tricap: homological toolkit for (relative) trisection diagrams"};
  app.require_subcommand(1);

  int code = kOk;
  auto run = [&code](auto fn) {
    return [&code, fn]() { code = fn(); };
  };

  std::string path, path2, out_path;
  std::string family, sign_text = "+", class_text, boundary;
  Int curve = 0, over = 0, power = 0, chi = 0, gmax = 0;

  CLI::App* validate = app.add_subcommand(
      "validate", "run the homological validity checks on a diagram file");
  validate->add_option("file", path, "diagram file")->required();
  validate->callback(run([&] { return cmd_validate(path); }));

  CLI::App* cap = app.add_subcommand(
      "cap", "cap off a relative diagram (p = 0) to a closed diagram");
  cap->add_option("file", path, "diagram file")->required();
  cap->add_option("-o,--output", out_path, "output file")->required();
  cap->callback(run([&] { return cmd_cap(path, out_path); }));

  CLI::App* invariants = app.add_subcommand(
      "invariants", "homology, intersection form and Euler characteristic");
  invariants->add_option("file", path, "diagram file")->required();
  invariants->callback(run([&] { return cmd_invariants(path); }));

  CLI::App* slide = app.add_subcommand(
      "slide", "handleslide one curve over another in the same family");
  slide->add_option("file", path, "diagram file")->required();
  slide->add_option("--family", family, "family: a|b|g")->required();
  slide->add_option("--curve", curve, "slid curve (1-based)")->required();
  slide->add_option("--over", over, "curve slid over (1-based)")->required();
  slide->add_option("--sign", sign_text, "+ or -");
  slide->add_option("-o,--output", out_path, "output file")->required();
  slide->callback(run(
      [&] { return cmd_slide(path, out_path, family, curve, over, sign_text); }));

  CLI::App* twist = app.add_subcommand(
      "twist", "apply the homological Dehn twist along a class");
  twist->add_option("file", path, "diagram file")->required();
  twist->add_option("--class", class_text,
                    "twisting class, comma-separated coordinates")->required();
  twist->add_option("--power", power, "twist power")->required();
  twist->add_option("-o,--output", out_path, "output file")->required();
  twist->callback(
      run([&] { return cmd_twist(path, out_path, class_text, power); }));

  CLI::App* distinguish_cmd = app.add_subcommand(
      "distinguish",
      "cap two relative diagrams and compare invariants (0 = distinguished, "
      "2 = inconclusive)");
  distinguish_cmd->add_option("file1", path, "first diagram")->required();
  distinguish_cmd->add_option("file2", path2, "second diagram")->required();
  distinguish_cmd->callback(run([&] { return cmd_distinguish(path, path2); }));

  CLI::App* params = app.add_subcommand(
      "params", "enumerate admissible (g,k;p,b) for an Euler characteristic");
  params->add_option("--chi", chi, "Euler characteristic")->required();
  params->add_option("--gmax", gmax, "genus bound")->required();
  params->add_option("--boundary", boundary, "s3|s2xs1|lens|other");
  params->callback(run([&] { return cmd_params(chi, gmax, boundary); }));

  CLI::App* demo = app.add_subcommand(
      "paper-demo",
      "validate, cap, and distinguish the bundled S^2 x D^2 pair d1/d2");
  demo->callback(run([&] { return cmd_paper_demo(); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return code;
}
