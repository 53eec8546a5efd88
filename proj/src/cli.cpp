#include "hypbounds/cli.hpp"

#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hypbounds/bounds.hpp"
#include "hypbounds/coloring.hpp"
#include "hypbounds/errors.hpp"
#include "hypbounds/gluing.hpp"
#include "hypbounds/polytope.hpp"
#include "hypbounds/presentation.hpp"
#include "hypbounds/triangulation.hpp"
#include "hypbounds/volume.hpp"

namespace hyp::cli {

namespace {

struct Options {
  std::string family = "lobell";
  int n = 0;
  std::string format = "text";
  std::string out_path;
  std::string color = "auto";
  std::string file;
  std::optional<std::size_t> limit;
};

std::string fixed9(double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(9) << x;
  return s.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

nlohmann::json parse_json_file(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + " (byte " + std::to_string(e.byte) + ")", "invalid JSON");
  }
}

FaceColoring load_coloring(const Options& o) {
  if (o.color == "auto") return canonical_coloring(o.n);
  if (o.color.rfind("file:", 0) == 0) {
    auto c = coloring_from_json(parse_json_file(o.color.substr(5)));
    if (c.n() != o.n) throw DomainError("coloring file is for n=" + std::to_string(c.n()));
    return c;
  }
  throw DomainError("--color must be 'auto' or 'file:PATH'");
}

std::string dump(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string coloring_line(const FaceColoring& c) {
  std::ostringstream s;
  for (int f = 0; f < static_cast<int>(c.colors.size()); ++f)
    s << (f ? " " : "") << c.polytope->face_label(f) << ':' << color_name(c.colors[f]);
  return s.str();
}

std::string cmd_build_polytope(const Options& o) {
  const Family fam = parse_family(o.family);
  const auto p = fam == Family::Lobell ? build_lobell_polytope(o.n) : build_fibonacci_polytope(o.n);
  if (o.format == "json") return dump(to_json(p));
  std::ostringstream s;
  s << (fam == Family::Lobell ? "R(" : "Y(") << o.n << "): V=" << p.vertex_count() << " E=" << p.edge_count()
    << " F=" << p.face_count() << '\n';
  for (int f = 0; f < p.face_count(); ++f) {
    s << "  " << p.face_label(f) << ':';
    for (int v : p.face(f)) s << ' ' << p.vertex_label(v);
    s << '\n';
  }
  const auto report = validate_polytope(p);
  for (const auto& c : report.checks) s << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << '\n';
  return s.str();
}

std::string cmd_color(const Options& o) {
  if (parse_family(o.family) != Family::Lobell) throw DomainError("colorings apply to the lobell family only");
  if (!o.file.empty()) {
    const auto c = coloring_from_json(parse_json_file(o.file));
    const auto r = validate_coloring(c);
    if (o.format == "json")
      return dump({{"n", c.n()}, {"proper", r.proper}, {"vertexIndependent", r.vertex_independent},
                   {"surjective", r.surjective}, {"valid", r.valid()}});
    return std::string("proper: ") + (r.proper ? "yes" : "no") + "\nvertex independent: " +
           (r.vertex_independent ? "yes" : "no") + "\nsurjective: " + (r.surjective ? "yes" : "no") +
           "\nvalid: " + (r.valid() ? "yes" : "no") + "\n";
  }
  auto p = std::make_shared<const CombinatorialPolytope>(build_lobell_polytope(o.n));
  const auto found = enumerate_colorings(p, o.limit.value_or(1));
  if (o.format == "json") {
    if (found.size() == 1 && o.limit.value_or(1) == 1) return dump(to_json(found.front()));
    nlohmann::ordered_json doc;
    doc["n"] = o.n;
    doc["count"] = found.size();
    auto list = nlohmann::ordered_json::array();
    for (const auto& c : found) list.push_back(to_json(c)["colors"]);
    doc["colorings"] = std::move(list);
    return dump(doc);
  }
  std::ostringstream s;
  for (const auto& c : found) s << coloring_line(c) << '\n';
  s << found.size() << " coloring(s)\n";
  return s.str();
}

std::string cmd_presentation(const Options& o) {
  const Family fam = parse_family(o.family);
  const auto p = fam == Family::Lobell ? presentation_G(o.n) : presentation_F2(2 * o.n);
  if (fam == Family::Fibonacci && o.n < 4) throw DomainError("M(n) requires n >= 4");
  return o.format == "json" ? dump(to_json(p)) : to_text(p);
}

Triangulation build_triangulation(const Options& o) {
  return parse_family(o.family) == Family::Lobell ? triangulate_lobell(load_coloring(o))
                                                  : triangulate_fibonacci(o.n);
}

std::string cmd_triangulate(const Options& o) {
  const auto t = build_triangulation(o);
  if (o.format == "json" || !o.out_path.empty()) return dump(export_triangulation(t));
  return "tetrahedra: " + std::to_string(t.size()) + "\n";
}

std::string cmd_verify(const Options& o) {
  if (!o.file.empty()) {
    const auto t = import_triangulation(read_file(o.file));
    const auto r = verify_triangulation(t);
    if (o.format == "json") {
      auto doc = to_json(r);
      doc["tetrahedra"] = t.size();
      return dump(doc);
    }
    return to_text(r) + "closed orientable: " + (r.closed_orientable_manifold() ? "yes" : "no") +
           "; tetrahedra: " + std::to_string(t.size()) + "\n";
  }
  const Family fam = parse_family(o.family);
  const auto complex = fam == Family::Lobell ? assemble_lobell(load_coloring(o)) : assemble_fibonacci(o.n);
  const auto cr = verify_closed_manifold(complex);
  const auto t = build_triangulation(o);
  const auto tr = verify_triangulation(t);
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["complex"] = to_json(cr);
    doc["triangulation"] = to_json(tr);
    doc["tetrahedra"] = t.size();
    return dump(doc);
  }
  return "glued polytopes:\n" + to_text(cr) + "triangulation:\n" + to_text(tr) +
         "closed orientable: " + (cr.closed_orientable_manifold() && tr.closed_orientable_manifold() ? "yes" : "no") +
         "; tetrahedra: " + std::to_string(t.size()) + "\n";
}

std::string cmd_volume(const Options& o) {
  const Family fam = parse_family(o.family);
  const auto v = fam == Family::Lobell ? lobell_volume(o.n) : fibonacci_volume(o.n);
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["family"] = family_name(fam);
    doc["n"] = o.n;
    doc["value"] = v.value;
    doc["errorBound"] = v.error_bound;
    auto params = nlohmann::ordered_json::object();
    for (const auto& [k, x] : v.parameters) params[k] = x;
    doc["parameters"] = std::move(params);
    doc["v3"] = v3();
    return dump(doc);
  }
  std::string s = "volume: " + fixed9(v.value) + "\n";
  for (const auto& [k, x] : v.parameters) s += k + ": " + fixed9(x) + "\n";
  s += "v3: " + fixed9(v3()) + "\n";
  return s;
}

std::string cmd_bounds(const Options& o) {
  const auto r = bounds_report(parse_family(o.family), o.n);
  if (o.format == "json") return dump(to_json(r));
  std::ostringstream s;
  auto row = [&s](const std::string& k, const std::string& v) { s << std::left << std::setw(22) << k << v << '\n'; };
  row("family", std::string(family_name(r.family)));
  row("n", std::to_string(r.n));
  row("volume", fixed9(r.volume.value));
  std::ostringstream e;
  e << std::scientific << std::setprecision(2) << r.volume.error_bound;
  row("volume error bound", e.str());
  row("lower bound", std::to_string(r.lower_bound));
  row("upper bound", std::to_string(r.upper_bound));
  row("asymptotic lower", std::to_string(r.asymptotic_lower) + (r.asymptotic_reached ? " (reached)" : " (not reached)"));
  row("vol/(v3*upper)", fixed9(r.volume_over_upper_v3));
  row("lower/upper", fixed9(r.lower_over_upper));
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Löbell and Fibonacci hyperbolic 3-manifolds: construction, verification, volume and complexity bounds",
               args.empty() ? "hypbounds" : args.front()};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub, bool needs_n = true) {
    sub->add_option("--family", o.family, "lobell | fibonacci")->check(CLI::IsMember({"lobell", "fibonacci"}));
    auto* n = sub->add_option("--n", o.n, "order of the manifold family");
    if (needs_n) n->required();
    sub->add_option("--format", o.format, "json | text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out_path, "write output to this file");
  };
  auto* build = app.add_subcommand("build-polytope", "build R(n) or Y(n)");
  common(build);
  auto* color = app.add_subcommand("color", "enumerate or validate colorings of R(n)");
  common(color, false);
  color->add_option("--limit", o.limit, "maximum number of colorings (default 1)");
  color->add_option("--file", o.file, "validate this coloring document instead");
  auto* pres = app.add_subcommand("presentation", "G(n) for lobell, F(2,2n) for fibonacci");
  common(pres);
  auto* tri = app.add_subcommand("triangulate", "build the upper-bound triangulation");
  common(tri);
  tri->add_option("--color", o.color, "auto | file:PATH");
  auto* verify = app.add_subcommand("verify", "check closed orientable 3-manifold conditions");
  common(verify, false);
  verify->add_option("--file", o.file, "triangulation document to verify");
  verify->add_option("--color", o.color, "auto | file:PATH");
  auto* vol = app.add_subcommand("volume", "hyperbolic volume from the closed formula");
  common(vol);
  auto* bnd = app.add_subcommand("bounds", "two-sided complexity bounds");
  common(bnd);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (verify->parsed() && o.file.empty() && o.n == 0) throw CLI::RequiredError("--file or --n");
    if (color->parsed() && o.file.empty() && o.n == 0) throw CLI::RequiredError("--n");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    std::string text;
    if (build->parsed()) text = cmd_build_polytope(o);
    else if (color->parsed()) text = cmd_color(o);
    else if (pres->parsed()) text = cmd_presentation(o);
    else if (tri->parsed()) text = cmd_triangulate(o);
    else if (verify->parsed()) text = cmd_verify(o);
    else if (vol->parsed()) text = cmd_volume(o);
    else text = cmd_bounds(o);

    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out_path);
      if (!file) throw DomainError("cannot write " + o.out_path);
      file << text;
    }
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace hyp::cli
