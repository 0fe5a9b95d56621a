#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "claims.hpp"
#include "enriques/catalog.hpp"
#include "enriques/errors.hpp"
#include "enriques/json_io.hpp"

namespace enriques::cli {
namespace {

using nlohmann::json;
using enriques::to_json;
using enriques::to_string;

// Bad command-line data detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string catalog_dir() {
  const char* dir = std::getenv("ENRIQUES_CATALOG_DIR");
  return dir ? std::string(dir) : std::string();
}

CatalogEntry lookup_catalog(const std::string& name) {
  const std::string dir = catalog_dir();
  return dir.empty() ? catalog(name) : catalog_from_directory(dir, name);
}

CurveGraph load_source(const std::string& file, const std::string& catalog_name) {
  if (!file.empty() && !catalog_name.empty()) throw UsageError("give either a graph file or --catalog, not both");
  if (!catalog_name.empty()) return lookup_catalog(catalog_name).graph;
  if (file.empty()) throw UsageError("no input: give a graph file or --catalog NAME");
  return load_graph_file(file);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// JSON text given inline (starting with '[' or '{') or as a file path.
json read_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  const bool inline_json = first != std::string::npos && (arg[first] == '[' || arg[first] == '{');
  try {
    return json::parse(inline_json ? arg : read_file(arg));
  } catch (const json::parse_error& e) {
    throw UsageError("invalid JSON in " + (inline_json ? std::string("argument") : arg) + ": " + e.what());
  }
}

Integer to_integer_value(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw UsageError("expected an integer, got " + j.dump());
}

IntVector to_int_vector(const json& j) {
  if (!j.is_array()) throw UsageError("expected an array of integers, got " + j.dump());
  IntVector v;
  for (const auto& x : j) v.push_back(to_integer_value(x));
  return v;
}

// "1,0,-2" or "[1,0,-2]".
IntVector parse_vector(const std::string& text) {
  if (text.find('[') != std::string::npos) return to_int_vector(read_json_arg(text));
  IntVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in vector '" + text + "'");
    try {
      v.emplace_back(item.substr(b, e - b + 1));
    } catch (const std::exception&) {
      throw UsageError("not an integer: '" + item + "'");
    }
  }
  if (v.empty()) throw UsageError("empty vector");
  return v;
}

// A bare Gram matrix or {"gram": [[...]], "labels": [...]}.
IntegralLattice parse_gram(const json& j) {
  const json& rows = j.is_object() ? j.at("gram") : j;
  if (!rows.is_array()) throw UsageError("Gram matrix must be an array of rows");
  IntMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const IntVector row = to_int_vector(rows[i]);
    if (row.size() != rows.size()) throw UsageError("Gram matrix is not square");
    for (std::size_t k = 0; k < row.size(); ++k) m(i, k) = row[k];
  }
  std::vector<std::string> labels;
  if (j.is_object() && j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return IntegralLattice(std::move(m), std::move(labels));
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string vertex_list(const std::vector<std::size_t>& vs, const CurveGraph& g) {
  std::vector<std::string> names;
  for (auto v : vs) names.push_back(g.vertices()[v]);
  return "{" + join(names, ",") + "}";
}

std::string signature_str(const Signature& s) {
  return "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + "," + std::to_string(s.zero) + ")";
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeOptions {
  std::string file;
  std::string catalog_name;
  bool json = false;
  std::size_t max_seq = 2;
};

struct SequenceReport {
  IsotropicSequence sequence;
  ExtensionResult extension;
};

struct Analysis {
  GraphLattice lattice;
  std::vector<AffineDiagram> parabolics;
  std::vector<FibrationClass> fibrations;
  std::vector<ShiodaTateReport> shioda_tate;
  std::vector<std::string> shioda_tate_errors;  // parallel; empty when the bound holds
  std::vector<SequenceReport> sequences;
  std::optional<VinbergEvidence> vinberg;
  std::string vinberg_error;
  std::optional<ExtraSpecialConstraints> constraints;
};

Analysis analyze(const CurveGraph& g, std::size_t max_seq) {
  Analysis a;
  a.lattice = analyze_graph_lattice(g);
  a.parabolics = find_parabolic_subdiagrams(g);
  a.fibrations = enumerate_fibrations(a.lattice);
  for (const auto& f : a.fibrations) {
    try {
      a.shioda_tate.push_back(shioda_tate_check(f));
      a.shioda_tate_errors.emplace_back();
    } catch (const BoundViolation& e) {
      a.shioda_tate.push_back(ShiodaTateReport{false, {}});
      a.shioda_tate_errors.emplace_back(e.what());
    }
  }
  if (max_seq > 0)
    for (auto& s : find_sequences(a.lattice, a.fibrations, max_seq)) {
      ExtensionResult ext = extend_sequence(a.lattice, a.fibrations, s);
      a.sequences.push_back({std::move(s), std::move(ext)});
    }
  try {
    a.vinberg = vinberg_finite_index(g);
  } catch (const DomainError& e) {
    a.vinberg_error = e.what();
  }
  if (is_extra_special_name(g.name())) a.constraints = extra_special_constraints(g);
  return a;
}

json analysis_json(const Analysis& a) {
  const CurveGraph& g = a.lattice.graph;
  json par = json::array();
  for (const auto& d : a.parabolics) par.push_back(to_json(d, g));
  json fibs = json::array();
  for (std::size_t i = 0; i < a.fibrations.size(); ++i) {
    json f = to_json(a.fibrations[i], g);
    f["shioda_tate"] = to_json(a.shioda_tate[i]);
    if (!a.shioda_tate_errors[i].empty()) f["shioda_tate"]["error"] = a.shioda_tate_errors[i];
    fibs.push_back(std::move(f));
  }
  json seqs = json::array();
  for (const auto& s : a.sequences) {
    json x = to_json(s.sequence);
    x["extension"] = to_json(s.extension);
    seqs.push_back(std::move(x));
  }
  json out{{"graph", {{"name", g.name()}, {"vertices", g.size()}, {"edges", g.edges().size()}}},
           {"lattice", to_json(a.lattice)},
           {"parabolics", par},
           {"fibrations", fibs},
           {"sequences", seqs}};
  if (a.vinberg)
    out["vinberg"] = to_json(*a.vinberg, g);
  else
    out["vinberg"] = {{"error", a.vinberg_error}};
  if (a.constraints) out["characteristic_constraints"] = to_json(*a.constraints);
  return out;
}

void print_analysis(const Analysis& a, std::size_t max_seq, std::ostream& out) {
  const GraphLattice& gl = a.lattice;
  const CurveGraph& g = gl.graph;
  out << "graph " << g.name() << ": " << g.size() << " vertices, " << g.edges().size() << " edges\n";
  out << "vertex Gram: signature " << signature_str(gl.vertex_signature) << ", span rank " << gl.span_rank << "\n";
  if (gl.saturated()) {
    out << "span determinant " << to_string(determinant_exact(gl.span)) << ", saturation index "
        << to_string(gl.saturation->index) << " into an even unimodular lattice\n";
    if (!gl.saturation_note.empty()) out << "  " << gl.saturation_note << "\n";
  }
  for (const auto& w : gl.warnings) out << "warning: " << w << "\n";

  out << "\nparabolic subdiagrams: " << a.parabolics.size() << "\n";
  for (const auto& d : a.parabolics)
    out << "  " << d.base.name() << "  " << kodaira_label(d).str() << "  " << vertex_list(d.vertices, g) << "\n";

  out << "\nfibrations: " << a.fibrations.size() << "\n";
  for (std::size_t i = 0; i < a.fibrations.size(); ++i) {
    const auto& f = a.fibrations[i];
    out << "  #" << f.id << " class " << to_string(f.isotropic_class) << "\n";
    for (std::size_t k = 0; k < f.fibers.size(); ++k)
      out << "    " << f.labels[k].str() << " " << vertex_list(f.fibers[k].vertices, g) << " "
          << (f.half_fiber_flags[k] ? "half-fiber" : "simple") << "\n";
    for (const auto& w : f.warnings) out << "    warning: " << w << "\n";
    out << "    curves " << f.curve_count() << " in " << f.fibers.size() << " reducible fibers: ";
    if (!a.shioda_tate_errors[i].empty())
      out << "Shioda-Tate violated (" << a.shioda_tate_errors[i] << ")\n";
    else
      out << "Shioda-Tate ok" << (a.shioda_tate[i].tight.empty() ? "" : ", tight") << "\n";
  }

  out << "\nsequences up to length " << max_seq << ":\n";
  for (std::size_t c = 1; c <= max_seq; ++c) {
    std::size_t total = 0, stuck = 0;
    for (const auto& s : a.sequences)
      if (s.sequence.size() == c) {
        ++total;
        if (!s.extension.extendable()) ++stuck;
      }
    out << "  " << c << "-sequences: " << total << " (" << stuck << " non-extendable)\n";
  }
  for (const auto& s : a.sequences) {
    std::vector<std::string> ids;
    for (auto f : s.sequence.fibrations) ids.push_back(f == kNoFibration ? "?" : "#" + std::to_string(f));
    out << "    [" << join(ids, ", ") << "] "
        << (s.extension.extendable() ? "extendable (" + std::to_string(s.extension.extensions.size()) + ")"
                                     : "non-extendable")
        << "\n";
  }

  out << "\nVinberg: ";
  if (a.vinberg)
    out << (a.vinberg->finite_index ? "finite index" : "not established") << " (" << a.vinberg->reason << ")\n";
  else
    out << "error: " << a.vinberg_error << "\n";

  if (a.constraints) {
    out << "\ncharacteristic constraints:\n";
    for (const auto& row : a.constraints->rows) {
      out << "  " << (row.context.characteristic == 2 ? row.context.str() : "p!=2 classical") << ": "
          << (row.allowed ? "allowed" : "excluded");
      if (!row.allowed && !row.violations.empty()) out << " (" << row.violations.front().second.rule << ")";
      out << "\n";
    }
  }
}

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out) {
  const CurveGraph g = load_source(o.file, o.catalog_name);
  const Analysis a = analyze(g, o.max_seq);
  if (o.json)
    out << analysis_json(a).dump(2) << "\n";
  else
    print_analysis(a, o.max_seq, out);
  return kExitOk;
}

// ---- catalog ---------------------------------------------------------------

int cmd_catalog(bool list, const std::string& show, bool as_json, std::ostream& out) {
  if (!show.empty()) {
    const CatalogEntry e = lookup_catalog(show);
    if (as_json) {
      json facts = json::array();
      for (const auto& f : e.expected)
        facts.push_back(
            {{"key", f.key}, {"value", f.value}, {"source", to_string(f.source)}, {"provenance", f.provenance}});
      out << json{{"graph", json::parse(serialize_graph(e.graph))}, {"expected", facts}}.dump(2) << "\n";
    } else {
      out << serialize_graph(e.graph) << "\n";
      for (const auto& f : e.expected)
        out << "  " << f.key << " = " << f.value.dump() << "  [" << to_string(f.source) << "] " << f.provenance
            << "\n";
    }
    return kExitOk;
  }
  if (!list) throw UsageError("catalog: give --list or --show NAME");
  if (as_json) {
    out << json(catalog_names()).dump(2) << "\n";
  } else {
    for (const auto& name : catalog_names()) {
      const CatalogEntry e = lookup_catalog(name);
      out << name << "  (" << e.graph.size() << " vertices, " << e.graph.edges().size() << " edges)\n";
    }
  }
  return kExitOk;
}

// ---- verify-paper ----------------------------------------------------------

int cmd_verify(bool oracle, bool as_json, std::ostream& out) {
  ClaimOptions opts;
  opts.oracle = oracle;
  opts.catalog_dir = catalog_dir();
  const auto results = run_claims(opts);
  std::size_t failed = 0;
  for (const auto& r : results)
    if (!passed(r)) ++failed;
  if (as_json) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(to_json(r));
    out << json{{"claims", arr}, {"total", results.size()}, {"failed", failed}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (passed(r) ? "PASS " : "FAIL ") << r.claim_id << "  expected " << r.expected.dump() << ", computed "
          << r.computed.dump();
      if (r.status == ClaimStatus::DerivedFrozen) out << "  [derived-frozen]";
      out << "\n";
      if (!passed(r)) {
        out << "     at: " << r.citation << "\n";
        if (!r.detail.empty()) out << "     " << r.detail << "\n";
      }
    }
    out << results.size() - failed << "/" << results.size() << " claims pass\n";
  }
  return failed == 0 ? kExitOk : kExitClaimFailure;
}

// ---- reduce ----------------------------------------------------------------

struct ReduceArgs {
  std::string gram_file;
  std::string catalog_name;
  std::string graph_file;
  std::string vector;
  std::string roots;
  std::string interior;
  std::string order = "smallest";
  bool json = false;
};

ReflectionOrder parse_order(const std::string& s) {
  if (s == "smallest") return ReflectionOrder::SmallestIndex;
  if (s == "largest") return ReflectionOrder::LargestIndex;
  if (s == "most-negative") return ReflectionOrder::MostNegative;
  throw UsageError("unknown order '" + s + "' (smallest, largest, most-negative)");
}

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
  ReduceOptions opts;
  opts.order = parse_order(a.order);
  if (!a.interior.empty()) opts.interior = parse_vector(a.interior);
  const IntVector v = parse_vector(a.vector);

  IntegralLattice lattice;
  std::vector<IntVector> roots;
  std::vector<std::string> root_names;
  IntVector input = v;
  const int sources = !a.gram_file.empty() + !a.catalog_name.empty() + !a.graph_file.empty();
  if (sources != 1) throw UsageError("reduce: give exactly one of --gram, --catalog, --graph");

  if (!a.gram_file.empty()) {
    lattice = parse_gram(read_json_arg(a.gram_file));
    if (!a.roots.empty()) {
      const json r = read_json_arg(a.roots);
      if (!r.is_array()) throw UsageError("--roots must be an array of vectors");
      for (const auto& x : r) roots.push_back(to_int_vector(x));
    } else {
      for (std::size_t i = 0; i < lattice.dimension(); ++i)
        if (lattice.gram()(i, i) == -2) {
          IntVector e(lattice.dimension(), Integer(0));
          e[i] = 1;
          roots.push_back(std::move(e));
        }
    }
    for (const auto& r : roots) root_names.push_back(to_string(r));
  } else {
    if (!a.roots.empty()) throw UsageError("--roots applies only to --gram input");
    const CurveGraph g = load_source(a.graph_file, a.catalog_name);
    GraphLattice gl = analyze_graph_lattice(g);
    // The vector is a combination of the graph's curves.
    if (v.size() != g.size())
      throw UsageError("vector has " + std::to_string(v.size()) + " entries, the graph has " +
                       std::to_string(g.size()) + " vertices");
    input = gl.to_ambient(v);
    lattice = *gl.ambient;
    roots = gl.roots;
    root_names = g.vertices();
  }
  if (input.size() != lattice.dimension())
    throw UsageError("vector has " + std::to_string(input.size()) + " entries, the lattice has dimension " +
                     std::to_string(lattice.dimension()));

  const ReductionTrace t = nef_reduce(lattice, roots, input, opts);
  const Integer square = lattice.pairing(input, input);
  if (a.json) {
    json j = to_json(t);
    j["square"] = to_json(square);
    j["order"] = to_string(opts.order);
    for (auto& entry : j["root_sum"]) entry["label"] = root_names[entry["root"].get<std::size_t>()];
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "input " << to_string(t.input) << ", square " << to_string(square) << "\n";
  out << "nef representative " << to_string(t.nef_rep) << "\n";
  out << "reflections " << t.steps.size() << "\n";
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < t.root_sum.size(); ++i)
    if (t.root_sum[i] != 0) terms.push_back(to_string(t.root_sum[i]) + "*" + root_names[i]);
  out << "root sum " << (terms.empty() ? "0" : join(terms, " + ")) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice and dual-graph checks for Enriques surfaces", "enriques"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Lattice, fibration, sequence and Vinberg report for a graph");
  analyze_cmd->add_option("file", analyze_opts.file, "Graph JSON file");
  analyze_cmd->add_option("--catalog", analyze_opts.catalog_name, "Built-in catalog graph");
  analyze_cmd->add_flag("--json", analyze_opts.json, "JSON output");
  analyze_cmd->add_option("--max-seq", analyze_opts.max_seq, "Longest sequence length to search")
      ->check(CLI::Range(0, 10));

  bool list = false, catalog_json = false;
  std::string show;
  auto* catalog_cmd = app.add_subcommand("catalog", "Browse the built-in graphs");
  catalog_cmd->add_flag("--list", list, "List catalog names");
  catalog_cmd->add_option("--show", show, "Print a graph and its expected facts");
  catalog_cmd->add_flag("--json", catalog_json, "JSON output");

  bool oracle = false, verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the claim suite; exit 1 if any claim fails");
  verify_cmd->add_flag("--oracle", oracle, "Re-verify derived values by brute force");
  verify_cmd->add_flag("--json", verify_json, "JSON output");

  ReduceArgs reduce_args;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reflect a class into the nef chamber");
  reduce_cmd->add_option("--gram", reduce_args.gram_file, "Gram matrix: JSON file or inline array");
  reduce_cmd->add_option("--catalog", reduce_args.catalog_name, "Catalog graph (vector in curve coordinates)");
  reduce_cmd->add_option("--graph", reduce_args.graph_file, "Graph file (vector in curve coordinates)");
  reduce_cmd->add_option("--vector", reduce_args.vector, "Class to reduce, e.g. 1,0,2")->required();
  reduce_cmd->add_option("--roots", reduce_args.roots, "Roots for --gram: JSON array, inline or file");
  reduce_cmd->add_option("--interior", reduce_args.interior, "Interior vector h");
  reduce_cmd->add_option("--order", reduce_args.order, "smallest, largest or most-negative");
  reduce_cmd->add_flag("--json", reduce_args.json, "JSON output");

  std::string dot_file, dot_catalog;
  auto* dot_cmd = app.add_subcommand("export-dot", "Write a graph in DOT format");
  dot_cmd->add_option("file", dot_file, "Graph JSON file");
  dot_cmd->add_option("--catalog", dot_catalog, "Built-in catalog graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_opts, out);
    if (*catalog_cmd) return cmd_catalog(list, show, catalog_json, out);
    if (*verify_cmd) return cmd_verify(oracle, verify_json, out);
    if (*reduce_cmd) return cmd_reduce(reduce_args, out);
    if (*dot_cmd) {
      out << export_dot(load_source(dot_file, dot_catalog));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace enriques::cli
