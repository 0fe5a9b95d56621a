#include "enriques/json_io.hpp"

#include <limits>

namespace enriques {
namespace {

nlohmann::json labels(const std::vector<std::size_t>& vertices, const CurveGraph& g) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t v : vertices) out.push_back(g.vertices()[v]);
  return out;
}

}  // namespace

nlohmann::json to_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(n);
  return to_string(n);
}

nlohmann::json to_json(const IntVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

nlohmann::json to_json(const Signature& s) { return {{"plus", s.plus}, {"minus", s.minus}, {"zero", s.zero}}; }

nlohmann::json to_json(const GraphLattice& gl) {
  nlohmann::json out;
  out["vertices"] = gl.graph.size();
  out["vertex_signature"] = to_json(gl.vertex_signature);
  out["span_rank"] = gl.span_rank;
  out["full_rank"] = gl.full_rank;
  out["span_determinant"] = to_json(determinant_exact(gl.span));
  out["saturated"] = gl.saturated();
  if (gl.saturation) {
    out["saturation_index"] = to_json(gl.saturation->index);
    out["glue"] = describe_glue(gl.saturation->glue_generators);
  }
  if (!gl.saturation_note.empty()) out["saturation_note"] = gl.saturation_note;
  out["warnings"] = gl.warnings;
  return out;
}

nlohmann::json to_json(const AdeDiagram& d, const CurveGraph& g) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : d.components) comps.push_back({{"type", c.name()}, {"vertices", labels(c.vertices, g)}});
  return {{"name", d.name()}, {"rank", d.rank()}, {"determinant", to_json(d.determinant())}, {"components", comps}};
}

nlohmann::json to_json(const AffineDiagram& d, const CurveGraph& g) {
  return {{"vertices", labels(d.vertices, g)},
          {"marks", to_json(IntVector(d.marks.begin(), d.marks.end()))},
          {"base_type", d.base.name()},
          {"kodaira", kodaira_label(d).str()}};
}

nlohmann::json to_json(const FibrationClass& f, const CurveGraph& g) {
  nlohmann::json fibers = nlohmann::json::array();
  for (std::size_t i = 0; i < f.fibers.size(); ++i) {
    nlohmann::json x = to_json(f.fibers[i], g);
    x["half_fiber"] = static_cast<bool>(f.half_fiber_flags[i]);
    fibers.push_back(std::move(x));
  }
  nlohmann::json out{{"id", f.id}, {"isotropic_class", to_json(f.isotropic_class)}, {"fibers", fibers}};
  if (!f.warnings.empty()) out["warnings"] = f.warnings;
  return out;
}

nlohmann::json to_json(const ShiodaTateReport& r) { return {{"pass", r.pass}, {"tight", r.tight}}; }

nlohmann::json to_json(const IsotropicSequence& s) {
  nlohmann::json hf = nlohmann::json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    nlohmann::json x{{"class", to_json(s.half_fibers[i])}};
    if (i < s.fibrations.size() && s.fibrations[i] != kNoFibration) x["fibration"] = s.fibrations[i];
    hf.push_back(std::move(x));
  }
  return {{"length", s.size()}, {"half_fibers", hf}};
}

nlohmann::json to_json(const DegenerateSequence& s, const CurveGraph& g) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : s.blocks) {
    nlohmann::json x{{"half_fiber", to_json(b.half_fiber)}, {"chain", labels(b.chain, g)}};
    if (b.fibration != kNoFibration) x["fibration"] = b.fibration;
    blocks.push_back(std::move(x));
  }
  return {{"c", s.c()}, {"n", s.n()}, {"blocks", blocks}};
}

nlohmann::json to_json(const ExtensionResult& r) {
  nlohmann::json ext = nlohmann::json::array();
  for (const auto& e : r.extensions) ext.push_back(to_json(e));
  nlohmann::json cert = nlohmann::json::array();
  for (const auto& c : r.certificate)
    cert.push_back({{"fibration", c.fibration},
                    {"class", to_json(c.half_fiber)},
                    {"pairings", to_json(IntVector(c.pairings.begin(), c.pairings.end()))},
                    {"extends", c.extends}});
  return {{"extendable", r.extendable()}, {"extensions", ext}, {"certificate", cert}};
}

nlohmann::json to_json(const ReductionTrace& t) {
  nlohmann::json sum = nlohmann::json::array();
  for (std::size_t i = 0; i < t.root_sum.size(); ++i)
    if (t.root_sum[i] != 0) sum.push_back({{"root", i}, {"coefficient", to_json(t.root_sum[i])}});
  return {{"input", to_json(t.input)},
          {"nef_rep", to_json(t.nef_rep)},
          {"root_sum", sum},
          {"steps", t.steps.size()}};
}

nlohmann::json to_json(const VinbergEvidence& e, const CurveGraph& g) {
  nlohmann::json par = nlohmann::json::array();
  for (std::size_t i = 0; i < e.parabolics.size(); ++i) {
    nlohmann::json x = to_json(e.parabolics[i], g);
    x["rank"] = e.parabolics[i].rank();
    x["completion"] = i < e.completions.size() ? nlohmann::json(e.completions[i]) : nlohmann::json::array();
    par.push_back(std::move(x));
  }
  return {{"finite_index", e.finite_index},
          {"span_rank", e.span_rank},
          {"signature", to_json(e.signature)},
          {"parabolics", par},
          {"reason", e.reason}};
}

nlohmann::json to_json(const ExtraSpecialConstraints& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : c.rows) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& [id, viol] : r.violations)
      v.push_back({{"fibration", id}, {"rule", viol.rule}, {"message", viol.message}});
    rows.push_back({{"context", r.context.characteristic == 2 ? r.context.str() : "p!=2 classical"},
                    {"allowed", r.allowed},
                    {"violations", v}});
  }
  nlohmann::json classes = nlohmann::json::array();
  for (auto k : c.allowed_classes) classes.push_back(to_string(k));
  return {{"graph", c.graph},
          {"requires_characteristic_2", c.requires_characteristic_2},
          {"allowed_classes", classes},
          {"rows", rows}};
}

}  // namespace enriques
