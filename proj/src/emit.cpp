#include "coxtwist/emit.hpp"

#include <json.hpp>

namespace coxtwist {

namespace {

using nlohmann::json;

json wordJson(const ShatWord& word) {
  json out = json::array();
  for (Generator g : word.letters) out.push_back(g + 1);
  return out;
}

json moveJson(const Move& move) {
  if (const auto* b = std::get_if<BraidMove>(&move))
    return {{"type", "braid"},
            {"position", b->position + 1},
            {"pair", {b->first + 1, b->second + 1}}};
  const auto& m = std::get<InitialMove>(move);
  json out{{"type", "initial"},
           {"class", className(m.kind)},
           {"source", wordJson(m.source)},
           {"target", wordJson(m.target)}};
  if (m.bond) out["m"] = m.bond;
  return out;
}

}  // namespace

std::string edgeStyle(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Braid: return "solid";
    case EdgeKind::HalfBraid: return "dashed";
    case EdgeKind::Initial: return "dotted";
  }
  return "solid";
}

std::string maximalityDot(const MaximalityGraph& graph) {
  std::string out = "graph G {\n";
  for (Generator s : graph.vertices.members())
    out += "  s" + std::to_string(s + 1) + ";\n";
  for (auto [s, t] : graph.edges)
    out += "  s" + std::to_string(s + 1) + " -- s" + std::to_string(t + 1) + ";\n";
  return out + "}\n";
}

std::string maximalityJson(const MaximalityGraph& graph) {
  json vertices = json::array(), edges = json::array();
  for (Generator s : graph.vertices.members()) vertices.push_back(s + 1);
  for (auto [s, t] : graph.edges) edges.push_back({s + 1, t + 1});
  return json{{"vertices", vertices}, {"edges", edges}}.dump() + "\n";
}

std::string expressionGraphDot(const ExpressionGraph& graph) {
  std::string out = "graph R {\n";
  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    out += "  v" + std::to_string(i) + " [label=\"" +
           formatWord(graph.vertices[i]) + "\"];\n";
  for (const auto& e : graph.edges)
    out += "  v" + std::to_string(e.a) + " -- v" + std::to_string(e.b) +
           " [style=" + edgeStyle(e.kind) + "];\n";
  return out + "}\n";
}

std::string expressionGraphJson(const ExpressionGraph& graph) {
  json vertices = json::array(), edges = json::array(), components = json::array();
  for (const ShatWord& w : graph.vertices) vertices.push_back(wordJson(w));
  for (const auto& e : graph.edges)
    edges.push_back({{"a", e.a}, {"b", e.b}, {"style", edgeStyle(e.kind)}});
  for (const auto& c : graph.components()) components.push_back(c);
  return json{{"vertices", vertices},
              {"edges", edges},
              {"components", components}}
             .dump() +
         "\n";
}

std::string movePathText(const MovePath& path) {
  std::string out = "start  " + formatWord(path.start) + "\n";
  for (const auto& step : path.steps)
    out += describe(step.move) + "  =>  " + formatWord(step.word) + "\n";
  return out;
}

std::string movePathJson(const MovePath& path) {
  json steps = json::array();
  for (const auto& step : path.steps)
    steps.push_back({{"move", moveJson(step.move)}, {"word", wordJson(step.word)}});
  return json{{"start", wordJson(path.start)}, {"steps", steps}}.dump() + "\n";
}

std::string reportJson(const VerificationReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    json item{{"name", c.name},
              {"w", wordJson(c.witness)},
              {"regime", c.regime},
              {"expressions", c.expressions},
              {"components", c.components},
              {"pass", c.pass}};
    if (c.braid_components) item["braid_components"] = *c.braid_components;
    if (c.sampled) item["sampled"] = true;
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  return json{{"system", report.system},
              {"theta", report.theta},
              {"passed", report.passed()},
              {"checks", checks},
              {"notes", report.notes}}
             .dump(2) +
         "\n";
}

std::string reportText(const VerificationReport& report) {
  std::string out = "system " + report.system + ", theta " + report.theta + "\n";
  for (const auto& note : report.notes) out += "  note: " + note + "\n";
  for (const CheckResult& c : report.checks) {
    out += std::string(c.pass ? "  PASS " : "  FAIL ") + c.name + " [" +
           formatWord(c.witness) + "] " + c.regime + ": " +
           std::to_string(c.expressions) + " expressions, " +
           std::to_string(c.components) + " components";
    if (c.braid_components)
      out += " (" + std::to_string(*c.braid_components) + " under braid)";
    if (!c.detail.empty()) out += "; " + c.detail;
    out += "\n";
  }
  out += std::to_string(report.checks.size() - report.failures()) + "/" +
         std::to_string(report.checks.size()) + " checks passed\n";
  return out;
}

}  // namespace coxtwist
