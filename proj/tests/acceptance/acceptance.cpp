// One PASS/FAIL line per acceptance criterion. All comparisons are exact.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "coxtwist/catalogue.hpp"
#include "coxtwist/classify.hpp"
#include "coxtwist/error.hpp"
#include "coxtwist/maximality.hpp"
#include "coxtwist/moves.hpp"
#include "coxtwist/system_file.hpp"
#include "coxtwist/verify.hpp"

using namespace coxtwist;

namespace {

using GroupPtr = std::shared_ptr<const CoxeterGroup>;

GroupPtr group(const CoxeterMatrix& m) { return std::make_shared<const CoxeterGroup>(m); }

Automorphism perm(const GroupPtr& g, std::vector<Generator> images) {
  return Automorphism(g->matrix(), std::move(images));
}

TwistedInvolution w0(const Twist& t) {
  return t.twistedInvolution(t.group().longestElement(GeneratorSet::all(t.group().rank())));
}

ShatWord shat(std::initializer_list<Generator> letters) { return ShatWord(Word(letters)); }

CoxeterMatrix mixedRightAngled() {
  // m12 = m34 = infinity, every other pair commutes.
  return catalogue::rightAngled(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

struct Sys {
  std::string label;
  GroupPtr g;
  Automorphism theta;
  std::optional<std::size_t> rank_bound;
};

std::string thetaLabel(const Automorphism& theta) {
  return theta == Automorphism::identity(theta.size()) ? "id" : "swap";
}

std::vector<std::size_t> componentSizes(const ExpressionGraph& graph) {
  std::vector<std::size_t> out;
  for (const auto& c : graph.components()) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "{" + out + "}";
}

// The sufficiency sweep systems; reused by the property suites.
std::vector<Sys> sweepSystems() {
  std::vector<Sys> out;
  auto add = [&](const std::string& name, const CoxeterMatrix& m, std::optional<std::size_t> bound = {}) {
    const GroupPtr g = group(m);
    for (const Automorphism& theta : catalogue::diagramInvolutions(m))
      out.push_back({name + " " + thetaLabel(theta), g, theta, bound});
  };
  add("A3", catalogue::typeA(3));
  add("A4", catalogue::typeA(4));
  add("B3", catalogue::typeB(3));
  add("B4", catalogue::typeB(4));
  {
    const GroupPtr d4 = group(catalogue::typeD(4));
    out.push_back({"D4 id", d4, Automorphism::identity(4), {}});
    for (const Automorphism& theta : catalogue::diagramInvolutions(d4->matrix()))
      if (theta != Automorphism::identity(4)) {
        out.push_back({"D4 leg-swap", d4, theta, {}});
        break;
      }
  }
  add("H3", catalogue::typeH(3));
  for (unsigned m = 2; m <= 7; ++m) add("I2(" + std::to_string(m) + ")", catalogue::dihedral(m));
  add("F4", catalogue::typeF4());
  const GroupPtr a2 = group(catalogue::affineA(2));
  out.push_back({"~A2 id", a2, Automorphism::identity(3), 6});
  const GroupPtr ra = group(mixedRightAngled());
  out.push_back({"RA4 id", ra, Automorphism::identity(4), 6});
  return out;
}

VerifyOptions options(std::optional<std::size_t> rank_bound = {}) {
  VerifyOptions o;
  o.rank_bound = rank_bound;
  o.threads = std::max(1u, std::thread::hardware_concurrency());
  return o;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

Outcome criterion1() {
  Outcome r;
  const GroupPtr g = group(catalogue::typeA(3));
  const Automorphism id = Automorphism::identity(3);
  const Automorphism swap = perm(g, {2, 1, 0});
  const Twist tid(g, id), tsw(g, swap);
  const auto braid_id = expressionGraph(tid, w0(tid), movesFor(*g, id, Regime::Braid));
  const auto half_id = expressionGraph(tid, w0(tid), movesFor(*g, id, Regime::HalfBraid));
  const auto braid_sw = expressionGraph(tsw, w0(tsw), movesFor(*g, swap, Regime::Braid));
  const auto half_sw = expressionGraph(tsw, w0(tsw), movesFor(*g, swap, Regime::HalfBraid));
  const auto full_sw = expressionGraph(tsw, w0(tsw), movesFor(*g, swap, Regime::Full));
  r.require(braid_id.vertices.size() == 8, "|R(w0)| id = " + std::to_string(braid_id.vertices.size()));
  r.require(braid_sw.vertices.size() == 8, "|R(w0)| swap = " + std::to_string(braid_sw.vertices.size()));
  r.require(componentSizes(braid_id) == std::vector<std::size_t>{2, 3, 3},
            "braid id " + join(componentSizes(braid_id)));
  r.require(componentSizes(braid_sw) == std::vector<std::size_t>{2, 3, 3},
            "braid swap " + join(componentSizes(braid_sw)));
  r.require(half_id.components().size() == 1, "id + I2(3) not connected");
  r.require(half_sw.components().size() == 2, "swap + I2(2) has " + std::to_string(half_sw.components().size()));
  r.require(full_sw.components().size() == 1, "swap + A3 move not connected");
  r.detail = r.pass ? "|R(w0)| = 8, 8; braid {3,2,3} / {2,3,3}; id+I2(3): 1; swap+I2(2): 2; swap+A3: 1"
                    : r.detail;
  return r;
}

Outcome criterion2() {
  Outcome r;
  const GroupPtr g = group(catalogue::typeA(3));
  const Twist tid(g, Automorphism::identity(3)), tsw(g, perm(g, {2, 1, 0}));
  const ShatWord e = shat({0, 1, 2, 1});
  const Word a = tid.ordExpand(e), b = tsw.ordExpand(e);
  r.require(a == Word{2, 1, 0, 1, 2, 1}, "id: " + formatWord(a));
  r.require(b == Word{1, 1, 2, 0, 1, 2, 1}, "swap: " + formatWord(b));
  r.require(g->isReducedWord(a), "id expansion not reduced");
  r.require(!g->isReducedWord(b), "swap expansion not flagged");
  r.require(!tsw.isReducedShat(e), "swap S-hat word not flagged");
  if (r.pass) r.detail = "id: " + formatWord(a) + "; swap: " + formatWord(b) + " (not reduced)";
  return r;
}

Outcome criterion3() {
  Outcome r;
  const GroupPtr g = group(catalogue::typeA(3));
  const Twist tid(g, Automorphism::identity(3)), tsw(g, perm(g, {2, 1, 0}));
  const auto a = maximalityGraph(tid, w0(tid));
  const auto b = maximalityGraph(tsw, w0(tsw));
  using Edges = std::vector<std::pair<Generator, Generator>>;
  r.require(a.vertices == GeneratorSet::all(3) && a.edges == Edges{{0, 1}, {1, 2}}, "id graph differs");
  r.require(b.vertices == GeneratorSet::all(3) && b.edges == Edges{{0, 2}}, "swap graph differs");
  if (r.pass) r.detail = "id: s1-s2-s3; swap: s1-s3, s2 isolated";
  return r;
}

// Whether (type of W, theta) is one of the six listed classes.
bool listed(const CoxeterGroup& g, const Automorphism& theta) {
  const bool id = theta == Automorphism::identity(g.rank());
  if (g.rank() == 2) return g.matrix()(0, 1) >= 3 || !id;
  const std::string type = classifyParabolic(g.matrix(), GeneratorSet::all(g.rank())).name();
  return (type == "A3" && !id) || type == "B3" || type == "H3" || (type == "D4" && id);
}

Outcome criterion4() {
  Outcome r;
  std::vector<std::pair<std::string, CoxeterMatrix>> types = {
      {"A1", catalogue::typeA(1)}, {"A2", catalogue::typeA(2)}, {"A3", catalogue::typeA(3)},
      {"A4", catalogue::typeA(4)}, {"B2", catalogue::typeB(2)}, {"B3", catalogue::typeB(3)},
      {"B4", catalogue::typeB(4)}, {"D4", catalogue::typeD(4)}, {"F4", catalogue::typeF4()},
      {"H3", catalogue::typeH(3)}, {"H4", catalogue::typeH(4)}};
  for (unsigned m = 2; m <= 12; ++m) types.emplace_back("I2(" + std::to_string(m) + ")", catalogue::dihedral(m));
  std::size_t cases = 0, disconnected = 0;
  for (const auto& [name, matrix] : types) {
    const GroupPtr g = group(matrix);
    for (const Automorphism& theta : catalogue::diagramInvolutions(matrix)) {
      ++cases;
      const Twist t(g, theta);
      const auto comps = connectedComponents(maximalityGraph(t, w0(t)));
      const bool expect = listed(*g, theta);
      if (comps.size() >= 2) ++disconnected;
      r.require((comps.size() >= 2) == expect, name + " " + formatTheta(theta) + ": " +
                                                   std::to_string(comps.size()) + " components");
      r.require(comps.size() <= 2, name + " has " + std::to_string(comps.size()) + " components");
    }
  }
  if (r.pass)
    r.detail = std::to_string(cases) + " (type, theta) cases; " + std::to_string(disconnected) +
               " disconnected, all listed, all with 2 components";
  return r;
}

Outcome criterion5() {
  Outcome r;
  std::size_t checks = 0, sampled = 0;
  for (const Sys& s : sweepSystems()) {
    const Twist t(s.g, s.theta);
    const VerificationReport report = verifyWordProperty(t, options(s.rank_bound));
    checks += report.checks.size();
    for (const auto& c : report.checks) sampled += c.sampled ? 1 : 0;
    r.require(report.passed(), s.label + ": " + std::to_string(report.failures()) + " failures");
  }
  if (r.pass)
    r.detail = std::to_string(sweepSystems().size()) + " systems, " + std::to_string(checks) +
               " twisted involutions connected (" + std::to_string(sampled) + " sampled)";
  return r;
}

Outcome criterion6() {
  Outcome r;
  std::vector<std::pair<std::string, Sys>> cases;
  auto add = [&](const std::string& label, const CoxeterMatrix& m, bool swap) {
    const GroupPtr g = group(m);
    Automorphism theta = Automorphism::identity(g->rank());
    if (swap) {
      std::vector<Generator> images(g->rank());
      for (Generator i = 0; i < g->rank(); ++i) images[i] = static_cast<Generator>(g->rank() - 1 - i);
      theta = perm(g, images);
    }
    cases.push_back({label, Sys{label, g, theta, {}}});
  };
  add("A3 swap", catalogue::typeA(3), true);
  add("B3", catalogue::typeB(3), false);
  add("D4 id", catalogue::typeD(4), false);
  add("H3", catalogue::typeH(3), false);
  for (unsigned m = 3; m <= 6; ++m) add("I2(" + std::to_string(m) + ") id", catalogue::dihedral(m), false);
  for (unsigned m = 2; m <= 5; ++m) add("I2(" + std::to_string(m) + ") swap", catalogue::dihedral(m), true);
  std::string sizes;
  for (const auto& [label, s] : cases) {
    const Twist t(s.g, s.theta);
    try {
      const VerificationReport report = verifyNecessity(t, options());
      r.require(report.passed(), label + ": " + std::to_string(report.failures()) + " failures");
      sizes += (sizes.empty() ? "" : ", ") + label + " " + std::to_string(report.checks.front().components);
    } catch (const Error& e) {
      r.require(false, label + ": " + e.what());
    }
  }
  if (r.pass) r.detail = "components without the class move: " + sizes;
  return r;
}

Outcome criterion7() {
  Outcome r;
  std::vector<Sys> systems;
  const GroupPtr a3 = group(catalogue::typeA(3));
  systems.push_back({"A3 id", a3, Automorphism::identity(3), {}});
  const GroupPtr a4 = group(catalogue::typeA(4));
  for (const Automorphism& theta : catalogue::diagramInvolutions(a4->matrix()))
    systems.push_back({"A4 " + thetaLabel(theta), a4, theta, {}});
  systems.push_back({"~A2 id", group(catalogue::affineA(2)), Automorphism::identity(3), 6});
  std::size_t checks = 0;
  for (const Sys& s : systems) {
    const Twist t(s.g, s.theta);
    try {
      const VerificationReport report = verifyHalfBraidSufficiency(t, options(s.rank_bound));
      checks += report.checks.size();
      r.require(report.passed(), s.label + ": " + std::to_string(report.failures()) + " failures");
    } catch (const Error& e) {
      r.require(false, s.label + ": " + e.what());
    }
  }
  if (r.pass) r.detail = std::to_string(checks) + " expression graphs connected (A3 id, A4 id/swap, ~A2 rank <= 6)";
  return r;
}

Outcome criterion8() {
  Outcome r;
  std::string summary;
  for (const auto& [label, matrix] : {std::pair{std::string("I2(inf)"), catalogue::dihedral(kInfinity)},
                                      std::pair{std::string("RA4"), mixedRightAngled()}}) {
    const GroupPtr g = group(matrix);
    const Twist t(g, Automorphism::identity(g->rank()));
    VerifyOptions o = options();
    o.length_bound = 7;
    const VerificationReport report = verifyRightAngled(t, o);
    r.require(report.passed(), label + ": " + std::to_string(report.failures()) + " failures");
    summary += (summary.empty() ? "" : ", ") + label + " " + std::to_string(report.checks.size()) + " checks";
  }
  if (r.pass) r.detail = "length <= 7: " + summary;
  return r;
}

Outcome criterion9() {
  Outcome r;
  std::size_t maximal = 0, lengths = 0, involution = 0, steps = 0, ords = 0, exchanges = 0, bruhat = 0;
  for (const Sys& s : sweepSystems()) {
    const Twist t(s.g, s.theta);
    const CoxeterGroup& g = *s.g;
    const auto all = t.enumerateTwistedInvolutions(s.rank_bound);
    for (const TwistedInvolution& w : all) {
      const auto d = g.rightDescents(w.element).members();
      for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
          if (g.matrix()(d[i], d[j]) == kInfinity) continue;
          ++maximal;
          r.require(isMaximal(t, w, d[i], d[j]) == isMaximalOracle(t, w, d[i], d[j]),
                    s.label + ": maximality mismatch at " + formatWord(g.normalForm(w.element)));
        }
      ++lengths;
      r.require(g.length(w.element) == 2 * w.rank - w.twisted_absolute_length,
                s.label + ": length identity fails at " + formatWord(g.normalForm(w.element)));
      for (Generator a = 0; a < g.rank(); ++a) {
        ++steps;
        ShatWord longer = t.standardExpression(w);
        longer.letters.push_back(a);
        const Element next = t.act(w.element, a);
        const std::size_t rank_next = t.twistedInvolution(next).rank;
        r.require(rank_next + 1 == w.rank || rank_next == w.rank + 1, s.label + ": rank step fails");
        r.require(t.isReducedShat(longer) == !g.isRightDescent(w.element, a),
                  s.label + ": ascent/descent mismatch");
      }
      for (const ShatWord& e : *t.reducedExpressions(w)) {
        ++ords;
        r.require(g.isReducedWord(t.ordExpand(e)), s.label + ": ord of " + formatWord(e) + " not reduced");
      }
      const auto& expressions = *t.reducedExpressions(w);
      const std::size_t stride = std::max<std::size_t>(1, expressions.size() / 8);
      for (std::size_t k = 0; k < expressions.size(); k += stride)
        for (Generator a : d) {
          ++exchanges;
          const ShatWord& e = expressions[k];
          const std::size_t i = t.shatExchange(e, a);
          ShatWord shorter = e;
          shorter.letters.erase(shorter.letters.begin() + static_cast<std::ptrdiff_t>(i));
          r.require(t.isReducedShat(shorter) && t.evalShat(shorter).element == t.act(w.element, a),
                    s.label + ": exchange fails on " + formatWord(e));
        }
    }
  }
  // w s-hat s-hat = w on every element of length <= 8.
  for (const Sys& s : sweepSystems()) {
    if (s.g->rank() > 4) continue;
    const Twist t(s.g, s.theta);
    for (Element x : s.g->elementsUpToLength(8))
      for (Generator a = 0; a < s.g->rank(); ++a) {
        ++involution;
        r.require(t.act(t.act(x, a), a) == x, s.label + ": w s s != w");
      }
  }
  for (const auto& [matrix, thetas] : {std::pair{catalogue::typeA(3), 2}, std::pair{catalogue::typeB(3), 1}}) {
    const GroupPtr g = group(matrix);
    const auto involutions = catalogue::diagramInvolutions(matrix);
    for (int k = 0; k < thetas && k < static_cast<int>(involutions.size()); ++k) {
      const Twist t(g, involutions[static_cast<std::size_t>(k)]);
      const auto all = t.enumerateTwistedInvolutions(std::nullopt);
      for (const auto& u : all)
        for (const auto& w : all) {
          ++bruhat;
          r.require(t.bruhatLE(u, w) == g->bruhatLE(u.element, w.element), "twisted Bruhat mismatch");
        }
    }
  }
  std::ostringstream out;
  out << maximal << " maximality pairs, " << lengths << " length identities, " << steps << " rank steps, "
      << ords << " ord expansions, " << exchanges << " exchanges, " << involution << " w s s = w, " << bruhat
      << " Bruhat pairs";
  if (r.pass) r.detail = out.str();
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"A3 w0 expression graphs under braid, half-braid and full moves", criterion1},
      {"ord expansion of [1 2 3 2] in A3", criterion2},
      {"maximality graph of w0 in A3", criterion3},
      {"disconnected G(w0) exactly for the listed classes, rank <= 4 and I2(2..12)", criterion4},
      {"braid + minimal moves connect every R-hat(w)", criterion5},
      {"removing a class move disconnects R-hat(w0)", criterion6},
      {"braid + half-braid moves suffice without B3/D4/H3/A3-swap parabolics", criterion7},
      {"right-angled word map is a Bruhat isomorphism onto involutions", criterion8},
      {"property suites against oracles", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += outcome.pass ? 0 : 1;
    std::printf("%s %zu %s [tolerance: exact, %.1fs]: %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), seconds, outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
