#include "coxtwist/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "coxtwist/classify.hpp"
#include "coxtwist/error.hpp"
#include "coxtwist/system_file.hpp"

namespace coxtwist {

namespace {

VerificationReport header(const Twist& twist, const VerifyOptions& options) {
  VerificationReport report;
  report.system = options.system_name.empty()
                      ? classifyParabolic(twist.group().matrix(),
                                          GeneratorSet::all(twist.group().rank()))
                            .name()
                      : options.system_name;
  report.theta = formatTheta(twist.theta());
  return report;
}

// Runs f(i) for i < n on up to `threads` workers; results keep index order.
std::vector<CheckResult> parallelChecks(
    std::size_t n, std::size_t threads,
    const std::function<CheckResult(std::size_t)>& f) {
  std::vector<CheckResult> out(n);
  threads = std::max<std::size_t>(1, std::min(threads, n));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += threads) out[i] = f(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string componentSizes(const ExpressionGraph& graph) {
  std::string out;
  for (const auto& c : graph.components()) {
    if (!out.empty()) out += ",";
    out += std::to_string(c.size());
  }
  return "component sizes " + out;
}

// Uniformly random reduced expression, built right to left.
ShatWord sampleExpression(const Twist& twist, Element w, std::mt19937_64& rng) {
  const CoxeterGroup& group = twist.group();
  ShatWord out;
  while (w != group.identity()) {
    const auto descents = group.rightDescents(w).members();
    std::vector<long double> weights;
    for (Generator s : descents)
      weights.push_back(static_cast<long double>(
          twist.countReducedExpressions({twist.act(w, s), 0, 0})));
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    const Generator s = descents[pick(rng)];
    out.letters.push_back(s);
    w = twist.act(w, s);
  }
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

std::string describeJ(const InitialMove& move) {
  return className(move.kind) + " on " + formatSet(move.support);
}

// Elements reachable from e by ascending steps along a subword of `word`,
// under `step`; `ascends(x, s)` says whether s is an ascent of x.
template <class Ascends, class Step>
std::unordered_set<Element, ElementHash> subwordClosure(
    const std::vector<Generator>& word, Element identity, Ascends ascends,
    Step step) {
  std::unordered_set<Element, ElementHash> reach{identity};
  for (Generator s : word) {
    std::vector<Element> grown;
    for (Element x : reach)
      if (ascends(x, s)) grown.push_back(step(x, s));
    reach.insert(grown.begin(), grown.end());
  }
  return reach;
}

CheckResult wordMapCheck(std::string name) {
  CheckResult r;
  r.name = std::move(name);
  r.regime = "word-map";
  return r;
}

}  // namespace

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

void VerificationReport::merge(VerificationReport other) {
  if (system.empty()) system = std::move(other.system);
  if (theta.empty()) theta = std::move(other.theta);
  std::move(other.checks.begin(), other.checks.end(), std::back_inserter(checks));
  std::move(other.notes.begin(), other.notes.end(), std::back_inserter(notes));
}

CheckResult checkConnectivity(const Twist& twist, const TwistedInvolution& w,
                              const MoveSet& moves, Regime regime,
                              const VerifyOptions& options) {
  CheckResult r;
  r.name = "connected";
  r.witness = twist.standardExpression(w);
  r.regime = regimeName(regime);
  r.expressions = twist.countReducedExpressions(w);

  if (r.expressions <= options.cap) {
    const ExpressionGraph graph = expressionGraph(twist, w, moves);
    r.components = graph.components().size();
    r.pass = r.components == 1;
    if (!r.pass) r.detail = componentSizes(graph);
    return r;
  }

  r.sampled = true;
  const auto descents = twist.group().rightDescents(w.element).members();
  std::vector<std::size_t> parent(twist.group().rank());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t classes = descents.size();
  std::mt19937_64 rng(options.seed ^ (0x9E3779B97F4A7C15ull * (w.element.id + 1)));
  std::size_t drawn = 0;
  for (; drawn < options.samples && classes > 1; ++drawn) {
    const ShatWord e = sampleExpression(twist, w.element, rng);
    for (const Rewrite& rw : applicableMoves(twist.group(), e, moves)) {
      const std::size_t a = find(e.back()), b = find(rw.result.back());
      if (a != b) {
        parent[a] = b;
        --classes;
      }
    }
  }
  r.components = classes;
  r.pass = classes == 1;
  r.detail = "sampled " + std::to_string(drawn) +
             " expressions; relies on the checks of rank " +
             std::to_string(w.rank - 1);
  return r;
}

VerificationReport verifyWordProperty(const Twist& twist,
                                      const VerifyOptions& options) {
  VerificationReport report = header(twist, options);
  const MoveSet moves = movesFor(twist.group(), twist.theta(), Regime::Full);
  const MoveSet braid = movesFor(twist.group(), twist.theta(), Regime::Braid);
  for (const InitialMove& m : moves.initial)
    report.notes.push_back("minimal instance " + describe(m));

  const auto invs = twist.enumerateTwistedInvolutions(options.rank_bound);
  report.checks = parallelChecks(invs.size(), options.threads, [&](std::size_t i) {
    CheckResult r = checkConnectivity(twist, invs[i], moves, Regime::Full, options);
    r.name = "word-property";
    if (!r.sampled)
      r.braid_components =
          expressionGraph(twist, invs[i], braid).components().size();
    return r;
  });
  return report;
}

VerificationReport verifyNecessity(const Twist& twist,
                                   const VerifyOptions& options) {
  const CoxeterGroup& group = twist.group();
  const GeneratorSet all = GeneratorSet::all(group.rank());
  const auto instances = minimalMoveInstances(group, twist.theta());
  const auto own = std::find_if(instances.begin(), instances.end(),
                                [&](const InitialMove& m) { return m.support == all; });
  if (own == instances.end())
    throw Error(ErrorCode::HypothesisViolated,
                "necessity needs W itself to be a listed type with matching "
                "theta; this system is " +
                    classifyParabolic(group.matrix(), all).name());

  VerificationReport report = header(twist, options);
  const TwistedInvolution w0 = twist.twistedInvolution(group.longestElement(all));

  auto run = [&](const std::string& name, const std::string& regime,
                 auto keep, bool expect_connected) {
    MoveSet moves;
    for (const InitialMove& m : instances)
      if (keep(m)) moves.initial.push_back(m);
    VerifyOptions exact = options;
    exact.cap = std::max(options.cap, twist.countReducedExpressions(w0));
    CheckResult r = checkConnectivity(twist, w0, moves, Regime::Full, exact);
    r.name = name;
    r.regime = regime;
    r.pass = expect_connected ? r.components == 1 : r.components >= 2;
    report.checks.push_back(std::move(r));
  };

  const MoveClass kind = own->kind;
  run("necessity", "full-without-" + className(kind),
      [&](const InitialMove& m) { return m.kind != kind; }, false);
  for (const InitialMove& dropped : instances) {
    if (dropped.kind != kind) continue;
    run("necessity-J", "full-without-" + describeJ(dropped),
        [&](const InitialMove& m) { return m.support != dropped.support; }, false);
  }
  run("necessity-control", "full", [](const InitialMove&) { return true; }, true);
  return report;
}

VerificationReport verifyHalfBraidSufficiency(const Twist& twist,
                                              const VerifyOptions& options) {
  std::string offending;
  for (const InitialMove& m : minimalMoveInstances(twist.group(), twist.theta())) {
    if (isHalfBraid(m.kind)) continue;
    if (!offending.empty()) offending += "; ";
    offending += describeJ(m);
  }
  if (!offending.empty())
    throw Error(ErrorCode::HypothesisViolated,
                "half-braid sufficiency needs no non-dihedral list type, found " +
                    offending);

  VerificationReport report = header(twist, options);
  const MoveSet moves = movesFor(twist.group(), twist.theta(), Regime::HalfBraid);
  const auto invs = twist.enumerateTwistedInvolutions(options.rank_bound);
  report.checks = parallelChecks(invs.size(), options.threads, [&](std::size_t i) {
    CheckResult r =
        checkConnectivity(twist, invs[i], moves, Regime::HalfBraid, options);
    r.name = "half-braid";
    return r;
  });
  return report;
}

VerificationReport verifyRightAngled(const Twist& twist,
                                     const VerifyOptions& options) {
  const CoxeterGroup& group = twist.group();
  if (!group.matrix().isRightAngled())
    throw Error(ErrorCode::NotRightAngled,
                "some bond order is neither 2 nor infinity");
  if (!twist.theta().isIdentity())
    throw Error(ErrorCode::NotIdentityTwist, "theta must be the identity");

  VerificationReport report = header(twist, options);
  const std::size_t bound = options.length_bound;
  const auto ball = group.elementsUpToLength(bound);

  CheckResult reduced = wordMapCheck("right-angled-reduced");
  CheckResult defined = wordMapCheck("right-angled-well-defined");
  CheckResult ranked = wordMapCheck("right-angled-rank");
  std::unordered_map<Element, Element, ElementHash> image;
  for (Element u : ball) {
    std::optional<Element> value;
    for (const Word& word : group.enumerateReducedWords(u)) {
      ++reduced.expressions;
      const ShatWord hat{word};
      if (!twist.isReducedShat(hat) && reduced.detail.empty())
        reduced.detail = "[" + formatWord(hat) + "] is not reduced";
      const Element e = twist.evalShat(hat).element;
      if (value && *value != e && defined.detail.empty())
        defined.detail = formatWord(group.normalForm(u)) +
                         " has reduced words with different images";
      value = e;
    }
    image[u] = *value;
    const TwistedInvolution t = twist.twistedInvolution(*value);
    if (t.rank != group.length(u) && ranked.detail.empty())
      ranked.detail = "rank of the image of " + formatWord(group.normalForm(u)) +
                      " is " + std::to_string(t.rank);
  }
  defined.expressions = ranked.expressions = ball.size();
  for (CheckResult* c : {&reduced, &defined, &ranked}) c->pass = c->detail.empty();

  CheckResult bijection = wordMapCheck("right-angled-bijection");
  std::set<std::uint32_t> targets;
  for (const auto& t : twist.enumerateTwistedInvolutions(bound))
    targets.insert(t.element.id);
  std::set<std::uint32_t> hit;
  for (const auto& [u, v] : image) hit.insert(v.id);
  bijection.expressions = ball.size();
  bijection.pass = hit.size() == ball.size() && hit == targets;
  if (!bijection.pass)
    bijection.detail = std::to_string(ball.size()) + " elements, " +
                       std::to_string(hit.size()) + " distinct images, " +
                       std::to_string(targets.size()) + " involutions";

  CheckResult bruhat = wordMapCheck("right-angled-bruhat");
  bruhat.expressions = ball.size();
  for (Element w : ball) {
    const auto below = subwordClosure(
        group.normalForm(w), group.identity(),
        [&](Element x, Generator s) { return !group.isRightDescent(x, s); },
        [&](Element x, Generator s) { return group.multiply(x, s, Side::Right); });
    const auto below_image = subwordClosure(
        twist.standardExpression(twist.twistedInvolution(image.at(w))).letters,
        group.identity(),
        [&](Element x, Generator s) { return !group.isRightDescent(x, s); },
        [&](Element x, Generator s) { return twist.act(x, s); });
    std::unordered_set<Element, ElementHash> mapped;
    for (Element u : below) mapped.insert(image.at(u));
    if (mapped != below_image) {
      bruhat.detail = "interval below " + formatWord(group.normalForm(w)) +
                      " is not preserved";
      break;
    }
  }
  bruhat.pass = bruhat.detail.empty();

  for (CheckResult* c : {&reduced, &defined, &ranked, &bijection, &bruhat})
    report.checks.push_back(std::move(*c));
  report.notes.push_back("ball of radius " + std::to_string(bound) + ": " +
                         std::to_string(ball.size()) + " elements");
  return report;
}

}  // namespace coxtwist
