#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxtwist/maximality.hpp"
#include "helpers.hpp"

using namespace coxtwist;
using testing::toLetters;

namespace {

struct System {
  std::string name;
  std::vector<Generator> theta;
};

const std::vector<System> kSystems{
    {"A3", {0, 1, 2}}, {"A3", {2, 1, 0}},       {"B3", {0, 1, 2}},
    {"D4", {0, 1, 2, 3}}, {"D4", {0, 3, 2, 1}}, {"H3", {0, 1, 2}},
    {"A4", {3, 2, 1, 0}}, {"I2(2)", {0, 1}},    {"I2(3)", {1, 0}},
    {"I2(4)", {0, 1}},    {"I2(5)", {1, 0}},    {"I2(6)", {0, 1}},
    {"I2(7)", {1, 0}},    {"I2(7)", {0, 1}}};

// Definition-level oracle on the floating-point model: some shortest path
// to w ends with the alternating run ... t s of length m.
bool oracleMaximal(const oracle::FloatTwist& t, int w, int s, int u, unsigned m) {
  for (const auto& e : t.expressions(w)) {
    if (e.size() < m) continue;
    bool ok = true;
    for (unsigned k = 0; k < m && ok; ++k)
      ok = e[e.size() - 1 - k] == (k % 2 == 0 ? s : u);
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("maximality in A3 at the longest element") {
  const auto a3 = testing::group("A3");
  const Twist id(a3, Automorphism::identity(3));
  const TwistedInvolution w0 = testing::w0(id);
  CHECK(isMaximal(id, w0, 0, 1));
  CHECK(isMaximal(id, w0, 1, 2));
  CHECK(!isMaximal(id, w0, 0, 2));
  CHECK(isMaximalOracle(id, w0, 0, 1));
  CHECK(!isMaximalOracle(id, w0, 0, 2));
  const MaximalityGraph path = maximalityGraph(id, w0);
  CHECK(path.vertices == GeneratorSet::all(3));
  CHECK(path.edges == std::vector<std::pair<Generator, Generator>>{{0, 1}, {1, 2}});
  CHECK(connectedComponents(path).size() == 1);

  const Twist swap(a3, testing::a3Swap(*a3));
  const TwistedInvolution v0 = testing::w0(swap);
  CHECK(isMaximal(swap, v0, 0, 2));
  CHECK(!isMaximal(swap, v0, 0, 1));
  const MaximalityGraph single = maximalityGraph(swap, v0);
  CHECK(single.edges == std::vector<std::pair<Generator, Generator>>{{0, 2}});
  CHECK(single.hasEdge(2, 0));
  CHECK(connectedComponents(single) ==
        std::vector<GeneratorSet>{GeneratorSet::of({0, 2}), GeneratorSet::of({1})});
}

TEST_CASE("maximality graphs of small elements") {
  const auto a3 = testing::group("A3");
  const Twist id(a3, Automorphism::identity(3));
  const MaximalityGraph empty = maximalityGraph(id, id.evalShat(ShatWord{}));
  CHECK(empty.vertices.empty());
  CHECK(connectedComponents(empty).empty());
  const MaximalityGraph one = maximalityGraph(id, id.evalShat(ShatWord{0}));
  CHECK(one.edges.empty());
  CHECK(connectedComponents(one).size() == 1);
}

TEST_CASE("maximality argument errors") {
  const auto a3 = testing::group("A3");
  const Twist id(a3, Automorphism::identity(3));
  const TwistedInvolution w0 = testing::w0(id);
  CHECK_ERROR_CODE(isMaximal(id, w0, 1, 1), ErrorCode::InvalidInput);
  CHECK_ERROR_CODE(isMaximal(id, w0, 0, 3), ErrorCode::InvalidInput);
  CHECK_ERROR_CODE(isMaximal(id, id.evalShat(ShatWord{0}), 0, 1), ErrorCode::InvalidInput);
  const auto inf = testing::group("I2(inf)");
  const Twist tinf(inf, Automorphism::identity(2));
  CHECK_ERROR_CODE(isMaximal(tinf, tinf.evalShat(ShatWord{0, 1}), 0, 1), ErrorCode::InfiniteBond);
  CHECK_ERROR_CODE(isMaximalOracle(tinf, tinf.evalShat(ShatWord{0}), 0, 1), ErrorCode::InfiniteBond);
}

TEST_CASE("closed form, library oracle and definition agree everywhere") {
  for (const System& sys : kSystems) {
    CAPTURE(sys.name);
    const auto group = testing::group(sys.name);
    const Automorphism theta(group->matrix(), sys.theta);
    const Twist twist(group, theta);
    const oracle::FloatGroup g(group->matrix().rows(), 1000);
    const oracle::FloatTwist t(g, testing::permOf(theta));
    for (const auto& w : twist.enumerateTwistedInvolutions(std::nullopt)) {
      const int o = g.evaluate(toLetters(group->normalForm(w.element)));
      const auto d = group->rightDescents(w.element).members();
      for (Generator s : d)
        for (Generator u : d) {
          if (s == u) continue;
          const bool closed = isMaximal(twist, w, s, u);
          CHECK(closed == isMaximal(twist, w, u, s));
          CHECK(closed == isMaximalOracle(twist, w, s, u));
          CHECK(closed == oracleMaximal(t, o, s, u, group->matrix()(s, u)));
        }
    }
  }
}

TEST_CASE("swapping a longest alternating suffix stays in R-hat") {
  for (const System& sys : kSystems) {
    CAPTURE(sys.name);
    const auto group = testing::group(sys.name);
    const Twist twist(group, Automorphism(group->matrix(), sys.theta));
    for (const auto& w : twist.enumerateTwistedInvolutions(std::nullopt)) {
      const auto& list = *twist.reducedExpressions(w);
      const auto d = group->rightDescents(w.element).members();
      auto run = [](const ShatWord& e, Generator s, Generator u) {
        std::size_t k = 0;
        while (k < e.size() && e[e.size() - 1 - k] == (k % 2 == 0 ? s : u)) ++k;
        return k;
      };
      for (Generator s : d)
        for (Generator u : d) {
          if (s == u) continue;
          std::size_t alpha = 0;
          for (const ShatWord& e : list) alpha = std::max(alpha, run(e, s, u));
          for (const ShatWord& e : list) {
            if (run(e, s, u) != alpha) continue;
            ShatWord swapped = e;
            for (std::size_t k = e.size() - alpha; k < e.size(); ++k)
              swapped.letters[k] = e[k] == s ? u : s;
            CHECK(std::binary_search(list.begin(), list.end(), swapped));
          }
        }
    }
  }
}

TEST_CASE("descent identities for ws versus theta(s')w") {
  for (const System& sys : kSystems) {
    CAPTURE(sys.name);
    const auto group = testing::group(sys.name);
    const Automorphism theta(group->matrix(), sys.theta);
    const Twist twist(group, theta);
    for (const auto& w : twist.enumerateTwistedInvolutions(std::nullopt)) {
      const Element x = w.element;
      for (Generator s = 0; s < group->rank(); ++s)
        for (Generator u = 0; u < group->rank(); ++u) {
          const Element xs = group->multiply(x, s, Side::Right);
          const Element xu = group->multiply(x, u, Side::Right);
          const Element tu_x = group->multiply(x, theta(u), Side::Left);
          const Element ts_x = group->multiply(x, theta(s), Side::Left);
          if (xs == tu_x) CHECK(xu == ts_x);
          const auto d = group->rightDescents(x);
          if (s != u && d.contains(s) && d.contains(u) && !isMaximal(twist, w, s, u))
            CHECK((xs == ts_x) == (xu == tu_x));
        }
    }
  }
}

TEST_CASE("disconnected graphs only occur at longest parabolic elements") {
  for (const System& sys : kSystems) {
    CAPTURE(sys.name);
    const auto group = testing::group(sys.name);
    const Twist twist(group, Automorphism(group->matrix(), sys.theta));
    for (const auto& w : twist.enumerateTwistedInvolutions(std::nullopt)) {
      if (connectedComponents(maximalityGraph(twist, w)).size() < 2) continue;
      const GeneratorSet support = group->support(w.element);
      CHECK(support == group->rightDescents(w.element));
      CHECK(w.element == group->longestElement(support));
    }
  }
}

TEST_CASE("G(w0, theta) is the complement of the Coxeter graph when theta is w0-conjugation") {
  for (const System& sys : {System{"A3", {2, 1, 0}}, System{"B3", {0, 1, 2}},
                            System{"D4", {0, 1, 2, 3}}, System{"H3", {0, 1, 2}}}) {
    CAPTURE(sys.name);
    const auto group = testing::group(sys.name);
    const Automorphism theta(group->matrix(), sys.theta);
    const Twist twist(group, theta);
    const TwistedInvolution w0 = testing::w0(twist);
    for (Generator s = 0; s < group->rank(); ++s) {
      const Element conj = group->product(group->product(w0.element, group->generator(s)), w0.element);
      REQUIRE(conj == group->generator(theta(s)));
    }
    const MaximalityGraph graph = maximalityGraph(twist, w0);
    for (Generator s = 0; s < group->rank(); ++s)
      for (Generator u = s + 1; u < group->rank(); ++u)
        CHECK(graph.hasEdge(s, u) == (group->matrix()(s, u) == 2));
  }
}
