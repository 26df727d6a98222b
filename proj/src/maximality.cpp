#include "coxtwist/maximality.hpp"

#include <algorithm>

#include "coxtwist/error.hpp"

namespace coxtwist {

namespace {

void checkPair(const Twist& twist, const TwistedInvolution& w, Generator s,
               Generator t) {
  const CoxeterGroup& group = twist.group();
  if (s >= group.rank() || t >= group.rank())
    throw Error(ErrorCode::InvalidInput, "generator out of range");
  if (s == t)
    throw Error(ErrorCode::InvalidInput, "maximality needs distinct generators");
  if (group.matrix().isInfinite(s, t))
    throw Error(ErrorCode::InfiniteBond,
                "m(s" + std::to_string(s + 1) + ",s" + std::to_string(t + 1) +
                    ") is infinite");
  const GeneratorSet descents = group.rightDescents(w.element);
  if (!descents.contains(s) || !descents.contains(t))
    throw Error(ErrorCode::InvalidInput,
                "maximality is only defined for pairs of right descents");
}

}  // namespace

bool isMaximal(const Twist& twist, const TwistedInvolution& w, Generator s,
               Generator t) {
  checkPair(twist, w, s, t);
  if (t < s) std::swap(s, t);
  const CoxeterGroup& group = twist.group();
  const Automorphism& theta = twist.theta();
  const Element ws = group.multiply(w.element, s, Side::Right);
  const Element wt = group.multiply(w.element, t, Side::Right);
  const Element theta_s_w = group.multiply(w.element, theta(s), Side::Left);
  const Element theta_t_w = group.multiply(w.element, theta(t), Side::Left);
  if (group.matrix()(s, t) == 2) return ws != theta_t_w;
  const bool same_sets = (ws == theta_s_w && wt == theta_t_w) ||
                         (ws == theta_t_w && wt == theta_s_w);
  return !same_sets;
}

bool isMaximalOracle(const Twist& twist, const TwistedInvolution& w,
                     Generator s, Generator t) {
  checkPair(twist, w, s, t);
  const unsigned m = twist.group().matrix()(s, t);
  for (const ShatWord& e : *twist.reducedExpressions(w)) {
    if (e.size() < m) continue;
    bool run = true;
    for (std::size_t j = 0; j < m && run; ++j)
      run = e[e.size() - 1 - j] == (j % 2 == 0 ? s : t);
    if (run) return true;
  }
  return false;
}

bool MaximalityGraph::hasEdge(Generator s, Generator t) const {
  if (t < s) std::swap(s, t);
  return std::binary_search(edges.begin(), edges.end(), std::pair{s, t});
}

MaximalityGraph maximalityGraph(const Twist& twist, const TwistedInvolution& w) {
  MaximalityGraph graph{w, twist.group().rightDescents(w.element), {}};
  const auto members = graph.vertices.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (isMaximal(twist, w, members[i], members[j]))
        graph.edges.emplace_back(members[i], members[j]);
  return graph;
}

std::vector<GeneratorSet> connectedComponents(const MaximalityGraph& graph) {
  std::vector<GeneratorSet> out;
  GeneratorSet left = graph.vertices;
  while (!left.empty()) {
    GeneratorSet comp;
    std::vector<Generator> stack{left.first()};
    comp.insert(left.first());
    while (!stack.empty()) {
      const Generator v = stack.back();
      stack.pop_back();
      for (const auto& [a, b] : graph.edges) {
        const Generator other = a == v ? b : b == v ? a : v;
        if (other != v && !comp.contains(other)) {
          comp.insert(other);
          stack.push_back(other);
        }
      }
    }
    out.push_back(comp);
    left = GeneratorSet(left.bits() & ~comp.bits());
  }
  return out;
}

}  // namespace coxtwist
