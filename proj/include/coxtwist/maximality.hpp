#pragma once

#include <utility>
#include <vector>

#include "coxtwist/twist.hpp"

namespace coxtwist {

// w is (s,t)-maximal when some reduced expression ends with the alternating
// run ... t-hat s-hat of full length m(s,t).
//
// Closed-form test: (m = 2 and ws != theta(t) w), or
// (m >= 3 and {ws, wt} != {theta(s) w, theta(t) w}).
// Requires s != t, both right descents of w, and m(s,t) finite (InfiniteBond
// otherwise). Symmetric in s and t.
bool isMaximal(const Twist& twist, const TwistedInvolution& w, Generator s,
               Generator t);

// Same predicate decided by scanning every reduced expression of w.
bool isMaximalOracle(const Twist& twist, const TwistedInvolution& w,
                     Generator s, Generator t);

struct MaximalityGraph {
  TwistedInvolution owner;
  GeneratorSet vertices;
  // Pairs (s, t) with s < t, sorted.
  std::vector<std::pair<Generator, Generator>> edges;

  bool hasEdge(Generator s, Generator t) const;
};

MaximalityGraph maximalityGraph(const Twist& twist, const TwistedInvolution& w);

// Ordered by smallest member.
std::vector<GeneratorSet> connectedComponents(const MaximalityGraph& graph);

}  // namespace coxtwist
