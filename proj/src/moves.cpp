#include "coxtwist/moves.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "coxtwist/classify.hpp"
#include "coxtwist/error.hpp"

namespace coxtwist {

namespace {

// Reference prefix pairs, 0-based in the reference indexing of classify.hpp.
struct ReferencePair {
  std::vector<Generator> source;
  std::vector<Generator> target;
};

const ReferencePair kA3{{1, 2, 0, 1}, {1, 2, 1, 0}};
const ReferencePair kB3{{0, 1, 2, 0, 1, 0}, {0, 1, 2, 1, 0, 1}};
const ReferencePair kD4{{3, 1, 0, 2, 1, 0, 2, 3}, {3, 1, 0, 2, 1, 0, 3, 2}};
const ReferencePair kH3{{0, 2, 1, 0, 2, 1, 0, 2, 1},
                        {0, 2, 1, 0, 2, 1, 0, 1, 2}};

ShatWord alternating(Generator a, Generator b, std::size_t length) {
  ShatWord out;
  for (std::size_t i = 0; i < length; ++i)
    out.letters.push_back(i % 2 == 0 ? a : b);
  return out;
}

// theta conjugated into reference positions: position i maps to the
// position of theta(labels[i]).
std::vector<Generator> conjugate(const std::vector<Generator>& labels,
                                 const Automorphism& theta) {
  std::vector<Generator> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto it = std::find(labels.begin(), labels.end(), theta(labels[i]));
    out[i] = static_cast<Generator>(it - labels.begin());
  }
  return out;
}

std::optional<InitialMove> instanceFor(const CoxeterGroup& group,
                                       const Automorphism& theta,
                                       GeneratorSet J) {
  const auto& matrix = group.matrix();
  const auto members = J.members();
  const bool fixed = theta.fixesPointwise(J);

  if (members.size() == 2) {
    const Generator a = members[0], b = members[1];
    const unsigned m = matrix(a, b);
    if (m == kInfinity) return std::nullopt;
    if (fixed) {
      if (m < 3) return std::nullopt;  // I2(2) with theta_J = id is a braid move
      const std::size_t len = (m + 2) / 2;
      return InitialMove{MoveClass::I2Fixed, J, m, alternating(a, b, len),
                         alternating(b, a, len)};
    }
    const std::size_t len = (m + 1) / 2;
    return InitialMove{MoveClass::I2Swapped, J, m, alternating(a, b, len),
                       alternating(b, a, len)};
  }

  const FiniteTypeTag tag = classifyParabolic(matrix, J);
  if (!tag.isIrreducible()) return std::nullopt;
  const ComponentType& type = tag.components.front();

  const ReferencePair* ref = nullptr;
  MoveClass kind{};
  std::vector<Generator> ref_theta(type.rank);
  std::iota(ref_theta.begin(), ref_theta.end(), Generator{0});
  if (type.family == Family::A && type.rank == 3 && !fixed) {
    ref = &kA3;
    kind = MoveClass::A3Twisted;
    ref_theta = {2, 1, 0};
  } else if (type.family == Family::B && type.rank == 3) {
    ref = &kB3;
    kind = MoveClass::B3;
  } else if (type.family == Family::D && type.rank == 4 && fixed) {
    ref = &kD4;
    kind = MoveClass::D4;
  } else if (type.family == Family::H && type.rank == 3) {
    ref = &kH3;
    kind = MoveClass::H3;
  } else {
    return std::nullopt;
  }

  for (const auto& labels : type.isomorphisms) {
    if (conjugate(labels, theta) != ref_theta) continue;
    InitialMove move{kind, J, 0, {}, {}};
    for (Generator g : ref->source) move.source.letters.push_back(labels[g]);
    for (Generator g : ref->target) move.target.letters.push_back(labels[g]);
    return move;
  }
  throw std::logic_error("no theta-compatible labelling for " + type.name());
}

std::size_t bitsOrder(GeneratorSet s) { return s.size(); }

}  // namespace

std::string className(MoveClass kind) {
  switch (kind) {
    case MoveClass::A3Twisted: return "A3-swap";
    case MoveClass::B3: return "B3";
    case MoveClass::D4: return "D4";
    case MoveClass::H3: return "H3";
    case MoveClass::I2Fixed: return "I2-id";
    case MoveClass::I2Swapped: return "I2-swap";
  }
  return "?";
}

std::string regimeName(Regime regime) {
  switch (regime) {
    case Regime::Braid: return "braid";
    case Regime::HalfBraid: return "halfbraid";
    case Regime::Full: return "full";
  }
  return "?";
}

std::string describe(const Move& move) {
  if (const auto* b = std::get_if<BraidMove>(&move)) {
    return "braid(s" + std::to_string(b->first + 1) + ",s" +
           std::to_string(b->second + 1) + ") at " +
           std::to_string(b->position + 1);
  }
  const auto& m = std::get<InitialMove>(move);
  std::string name = className(m.kind);
  if (isHalfBraid(m.kind))
    name = "I2(" + std::to_string(m.bond) +
           (m.kind == MoveClass::I2Fixed ? ")-id" : ")-swap");
  return name + " [" + formatWord(m.source) + "] -> [" + formatWord(m.target) +
         "]";
}

std::vector<InitialMove> minimalMoveInstances(const CoxeterGroup& group,
                                              const Automorphism& theta) {
  const std::size_t n = group.rank();
  std::vector<GeneratorSet> subsets;
  // Every listed type has at most four generators.
  auto choose = [&](auto&& self, std::size_t start, GeneratorSet current) {
    if (current.size() >= 2 && theta.stabilizes(current))
      subsets.push_back(current);
    if (current.size() == 4) return;
    for (std::size_t g = start; g < n; ++g) {
      GeneratorSet next = current;
      next.insert(static_cast<Generator>(g));
      self(self, g + 1, next);
    }
  };
  choose(choose, 0, GeneratorSet{});
  std::sort(subsets.begin(), subsets.end(), [](GeneratorSet a, GeneratorSet b) {
    return bitsOrder(a) != bitsOrder(b) ? bitsOrder(a) < bitsOrder(b)
                                        : a.members() < b.members();
  });

  std::vector<InitialMove> out;
  for (GeneratorSet J : subsets)
    if (auto move = instanceFor(group, theta, J)) out.push_back(std::move(*move));
  return out;
}

MoveSet movesFor(const CoxeterGroup& group, const Automorphism& theta,
                 Regime regime) {
  MoveSet moves;
  if (regime == Regime::Braid) return moves;
  for (auto& m : minimalMoveInstances(group, theta))
    if (regime == Regime::Full || isHalfBraid(m.kind))
      moves.initial.push_back(std::move(m));
  return moves;
}

std::vector<Rewrite> applicableMoves(const CoxeterGroup& group,
                                     const ShatWord& word,
                                     const MoveSet& moves) {
  std::vector<Rewrite> out;
  const auto& matrix = group.matrix();
  const auto& w = word.letters;
  if (moves.braid) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const Generator a = w[i], b = w[i + 1];
      if (a == b) continue;
      const unsigned m = matrix(a, b);
      if (m == kInfinity || i + m > w.size()) continue;
      bool alternating = true;
      for (std::size_t j = 2; j < m && alternating; ++j)
        alternating = w[i + j] == (j % 2 == 0 ? a : b);
      if (!alternating) continue;
      ShatWord next = word;
      for (std::size_t j = 0; j < m; ++j) next.letters[i + j] = j % 2 == 0 ? b : a;
      out.push_back({BraidMove{i, a, b}, std::move(next)});
    }
  }
  auto try_prefix = [&](const InitialMove& move) {
    const auto& src = move.source.letters;
    if (src.size() > w.size() || !std::equal(src.begin(), src.end(), w.begin()))
      return;
    ShatWord next = move.target;
    next.letters.insert(next.letters.end(),
                        w.begin() + static_cast<std::ptrdiff_t>(src.size()),
                        w.end());
    out.push_back({move, std::move(next)});
  };
  for (const InitialMove& move : moves.initial) {
    try_prefix(move);
    try_prefix(move.reversed());
  }
  return out;
}

std::optional<std::size_t> ExpressionGraph::indexOf(const ShatWord& word) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), word);
  if (it == vertices.end() || *it != word) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::vector<std::size_t>> ExpressionGraph::components() const {
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) {
    const std::size_t ra = find(e.a), rb = find(e.b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < vertices.size(); ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

ExpressionGraph expressionGraph(const Twist& twist, const TwistedInvolution& w,
                                const MoveSet& moves) {
  ExpressionGraph graph;
  graph.owner = w;
  graph.vertices = *twist.reducedExpressions(w);

  // Keyed by endpoint pair; braid beats half-braid beats other initial.
  std::map<std::pair<std::size_t, std::size_t>, EdgeKind> edges;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    for (const Rewrite& r :
         applicableMoves(twist.group(), graph.vertices[i], moves)) {
      const auto j = graph.indexOf(r.result);
      if (!j)
        throw std::logic_error("move left the set of reduced expressions: " +
                               formatWord(graph.vertices[i]) + " -> " +
                               formatWord(r.result));
      if (*j == i) continue;
      EdgeKind kind = EdgeKind::Braid;
      if (const auto* m = std::get_if<InitialMove>(&r.move))
        kind = isHalfBraid(m->kind) ? EdgeKind::HalfBraid : EdgeKind::Initial;
      const auto key = std::minmax(i, *j);
      auto [it, inserted] = edges.emplace(key, kind);
      if (!inserted && kind < it->second) it->second = kind;
    }
  }
  for (const auto& [key, kind] : edges)
    graph.edges.push_back({key.first, key.second, kind});
  return graph;
}

std::optional<MovePath> connect(const Twist& twist, const ShatWord& from,
                                const ShatWord& to, const MoveSet& moves) {
  for (const ShatWord* word : {&from, &to})
    if (!twist.isReducedShat(*word))
      throw Error(ErrorCode::NotReduced, formatWord(*word) + " is not reduced");
  if (twist.evalShat(from).element != twist.evalShat(to).element)
    throw Error(ErrorCode::DifferentElement,
                "[" + formatWord(from) + "] and [" + formatWord(to) +
                    "] represent different twisted involutions");

  struct Visit {
    ShatWord parent;
    std::optional<Move> move;
  };
  std::map<ShatWord, Visit> seen{{from, Visit{}}};
  std::queue<ShatWord> frontier;
  frontier.push(from);
  while (!frontier.empty() && !seen.contains(to)) {
    const ShatWord current = std::move(frontier.front());
    frontier.pop();
    auto rewrites = applicableMoves(twist.group(), current, moves);
    std::stable_sort(rewrites.begin(), rewrites.end(),
                     [](const Rewrite& a, const Rewrite& b) {
                       return a.result < b.result;
                     });
    for (Rewrite& r : rewrites) {
      if (seen.contains(r.result)) continue;
      seen.emplace(r.result, Visit{current, r.move});
      frontier.push(std::move(r.result));
    }
  }
  if (!seen.contains(to)) return std::nullopt;

  MovePath path;
  path.start = from;
  for (ShatWord cur = to; cur != from;) {
    const Visit& v = seen.at(cur);
    path.steps.push_back({*v.move, cur});
    cur = v.parent;
  }
  std::reverse(path.steps.begin(), path.steps.end());
  return path;
}

}  // namespace coxtwist
