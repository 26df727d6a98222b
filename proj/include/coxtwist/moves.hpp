#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coxtwist/twist.hpp"

namespace coxtwist {

// Classes of list initial moves, keyed by the type of W_J and theta_J.
enum class MoveClass {
  A3Twisted,  // A3, theta_J != id
  B3,
  D4,         // D4, theta_J = id
  H3,
  I2Fixed,    // I2(m), 3 <= m, theta_J = id
  I2Swapped,  // I2(m), 2 <= m, theta_J != id
};

std::string className(MoveClass kind);
inline bool isHalfBraid(MoveClass kind) {
  return kind == MoveClass::I2Fixed || kind == MoveClass::I2Swapped;
}

// Replace the alternating factor first, second, first, ... of length
// m(first, second) starting at `position` by second, first, ...
struct BraidMove {
  std::size_t position = 0;
  Generator first = 0;
  Generator second = 0;
};

// Replace the prefix `source` by `target`. Both are reduced expressions of
// w0(support).
struct InitialMove {
  MoveClass kind = MoveClass::I2Fixed;
  GeneratorSet support;
  // m(s1, s2) for the dihedral classes.
  unsigned bond = 0;
  ShatWord source;
  ShatWord target;

  InitialMove reversed() const {
    return InitialMove{kind, support, bond, target, source};
  }
};

using Move = std::variant<BraidMove, InitialMove>;

std::string describe(const Move& move);

struct MoveSet {
  bool braid = true;
  std::vector<InitialMove> initial;
};

enum class Regime { Braid, HalfBraid, Full };
std::string regimeName(Regime regime);

// One prefix swap per theta-stable J whose (type, theta_J) is on the list,
// in the fixed reference pairs translated through the diagram isomorphism
// (lexicographically smallest one compatible with theta). Ordered by |J|,
// then by J.
std::vector<InitialMove> minimalMoveInstances(const CoxeterGroup& group,
                                              const Automorphism& theta);

// Braid moves plus: nothing (Braid), the dihedral instances (HalfBraid), or
// every minimal instance (Full).
MoveSet movesFor(const CoxeterGroup& group, const Automorphism& theta,
                 Regime regime);

struct Rewrite {
  Move move;
  ShatWord result;
};

// Every single-move rewrite of `word`: braid moves at any position, initial
// moves (in both directions) only where the prefix matches literally.
std::vector<Rewrite> applicableMoves(const CoxeterGroup& group,
                                     const ShatWord& word,
                                     const MoveSet& moves);

enum class EdgeKind { Braid, HalfBraid, Initial };

struct ExpressionGraph {
  struct Edge {
    std::size_t a = 0;
    std::size_t b = 0;
    EdgeKind kind = EdgeKind::Braid;
  };

  TwistedInvolution owner;
  // Sorted lexicographically; edges index into this list with a < b.
  std::vector<ShatWord> vertices;
  std::vector<Edge> edges;

  std::optional<std::size_t> indexOf(const ShatWord& word) const;
  // Vertex indices per component, ordered by smallest member.
  std::vector<std::vector<std::size_t>> components() const;
};

ExpressionGraph expressionGraph(const Twist& twist, const TwistedInvolution& w,
                                const MoveSet& moves);

struct MovePath {
  struct Step {
    Move move;
    ShatWord word;
  };
  ShatWord start;
  std::vector<Step> steps;
};

// Shortest move sequence from `from` to `to`; neighbours are explored in
// lexicographic order of the rewritten word, so the result is deterministic.
// Returns nullopt when the two expressions are not connected. Throws
// NotReduced or DifferentElement on bad input.
std::optional<MovePath> connect(const Twist& twist, const ShatWord& from,
                                const ShatWord& to, const MoveSet& moves);

}  // namespace coxtwist
