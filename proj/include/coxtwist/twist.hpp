#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coxtwist/coxeter_group.hpp"

namespace coxtwist {

// An element w with theta(w) = w^-1, together with its rank (minimal
// hatted-expression length) and twisted absolute length.
struct TwistedInvolution {
  Element element;
  std::size_t rank = 0;
  std::size_t twisted_absolute_length = 0;

  friend bool operator==(const TwistedInvolution& a,
                         const TwistedInvolution& b) {
    return a.element == b.element;
  }
};

// The right action of the free monoid on S-hat, for one fixed theta:
//
//   w * s-hat = w s          if theta(s) w s = w,
//               theta(s) w s otherwise.
//
// Rank, twisted absolute length and the sets of reduced expressions are
// memoised per element; the memo tables are internally synchronised.
class Twist {
 public:
  Twist(std::shared_ptr<const CoxeterGroup> group, Automorphism theta);

  Twist(const Twist&) = delete;
  Twist& operator=(const Twist&) = delete;

  const CoxeterGroup& group() const { return *group_; }
  std::shared_ptr<const CoxeterGroup> sharedGroup() const { return group_; }
  const Automorphism& theta() const { return theta_; }

  Element act(Element w, Generator s) const;
  // True iff theta(s) w s = w, i.e. the action multiplies by s only.
  bool isFirstBranch(Element w, Generator s) const;

  TwistedInvolution evalShat(const ShatWord& word) const;
  // The word over S obtained by expanding each letter of `word`: a first
  // branch step appends s; otherwise theta(s) is prepended and s appended.
  Word ordExpand(const ShatWord& word) const;
  bool isReducedShat(const ShatWord& word) const;

  bool isTwistedInvolution(Element w) const;
  // Throws InvalidInput unless theta(w) = w^-1.
  TwistedInvolution twistedInvolution(Element w) const;

  // {s : rank(w * s-hat) = rank(w) - 1}.
  GeneratorSet shatRightDescents(const TwistedInvolution& w) const;
  // Smallest 0-based position i such that deleting letter i yields a reduced
  // expression for eval(word) * s-hat. Throws NotReduced / NotDescent.
  std::size_t shatExchange(const ShatWord& word, Generator s) const;
  // Number of first-branch steps along `word`. Throws NotReduced.
  std::size_t twistedAbsoluteLength(const ShatWord& word) const;

  // Breadth-first orbit of e, stratified by rank and sorted by normal form
  // within each rank. Without a bound the group must be finite.
  std::vector<TwistedInvolution> enumerateTwistedInvolutions(
      std::optional<std::size_t> max_rank) const;

  // All reduced expressions of w, sorted lexicographically.
  std::shared_ptr<const std::vector<ShatWord>> reducedExpressions(
      const TwistedInvolution& w) const;
  std::uint64_t countReducedExpressions(const TwistedInvolution& w) const;
  // A canonical reduced expression: peel off the smallest right descent.
  ShatWord standardExpression(const TwistedInvolution& w) const;

  // Subword criterion on the standard expression of w.
  bool bruhatLE(const TwistedInvolution& u, const TwistedInvolution& w) const;

  void clearCaches() const;

 private:
  std::size_t rankOf(Element w) const;
  std::size_t absoluteLengthOf(Element w) const;
  std::shared_ptr<const std::vector<ShatWord>> expressionsOf(Element w) const;

  std::shared_ptr<const CoxeterGroup> group_;
  Automorphism theta_;

  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint32_t, std::size_t> rank_memo_;
  mutable std::unordered_map<std::uint32_t, std::size_t> abs_memo_;
  mutable std::unordered_map<std::uint32_t, std::uint64_t> count_memo_;
  mutable std::unordered_map<std::uint32_t,
                             std::shared_ptr<const std::vector<ShatWord>>>
      expression_memo_;
};

}  // namespace coxtwist
