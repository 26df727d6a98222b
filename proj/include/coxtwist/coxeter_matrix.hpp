#pragma once

#include <cstddef>
#include <vector>

#include "coxtwist/word.hpp"

namespace coxtwist {

// Bond order used for m(s,t) = infinity. Matches the file format.
inline constexpr unsigned kInfinity = 0;

class CoxeterMatrix {
 public:
  // Validates symmetry, unit diagonal and off-diagonal entries >= 2 (or 0).
  explicit CoxeterMatrix(std::vector<std::vector<unsigned>> entries);

  std::size_t rank() const { return rank_; }
  unsigned operator()(Generator s, Generator t) const {
    return entries_[s * rank_ + t];
  }
  bool isInfinite(Generator s, Generator t) const {
    return (*this)(s, t) == kInfinity;
  }
  std::vector<std::vector<unsigned>> rows() const;
  // Least common multiple of all finite off-diagonal entries (1 if none).
  unsigned conductor() const;
  bool isRightAngled() const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<unsigned> entries_;
};

// A permutation of S that is an involution and preserves bond orders.
class Automorphism {
 public:
  static Automorphism identity(std::size_t rank);
  // Throws InvalidInput unless `perm` is an involutive diagram automorphism.
  Automorphism(const CoxeterMatrix& matrix, std::vector<Generator> perm);

  Generator operator()(Generator s) const { return perm_[s]; }
  std::size_t size() const { return perm_.size(); }
  bool isIdentity() const;
  bool stabilizes(GeneratorSet set) const;
  bool fixesPointwise(GeneratorSet set) const;
  const std::vector<Generator>& permutation() const { return perm_; }

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  explicit Automorphism(std::vector<Generator> perm) : perm_(std::move(perm)) {}
  std::vector<Generator> perm_;
};

}  // namespace coxtwist
