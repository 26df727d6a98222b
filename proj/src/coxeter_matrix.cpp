#include "coxtwist/coxeter_matrix.hpp"

#include <numeric>
#include <string>

#include "coxtwist/error.hpp"

namespace coxtwist {

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<unsigned>> entries)
    : rank_(entries.size()) {
  if (rank_ == 0)
    throw Error(ErrorCode::InvalidInput, "Coxeter matrix must be non-empty");
  if (rank_ > kMaxRank)
    throw Error(ErrorCode::InvalidInput,
                "rank exceeds " + std::to_string(kMaxRank));
  entries_.reserve(rank_ * rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (entries[i].size() != rank_)
      throw Error(ErrorCode::InvalidInput, "Coxeter matrix must be square");
    for (std::size_t j = 0; j < rank_; ++j) {
      const unsigned m = entries[i][j];
      if (m != entries[j][i])
        throw Error(ErrorCode::InvalidInput, "Coxeter matrix must be symmetric");
      if (i == j && m != 1)
        throw Error(ErrorCode::InvalidInput,
                    "Coxeter matrix diagonal entries must be 1");
      if (i != j && m == 1)
        throw Error(ErrorCode::InvalidInput,
                    "off-diagonal Coxeter matrix entries must be >= 2 or 0");
      entries_.push_back(m);
    }
  }
}

std::vector<std::vector<unsigned>> CoxeterMatrix::rows() const {
  std::vector<std::vector<unsigned>> out(rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    out[i].assign(entries_.begin() + i * rank_,
                  entries_.begin() + (i + 1) * rank_);
  return out;
}

unsigned CoxeterMatrix::conductor() const {
  unsigned n = 1;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = i + 1; j < rank_; ++j)
      if (entries_[i * rank_ + j] != kInfinity)
        n = std::lcm(n, entries_[i * rank_ + j]);
  return n;
}

bool CoxeterMatrix::isRightAngled() const {
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = i + 1; j < rank_; ++j) {
      const unsigned m = entries_[i * rank_ + j];
      if (m != 2 && m != kInfinity) return false;
    }
  return true;
}

Automorphism Automorphism::identity(std::size_t rank) {
  std::vector<Generator> perm(rank);
  std::iota(perm.begin(), perm.end(), Generator{0});
  return Automorphism(std::move(perm));
}

Automorphism::Automorphism(const CoxeterMatrix& matrix,
                           std::vector<Generator> perm)
    : perm_(std::move(perm)) {
  const std::size_t n = matrix.rank();
  if (perm_.size() != n)
    throw Error(ErrorCode::InvalidInput,
                "theta must have one entry per generator");
  for (Generator s = 0; s < n; ++s) {
    if (perm_[s] >= n)
      throw Error(ErrorCode::InvalidInput, "theta entry out of range");
    if (perm_[perm_[s]] != s)
      throw Error(ErrorCode::InvalidInput, "theta must be an involution");
  }
  for (Generator s = 0; s < n; ++s)
    for (Generator t = 0; t < n; ++t)
      if (matrix(perm_[s], perm_[t]) != matrix(s, t))
        throw Error(ErrorCode::InvalidInput,
                    "theta must preserve the Coxeter matrix");
}

bool Automorphism::isIdentity() const {
  for (std::size_t s = 0; s < perm_.size(); ++s)
    if (perm_[s] != s) return false;
  return true;
}

bool Automorphism::stabilizes(GeneratorSet set) const {
  for (Generator s : set.members())
    if (!set.contains(perm_[s])) return false;
  return true;
}

bool Automorphism::fixesPointwise(GeneratorSet set) const {
  for (Generator s : set.members())
    if (perm_[s] != s) return false;
  return true;
}

}  // namespace coxtwist
