#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxtwist/coxeter_matrix.hpp"
#include "coxtwist/word.hpp"

namespace coxtwist {

// Families of finite irreducible Coxeter systems. Rank-2 systems are A2
// (m = 3), B2 (m = 4) or I2(m) otherwise.
enum class Family { A, B, D, E, F, H, I };

// Reference indexing (0-based here, 1-based in output):
//   A_n: path s1 - s2 - ... - sn
//   B_n: s1 =4= s2 - s3 - ... - sn
//   D_n: s1 - s3, s2 - s3, s3 - s4 - ... - sn   (D4: s3 is the centre)
//   E_n: s1 - s3 - s4 - ... - sn, s2 - s4
//   F4:  s1 - s2 =4= s3 - s4
//   H_n: s1 =5= s2 - s3 (- s4)
//   I2(m): s1 =m= s2
struct ComponentType {
  Family family = Family::A;
  std::size_t rank = 0;
  // m(s1, s2) for rank-2 components, 0 otherwise.
  unsigned bond = 0;
  // labels[i] is the input generator playing the role of reference s_{i+1};
  // the lexicographically smallest of `isomorphisms`.
  std::vector<Generator> labels;
  // Every diagram isomorphism onto the reference, lexicographically sorted.
  std::vector<std::vector<Generator>> isomorphisms;

  std::string name() const;
  // Length of the longest element (number of positive roots).
  std::size_t longestLength() const;
  GeneratorSet support() const;
};

struct FiniteTypeTag {
  bool infinite = false;
  // Finite components ordered by smallest member. Empty when `infinite`.
  std::vector<ComponentType> components;

  bool isIrreducible() const { return !infinite && components.size() == 1; }
  std::size_t longestLength() const;
  // e.g. "B3", "A1 x A1", "Infinite", "trivial".
  std::string name() const;
};

CoxeterMatrix referenceMatrix(Family family, std::size_t rank, unsigned bond = 0);

// Connected components of the Coxeter graph restricted to J (edges are the
// pairs with m >= 3 or m = infinity), ordered by smallest member.
std::vector<GeneratorSet> diagramComponents(const CoxeterMatrix& matrix,
                                            GeneratorSet J);

FiniteTypeTag classifyParabolic(const CoxeterMatrix& matrix, GeneratorSet J);

}  // namespace coxtwist
