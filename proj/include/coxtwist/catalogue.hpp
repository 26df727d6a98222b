#pragma once

#include <string>
#include <vector>

#include "coxtwist/coxeter_matrix.hpp"

namespace coxtwist::catalogue {

// Finite types in the reference indexing of classify.hpp.
CoxeterMatrix typeA(std::size_t n);
CoxeterMatrix typeB(std::size_t n);
CoxeterMatrix typeD(std::size_t n);
CoxeterMatrix typeE(std::size_t n);
CoxeterMatrix typeF4();
CoxeterMatrix typeH(std::size_t n);
// Rank 2 with m(s1, s2) = m; kInfinity gives the infinite dihedral group.
CoxeterMatrix dihedral(unsigned m);
// Affine A~_n: a cycle on n + 1 generators (n >= 2), or m = infinity for n = 1.
CoxeterMatrix affineA(std::size_t n);
// m(s, t) = 2 if {s, t} is an edge of `graph`, infinity otherwise.
CoxeterMatrix rightAngled(std::size_t rank,
                          const std::vector<std::pair<Generator, Generator>>& commuting);

// Parses names such as "A3", "B4", "D4", "E6", "F4", "H3", "I2(5)",
// "I2(inf)", "~A2". Throws InvalidInput.
CoxeterMatrix byName(const std::string& name);

// Every involutive diagram automorphism, identity first, then
// lexicographically by permutation.
std::vector<Automorphism> diagramInvolutions(const CoxeterMatrix& matrix);

}  // namespace coxtwist::catalogue
