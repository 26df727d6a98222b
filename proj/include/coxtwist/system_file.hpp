#pragma once

#include <string>
#include <string_view>

#include "coxtwist/coxeter_matrix.hpp"

namespace coxtwist {

// A Coxeter matrix together with a diagram involution, as read from a
// system file:
//   {"rank": n, "matrix": [[...]], "theta": [1-based permutation], "name": ...}
// "theta" and "name" are optional; 0 in "matrix" encodes infinity.
struct CoxeterSystem {
  std::string name;
  CoxeterMatrix matrix;
  Automorphism theta;
};

// Throws InvalidInput on malformed JSON or matrix/theta constraint violations.
CoxeterSystem parseSystem(std::string_view json_text);
CoxeterSystem loadSystem(const std::string& path);
std::string systemToJson(const CoxeterSystem& system);

// "2 1 3" or "2,1,3" (1-based images of s1, s2, ...); "id" for the identity.
Automorphism parseTheta(std::string_view text, const CoxeterMatrix& matrix);
std::string formatTheta(const Automorphism& theta);

}  // namespace coxtwist
