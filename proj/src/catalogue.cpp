#include "coxtwist/catalogue.hpp"

#include <algorithm>
#include <regex>

#include "coxtwist/classify.hpp"
#include "coxtwist/error.hpp"

namespace coxtwist::catalogue {

namespace {

void requireRank(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidInput, "unsupported rank for " + what);
}

}  // namespace

CoxeterMatrix typeA(std::size_t n) {
  requireRank(n >= 1, "A_n");
  return referenceMatrix(Family::A, n);
}

CoxeterMatrix typeB(std::size_t n) {
  requireRank(n >= 2, "B_n");
  return referenceMatrix(Family::B, n);
}

CoxeterMatrix typeD(std::size_t n) {
  requireRank(n >= 4, "D_n");
  return referenceMatrix(Family::D, n);
}

CoxeterMatrix typeE(std::size_t n) {
  requireRank(n >= 6 && n <= 8, "E_n");
  return referenceMatrix(Family::E, n);
}

CoxeterMatrix typeF4() { return referenceMatrix(Family::F, 4); }

CoxeterMatrix typeH(std::size_t n) {
  requireRank(n == 3 || n == 4, "H_n");
  return referenceMatrix(Family::H, n);
}

CoxeterMatrix dihedral(unsigned m) {
  return CoxeterMatrix({{1, m}, {m, 1}});
}

CoxeterMatrix affineA(std::size_t n) {
  requireRank(n >= 1, "affine A_n");
  if (n == 1) return dihedral(kInfinity);
  const std::size_t r = n + 1;
  std::vector<std::vector<unsigned>> rows(r, std::vector<unsigned>(r, 2));
  for (std::size_t i = 0; i < r; ++i) {
    rows[i][i] = 1;
    rows[i][(i + 1) % r] = rows[(i + 1) % r][i] = 3;
  }
  return CoxeterMatrix(rows);
}

CoxeterMatrix rightAngled(
    std::size_t rank,
    const std::vector<std::pair<Generator, Generator>>& commuting) {
  std::vector<std::vector<unsigned>> rows(rank,
                                          std::vector<unsigned>(rank, kInfinity));
  for (std::size_t i = 0; i < rank; ++i) rows[i][i] = 1;
  for (auto [a, b] : commuting) {
    if (a >= rank || b >= rank || a == b)
      throw Error(ErrorCode::InvalidInput, "bad commuting pair");
    rows[a][b] = rows[b][a] = 2;
  }
  return CoxeterMatrix(rows);
}

CoxeterMatrix byName(const std::string& name) {
  static const std::regex kFinite(R"(([ABDEFH])(\d+))");
  static const std::regex kDihedral(R"(I2\((\d+|inf)\))");
  static const std::regex kAffine(R"(~A(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, kDihedral)) {
    if (m[1] == "inf") return dihedral(kInfinity);
    const unsigned bond = static_cast<unsigned>(std::stoul(m[1]));
    if (bond < 2) throw Error(ErrorCode::InvalidInput, "I2(m) needs m >= 2");
    return dihedral(bond);
  }
  if (std::regex_match(name, m, kAffine)) return affineA(std::stoul(m[1]));
  if (std::regex_match(name, m, kFinite)) {
    const std::size_t n = std::stoul(m[2]);
    switch (m[1].str()[0]) {
      case 'A': return typeA(n);
      case 'B': return typeB(n);
      case 'D': return typeD(n);
      case 'E': return typeE(n);
      case 'F': requireRank(n == 4, "F_n"); return typeF4();
      case 'H': return typeH(n);
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown Coxeter type '" + name + "'");
}

std::vector<Automorphism> diagramInvolutions(const CoxeterMatrix& matrix) {
  const std::size_t n = matrix.rank();
  std::vector<std::vector<Generator>> found;
  std::vector<int> perm(n, -1);

  auto consistent = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      if (perm[i] < 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (perm[j] < 0) continue;
        if (matrix(static_cast<Generator>(i), static_cast<Generator>(j)) !=
            matrix(static_cast<Generator>(perm[i]),
                   static_cast<Generator>(perm[j])))
          return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      found.emplace_back(perm.begin(), perm.end());
      return;
    }
    if (perm[i] >= 0) {
      self(self, i + 1);
      return;
    }
    for (std::size_t j = i; j < n; ++j) {
      if (perm[j] >= 0) continue;
      perm[i] = static_cast<int>(j);
      perm[j] = static_cast<int>(i);
      if (consistent()) self(self, i + 1);
      perm[j] = -1;
      perm[i] = -1;
    }
  };
  search(search, 0);

  std::sort(found.begin(), found.end());
  std::vector<Automorphism> out;
  out.push_back(Automorphism::identity(n));
  for (auto& p : found) {
    Automorphism theta(matrix, std::move(p));
    if (!theta.isIdentity()) out.push_back(std::move(theta));
  }
  return out;
}

}  // namespace coxtwist::catalogue
