#include "coxtwist/classify.hpp"

#include <algorithm>
#include <optional>

namespace coxtwist {

namespace {

bool isEdge(unsigned m) { return m == kInfinity || m >= 3; }

std::vector<std::vector<unsigned>> identityRows(std::size_t n) {
  std::vector<std::vector<unsigned>> rows(n, std::vector<unsigned>(n, 2));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return rows;
}

void bond(std::vector<std::vector<unsigned>>& rows, std::size_t i,
          std::size_t j, unsigned m) {
  rows[i][j] = m;
  rows[j][i] = m;
}

// Every bijection from reference positions to `vertices` under which the
// restricted matrix equals `ref`, in lexicographic order.
std::vector<std::vector<Generator>> findIsomorphisms(
    const CoxeterMatrix& matrix, const std::vector<Generator>& vertices,
    const CoxeterMatrix& ref) {
  const std::size_t k = vertices.size();
  std::vector<std::vector<Generator>> found;
  std::vector<Generator> labels;
  std::vector<bool> used(k, false);

  auto extend = [&](auto&& self) -> void {
    const std::size_t pos = labels.size();
    if (pos == k) {
      found.push_back(labels);
      return;
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (used[c]) continue;
      const Generator v = vertices[c];
      bool ok = true;
      for (std::size_t q = 0; q < pos && ok; ++q)
        ok = matrix(labels[q], v) == ref(static_cast<Generator>(q),
                                         static_cast<Generator>(pos));
      if (!ok) continue;
      used[c] = true;
      labels.push_back(v);
      self(self);
      labels.pop_back();
      used[c] = false;
    }
  };
  extend(extend);
  return found;
}

struct Shape {
  Family family;
  std::size_t rank;
  unsigned bond = 0;
};

// Recognises a connected component; nullopt means not of finite type.
std::optional<Shape> recognise(const CoxeterMatrix& matrix,
                               const std::vector<Generator>& vertices) {
  const std::size_t k = vertices.size();
  if (k == 1) return Shape{Family::A, 1};

  std::size_t edges = 0;
  std::vector<std::size_t> degree(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      const unsigned m = matrix(vertices[a], vertices[b]);
      if (m == kInfinity) return std::nullopt;
      if (isEdge(m)) {
        ++edges;
        ++degree[a];
        ++degree[b];
      }
    }

  if (k == 2) {
    const unsigned m = matrix(vertices[0], vertices[1]);
    if (m == 3) return Shape{Family::A, 2, 3};
    if (m == 4) return Shape{Family::B, 2, 4};
    return Shape{Family::I, 2, m};
  }
  if (edges != k - 1) return std::nullopt;  // contains a cycle

  const std::size_t max_degree = *std::max_element(degree.begin(), degree.end());
  if (max_degree > 3) return std::nullopt;

  if (max_degree == 3) {
    if (std::count(degree.begin(), degree.end(), 3) != 1) return std::nullopt;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) {
        const unsigned m = matrix(vertices[a], vertices[b]);
        if (isEdge(m) && m != 3) return std::nullopt;
      }
    // Arm lengths from the branch vertex.
    const std::size_t centre =
        static_cast<std::size_t>(std::find(degree.begin(), degree.end(), 3) -
                                 degree.begin());
    std::vector<std::size_t> arms;
    for (std::size_t start = 0; start < k; ++start) {
      if (!isEdge(matrix(vertices[centre], vertices[start])) || start == centre)
        continue;
      std::size_t len = 1, prev = centre, cur = start;
      while (true) {
        std::optional<std::size_t> next;
        for (std::size_t c = 0; c < k; ++c)
          if (c != prev && c != cur && isEdge(matrix(vertices[cur], vertices[c])))
            next = c;
        if (!next) break;
        prev = cur;
        cur = *next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return Shape{Family::D, k};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
      return Shape{Family::E, k};
    return std::nullopt;
  }

  // A path: read the bond labels from one end.
  std::size_t end = 0;
  while (degree[end] != 1) ++end;
  std::vector<unsigned> path_bonds;
  std::size_t prev = k, cur = end;
  while (true) {
    std::optional<std::size_t> next;
    for (std::size_t c = 0; c < k; ++c)
      if (c != prev && c != cur && isEdge(matrix(vertices[cur], vertices[c])))
        next = c;
    if (!next) break;
    path_bonds.push_back(matrix(vertices[cur], vertices[*next]));
    prev = cur;
    cur = *next;
  }
  std::size_t special = 0;
  unsigned special_bond = 3;
  std::size_t special_pos = 0;
  for (std::size_t i = 0; i < path_bonds.size(); ++i)
    if (path_bonds[i] != 3) {
      ++special;
      special_bond = path_bonds[i];
      special_pos = i;
    }
  if (special == 0) return Shape{Family::A, k};
  if (special > 1) return std::nullopt;
  const bool at_end = special_pos == 0 || special_pos + 1 == path_bonds.size();
  if (special_bond == 4 && at_end) return Shape{Family::B, k};
  if (special_bond == 4 && k == 4) return Shape{Family::F, 4};
  if (special_bond == 5 && at_end && k <= 4) return Shape{Family::H, k};
  return std::nullopt;
}

}  // namespace

std::string ComponentType::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
    case Family::F: return "F4";
    case Family::H: return "H" + std::to_string(rank);
    case Family::I: return "I2(" + std::to_string(bond) + ")";
  }
  return "?";
}

std::size_t ComponentType::longestLength() const {
  const std::size_t n = rank;
  switch (family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::H: return n == 3 ? 15 : 60;
    case Family::I: return bond;
  }
  return 0;
}

GeneratorSet ComponentType::support() const {
  GeneratorSet set;
  for (Generator g : labels) set.insert(g);
  return set;
}

std::size_t FiniteTypeTag::longestLength() const {
  std::size_t total = 0;
  for (const auto& c : components) total += c.longestLength();
  return total;
}

std::string FiniteTypeTag::name() const {
  if (infinite) return "Infinite";
  if (components.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i > 0) out += " x ";
    out += components[i].name();
  }
  return out;
}

CoxeterMatrix referenceMatrix(Family family, std::size_t n, unsigned m) {
  auto rows = identityRows(n);
  auto path = [&](std::size_t from) {
    for (std::size_t i = from; i + 1 < n; ++i) bond(rows, i, i + 1, 3);
  };
  switch (family) {
    case Family::A:
      path(0);
      break;
    case Family::B:
      path(0);
      bond(rows, 0, 1, 4);
      break;
    case Family::D:
      bond(rows, 0, 2, 3);
      bond(rows, 1, 2, 3);
      path(2);
      break;
    case Family::E:
      bond(rows, 0, 2, 3);
      bond(rows, 1, 3, 3);
      path(2);
      break;
    case Family::F:
      path(0);
      bond(rows, 1, 2, 4);
      break;
    case Family::H:
      path(0);
      bond(rows, 0, 1, 5);
      break;
    case Family::I:
      bond(rows, 0, 1, m);
      break;
  }
  return CoxeterMatrix(std::move(rows));
}

std::vector<GeneratorSet> diagramComponents(const CoxeterMatrix& matrix,
                                            GeneratorSet J) {
  std::vector<GeneratorSet> out;
  GeneratorSet left = J;
  while (!left.empty()) {
    GeneratorSet comp;
    std::vector<Generator> stack{left.first()};
    comp.insert(left.first());
    while (!stack.empty()) {
      const Generator v = stack.back();
      stack.pop_back();
      for (Generator u : left.members())
        if (!comp.contains(u) && isEdge(matrix(u, v))) {
          comp.insert(u);
          stack.push_back(u);
        }
    }
    out.push_back(comp);
    left = GeneratorSet(left.bits() & ~comp.bits());
  }
  return out;
}

FiniteTypeTag classifyParabolic(const CoxeterMatrix& matrix, GeneratorSet J) {
  FiniteTypeTag tag;
  for (GeneratorSet comp : diagramComponents(matrix, J)) {
    const std::vector<Generator> vertices = comp.members();
    const auto shape = recognise(matrix, vertices);
    if (!shape) return FiniteTypeTag{true, {}};
    ComponentType type;
    type.family = shape->family;
    type.rank = shape->rank;
    type.bond = shape->rank == 2 ? shape->bond : 0;
    type.isomorphisms = findIsomorphisms(
        matrix, vertices, referenceMatrix(type.family, type.rank, type.bond));
    if (type.isomorphisms.empty()) return FiniteTypeTag{true, {}};
    type.labels = type.isomorphisms.front();
    tag.components.push_back(std::move(type));
  }
  return tag;
}

}  // namespace coxtwist
