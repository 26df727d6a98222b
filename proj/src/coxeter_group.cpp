#include "coxtwist/coxeter_group.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "coxtwist/classify.hpp"
#include "coxtwist/error.hpp"

namespace coxtwist {

CoxeterGroup::CoxeterGroup(CoxeterMatrix matrix)
    : matrix_(std::move(matrix)),
      field_(std::make_unique<RealCyclotomicField>(matrix_.conductor())) {
  const std::size_t n = rank();
  const unsigned conductor = field_->conductor();
  twice_gram_.reserve(n * n);
  for (Generator s = 0; s < n; ++s)
    for (Generator t = 0; t < n; ++t) {
      const unsigned m = matrix_(s, t);
      if (m == 1)
        twice_gram_.push_back(field_->fromInteger(2));
      else if (m == kInfinity)
        twice_gram_.push_back(field_->fromInteger(-2));
      else
        twice_gram_.push_back(-field_->twiceCos(conductor / m));
    }

  std::vector<Scalar> unit(n * n, field_->zero());
  for (std::size_t t = 0; t < n; ++t) unit[t * n + t] = field_->fromInteger(1);
  std::lock_guard lock(mutex_);
  internLocked(unit, unit, 0);
}

Element CoxeterGroup::generator(Generator s) const {
  return multiply(identity(), s, Side::Right);
}

RootVector CoxeterGroup::simpleRoot(Generator s) const {
  RootVector v(rank(), field_->zero());
  v[s] = field_->fromInteger(1);
  return v;
}

RootVector CoxeterGroup::reflect(std::span<const Scalar> root,
                                 Generator s) const {
  RootVector out(root.begin(), root.end());
  Scalar pairing = field_->zero();
  for (Generator i = 0; i < rank(); ++i)
    if (!root[i].isZero()) pairing += root[i] * twiceGram(i, s);
  out[s] -= pairing;
  return out;
}

RootVector CoxeterGroup::apply(Element w, std::span<const Scalar> v) const {
  const std::size_t n = rank();
  std::vector<Scalar> image;
  {
    std::lock_guard lock(mutex_);
    image = records_[w.id].image;
  }
  RootVector out(n, field_->zero());
  for (std::size_t t = 0; t < n; ++t) {
    if (v[t].isZero()) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] += v[t] * image[t * n + i];
  }
  return out;
}

bool CoxeterGroup::isNegative(std::span<const Scalar> root) {
  // Roots are either non-negative or non-positive, so the first nonzero
  // coordinate decides.
  for (const Scalar& c : root)
    if (!c.isZero()) return c.sign() < 0;
  return false;
}

void CoxeterGroup::reflectColumn(std::vector<Scalar>& columns,
                                 std::size_t column, Generator s) const {
  const std::size_t n = rank();
  Scalar pairing = field_->zero();
  for (Generator i = 0; i < n; ++i) {
    const Scalar& c = columns[column * n + i];
    if (!c.isZero()) pairing += c * twiceGram(i, s);
  }
  columns[column * n + s] -= pairing;
}

void CoxeterGroup::rightReflect(std::vector<Scalar>& columns,
                                Generator s) const {
  const std::size_t n = rank();
  // w sigma_s (a_t) = w(a_t) - 2<a_t,a_s> w(a_s); column s last.
  for (std::size_t t = 0; t < n; ++t) {
    if (t == s) continue;
    const Scalar& g = twiceGram(static_cast<Generator>(t), s);
    if (g.isZero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      columns[t * n + i] -= g * columns[s * n + i];
  }
  for (std::size_t i = 0; i < n; ++i)
    columns[s * n + i] = -columns[s * n + i];
}

std::size_t CoxeterGroup::hashImage(const std::vector<Scalar>& image) const {
  std::size_t h = 0;
  for (const Scalar& c : image) h = h * 1000003u ^ c.hash();
  return h;
}

GeneratorSet CoxeterGroup::negativeColumns(
    const std::vector<Scalar>& columns) const {
  const std::size_t n = rank();
  GeneratorSet out;
  for (std::size_t t = 0; t < n; ++t)
    if (isNegative(std::span(columns).subspan(t * n, n)))
      out.insert(static_cast<Generator>(t));
  return out;
}

std::uint32_t CoxeterGroup::internLocked(std::vector<Scalar> image,
                                         std::vector<Scalar> inverse_image,
                                         std::uint32_t length) const {
  const std::size_t h = hashImage(image);
  auto [lo, hi] = index_.equal_range(h);
  for (auto it = lo; it != hi; ++it)
    if (records_[it->second].image == image) return it->second;

  if (records_.size() >= kUnknown - 1)
    throw Error(ErrorCode::Overflow, "too many group elements interned");
  const auto id = static_cast<std::uint32_t>(records_.size());
  Record rec;
  rec.right = negativeColumns(image);
  rec.left = negativeColumns(inverse_image);
  rec.image = std::move(image);
  rec.inverse_image = std::move(inverse_image);
  rec.length = length;
  if (rec.right.size() > length || (length > 0 && rec.right.empty()))
    throw std::logic_error("descent set inconsistent with length");
  const GeneratorSet left = rec.left;
  records_.push_back(std::move(rec));
  index_.emplace(h, id);
  right_table_.resize(records_.size() * rank(), kUnknown);
  left_table_.resize(records_.size() * rank(), kUnknown);

  if (length > 0) {
    // ShortLex-first reduced word: smallest left descent, then recurse.
    const Generator s = left.first();
    const std::uint32_t rest = multiplyLocked(id, s, Side::Left);
    Word nf;
    nf.reserve(length);
    nf.push_back(s);
    const Word& tail = records_[rest].normal_form;
    nf.insert(nf.end(), tail.begin(), tail.end());
    records_[id].normal_form = std::move(nf);
  }
  return id;
}

std::uint32_t CoxeterGroup::multiplyLocked(std::uint32_t w, Generator s,
                                           Side side) const {
  const std::size_t n = rank();
  auto& table = side == Side::Right ? right_table_ : left_table_;
  if (table[w * n + s] != kUnknown) return table[w * n + s];

  const Record& rec = records_[w];
  std::vector<Scalar> image = rec.image;
  std::vector<Scalar> inverse_image = rec.inverse_image;
  const bool descent = side == Side::Right ? rec.right.contains(s)
                                           : rec.left.contains(s);
  const std::uint32_t length = descent ? rec.length - 1 : rec.length + 1;
  if (side == Side::Right) {
    rightReflect(image, s);
    for (std::size_t t = 0; t < n; ++t) reflectColumn(inverse_image, t, s);
  } else {
    for (std::size_t t = 0; t < n; ++t) reflectColumn(image, t, s);
    rightReflect(inverse_image, s);
  }
  const std::uint32_t x =
      internLocked(std::move(image), std::move(inverse_image), length);
  // Tables may have grown during interning.
  auto& t2 = side == Side::Right ? right_table_ : left_table_;
  t2[w * n + s] = x;
  t2[x * n + s] = w;
  return x;
}

Element CoxeterGroup::multiply(Element w, Generator s, Side side) const {
  if (s >= rank()) throw Error(ErrorCode::InvalidInput, "generator out of range");
  std::lock_guard lock(mutex_);
  return Element{multiplyLocked(w.id, s, side)};
}

Element CoxeterGroup::product(Element u, Element v) const {
  Element x = u;
  for (Generator s : normalForm(v)) x = multiply(x, s, Side::Right);
  return x;
}

Element CoxeterGroup::inverse(Element w) const {
  Word nf = normalForm(w);
  std::reverse(nf.begin(), nf.end());
  return normalize(nf);
}

Element CoxeterGroup::normalize(std::span<const Generator> word) const {
  Element x = identity();
  for (Generator s : word) x = multiply(x, s, Side::Right);
  return x;
}

Element CoxeterGroup::applyAutomorphism(const Automorphism& theta,
                                        Element w) const {
  Word nf = normalForm(w);
  for (Generator& s : nf) s = theta(s);
  return normalize(nf);
}

Word CoxeterGroup::normalForm(Element w) const {
  std::lock_guard lock(mutex_);
  return records_[w.id].normal_form;
}

std::size_t CoxeterGroup::length(Element w) const {
  std::lock_guard lock(mutex_);
  return records_[w.id].length;
}

bool CoxeterGroup::isRightDescent(Element w, Generator s) const {
  return rightDescents(w).contains(s);
}

bool CoxeterGroup::isLeftDescent(Element w, Generator s) const {
  return leftDescents(w).contains(s);
}

GeneratorSet CoxeterGroup::rightDescents(Element w) const {
  std::lock_guard lock(mutex_);
  return records_[w.id].right;
}

GeneratorSet CoxeterGroup::leftDescents(Element w) const {
  std::lock_guard lock(mutex_);
  return records_[w.id].left;
}

GeneratorSet CoxeterGroup::support(Element w) const {
  GeneratorSet out;
  for (Generator s : normalForm(w)) out.insert(s);
  return out;
}

bool CoxeterGroup::isReducedWord(std::span<const Generator> word) const {
  Element x = identity();
  for (Generator s : word) {
    if (s >= rank()) throw Error(ErrorCode::InvalidInput, "generator out of range");
    if (isRightDescent(x, s)) return false;
    x = multiply(x, s, Side::Right);
  }
  return true;
}

std::vector<Word> CoxeterGroup::braidNeighbors(
    std::span<const Generator> word) const {
  if (!isReducedWord(word))
    throw Error(ErrorCode::NotReduced, "braid moves need a reduced word");
  std::set<Word> out;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    const Generator a = word[i], b = word[i + 1];
    if (a == b) continue;
    const unsigned m = matrix_(a, b);
    if (m == kInfinity || i + m > word.size()) continue;
    bool alternating = true;
    for (std::size_t j = 0; j < m && alternating; ++j)
      alternating = word[i + j] == (j % 2 == 0 ? a : b);
    if (!alternating) continue;
    Word next(word.begin(), word.end());
    for (std::size_t j = 0; j < m; ++j) next[i + j] = j % 2 == 0 ? b : a;
    out.insert(std::move(next));
  }
  return {out.begin(), out.end()};
}

std::vector<Word> CoxeterGroup::enumerateReducedWords(Element w) const {
  std::set<Word> seen{normalForm(w)};
  std::vector<Word> frontier{normalForm(w)};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& word : frontier)
      for (Word& nb : braidNeighbors(word))
        if (seen.insert(nb).second) next.push_back(std::move(nb));
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool CoxeterGroup::bruhatLE(Element u, Element w) const {
  if (length(u) > length(w)) return false;
  // Elements represented by reduced subwords of the processed prefix.
  std::unordered_set<Element, ElementHash> reachable{identity()};
  for (Generator s : normalForm(w)) {
    std::vector<Element> grown;
    for (Element x : reachable)
      if (!isRightDescent(x, s)) grown.push_back(multiply(x, s, Side::Right));
    reachable.insert(grown.begin(), grown.end());
  }
  return reachable.contains(u);
}

std::optional<Element> CoxeterGroup::greedyAscent(GeneratorSet J,
                                                  std::size_t cap) const {
  Element w = identity();
  while (true) {
    const GeneratorSet ascents(J.bits() & ~rightDescents(w).bits());
    if (ascents.empty()) return w;
    w = multiply(w, ascents.first(), Side::Right);
    if (length(w) > cap) return std::nullopt;
  }
}

Element CoxeterGroup::longestElement(GeneratorSet J) const {
  const FiniteTypeTag tag = classifyParabolic(matrix_, J);
  if (tag.infinite)
    throw Error(ErrorCode::NotFinite,
                "parabolic subgroup generated by " + formatSet(J) +
                    " is infinite");
  const auto w0 = greedyAscent(J, tag.longestLength());
  if (!w0 || length(*w0) != tag.longestLength())
    throw std::logic_error("greedy ascent disagrees with the catalogue for " +
                           tag.name());
  return *w0;
}

std::vector<Element> CoxeterGroup::elementsUpToLength(std::size_t bound) const {
  std::vector<Element> out{identity()};
  std::vector<Element> level{identity()};
  for (std::size_t len = 0; len < bound && !level.empty(); ++len) {
    std::unordered_set<Element, ElementHash> next_set;
    for (Element w : level)
      for (Generator s = 0; s < rank(); ++s)
        if (!isRightDescent(w, s)) next_set.insert(multiply(w, s, Side::Right));
    std::vector<std::pair<Word, Element>> keyed;
    for (Element x : next_set) keyed.emplace_back(normalForm(x), x);
    std::sort(keyed.begin(), keyed.end());
    level.clear();
    for (auto& [nf, x] : keyed) level.push_back(x);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

bool CoxeterGroup::isFinite() const {
  return !classifyParabolic(matrix_, GeneratorSet::all(rank())).infinite;
}

std::size_t CoxeterGroup::internedCount() const {
  std::lock_guard lock(mutex_);
  return records_.size();
}

}  // namespace coxtwist
