#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "coxtwist/coxeter_matrix.hpp"
#include "coxtwist/scalar.hpp"
#include "coxtwist/word.hpp"

namespace coxtwist {

// Handle to a group element interned in a CoxeterGroup. Two handles from the
// same group are equal iff the elements are equal. Id 0 is the identity.
struct Element {
  std::uint32_t id = 0;
  friend auto operator<=>(Element, Element) = default;
};

struct ElementHash {
  std::size_t operator()(Element e) const noexcept { return e.id; }
};

enum class Side { Left, Right };

using RootVector = std::vector<Scalar>;

// Element arithmetic for an arbitrary Coxeter matrix.
//
// Elements are stored as their action on the simple roots in the geometric
// representation over Q(2cos(pi/N)), with the Gram matrix
// <a_s, a_t> = -cos(pi/m(s,t)) (and -1 for infinite bonds). The
// representation is faithful, so the matrix is the interning key; descents
// are read off as root signs and the ShortLex normal form is built from
// left descents.
//
// All public members are const and safe to call concurrently; the intern
// tables are guarded by an internal mutex.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterMatrix matrix);

  CoxeterGroup(const CoxeterGroup&) = delete;
  CoxeterGroup& operator=(const CoxeterGroup&) = delete;

  const CoxeterMatrix& matrix() const { return matrix_; }
  std::size_t rank() const { return matrix_.rank(); }
  const RealCyclotomicField& field() const { return *field_; }
  // 2<a_s, a_t> as an exact scalar.
  const Scalar& twiceGram(Generator s, Generator t) const {
    return twice_gram_[s * rank() + t];
  }

  Element identity() const { return Element{0}; }
  Element generator(Generator s) const;

  // Geometric representation.
  RootVector simpleRoot(Generator s) const;
  RootVector reflect(std::span<const Scalar> root, Generator s) const;
  RootVector apply(Element w, std::span<const Scalar> v) const;
  static bool isNegative(std::span<const Scalar> root);

  Element multiply(Element w, Generator s, Side side) const;
  Element product(Element u, Element v) const;
  Element inverse(Element w) const;
  Element normalize(std::span<const Generator> word) const;
  Element applyAutomorphism(const Automorphism& theta, Element w) const;

  // ShortLex-minimal reduced word.
  Word normalForm(Element w) const;
  std::size_t length(Element w) const;
  bool isRightDescent(Element w, Generator s) const;
  bool isLeftDescent(Element w, Generator s) const;
  GeneratorSet rightDescents(Element w) const;
  GeneratorSet leftDescents(Element w) const;
  // Generators occurring in any (equivalently every) reduced word.
  GeneratorSet support(Element w) const;

  bool isReducedWord(std::span<const Generator> word) const;
  // All words obtained by one braid move. Throws NotReduced on non-reduced
  // input.
  std::vector<Word> braidNeighbors(std::span<const Generator> word) const;
  // Braid closure of the normal form, sorted.
  std::vector<Word> enumerateReducedWords(Element w) const;

  // Subword criterion on the normal form of w.
  bool bruhatLE(Element u, Element w) const;

  // Unique element of W_J with D_R = J. Throws NotFinite if W_J is
  // infinite.
  Element longestElement(GeneratorSet J) const;
  // Right-multiplies by the smallest non-descent in J until none is left;
  // returns nullopt once the length exceeds `cap`.
  std::optional<Element> greedyAscent(GeneratorSet J, std::size_t cap) const;

  // The ball {w : l(w) <= bound}, ordered by length then normal form.
  std::vector<Element> elementsUpToLength(std::size_t bound) const;

  bool isFinite() const;
  std::size_t internedCount() const;

 private:
  struct Record {
    // Column-major: image[t * n + i] is coordinate i of w(a_t).
    std::vector<Scalar> image;
    std::vector<Scalar> inverse_image;
    std::uint32_t length = 0;
    GeneratorSet right;
    GeneratorSet left;
    Word normal_form;
  };

  static constexpr std::uint32_t kUnknown = UINT32_MAX;

  std::uint32_t internLocked(std::vector<Scalar> image,
                             std::vector<Scalar> inverse_image,
                             std::uint32_t length) const;
  std::uint32_t multiplyLocked(std::uint32_t w, Generator s, Side side) const;
  // v <- sigma_s(v) for the column starting at `column`.
  void reflectColumn(std::vector<Scalar>& columns, std::size_t column,
                     Generator s) const;
  // Right action: column t <- column t - 2<a_t,a_s> column s.
  void rightReflect(std::vector<Scalar>& columns, Generator s) const;
  std::size_t hashImage(const std::vector<Scalar>& image) const;
  GeneratorSet negativeColumns(const std::vector<Scalar>& columns) const;

  CoxeterMatrix matrix_;
  std::unique_ptr<RealCyclotomicField> field_;
  std::vector<Scalar> twice_gram_;

  mutable std::mutex mutex_;
  mutable std::deque<Record> records_;
  mutable std::unordered_multimap<std::size_t, std::uint32_t> index_;
  mutable std::vector<std::uint32_t> right_table_;
  mutable std::vector<std::uint32_t> left_table_;
};

}  // namespace coxtwist
