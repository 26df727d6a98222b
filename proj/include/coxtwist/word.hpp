#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxtwist {

// Generators are 0-based internally; all text I/O is 1-based.
using Generator = std::uint8_t;

// Descent and support sets are bitmasks, which caps the rank.
inline constexpr std::size_t kMaxRank = 64;

// A word over S.
using Word = std::vector<Generator>;

// A word over the hatted alphabet. Kept distinct from Word so that the two
// interpretations never mix silently.
struct ShatWord {
  std::vector<Generator> letters;

  ShatWord() = default;
  explicit ShatWord(std::vector<Generator> l) : letters(std::move(l)) {}
  ShatWord(std::initializer_list<Generator> l) : letters(l) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  Generator operator[](std::size_t i) const { return letters[i]; }
  Generator back() const { return letters.back(); }

  friend bool operator==(const ShatWord&, const ShatWord&) = default;
  friend auto operator<=>(const ShatWord&, const ShatWord&) = default;
};

class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint64_t bits) : bits_(bits) {}

  static GeneratorSet all(std::size_t rank) {
    return GeneratorSet(rank >= 64 ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << rank) - 1);
  }
  static GeneratorSet of(std::initializer_list<Generator> gens) {
    GeneratorSet set;
    for (Generator g : gens) set.insert(g);
    return set;
  }

  constexpr bool contains(Generator s) const {
    return (bits_ >> s) & std::uint64_t{1};
  }
  constexpr void insert(Generator s) { bits_ |= std::uint64_t{1} << s; }
  constexpr void erase(Generator s) { bits_ &= ~(std::uint64_t{1} << s); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr std::uint64_t bits() const { return bits_; }
  // Smallest member; undefined on the empty set.
  constexpr Generator first() const {
    return static_cast<Generator>(std::countr_zero(bits_));
  }

  std::vector<Generator> members() const {
    std::vector<Generator> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(static_cast<Generator>(std::countr_zero(b)));
    return out;
  }

  friend constexpr GeneratorSet operator|(GeneratorSet a, GeneratorSet b) {
    return GeneratorSet(a.bits_ | b.bits_);
  }
  friend constexpr GeneratorSet operator&(GeneratorSet a, GeneratorSet b) {
    return GeneratorSet(a.bits_ & b.bits_);
  }
  friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;
  friend constexpr auto operator<=>(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// "e" for the empty word, otherwise space-separated 1-based indices.
std::string formatWord(std::span<const Generator> word);
inline std::string formatWord(const ShatWord& w) { return formatWord(w.letters); }
std::string formatSet(GeneratorSet set);

// Accepts whitespace/comma separated 1-based indices; "e" or "" is empty.
Word parseWord(std::string_view text, std::size_t rank);
inline ShatWord parseShatWord(std::string_view text, std::size_t rank) {
  return ShatWord(parseWord(text, rank));
}

}  // namespace coxtwist
