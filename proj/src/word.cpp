#include "coxtwist/word.hpp"

#include <charconv>

#include "coxtwist/error.hpp"

namespace coxtwist {

std::string formatWord(std::span<const Generator> word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(static_cast<unsigned>(word[i]) + 1);
  }
  return out;
}

std::string formatSet(GeneratorSet set) {
  std::string out = "{";
  bool first = true;
  for (Generator g : set.members()) {
    if (!first) out += ", ";
    out += 's' + std::to_string(static_cast<unsigned>(g) + 1);
    first = false;
  }
  return out + "}";
}

Word parseWord(std::string_view text, std::size_t rank) {
  Word word;
  bool saw_identity = false;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',';
  };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    std::string_view token = text.substr(i, j - i);
    i = j;
    if (token == "e" || saw_identity) {
      if (!word.empty() || saw_identity)
        throw Error(ErrorCode::InvalidInput,
                    "'e' may only denote the empty word");
      saw_identity = true;
      continue;
    }
    unsigned value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw Error(ErrorCode::InvalidInput,
                  "malformed generator index '" + std::string(token) + "'");
    if (value < 1 || value > rank)
      throw Error(ErrorCode::InvalidInput,
                  "generator index " + std::string(token) +
                      " out of range 1.." + std::to_string(rank));
    word.push_back(static_cast<Generator>(value - 1));
  }
  return word;
}

}  // namespace coxtwist
