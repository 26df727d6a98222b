#pragma once

#include <memory>
#include <string>

#include <doctest.h>

#include "coxtwist/catalogue.hpp"
#include "coxtwist/error.hpp"
#include "coxtwist/twist.hpp"
#include "oracle.hpp"

#define CHECK_ERROR_CODE(expr, expected)                    \
  do {                                                      \
    bool thrown_ = false;                                   \
    try {                                                   \
      (void)(expr);                                         \
    } catch (const coxtwist::Error& e_) {                   \
      thrown_ = true;                                       \
      CHECK_MESSAGE(e_.code() == (expected), e_.what());    \
    }                                                       \
    CHECK_MESSAGE(thrown_, "expected an exception: " #expr); \
  } while (false)

namespace testing {

inline coxtwist::Word toWord(const oracle::Letters& w) {
  return coxtwist::Word(w.begin(), w.end());
}
inline coxtwist::ShatWord toShat(const oracle::Letters& w) {
  return coxtwist::ShatWord(toWord(w));
}
inline oracle::Letters toLetters(std::span<const coxtwist::Generator> w) {
  return oracle::Letters(w.begin(), w.end());
}

inline std::shared_ptr<const coxtwist::CoxeterGroup> group(const std::string& name) {
  return std::make_shared<const coxtwist::CoxeterGroup>(
      coxtwist::catalogue::byName(name));
}

inline std::shared_ptr<const coxtwist::CoxeterGroup> group(
    const coxtwist::CoxeterMatrix& m) {
  return std::make_shared<const coxtwist::CoxeterGroup>(m);
}

inline coxtwist::Automorphism theta(const coxtwist::CoxeterGroup& g,
                                    std::vector<coxtwist::Generator> perm) {
  return coxtwist::Automorphism(g.matrix(), std::move(perm));
}

inline std::vector<int> permOf(const coxtwist::Automorphism& a) {
  return {a.permutation().begin(), a.permutation().end()};
}

// A3 with theta swapping s1 and s3.
inline coxtwist::Automorphism a3Swap(const coxtwist::CoxeterGroup& g) {
  return theta(g, {2, 1, 0});
}

inline coxtwist::TwistedInvolution w0(const coxtwist::Twist& t) {
  return t.twistedInvolution(t.group().longestElement(
      coxtwist::GeneratorSet::all(t.group().rank())));
}

}  // namespace testing
