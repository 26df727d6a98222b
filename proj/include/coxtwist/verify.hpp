#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxtwist/moves.hpp"

namespace coxtwist {

struct CheckResult {
  std::string name;
  // Standard reduced expression of the twisted involution checked (empty for
  // whole-system checks).
  ShatWord witness;
  std::string regime;
  std::uint64_t expressions = 0;
  std::size_t components = 0;
  std::optional<std::size_t> braid_components;
  // True when |R-hat(w)| exceeded the cap and connectivity was established
  // from sampled expressions.
  bool sampled = false;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string system;
  std::string theta;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool passed() const;
  std::size_t failures() const;
  // Appends the checks and notes of `other`; associative.
  void merge(VerificationReport other);
};

struct VerifyOptions {
  // Required for infinite groups (word-property, half-braid).
  std::optional<std::size_t> rank_bound;
  // Right-angled suite.
  std::size_t length_bound = 6;
  // Largest |R-hat(w)| for which the expression graph is built explicitly.
  std::uint64_t cap = 1'000'000;
  // Sampled expressions per twisted involution above the cap.
  std::size_t samples = 4096;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::string system_name;
};

// Connectivity of R-hat(w) under `moves`. Above the cap: if every R-hat(w s)
// is connected (the caller's sweep checks these at lower rank), R-hat(w) is
// connected iff the last letters of sampled expressions and their one-move
// neighbours link all of D_R(w); a sample that fails to link them is
// reported as a failure marked `sampled`.
CheckResult checkConnectivity(const Twist& twist, const TwistedInvolution& w,
                              const MoveSet& moves, Regime regime,
                              const VerifyOptions& options);

// Every twisted involution (of rank <= rank_bound) has a connected expression
// graph under braid moves plus the minimal instances.
VerificationReport verifyWordProperty(const Twist& twist,
                                      const VerifyOptions& options);

// The system itself must be one of the listed (type, theta) classes
// (HypothesisViolated otherwise). Removing that class's instances must
// disconnect R-hat(w0); per-J removals are reported as extra checks.
VerificationReport verifyNecessity(const Twist& twist,
                                   const VerifyOptions& options);

// Braid plus half-braid moves suffice when no non-dihedral list type occurs
// among the theta-stable parabolics; HypothesisViolated names the offending J.
VerificationReport verifyHalfBraidSufficiency(const Twist& twist,
                                              const VerifyOptions& options);

// For right-angled W with theta = id (NotRightAngled / NotIdentityTwist):
// on the ball of radius length_bound, reduced words map to reduced
// S-hat-expressions of a well-defined element, the map is a bijection onto
// the involutions of rank <= length_bound, and it is an isomorphism of Bruhat
// orders.
VerificationReport verifyRightAngled(const Twist& twist,
                                     const VerifyOptions& options);

}  // namespace coxtwist
