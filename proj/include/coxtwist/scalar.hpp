#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <vector>

namespace coxtwist {

class RealCyclotomicField;

// An element of Q(2cos(pi/N)) in the power basis of x = 2cos(pi/N).
//
// Arithmetic is exact. Two scalars may only be combined when they belong to
// the same field object.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const RealCyclotomicField* field, std::vector<mpq_class> coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {}

  const RealCyclotomicField* field() const { return field_; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  bool isZero() const;
  // True when only the constant coefficient can be nonzero.
  bool isRational() const;
  int sign() const;
  double toDouble() const;
  std::size_t hash() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar operator-() const;
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  const RealCyclotomicField* field_ = nullptr;
  std::vector<mpq_class> coeffs_;
};

// The real subfield Q(2cos(pi/N)) of the 2N-th cyclotomic field.
class RealCyclotomicField {
 public:
  // `conductor` is N >= 1.
  explicit RealCyclotomicField(unsigned conductor);

  RealCyclotomicField(const RealCyclotomicField&) = delete;
  RealCyclotomicField& operator=(const RealCyclotomicField&) = delete;

  unsigned conductor() const { return conductor_; }
  std::size_t degree() const { return minpoly_.size() - 1; }
  // Monic minimal polynomial of x, lowest coefficient first.
  const std::vector<mpz_class>& minimalPolynomial() const { return minpoly_; }

  Scalar zero() const;
  Scalar fromInteger(long value) const;
  Scalar fromRational(const mpq_class& value) const;
  Scalar generator() const;
  // 2cos(k*pi/N), computed from the Chebyshev recurrence in x.
  Scalar twiceCos(unsigned k) const;

  Scalar multiply(const Scalar& a, const Scalar& b) const;
  // Exact sign. Evaluates on an interval enclosing x with doubling precision
  // until the enclosure excludes zero.
  int sign(const Scalar& a) const;
  double approximate(const Scalar& a) const;

 private:
  unsigned conductor_;
  std::vector<mpz_class> minpoly_;
  // powers_[k] = x^k reduced to the power basis, for k < 2*degree - 1.
  std::vector<std::vector<mpq_class>> powers_;
};

}  // namespace coxtwist
