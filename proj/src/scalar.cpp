#include "coxtwist/scalar.hpp"

// gmp.h must precede mpfr.h for the mpq entry points to be declared.
#include <gmp.h>
#include <mpfr.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "coxtwist/error.hpp"

namespace coxtwist {

namespace {

// Owns one mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

 private:
  mpfr_t value_;
};

constexpr mpfr_prec_t kStartPrecision = 64;
constexpr mpfr_prec_t kMaxPrecision = mpfr_prec_t{1} << 20;

void checkSameField(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field())
    throw std::logic_error("scalars from different fields combined");
}

}  // namespace

bool Scalar::isZero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Scalar::isRational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

int Scalar::sign() const { return field_->sign(*this); }

double Scalar::toDouble() const { return field_->approximate(*this); }

std::size_t Scalar::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& c : coeffs_) {
    auto mix = [&h](long v) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    };
    mix(mpz_get_si(c.get_num_mpz_t()));
    mix(mpz_get_si(c.get_den_mpz_t()));
  }
  return h;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  checkSameField(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  checkSameField(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  checkSameField(a, b);
  return a.field()->multiply(a, b);
}

RealCyclotomicField::RealCyclotomicField(unsigned conductor)
    : conductor_(conductor) {
  if (conductor == 0)
    throw Error(ErrorCode::InvalidInput, "field conductor must be positive");

  // The conjugates of 2cos(pi/N) are 2cos(k*pi/N) with k odd, k < N and
  // gcd(k, N) = 1. Their product polynomial has small integer coefficients;
  // it is rounded here and then checked exactly below.
  std::vector<long double> roots;
  if (conductor == 1) {
    roots.push_back(-2.0L);
  } else {
    for (unsigned k = 1; k < conductor; k += 2)
      if (std::gcd(k, conductor) == 1)
        roots.push_back(2.0L * std::cos(std::numbers::pi_v<long double> * k /
                                        conductor));
  }
  std::vector<long double> poly{1.0L};
  for (long double r : roots) {
    std::vector<long double> next(poly.size() + 1, 0.0L);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= r * poly[i];
    }
    poly = std::move(next);
  }
  for (long double c : poly) minpoly_.emplace_back(static_cast<long>(std::llround(c)));

  const std::size_t d = degree();
  powers_.assign(d == 0 ? 1 : 2 * d - 1, std::vector<mpq_class>(d));
  for (std::size_t k = 0; k < powers_.size(); ++k) {
    if (k < d) {
      powers_[k][k] = 1;
      continue;
    }
    // x^k = x * x^(k-1); shift up and fold the x^d term.
    const auto& prev = powers_[k - 1];
    std::vector<mpq_class> next(d);
    for (std::size_t i = 0; i + 1 < d; ++i) next[i + 1] = prev[i];
    const mpq_class top = prev[d - 1];
    for (std::size_t i = 0; i < d; ++i) next[i] -= top * mpq_class(minpoly_[i]);
    powers_[k] = std::move(next);
  }

  // 2cos(N*pi/N) = -2 must hold exactly in the quotient ring.
  if (!(twiceCos(conductor) == fromInteger(-2)))
    throw std::logic_error("minimal polynomial of 2cos(pi/N) is wrong");
}

Scalar RealCyclotomicField::zero() const {
  return Scalar(this, std::vector<mpq_class>(degree()));
}

Scalar RealCyclotomicField::fromInteger(long value) const {
  return fromRational(mpq_class(value));
}

Scalar RealCyclotomicField::fromRational(const mpq_class& value) const {
  std::vector<mpq_class> c(degree());
  c[0] = value;
  return Scalar(this, std::move(c));
}

Scalar RealCyclotomicField::generator() const {
  if (degree() == 1) {
    // x is rational: 2cos(pi/N) for N <= 3.
    return fromRational(mpq_class(-minpoly_[0]));
  }
  std::vector<mpq_class> c(degree());
  c[1] = 1;
  return Scalar(this, std::move(c));
}

Scalar RealCyclotomicField::twiceCos(unsigned k) const {
  Scalar prev = fromInteger(2);
  if (k == 0) return prev;
  const Scalar x = generator();
  Scalar cur = x;
  for (unsigned j = 1; j < k; ++j) {
    Scalar next = multiply(x, cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Scalar RealCyclotomicField::multiply(const Scalar& a, const Scalar& b) const {
  const std::size_t d = degree();
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  if (a.isRational()) {
    std::vector<mpq_class> out(d);
    for (std::size_t i = 0; i < d; ++i) out[i] = ac[0] * bc[i];
    return Scalar(this, std::move(out));
  }
  std::vector<mpq_class> raw(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(ac[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) raw[i + j] += ac[i] * bc[j];
  }
  std::vector<mpq_class> out(d);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (sgn(raw[k]) == 0) continue;
    for (std::size_t i = 0; i < d; ++i)
      if (sgn(powers_[k][i]) != 0) out[i] += raw[k] * powers_[k][i];
  }
  return Scalar(this, std::move(out));
}

int RealCyclotomicField::sign(const Scalar& a) const {
  const auto& c = a.coefficients();
  if (a.isRational()) return sgn(c[0]);

  // degree() > 1 implies N >= 4, so x lies in (0, 2] and powers of an
  // enclosing interval are monotone.
  for (mpfr_prec_t prec = kStartPrecision; prec <= kMaxPrecision; prec *= 2) {
    Mpfr pi_lo(prec), pi_hi(prec), x_lo(prec), x_hi(prec);
    mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
    mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
    mpfr_div_ui(pi_lo.get(), pi_lo.get(), conductor_, MPFR_RNDD);
    mpfr_div_ui(pi_hi.get(), pi_hi.get(), conductor_, MPFR_RNDU);
    // cos is decreasing on [0, pi].
    mpfr_cos(x_lo.get(), pi_hi.get(), MPFR_RNDD);
    mpfr_cos(x_hi.get(), pi_lo.get(), MPFR_RNDU);
    mpfr_mul_ui(x_lo.get(), x_lo.get(), 2, MPFR_RNDD);
    mpfr_mul_ui(x_hi.get(), x_hi.get(), 2, MPFR_RNDU);

    Mpfr p_lo(prec), p_hi(prec), sum_lo(prec), sum_hi(prec), t_lo(prec),
        t_hi(prec);
    mpfr_set_ui(p_lo.get(), 1, MPFR_RNDN);
    mpfr_set_ui(p_hi.get(), 1, MPFR_RNDN);
    mpfr_set_ui(sum_lo.get(), 0, MPFR_RNDN);
    mpfr_set_ui(sum_hi.get(), 0, MPFR_RNDN);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) {
        mpfr_mul(p_lo.get(), p_lo.get(), x_lo.get(), MPFR_RNDD);
        mpfr_mul(p_hi.get(), p_hi.get(), x_hi.get(), MPFR_RNDU);
      }
      const int s = sgn(c[i]);
      if (s == 0) continue;
      if (s > 0) {
        mpfr_mul_q(t_lo.get(), p_lo.get(), c[i].get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(t_hi.get(), p_hi.get(), c[i].get_mpq_t(), MPFR_RNDU);
      } else {
        mpfr_mul_q(t_lo.get(), p_hi.get(), c[i].get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(t_hi.get(), p_lo.get(), c[i].get_mpq_t(), MPFR_RNDU);
      }
      mpfr_add(sum_lo.get(), sum_lo.get(), t_lo.get(), MPFR_RNDD);
      mpfr_add(sum_hi.get(), sum_hi.get(), t_hi.get(), MPFR_RNDU);
    }
    if (mpfr_sgn(sum_lo.get()) > 0) return 1;
    if (mpfr_sgn(sum_hi.get()) < 0) return -1;
    if (a.isZero()) return 0;
  }
  throw Error(ErrorCode::Overflow, "sign determination did not converge");
}

double RealCyclotomicField::approximate(const Scalar& a) const {
  const long double x =
      conductor_ == 1
          ? -2.0L
          : 2.0L * std::cos(std::numbers::pi_v<long double> / conductor_);
  long double sum = 0.0L, p = 1.0L;
  for (const auto& c : a.coefficients()) {
    sum += p * static_cast<long double>(c.get_d());
    p *= x;
  }
  return static_cast<double>(sum);
}

}  // namespace coxtwist
