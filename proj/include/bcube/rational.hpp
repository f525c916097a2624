#ifndef BCUBE_RATIONAL_HPP
#define BCUBE_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bcube {

/// Arbitrary-precision rational number, always in lowest terms.
///
/// A thin value wrapper around GMP's mpq_class. The wrapper exists so that
/// GMP's own expression templates never leak into Eigen expressions.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor): Eigen builds Scalar(0), Scalar(1)
  Rational(long num, long den);
  explicit Rational(const mpz_class& n) : q_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "n" or "n/d" (optional sign, base 10). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  /// Canonical text form: "n" for integers, otherwise "n/d".
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

/// Height max(|num|, |den|), used to bound random sampling and searches.
mpz_class height(const Rational& r);

}  // namespace bcube

namespace Eigen {

template <>
struct NumTraits<bcube::Rational> : GenericNumTraits<bcube::Rational> {
  using Real = bcube::Rational;
  using NonInteger = bcube::Rational;
  using Nested = bcube::Rational;
  using Literal = bcube::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 60
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // BCUBE_RATIONAL_HPP
