#ifndef BCUBE_FIELD_HPP
#define BCUBE_FIELD_HPP

#include "bcube/prime_field.hpp"
#include "bcube/rational.hpp"

#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace bcube {

using Rng = std::mt19937_64;

/// Class of an element in F^x / F^x2, plus a separate zero class.
///
/// Over Q the representative is the squarefree integer; over F_p it is 1 or
/// the smallest quadratic nonresidue.
template <class S>
struct SquareClass {
  bool zero = true;
  S rep{};

  bool is_trivial() const { return !zero && rep == S(1); }
  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.zero == b.zero && (a.zero || a.rep == b.rep);
  }
};

/// Field context. Stateless over Q; carries p over F_p.
template <class S>
class Field;

template <>
class Field<Rational> {
 public:
  using Scalar = Rational;

  Rational from_int(long n) const { return Rational(n); }
  Rational parse(const std::string& s) const { return Rational::parse(s); }
  Rational canon(const Rational& x) const { return x; }
  std::string name() const { return "Q"; }
  bool is_finite() const { return false; }
  std::uint32_t characteristic() const { return 0; }

  SquareClass<Rational> square_class(const Rational& x) const;
  bool is_square(const Rational& x) const;
  /// x/y is a nonzero square, or both are zero. Needs no factoring.
  bool same_square_class(const Rational& x, const Rational& y) const {
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
    return is_square(x * y);
  }

  /// Uniform numerator in [-h, h], denominator in [1, h].
  Rational random(Rng& rng, long h = 1000) const;
  Rational random_nonzero(Rng& rng, long h = 1000) const;

  /// Elements ordered by height, 0, 1, -1, 2, -2, 1/2, ... up to `count` of them.
  std::vector<Rational> small_elements(std::size_t count) const;

  friend bool operator==(const Field&, const Field&) { return true; }
};

template <>
class Field<Fp> {
 public:
  using Scalar = Fp;

  /// Throws std::invalid_argument unless p is a prime >= 5.
  explicit Field(std::uint32_t p);

  Fp from_int(long n) const { return Fp(n, p_); }
  Fp parse(const std::string& s) const;
  /// Binds an unbound literal to p.
  Fp canon(const Fp& x) const { return x.bind(p_); }
  std::string name() const { return "Fp:" + std::to_string(p_); }
  bool is_finite() const { return true; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t modulus() const { return p_; }
  Fp nonresidue() const { return Fp(nonresidue_, p_); }

  SquareClass<Fp> square_class(const Fp& x) const;
  bool is_square(const Fp& x) const { return x.bind(p_).is_square(); }
  bool same_square_class(const Fp& x, const Fp& y) const { return square_class(x) == square_class(y); }

  Fp random(Rng& rng, long h = 0) const;
  Fp random_nonzero(Rng& rng, long h = 0) const;

  /// All of F_p when count >= p, in the order 0, 1, -1, 2, -2, ...
  std::vector<Fp> small_elements(std::size_t count) const;
  std::vector<Fp> elements() const { return small_elements(p_); }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  std::uint32_t nonresidue_;
};

/// Scalar types the library is instantiated for.
template <class S>
concept ExactScalar = std::same_as<S, Rational> || std::same_as<S, Fp>;

/// Squarefree part of a nonzero integer (sign kept). Trial division; throws
/// std::domain_error if a cofactor too large to settle remains.
mpz_class squarefree_part(const mpz_class& n);

}  // namespace bcube

#endif  // BCUBE_FIELD_HPP
