#ifndef BCUBE_PRIME_FIELD_HPP
#define BCUBE_PRIME_FIELD_HPP

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace bcube {

/// Residue class modulo a runtime prime p >= 5.
///
/// Every element carries its modulus. An element constructed from a bare
/// integer (modulus 0) is an unbound literal: it adopts the modulus of the
/// other operand the first time it meets a bound element. This is what lets
/// Eigen's Scalar(0) and Scalar(1) work without a global "current prime".
/// Mixing two different bound moduli throws std::domain_error.
class Fp {
 public:
  Fp() = default;
  Fp(long long n) : lit_(n) {}  // NOLINT(google-explicit-constructor)
  Fp(long long n, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  bool is_bound() const { return p_ != 0; }

  /// Representative in [0, p). Throws for an unbound literal.
  std::uint32_t value() const;

  /// Same residue, bound to p (no-op if already bound to p).
  Fp bind(std::uint32_t p) const;

  bool is_zero() const { return p_ == 0 ? lit_ == 0 : v_ == 0; }
  Fp inverse() const;
  Fp pow(std::uint64_t e) const;
  /// Euler's criterion; zero counts as a square.
  bool is_square() const;

  std::string str() const;

  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend Fp operator-(const Fp& a);

  friend bool operator==(const Fp& a, const Fp& b);

  friend std::ostream& operator<<(std::ostream& os, const Fp& x);

 private:
  static std::uint32_t common(const Fp& a, const Fp& b);
  std::uint32_t reduced(std::uint32_t p) const;

  std::uint32_t p_ = 0;
  std::uint32_t v_ = 0;     // residue when bound
  long long lit_ = 0;       // integer value when unbound
};

bool is_prime(std::uint64_t n);

}  // namespace bcube

namespace Eigen {

template <>
struct NumTraits<bcube::Fp> : GenericNumTraits<bcube::Fp> {
  using Real = bcube::Fp;
  using NonInteger = bcube::Fp;
  using Nested = bcube::Fp;
  using Literal = bcube::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // BCUBE_PRIME_FIELD_HPP
