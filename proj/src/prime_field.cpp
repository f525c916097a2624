#include "bcube/prime_field.hpp"

#include <ostream>
#include <stdexcept>

namespace bcube {

namespace {

std::uint32_t mod(long long n, std::uint32_t p) {
  long long r = n % static_cast<long long>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Fp::Fp(long long n, std::uint32_t p) : p_(p), v_(p ? mod(n, p) : 0), lit_(p ? 0 : n) {}

std::uint32_t Fp::value() const {
  if (p_ == 0) throw std::domain_error("Fp: value() of an unbound literal");
  return v_;
}

std::uint32_t Fp::reduced(std::uint32_t p) const { return p_ == 0 ? mod(lit_, p) : v_; }

Fp Fp::bind(std::uint32_t p) const {
  if (p_ != 0 && p_ != p) throw std::domain_error("Fp: modulus mismatch");
  return Fp(reduced(p), p);
}

std::uint32_t Fp::common(const Fp& a, const Fp& b) {
  if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) throw std::domain_error("Fp: modulus mismatch");
  return a.p_ != 0 ? a.p_ : b.p_;
}

Fp& Fp::operator+=(const Fp& o) {
  const std::uint32_t p = common(*this, o);
  if (p == 0) {
    lit_ += o.lit_;
    return *this;
  }
  const std::uint64_t s = std::uint64_t{reduced(p)} + o.reduced(p);
  v_ = static_cast<std::uint32_t>(s >= p ? s - p : s);
  p_ = p;
  lit_ = 0;
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  const std::uint32_t p = common(*this, o);
  if (p == 0) {
    lit_ -= o.lit_;
    return *this;
  }
  const std::uint32_t a = reduced(p), b = o.reduced(p);
  v_ = a >= b ? a - b : a + (p - b);
  p_ = p;
  lit_ = 0;
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  const std::uint32_t p = common(*this, o);
  if (p == 0) {
    lit_ *= o.lit_;
    return *this;
  }
  v_ = static_cast<std::uint32_t>(std::uint64_t{reduced(p)} * o.reduced(p) % p);
  p_ = p;
  lit_ = 0;
  return *this;
}

Fp operator-(const Fp& a) {
  if (a.p_ == 0) return Fp(-a.lit_);
  return Fp(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_);
}

bool operator==(const Fp& a, const Fp& b) {
  const std::uint32_t p = Fp::common(a, b);
  if (p == 0) return a.lit_ == b.lit_;
  return a.reduced(p) == b.reduced(p);
}

Fp Fp::pow(std::uint64_t e) const {
  if (p_ == 0) throw std::domain_error("Fp: pow() of an unbound literal");
  std::uint64_t base = v_, acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return Fp(static_cast<long long>(acc), p_);
}

Fp Fp::inverse() const {
  if (p_ == 0) {
    if (lit_ == 1 || lit_ == -1) return *this;
    throw std::domain_error("Fp: inverse of an unbound literal");
  }
  if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
  return pow(p_ - 2);
}

bool Fp::is_square() const {
  if (p_ == 0) throw std::domain_error("Fp: is_square() of an unbound literal");
  if (v_ == 0) return true;
  return pow((p_ - 1) / 2).v_ == 1;
}

std::string Fp::str() const { return p_ == 0 ? std::to_string(lit_) : std::to_string(v_); }

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.str(); }

}  // namespace bcube
