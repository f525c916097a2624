#include "bcube/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcube {

mpz_class squarefree_part(const mpz_class& n) {
  if (n == 0) throw std::domain_error("squarefree_part: zero");
  const int sign = sgn(n);
  mpz_class m = abs(n);
  mpz_class out = 1;
  constexpr unsigned long kTrialBound = 1000000;
  for (unsigned long d = 2; d <= kTrialBound && mpz_class(d) * d <= m; ++d) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), d) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), d) != 0) {
      m /= d;
      ++e;
    }
    if (e % 2 == 1) out *= d;
  }
  if (m > 1) {
    // Every prime factor of m exceeds the trial bound (or m is prime).
    if (mpz_perfect_square_p(m.get_mpz_t()) != 0) {
      // square cofactor contributes nothing
    } else if (mpz_probab_prime_p(m.get_mpz_t(), 30) != 0 ||
               m < mpz_class(kTrialBound) * kTrialBound * kTrialBound) {
      // prime, or a product of two distinct large primes
      out *= m;
    } else {
      throw std::domain_error("squarefree_part: cofactor too large to factor");
    }
  }
  return sign < 0 ? mpz_class(-out) : out;
}

SquareClass<Rational> Field<Rational>::square_class(const Rational& x) const {
  if (x.is_zero()) return {};
  return {false, Rational(squarefree_part(x.num() * x.den()))};
}

bool Field<Rational>::is_square(const Rational& x) const {
  if (x.sign() < 0) return false;
  const mpz_class n = x.num(), d = x.den();
  return mpz_perfect_square_p(n.get_mpz_t()) != 0 && mpz_perfect_square_p(d.get_mpz_t()) != 0;
}

Rational Field<Rational>::random(Rng& rng, long h) const {
  std::uniform_int_distribution<long> num(-h, h), den(1, h);
  const long n = num(rng);
  return Rational(n, den(rng));
}

Rational Field<Rational>::random_nonzero(Rng& rng, long h) const {
  for (;;) {
    Rational r = random(rng, h);
    if (!r.is_zero()) return r;
  }
}

std::vector<Rational> Field<Rational>::small_elements(std::size_t count) const {
  std::vector<Rational> out;
  if (count == 0) return out;
  out.emplace_back(0);
  for (long h = 1; out.size() < count; ++h) {
    // every p/q in lowest terms with max(|p|, q) == h, smaller magnitudes first
    for (long q = h; q >= 1 && out.size() < count; --q) {
      for (long p = 1; p <= h && out.size() < count; ++p) {
        if (std::max(p, q) != h || gcd(mpz_class(p), mpz_class(q)) != 1) continue;
        out.emplace_back(p, q);
        if (out.size() < count) out.emplace_back(-p, q);
      }
    }
  }
  return out;
}

Field<Fp>::Field(std::uint32_t p) : p_(p), nonresidue_(0) {
  if (p < 5 || !is_prime(p)) {
    throw std::invalid_argument("Field<Fp>: modulus must be a prime >= 5, got " + std::to_string(p));
  }
  for (std::uint32_t r = 2; r < p; ++r) {
    if (!Fp(r, p).is_square()) {
      nonresidue_ = r;
      break;
    }
  }
}

Fp Field<Fp>::parse(const std::string& s) const {
  const Rational r = Rational::parse(s);
  Fp num(0, p_);
  mpz_class n = r.num() % p_;
  if (n < 0) n += p_;
  num = Fp(static_cast<long long>(n.get_ui()), p_);
  mpz_class d = r.den() % p_;
  if (d == 0) throw std::invalid_argument("Fp: denominator divisible by p in '" + s + "'");
  return num / Fp(static_cast<long long>(d.get_ui()), p_);
}

SquareClass<Fp> Field<Fp>::square_class(const Fp& x) const {
  const Fp b = x.bind(p_);
  if (b.is_zero()) return {};
  return {false, b.is_square() ? Fp(1, p_) : Fp(nonresidue_, p_)};
}

Fp Field<Fp>::random(Rng& rng, long) const {
  std::uniform_int_distribution<std::uint32_t> d(0, p_ - 1);
  return Fp(d(rng), p_);
}

Fp Field<Fp>::random_nonzero(Rng& rng, long) const {
  std::uniform_int_distribution<std::uint32_t> d(1, p_ - 1);
  return Fp(d(rng), p_);
}

std::vector<Fp> Field<Fp>::small_elements(std::size_t count) const {
  std::vector<Fp> out;
  if (count > p_) count = p_;
  if (count == 0) return out;
  out.emplace_back(0, p_);
  for (long k = 1; out.size() < count; ++k) {
    out.emplace_back(k, p_);
    if (out.size() < count && Fp(-k, p_) != Fp(k, p_)) out.emplace_back(-k, p_);
  }
  return out;
}

}  // namespace bcube
