#ifndef BCUBE_QUAD_EXT_HPP
#define BCUBE_QUAD_EXT_HPP

#include "bcube/field.hpp"

#include <Eigen/Core>

#include <ostream>
#include <stdexcept>

namespace bcube {

/// Element x + y*sqrt(d) of the quadratic algebra F[t]/(t^2 - d).
///
/// d may be a square, in which case the algebra is F x F and nonzero
/// elements can have norm zero; inverse() then throws. An element built from
/// a scalar alone has d = 0 ("no extension chosen yet") and adopts the d of
/// the first element it is combined with.
template <class S>
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(S x) : x_(std::move(x)), y_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
  QuadExt(S x, S y, S d) : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {}

  const S& x() const { return x_; }
  const S& y() const { return y_; }
  const S& d() const { return d_; }

  QuadExt conj() const { return {x_, -y_, d_}; }
  S norm() const { return x_ * x_ - d_ * y_ * y_; }
  S trace() const { return x_ + x_; }
  bool is_zero() const { return x_ == S(0) && y_ == S(0); }
  bool in_base() const { return y_ == S(0); }

  QuadExt inverse() const {
    const S n = norm();
    if (n == S(0)) throw std::domain_error("QuadExt: element has norm zero, not invertible");
    const S ni = S(1) / n;
    return {x_ * ni, -y_ * ni, d_};
  }

  QuadExt& operator+=(const QuadExt& o) {
    d_ = common(*this, o);
    x_ += o.x_;
    y_ += o.y_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    d_ = common(*this, o);
    x_ -= o.x_;
    y_ -= o.y_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& o) {
    const S d = common(*this, o);
    S nx = x_ * o.x_ + d * y_ * o.y_;
    S ny = x_ * o.y_ + y_ * o.x_;
    x_ = std::move(nx);
    y_ = std::move(ny);
    d_ = d;
    return *this;
  }
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend QuadExt operator-(const QuadExt& a) { return {-a.x_, -a.y_, a.d_}; }

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& z) {
    return os << z.x_ << "+" << z.y_ << "*sqrt(" << z.d_ << ")";
  }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    if (!(a.x_ == b.x_ && a.y_ == b.y_)) return false;
    return a.y_ == S(0) || a.d_ == b.d_ || a.d_ == S(0) || b.d_ == S(0);
  }

 private:
  static S common(const QuadExt& a, const QuadExt& b) {
    if (a.d_ == S(0)) return b.d_;
    if (b.d_ == S(0) || a.d_ == b.d_) return a.d_;
    throw std::domain_error("QuadExt: operands live in different quadratic algebras");
  }

  S x_{0};
  S y_{0};
  S d_{0};
};

}  // namespace bcube

namespace Eigen {

template <class S>
struct NumTraits<bcube::QuadExt<S>> : GenericNumTraits<bcube::QuadExt<S>> {
  using Real = bcube::QuadExt<S>;
  using NonInteger = bcube::QuadExt<S>;
  using Nested = bcube::QuadExt<S>;
  using Literal = bcube::QuadExt<S>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 16
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // BCUBE_QUAD_EXT_HPP
