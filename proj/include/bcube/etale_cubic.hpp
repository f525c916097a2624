#ifndef BCUBE_ETALE_CUBIC_HPP
#define BCUBE_ETALE_CUBIC_HPP

#include "bcube/field.hpp"

#include <Eigen/Core>
#include <Eigen/LU>

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace bcube {

template <class S>
using Vec3 = Eigen::Matrix<S, 3, 1>;
template <class S>
using Mat3 = Eigen::Matrix<S, 3, 3>;

enum class CubicShape { Split, QuadPair, CubicPoly };

/// Coefficients of x^3 - T x^2 + S x - N, the characteristic polynomial of
/// multiplication by an element.
template <class S>
struct CharInvariants {
  S trace;
  S second;
  S norm;
};

/// An etale cubic F-algebra given by structure constants in a fixed basis.
///
/// Bases by shape:
///   Split           standard idempotents of F^3
///   QuadPair(d)     (1,0), (0,1), (0,sqrt d) in F x F(sqrt d)
///   CubicPoly(c)    1, t, t^2 in F[t]/(t^3 + c2 t^2 + c1 t + c0)
/// Elements are coordinate vectors (Vec3) in that basis, so all linear
/// operations are plain Eigen expressions; the multiplicative structure goes
/// through the member functions below.
template <class S>
class CubicAlg {
 public:
  using Scalar = S;
  using Elem = Vec3<S>;

  static CubicAlg split(const Field<S>& F) {
    CubicAlg E(F, CubicShape::Split);
    for (int i = 0; i < 3; ++i) {
      E.mult_[i] = zero_matrix(F);
      E.mult_[i](i, i) = F.from_int(1);
    }
    E.finish();
    return E;
  }

  static CubicAlg quad_pair(const Field<S>& F, const S& d) {
    CubicAlg E(F, CubicShape::QuadPair);
    E.params_ = {d, F.from_int(0), F.from_int(0)};
    const S one = F.from_int(1);
    for (auto& m : E.mult_) m = zero_matrix(F);
    E.mult_[0](0, 0) = one;  // b0*b0 = b0
    E.mult_[1](1, 1) = one;  // b1*b1 = b1
    E.mult_[1](2, 2) = one;  // b1*b2 = b2
    E.mult_[2](2, 1) = one;  // b2*b1 = b2
    E.mult_[2](1, 2) = d;    // b2*b2 = d b1
    E.finish();
    return E;
  }

  /// F[t]/(t^3 + c2 t^2 + c1 t + c0).
  static CubicAlg cubic_poly(const Field<S>& F, const S& c0, const S& c1, const S& c2) {
    CubicAlg E(F, CubicShape::CubicPoly);
    E.params_ = {c0, c1, c2};
    Mat3<S> companion = zero_matrix(F);
    companion(1, 0) = F.from_int(1);
    companion(2, 1) = F.from_int(1);
    companion(0, 2) = -c0;
    companion(1, 2) = -c1;
    companion(2, 2) = -c2;
    E.mult_[0] = identity_matrix(F);
    E.mult_[1] = companion;
    E.mult_[2] = companion * companion;
    E.finish();
    return E;
  }

  const Field<S>& field() const { return field_; }
  CubicShape shape() const { return shape_; }
  /// d for QuadPair; (c0, c1, c2) for CubicPoly.
  const std::array<S, 3>& params() const { return params_; }

  /// Matrix of multiplication by the i-th basis element.
  const Mat3<S>& basis_mult(int i) const { return mult_[i]; }
  /// Gram matrix Tr(b_i b_j) of the trace form.
  const Mat3<S>& trace_gram() const { return gram_; }

  Elem zero() const { return Elem::Constant(field_.from_int(0)); }
  const Elem& unit() const { return unit_; }
  Elem scalar(const S& c) const { return unit_ * c; }
  Elem make(const S& x0, const S& x1, const S& x2) const { return Elem(x0, x1, x2); }
  Elem make(long x0, long x1, long x2) const {
    return Elem(field_.from_int(x0), field_.from_int(x1), field_.from_int(x2));
  }

  Mat3<S> mult_matrix(const Elem& a) const {
    return mult_[0] * a(0) + mult_[1] * a(1) + mult_[2] * a(2);
  }

  Elem mul(const Elem& a, const Elem& b) const {
    if (shape_ == CubicShape::Split) return a.cwiseProduct(b);
    return mult_matrix(a) * b;
  }
  Elem mul(const Elem& a, const Elem& b, const Elem& c) const { return mul(mul(a, b), c); }

  CharInvariants<S> char_invariants(const Elem& a) const {
    const S t = trace(a);
    return {t, (t * t - trace(mul(a, a))) / field_.from_int(2), norm(a)};
  }

  /// Linear functional: Tr(a) = sum_i a_i Tr(b_i).
  S trace(const Elem& a) const { return traces_.dot(a); }
  S norm(const Elem& a) const {
    if (shape_ == CubicShape::Split) return a(0) * a(1) * a(2);
    return mult_matrix(a).determinant();
  }

  /// a^# = a^2 - T(a) a + S(a), so that a a^# = N(a).
  Elem sharp(const Elem& a) const {
    if (shape_ == CubicShape::Split) return Elem(a(1) * a(2), a(2) * a(0), a(0) * a(1));
    const Elem a2 = mul(a, a);
    const S t = trace(a);
    return a2 - a * t + unit_ * ((t * t - trace(a2)) / field_.from_int(2));
  }

  /// a x b = (a+b)^# - a^# - b^#, expanded as 2ab - T(a) b - T(b) a + (T(a)T(b) - T(ab)).
  Elem cross(const Elem& a, const Elem& b) const {
    const Elem ab = mul(a, b);
    const S ta = trace(a), tb = trace(b);
    return ab * field_.from_int(2) - b * ta - a * tb + unit_ * (ta * tb - trace(ab));
  }

  /// The F-coordinate of a if a lies in F*1.
  std::optional<S> as_scalar(const Elem& a) const {
    const S c = a(unit_index_) / unit_(unit_index_);
    if (a == unit_ * c) return c;
    return std::nullopt;
  }

  bool is_invertible(const Elem& a) const { return !(norm(a) == field_.from_int(0)); }

  Elem inverse(const Elem& a) const {
    const S n = norm(a);
    if (n == field_.from_int(0)) throw std::domain_error("CubicAlg: element is not invertible");
    return sharp(a) / n;
  }

  Elem random(Rng& rng, long h = 1000) const {
    return Elem(field_.random(rng, h), field_.random(rng, h), field_.random(rng, h));
  }

  Elem random_invertible(Rng& rng, long h = 1000) const {
    for (;;) {
      Elem a = random(rng, h);
      if (is_invertible(a)) return a;
    }
  }

  /// Square class of det(trace gram): the discriminant algebra K_E.
  SquareClass<S> discriminant_class() const { return field_.square_class(gram_.determinant()); }

  /// Unital algebra automorphism check on basis products.
  bool is_automorphism(const Mat3<S>& m) const {
    if (m.determinant() == field_.from_int(0)) return false;
    if (!(m * unit_ == unit_)) return false;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const Elem bij = mult_[i].col(j);
        if (!(m * bij == mul(m.col(i), m.col(j)))) return false;
      }
    }
    return true;
  }

  /// Automorphisms as matrices acting on coordinates.
  ///
  /// Split: the 6 coordinate permutations. QuadPair: identity and conjugation
  /// on the quadratic factor. CubicPoly: every root t' of the defining cubic
  /// inside E gives t -> t'; the search is exhaustive over F_p and only the
  /// identity is reported over Q.
  std::vector<Mat3<S>> automorphisms() const {
    std::vector<Mat3<S>> out;
    switch (shape_) {
      case CubicShape::Split: {
        std::array<int, 3> perm{0, 1, 2};
        do {
          Mat3<S> m = zero_matrix(field_);
          for (int i = 0; i < 3; ++i) m(i, perm[i]) = field_.from_int(1);
          out.push_back(m);
        } while (std::next_permutation(perm.begin(), perm.end()));
        break;
      }
      case CubicShape::QuadPair: {
        out.push_back(identity_matrix(field_));
        Mat3<S> c = identity_matrix(field_);
        c(2, 2) = field_.from_int(-1);
        out.push_back(c);
        break;
      }
      case CubicShape::CubicPoly: {
        if (!field_.is_finite()) {
          out.push_back(identity_matrix(field_));
          break;
        }
        const auto elems = field_.small_elements(field_.characteristic());
        for (const S& u0 : elems) {
          for (const S& u1 : elems) {
            for (const S& u2 : elems) {
              const Elem t(u0, u1, u2);
              const Elem t2 = mul(t, t);
              const Elem value = mul(t2, t) + t2 * params_[2] + t * params_[1] + unit_ * params_[0];
              if (!(value == zero())) continue;
              Mat3<S> m;
              m.col(0) = unit_;
              m.col(1) = t;
              m.col(2) = t2;
              if (is_automorphism(m)) out.push_back(m);
            }
          }
        }
        break;
      }
    }
    return out;
  }

  friend bool operator==(const CubicAlg& a, const CubicAlg& b) {
    return a.field_ == b.field_ && a.shape_ == b.shape_ && a.mult_ == b.mult_;
  }

 private:
  CubicAlg(const Field<S>& F, CubicShape shape)
      : field_(F), shape_(shape), params_{F.from_int(0), F.from_int(0), F.from_int(0)} {}

  static Mat3<S> zero_matrix(const Field<S>& F) { return Mat3<S>::Constant(F.from_int(0)); }
  static Mat3<S> identity_matrix(const Field<S>& F) {
    Mat3<S> m = zero_matrix(F);
    for (int i = 0; i < 3; ++i) m(i, i) = F.from_int(1);
    return m;
  }

  void finish() {
    // The unit solves L(u) = I; for our three bases it is read off directly.
    switch (shape_) {
      case CubicShape::Split: unit_ = make(1, 1, 1); break;
      case CubicShape::QuadPair: unit_ = make(1, 1, 0); break;
      case CubicShape::CubicPoly: unit_ = make(1, 0, 0); break;
    }
    unit_index_ = 0;
    for (int i = 0; i < 3; ++i) traces_(i) = mult_[i].trace();
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) gram_(i, j) = mult_matrix(mult_[i].col(j)).trace();
    }
    if (gram_.determinant() == field_.from_int(0)) {
      throw std::invalid_argument("CubicAlg: trace form is degenerate, algebra is not etale");
    }
    if (!(mult_matrix(unit_) == identity_matrix(field_))) {
      throw std::logic_error("CubicAlg: unit does not act as the identity");
    }
  }

  Field<S> field_;
  CubicShape shape_;
  std::array<S, 3> params_;
  std::array<Mat3<S>, 3> mult_;
  Mat3<S> gram_;
  Elem unit_;
  Elem traces_;
  int unit_index_ = 0;
};

/// (f x y) y + f y^# == Tr(f y^#).
template <class S>
bool check_curious_identity(const CubicAlg<S>& E, const Vec3<S>& f, const Vec3<S>& y) {
  const Vec3<S> fys = E.mul(f, E.sharp(y));
  return E.mul(E.cross(f, y), y) + fys == E.scalar(E.trace(fys));
}

template <class S>
struct NamedAlgebra {
  std::string name;
  CubicAlg<S> algebra;
};

/// One algebra of each shape: F^3, F x F(sqrt d) with d the canonical
/// nonsquare (5 over Q), and a cubic field. Over Q the cubic is t^3 - t - 1;
/// over F_p it is the first t^3 + c1 t + c0 without roots, scanning
/// c1 = -1, 1, -2, 2, ... and then c0 = 1, -1, 2, -2, ...
template <class S>
std::vector<NamedAlgebra<S>> standard_algebras(const Field<S>& F) {
  S d = F.from_int(5);
  S c0 = F.from_int(-1);
  S c1 = F.from_int(-1);
  if constexpr (std::is_same_v<S, Fp>) {
    d = F.nonresidue();
    const auto elems = F.elements();
    auto has_root = [&](const Fp& a1, const Fp& a0) {
      return std::any_of(elems.begin(), elems.end(),
                         [&](const Fp& x) { return (x * x * x + a1 * x + a0).is_zero(); });
    };
    bool found = false;
    for (std::size_t i = 1; i < elems.size() && !found; ++i) {
      for (std::size_t j = 1; j < elems.size() && !found; ++j) {
        if (!has_root(-elems[i], elems[j])) {
          c1 = -elems[i];
          c0 = elems[j];
          found = true;
        }
      }
    }
  }
  return {{"split", CubicAlg<S>::split(F)},
          {"quad_pair", CubicAlg<S>::quad_pair(F, d)},
          {"cubic_poly", CubicAlg<S>::cubic_poly(F, c0, c1, F.from_int(0))}};
}

}  // namespace bcube

#endif  // BCUBE_ETALE_CUBIC_HPP
