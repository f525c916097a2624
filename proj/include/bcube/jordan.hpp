#ifndef BCUBE_JORDAN_HPP
#define BCUBE_JORDAN_HPP

#include "bcube/exact_solve.hpp"
#include "bcube/quad_ext.hpp"
#include "bcube/twisted_comp.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace bcube {

template <class S>
using KMatrix = Eigen::Matrix<QuadExt<S>, 3, 3>;

/// Coordinates of an element of C = E-perp in its fixed F-basis.
template <class S>
using CVec = Eigen::Matrix<S, 6, 1>;

enum class JordanKind { FullMatrix, Hermitian };

template <class S>
struct JordanInvariants {
  S trace;
  S second;
  S norm;
};

/// The 9-dimensional Freudenthal-Jordan algebras M_3(F) and H_3(F(sqrt d)),
/// with a o b = (ab + ba)/2 and the cubic structure from the matrix
/// characteristic polynomial.
///
/// Fixed F-basis: the three diagonal idempotents, then six vectors spanning
/// the off-diagonal part C. For Hermitian(d) the off-diagonal part is
///   [[0, z3bar, z2], [z3, 0, z1bar], [z2bar, z1, 0]]
/// with C-coordinates (x1, y1, x2, y2, x3, y3), z_k = x_k + y_k sqrt d.
/// For M_3(F) the C-coordinates are the entries at (2,1), (1,2), (0,2),
/// (2,0), (1,0), (0,1).
template <class S>
class JordanAlg {
 public:
  static JordanAlg full_matrix(const Field<S>& F) { return JordanAlg(F, JordanKind::FullMatrix, F.from_int(0)); }
  static JordanAlg hermitian(const Field<S>& F, const S& d) {
    if (d == F.from_int(0)) throw std::invalid_argument("JordanAlg: d must be nonzero");
    return JordanAlg(F, JordanKind::Hermitian, d);
  }

  const Field<S>& field() const { return field_; }
  JordanKind kind() const { return kind_; }
  const S& d() const { return d_; }

  /// Square class of the discriminant algebra K_J: d for Hermitian(d), 1 for M_3(F).
  SquareClass<S> k_j() const {
    return kind_ == JordanKind::Hermitian ? field_.square_class(d_) : field_.square_class(field_.from_int(1));
  }

  QuadExt<S> k(const S& x, const S& y = S(0)) const { return QuadExt<S>(x, y, d_); }
  QuadExt<S> k_int(long x) const { return k(field_.from_int(x), field_.from_int(0)); }

  KMatrix<S> zero() const { return KMatrix<S>::Constant(k_int(0)); }
  KMatrix<S> identity() const {
    KMatrix<S> m = zero();
    for (int i = 0; i < 3; ++i) m(i, i) = k_int(1);
    return m;
  }

  bool contains(const KMatrix<S>& a) const {
    if (kind_ == JordanKind::FullMatrix) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (!a(i, j).in_base()) return false;
      return true;
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!(a(i, j) == a(j, i).conj())) return false;
    return true;
  }

  KMatrix<S> jordan_product(const KMatrix<S>& a, const KMatrix<S>& b) const {
    return (a * b + b * a) * k(field_.from_int(1) / field_.from_int(2));
  }

  JordanInvariants<S> invariants(const KMatrix<S>& a) const {
    const S t = base(a.trace());
    const S t2 = base((a * a).trace());
    return {t, (t * t - t2) / field_.from_int(2), base(a.determinant())};
  }

  /// a^# = a^2 - T(a) a + S(a) 1.
  KMatrix<S> sharp(const KMatrix<S>& a) const {
    const JordanInvariants<S> c = invariants(a);
    return a * a - a * k(c.trace) + identity() * k(c.second);
  }

  KMatrix<S> cross(const KMatrix<S>& a, const KMatrix<S>& b) const { return sharp(a + b) - sharp(a) - sharp(b); }

  /// The diagonal embedding of split E.
  KMatrix<S> embed(const Vec3<S>& e) const {
    KMatrix<S> m = zero();
    for (int i = 0; i < 3; ++i) m(i, i) = k(e(i));
    return m;
  }

  KMatrix<S> from_c(const CVec<S>& c) const {
    KMatrix<S> m = zero();
    if (kind_ == JordanKind::FullMatrix) {
      m(2, 1) = k(c(0));
      m(1, 2) = k(c(1));
      m(0, 2) = k(c(2));
      m(2, 0) = k(c(3));
      m(1, 0) = k(c(4));
      m(0, 1) = k(c(5));
      return m;
    }
    const QuadExt<S> z1 = k(c(0), c(1)), z2 = k(c(2), c(3)), z3 = k(c(4), c(5));
    m(0, 1) = z3.conj();
    m(0, 2) = z2;
    m(1, 0) = z3;
    m(1, 2) = z1.conj();
    m(2, 0) = z2.conj();
    m(2, 1) = z1;
    return m;
  }

  /// Hermitian coordinates z1, z2, z3 of an element of C.
  std::array<QuadExt<S>, 3> hermitian_coords(const CVec<S>& c) const {
    return {k(c(0), c(1)), k(c(2), c(3)), k(c(4), c(5))};
  }
  CVec<S> from_hermitian_coords(const std::array<QuadExt<S>, 3>& z) const {
    CVec<S> c;
    for (int i = 0; i < 3; ++i) {
      c(2 * i) = z[i].x();
      c(2 * i + 1) = z[i].y();
    }
    return c;
  }

  /// Decomposition a = embed(e) + from_c(c) along J = E + C, found by an
  /// exact linear solve in the fixed basis. Throws std::domain_error if a is
  /// not in J.
  std::pair<Vec3<S>, CVec<S>> decompose(const KMatrix<S>& a) const {
    using Basis = Eigen::Matrix<S, 18, 9>;
    using Flat = Eigen::Matrix<S, 18, 1>;
    const S zero_s = field_.from_int(0);
    auto flatten = [&](const KMatrix<S>& m) {
      Flat out;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          out(3 * i + j) = m(i, j).x();
          out(9 + 3 * i + j) = m(i, j).y();
        }
      return out;
    };
    Basis B = Basis::Constant(zero_s);
    for (int i = 0; i < 3; ++i) {
      Vec3<S> e = Vec3<S>::Constant(zero_s);
      e(i) = field_.from_int(1);
      B.col(i) = flatten(embed(e));
    }
    for (int i = 0; i < 6; ++i) {
      CVec<S> c = CVec<S>::Constant(zero_s);
      c(i) = field_.from_int(1);
      B.col(3 + i) = flatten(from_c(c));
    }
    const Flat target = flatten(a);
    const auto sol = solve_exact<S, 18, 9>(B, target);
    if (!sol) throw std::domain_error("JordanAlg: matrix is not an element of J");
    return {sol->template head<3>(), sol->template tail<6>()};
  }

  KMatrix<S> random(Rng& rng, long h = 100) const {
    Vec3<S> e;
    CVec<S> c;
    for (int i = 0; i < 3; ++i) e(i) = field_.random(rng, h);
    for (int i = 0; i < 6; ++i) c(i) = field_.random(rng, h);
    return embed(e) + from_c(c);
  }

 private:
  JordanAlg(const Field<S>& F, JordanKind kind, const S& d) : field_(F), kind_(kind), d_(d) {}

  S base(const QuadExt<S>& z) const {
    if (!z.in_base()) throw std::logic_error("JordanAlg: invariant outside F");
    return z.x();
  }

  Field<S> field_;
  JordanKind kind_;
  S d_;
};

/// Springer's decomposition J = E + C with E the diagonal, split.
///   e o v := -e x v makes C an E-module,
///   v^# = (-Q(v), beta(v)) in E + C.
/// The result is re-expressed in a good basis {v, beta(v)} of C found by
/// the reduced-vector search.
template <class S>
class Springer {
 public:
  explicit Springer(JordanAlg<S> J) : J_(std::move(J)), E_(CubicAlg<S>::split(J_.field())) { build(); }

  const JordanAlg<S>& jordan() const { return J_; }
  const CubicAlg<S>& algebra() const { return E_; }

  Vec3<S> Q(const CVec<S>& v) const { return -J_.decompose(J_.sharp(J_.from_c(v))).first; }
  CVec<S> beta(const CVec<S>& v) const { return J_.decompose(J_.sharp(J_.from_c(v))).second; }

  /// e o v = -e x v. Throws std::logic_error if the result leaves C.
  CVec<S> act(const Vec3<S>& e, const CVec<S>& v) const {
    const auto [ep, cp] = J_.decompose(-J_.cross(J_.embed(e), J_.from_c(v)));
    if (!(ep == E_.zero())) throw std::logic_error("Springer: e o v is not in C");
    return cp;
  }

  S norm_form(const CVec<S>& v) const {
    const auto n = E_.as_scalar(Q(v + beta(v)) - Q(v) - Q(beta(v)));
    if (!n) throw std::domain_error("Springer: b_Q(v, beta(v)) is not in F");
    return *n;
  }

  S delta_c(const CVec<S>& v) const {
    const S n = norm_form(v);
    return n * n - E_.field().from_int(4) * E_.norm(Q(v));
  }

  /// The reduced vector v and the good-basis cube (1, 0, -Q(v), -N_C(v)).
  const CVec<S>& reduced_vector() const { return v_; }
  const Cube<S>& cube() const { return cube_; }
  CompAlg2<S> comp_algebra() const { return phi(E_, cube_); }

  /// (x, y) -> x o v + y o beta(v).
  CVec<S> to_c(const EPair<S>& z) const { return act(z.x, v_) + act(z.y, bv_); }

  /// All 18 pairings Tr(i(e_i) o c_j) vanish.
  bool orthogonal() const {
    const S zero = J_.field().from_int(0);
    for (int i = 0; i < 3; ++i) {
      Vec3<S> e = E_.zero();
      e(i) = J_.field().from_int(1);
      for (int j = 0; j < 6; ++j) {
        CVec<S> c = CVec<S>::Constant(zero);
        c(j) = J_.field().from_int(1);
        if (!(J_.invariants(J_.jordan_product(J_.embed(e), J_.from_c(c))).trace == zero)) return false;
      }
    }
    return true;
  }

  /// (x, y) -> x o v + y o beta(v) carries the good-basis algebra onto (C, Q, beta).
  bool isomorphism_holds() const {
    const CompAlg2<S> C = comp_algebra();
    std::array<EPair<S>, 6> basis;
    for (int i = 0; i < 6; ++i) basis[i] = f_basis_vector(E_, i);
    auto check = [&](const EPair<S>& z) {
      const CVec<S> w = to_c(z);
      return Q(w) == C.Q(z) && beta(w) == to_c(C.beta(z));
    };
    for (int i = 0; i < 6; ++i) {
      if (!check(basis[i])) return false;
      for (int j = i + 1; j < 6; ++j)
        if (!check(basis[i] + basis[j])) return false;
    }
    return true;
  }

 private:
  void build() {
    const Field<S>& F = J_.field();
    const S zero = F.from_int(0);
    const auto coords = F.small_elements(F.is_finite() ? F.characteristic() : 5);
    std::array<std::size_t, 6> idx{};
    for (;;) {
      CVec<S> v;
      for (int i = 0; i < 6; ++i) v(i) = coords[idx[i]];
      if (!(delta_c(v) == zero)) {
        v_ = v;
        bv_ = beta(v);
        cube_ = {F.from_int(1), E_.zero(), -Q(v), -norm_form(v)};
        return;
      }
      int k = 0;
      while (k < 6 && ++idx[k] == coords.size()) idx[k++] = 0;
      if (k == 6) break;
    }
    throw std::runtime_error("Springer: no reduced vector found");
  }

  JordanAlg<S> J_;
  CubicAlg<S> E_;
  CVec<S> v_;
  CVec<S> bv_;
  Cube<S> cube_;
};

/// [K_C][K_E][K_J] = 1: the product of the three square-class
/// representatives is a square.
template <class S>
bool kc_ke_kj_check(const Springer<S>& sp) {
  const Field<S>& F = sp.jordan().field();
  const SquareClass<S> kc = k_c(sp.comp_algebra());
  const SquareClass<S> ke = sp.algebra().discriminant_class();
  const SquareClass<S> kj = sp.jordan().k_j();
  if (kc.zero || ke.zero || kj.zero) return false;
  return F.is_square(kc.rep * ke.rep * kj.rep);
}

}  // namespace bcube

#endif  // BCUBE_JORDAN_HPP
