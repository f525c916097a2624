#ifndef BCUBE_GAUSS_HPP
#define BCUBE_GAUSS_HPP

#include "bcube/cube.hpp"
#include "bcube/quad_ext.hpp"

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bcube {

using QElem = QuadExt<Rational>;
using QMat2 = Eigen::Matrix<Rational, 2, 2>;

/// Canonical basis [[h11, h12], [0, h22]] (columns) of a full lattice in
/// Q^2: h11, h22 > 0 and 0 <= h12 < h11.
struct Hnf {
  Rational h11;
  Rational h12;
  Rational h22;

  QMat2 basis() const;
  friend bool operator==(const Hnf&, const Hnf&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Hnf& h) {
    return os << "[[" << h.h11 << ", " << h.h12 << "], [0, " << h.h22 << "]]";
  }
};

/// HNF of the lattice spanned by the given columns. Throws
/// std::invalid_argument if they do not span a rank-2 lattice.
Hnf hnf(const std::vector<Eigen::Matrix<Rational, 2, 1>>& columns);

/// The order of discriminant D with basis {1, (D + sqrt D)/2}.
class QuadOrder {
 public:
  /// Throws std::invalid_argument unless D = 0, 1 mod 4 and D is not a square.
  explicit QuadOrder(const mpz_class& disc);

  const mpz_class& disc() const { return disc_; }
  Rational d() const { return Rational(disc_); }
  QElem omega() const;
  QElem sqrt_d() const { return QElem(Rational(0), Rational(1), d()); }

  /// Coordinates of z in {1, sqrt D}.
  static Eigen::Matrix<Rational, 2, 1> coords(const QElem& z);
  /// Columns 1 and omega in {1, sqrt D} coordinates.
  QMat2 basis() const;

  /// omega^2 = D omega - D(D-1)/4, checked in K.
  bool closed_under_multiplication() const;

 private:
  mpz_class disc_;
};

/// A full lattice in Q(sqrt D) with a sign. The norm is
/// orientation * [R : M] = orientation * |det basis / det R-basis|.
class QuadModule {
 public:
  /// The module spanned by the ordered basis (z1, z2), oriented by the sign
  /// of its determinant relative to {1, omega}.
  static QuadModule from_basis(const QuadOrder& R, const QElem& z1, const QElem& z2);
  /// (delta) = delta R, oriented by the sign of N(delta).
  static QuadModule principal(const QuadOrder& R, const QElem& delta);

  const Hnf& lattice() const { return lattice_; }
  int orientation() const { return orientation_; }
  /// Generators in K, from the HNF basis.
  std::array<QElem, 2> generators() const;
  Rational norm() const;
  bool contains(const QElem& z) const;
  /// Coordinates of z in the ordered basis the module was built from.
  std::optional<std::array<Rational, 2>> coords_in_basis(const QElem& z) const;
  const std::array<QElem, 2>& ordered_basis() const { return basis_; }

 private:
  QuadModule(const QuadOrder& R, Hnf h, int orientation, std::array<QElem, 2> basis);

  mpz_class disc_;
  Rational det_r_;
  Hnf lattice_;
  int orientation_;
  std::array<QElem, 2> basis_;
};

/// Lattice spanned by the four products, orientation the product of orientations.
QuadModule module_product(const QuadOrder& R, const QuadModule& m1, const QuadModule& m2);

/// Integer reduced cube (1, 0, f, b) as its three face forms
///   Q_1 = -f1 x^2 - b xy + f2 f3 y^2 and cyclic.
struct IntegralReducedCube {
  mpz_class b;
  std::array<mpz_class, 3> f;

  mpz_class disc() const { return b * b + 4 * f[0] * f[1] * f[2]; }
  /// Coefficients (x^2, xy, y^2) of Q_i.
  std::array<mpz_class, 3> form(int i) const;
  bool form_primitive(int i) const;
  bool projective() const { return form_primitive(0) && form_primitive(1) && form_primitive(2); }
  Cube<Rational> cube(const CubicAlg<Rational>& split) const;
};

/// Module triple of a reduced cube:
///   M_i = {1, (b - sqrt D)/(2 f_i)},  delta = -2/(b + sqrt D).
struct ModuleTriple {
  QuadOrder order;
  std::array<QuadModule, 3> modules;
  QElem delta;
};

/// Throws std::invalid_argument if some f_i = 0 or D is a square.
ModuleTriple cube_to_triple(const IntegralReducedCube& v);

struct Colinearity {
  bool contained = false;      // M1 M2 M3 inside delta R
  bool lattice_equal = false;  // HNF(M1 M2 M3) == HNF(delta R)
  bool norms_equal = false;    // N(M1) N(M2) N(M3) == N(delta)
  bool orientation_equal = false;
  bool ok() const { return lattice_equal && norms_equal; }
};

/// Equality holds for projective cubes; otherwise only containment.
Colinearity check_colinear(const ModuleTriple& t);

/// The integral twisted composition algebra on M1 x M2 x M3:
///   Q(z) = -f (N z1, N z2, N z3),
///   beta(z) = delta f^# (zbar)^#,
///   N_C(z) = Tr(z1 z2 z3 / delta).
class IntegralCompAlg {
 public:
  /// Throws std::invalid_argument if the triple is not colinear.
  IntegralCompAlg(IntegralReducedCube cube, ModuleTriple triple);

  using Point = std::array<QElem, 3>;

  const ModuleTriple& triple() const { return t_; }
  const IntegralReducedCube& cube() const { return v_; }

  /// Throws std::domain_error unless z_i lies in M_i.
  void require_member(const Point& z) const;

  std::array<Rational, 3> Q(const Point& z) const;
  Point beta(const Point& z) const;
  Rational norm_form(const Point& z) const;
  /// Polarization b_Q(z, beta(z)), componentwise.
  std::array<Rational, 3> bilinear_norm(const Point& z) const;

  /// z_i = x_i + y_i omega_i with omega_i = (b - sqrt D)/(2 f_i).
  Point from_coords(const std::array<Rational, 3>& x, const std::array<Rational, 3>& y) const;
  std::pair<std::array<Rational, 3>, std::array<Rational, 3>> to_coords(const Point& z) const;

  /// beta in coordinates by the face matrices:
  ///   x'_1 = -z3^T [[0, f3], [f2, b]] z2,  y'_1 = z3^T diag(1, f1) z2, and cyclic.
  std::pair<std::array<Rational, 3>, std::array<Rational, 3>> face_beta(const std::array<Rational, 3>& x,
                                                                         const std::array<Rational, 3>& y) const;

 private:
  IntegralReducedCube v_;
  ModuleTriple t_;
};

}  // namespace bcube

#endif  // BCUBE_GAUSS_HPP
