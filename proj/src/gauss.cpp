#include "bcube/gauss.hpp"

#include <stdexcept>

namespace bcube {

namespace {

using Col = Eigen::Matrix<Rational, 2, 1>;

struct IntVec {
  mpz_class x;
  mpz_class y;
};

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rational det2(const QMat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

}  // namespace

QMat2 Hnf::basis() const {
  QMat2 m;
  m << h11, h12, Rational(0), h22;
  return m;
}

Hnf hnf(const std::vector<Col>& columns) {
  mpz_class scale = 1;
  for (const Col& c : columns) {
    for (int i = 0; i < 2; ++i) scale = lcm(scale, c(i).den());
  }
  // Column reduction on the integer matrix scale * columns: Euclid on the
  // second coordinate leaves one pivot column; the rest lie on the first axis.
  IntVec pivot{0, 0};
  mpz_class h11 = 0;
  for (const Col& c : columns) {
    IntVec v{(c(0) * Rational(scale)).num(), (c(1) * Rational(scale)).num()};
    while (v.y != 0) {
      const mpz_class q = floor_div(pivot.y, v.y);
      pivot.x -= q * v.x;
      pivot.y -= q * v.y;
      std::swap(pivot, v);
    }
    h11 = gcd(h11, v.x);
  }
  if (pivot.y < 0) {
    pivot.x = -pivot.x;
    pivot.y = -pivot.y;
  }
  if (h11 == 0 || pivot.y == 0) throw std::invalid_argument("hnf: columns do not span a full lattice");
  mpz_class h12;
  mpz_fdiv_r(h12.get_mpz_t(), pivot.x.get_mpz_t(), h11.get_mpz_t());
  return {Rational(h11, scale), Rational(h12, scale), Rational(pivot.y, scale)};
}

QuadOrder::QuadOrder(const mpz_class& disc) : disc_(disc) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), disc.get_mpz_t(), 4);
  if (r != 0 && r != 1) throw std::invalid_argument("QuadOrder: discriminant must be 0 or 1 mod 4");
  if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t()) != 0) {
    throw std::invalid_argument("QuadOrder: discriminant must not be a square");
  }
}

QElem QuadOrder::omega() const { return QElem(Rational(disc_, 2), Rational(1, 2), d()); }

Eigen::Matrix<Rational, 2, 1> QuadOrder::coords(const QElem& z) { return {z.x(), z.y()}; }

QMat2 QuadOrder::basis() const {
  QMat2 m;
  m.col(0) = coords(QElem(Rational(1), Rational(0), d()));
  m.col(1) = coords(omega());
  return m;
}

bool QuadOrder::closed_under_multiplication() const {
  const QElem w = omega();
  const Rational dd = d();
  return w * w == QElem(dd) * w - QElem(dd * (dd - Rational(1)) / Rational(4));
}

QuadModule::QuadModule(const QuadOrder& R, Hnf h, int orientation, std::array<QElem, 2> basis)
    : disc_(R.disc()), det_r_(det2(R.basis())), lattice_(std::move(h)), orientation_(orientation),
      basis_(std::move(basis)) {}

QuadModule QuadModule::from_basis(const QuadOrder& R, const QElem& z1, const QElem& z2) {
  QMat2 b;
  b.col(0) = QuadOrder::coords(z1);
  b.col(1) = QuadOrder::coords(z2);
  const Rational det = det2(b) / det2(R.basis());
  if (det.is_zero()) throw std::invalid_argument("QuadModule: basis is degenerate");
  return QuadModule(R, hnf({b.col(0), b.col(1)}), det.sign(), {z1, z2});
}

QuadModule QuadModule::principal(const QuadOrder& R, const QElem& delta) {
  const QElem one(Rational(1), Rational(0), R.d());
  const QElem z1 = delta * one, z2 = delta * R.omega();
  QuadModule m = from_basis(R, z1, z2);
  m.orientation_ = delta.norm().sign();
  return m;
}

std::array<QElem, 2> QuadModule::generators() const {
  const Rational d(disc_);
  return {QElem(lattice_.h11, Rational(0), d), QElem(lattice_.h12, lattice_.h22, d)};
}

Rational QuadModule::norm() const {
  return Rational(orientation_) * (lattice_.h11 * lattice_.h22 / det_r_).abs();
}

std::optional<std::array<Rational, 2>> QuadModule::coords_in_basis(const QElem& z) const {
  QMat2 b;
  b.col(0) = QuadOrder::coords(basis_[0]);
  b.col(1) = QuadOrder::coords(basis_[1]);
  const Rational det = det2(b);
  const Col c = QuadOrder::coords(z);
  // Cramer's rule
  const Rational u = (c(0) * b(1, 1) - b(0, 1) * c(1)) / det;
  const Rational w = (b(0, 0) * c(1) - c(0) * b(1, 0)) / det;
  return std::array<Rational, 2>{u, w};
}

bool QuadModule::contains(const QElem& z) const {
  const auto c = coords_in_basis(z);
  return c && (*c)[0].is_integer() && (*c)[1].is_integer();
}

QuadModule module_product(const QuadOrder& R, const QuadModule& m1, const QuadModule& m2) {
  std::vector<Col> cols;
  for (const QElem& a : m1.generators())
    for (const QElem& b : m2.generators()) cols.push_back(QuadOrder::coords(a * b));
  const Hnf h = hnf(cols);
  QuadModule out = QuadModule::from_basis(R, QElem(h.h11, Rational(0), R.d()), QElem(h.h12, h.h22, R.d()));
  return QuadModule::from_basis(R, out.generators()[0] * QElem(Rational(m1.orientation() * m2.orientation())),
                                out.generators()[1]);
}

std::array<mpz_class, 3> IntegralReducedCube::form(int i) const {
  const int j = (i + 1) % 3, k = (i + 2) % 3;
  return {-f[i], -b, f[j] * f[k]};
}

bool IntegralReducedCube::form_primitive(int i) const {
  const auto c = form(i);
  return gcd(gcd(c[0], c[1]), c[2]) == 1;
}

Cube<Rational> IntegralReducedCube::cube(const CubicAlg<Rational>& split) const {
  return {Rational(1), split.zero(), Vec3<Rational>(Rational(f[0]), Rational(f[1]), Rational(f[2])), Rational(b)};
}

ModuleTriple cube_to_triple(const IntegralReducedCube& v) {
  for (const auto& fi : v.f) {
    if (fi == 0) throw std::invalid_argument("cube_to_triple: f_i must be nonzero");
  }
  const QuadOrder R(v.disc());
  const QElem one(Rational(1), Rational(0), R.d());
  const QElem root = R.sqrt_d();
  const Rational b(v.b);
  std::vector<QuadModule> ms;
  for (const auto& fi : v.f) {
    const QElem w = (QElem(b) - root) / QElem(Rational(2) * Rational(fi));
    ms.push_back(QuadModule::from_basis(R, one, w));
  }
  const QElem delta = QElem(Rational(-2)) / (QElem(b) + root);
  return {R, {ms[0], ms[1], ms[2]}, delta};
}

Colinearity check_colinear(const ModuleTriple& t) {
  const QuadModule prod = module_product(t.order, module_product(t.order, t.modules[0], t.modules[1]), t.modules[2]);
  const QuadModule principal = QuadModule::principal(t.order, t.delta);
  Colinearity c;
  c.contained = principal.contains(prod.generators()[0]) && principal.contains(prod.generators()[1]);
  c.lattice_equal = prod.lattice() == principal.lattice();
  c.norms_equal = t.modules[0].norm() * t.modules[1].norm() * t.modules[2].norm() == t.delta.norm();
  c.orientation_equal = prod.orientation() == principal.orientation();
  return c;
}

IntegralCompAlg::IntegralCompAlg(IntegralReducedCube cube, ModuleTriple triple)
    : v_(std::move(cube)), t_(std::move(triple)) {
  if (!check_colinear(t_).ok()) throw std::invalid_argument("IntegralCompAlg: triple is not colinear");
}

void IntegralCompAlg::require_member(const Point& z) const {
  for (int i = 0; i < 3; ++i) {
    if (!t_.modules[i].contains(z[i])) {
      throw std::domain_error("IntegralCompAlg: z_" + std::to_string(i + 1) + " is not in M_" +
                              std::to_string(i + 1));
    }
  }
}

std::array<Rational, 3> IntegralCompAlg::Q(const Point& z) const {
  std::array<Rational, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = -Rational(v_.f[i]) * z[i].norm();
  return out;
}

IntegralCompAlg::Point IntegralCompAlg::beta(const Point& z) const {
  Point out;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    out[i] = t_.delta * QElem(Rational(mpz_class(v_.f[j] * v_.f[k]))) * z[j].conj() * z[k].conj();
  }
  return out;
}

Rational IntegralCompAlg::norm_form(const Point& z) const { return (z[0] * z[1] * z[2] / t_.delta).trace(); }

std::array<Rational, 3> IntegralCompAlg::bilinear_norm(const Point& z) const {
  const Point bz = beta(z);
  std::array<Rational, 3> out;
  for (int i = 0; i < 3; ++i) {
    // b_Q(z, w)_i = -f_i Tr(z_i wbar_i)
    out[i] = -Rational(v_.f[i]) * (z[i] * bz[i].conj()).trace();
  }
  return out;
}

IntegralCompAlg::Point IntegralCompAlg::from_coords(const std::array<Rational, 3>& x,
                                                    const std::array<Rational, 3>& y) const {
  Point z;
  for (int i = 0; i < 3; ++i) {
    const auto& basis = t_.modules[i].ordered_basis();
    z[i] = basis[0] * QElem(x[i]) + basis[1] * QElem(y[i]);
  }
  return z;
}

std::pair<std::array<Rational, 3>, std::array<Rational, 3>> IntegralCompAlg::to_coords(const Point& z) const {
  std::array<Rational, 3> x, y;
  for (int i = 0; i < 3; ++i) {
    const auto c = *t_.modules[i].coords_in_basis(z[i]);
    x[i] = c[0];
    y[i] = c[1];
  }
  return {x, y};
}

std::pair<std::array<Rational, 3>, std::array<Rational, 3>> IntegralCompAlg::face_beta(
    const std::array<Rational, 3>& x, const std::array<Rational, 3>& y) const {
  std::array<Rational, 3> xo, yo;
  const Rational b(v_.b);
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const Rational fj(v_.f[j]), fk(v_.f[k]), fi(v_.f[i]);
    // z_k^T [[0, f_k], [f_j, b]] z_j with z = (x, y)
    xo[i] = -(x[k] * fk * y[j] + y[k] * fj * x[j] + y[k] * b * y[j]);
    yo[i] = x[k] * x[j] + fi * y[k] * y[j];
  }
  return {xo, yo};
}

}  // namespace bcube
