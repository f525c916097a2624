#include "bcube/gauss.hpp"
#include "bcube/twisted_comp.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bcube;

namespace {

const Field<Rational> QQ;
using R = Rational;
using Col = Eigen::Matrix<Rational, 2, 1>;

// Random reduced integer cube with f_i != 0 and nonsquare discriminant.
IntegralReducedCube random_reduced(std::mt19937_64& gen, bool projective, int bound = 10) {
  std::uniform_int_distribution<int> d(-bound, bound);
  for (;;) {
    IntegralReducedCube v{d(gen), {d(gen), d(gen), d(gen)}};
    if (v.f[0] == 0 || v.f[1] == 0 || v.f[2] == 0) continue;
    if (projective && !v.projective()) continue;
    const mpz_class D = v.disc();
    if (D >= 0 && mpz_perfect_square_p(D.get_mpz_t()) != 0) continue;
    return v;
  }
}

// Index of a lattice spanned by columns: gcd of the 2x2 minors.
R covolume(const std::vector<Col>& cols) {
  mpz_class scale = 1;
  for (const Col& c : cols) scale = lcm(lcm(scale, c(0).den()), c(1).den());
  mpz_class g = 0;
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      const R m = (cols[i](0) * cols[j](1) - cols[i](1) * cols[j](0)) * R(scale) * R(scale);
      g = gcd(g, m.num());
    }
  return R(g, mpz_class(scale * scale));
}

TEST(Hnf, KnownLattices) {
  EXPECT_EQ(hnf({Col(R(2), R(0)), Col(R(0), R(3))}), (Hnf{R(2), R(0), R(3)}));
  EXPECT_EQ(hnf({Col(R(4), R(6)), Col(R(2), R(3)), Col(R(1), R(0))}), (Hnf{R(1), R(0), R(3)}));
  EXPECT_EQ(hnf({Col(R(1, 2), R(1, 2)), Col(R(0), R(1))}), (Hnf{R(1), R(1, 2), R(1, 2)}));
  EXPECT_EQ(hnf({Col(R(3), R(-1)), Col(R(5), R(2))}), (Hnf{R(11), R(8), R(1)}));
  EXPECT_THROW(hnf({Col(R(1), R(1)), Col(R(2), R(2))}), std::invalid_argument);
}

TEST(Hnf, SameLatticeAsGenerators) {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int t = 0; t < 100; ++t) {
    std::vector<Col> cols{Col(R(d(gen)), R(d(gen))), Col(R(d(gen)), R(d(gen))), Col(R(d(gen)), R(d(gen)))};
    Hnf h;
    try {
      h = hnf(cols);
    } catch (const std::invalid_argument&) {
      continue;
    }
    ASSERT_GT(h.h11, R(0));
    ASSERT_GT(h.h22, R(0));
    ASSERT_GE(h.h12, R(0));
    ASSERT_LT(h.h12, h.h11);
    const QMat2 B = h.basis();
    // Each generator is in the HNF lattice.
    for (const Col& c : cols) {
      const Col y(c(0) - B(0, 1) * (c(1) / h.h22), c(1) / h.h22);
      ASSERT_TRUE(y(1).is_integer());
      ASSERT_TRUE((y(0) / h.h11).is_integer());
    }
    // Sublattice of equal covolume, so equal.
    ASSERT_EQ(h.h11 * h.h22, covolume(cols));
    // Order-independent
    ASSERT_EQ(hnf({cols[2], cols[0], cols[1]}), h);
  }
}

TEST(QuadOrder, Validation) {
  EXPECT_NO_THROW(QuadOrder(-4));
  EXPECT_NO_THROW(QuadOrder(5));
  EXPECT_NO_THROW(QuadOrder(-23));
  EXPECT_THROW(QuadOrder(2), std::invalid_argument);
  EXPECT_THROW(QuadOrder(-1), std::invalid_argument);
  EXPECT_THROW(QuadOrder(0), std::invalid_argument);
  EXPECT_THROW(QuadOrder(9), std::invalid_argument);
  for (int D : {-3, -4, -7, -8, 5, 8, 12, -20, 13, 21}) EXPECT_TRUE(QuadOrder(D).closed_under_multiplication()) << D;
}

TEST(QuadModule, OrderHasUnitNorm) {
  const QuadOrder R5(5);
  const auto one = QElem(R(1), R(0), R5.d());
  const auto M = QuadModule::from_basis(R5, one, R5.omega());
  EXPECT_EQ(M.norm(), R(1));
  EXPECT_EQ(QuadModule::from_basis(R5, R5.omega(), one).norm(), R(-1));
  EXPECT_TRUE(M.contains(R5.omega() * R5.omega()));
  EXPECT_FALSE(M.contains(QElem(R(1, 2), R(0), R5.d())));
  // (2) has index 4 and positive norm.
  EXPECT_EQ(QuadModule::principal(R5, QElem(R(2), R(0), R5.d())).norm(), R(4));
}

TEST(Gauss, FaceFormsAndNorms) {
  std::mt19937_64 gen(3);
  for (int t = 0; t < 200; ++t) {
    const auto v = random_reduced(gen, false);
    const auto T = cube_to_triple(v);
    for (int i = 0; i < 3; ++i) {
      // N(M_i) = -1/f_i
      ASSERT_EQ(T.modules[i].norm(), R(-1) / R(v.f[i]));
      // Q_i(x, y) = -f_i N(x + y omega_i)
      const auto& w = T.modules[i].ordered_basis()[1];
      const auto q = v.form(i);
      ASSERT_EQ(R(mpz_class(-v.f[i])) * w.trace(), R(q[1]));
      ASSERT_EQ(R(mpz_class(-v.f[i])) * w.norm(), R(q[2]));
    }
    ASSERT_EQ(T.delta.norm(), R(-1) / R(mpz_class(v.f[0] * v.f[1] * v.f[2])));
  }
}

TEST(Gauss, ColinearWhenProjective) {
  std::mt19937_64 gen(5);
  for (int t = 0; t < 200; ++t) {
    const auto v = random_reduced(gen, true);
    const auto c = check_colinear(cube_to_triple(v));
    ASSERT_TRUE(c.ok()) << v.b << " " << v.f[0] << " " << v.f[1] << " " << v.f[2];
    ASSERT_TRUE(c.contained);
    ASSERT_TRUE(c.orientation_equal);
  }
}

TEST(Gauss, ContainedWhenNotProjective) {
  std::mt19937_64 gen(6);
  int proper = 0;
  for (int t = 0; t < 200; ++t) {
    const auto v = random_reduced(gen, false);
    const auto c = check_colinear(cube_to_triple(v));
    ASSERT_TRUE(c.contained);
    ASSERT_TRUE(c.norms_equal);
    if (v.projective()) ASSERT_TRUE(c.lattice_equal);
    proper += c.lattice_equal ? 0 : 1;
  }
  EXPECT_GT(proper, 0);
  // Q_1 = 9x^2 - 3xy - 15y^2 has content 3; the product has index 3 in (delta).
  const IntegralReducedCube v{3, {-9, -5, 3}};
  EXPECT_FALSE(v.projective());
  const auto T = cube_to_triple(v);
  const auto c = check_colinear(T);
  EXPECT_TRUE(c.contained);
  EXPECT_FALSE(c.lattice_equal);
  const auto prod = module_product(T.order, module_product(T.order, T.modules[0], T.modules[1]), T.modules[2]);
  EXPECT_EQ(prod.norm() / QuadModule::principal(T.order, T.delta).norm(), R(3));
  EXPECT_THROW(IntegralCompAlg(v, T), std::invalid_argument);
}

TEST(Gauss, Delta5Example) {
  const IntegralReducedCube v{1, {1, 1, 1}};
  const auto T = cube_to_triple(v);
  EXPECT_EQ(T.order.disc(), 5);
  EXPECT_EQ(T.delta, QElem(R(1, 2), R(-1, 2), R(5)));
  EXPECT_EQ(T.delta.norm(), R(-1));
  for (const auto& m : T.modules) EXPECT_EQ(m.norm(), R(-1));
  EXPECT_TRUE(check_colinear(T).lattice_equal);
  const IntegralCompAlg C(v, T);
  const IntegralCompAlg::Point one{QElem(R(1), R(0), R(5)), QElem(R(1), R(0), R(5)), QElem(R(1), R(0), R(5))};
  // Tr(1/delta) = Tr(-(1 + sqrt 5)/2) = -1
  EXPECT_EQ(C.norm_form(one), R(-1));
  EXPECT_EQ(C.bilinear_norm(one)[0], R(-1));
}

TEST(Gauss, PrincipalProducts) {
  const QuadOrder O(-20);
  const QElem a(R(1), R(2), O.d()), b(R(-3), R(1, 2), O.d());
  const auto pa = QuadModule::principal(O, a), pb = QuadModule::principal(O, b);
  EXPECT_EQ(module_product(O, pa, pb).lattice(), QuadModule::principal(O, a * b).lattice());
  const auto Rm = QuadModule::from_basis(O, QElem(R(1), R(0), O.d()), O.omega());
  EXPECT_EQ(module_product(O, pa, Rm).lattice(), pa.lattice());
}

TEST(Gauss, RejectsDegenerate) {
  EXPECT_THROW(cube_to_triple({1, {0, 1, 1}}), std::invalid_argument);
  // D = 1 + 0 = 1 is a square.
  EXPECT_THROW(cube_to_triple({1, {1, 1, 0}}), std::invalid_argument);
  // D = 9 - 8 = 1
  EXPECT_THROW(cube_to_triple({3, {-2, 1, 1}}), std::invalid_argument);
}

TEST(Gauss, IntegralityAndCoordinates) {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> d(-5, 5);
  const auto E = CubicAlg<R>::split(QQ);
  for (int t = 0; t < 60; ++t) {
    const auto v = random_reduced(gen, true);
    const IntegralCompAlg C(v, cube_to_triple(v));
    const auto Cphi = phi(E, v.cube(E));
    for (int s = 0; s < 20; ++s) {
      const std::array<R, 3> x{R(d(gen)), R(d(gen)), R(d(gen))}, y{R(d(gen)), R(d(gen)), R(d(gen))};
      const auto z = C.from_coords(x, y);
      ASSERT_NO_THROW(C.require_member(z));
      const auto q = C.Q(z);
      const auto bz = C.beta(z);
      ASSERT_NO_THROW(C.require_member(bz));
      // Q(beta z) = Q(z)^#
      const auto qb = C.Q(bz);
      for (int i = 0; i < 3; ++i) ASSERT_EQ(qb[i], q[(i + 1) % 3] * q[(i + 2) % 3]);
      ASSERT_TRUE(C.norm_form(z).is_integer());
      for (int i = 0; i < 3; ++i) {
        ASSERT_TRUE(q[i].is_integer());
        // Q_i as the face form
        const auto f = v.form(i);
        ASSERT_EQ(q[i], R(f[0]) * x[i] * x[i] + R(f[1]) * x[i] * y[i] + R(f[2]) * y[i] * y[i]);
      }
      // Module beta in coordinates matches the face matrices and the split phi.
      const auto [bx, by] = C.to_coords(bz);
      const auto [fx, fy] = C.face_beta(x, y);
      ASSERT_EQ(bx, fx);
      ASSERT_EQ(by, fy);
      const EPair<R> zc{E.make(x[0], x[1], x[2]), E.make(y[0], y[1], y[2])};
      const auto pb = Cphi.beta(zc);
      ASSERT_EQ(pb.x, E.make(fx[0], fx[1], fx[2]));
      ASSERT_EQ(pb.y, E.make(fy[0], fy[1], fy[2]));
      ASSERT_EQ(Cphi.Q(zc), E.make(q[0], q[1], q[2]));
      // b_Q(z, beta z) = N_C(z) in every component.
      const auto bn = C.bilinear_norm(z);
      for (int i = 0; i < 3; ++i) ASSERT_EQ(bn[i], C.norm_form(z));
      ASSERT_EQ(C.norm_form(z), Cphi.norm_form(zc));
    }
  }
}

TEST(Gauss, NonMemberThrows) {
  const IntegralReducedCube v{1, {1, 2, 2}};
  const IntegralCompAlg C(v, cube_to_triple(v));
  const auto z = C.from_coords({R(1, 2), R(0), R(0)}, {R(0), R(0), R(0)});
  EXPECT_THROW(C.require_member(z), std::domain_error);
}

}  // namespace
