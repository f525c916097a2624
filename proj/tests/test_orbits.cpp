#include "bcube/orbits.hpp"

#include <gtest/gtest.h>

using namespace bcube;

namespace {

TEST(Orbits, PackRoundTrip) {
  const Field<Fp> F(5);
  const auto E = CubicAlg<Fp>::split(F);
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto v = random_cube(E, rng);
    ASSERT_EQ(unpack(E, pack(E, v)), v);
  }
  EXPECT_EQ(pack(E, zero_cube(E)), 0u);
}

TEST(Orbits, LinearActionMatchesAct) {
  for (std::uint32_t p : {5u, 7u}) {
    const Field<Fp> F(p);
    for (const auto& [name, E] : standard_algebras(F)) {
      Rng rng(p);
      for (int t = 0; t < 50; ++t) {
        const auto g = random_generator(E, rng);
        const LinearAction A(E, g);
        for (int s = 0; s < 10; ++s) {
          const auto v = random_cube(E, rng);
          const auto c = unpack(E, pack(E, v));
          std::array<std::uint32_t, 8> x{};
          CubeIndex i = pack(E, c);
          for (int k = 0; k < 8; ++k, i /= p) x[k] = static_cast<std::uint32_t>(i % p);
          CubeIndex j = 0;
          const auto y = A.apply(x);
          for (int k = 7; k >= 0; --k) j = j * p + y[k];
          ASSERT_EQ(unpack(E, j), act(E, g, v)) << name;
        }
      }
    }
  }
}

TEST(Orbits, GroupOrders) {
  const Field<Fp> F(5);
  const auto algs = standard_algebras(F);
  // |E^x| for E = F^3, F x F_25, F_125
  EXPECT_EQ(group_orders(algs[0].algebra).units, 64u);
  EXPECT_EQ(group_orders(algs[1].algebra).units, 96u);
  EXPECT_EQ(group_orders(algs[2].algebra).units, 124u);
  // (p - 1) |SL_2(F_5)|^3 = 4 * 120^3
  EXPECT_EQ(group_orders(algs[0].algebra).group, 6912000u);
  EXPECT_EQ(group_orders(algs[0].algebra).stabilizer(), 32u);
}

TEST(Orbits, CensusF5AllShapes) {
  const Field<Fp> F(5);
  for (const auto& [name, E] : standard_algebras(F)) {
    const auto c = orbit_census(E);
    // Generic count by direct enumeration
    std::uint64_t generic = 0;
    for (CubeIndex i = 0; i < 390625; ++i) generic += delta(E, unpack(E, i)).is_zero() ? 0 : 1;
    EXPECT_EQ(c.generic_points, generic) << name;
    EXPECT_TRUE(c.all_classes_constant()) << name;
    EXPECT_TRUE(c.separated_by_class()) << name;
    EXPECT_EQ(c.orbits.size(), 2u) << name;
    EXPECT_EQ(c.distinguished_orbit * c.orders.stabilizer(), c.orders.group) << name;
    for (const auto& o : c.orbits) EXPECT_EQ(c.orders.group % o.size, 0u) << name;
  }
}

TEST(Orbits, SplitF5Distinguished) {
  const Field<Fp> F(5);
  const auto E = CubicAlg<Fp>::split(F);
  const auto c = orbit_census(E);
  EXPECT_EQ(c.distinguished_orbit, 216000u);
  EXPECT_EQ(orbit_size(E, distinguished_cube(E)), 216000u);
  // The nonsquare orbit has stabilizer 2 (p + 1)^2, the torus for K = F_25.
  for (const auto& o : c.orbits) {
    if (o.delta_class < 0) EXPECT_EQ(o.size * 2 * 36, 6912000u);
  }
}

TEST(Orbits, SplitF7) {
  const Field<Fp> F(7);
  const auto E = CubicAlg<Fp>::split(F);
  const auto c = orbit_census(E);
  EXPECT_TRUE(c.separated_by_class());
  EXPECT_EQ(c.distinguished_orbit * 72, c.orders.group);
  for (const auto& o : c.orbits) {
    if (o.delta_class < 0) EXPECT_EQ(o.size * 2 * 64, c.orders.group);
  }
}

}  // namespace
