#ifndef BCUBE_ORBITS_HPP
#define BCUBE_ORBITS_HPP

#include "bcube/cube.hpp"
#include "bcube/prime_field.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace bcube {

/// A cube over F_p packed as a base-p integer in the coordinate order
/// (a, e0, e1, e2, f0, f1, f2, b), a least significant.
using CubeIndex = std::uint64_t;

/// F_p-linear action of a group element on V = F_p^8, as an 8x8 matrix.
class LinearAction {
 public:
  LinearAction(const CubicAlg<Fp>& E, const GroupGen<Fp>& g);

  std::array<std::uint32_t, 8> apply(const std::array<std::uint32_t, 8>& v) const;

 private:
  std::uint32_t p_;
  std::array<std::array<std::uint32_t, 8>, 8> m_{};  // m_[row][col]
};

CubeIndex pack(const CubicAlg<Fp>& E, const Cube<Fp>& v);
Cube<Fp> unpack(const CubicAlg<Fp>& E, CubeIndex i);

/// Orders of E^x, of the norm-one group E^1, and of G = {g in GL_2(E) : det g in F^x},
/// read off from the factor degrees of E.
struct GroupOrders {
  std::uint64_t units = 0;
  std::uint64_t norm_one = 0;
  std::uint64_t group = 0;
  /// Stabilizer of the distinguished cube: E^1 semidirect Z/2.
  std::uint64_t stabilizer() const { return 2 * norm_one; }
};

GroupOrders group_orders(const CubicAlg<Fp>& E);

/// Generators of G used by the search: Lower and Upper of a basis of E,
/// Torus(1, g) for a primitive root g, and Weyl.
GroupWord<Fp> orbit_generators(const CubicAlg<Fp>& E);

struct OrbitInfo {
  CubeIndex rep = 0;  // least index in the orbit
  std::uint64_t size = 0;
  int delta_class = 0;  // 1 square, -1 nonsquare
  bool class_constant = true;
};

struct Census {
  std::uint32_t p = 0;
  GroupOrders orders;
  std::uint64_t generic_points = 0;
  std::uint64_t distinguished_orbit = 0;
  std::vector<OrbitInfo> orbits;  // generic orbits, by representative

  bool all_classes_constant() const;
  /// Exactly one orbit per nonzero square class of Delta.
  bool separated_by_class() const;
};

/// Exhaustive BFS over the generic locus Delta != 0. Memory is one bit per
/// point of V.
Census orbit_census(const CubicAlg<Fp>& E);

/// Size of the orbit of one cube, by BFS.
std::uint64_t orbit_size(const CubicAlg<Fp>& E, const Cube<Fp>& v);

}  // namespace bcube

#endif  // BCUBE_ORBITS_HPP
