#ifndef BCUBE_TORI_HPP
#define BCUBE_TORI_HPP

#include "bcube/cube.hpp"
#include "bcube/field.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bcube {

/// A point (a; b) of (F^x)^3 x (F^x)^3, the split model of E (x) K.
template <class S>
struct SplitTorusPoint {
  Vec3<S> a;
  Vec3<S> b;

  friend bool operator==(const SplitTorusPoint&, const SplitTorusPoint&) = default;
  friend SplitTorusPoint operator*(const SplitTorusPoint& x, const SplitTorusPoint& y) {
    return {x.a.cwiseProduct(y.a), x.b.cwiseProduct(y.b)};
  }
};

template <class S>
bool has_zero_coordinate(const SplitTorusPoint<S>& x) {
  for (int i = 0; i < 3; ++i) {
    if (x.a(i) == S(0) || x.b(i) == S(0)) return true;
  }
  return false;
}

/// T_{E,K}: a_i b_i = 1 for all i and a1 a2 a3 = 1.
template <class S>
bool in_t_ek(const Field<S>& F, const SplitTorusPoint<S>& x) {
  const S one = F.from_int(1);
  for (int i = 0; i < 3; ++i) {
    if (!(x.a(i) * x.b(i) == one)) return false;
  }
  return x.a(0) * x.a(1) * x.a(2) == one;
}

/// The cover of T': a1 b1 = a2 b2 = a3 b3, all coordinates nonzero.
template <class S>
bool in_t_tilde(const SplitTorusPoint<S>& x) {
  if (has_zero_coordinate(x)) return false;
  const S c = x.a(0) * x.b(0);
  return x.a(1) * x.b(1) == c && x.a(2) * x.b(2) == c;
}

/// Scalar pairs (s(1,1,1); t(1,1,1)), the expected kernel of h90_map.
template <class S>
bool is_scalar_pair(const SplitTorusPoint<S>& x) {
  return x.a(0) == x.a(1) && x.a(1) == x.a(2) && x.b(0) == x.b(1) && x.b(1) == x.b(2);
}

/// f(x) = sigma(x)/sigma^2(x):
///   (a; b) -> (a2/a3, a3/a1, a1/a2; b2/b3, b3/b1, b1/b2).
/// Throws std::domain_error on a zero coordinate or a point off the cover.
template <class S>
SplitTorusPoint<S> h90_map(const SplitTorusPoint<S>& x) {
  if (has_zero_coordinate(x)) throw std::domain_error("h90_map: zero coordinate");
  if (!in_t_tilde(x)) throw std::domain_error("h90_map: point is not on the cover");
  auto cyc = [](const Vec3<S>& v) { return Vec3<S>(v(1) / v(2), v(2) / v(0), v(0) / v(1)); };
  return {cyc(x.a), cyc(x.b)};
}

struct H90Census {
  std::uint64_t domain = 0;   // |T~'(F)|
  std::uint64_t image = 0;    // distinct values of h90_map
  std::uint64_t kernel = 0;   // points mapping to 1
  std::uint64_t target = 0;   // |T_{E,K}(F)|
  bool kernel_is_scalars = true;
  bool lands_in_target = true;
  bool surjective() const { return image == target; }
};

/// Exhaustive count over a finite field.
template <class S>
H90Census h90_census(const Field<S>& F) {
  std::vector<S> units;
  for (const S& x : F.elements()) {
    if (!x.is_zero()) units.push_back(x);
  }
  const S one = F.from_int(1);
  const SplitTorusPoint<S> id{Vec3<S>(one, one, one), Vec3<S>(one, one, one)};
  H90Census out;
  std::vector<SplitTorusPoint<S>> images;
  for (const S& a0 : units)
    for (const S& a1 : units)
      for (const S& a2 : units)
        for (const S& c : units) {
          const SplitTorusPoint<S> x{Vec3<S>(a0, a1, a2), Vec3<S>(c / a0, c / a1, c / a2)};
          ++out.domain;
          const auto y = h90_map(x);
          if (!in_t_ek(F, y)) out.lands_in_target = false;
          if (y == id) {
            ++out.kernel;
            if (!is_scalar_pair(x)) out.kernel_is_scalars = false;
          }
          if (std::find(images.begin(), images.end(), y) == images.end()) images.push_back(y);
        }
  out.image = images.size();
  for (const S& a0 : units)
    for (const S& a1 : units)
      for (const S& a2 : units) {
        const Vec3<S> a(a0, a1, a2);
        out.target += in_t_ek(F, SplitTorusPoint<S>{a, Vec3<S>(one / a0, one / a1, one / a2)}) ? 1 : 0;
      }
  return out;
}

struct StabilizerReport {
  std::uint64_t model_size = 0;       // |{Torus(a, a^-1) : N(a) = 1} u Weyl.those|
  bool model_fixes = true;            // every model element fixes v0
  std::uint64_t torus_weyl_fixing = 0;  // fixing elements among all Torus and Weyl.Torus
  std::uint64_t expected = 0;         // 2 (p - 1)^2
  std::uint64_t orbit = 0;            // |G . v0| by BFS
  std::uint64_t group = 0;            // |G|
  bool ok() const {
    return model_fixes && model_size == expected && torus_weyl_fixing == expected && orbit * expected == group;
  }
};

/// Stabilizer of the distinguished cube over split E / F_p. The model
/// E^1 semidirect Z/2 is built and checked element by element; every
/// diagonal and antidiagonal element of G is tested against v0; the
/// orbit-stabilizer count closes the argument.
StabilizerReport stabilizer_check(std::uint32_t p);

}  // namespace bcube

#endif  // BCUBE_TORI_HPP
