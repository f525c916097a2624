#ifndef BCUBE_CUBE_HPP
#define BCUBE_CUBE_HPP

#include "bcube/etale_cubic.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bcube {

/// A point (a, e, f, b) of F + E + E + F.
template <class S>
struct Cube {
  S a;
  Vec3<S> e;
  Vec3<S> f;
  S b;

  friend bool operator==(const Cube& x, const Cube& y) {
    return x.a == y.a && x.e == y.e && x.f == y.f && x.b == y.b;
  }
};

template <class S>
Cube<S> zero_cube(const CubicAlg<S>& E) {
  const S z = E.field().from_int(0);
  return {z, E.zero(), E.zero(), z};
}

/// (1, 0, 0, -1).
template <class S>
Cube<S> distinguished_cube(const CubicAlg<S>& E) {
  const Field<S>& F = E.field();
  return {F.from_int(1), E.zero(), E.zero(), F.from_int(-1)};
}

template <class S>
Cube<S> random_cube(const CubicAlg<S>& E, Rng& rng, long h = 1000) {
  const Field<S>& F = E.field();
  Cube<S> v{F.random(rng, h), E.random(rng, h), E.random(rng, h), F.random(rng, h)};
  return v;
}

template <class S>
Cube<S> operator+(const Cube<S>& x, const Cube<S>& y) {
  return {x.a + y.a, x.e + y.e, x.f + y.f, x.b + y.b};
}

template <class S>
Cube<S> operator*(const S& c, const Cube<S>& x) {
  return {c * x.a, x.e * c, x.f * c, c * x.b};
}

/// Quartic invariant
///   a^2 b^2 - 2ab Tr(ef) + Tr(e^2 f^2) + 4a N(f) + 4b N(e) - 2 Tr(e^# f^#).
template <class S>
S delta(const CubicAlg<S>& E, const Cube<S>& v) {
  const Field<S>& F = E.field();
  const Vec3<S> ef = E.mul(v.e, v.f);
  return v.a * v.a * v.b * v.b - F.from_int(2) * v.a * v.b * E.trace(ef) + E.trace(E.mul(ef, ef)) +
         F.from_int(4) * v.a * E.norm(v.f) + F.from_int(4) * v.b * E.norm(v.e) -
         F.from_int(2) * E.trace(E.mul(E.sharp(v.e), E.sharp(v.f)));
}

template <class S>
bool is_reduced(const CubicAlg<S>& E, const Cube<S>& v) {
  return v.a == E.field().from_int(1) && v.e == E.zero();
}

// Group generators. As 2x2 matrices over E:
//   Lower(u) = [[1,0],[u,1]]   Upper(u) = [[1,u],[0,1]]
//   Torus(alpha,beta) = diag(alpha,beta)   Weyl = [[0,1],[1,0]]
// AlgAut(sigma) is the semilinear action of an algebra automorphism.

template <class S>
struct Lower {
  Vec3<S> u;
};
template <class S>
struct Upper {
  Vec3<S> u;
};
template <class S>
struct Torus {
  Vec3<S> alpha;
  Vec3<S> beta;
};
struct Weyl {};
template <class S>
struct AlgAut {
  Mat3<S> sigma;
};

template <class S>
using GroupGen = std::variant<Lower<S>, Upper<S>, Torus<S>, Weyl, AlgAut<S>>;

/// The product g_1 g_2 ... g_n; acting on a cube applies g_n first.
template <class S>
using GroupWord = std::vector<GroupGen<S>>;

/// det of a generator as an element of F^x. Throws std::invalid_argument for
/// an invalid torus element (alpha or beta not invertible, alpha*beta not in F).
template <class S>
S det(const CubicAlg<S>& E, const GroupGen<S>& g) {
  const Field<S>& F = E.field();
  return std::visit(
      [&](const auto& x) -> S {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Torus<S>>) {
          if (!E.is_invertible(x.alpha) || !E.is_invertible(x.beta)) {
            throw std::invalid_argument("Torus: alpha and beta must be invertible");
          }
          const auto c = E.as_scalar(E.mul(x.alpha, x.beta));
          if (!c) throw std::invalid_argument("Torus: alpha*beta is not in F");
          return *c;
        } else if constexpr (std::is_same_v<T, Weyl>) {
          return F.from_int(-1);
        } else if constexpr (std::is_same_v<T, AlgAut<S>>) {
          if (!E.is_automorphism(x.sigma)) throw std::invalid_argument("AlgAut: not an automorphism");
          return F.from_int(1);
        } else {
          return F.from_int(1);
        }
      },
      g);
}

template <class S>
S det(const CubicAlg<S>& E, const GroupWord<S>& w) {
  S d = E.field().from_int(1);
  for (const auto& g : w) d *= det(E, g);
  return d;
}

template <class S>
Cube<S> act(const CubicAlg<S>& E, const GroupGen<S>& g, const Cube<S>& v) {
  return std::visit(
      [&](const auto& x) -> Cube<S> {
        using T = std::decay_t<decltype(x)>;
        const auto& [a, e, f, b] = v;
        if constexpr (std::is_same_v<T, Lower<S>>) {
          const Vec3<S>& u = x.u;
          const Vec3<S> us = E.sharp(u);
          return {a, e + u * a, f + E.cross(e, u) + us * a,
                  b + E.trace(E.mul(f, u)) + E.trace(E.mul(e, us)) + a * E.norm(u)};
        } else if constexpr (std::is_same_v<T, Upper<S>>) {
          const Vec3<S>& u = x.u;
          const Vec3<S> us = E.sharp(u);
          return {a + E.trace(E.mul(e, u)) + E.trace(E.mul(f, us)) + b * E.norm(u),
                  e + E.cross(f, u) + us * b, f + u * b, b};
        } else if constexpr (std::is_same_v<T, Torus<S>>) {
          const S c = det(E, GroupGen<S>(x));
          const S na = E.norm(x.alpha);
          const S nb = E.norm(x.beta);
          // alpha^# alpha^-1 = N(alpha) alpha^-2, and alpha^# beta^-1 = N(alpha)/c.
          const Vec3<S> ai = E.inverse(x.alpha);
          const Vec3<S> bi = E.inverse(x.beta);
          return {a * na / c, E.mul(E.mul(ai, ai), e) * na, E.mul(E.mul(bi, bi), f) * nb, b * nb / c};
        } else if constexpr (std::is_same_v<T, Weyl>) {
          return {-b, -f, -e, -a};
        } else {
          if (!E.is_automorphism(x.sigma)) throw std::invalid_argument("AlgAut: not an automorphism");
          return {a, x.sigma * e, x.sigma * f, b};
        }
      },
      g);
}

template <class S>
Cube<S> act(const CubicAlg<S>& E, const GroupWord<S>& w, Cube<S> v) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = act(E, *it, v);
  return v;
}

/// A random generator of the given kind mix (never AlgAut, whose group is
/// the caller's business).
template <class S>
GroupGen<S> random_generator(const CubicAlg<S>& E, Rng& rng, long h = 20) {
  const Field<S>& F = E.field();
  std::uniform_int_distribution<int> kind(0, 3);
  switch (kind(rng)) {
    case 0: return Lower<S>{E.random(rng, h)};
    case 1: return Upper<S>{E.random(rng, h)};
    case 2: {
      const Vec3<S> alpha = E.random_invertible(rng, h);
      const S c = F.random_nonzero(rng, h);
      return Torus<S>{alpha, E.inverse(alpha) * c};
    }
    default: return Weyl{};
  }
}

template <class S>
GroupWord<S> random_word(const CubicAlg<S>& E, Rng& rng, std::size_t max_len = 8, long h = 20) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  GroupWord<S> w(len(rng));
  for (auto& g : w) g = random_generator(E, rng, h);
  return w;
}

/// Six 2x2 matrices (A_i, B_i), i = 1..3, of a cube over split E.
template <class S>
using Mat2 = Eigen::Matrix<S, 2, 2>;

template <class S>
struct Slicing {
  std::array<Mat2<S>, 3> A;
  std::array<Mat2<S>, 3> B;
};

/// Coefficients (p, q, r) of p x^2 + q xy + r y^2.
template <class S>
struct BinaryQuadratic {
  S x2;
  S xy;
  S y2;

  S discriminant() const { return xy * xy - S(4) * x2 * y2; }
  friend bool operator==(const BinaryQuadratic&, const BinaryQuadratic&) = default;
};

template <class S>
Slicing<S> slice(const CubicAlg<S>& E, const Cube<S>& v) {
  if (E.shape() != CubicShape::Split) throw std::invalid_argument("slice: algebra must be split");
  const auto& [a, e, f, b] = v;
  auto m = [](const S& p, const S& q, const S& r, const S& s) {
    Mat2<S> x;
    x << p, q, r, s;
    return x;
  };
  Slicing<S> out;
  out.A[0] = m(a, e(1), e(2), f(0));
  out.B[0] = m(e(0), f(2), f(1), b);
  out.A[1] = m(a, e(2), e(0), f(1));
  out.B[1] = m(e(1), f(0), f(2), b);
  out.A[2] = m(a, e(0), e(1), f(2));
  out.B[2] = m(e(2), f(1), f(0), b);
  return out;
}

/// Q(x, y) = -det(A x + B y).
template <class S>
BinaryQuadratic<S> slice_form(const Mat2<S>& A, const Mat2<S>& B) {
  const S x2 = -A.determinant();
  const S y2 = -B.determinant();
  const S xy = -(A(0, 0) * B(1, 1) + B(0, 0) * A(1, 1) - A(0, 1) * B(1, 0) - B(0, 1) * A(1, 0));
  return {x2, xy, y2};
}

template <class S>
std::array<BinaryQuadratic<S>, 3> slice_forms(const CubicAlg<S>& E, const Cube<S>& v) {
  const Slicing<S> s = slice(E, v);
  return {slice_form(s.A[0], s.B[0]), slice_form(s.A[1], s.B[1]), slice_form(s.A[2], s.B[2])};
}

template <class S>
struct Reduction {
  GroupWord<S> word;
  Cube<S> cube;
};

/// Moves a nondegenerate cube to (1, 0, f, b). The returned word w satisfies
/// act(w, v) == cube. Throws std::invalid_argument if delta(v) == 0.
template <class S>
Reduction<S> reduce(const CubicAlg<S>& E, const Cube<S>& v) {
  const Field<S>& F = E.field();
  const S zero = F.from_int(0);
  if (delta(E, v) == zero) throw std::invalid_argument("reduce: cube is degenerate (delta = 0)");

  GroupWord<S> word;
  Cube<S> cur = v;
  auto apply = [&](GroupGen<S> g) {
    cur = act(E, g, cur);
    word.insert(word.begin(), std::move(g));
  };

  if (cur.a == zero && !(cur.b == zero)) apply(Weyl{});
  if (cur.a == zero) {
    // a = b = 0: look for u with a(n+(u) v) = Tr(eu) + Tr(f u^#) != 0,
    // scanning coordinates of growing size.
    bool found = false;
    for (std::size_t n = 2; !found; n = n * 2 + 1) {
      if (F.is_finite() && n > 2 * F.characteristic() + 1) {
        throw std::logic_error("reduce: no unipotent makes a nonzero");
      }
      if (n > 64) throw std::runtime_error("reduce: search bound exceeded (coordinates of height 64)");
      const auto coords = F.small_elements(n);
      for (const S& u0 : coords) {
        for (const S& u1 : coords) {
          for (const S& u2 : coords) {
            const Vec3<S> u(u0, u1, u2);
            const S a = E.trace(E.mul(cur.e, u)) + E.trace(E.mul(cur.f, E.sharp(u)));
            if (!(a == zero)) {
              apply(Upper<S>{u});
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (found) break;
      }
    }
  }
  if (!(cur.e == E.zero())) apply(Lower<S>{cur.e * (-(F.from_int(1) / cur.a))});
  if (!(cur.a == F.from_int(1))) apply(Torus<S>{E.unit(), E.scalar(cur.a)});
  return {std::move(word), std::move(cur)};
}

}  // namespace bcube

#endif  // BCUBE_CUBE_HPP
