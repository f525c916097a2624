#ifndef BCUBE_TESTS_ORACLE_HPP
#define BCUBE_TESTS_ORACLE_HPP

// Split-case oracle: a cube over F^3 as a 2x2x2 tensor acted on by
// (g1, g2, g3) in GL2^3 with equal determinants, twisted by det^-1.
// Independent of the closed-form action in the library.

#include "bcube/cube.hpp"

#include <array>

namespace oracle {

using bcube::Cube;
using bcube::Vec3;

template <class S>
using Tensor = std::array<std::array<std::array<S, 2>, 2>, 2>;

template <class S>
using M2 = std::array<std::array<S, 2>, 2>;

// Vertex labels: a = t000, b = t111, e_i = a + unit_i, f_i = b - unit_i.
template <class S>
Tensor<S> to_tensor(const Cube<S>& v) {
  Tensor<S> t;
  t[0][0][0] = v.a;
  t[1][1][1] = v.b;
  t[1][0][0] = v.e(0);
  t[0][1][0] = v.e(1);
  t[0][0][1] = v.e(2);
  t[0][1][1] = v.f(0);
  t[1][0][1] = v.f(1);
  t[1][1][0] = v.f(2);
  return t;
}

template <class S>
Cube<S> from_tensor(const Tensor<S>& t) {
  return {t[0][0][0], Vec3<S>(t[1][0][0], t[0][1][0], t[0][0][1]),
          Vec3<S>(t[0][1][1], t[1][0][1], t[1][1][0]), t[1][1][1]};
}

template <class S>
S det2(const M2<S>& g) {
  return g[0][0] * g[1][1] - g[0][1] * g[1][0];
}

template <class S>
Tensor<S> act(const std::array<M2<S>, 3>& g, const Tensor<S>& t) {
  const S d = det2(g[0]);
  Tensor<S> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        S acc = S(0) * d;
        for (int p = 0; p < 2; ++p)
          for (int q = 0; q < 2; ++q)
            for (int r = 0; r < 2; ++r) acc += g[0][i][p] * g[1][j][q] * g[2][k][r] * t[p][q][r];
        out[i][j][k] = acc / d;
      }
  return out;
}

template <class S>
std::array<M2<S>, 3> lower(const Vec3<S>& u, const S& one) {
  std::array<M2<S>, 3> g;
  for (int i = 0; i < 3; ++i) g[i] = {{{one, one - one}, {u(i), one}}};
  return g;
}

template <class S>
std::array<M2<S>, 3> upper(const Vec3<S>& u, const S& one) {
  std::array<M2<S>, 3> g;
  for (int i = 0; i < 3; ++i) g[i] = {{{one, u(i)}, {one - one, one}}};
  return g;
}

template <class S>
std::array<M2<S>, 3> torus(const Vec3<S>& alpha, const Vec3<S>& beta) {
  std::array<M2<S>, 3> g;
  for (int i = 0; i < 3; ++i) g[i] = {{{alpha(i), alpha(i) - alpha(i)}, {beta(i) - beta(i), beta(i)}}};
  return g;
}

template <class S>
std::array<M2<S>, 3> weyl(const S& one) {
  std::array<M2<S>, 3> g;
  for (int i = 0; i < 3; ++i) g[i] = {{{one - one, one}, {one, one - one}}};
  return g;
}

// Discriminant of -det(A x + B y) for the i-th slicing, written out from the
// tensor directly (no use of the library's slice()).
template <class S>
S slice_disc(const Tensor<S>& t, int axis) {
  auto at = [&](int s, int u, int w) -> const S& {
    // s indexes the sliced axis, (u, w) the remaining two in cyclic order
    if (axis == 0) return t[s][w][u];
    if (axis == 1) return t[u][s][w];
    return t[w][u][s];
  };
  const S a00 = at(0, 0, 0), a01 = at(0, 0, 1), a10 = at(0, 1, 0), a11 = at(0, 1, 1);
  const S b00 = at(1, 0, 0), b01 = at(1, 0, 1), b10 = at(1, 1, 0), b11 = at(1, 1, 1);
  const S p = -(a00 * a11 - a01 * a10);
  const S r = -(b00 * b11 - b01 * b10);
  const S q = -(a00 * b11 + b00 * a11 - a01 * b10 - b01 * a10);
  return q * q - S(4) * p * r;
}

}  // namespace oracle

#endif  // BCUBE_TESTS_ORACLE_HPP
