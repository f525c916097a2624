#include "bcube/orbits.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace bcube {

namespace {

using Coords = std::array<std::uint32_t, 8>;

Coords to_coords(const Cube<Fp>& v, std::uint32_t p) {
  auto x = [p](const Fp& s) { return s.bind(p).value(); };
  return {x(v.a), x(v.e(0)), x(v.e(1)), x(v.e(2)), x(v.f(0)), x(v.f(1)), x(v.f(2)), x(v.b)};
}

CubeIndex encode(const Coords& c, std::uint32_t p) {
  CubeIndex i = 0;
  for (int k = 7; k >= 0; --k) i = i * p + c[k];
  return i;
}

Coords decode(CubeIndex i, std::uint32_t p) {
  Coords c{};
  for (int k = 0; k < 8; ++k) {
    c[k] = static_cast<std::uint32_t>(i % p);
    i /= p;
  }
  return c;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Fp primitive_root(std::uint32_t p) {
  for (std::uint32_t g = 2; g < p; ++g) {
    const Fp x(g, p);
    bool ok = true;
    for (std::uint32_t q = 2; q <= p - 1 && ok; ++q) {
      if ((p - 1) % q == 0 && is_prime(q) && x.pow((p - 1) / q) == Fp(1, p)) ok = false;
    }
    if (ok) return x;
  }
  return Fp(1, p);
}

class Bitmap {
 public:
  explicit Bitmap(std::uint64_t n) : words_((n + 63) / 64, 0) {}
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

 private:
  std::vector<std::uint64_t> words_;
};

struct Bfs {
  std::vector<LinearAction> gens;
  std::uint32_t p;

  // Visits the orbit of start, marking seen; calls visit on each point.
  template <class Visit>
  std::uint64_t run(CubeIndex start, Bitmap& seen, Visit&& visit) const {
    std::deque<CubeIndex> queue{start};
    seen.set(start);
    std::uint64_t n = 0;
    while (!queue.empty()) {
      const CubeIndex i = queue.front();
      queue.pop_front();
      ++n;
      visit(i);
      const Coords c = decode(i, p);
      for (const auto& g : gens) {
        const CubeIndex j = encode(g.apply(c), p);
        if (!seen.test(j)) {
          seen.set(j);
          queue.push_back(j);
        }
      }
    }
    return n;
  }
};

Bfs make_bfs(const CubicAlg<Fp>& E) {
  Bfs b{{}, E.field().modulus()};
  for (const auto& g : orbit_generators(E)) b.gens.emplace_back(E, g);
  return b;
}

}  // namespace

LinearAction::LinearAction(const CubicAlg<Fp>& E, const GroupGen<Fp>& g) : p_(E.field().modulus()) {
  for (int col = 0; col < 8; ++col) {
    Coords unit{};
    unit[col] = 1;
    const Coords image = to_coords(act(E, g, unpack(E, encode(unit, p_))), p_);
    for (int row = 0; row < 8; ++row) m_[row][col] = image[row];
  }
}

Coords LinearAction::apply(const Coords& v) const {
  Coords out{};
  for (int r = 0; r < 8; ++r) {
    std::uint64_t s = 0;
    for (int c = 0; c < 8; ++c) s += std::uint64_t{m_[r][c]} * v[c];
    out[r] = static_cast<std::uint32_t>(s % p_);
  }
  return out;
}

CubeIndex pack(const CubicAlg<Fp>& E, const Cube<Fp>& v) { return encode(to_coords(v, E.field().modulus()), E.field().modulus()); }

Cube<Fp> unpack(const CubicAlg<Fp>& E, CubeIndex i) {
  const Field<Fp>& F = E.field();
  const Coords c = decode(i, F.modulus());
  auto x = [&](int k) { return F.from_int(c[k]); };
  return {x(0), E.make(x(1), x(2), x(3)), E.make(x(4), x(5), x(6)), x(7)};
}

GroupOrders group_orders(const CubicAlg<Fp>& E) {
  const std::uint64_t p = E.field().modulus();
  std::uint64_t units = 0;
  const auto elems = E.field().elements();
  for (const Fp& x : elems)
    for (const Fp& y : elems)
      for (const Fp& z : elems) units += E.is_invertible(E.make(x, y, z)) ? 1 : 0;
  // |SL_2(F_q)| = q (q^2 - 1), multiplied over the factor fields of E.
  auto sl2 = [](std::uint64_t q) { return q * (q * q - 1); };
  std::uint64_t sl = 0;
  if (units == ipow(p - 1, 3)) {
    sl = ipow(sl2(p), 3);
  } else if (units == (p - 1) * (p * p - 1)) {
    sl = sl2(p) * sl2(p * p);
  } else if (units == p * p * p - 1) {
    sl = sl2(p * p * p);
  } else {
    throw std::invalid_argument("group_orders: algebra is not etale");
  }
  return {units, units / (p - 1), (p - 1) * sl};
}

GroupWord<Fp> orbit_generators(const CubicAlg<Fp>& E) {
  const Field<Fp>& F = E.field();
  GroupWord<Fp> gens;
  for (int i = 0; i < 3; ++i) {
    Vec3<Fp> u = E.zero();
    u(i) = F.from_int(1);
    gens.push_back(Lower<Fp>{u});
    gens.push_back(Upper<Fp>{u});
  }
  gens.push_back(Torus<Fp>{E.unit(), E.scalar(primitive_root(F.modulus()))});
  gens.push_back(Weyl{});
  return gens;
}

bool Census::all_classes_constant() const {
  return std::all_of(orbits.begin(), orbits.end(), [](const OrbitInfo& o) { return o.class_constant; });
}

bool Census::separated_by_class() const {
  int squares = 0, nonsquares = 0;
  for (const auto& o : orbits) (o.delta_class > 0 ? squares : nonsquares)++;
  return squares == 1 && nonsquares == 1 && all_classes_constant();
}

Census orbit_census(const CubicAlg<Fp>& E) {
  const Field<Fp>& F = E.field();
  const std::uint32_t p = F.modulus();
  const std::uint64_t n = ipow(p, 8);
  const Bfs bfs = make_bfs(E);
  Census out;
  out.p = p;
  out.orders = group_orders(E);
  const CubeIndex v0 = pack(E, distinguished_cube(E));
  Bitmap seen(n);
  for (CubeIndex i = 0; i < n; ++i) {
    if (seen.test(i)) continue;
    const Fp d0 = delta(E, unpack(E, i));
    if (d0.is_zero()) continue;
    OrbitInfo o;
    o.rep = i;
    o.delta_class = d0.is_square() ? 1 : -1;
    bool has_v0 = false;
    o.size = bfs.run(i, seen, [&](CubeIndex j) {
      const Fp d = delta(E, unpack(E, j));
      if (d.is_zero() || (d.is_square() ? 1 : -1) != o.delta_class) o.class_constant = false;
      if (j == v0) has_v0 = true;
    });
    out.generic_points += o.size;
    if (has_v0) out.distinguished_orbit = o.size;
    out.orbits.push_back(o);
  }
  return out;
}

std::uint64_t orbit_size(const CubicAlg<Fp>& E, const Cube<Fp>& v) {
  const std::uint32_t p = E.field().modulus();
  Bitmap seen(ipow(p, 8));
  return make_bfs(E).run(encode(to_coords(v, p), p), seen, [](CubeIndex) {});
}

}  // namespace bcube
