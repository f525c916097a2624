// Acceptance suite: one PASS/FAIL line per criterion. All checks are exact
// equalities; the only tolerances are the runtime and memory bounds below.

#include "bcube/gauss.hpp"
#include "bcube/jordan.hpp"
#include "bcube/orbits.hpp"
#include "bcube/tori.hpp"
#include "bcube/verify.hpp"
#include "oracle.hpp"

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace bcube;

namespace {

// Pinned bounds
constexpr double kIdentitySeconds = 30.0;
constexpr double kUnipotentSeconds = 60.0;
constexpr double kGaussSeconds = 120.0;
constexpr double kOrbitSeconds = 300.0;
constexpr long kOrbitMemoryKiB = 1024L * 1024L;

const Field<Rational> QQ;
using R = Rational;

struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  // Records a failure once, keeping the first message.
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail.str("");
      detail << "failed: " << what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
void each_field(F&& f) {
  f(Field<Fp>(5));
  f(Field<Fp>(7));
  f(Field<Fp>(11));
  f(QQ);
}

// 1. Identity suite
void identities(Verdict& v) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::string> names = {"curious_identity", "beta2", "beta_reduced", "adjoint_norm", "double_adjoint"};
  long checked = 0;
  each_field([&](const auto& F) {
    const long n = F.is_finite() ? 1000 : 100;
    Rng rng(101);
    for (const auto& [name, E] : standard_algebras(F)) {
      const auto r = run_identity_suite(E, rng, n, 1000, names);
      for (const auto& p : r.properties) {
        v.require(p.ok, p.name + " on " + name + " over " + F.name() + ": " + p.counterexample.dump());
        v.require(p.samples == n, p.name + " ran " + std::to_string(p.samples) + " samples");
        checked += p.samples;
      }
    }
  });
  const double s = seconds_since(t0);
  v.require(s < kIdentitySeconds, "runtime " + std::to_string(s) + " s");
  if (v.ok) v.detail << checked << " exact checks over F5, F7, F11 (1000 each) and Q (100 each), 3 shapes, " << s << " s";
}

// 2. Delta equivariance
void delta_equivariance(Verdict& v) {
  long checked = 0;
  each_field([&](const auto& F) {
    using S = std::decay_t<decltype(F.from_int(0))>;
    Rng rng(202);
    for (const auto& [name, E] : standard_algebras(F)) {
      for (int i = 0; i < 1000; ++i) {
        const Cube<S> c = random_cube(E, rng, 100);
        const GroupWord<S> w = random_word(E, rng, 8);
        const S d = det(E, w);
        v.require(delta(E, act(E, w, c)) == d * d * delta(E, c), name + " over " + F.name());
        ++checked;
      }
    }
  });
  if (v.ok) v.detail << checked << " words of length <= 8, 3 shapes x {F5, F7, F11, Q}";
}

// 3. Unipotent formulas against the split tensor oracle
void unipotent_oracle(Verdict& v) {
  const auto t0 = std::chrono::steady_clock::now();
  const Field<Fp> F(5);
  const auto E = CubicAlg<Fp>::split(F);
  const auto elems = F.elements();
  const Fp one = F.from_int(1);
  Rng rng(303);
  long checked = 0;
  for (int n = 0; n < 100; ++n) {
    const Cube<Fp> c = random_cube(E, rng);
    const auto t = oracle::to_tensor(c);
    for (const Fp& u0 : elems)
      for (const Fp& u1 : elems)
        for (const Fp& u2 : elems) {
          const Vec3<Fp> u(u0, u1, u2);
          v.require(act(E, GroupGen<Fp>(Lower<Fp>{u}), c) == oracle::from_tensor(oracle::act(oracle::lower(u, one), t)),
                    "lower");
          v.require(act(E, GroupGen<Fp>(Upper<Fp>{u}), c) == oracle::from_tensor(oracle::act(oracle::upper(u, one), t)),
                    "upper");
          checked += 2;
        }
  }
  const double s = seconds_since(t0);
  v.require(s < kUnipotentSeconds, "runtime " + std::to_string(s) + " s");
  if (v.ok) v.detail << checked << " actions (all u in F5^3, 100 cubes), " << s << " s";
}

// 4. Slicing
void slicing(Verdict& v) {
  long checked = 0;
  auto run = [&](const auto& F) {
    const auto E = CubicAlg<std::decay_t<decltype(F.from_int(0))>>::split(F);
    Rng rng(404);
    for (int n = 0; n < 1000; ++n) {
      const auto c = random_cube(E, rng, 1000);
      const auto d = delta(E, c);
      const auto q = slice_forms(E, c);
      const auto t = oracle::to_tensor(c);
      for (int i = 0; i < 3; ++i) {
        v.require(q[i].discriminant() == d, "slice " + std::to_string(i) + " over " + F.name());
        v.require(oracle::slice_disc(t, i) == d, "oracle slice " + std::to_string(i) + " over " + F.name());
      }
      ++checked;
    }
  };
  run(QQ);
  run(Field<Fp>(7));
  if (v.ok) v.detail << checked << " split cubes over Q and F7, three slicings each";
}

// 5. phi bijection and equivariance
void phi_equivariance(Verdict& v) {
  long checked = 0;
  auto sampled = [&](const auto& F, int samples) {
    using S = std::decay_t<decltype(F.from_int(0))>;
    Rng rng(505);
    for (const auto& [name, E] : standard_algebras(F)) {
      const auto auts = E.automorphisms();
      for (int i = 0; i < samples; ++i) {
        const Cube<S> c = random_cube(E, rng, 50);
        const auto C = phi(E, c);
        v.require(cube_of(C) == c, "cube_of(phi(v)) on " + name);
        v.require(maps_equal(E, phi(E, cube_of(C)).maps(), C.maps()), "phi(cube_of(C)) on " + name);
        for (const GroupGen<S>& g : {GroupGen<S>(Lower<S>{E.random(rng, 50)}), GroupGen<S>(Upper<S>{E.random(rng, 50)}),
                                     random_generator(E, rng, 50), GroupGen<S>(Weyl{})}) {
          const auto m = matrix_of(E, g);
          v.require(maps_equal(E, phi(E, act(E, g, c)).maps(), transported(E, C.maps(), m->transpose())),
                    "generator transport on " + name + " over " + F.name());
        }
        const Mat3<S>& s = auts[i % auts.size()];
        v.require(maps_equal(E, phi(E, act(E, GroupGen<S>(AlgAut<S>{s}), c)).maps(), transported(C.maps(), s)),
                  "automorphism transport on " + name);
        ++checked;
      }
    }
  };
  sampled(QQ, 100);
  sampled(Field<Fp>(7), 300);
  const Field<Fp> F(5);
  const auto elems = F.elements();
  long unipotents = 0;
  Rng rng(506);
  for (const auto& [name, E] : standard_algebras(F)) {
    for (int n = 0; n < 2; ++n) {
      const Cube<Fp> c = random_cube(E, rng);
      const auto C = phi(E, c);
      for (const Fp& u0 : elems)
        for (const Fp& u1 : elems)
          for (const Fp& u2 : elems) {
            const Vec3<Fp> u(u0, u1, u2);
            for (const GroupGen<Fp>& g : {GroupGen<Fp>(Lower<Fp>{u}), GroupGen<Fp>(Upper<Fp>{u})}) {
              v.require(maps_equal(E, phi(E, act(E, g, c)).maps(), transported(E, C.maps(), matrix_of(E, g)->transpose())),
                        "exhaustive unipotent on " + name);
              ++unipotents;
            }
          }
    }
  }
  if (v.ok) v.detail << checked << " sampled cubes (Q, F7, 3 shapes, all generator kinds), " << unipotents
                     << " exhaustive unipotents over F5";
}

// 6. Axioms
void axioms(Verdict& v) {
  long algebras = 0;
  auto run = [&](const auto& F) {
    using S = std::decay_t<decltype(F.from_int(0))>;
    Rng rng(606);
    for (const auto& [name, E] : standard_algebras(F)) {
      int done = 0;
      while (done < 500) {
        const Cube<S> c = random_cube(E, rng, 100);
        if (delta(E, c) == F.from_int(0)) continue;
        const auto r = check_axioms(phi(E, c), rng, 100, 100);
        v.require(r.ok, r.axiom + " on " + name + " over " + F.name());
        v.require(F.same_square_class(k_c_value(phi(E, c)), delta(E, c)), "k_C != square class of Delta on " + name);
        ++done;
        ++algebras;
      }
    }
  };
  run(Field<Fp>(7));
  run(QQ);
  if (v.ok) v.detail << algebras << " nondegenerate algebras (F7 and Q, 3 shapes, 500 each), 100 vectors each";
}

// 7. Reduction
void reduction(Verdict& v) {
  long checked = 0;
  each_field([&](const auto& F) {
    using S = std::decay_t<decltype(F.from_int(0))>;
    Rng rng(707);
    for (const auto& [name, E] : standard_algebras(F)) {
      int done = 0;
      while (done < 500) {
        const Cube<S> c = random_cube(E, rng, 100);
        const S d = delta(E, c);
        if (d == F.from_int(0)) continue;
        const auto r = reduce(E, c);
        const S dr = delta(E, r.cube);
        v.require(is_reduced(E, r.cube), "not reduced on " + name);
        v.require(act(E, r.word, c) == r.cube, "witness does not replay on " + name + " over " + F.name());
        v.require(F.same_square_class(d, dr), "square class changed on " + name);
        v.require(dr == r.cube.b * r.cube.b + F.from_int(4) * E.norm(r.cube.f), "reduced delta formula on " + name);
        ++done;
        ++checked;
      }
    }
  });
  if (v.ok) v.detail << checked << " cubes (500 per shape over F5, F7, F11, Q)";
}

// 8. Tits round trip
void tits(Verdict& v) {
  long checked = 0, rejected = 0;
  auto run = [&](const auto& F) {
    using S = std::decay_t<decltype(F.from_int(0))>;
    Rng rng(808);
    for (const auto& [name, E] : standard_algebras(F)) {
      int done = 0;
      while (done < 200) {
        const Cube<S> c{F.from_int(1), E.zero(), E.random(rng, 100), F.random(rng, 100)};
        if (!E.is_invertible(c.f) || delta(E, c) == F.from_int(0)) continue;
        const TitsPair<S> t = to_tits(E, c);
        v.require(E.norm(t.e) == t.nu.norm(), "norm condition on " + name);
        v.require(from_tits(E, t) == c, "from_tits(to_tits(v)) != v on " + name + " over " + F.name());
        TitsPair<S> bad = t;
        bad.e = bad.e + E.unit();
        if (!(E.norm(bad.e) == bad.nu.norm())) {
          bool threw = false;
          try {
            from_tits(E, bad);
          } catch (const std::invalid_argument&) {
            threw = true;
          }
          v.require(threw, "norm violation accepted on " + name);
          ++rejected;
        }
        ++done;
        ++checked;
      }
    }
  };
  run(QQ);
  run(Field<Fp>(7));
  const auto E = CubicAlg<R>::split(QQ);
  const Cube<R> c = from_tits(E, TitsPair<R>{E.unit(), QuadExt<R>(R(1), R(0), R(5))});
  v.require(c == Cube<R>{R(1), E.zero(), Vec3<R>(-1, -1, -1), R(-2)}, "(1,1) does not map to (1,0,-1,-2)");
  if (v.ok) v.detail << checked << " reduced cubes round-trip, " << rejected << " norm violations rejected, (1,1) -> (1,0,-1,-2)";
}

// 9. Springer
void springer(Verdict& v) {
  const auto J = JordanAlg<R>::hermitian(QQ, R(5));
  const Springer<R> sp(J);
  Rng rng(909);
  for (int i = 0; i < 200; ++i) {
    CVec<R> c;
    for (int k = 0; k < 6; ++k) c(k) = QQ.random(rng, 100);
    const auto z = J.hermitian_coords(c);
    const Vec3<R> q = sp.Q(c);
    for (int k = 0; k < 3; ++k) v.require(q(k) == (z[k] * z[k].conj()).x(), "Q formula");
    const auto bz = J.hermitian_coords(sp.beta(c));
    v.require(bz[0] == z[1].conj() * z[2].conj() && bz[1] == z[2].conj() * z[0].conj() &&
                  bz[2] == z[0].conj() * z[1].conj(),
              "beta formula");
  }
  int models = 0;
  auto model = [&](const auto& Jd, const std::string& what) {
    const auto s = std::decay_t<decltype(Jd)>(Jd);
    using S = std::decay_t<decltype(s.field().from_int(0))>;
    const Springer<S> m(s);
    Rng r(910);
    v.require(m.orthogonal() && m.isomorphism_holds(), "decomposition " + what);
    v.require(check_axioms(m.comp_algebra(), r, 200, 50).ok, "axioms " + what);
    v.require(kc_ke_kj_check(m), "[K_C][K_E][K_J] " + what);
    ++models;
  };
  for (long d : {5, -1, 2}) model(JordanAlg<R>::hermitian(QQ, R(d)), "d=" + std::to_string(d) + " over Q");
  const Field<Fp> F7(7);
  for (long d : {3, 5, 6}) model(JordanAlg<Fp>::hermitian(F7, F7.from_int(d)), "d=" + std::to_string(d) + " over F7");
  if (v.ok) v.detail << "Hermitian(5) formulas on 200 vectors; " << models << " derived algebras pass axioms and the square-product check";
}

// 10. Gauss over Z
void gauss(Verdict& v) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 gen(1010);
  std::uniform_int_distribution<int> d10(-10, 10);
  const auto E = CubicAlg<R>::split(QQ);
  int cubes = 0;
  long points = 0;
  while (cubes < 200) {
    IntegralReducedCube c{d10(gen), {d10(gen), d10(gen), d10(gen)}};
    if (c.f[0] == 0 || c.f[1] == 0 || c.f[2] == 0 || !c.projective()) continue;
    const mpz_class D = c.disc();
    if (D >= 0 && mpz_perfect_square_p(D.get_mpz_t()) != 0) continue;
    const auto T = cube_to_triple(c);
    for (int i = 0; i < 3; ++i) v.require(T.modules[i].norm() == R(-1) / R(c.f[i]), "N(M_i) = -1/f_i");
    v.require(T.delta.norm() == R(-1) / R(mpz_class(c.f[0] * c.f[1] * c.f[2])), "N(delta)");
    const QuadModule prod = module_product(T.order, module_product(T.order, T.modules[0], T.modules[1]), T.modules[2]);
    v.require(prod.lattice() == QuadModule::principal(T.order, T.delta).lattice(), "HNF(M1 M2 M3) = HNF(delta R)");
    const IntegralCompAlg C(c, T);
    const auto P = phi(E, c.cube(E));
    for (int s = 0; s < 20; ++s) {
      std::array<R, 3> x, y;
      for (int i = 0; i < 3; ++i) {
        x[i] = R(d10(gen));
        y[i] = R(d10(gen));
      }
      const auto z = C.from_coords(x, y);
      // Trace of z1 z2 z3 / delta, computed here directly in Q(sqrt D).
      const QElem w = z[0] * z[1] * z[2] / T.delta;
      const R tr = w.x() * R(2);
      const R nc = C.bilinear_norm(z)[0];
      v.require(nc.is_integer(), "N_C(z) in Z");
      v.require(nc == tr, "N_C(z) = Tr(z1 z2 z3 / delta)");
      const auto [bx, by] = C.to_coords(C.beta(z));
      const auto [fx, fy] = C.face_beta(x, y);
      v.require(bx == fx && by == fy, "coordinate beta = module beta");
      const auto pb = P.beta({E.make(x[0], x[1], x[2]), E.make(y[0], y[1], y[2])});
      v.require(pb.x == E.make(bx[0], bx[1], bx[2]) && pb.y == E.make(by[0], by[1], by[2]), "module beta = split phi beta");
      ++points;
    }
    ++cubes;
  }
  const double s = seconds_since(t0);
  v.require(s < kGaussSeconds, "runtime " + std::to_string(s) + " s");
  if (v.ok) v.detail << cubes << " projective cubes, " << points << " lattice points, " << s << " s";
}

// 11. Orbit census
void orbits(Verdict& v) {
  const auto t0 = std::chrono::steady_clock::now();
  const Field<Fp> F(5);
  const auto E = CubicAlg<Fp>::split(F);
  const Census c = orbit_census(E);
  v.require(c.orders.group == 6912000, "|G| = " + std::to_string(c.orders.group));
  v.require(c.orders.stabilizer() == 32, "|Stab| = 2(p-1)^2");
  v.require(c.distinguished_orbit == 216000, "distinguished orbit " + std::to_string(c.distinguished_orbit));
  v.require(c.all_classes_constant(), "Delta square class not constant on an orbit");
  v.require(c.orbits.size() == 2 && c.separated_by_class(),
            std::to_string(c.orbits.size()) + " generic orbits, not separated by square class");
  const auto s = stabilizer_check(5);
  v.require(s.ok(), "stabilizer model");
  const double secs = seconds_since(t0);
  rusage ru{};
  getrusage(RUSAGE_SELF, &ru);
  v.require(secs < kOrbitSeconds, "runtime " + std::to_string(secs) + " s");
  v.require(ru.ru_maxrss < kOrbitMemoryKiB, "memory " + std::to_string(ru.ru_maxrss) + " KiB");
  if (v.ok) {
    v.detail << "orbit of (1,0,0,-1) has 216000 = 6912000/32; generic orbits";
    for (const auto& o : c.orbits) v.detail << " " << o.size << (o.delta_class > 0 ? " (square)" : " (nonsquare)");
    v.detail << "; " << secs << " s, peak RSS " << ru.ru_maxrss / 1024 << " MiB";
  }
}

// 12. Hilbert 90 split map
void hilbert90(Verdict& v) {
  auto hom = [&](const auto& F) {
    using S = std::decay_t<decltype(F.from_int(0))>;
    Rng rng(1212);
    for (int i = 0; i < 1000; ++i) {
      auto point = [&] {
        const Vec3<S> a(F.random_nonzero(rng), F.random_nonzero(rng), F.random_nonzero(rng));
        const S c = F.random_nonzero(rng);
        return SplitTorusPoint<S>{a, Vec3<S>(c / a(0), c / a(1), c / a(2))};
      };
      const auto x = point(), y = point();
      v.require(h90_map(x * y) == h90_map(x) * h90_map(y), "homomorphism over " + F.name());
      v.require(in_t_ek(F, h90_map(x)), "image outside T_{E,K} over " + F.name());
    }
  };
  hom(Field<Fp>(7));
  hom(QQ);
  const auto c = h90_census(Field<Fp>(7));
  v.require(c.kernel == 36 && c.kernel_is_scalars, "kernel");
  v.require(c.image == 36 && c.target == 36 && c.surjective(), "image");
  v.require(c.domain == 1296, "domain");
  if (v.ok) v.detail << "1000 pairs over F7 and Q; over F7 |domain| 1296, kernel 36 (scalars), image 36 = |T(F7)|";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Verdict&)>>> criteria = {
      {"identity suite", identities},
      {"delta equivariance", delta_equivariance},
      {"unipotent formulas vs tensor oracle", unipotent_oracle},
      {"slicing discriminants", slicing},
      {"phi bijection and equivariance", phi_equivariance},
      {"composition algebra axioms", axioms},
      {"reduction", reduction},
      {"Tits round trip", tits},
      {"Springer decomposition", springer},
      {"Gauss over Z", gauss},
      {"orbit census over F5", orbits},
      {"Hilbert 90 split map", hilbert90}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail.str("");
      v.detail << "exception: " << e.what();
    }
    std::printf("[%s] %2zu %s: %s [%.1f s]\n", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.str().c_str(),
                seconds_since(t0));
    std::fflush(stdout);
    failed += v.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
