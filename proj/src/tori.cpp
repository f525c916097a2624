#include "bcube/tori.hpp"

#include "bcube/orbits.hpp"

namespace bcube {

StabilizerReport stabilizer_check(std::uint32_t p) {
  const Field<Fp> F(p);
  const auto E = CubicAlg<Fp>::split(F);
  const Cube<Fp> v0 = distinguished_cube(E);
  std::vector<Fp> units;
  for (const Fp& x : F.elements()) {
    if (!x.is_zero()) units.push_back(x);
  }
  StabilizerReport out;
  out.expected = 2 * std::uint64_t{p - 1} * (p - 1);
  for (const Fp& a0 : units)
    for (const Fp& a1 : units)
      for (const Fp& a2 : units) {
        const Vec3<Fp> alpha = E.make(a0, a1, a2);
        const bool in_model = E.norm(alpha) == F.from_int(1);
        for (const Fp& c : units) {
          const Torus<Fp> t{alpha, E.inverse(alpha) * c};
          for (const GroupWord<Fp>& w : {GroupWord<Fp>{t}, GroupWord<Fp>{Weyl{}, t}}) {
            const bool fixes = act(E, w, v0) == v0;
            out.torus_weyl_fixing += fixes ? 1 : 0;
            if (in_model && c == F.from_int(1)) {
              ++out.model_size;
              if (!fixes) out.model_fixes = false;
            }
          }
        }
      }
  out.orbit = orbit_size(E, v0);
  out.group = group_orders(E).group;
  return out;
}

}  // namespace bcube
