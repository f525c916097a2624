#ifndef BCUBE_VERIFY_HPP
#define BCUBE_VERIFY_HPP

#include "bcube/json_io.hpp"
#include "bcube/twisted_comp.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bcube {

/// Outcome of one property over many samples. On failure, `counterexample`
/// is a document that `replay` re-checks.
struct PropertyResult {
  std::string name;
  long samples = 0;
  long skipped = 0;  // degenerate inputs the property does not apply to
  bool ok = true;
  Json counterexample;
};

struct SuiteReport {
  std::vector<PropertyResult> properties;
  bool ok() const {
    for (const auto& p : properties) {
      if (!p.ok) return false;
    }
    return true;
  }
  Json to_json() const {
    Json props = Json::array();
    for (const auto& p : properties) {
      Json r = {{"property", p.name}, {"samples", p.samples}, {"skipped", p.skipped}, {"ok", p.ok}};
      if (!p.ok) r["counterexample"] = p.counterexample;
      props.push_back(r);
    }
    return {{"ok", ok()}, {"properties", props}};
  }
};

namespace detail {

// Each check takes the sampled input document and returns whether the
// property holds, or nullopt if the input is degenerate for it.
template <class S>
using Check = std::function<std::optional<bool>(const CubicAlg<S>&, const Json&)>;

template <class S>
struct Property {
  std::string name;
  std::function<Json(const CubicAlg<S>&, Rng&, long)> sample;
  Check<S> check;
};

template <class S>
std::vector<Property<S>> properties() {
  using E_t = CubicAlg<S>;
  auto vec = [](const E_t& E, const Json& j, const char* k) { return vec_from_json(E.field(), j.at(k), k); };
  auto cube = [](const E_t& E, const Json& j) { return cube_from_json(E.field(), j.at("cube")); };
  auto scalar_eq = [](const E_t& E, const Vec3<S>& x, const S& s) { return x == E.scalar(s); };
  std::vector<Property<S>> ps;
  ps.push_back({"curious_identity",
                [](const E_t& E, Rng& rng, long h) {
                  return Json{{"f", vec_to_json(E.random(rng, h))}, {"y", vec_to_json(E.random(rng, h))}};
                },
                [vec](const E_t& E, const Json& j) -> std::optional<bool> {
                  return check_curious_identity(E, vec(E, j, "f"), vec(E, j, "y"));
                }});
  ps.push_back({"adjoint_norm",
                [](const E_t& E, Rng& rng, long h) { return Json{{"x", vec_to_json(E.random(rng, h))}}; },
                [vec, scalar_eq](const E_t& E, const Json& j) -> std::optional<bool> {
                  const Vec3<S> a = vec(E, j, "x");
                  return scalar_eq(E, E.mul(a, E.sharp(a)), E.norm(a));
                }});
  ps.push_back({"double_adjoint",
                [](const E_t& E, Rng& rng, long h) { return Json{{"x", vec_to_json(E.random(rng, h))}}; },
                [vec](const E_t& E, const Json& j) -> std::optional<bool> {
                  const Vec3<S> a = vec(E, j, "x");
                  return E.sharp(E.sharp(a)) == a * E.norm(a);
                }});
  ps.push_back({"beta2",
                [](const E_t& E, Rng& rng, long h) {
                  return Json{{"cube", cube_to_json(random_cube(E, rng, h))},
                              {"v", pair_to_json(EPair<S>{E.random(rng, h), E.random(rng, h)})}};
                },
                [cube](const E_t& E, const Json& j) -> std::optional<bool> {
                  return check_beta2(phi(E, cube(E, j)), pair_from_json(E.field(), j.at("v"), "v"));
                }});
  ps.push_back({"beta_reduced",
                [](const E_t& E, Rng& rng, long h) {
                  return Json{{"cube", cube_to_json(random_cube(E, rng, h))},
                              {"v", pair_to_json(EPair<S>{E.random(rng, h), E.random(rng, h)})},
                              {"x", vec_to_json(E.random(rng, h))},
                              {"y", vec_to_json(E.random(rng, h))}};
                },
                [cube, vec](const E_t& E, const Json& j) -> std::optional<bool> {
                  return check_beta_reduced(phi(E, cube(E, j)), pair_from_json(E.field(), j.at("v"), "v"),
                                            vec(E, j, "x"), vec(E, j, "y"));
                }});
  ps.push_back({"delta_equivariance",
                [](const E_t& E, Rng& rng, long h) {
                  return Json{{"cube", cube_to_json(random_cube(E, rng, h))}, {"word", word_to_json(random_word(E, rng, 8))}};
                },
                [cube](const E_t& E, const Json& j) -> std::optional<bool> {
                  const Cube<S> v = cube(E, j);
                  const GroupWord<S> w = word_from_json(E.field(), j.at("word"));
                  const S d = det(E, w);
                  return delta(E, act(E, w, v)) == d * d * delta(E, v);
                }});
  ps.push_back({"phi_round_trip",
                [](const E_t& E, Rng& rng, long h) { return Json{{"cube", cube_to_json(random_cube(E, rng, h))}}; },
                [cube](const E_t& E, const Json& j) -> std::optional<bool> {
                  const Cube<S> v = cube(E, j);
                  const auto C = phi(E, v);
                  return cube_of(C) == v && maps_equal(E, phi(E, cube_of(C)).maps(), C.maps());
                }});
  ps.push_back({"axioms",
                [](const E_t& E, Rng& rng, long h) {
                  return Json{{"cube", cube_to_json(random_cube(E, rng, h))}, {"seed", rng() % 1000000007}};
                },
                [cube](const E_t& E, const Json& j) -> std::optional<bool> {
                  const Cube<S> v = cube(E, j);
                  if (delta(E, v) == E.field().from_int(0)) return std::nullopt;
                  Rng local(j.at("seed").get<std::uint64_t>());
                  return check_axioms(phi(E, v), local, 3).ok;
                }});
  ps.push_back({"reduction",
                [](const E_t& E, Rng& rng, long h) { return Json{{"cube", cube_to_json(random_cube(E, rng, h))}}; },
                [cube](const E_t& E, const Json& j) -> std::optional<bool> {
                  const Cube<S> v = cube(E, j);
                  const S d = delta(E, v);
                  if (d == E.field().from_int(0)) return std::nullopt;
                  const auto r = reduce(E, v);
                  const S dr = delta(E, r.cube);
                  return is_reduced(E, r.cube) && act(E, r.word, v) == r.cube &&
                         E.field().same_square_class(d, dr) && dr == r.cube.b * r.cube.b + E.norm(r.cube.f) * E.field().from_int(4);
                }});
  return ps;
}

}  // namespace detail

inline std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const auto& p : detail::properties<Rational>()) out.push_back(p.name);
  return out;
}

/// Runs each property `samples` times on E with entries of height <= h;
/// all properties unless `only` names some.
template <class S>
SuiteReport run_identity_suite(const CubicAlg<S>& E, Rng& rng, long samples, long h = 1000,
                               const std::vector<std::string>& only = {}) {
  SuiteReport report;
  for (const auto& p : detail::properties<S>()) {
    if (!only.empty() && std::find(only.begin(), only.end(), p.name) == only.end()) continue;
    PropertyResult r;
    r.name = p.name;
    for (long i = 0; i < samples; ++i) {
      const Json doc = p.sample(E, rng, h);
      const auto res = p.check(E, doc);
      if (!res) {
        ++r.skipped;
        continue;
      }
      ++r.samples;
      if (!*res) {
        r.ok = false;
        r.counterexample = {{"property", p.name}, {"algebra", algebra_to_json(E)}, {"input", doc}};
        break;
      }
    }
    report.properties.push_back(r);
  }
  return report;
}

/// Re-checks a counterexample document {"property", "algebra", "input"}.
/// Returns nullopt if the input is degenerate for the property. Throws
/// InputError for an unknown property or a malformed input.
template <class S>
std::optional<bool> replay(const Field<S>& F, const Json& doc) {
  const Json& name = member(doc, "property", "counterexample");
  const CubicAlg<S> E = algebra_from_json(F, member(doc, "algebra", "counterexample"));
  for (const auto& p : detail::properties<S>()) {
    if (name == p.name) {
      try {
        return p.check(E, member(doc, "input", "counterexample"));
      } catch (const Json::exception& e) {
        throw InputError(std::string("counterexample.input: ") + e.what());
      }
    }
  }
  throw InputError("counterexample.property: unknown property");
}

}  // namespace bcube

#endif  // BCUBE_VERIFY_HPP
