#ifndef BCUBE_JSON_IO_HPP
#define BCUBE_JSON_IO_HPP

#include "bcube/cube.hpp"
#include "bcube/gauss.hpp"
#include "bcube/twisted_comp.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace bcube {

using Json = nlohmann::json;

/// Malformed or invalid input document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Field elements are exact strings: "p/q" over Q, "k" with 0 <= k < p over F_p.
// Integers are accepted on input.

template <class S>
Json to_json(const S& x) {
  return x.str();
}

template <class S>
S scalar_from_json(const Field<S>& F, const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return F.from_int(j.get<long>());
    if (j.is_string()) return F.canon(F.parse(j.get<std::string>()));
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a field element string");
}

inline const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

template <class S>
Json vec_to_json(const Vec3<S>& v) {
  return Json::array({to_json(v(0)), to_json(v(1)), to_json(v(2))});
}

template <class S>
Vec3<S> vec_from_json(const Field<S>& F, const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) throw InputError(where + ": expected an array of 3 field elements");
  return Vec3<S>(scalar_from_json(F, j[0], where + "[0]"), scalar_from_json(F, j[1], where + "[1]"),
                 scalar_from_json(F, j[2], where + "[2]"));
}

template <class S>
Json cube_to_json(const Cube<S>& v) {
  return {{"a", to_json(v.a)}, {"e", vec_to_json(v.e)}, {"f", vec_to_json(v.f)}, {"b", to_json(v.b)}};
}

template <class S>
Cube<S> cube_from_json(const Field<S>& F, const Json& j, const std::string& where = "cube") {
  return {scalar_from_json(F, member(j, "a", where), where + ".a"),
          vec_from_json(F, member(j, "e", where), where + ".e"),
          vec_from_json(F, member(j, "f", where), where + ".f"),
          scalar_from_json(F, member(j, "b", where), where + ".b")};
}

template <class S>
Json pair_to_json(const EPair<S>& v) {
  return {{"x", vec_to_json(v.x)}, {"y", vec_to_json(v.y)}};
}

template <class S>
EPair<S> pair_from_json(const Field<S>& F, const Json& j, const std::string& where) {
  return {vec_from_json(F, member(j, "x", where), where + ".x"), vec_from_json(F, member(j, "y", where), where + ".y")};
}

template <class S>
Json quad_to_json(const QuadExt<S>& z) {
  return {{"x", to_json(z.x())}, {"y", to_json(z.y())}, {"d", to_json(z.d())}};
}

template <class S>
QuadExt<S> quad_from_json(const Field<S>& F, const Json& j, const std::string& where) {
  return QuadExt<S>(scalar_from_json(F, member(j, "x", where), where + ".x"),
                    scalar_from_json(F, member(j, "y", where), where + ".y"),
                    scalar_from_json(F, member(j, "d", where), where + ".d"));
}

template <class S>
Json algebra_to_json(const CubicAlg<S>& E) {
  const auto& p = E.params();
  switch (E.shape()) {
    case CubicShape::Split: return {{"shape", "split"}};
    case CubicShape::QuadPair: return {{"shape", "quad_pair"}, {"d", to_json(p[0])}};
    case CubicShape::CubicPoly:
      return {{"shape", "cubic_poly"}, {"c", Json::array({to_json(p[0]), to_json(p[1]), to_json(p[2])})}};
  }
  return {};
}

/// {"shape": "split"} | {"shape": "quad_pair", "d": s} |
/// {"shape": "cubic_poly", "c": [c0, c1, c2]} for t^3 + c2 t^2 + c1 t + c0.
template <class S>
CubicAlg<S> algebra_from_json(const Field<S>& F, const Json& j, const std::string& where = "algebra") {
  const Json& shape = member(j, "shape", where);
  if (!shape.is_string()) throw InputError(where + ".shape: expected a string");
  const std::string s = shape.get<std::string>();
  try {
    if (s == "split") return CubicAlg<S>::split(F);
    if (s == "quad_pair") return CubicAlg<S>::quad_pair(F, scalar_from_json(F, member(j, "d", where), where + ".d"));
    if (s == "cubic_poly") {
      const Vec3<S> c = vec_from_json(F, member(j, "c", where), where + ".c");
      return CubicAlg<S>::cubic_poly(F, c(0), c(1), c(2));
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ".shape: unknown shape \"" + s + "\"");
}

template <class S>
Json generator_to_json(const GroupGen<S>& g) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Lower<S>>) {
          return {{"type", "lower"}, {"u", vec_to_json(x.u)}};
        } else if constexpr (std::is_same_v<T, Upper<S>>) {
          return {{"type", "upper"}, {"u", vec_to_json(x.u)}};
        } else if constexpr (std::is_same_v<T, Torus<S>>) {
          return {{"type", "torus"}, {"alpha", vec_to_json(x.alpha)}, {"beta", vec_to_json(x.beta)}};
        } else if constexpr (std::is_same_v<T, Weyl>) {
          return {{"type", "weyl"}};
        } else {
          Json rows = Json::array();
          for (int r = 0; r < 3; ++r) rows.push_back(vec_to_json(Vec3<S>(x.sigma.row(r).transpose())));
          return {{"type", "aut"}, {"sigma", rows}};
        }
      },
      g);
}

template <class S>
GroupGen<S> generator_from_json(const Field<S>& F, const Json& j, const std::string& where) {
  const Json& type = member(j, "type", where);
  const std::string t = type.is_string() ? type.get<std::string>() : "";
  if (t == "lower") return Lower<S>{vec_from_json(F, member(j, "u", where), where + ".u")};
  if (t == "upper") return Upper<S>{vec_from_json(F, member(j, "u", where), where + ".u")};
  if (t == "torus") {
    return Torus<S>{vec_from_json(F, member(j, "alpha", where), where + ".alpha"),
                    vec_from_json(F, member(j, "beta", where), where + ".beta")};
  }
  if (t == "weyl") return Weyl{};
  if (t == "aut") {
    const Json& rows = member(j, "sigma", where);
    if (!rows.is_array() || rows.size() != 3) throw InputError(where + ".sigma: expected 3 rows");
    Mat3<S> m;
    for (int r = 0; r < 3; ++r) m.row(r) = vec_from_json(F, rows[r], where + ".sigma").transpose();
    return AlgAut<S>{m};
  }
  throw InputError(where + ".type: unknown generator type \"" + t + "\"");
}

template <class S>
Json word_to_json(const GroupWord<S>& w) {
  Json out = Json::array();
  for (const auto& g : w) out.push_back(generator_to_json(g));
  return out;
}

template <class S>
GroupWord<S> word_from_json(const Field<S>& F, const Json& j, const std::string& where = "word") {
  if (!j.is_array()) throw InputError(where + ": expected an array of generators");
  GroupWord<S> w;
  for (std::size_t i = 0; i < j.size(); ++i) w.push_back(generator_from_json(F, j[i], where + "[" + std::to_string(i) + "]"));
  return w;
}

template <class S>
Json square_class_to_json(const SquareClass<S>& c) {
  return c.zero ? Json("0") : to_json(c.rep);
}

template <class S>
Json form_to_json(const BinaryQuadratic<S>& q) {
  return {{"x2", to_json(q.x2)}, {"xy", to_json(q.xy)}, {"y2", to_json(q.y2)}, {"disc", to_json(q.discriminant())}};
}

/// The composition algebra document: the cube parameters and the data
/// they determine, Q by its coefficients and beta on the standard basis.
template <class S>
Json comp_to_json(const CompAlg2<S>& C) {
  const auto q = C.q_coefficients();
  const CubicAlg<S>& E = C.algebra();
  return {{"params", cube_to_json(C.params())},
          {"q", {{"x2", vec_to_json(q[0])}, {"xy", vec_to_json(q[1])}, {"y2", vec_to_json(q[2])}}},
          {"beta_10", pair_to_json(C.beta({E.unit(), E.zero()}))},
          {"beta_01", pair_to_json(C.beta({E.zero(), E.unit()}))}};
}

template <class S>
Json tits_to_json(const TitsPair<S>& t) {
  return {{"e", vec_to_json(t.e)}, {"nu", quad_to_json(t.nu)}};
}

template <class S>
TitsPair<S> tits_from_json(const Field<S>& F, const Json& j, const std::string& where = "tits") {
  return {vec_from_json(F, member(j, "e", where), where + ".e"), quad_from_json(F, member(j, "nu", where), where + ".nu")};
}

inline Json hnf_to_json(const Hnf& h) { return {{"h11", h.h11.str()}, {"h12", h.h12.str()}, {"h22", h.h22.str()}}; }

inline Json module_to_json(const QuadModule& m) {
  const auto& b = m.ordered_basis();
  return {{"basis", Json::array({quad_to_json(b[0]), quad_to_json(b[1])})},
          {"hnf", hnf_to_json(m.lattice())},
          {"orientation", m.orientation()},
          {"norm", m.norm().str()}};
}

inline mpz_class integer_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) return mpz_class(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected an integer");
}

}  // namespace bcube

#endif  // BCUBE_JSON_IO_HPP
