#include "bcube/gauss.hpp"
#include "bcube/jordan.hpp"
#include "bcube/json_io.hpp"
#include "bcube/orbits.hpp"
#include "bcube/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace bcube;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kPropertyFailure = 3;

struct Options {
  std::string command;
  std::string field = "Q";
  std::string algebra;
  std::uint64_t seed = 0;
  long samples = 100;
  std::string out;
  std::string input;
};

struct Outcome {
  int code = kOk;
  Json doc;
};

std::string read_text(const std::string& spec, const char* what) {
  if (spec == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  const auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (spec[first] == '{' || spec[first] == '[')) return spec;
  std::ifstream in(spec);
  if (!in) throw InputError(std::string(what) + ": cannot open \"" + spec + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_doc(const std::string& spec, const char* what) {
  try {
    return Json::parse(read_text(spec, what));
  } catch (const Json::parse_error& e) {
    throw InputError(std::string(what) + ": malformed JSON: " + e.what());
  }
}

Json require_input(const Options& o) {
  if (o.input.empty()) throw InputError("input: this command needs an input document (JSON text, file, or -)");
  return parse_doc(o.input, "input");
}

// A bare cube or {"cube": ...}.
template <class S>
Cube<S> input_cube(const Field<S>& F, const Json& j) {
  return cube_from_json(F, j.contains("cube") ? j.at("cube") : j);
}

template <class S>
CubicAlg<S> algebra_of(const Field<S>& F, const Options& o) {
  if (o.algebra.empty()) return CubicAlg<S>::split(F);
  return algebra_from_json(F, parse_doc(o.algebra, "algebra"));
}

template <class S>
Outcome cmd_invariant(const Field<S>& F, const Options& o) {
  const auto E = algebra_of(F, o);
  const S d = delta(E, input_cube(F, require_input(o)));
  return {kOk, {{"delta", to_json(d)}, {"class", square_class_to_json(F.square_class(d))}}};
}

template <class S>
Outcome cmd_reduce(const Field<S>& F, const Options& o) {
  const auto E = algebra_of(F, o);
  const Cube<S> v = input_cube(F, require_input(o));
  const auto r = reduce(E, v);
  const S d = delta(E, v), dr = delta(E, r.cube);
  const bool replay = act(E, r.word, v) == r.cube;
  const bool same_class = F.same_square_class(d, dr);
  const bool formula = dr == r.cube.b * r.cube.b + E.norm(r.cube.f) * F.from_int(4);
  Json doc = {{"word", word_to_json(r.word)},     {"cube", cube_to_json(r.cube)},
              {"delta", to_json(d)},             {"reduced_delta", to_json(dr)},
              {"replay_ok", replay},             {"square_class_preserved", same_class},
              {"reduced_delta_formula", formula}};
  return {replay && same_class && formula && is_reduced(E, r.cube) ? kOk : kPropertyFailure, doc};
}

template <class S>
Outcome cmd_slice(const Field<S>& F, const Options& o) {
  const auto E = algebra_of(F, o);
  if (E.shape() != CubicShape::Split) throw InputError("slice: only defined for the split algebra");
  const Cube<S> v = input_cube(F, require_input(o));
  const auto forms = slice_forms(E, v);
  const S d = delta(E, v);
  Json fs = Json::array();
  bool ok = true;
  for (const auto& q : forms) {
    fs.push_back(form_to_json(q));
    ok = ok && q.discriminant() == d;
  }
  return {ok ? kOk : kPropertyFailure, {{"forms", fs}, {"delta", to_json(d)}, {"discriminants_agree", ok}}};
}

template <class S>
Outcome cmd_to_comp(const Field<S>& F, const Options& o) {
  const auto E = algebra_of(F, o);
  return {kOk, comp_to_json(phi(E, input_cube(F, require_input(o))))};
}

template <class S>
Outcome cmd_to_cube(const Field<S>& F, const Options& o) {
  const auto E = algebra_of(F, o);
  const Json j = require_input(o);
  const EPair<S> b10 = pair_from_json(F, member(j, "beta_10", "input"), "beta_10");
  const EPair<S> b01 = pair_from_json(F, member(j, "beta_01", "input"), "beta_01");
  const auto a = E.as_scalar(b10.y);
  const auto b = E.as_scalar(-b01.x);
  if (!a || !b) throw InputError("input: beta(1,0).y and beta(0,1).x must be scalars in a good basis");
  const Cube<S> v{*a, -b10.x, b01.y, *b};
  // The whole document must be the one these parameters determine.
  const Json expect = comp_to_json(phi(E, v));
  const Json& q = member(j, "q", "input");
  for (const char* k : {"x2", "xy", "y2"}) {
    if (!(vec_from_json(F, member(q, k, "input.q"), std::string("q.") + k) ==
          vec_from_json(F, expect["q"][k], "q"))) {
      throw InputError(std::string("input.q.") + k + ": inconsistent with beta; not a good basis");
    }
  }
  return {kOk, {{"cube", cube_to_json(v)}}};
}

template <class S>
Outcome cmd_check_axioms(const Field<S>& F, const Options& o) {
  const auto E = algebra_of(F, o);
  const Json j = require_input(o);
  const Cube<S> v = j.contains("params") ? cube_from_json(F, j.at("params"), "params") : input_cube(F, j);
  Rng rng(o.seed);
  const auto r = check_axioms(phi(E, v), rng, static_cast<int>(o.samples));
  Json doc = {{"ok", r.ok}, {"samples", r.samples}};
  if (!r.ok) {
    doc["counterexample"] = {{"axiom", r.axiom}, {"cube", cube_to_json(v)}, {"v", pair_to_json(r.v)},
                             {"lambda", vec_to_json(r.lambda)}};
  }
  return {r.ok ? kOk : kPropertyFailure, doc};
}

template <class S>
Outcome cmd_tits(const Field<S>& F, const Options& o) {
  const auto E = algebra_of(F, o);
  const Json j = require_input(o);
  if (j.contains("tits") || j.contains("nu")) {
    const TitsPair<S> t = tits_from_json(F, j.contains("tits") ? j.at("tits") : j);
    const Cube<S> v = from_tits(E, t);
    Json doc = {{"cube", cube_to_json(v)}};
    bool ok = true;
    if (!(delta(E, v) == F.from_int(0)) && E.is_invertible(v.f)) {
      ok = tits_equivalent(to_tits(E, v), t);
      doc["round_trip_ok"] = ok;
    }
    return {ok ? kOk : kPropertyFailure, doc};
  }
  const Cube<S> v = input_cube(F, j);
  const TitsPair<S> t = to_tits(E, v);
  const bool ok = from_tits(E, t) == v;
  return {ok ? kOk : kPropertyFailure,
          {{"tits", tits_to_json(t)}, {"norm_condition", E.norm(t.e) == t.nu.norm()}, {"round_trip_ok", ok}}};
}

template <class S>
Outcome cmd_springer(const Field<S>& F, const Options& o) {
  const Json j = require_input(o);
  const bool full = j.contains("kind") && j.at("kind") == "full_matrix";
  const JordanAlg<S> J = full ? JordanAlg<S>::full_matrix(F)
                              : JordanAlg<S>::hermitian(F, scalar_from_json(F, member(j, "d", "input"), "d"));
  if (!full && F.is_square(J.d())) throw InputError("d: must be a nonsquare");
  const Springer<S> sp(J);
  Rng rng(o.seed);
  const auto axioms = check_axioms(sp.comp_algebra(), rng, static_cast<int>(o.samples));
  const bool square = kc_ke_kj_check(sp);
  const bool orth = sp.orthogonal();
  const bool iso = sp.isomorphism_holds();
  Json rv = Json::array();
  for (int i = 0; i < 6; ++i) rv.push_back(to_json(sp.reduced_vector()(i)));
  Json doc = {{"cube", cube_to_json(sp.cube())},
              {"reduced_vector", rv},
              {"k_c", square_class_to_json(k_c(sp.comp_algebra()))},
              {"k_e", square_class_to_json(sp.algebra().discriminant_class())},
              {"k_j", square_class_to_json(J.k_j())},
              {"square_product_ok", square},
              {"orthogonal", orth},
              {"isomorphism_holds", iso},
              {"axioms_ok", axioms.ok}};
  return {square && orth && iso && axioms.ok ? kOk : kPropertyFailure, doc};
}

Outcome cmd_gauss(const Options& o) {
  const Json j = require_input(o);
  IntegralReducedCube v{integer_from_json(member(j, "b", "input"), "b"), {}};
  const Json& f = member(j, "f", "input");
  if (!f.is_array() || f.size() != 3) throw InputError("f: expected an array of 3 integers");
  for (int i = 0; i < 3; ++i) v.f[i] = integer_from_json(f[i], "f[" + std::to_string(i) + "]");
  ModuleTriple t = [&] {
    try {
      return cube_to_triple(v);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  const Colinearity c = check_colinear(t);
  Json forms = Json::array(), modules = Json::array();
  bool norms_ok = true;
  for (int i = 0; i < 3; ++i) {
    const auto q = v.form(i);
    forms.push_back({{"x2", q[0].get_str()}, {"xy", q[1].get_str()}, {"y2", q[2].get_str()}});
    modules.push_back(module_to_json(t.modules[i]));
    norms_ok = norms_ok && t.modules[i].norm() == Rational(-1) / Rational(v.f[i]);
  }
  Json doc = {{"disc", v.disc().get_str()},
              {"projective", v.projective()},
              {"forms", forms},
              {"modules", modules},
              {"delta", quad_to_json(t.delta)},
              {"delta_norm", t.delta.norm().str()},
              {"colinearity",
               {{"contained", c.contained}, {"lattice_equal", c.lattice_equal}, {"norms_equal", c.norms_equal}}}};
  // Colinear exactly when projective; otherwise only containment.
  bool ok = norms_ok && c.norms_equal && c.contained && (c.lattice_equal || !v.projective());
  if (c.ok()) {
    const IntegralCompAlg C(v, t);
    Rng rng(o.seed);
    std::uniform_int_distribution<int> d(-10, 10);
    long checked = 0;
    for (long s = 0; s < o.samples && ok; ++s) {
      std::array<Rational, 3> x, y;
      for (int i = 0; i < 3; ++i) {
        x[i] = Rational(d(rng));
        y[i] = Rational(d(rng));
      }
      const auto z = C.from_coords(x, y);
      const auto bz = C.beta(z);
      const auto [bx, by] = C.to_coords(bz);
      const auto [fx, fy] = C.face_beta(x, y);
      const Rational n = C.norm_form(z);
      const auto bn = C.bilinear_norm(z);
      ok = n.is_integer() && bx == fx && by == fy && bn[0] == n && bn[1] == n && bn[2] == n;
      if (!ok) doc["counterexample"] = {{"b", v.b.get_str()}, {"f", {v.f[0].get_str(), v.f[1].get_str(), v.f[2].get_str()}},
                                        {"x", {x[0].str(), x[1].str(), x[2].str()}},
                                        {"y", {y[0].str(), y[1].str(), y[2].str()}}};
      ++checked;
    }
    doc["integral_samples"] = checked;
  }
  doc["ok"] = ok;
  return {ok ? kOk : kPropertyFailure, doc};
}

Outcome cmd_orbits(const Field<Fp>& F, const Options& o) {
  if (F.modulus() > 7) throw InputError("field: orbits needs p <= 7 (the census visits all p^8 cubes)");
  const auto E = algebra_of(F, o);
  const Census c = orbit_census(E);
  Json orbits = Json::array();
  for (const auto& x : c.orbits) {
    orbits.push_back({{"representative", cube_to_json(unpack(E, x.rep))},
                      {"size", x.size},
                      {"delta_class", x.delta_class > 0 ? "square" : "nonsquare"},
                      {"class_constant", x.class_constant},
                      {"stabilizer", c.orders.group / x.size}});
  }
  Json doc = {{"algebra", algebra_to_json(E)},
              {"group_order", c.orders.group},
              {"units", c.orders.units},
              {"norm_one", c.orders.norm_one},
              {"generic_points", c.generic_points},
              {"distinguished_orbit", c.distinguished_orbit},
              {"distinguished_stabilizer", c.orders.stabilizer()},
              {"orbit_stabilizer_ok", c.distinguished_orbit * c.orders.stabilizer() == c.orders.group},
              {"orbits", orbits},
              {"separated_by_class", c.separated_by_class()}};
  const bool ok = c.all_classes_constant() && c.distinguished_orbit * c.orders.stabilizer() == c.orders.group;
  return {ok ? kOk : kPropertyFailure, doc};
}

template <class S>
Outcome cmd_verify(const Field<S>& F, const Options& o) {
  if (!o.input.empty()) {
    const Json j = parse_doc(o.input, "input");
    const Json& cx = j.contains("counterexample") ? j.at("counterexample") : j;
    const auto r = replay(F, cx);
    Json doc = {{"replayed", cx.at("property")}, {"degenerate", !r.has_value()}, {"ok", r.value_or(true)}};
    return {r.value_or(true) ? kOk : kPropertyFailure, doc};
  }
  std::vector<NamedAlgebra<S>> algs;
  if (o.algebra.empty()) {
    algs = standard_algebras(F);
  } else {
    algs.push_back({"given", algebra_of(F, o)});
  }
  Rng rng(o.seed);
  Json reports = Json::array();
  bool ok = true;
  for (const auto& [name, E] : algs) {
    const SuiteReport r = run_identity_suite(E, rng, o.samples);
    Json rep = r.to_json();
    rep["name"] = name;
    rep["algebra"] = algebra_to_json(E);
    reports.push_back(rep);
    ok = ok && r.ok();
  }
  return {ok ? kOk : kPropertyFailure, {{"ok", ok}, {"samples", o.samples}, {"seed", o.seed}, {"algebras", reports}}};
}

template <class S>
Outcome dispatch(const Field<S>& F, const Options& o) {
  const std::string& c = o.command;
  if (c == "invariant") return cmd_invariant(F, o);
  if (c == "reduce") return cmd_reduce(F, o);
  if (c == "slice") return cmd_slice(F, o);
  if (c == "to-comp") return cmd_to_comp(F, o);
  if (c == "to-cube") return cmd_to_cube(F, o);
  if (c == "check-axioms") return cmd_check_axioms(F, o);
  if (c == "tits") return cmd_tits(F, o);
  if (c == "springer") return cmd_springer(F, o);
  if (c == "verify") return cmd_verify(F, o);
  if (c == "gauss") {
    if constexpr (std::is_same_v<S, Rational>) {
      return cmd_gauss(o);
    } else {
      throw InputError("field: gauss works over Z and needs --field Q");
    }
  }
  if (c == "orbits") {
    if constexpr (std::is_same_v<S, Fp>) {
      return cmd_orbits(F, o);
    } else {
      throw InputError("field: orbits needs --field Fp:5 or Fp:7");
    }
  }
  throw InputError("unknown command " + c);
}

Outcome run(const Options& o) {
  if (o.field == "Q") return dispatch(Field<Rational>(), o);
  if (o.field.rfind("Fp:", 0) == 0) {
    unsigned long p = 0;
    try {
      p = std::stoul(o.field.substr(3));
    } catch (const std::exception&) {
      throw InputError("field: expected Q or Fp:<p>");
    }
    if (p < 3 || p > 0xFFFFFFFFul || !is_prime(p)) throw InputError("field: p must be an odd prime");
    return dispatch(Field<Fp>(static_cast<std::uint32_t>(p)), o);
  }
  throw InputError("field: expected Q or Fp:<p>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with twisted Bhargava cubes and twisted composition algebras"};
  Options o;
  app.add_option("--field", o.field, "Q or Fp:<p>")->capture_default_str();
  app.add_option("--algebra", o.algebra, "etale cubic algebra as JSON text or file (default split)");
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--samples", o.samples, "sample count")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "write the output document here instead of stdout");
  app.require_subcommand(1);
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"invariant", "quartic invariant and its square class"},
      {"reduce", "reduce a nondegenerate cube to (1, 0, f, b) with a witness word"},
      {"slice", "the three binary quadratic forms of a split cube"},
      {"to-comp", "the twisted composition algebra of a cube"},
      {"to-cube", "the cube of a composition algebra document"},
      {"check-axioms", "random check of the composition algebra axioms"},
      {"tits", "reduced cube to Tits pair, or Tits pair to cube"},
      {"springer", "Springer decomposition of a 9-dimensional Jordan algebra"},
      {"gauss", "module triple and integral composition algebra of an integer reduced cube"},
      {"orbits", "orbit census over F_p (p <= 7)"},
      {"verify", "identity fuzz suite, or replay of a counterexample"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("input", o.input, "input document: JSON text, a file, or - for stdin");
    sub->callback([&o, n = std::string(name)] { o.command = n; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  Outcome r;
  try {
    r = run(o);
  } catch (const InputError& e) {
    r = {kInvalid, {{"error", e.what()}}};
  } catch (const std::invalid_argument& e) {
    r = {kInvalid, {{"error", e.what()}}};
  } catch (const std::domain_error& e) {
    r = {kInvalid, {{"error", e.what()}}};
  } catch (const Json::exception& e) {
    r = {kInvalid, {{"error", std::string("input: ") + e.what()}}};
  }
  Json doc = {{"command", o.command}, {"field", o.field}, {"result", r.doc}, {"exit", r.code}};
  const std::string text = doc.dump(2) + "\n";
  if (r.code == kInvalid) std::cerr << r.doc.value("error", "") << "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out);
    if (!out) {
      std::cerr << "cannot write " << o.out << "\n";
      return kInvalid;
    }
    out << text;
  }
  return r.code;
}
