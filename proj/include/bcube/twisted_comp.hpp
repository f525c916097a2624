#ifndef BCUBE_TWISTED_COMP_HPP
#define BCUBE_TWISTED_COMP_HPP

#include "bcube/cube.hpp"
#include "bcube/quad_ext.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcube {

/// A vector (x, y) of the rank-2 free E-module E^2.
template <class S>
struct EPair {
  Vec3<S> x;
  Vec3<S> y;

  friend bool operator==(const EPair& p, const EPair& q) { return p.x == q.x && p.y == q.y; }
  friend EPair operator+(const EPair& p, const EPair& q) { return {p.x + q.x, p.y + q.y}; }
  friend EPair operator-(const EPair& p, const EPair& q) { return {p.x - q.x, p.y - q.y}; }
};

/// Scalar multiple by lambda in E.
template <class S>
EPair<S> scale(const CubicAlg<S>& E, const Vec3<S>& lambda, const EPair<S>& v) {
  return {E.mul(lambda, v.x), E.mul(lambda, v.y)};
}

/// i-th vector of the F-basis of E^2 (i < 3 in the x slot, i >= 3 in y).
template <class S>
EPair<S> f_basis_vector(const CubicAlg<S>& E, int i) {
  EPair<S> v{E.zero(), E.zero()};
  (i < 3 ? v.x : v.y)(i % 3) = E.field().from_int(1);
  return v;
}

/// 2x2 matrix over E acting on E^2 by g (x, y)^T.
template <class S>
struct EMat2 {
  Vec3<S> m00, m01, m10, m11;

  static EMat2 identity(const CubicAlg<S>& E) { return {E.unit(), E.zero(), E.zero(), E.unit()}; }

  EMat2 transpose() const { return {m00, m10, m01, m11}; }
  Vec3<S> det(const CubicAlg<S>& E) const { return E.mul(m00, m11) - E.mul(m01, m10); }

  EPair<S> apply(const CubicAlg<S>& E, const EPair<S>& v) const {
    return {E.mul(m00, v.x) + E.mul(m01, v.y), E.mul(m10, v.x) + E.mul(m11, v.y)};
  }

  /// Throws std::domain_error if det is not invertible in E.
  EMat2 inverse(const CubicAlg<S>& E) const {
    const Vec3<S> di = E.inverse(det(E));
    return {E.mul(di, m11), -E.mul(di, m01), -E.mul(di, m10), E.mul(di, m00)};
  }

  EMat2 mul(const CubicAlg<S>& E, const EMat2& o) const {
    return {E.mul(m00, o.m00) + E.mul(m01, o.m10), E.mul(m00, o.m01) + E.mul(m01, o.m11),
            E.mul(m10, o.m00) + E.mul(m11, o.m10), E.mul(m10, o.m01) + E.mul(m11, o.m11)};
  }

  friend bool operator==(const EMat2& a, const EMat2& b) {
    return a.m00 == b.m00 && a.m01 == b.m01 && a.m10 == b.m10 && a.m11 == b.m11;
  }
};

/// The E-linear generators as matrices. AlgAut has no matrix.
template <class S>
std::optional<EMat2<S>> matrix_of(const CubicAlg<S>& E, const GroupGen<S>& g) {
  return std::visit(
      [&](const auto& x) -> std::optional<EMat2<S>> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Lower<S>>) {
          return EMat2<S>{E.unit(), E.zero(), x.u, E.unit()};
        } else if constexpr (std::is_same_v<T, Upper<S>>) {
          return EMat2<S>{E.unit(), x.u, E.zero(), E.unit()};
        } else if constexpr (std::is_same_v<T, Torus<S>>) {
          return EMat2<S>{x.alpha, E.zero(), E.zero(), x.beta};
        } else if constexpr (std::is_same_v<T, Weyl>) {
          return EMat2<S>{E.zero(), E.unit(), E.unit(), E.zero()};
        } else {
          return std::nullopt;
        }
      },
      g);
}

/// An E-valued quadratic form together with an E^2-valued quadratic map on
/// E^2, both as plain functions. This is the form in which candidates are
/// checked against the axioms, so a deliberately broken pair can be checked too.
template <class S>
struct QuadMaps {
  std::function<Vec3<S>(const EPair<S>&)> Q;
  std::function<EPair<S>(const EPair<S>&)> beta;
};

/// Rank-2 twisted composition algebra on E^2 in a good basis, given by the
/// four parameters of its cube:
///   Q(x,y) = (e^# - af) x^2 + (-ab - 2ef + Tr(ef)) xy + (f^# - be) y^2
///   beta(x,y) = (-e x^# - b y^# - (fx) x y, a x^# + f y^# + (ey) x x)
template <class S>
class CompAlg2 {
 public:
  CompAlg2(CubicAlg<S> E, Cube<S> params) : E_(std::move(E)), p_(std::move(params)) {}

  const CubicAlg<S>& algebra() const { return E_; }
  const Cube<S>& params() const { return p_; }

  /// Coefficients of x^2, xy and y^2 in Q.
  std::array<Vec3<S>, 3> q_coefficients() const {
    const auto& [a, e, f, b] = p_;
    const Vec3<S> ef = E_.mul(e, f);
    return {E_.sharp(e) - f * a, E_.scalar(-a * b + E_.trace(ef)) - ef * E_.field().from_int(2),
            E_.sharp(f) - e * b};
  }

  Vec3<S> Q(const EPair<S>& v) const {
    const auto c = q_coefficients();
    return E_.mul(c[0], E_.mul(v.x, v.x)) + E_.mul(c[1], E_.mul(v.x, v.y)) + E_.mul(c[2], E_.mul(v.y, v.y));
  }

  EPair<S> beta(const EPair<S>& v) const {
    const auto& [a, e, f, b] = p_;
    const Vec3<S> xs = E_.sharp(v.x), ys = E_.sharp(v.y);
    return {-E_.mul(e, xs) - ys * b - E_.cross(E_.mul(f, v.x), v.y),
            xs * a + E_.mul(f, ys) + E_.cross(E_.mul(e, v.y), v.x)};
  }

  /// b_Q(v, w) = Q(v + w) - Q(v) - Q(w).
  Vec3<S> bilinear(const EPair<S>& v, const EPair<S>& w) const { return Q(v + w) - Q(v) - Q(w); }

  /// N_C(v) = b_Q(v, beta(v)). Throws std::domain_error if it is not in F.
  S norm_form(const EPair<S>& v) const {
    const auto n = E_.as_scalar(bilinear(v, beta(v)));
    if (!n) throw std::domain_error("norm_form: b_Q(v, beta(v)) is not in F, axioms violated");
    return *n;
  }

  /// Delta_C(v) = N_C(v)^2 - 4 N_E(Q(v)).
  S delta_c(const EPair<S>& v) const {
    const S n = norm_form(v);
    return n * n - E_.field().from_int(4) * E_.norm(Q(v));
  }

  QuadMaps<S> maps() const {
    return {[self = *this](const EPair<S>& v) { return self.Q(v); },
            [self = *this](const EPair<S>& v) { return self.beta(v); }};
  }

  friend bool operator==(const CompAlg2& a, const CompAlg2& b) { return a.E_ == b.E_ && a.p_ == b.p_; }

 private:
  CubicAlg<S> E_;
  Cube<S> p_;
};

template <class S>
CompAlg2<S> phi(const CubicAlg<S>& E, const Cube<S>& v) {
  return CompAlg2<S>(E, v);
}

/// Reads (-e, a) = beta(1,0) and (-b, f) = beta(0,1) back from the maps.
/// Returns nullopt if a or b is not in F.
template <class S>
std::optional<Cube<S>> read_params(const CubicAlg<S>& E, const QuadMaps<S>& m) {
  const EPair<S> b10 = m.beta({E.unit(), E.zero()});
  const EPair<S> b01 = m.beta({E.zero(), E.unit()});
  const auto a = E.as_scalar(b10.y);
  const auto b = E.as_scalar(-b01.x);
  if (!a || !b) return std::nullopt;
  return Cube<S>{*a, -b10.x, b01.y, *b};
}

template <class S>
Cube<S> cube_of(const CompAlg2<S>& C) {
  const auto v = read_params(C.algebra(), C.maps());
  if (!v) throw std::logic_error("cube_of: beta(1,0) or beta(0,1) has a non-scalar entry");
  return *v;
}

/// Two quadratic maps on the 6-dimensional F-space E^2 agree everywhere iff
/// they agree on the 21 points e_i and e_i + e_j.
template <class S, class T, class G, class H>
bool quadratic_maps_equal(const CubicAlg<S>& E, const G& g, const H& h) {
  std::array<EPair<S>, 6> basis;
  for (int i = 0; i < 6; ++i) basis[i] = f_basis_vector(E, i);
  for (int i = 0; i < 6; ++i) {
    if (!(T(g(basis[i])) == T(h(basis[i])))) return false;
    for (int j = i + 1; j < 6; ++j) {
      if (!(T(g(basis[i] + basis[j])) == T(h(basis[i] + basis[j])))) return false;
    }
  }
  return true;
}

template <class S>
bool maps_equal(const CubicAlg<S>& E, const QuadMaps<S>& m1, const QuadMaps<S>& m2) {
  return quadratic_maps_equal<S, Vec3<S>>(E, m1.Q, m2.Q) && quadratic_maps_equal<S, EPair<S>>(E, m1.beta, m2.beta);
}

/// Maps in the basis given by the columns of g: Q'(z) = Q(gz), beta'(z) = g^-1 beta(gz).
template <class S>
QuadMaps<S> transported(const CubicAlg<S>& E, const QuadMaps<S>& m, const EMat2<S>& g) {
  const EMat2<S> gi = g.inverse(E);
  return {[E, m, g](const EPair<S>& z) { return m.Q(g.apply(E, z)); },
          [E, m, g, gi](const EPair<S>& z) { return gi.apply(E, m.beta(g.apply(E, z))); }};
}

/// Maps after applying an algebra automorphism s: Q' = s Q s^-1, beta' = s beta s^-1.
template <class S>
QuadMaps<S> transported(const QuadMaps<S>& m, const Mat3<S>& s) {
  const Mat3<S> si = s.inverse();
  return {[m, s, si](const EPair<S>& z) -> Vec3<S> { return s * m.Q({si * z.x, si * z.y}); },
          [m, s, si](const EPair<S>& z) {
            const EPair<S> r = m.beta({si * z.x, si * z.y});
            return EPair<S>{s * r.x, s * r.y};
          }};
}

class NotGoodBasis : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The algebra C re-expressed in the basis formed by the columns of g.
/// Throws NotGoodBasis unless the new (Q, beta) is again of good-basis shape.
template <class S>
CompAlg2<S> change_basis(const CompAlg2<S>& C, const EMat2<S>& g) {
  const CubicAlg<S>& E = C.algebra();
  if (!E.is_invertible(g.det(E))) throw std::invalid_argument("change_basis: matrix is not invertible");
  const QuadMaps<S> m = transported(E, C.maps(), g);
  const auto params = read_params(E, m);
  if (!params) throw NotGoodBasis("change_basis: a or b is not in F in the new basis");
  CompAlg2<S> out(E, *params);
  if (!maps_equal(E, m, out.maps())) throw NotGoodBasis("change_basis: new basis is not a good basis");
  return out;
}

/// First failing axiom, if any.
template <class S>
struct AxiomReport {
  bool ok = true;
  std::string axiom;
  EPair<S> v;
  Vec3<S> lambda;
  int samples = 0;
};

/// Q(beta(v)) = Q(v)^#, beta(lambda v) = lambda^# beta(v), b_Q(v, beta(v)) in F,
/// on `samples` random (v, lambda).
template <class S>
AxiomReport<S> check_axioms(const CubicAlg<S>& E, const QuadMaps<S>& m, Rng& rng, int samples, long h = 100) {
  AxiomReport<S> r;
  r.samples = samples;
  for (int i = 0; i < samples; ++i) {
    const EPair<S> v{E.random(rng, h), E.random(rng, h)};
    const Vec3<S> lambda = E.random(rng, h);
    auto fail = [&](const char* name) {
      r.ok = false;
      r.axiom = name;
      r.v = v;
      r.lambda = lambda;
      return r;
    };
    const EPair<S> bv = m.beta(v);
    if (!(m.Q(bv) == E.sharp(m.Q(v)))) return fail("Q(beta(v)) = Q(v)^#");
    const EPair<S> lhs = m.beta(scale(E, lambda, v));
    if (!(lhs == scale(E, E.sharp(lambda), bv))) return fail("beta(lambda v) = lambda^# beta(v)");
    const Vec3<S> bq = m.Q(v + bv) - m.Q(v) - m.Q(bv);
    if (!E.as_scalar(bq)) return fail("b_Q(v, beta(v)) in F");
  }
  return r;
}

template <class S>
AxiomReport<S> check_axioms(const CompAlg2<S>& C, Rng& rng, int samples, long h = 100) {
  return check_axioms(C.algebra(), C.maps(), rng, samples, h);
}

/// beta(beta(v)) = N_C(v) v - Q(v) beta(v).
template <class S>
bool check_beta2(const CompAlg2<S>& C, const EPair<S>& v) {
  const CubicAlg<S>& E = C.algebra();
  const EPair<S> bv = C.beta(v);
  return C.beta(bv) == EPair<S>{v.x * C.norm_form(v), v.y * C.norm_form(v)} - scale(E, C.Q(v), bv);
}

/// Coordinates of beta(x v + y beta(v)) in the basis {v, beta(v)}:
///   (y^# N(v) - (-Q(v) x) x y,  x^# - Q(v) y^#).
template <class S>
std::pair<Vec3<S>, Vec3<S>> beta_reduced_coords(const CompAlg2<S>& C, const EPair<S>& v, const Vec3<S>& x,
                                                const Vec3<S>& y) {
  const CubicAlg<S>& E = C.algebra();
  const Vec3<S> q = C.Q(v);
  const Vec3<S> ys = E.sharp(y);
  return {ys * C.norm_form(v) - E.cross(-E.mul(q, x), y), E.sharp(x) - E.mul(q, ys)};
}

template <class S>
bool check_beta_reduced(const CompAlg2<S>& C, const EPair<S>& v, const Vec3<S>& x, const Vec3<S>& y) {
  const CubicAlg<S>& E = C.algebra();
  const EPair<S> bv = C.beta(v);
  const EPair<S> w = scale(E, x, v) + scale(E, y, bv);
  const auto [c0, c1] = beta_reduced_coords(C, v, x, y);
  return C.beta(w) == scale(E, c0, v) + scale(E, c1, bv);
}

/// Matrix with columns v and beta(v).
template <class S>
EMat2<S> reduced_basis_matrix(const CompAlg2<S>& C, const EPair<S>& v) {
  const EPair<S> bv = C.beta(v);
  return {v.x, bv.x, v.y, bv.y};
}

/// Candidate vectors for a reduced basis: the two standard basis vectors,
/// then F-coordinate vectors with entries drawn from growing prefixes of
/// field.small_elements (exhaustive over F_p).
template <class S>
std::optional<EPair<S>> find_reduced_vector(const CompAlg2<S>& C, std::size_t max_coords = 9) {
  const CubicAlg<S>& E = C.algebra();
  const S zero = E.field().from_int(0);
  for (const EPair<S>& v : {EPair<S>{E.unit(), E.zero()}, EPair<S>{E.zero(), E.unit()}}) {
    if (!(C.delta_c(v) == zero)) return v;
  }
  const std::size_t limit =
      E.field().is_finite() ? std::min<std::size_t>(max_coords, E.field().characteristic()) : max_coords;
  const auto coords = E.field().small_elements(limit);
  std::array<std::size_t, 6> idx{};
  for (std::size_t n = 2; n <= coords.size(); ++n) {
    // all index tuples in [0, n)^6 that use n-1 at least once
    idx.fill(0);
    for (;;) {
      if (std::find(idx.begin(), idx.end(), n - 1) != idx.end()) {
        const EPair<S> v{Vec3<S>(coords[idx[0]], coords[idx[1]], coords[idx[2]]),
                         Vec3<S>(coords[idx[3]], coords[idx[4]], coords[idx[5]])};
        if (!(C.delta_c(v) == zero)) return v;
      }
      int k = 0;
      while (k < 6 && ++idx[k] == n) idx[k++] = 0;
      if (k == 6) break;
    }
  }
  return std::nullopt;
}

/// Delta_C at a reduced vector, a representative of k_C that needs no
/// factoring. Throws std::runtime_error if the bounded search finds none.
template <class S>
S k_c_value(const CompAlg2<S>& C, std::size_t max_coords = 9) {
  const auto v = find_reduced_vector(C, max_coords);
  if (!v) {
    throw std::runtime_error("k_c: no reduced vector with coordinates among the first " +
                             std::to_string(max_coords) + " small field elements");
  }
  return C.delta_c(*v);
}

/// Square class of Delta_C at a reduced vector.
template <class S>
SquareClass<S> k_c(const CompAlg2<S>& C, std::size_t max_coords = 9) {
  return C.algebra().field().square_class(k_c_value(C, max_coords));
}

/// (1, 0, -Q(v), -N_C(v)), the cube of the reduced basis {v, beta(v)}.
template <class S>
Cube<S> reduced_cube_at(const CompAlg2<S>& C, const EPair<S>& v) {
  const Field<S>& F = C.algebra().field();
  return {F.from_int(1), C.algebra().zero(), -C.Q(v), -C.norm_form(v)};
}

/// Transition from the reduced basis {v, beta(v)} to {w, beta(w)} where
/// w = x v + y beta(v):  g = [[x, y^# N - (-Q x) x y], [y, x^# - Q y^#]].
template <class S>
EMat2<S> reduced_transition(const CompAlg2<S>& C, const EPair<S>& v, const Vec3<S>& x, const Vec3<S>& y) {
  const auto [c0, c1] = beta_reduced_coords(C, v, x, y);
  return {x, c0, y, c1};
}

/// N(x) - N(y) N_C(v) - Tr(Q(v) x y^#).
template <class S>
S reduced_transition_det(const CompAlg2<S>& C, const EPair<S>& v, const Vec3<S>& x, const Vec3<S>& y) {
  const CubicAlg<S>& E = C.algebra();
  return E.norm(x) - E.norm(y) * C.norm_form(v) - E.trace(E.mul(C.Q(v), E.mul(x, E.sharp(y))));
}

/// Coordinates (x, y) of w in the E-basis {v, beta(v)}. Requires Delta_C(v) != 0.
template <class S>
std::pair<Vec3<S>, Vec3<S>> coords_in_reduced_basis(const CompAlg2<S>& C, const EPair<S>& v, const EPair<S>& w) {
  const CubicAlg<S>& E = C.algebra();
  const EMat2<S> gi = reduced_basis_matrix(C, v).inverse(E);
  const EPair<S> c = gi.apply(E, w);
  return {c.x, c.y};
}

/// Tits pair (e, nu) with N_E(e) = N_K(nu).
template <class S>
struct TitsPair {
  Vec3<S> e;
  QuadExt<S> nu;
};

/// From a reduced cube (1, 0, f, b): e = -f, nu = -(b + sqrt D)/2, D = b^2 + 4 N(f).
template <class S>
TitsPair<S> to_tits(const CubicAlg<S>& E, const Cube<S>& v) {
  const Field<S>& F = E.field();
  if (!is_reduced(E, v)) throw std::invalid_argument("to_tits: cube is not reduced");
  if (!E.is_invertible(v.f)) throw std::invalid_argument("to_tits: f is not invertible");
  const S d = delta(E, v);
  if (d == F.from_int(0)) throw std::invalid_argument("to_tits: cube is degenerate");
  const S half = F.from_int(1) / F.from_int(2);
  return {-v.f, QuadExt<S>(-v.b * half, -half, d)};
}

/// The cube (1, 0, -e, -Tr(nu)). Throws std::invalid_argument unless N_E(e) = N_K(nu).
template <class S>
Cube<S> from_tits(const CubicAlg<S>& E, const TitsPair<S>& t) {
  if (!(E.norm(t.e) == t.nu.norm())) throw std::invalid_argument("from_tits: N_E(e) != N_K(nu)");
  return {E.field().from_int(1), E.zero(), -t.e, -t.nu.trace()};
}

/// Equality of Tits pairs up to an isomorphism of the quadratic algebras
/// F(sqrt d) -> F(sqrt d'), which may send sqrt d to either root.
template <class S>
bool tits_equivalent(const TitsPair<S>& p, const TitsPair<S>& q) {
  return p.e == q.e && p.nu.x() == q.nu.x() && p.nu.y() * p.nu.y() * p.nu.d() == q.nu.y() * q.nu.y() * q.nu.d();
}

}  // namespace bcube

#endif  // BCUBE_TWISTED_COMP_HPP
