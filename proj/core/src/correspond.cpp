#include "sl4cube/correspond.hpp"

#include <stdexcept>

namespace sl4cube {

namespace {

Rational pow2(int N) { return Rational(Integer(1) << N); }

void require_degree(const PolyVec& v, int N, Basis b, const char* who) {
  if (v.basis() != b) throw std::invalid_argument(std::string(who) + ": wrong basis tag");
  if (!v.is_zero() && !v.homogeneous_of(N)) throw std::invalid_argument(std::string(who) + ": not homogeneous of degree N");
}

// Position of E*_j A_h E*_i (rows at distance j) for the triple of p.
std::size_t estar_position(const TAlgebra& T, const Profile& p) {
  const TripleIndex t = triple_of(p);
  return T.position({t.h, t.j, t.i});
}

}  // namespace

ScaledMap ddag_map(int N) { return {"ddag", factorial(N) * pow2(N)}; }
ScaledMap eps_map(int N) { return {"eps", Rational(1) / pow2(N)}; }
ScaledMap theta_map(int N) { return {"theta", factorial(N)}; }

FixVec ddag_scaled(const PolyVec& v, int N) {
  require_degree(v, N, Basis::monomial, "ddag_scaled");
  FixVec out = FixVec::zero(FixBasis::Btilde, N);
  const Rational s = factorial(N) * pow2(N);
  for (const auto& [p, c] : v.terms()) out.coords[profile_index(p)] = s * c;
  return out;
}

FixVec ddag_scaled_starred(const PolyVec& v, int N) {
  require_degree(v, N, Basis::starred, "ddag_scaled_starred");
  FixVec out = FixVec::zero(FixBasis::BstarTilde, N);
  const Rational s = factorial(N) * pow2(N);
  for (const auto& [p, c] : v.terms()) out.coords[profile_index(p)] = s * c;
  return out;
}

QMatrix eps_scaled(const Hypercube& cube, Vertex kappa, const TripleTensor& t) {
  if (t.N() != cube.N()) throw std::invalid_argument("eps_scaled: degree mismatch");
  QMatrix m(cube.order(), cube.order());
  for (const auto& [k, c] : t.terms()) {
    const auto [x, y, z] = t.unpack(k);
    if (x == kappa) m(y, z) += c;
  }
  return m;
}

QVector eps_scaled(const TAlgebra& T, const FixVec& v) {
  if (v.N != T.N()) throw std::invalid_argument("eps_scaled: degree mismatch");
  const auto profiles = enumerate_profiles(v.N);
  QVector out(T.dim());
  for (std::size_t m = 0; m < profiles.size(); ++m) {
    if (is_zero(v.coords[m])) continue;
    const Rational c = v.coords[m] * tilde_norm2(profiles[m]);
    if (v.basis == FixBasis::Btilde) {
      out[estar_position(T, profiles[m])] += c;
    } else {
      out = out + c * T.dual_basis()[T.position(triple_of(profiles[m]))];
    }
  }
  return out;
}

QVector theta_scaled(const TAlgebra& T, const PolyVec& v, int N) {
  if (N != T.N()) throw std::invalid_argument("theta_scaled: degree mismatch");
  if (!v.is_zero() && !v.homogeneous_of(N)) throw std::invalid_argument("theta_scaled: not homogeneous of degree N");
  QVector out(T.dim());
  for (const auto& [p, c] : v.terms()) {
    const Rational w = c * profile_factorial(p);
    if (v.basis() == Basis::monomial)
      out[estar_position(T, p)] += w;
    else
      out = out + w * T.dual_basis()[T.position(triple_of(p))];
  }
  return out;
}

QMatrix fix_change_of_basis(const TAlgebra& T) {
  const int N = T.N();
  const auto profiles = enumerate_profiles(N);
  const std::size_t n = profiles.size();
  const Rational two_n = pow2(N);
  QMatrix M(n, n);
  for (std::size_t P = 0; P < n; ++P) {
    const QVector& y = T.dual_basis()[T.position(triple_of(profiles[P]))];
    const Rational w = tilde_norm2(profiles[P]) * two_n;
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t k = estar_position(T, profiles[p]);
      M(p, P) = w * Rational(T.class_sizes()[k]) * y[k];
    }
  }
  return M;
}

FixVec to_basis(const TAlgebra& T, const FixVec& v, FixBasis target) {
  if (v.basis == target) return v;
  // The change of basis is an involution (checked by the correspond suite),
  // so the same matrix serves both directions.
  return {target, v.N, fix_change_of_basis(T).apply(v.coords)};
}

Rational fix_inner(const TAlgebra& T, const FixVec& a, const FixVec& b) {
  const FixVec bb = to_basis(T, b, a.basis);
  const auto profiles = enumerate_profiles(a.N);
  Rational s = 0;
  for (std::size_t m = 0; m < profiles.size(); ++m)
    if (!is_zero(a.coords[m]) && !is_zero(bb.coords[m])) s += a.coords[m] * bb.coords[m] * tilde_norm2(profiles[m]);
  return s;
}

}  // namespace sl4cube
