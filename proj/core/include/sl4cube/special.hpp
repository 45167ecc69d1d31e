#pragma once

#include <array>
#include <map>
#include <vector>

#include "sl4cube/linalg.hpp"
#include "sl4cube/poly.hpp"
#include "sl4cube/profile.hpp"
#include "sl4cube/report.hpp"

namespace sl4cube {

// Arguments of the transition coefficient: two profile tails of degree N.
struct TransitionKey {
  int N = 0;
  std::array<int, 3> lam{};  // (s,t,u)
  std::array<int, 3> mu{};   // (S,T,U)

  bool valid() const;
  Profile left() const { return {N - lam[0] - lam[1] - lam[2], lam[0], lam[1], lam[2]}; }
  Profile right() const { return {N - mu[0] - mu[1] - mu[2], mu[0], mu[1], mu[2]}; }
};

TransitionKey key_of(const Profile& p, const Profile& q);

// Six-fold terminating sum with rational arguments. `flip_linear_terms`
// negates every term of total order one (fault injection).
Rational calP_poly(int N, const std::array<Rational, 3>& lam, const std::array<Rational, 3>& mu,
                   bool flip_linear_terms = false);

Rational calP_sum(const TransitionKey& key, bool flip_linear_terms = false);

// Brute-force route: r!s!t!u!/N! times the coefficient of x^r y^s z^t w^u in
// (x+y+z+w)^R (x+y-z-w)^S (x-y+z-w)^T (x-y-z+w)^U.
Rational calP_genfunc(const TransitionKey& key);

// All degree-N values, rows indexed by the left profile, columns by the
// right one (enumerate_profiles order). Cached per (N, route, fault).
const QMatrix& calP_sum_table(int N, bool flip_linear_terms = false);
const QMatrix& calP_genfunc_table(int N);

// calP with mu-slots replaced by the weight substitution.
Rational calP_vee(int N, const std::array<int, 3>& tail, const WeightTriple& w,
                  bool flip_linear_terms = false);

// Polynomial in three commuting variables.
class MultiPoly {
 public:
  using Exponent = std::array<int, 3>;

  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(int k);

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  void add(const Exponent& e, const Rational& c);
  int total_degree() const;
  Rational eval(const std::array<Rational, 3>& at) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

 private:
  std::map<Exponent, Rational> terms_;
};

// calP-vee(s,t,u; m1,m2,m3) as a polynomial in (m1,m2,m3).
MultiPoly calP_vee_poly(int N, const std::array<int, 3>& tail);

// p(X1,X2,X3) applied to v for commuting generator actions X_k.
PolyVec apply_multipoly(const MultiPoly& p, Kind kind, const PolyVec& v);

// f_0 .. f_{N+1}; coeffs[n][d] is the coefficient of eta^d in f_n.
struct KrawtchoukFamily {
  int N = 0;
  std::vector<std::vector<Rational>> coeffs;

  const std::vector<Rational>& f(int n) const { return coeffs.at(static_cast<std::size_t>(n)); }
  Rational eval(int n, const Rational& eta) const;
};

// `corrupt` adds 1 to the constant term of f_1 after construction.
KrawtchoukFamily krawtchouk(int N, bool corrupt = false);

// prod_{k=0}^{N} (eta - N + 2k) / N!, coefficient list.
std::vector<Rational> krawtchouk_top_closed_form(int N);

// q(X) v for a generator action X and coefficient list q.
PolyVec apply_poly1(const std::vector<Rational>& q, GeneratorId gen, const PolyVec& v);

// f_n(gen) applied to x^N, or to x*^N for starred generators.
PolyVec krawtchouk_vector(const KrawtchoukFamily& fam, int n, GeneratorId gen);

// Orthogonality sum over all right profiles for every pair of left profiles.
VerificationReport check_orthogonality(int N, bool flip_linear_terms = false);

// Four-term recurrences in calP and in calP-vee, exhaustive over profile pairs.
VerificationReport check_recurrences(int N, bool flip_linear_terms = false);

}  // namespace sl4cube
