#include "sl4cube/suites.hpp"

#include <array>
#include <stdexcept>

#include "sl4cube/sl4.hpp"
#include "sl4cube/special.hpp"
#include "suite_util.hpp"

namespace sl4cube {

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::sl4: return "sl4";
    case Suite::poly: return "poly";
    case Suite::special: return "special";
    case Suite::cube: return "cube";
    case Suite::tensor: return "tensor";
    case Suite::correspond: return "correspond";
  }
  return "?";
}

std::optional<Suite> parse_suite(const std::string& s) {
  for (Suite x : all_suites())
    if (suite_name(x) == s) return x;
  return std::nullopt;
}

std::vector<Suite> all_suites() {
  return {Suite::sl4, Suite::poly, Suite::special, Suite::cube, Suite::tensor, Suite::correspond};
}

bool degree_free(Suite s) { return s == Suite::sl4; }

VerificationReport run_suite(Suite s, int N, const SuiteOptions& opts) {
  if (!degree_free(s) && N < 0) throw std::invalid_argument("run_suite: negative degree");
  switch (s) {
    case Suite::sl4: return detail::run_sl4(opts);
    case Suite::poly: return detail::run_poly(N, opts);
    case Suite::special: return detail::run_special(N, opts);
    case Suite::cube: return detail::run_cube(N, opts);
    case Suite::tensor: return detail::run_tensor(N, opts);
    case Suite::correspond: return detail::run_correspond(N, opts);
  }
  throw std::logic_error("run_suite: unknown suite");
}

namespace detail {

VerificationReport run_sl4(const SuiteOptions& opts) {
  GeneratorSet g = standard_generators();
  if (opts.faults.corrupt_generator) g.a[0](0, 2) += 1;
  VerificationReport rep;
  rep.append(check_presentation(g));
  rep.append(check_inverse_formulas(g));
  rep.append(check_basis15(g));
  rep.append(check_upsilon(g));
  return rep;
}

VerificationReport run_special(int N, const SuiteOptions& opts) {
  const bool flip = opts.faults.flip_linear_terms;
  VerificationReport rep;
  const auto profiles = enumerate_profiles(N);
  const std::size_t n = profiles.size();

  {
    // Two independent evaluators; exhaustive up to N = 5, sampled beyond.
    Probe pr;
    const QMatrix& G = calP_genfunc_table(N);
    if (N <= 5) {
      const QMatrix& S = calP_sum_table(N, flip);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          pr.require(S(a, b) == G(a, b), [&] {
            return "key " + to_string(profiles[a]) + ";" + to_string(profiles[b]) + ": sum " + to_string(S(a, b)) +
                   " genfunc " + to_string(G(a, b));
          });
    } else {
      auto rng = rng_for(opts, Suite::special, N);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (int k = 0; k < 64; ++k) {
        const std::size_t a = pick(rng), b = pick(rng);
        const Rational v = calP_sum(key_of(profiles[a], profiles[b]), flip);
        pr.require(v == G(a, b), [&] {
          return "key " + to_string(profiles[a]) + ";" + to_string(profiles[b]) + ": sum " + to_string(v) +
                 " genfunc " + to_string(G(a, b));
        });
      }
    }
    pr.report(rep, "special.dual_evaluators", "calP six-fold sum = generating-function coefficient", N);
  }

  const QMatrix& G = calP_genfunc_table(N);
  {
    // Invariant under the triple swap and under one permutation applied to
    // both triples at once. Permuting a single triple is not a symmetry:
    // calP(0,0,1;0,0,1) = 1 but calP(1,0,0;0,0,1) = -1 (<w,w*> vs <y,w*>).
    Probe pr;
    const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    auto permuted = [&](const Profile& p, const std::array<int, 3>& pi) {
      const std::array<int, 3> tail{p.s, p.t, p.u};
      return profile_index({p.r, tail[pi[0]], tail[pi[1]], tail[pi[2]]});
    };
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Rational& v = G(a, b);
        pr.require(G(b, a) == v, [&] { return "swap at " + to_string(profiles[a]) + ";" + to_string(profiles[b]); });
        for (const auto& pi : perms)
          pr.require(G(permuted(profiles[a], pi), permuted(profiles[b], pi)) == v, [&] {
            return "joint permutation " + std::to_string(pi[0]) + std::to_string(pi[1]) + std::to_string(pi[2]) + " at " +
                   to_string(profiles[a]) + ";" + to_string(profiles[b]);
          });
      }
    pr.report(rep, "special.symmetry", "calP(lam;mu) = calP(mu;lam) = calP(pi lam; pi mu) for pi in S3", N);
    if (N == 1) {
      const Rational same = calP_sum({1, {0, 0, 1}, {0, 0, 1}}, flip);
      const Rational moved = calP_sum({1, {1, 0, 0}, {0, 0, 1}}, flip);
      rep.expect("special.symmetry.one_sided", "permuting one triple alone changes calP", N,
                 same == 1 && moved == -1,
                 [&] { return "calP(0,0,1;0,0,1) = " + to_string(same) + ", calP(1,0,0;0,0,1) = " + to_string(moved); });
    }
  }

  {
    // Pairing and change of basis against the polynomial module.
    Probe pair, conv;
    const Rational scale = factorial(N) / Rational(Integer(1) << N);
    const QMatrix& C = conversion_matrix(N);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const PolyVec xp = PolyVec::term(profiles[a], Basis::monomial);
        const PolyVec xs = PolyVec::term(profiles[b], Basis::starred);
        const Rational h = hermitian(xp, xs);
        pair.require(h == scale * G(a, b), [&] {
          return "<x^" + to_string(profiles[a]) + ", x*^" + to_string(profiles[b]) + "> = " + to_string(h);
        });
        // x^p = sum_P Conv(P,p) x*^P with Conv = (N!/2^N) calP / P!.
        const Rational want = scale * G(a, b) / profile_factorial(profiles[b]);
        conv.require(C(b, a) == want, [&] {
          return "starred coefficient of x*^" + to_string(profiles[b]) + " in x^" + to_string(profiles[a]);
        });
      }
    pair.report(rep, "special.pairing", "<x^p, x*^P> = (N!/2^N) calP(p;P)", N);
    conv.report(rep, "special.transition", "x^p = (N!/2^N) sum_P calP(p;P)/P! x*^P", N);
  }

  rep.append(check_orthogonality(N, flip));
  if (N <= 3) {
    rep.append(check_recurrences(N, flip));
  } else {
    for (const char* id : {"special.recurrence.1", "special.recurrence_vee.1", "special.recurrence.2",
                           "special.recurrence_vee.2", "special.recurrence.3", "special.recurrence_vee.3"})
      rep.skip(id, "four-term recurrence", N, "exhaustive recurrences run for N <= 3");
  }

  {
    Probe vee, ops, ops_star;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Profile& p = profiles[a];
        const Rational v = calP_vee(N, {p.s, p.t, p.u}, weight_of(profiles[b]), opts.faults.flip_linear_terms);
        vee.require(v == G(a, b), [&] { return "calP-vee at " + to_string(p) + " weight of " + to_string(profiles[b]); });
      }
    vee.report(rep, "special.vee_substitution", "calP-vee at the weight of R equals calP", N);
    if (N <= 3) {
      const PolyVec top = PolyVec::term({N, 0, 0, 0}, Basis::monomial);
      const PolyVec top_star = PolyVec::term({N, 0, 0, 0}, Basis::starred);
      for (const Profile& p : profiles) {
        const MultiPoly q = calP_vee_poly(N, {p.s, p.t, p.u});
        const PolyVec got = apply_multipoly(q, Kind::A, top);
        ops.require(got == PolyVec::term(p, Basis::monomial),
                    [&] { return "calP-vee(A1,A2,A3) x^N at " + to_string(p) + " gave " + got.str(); });
        const PolyVec got_star = apply_multipoly(q, Kind::Astar, top_star);
        ops_star.require(got_star == PolyVec::term(p, Basis::starred),
                         [&] { return "calP-vee(A*1,A*2,A*3) x*^N at " + to_string(p) + " gave " + got_star.str(); });
      }
      ops.report(rep, "special.vee_operator", "calP-vee(s,t,u; A1,A2,A3) x^N = x^r y^s z^t w^u", N);
      ops_star.report(rep, "special.vee_operator_dual", "calP-vee(s,t,u; A*1,A*2,A*3) x*^N = x*^r y*^s z*^t w*^u", N);
    } else {
      rep.skip("special.vee_operator", "calP-vee operator identity", N, "exhaustive operator identity runs for N <= 3");
      rep.skip("special.vee_operator_dual", "calP-vee operator identity", N, "exhaustive operator identity runs for N <= 3");
    }
  }

  {
    const KrawtchoukFamily fam = krawtchouk(N, opts.faults.corrupt_krawtchouk);
    Probe deg, rec, top;
    for (int k = 0; k <= N + 1; ++k) {
      const auto& f = fam.f(k);
      deg.require(static_cast<int>(f.size()) == k + 1 && !is_zero(f.back()),
                  [&] { return "f_" + std::to_string(k) + " has wrong degree"; });
    }
    // eta f_n = n f_{n-1} + (N - n) f_{n+1}, coefficientwise, 0 <= n <= N.
    for (int k = 0; k <= N; ++k) {
      std::vector<Rational> lhs(static_cast<std::size_t>(k + 2)), rhs(static_cast<std::size_t>(k + 2));
      for (std::size_t d = 0; d < fam.f(k).size(); ++d) lhs[d + 1] += fam.f(k)[d];
      if (k > 0)
        for (std::size_t d = 0; d < fam.f(k - 1).size(); ++d) rhs[d] += Rational(k) * fam.f(k - 1)[d];
      if (k < N)
        for (std::size_t d = 0; d < fam.f(k + 1).size(); ++d) rhs[d] += Rational(N - k) * fam.f(k + 1)[d];
      else
        for (std::size_t d = 0; d < fam.f(k + 1).size(); ++d) lhs[d] -= fam.f(k + 1)[d];
      rec.require(lhs == rhs, [&] { return "three-term recurrence fails at n=" + std::to_string(k); });
    }
    top.require(fam.f(N + 1) == krawtchouk_top_closed_form(N), [&] { return "f_{N+1} differs from the product form"; });
    deg.report(rep, "special.krawtchouk.degree", "deg f_n = n for 0 <= n <= N+1", N);
    rec.report(rep, "special.krawtchouk.recurrence", "eta f_n = n f_{n-1} + (N-n) f_{n+1}", N);
    top.report(rep, "special.krawtchouk.top", "f_{N+1}(eta) = prod_k (eta - N + 2k) / N!", N);

    Probe mean;
    for (int k = 1; k <= 3; ++k)
      for (Kind kind : {Kind::A, Kind::Astar}) {
        const Basis b = kind == Kind::A ? Basis::monomial : Basis::starred;
        for (int m = 0; m <= N; ++m) {
          Profile p{N - m, 0, 0, 0};
          p[k] = m;
          const PolyVec got = krawtchouk_vector(fam, m, {kind, k});
          mean.require(got == PolyVec::term(p, b), [&] {
            return "f_" + std::to_string(m) + "(" + name({kind, k}) + ") on the top vector gave " + got.str();
          });
        }
      }
    mean.report(rep, "special.krawtchouk.meaning", "f_n(A_i) x^N = x^{N-n} (y,z,w)^n and its dual", N);
  }
  return rep;
}

}  // namespace detail
}  // namespace sl4cube
