#include <doctest.h>

#include "helpers.hpp"
#include "sl4cube/special.hpp"
#include "sl4cube/suites.hpp"

using namespace sl4cube;

namespace {

TransitionKey key(int N, std::array<int, 3> lam, std::array<int, 3> mu) { return {N, lam, mu}; }

}  // namespace

TEST_CASE("transition coefficient: frozen values") {
  CHECK(calP_sum(key(1, {0, 0, 0}, {0, 0, 0})) == 1);
  CHECK(calP_sum(key(1, {1, 0, 0}, {1, 0, 0})) == 1);
  CHECK(calP_sum(key(1, {1, 0, 0}, {0, 1, 0})) == -1);
  // Independent values of <x^p, x*^P> / (N!/2^N), from expanding the
  // starred variables symbolically.
  CHECK(calP_sum(key(2, {0, 0, 0}, {2, 0, 0})) == 1);
  CHECK(calP_sum(key(2, {1, 0, 0}, {0, 1, 1})) == -1);
  CHECK(calP_sum(key(3, {1, 1, 0}, {1, 1, 1})) == ratio(1, 3));
  CHECK(calP_sum(key(3, {0, 1, 2}, {2, 0, 0})) == 1);
  CHECK(calP_sum(key(4, {1, 1, 1}, {1, 1, 0})) == 0);
  CHECK(calP_sum(key(4, {2, 0, 2}, {0, 3, 0})) == -1);
}

TEST_CASE("transition coefficient: the two evaluators agree") {
  for (int N = 0; N <= 4; ++N) CHECK(calP_sum_table(N) == calP_genfunc_table(N));
  for (const auto& k : {key(1, {0, 0, 0}, {0, 0, 0}), key(1, {1, 0, 0}, {1, 0, 0}), key(1, {1, 0, 0}, {0, 1, 0})})
    CHECK(calP_sum(k) == calP_genfunc(k));
  CHECK_THROWS(calP_genfunc(key(1, {1, 1, 0}, {0, 0, 0})));
}

TEST_CASE("transition coefficient: symmetries") {
  for (int N = 1; N <= 3; ++N) {
    const QMatrix& G = calP_genfunc_table(N);
    CHECK(G == G.transpose());
  }
  // Permuting both triples together is a symmetry; permuting one is not.
  CHECK(calP_sum(key(3, {1, 0, 2}, {0, 2, 1})) == calP_sum(key(3, {0, 1, 2}, {2, 0, 1})));
  CHECK(calP_sum(key(1, {0, 0, 1}, {0, 0, 1})) == 1);
  CHECK(calP_sum(key(1, {1, 0, 0}, {0, 0, 1})) == -1);
}

TEST_CASE("orthogonality, recurrences, vee") {
  require_all_pass(check_orthogonality(1));
  require_all_pass(check_orthogonality(3));
  require_all_pass(check_recurrences(2));
  CHECK(calP_vee(1, {0, 0, 0}, weight_of({1, 0, 0, 0})) == 1);
  const MultiPoly q = calP_vee_poly(2, {1, 0, 0});
  CHECK(apply_multipoly(q, Kind::A, PolyVec::term({2, 0, 0, 0}, Basis::monomial)) ==
        PolyVec::term({1, 1, 0, 0}, Basis::monomial));
  for (const Profile& p : enumerate_profiles(2))
    for (const Profile& P : enumerate_profiles(2))
      CHECK(calP_vee(2, {p.s, p.t, p.u}, weight_of(P)) == calP_sum(key_of(p, P)));
}

TEST_CASE("Krawtchouk polynomials") {
  const KrawtchoukFamily k2 = krawtchouk(2);
  CHECK(k2.f(1) == std::vector<Rational>{0, ratio(1, 2)});
  CHECK(k2.f(2) == std::vector<Rational>{-1, 0, ratio(1, 2)});
  CHECK(k2.f(3) == std::vector<Rational>{0, -2, 0, ratio(1, 2)});
  const KrawtchoukFamily k3 = krawtchouk(3);
  CHECK(k3.f(2) == std::vector<Rational>{ratio(-1, 2), 0, ratio(1, 6)});
  CHECK(k3.f(3) == std::vector<Rational>{0, ratio(-7, 6), 0, ratio(1, 6)});
  for (int N = 0; N <= 6; ++N) CHECK(krawtchouk(N).f(N + 1) == krawtchouk_top_closed_form(N));
  CHECK(krawtchouk_vector(krawtchouk(1), 1, {Kind::A, 1}) == PolyVec::term({0, 1, 0, 0}, Basis::monomial));
  CHECK(krawtchouk_vector(krawtchouk(2), 2, {Kind::A, 2}) == PolyVec::term({0, 0, 2, 0}, Basis::monomial));
  CHECK(krawtchouk_vector(krawtchouk(3), 0, {Kind::A, 3}) == PolyVec::term({3, 0, 0, 0}, Basis::monomial));
  CHECK(krawtchouk(2, true).f(1)[0] == 1);
}

TEST_CASE("special suite and its fault") {
  for (int N = 0; N <= 3; ++N) require_all_pass(run_suite(Suite::special, N, {}));
  SuiteOptions bad;
  bad.faults.flip_linear_terms = true;
  const VerificationReport rep = run_suite(Suite::special, 2, bad);
  REQUIRE(rep.first_failure() != nullptr);
  CHECK(rep.first_failure()->id == "special.dual_evaluators");
}
