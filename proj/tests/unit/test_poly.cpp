#include <doctest.h>

#include "helpers.hpp"
#include "sl4cube/decompose.hpp"
#include "sl4cube/poly.hpp"
#include "sl4cube/suites.hpp"

using namespace sl4cube;

namespace {

PolyVec mono(int r, int s, int t, int u, const Rational& c = 1) { return PolyVec::term({r, s, t, u}, Basis::monomial, c); }
PolyVec star(int r, int s, int t, int u, const Rational& c = 1) { return PolyVec::term({r, s, t, u}, Basis::starred, c); }

}  // namespace

TEST_CASE("generator actions") {
  CHECK(act_generator({Kind::A, 1}, mono(1, 1, 0, 0)) == mono(2, 0, 0, 0) + mono(0, 2, 0, 0));
  CHECK(act_generator({Kind::Astar, 1}, mono(1, 1, 1, 0)) == mono(1, 1, 1, 0));
  CHECK(act_generator({Kind::A, 1}, star(1, 1, 1, 0)) == star(1, 1, 1, 0));
  CHECK(act_generator({Kind::A, 2}, PolyVec(Basis::monomial)).is_zero());
}

TEST_CASE("basis conversion") {
  const Rational h = ratio(1, 2);
  CHECK(convert_basis(star(1, 0, 0, 0), Basis::monomial) ==
        mono(1, 0, 0, 0, h) + mono(0, 1, 0, 0, h) + mono(0, 0, 1, 0, h) + mono(0, 0, 0, 1, h));
  // y* z* = (x^2 - y^2 - z^2 + w^2)/4 + (yz - xw)/2, from the substitution formulas.
  const Rational q = ratio(1, 4);
  CHECK(convert_basis(star(0, 1, 1, 0), Basis::monomial) ==
        mono(2, 0, 0, 0, q) + mono(0, 2, 0, 0, -q) + mono(0, 0, 2, 0, -q) + mono(0, 0, 0, 2, q) +
            mono(0, 1, 1, 0, h) + mono(1, 0, 0, 1, -h));
  // x^N = (N!/2^N) sum_p x*^p / p!
  for (int N = 0; N <= 4; ++N) {
    PolyVec want(Basis::starred);
    for (const Profile& p : enumerate_profiles(N))
      want.add(p, factorial(N) / Rational(Integer(1) << N) / profile_factorial(p));
    CHECK(convert_basis(mono(N, 0, 0, 0), Basis::starred) == want);
  }
  const PolyVec v = mono(1, 2, 0, 0, 3) + mono(0, 0, 1, 2, ratio(-2, 7)) + mono(1, 1, 1, 0);
  CHECK(convert_basis(convert_basis(v, Basis::starred), Basis::monomial) == v);
}

TEST_CASE("sigma") {
  CHECK(sigma(mono(2, 0, 0, 0)) == star(2, 0, 0, 0));
  CHECK(sigma(sigma(mono(1, 2, 0, 0, 3))) == mono(1, 2, 0, 0, 3));
  const PolyVec f = mono(1, 1, 0, 0) - mono(0, 0, 1, 1);
  CHECK(convert_basis(sigma(f), Basis::monomial) == f);
}

TEST_CASE("D and M operators") {
  CHECK(apply_D(Var::x, mono(3, 0, 0, 0)) == mono(2, 0, 0, 0, 3));
  CHECK(apply_D(Var::x, mono(0, 0, 0, 0)).is_zero());
  CHECK(apply_D(Var::xs, star(1, 1, 0, 0)) == star(0, 1, 0, 0));
  CHECK(apply_M(Var::x, mono(0, 0, 0, 0)) == mono(1, 0, 0, 0));
  const PolyVec v = mono(2, 1, 0, 1, 5) + mono(0, 3, 1, 0);
  CHECK(apply_D(Var::x, apply_M(Var::x, v)) - apply_M(Var::x, apply_D(Var::x, v)) == v);
  CHECK((apply_D(Var::x, apply_M(Var::y, v)) - apply_M(Var::y, apply_D(Var::x, v))).is_zero());
}

TEST_CASE("L, R, Omega, C") {
  const PolyVec one = mono(0, 0, 0, 0);
  CHECK(apply_L(1, mono(1, 1, 0, 0)) == one);
  CHECK(apply_R(1, one) == mono(1, 1, 0, 0) - mono(0, 0, 1, 1));
  CHECK(apply_L(1, mono(2, 0, 0, 0)).is_zero());
  CHECK(apply_Omega(mono(2, 0, 1, 0)) == mono(2, 0, 1, 0, 3));
  CHECK(apply_Omega(one).is_zero());
  const PolyVec v = mono(4, 0, 0, 0) + mono(1, 1, 1, 1, ratio(2, 3)) + mono(0, 2, 2, 0, -1);
  CHECK(apply_L(1, apply_R(1, v)) - apply_R(1, apply_L(1, v)) == apply_Omega(v) + Rational(2) * v);
  CHECK(apply_C(1, mono(1, 0, 0, 0)) == mono(1, 0, 0, 0, ratio(3, 2)));
  CHECK(apply_C(1, mono(1, 1, 0, 0)) == mono(0, 0, 1, 1, 2) + mono(1, 1, 0, 0, 2));
  for (int i = 1; i <= 3; ++i) {
    CHECK(apply_C(i, v) == apply_C_bracket(i, 0, v));
    CHECK(apply_C(i, v) == apply_C_bracket(i, 1, v));
  }
}

TEST_CASE("bilinear form") {
  CHECK(hermitian(mono(2, 1, 0, 0), mono(2, 1, 0, 0)) == 2);
  CHECK(hermitian(mono(1, 0, 0, 0), mono(0, 1, 0, 0)) == 0);
  CHECK(hermitian(star(1, 1, 0, 0), star(1, 1, 0, 0)) == 1);
  for (int N = 0; N <= 4; ++N)
    for (const Profile& p : enumerate_profiles(N))
      CHECK(hermitian(PolyVec::term(p, Basis::monomial), star(N, 0, 0, 0)) == factorial(N) / Rational(Integer(1) << N));
}

TEST_CASE("weights and eigenspaces") {
  CHECK(weight_decomposition(2).size() == 10);
  const auto d = eigenspace_dims({Kind::Astar, 1}, 2);
  CHECK(d == std::map<int, int>{{-2, 3}, {0, 4}, {2, 3}});
  CHECK(eigenspace_dims({Kind::A, 3}, 0) == std::map<int, int>{{0, 1}});
  int total = 0;
  for (const auto& [ev, m] : eigenspace_dims({Kind::A, 2}, 5)) total += m;
  CHECK(total == 56);
}

TEST_CASE("Krawtchouk kernel basis and graded decomposition") {
  CHECK(kernel_L_basis(1, 0) == std::vector<PolyVec>{mono(0, 0, 0, 0)});
  const auto k1 = kernel_L_basis(1, 1);
  REQUIRE(k1.size() == 4);
  CHECK(k1[3] == mono(0, 1, 0, 0));
  const auto k2 = kernel_L_basis(1, 2);
  REQUIRE(k2.size() == 9);
  // v_{1,1} at N = 2 has squared norm 2!/(C(2,1) C(2,1)).
  CHECK(hermitian(k2[4], k2[4]) == ratio(1, 2));

  const auto g2 = graded_decomposition(1, 2);
  REQUIRE(g2.size() == 2);
  CHECK(g2[0].basis.size() == 9);
  REQUIRE(g2[1].basis.size() == 1);
  CHECK(g2[1].basis[0] == mono(1, 1, 0, 0) - mono(0, 0, 1, 1));
  CHECK(apply_C(1, g2[1].basis[0]).is_zero());
  const auto g3 = graded_decomposition(1, 3);
  CHECK(g3[0].basis.size() == 16);
  CHECK(g3[1].basis.size() == 4);
}

TEST_CASE("generator words") {
  // At N = 1 the words send x to x, y, z, w.
  const auto ps = enumerate_profiles(1);
  const auto w1 = generator_word_family(1, false);
  const auto s1 = generator_word_family(1, true);
  for (std::size_t k = 0; k < ps.size(); ++k) {
    CHECK(w1[k] == PolyVec::term(ps[k], Basis::monomial));
    CHECK(s1[k] == PolyVec::term(ps[k], Basis::starred));
  }
}

TEST_CASE("degenerate inputs") {
  const PolyVec zero(Basis::monomial);
  CHECK(apply_L(2, zero).is_zero());
  CHECK(apply_R(3, zero).is_zero());
  CHECK(apply_L(1, mono(1, 0, 0, 0)).is_zero());
  CHECK(convert_basis(zero, Basis::starred).is_zero());
}

TEST_CASE("poly suite passes through N = 4") {
  for (int N = 0; N <= 4; ++N) require_all_pass(run_suite(Suite::poly, N, {}));
}
