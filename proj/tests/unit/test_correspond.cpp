#include <doctest.h>

#include "helpers.hpp"
#include "sl4cube/correspond.hpp"
#include "sl4cube/decompose.hpp"
#include "sl4cube/suites.hpp"

using namespace sl4cube;

namespace {

PolyVec mono(int r, int s, int t, int u, const Rational& c = 1) { return PolyVec::term({r, s, t, u}, Basis::monomial, c); }

}  // namespace

TEST_CASE("scale factors") {
  CHECK(ddag_map(3).scale_squared == 48);
  CHECK(eps_map(3).scale_squared == ratio(1, 8));
  CHECK(theta_map(3).scale_squared == 6);
}

TEST_CASE("ddag rules") {
  const Hypercube c2(2);
  CHECK(lift(c2, ddag_scaled(mono(2, 0, 0, 0), 2)) == Rational(2) * b_vector(2, {2, 0, 0, 0}));
  CHECK(lift(c2, ddag_scaled_starred(PolyVec::term({2, 0, 0, 0}, Basis::starred), 2)) ==
        Rational(2) * q_vector(c2, {0, 0, 0}));
  CHECK_THROWS(ddag_scaled(mono(1, 0, 0, 0) + mono(2, 0, 0, 0), 2));
  CHECK_THROWS(ddag_scaled(PolyVec::term({2, 0, 0, 0}, Basis::starred), 2));
  // Starred input through the monomial route lands on B*.
  const Hypercube c1(1);
  const PolyVec xs = convert_basis(PolyVec::term({1, 0, 0, 0}, Basis::starred), Basis::monomial);
  CHECK(lift(c1, ddag_scaled(xs, 1)) == bstar_vector(c1, {1, 0, 0, 0}));
}

TEST_CASE("eps and theta rules at N = 1") {
  const Hypercube c1(1);
  const TAlgebra T(c1, 0);
  QMatrix e00(2, 2);
  e00(0, 0) = 1;
  CHECK(eps_scaled(c1, 0, b_vector(1, {1, 0, 0, 0})) == e00);
  CHECK(T.coords_of(eps_scaled(c1, 0, q_vector(c1, {0, 0, 0}))) == T.dual_basis()[T.position({0, 0, 0})]);
  CHECK(theta_scaled(T, mono(1, 0, 0, 0), 1) == T.unit({0, 0, 0}));
  // y has triple (0,1,1), so it goes to E*_1 A_0 E*_1.
  CHECK(theta_scaled(T, mono(0, 1, 0, 0), 1) == T.unit({0, 1, 1}));
  CHECK(theta_scaled(T, PolyVec::term({1, 0, 0, 0}, Basis::starred), 1) == T.dual_basis()[T.position({0, 0, 0})]);
}

TEST_CASE("sigma / S diagram") {
  for (int N = 1; N <= 2; ++N) {
    const Hypercube c(N);
    const TAlgebra T(c, 0);
    for (const Profile& p : enumerate_profiles(N)) {
      const PolyVec v = PolyVec::term(p, Basis::monomial);
      CHECK(theta_scaled(T, sigma(v), N) == T.S(theta_scaled(T, v, N)));
    }
    CHECK(is_zero(theta_scaled(T, PolyVec(Basis::monomial), N)));
  }
}

TEST_CASE("Wedderburn correspondence at N = 2") {
  const Hypercube c2(2);
  const TAlgebra T(c2, 0);
  const auto parts = wedderburn(T);
  const QVector img = theta_scaled(T, mono(1, 1, 0, 0) - mono(0, 0, 1, 1), 2);
  REQUIRE(parts[1].ideal.size() == 1);
  CHECK(rank(QMatrix::from_columns({img, parts[1].ideal[0]}, T.dim())) == 1);
  CHECK(!is_zero(img));
  CHECK(parts[0].ideal.size() == 9);
}

TEST_CASE("change of basis on the fixed space") {
  for (int N = 0; N <= 3; ++N) {
    const Hypercube c(N);
    const TAlgebra T(c, 0);
    const QMatrix M = fix_change_of_basis(T);
    CHECK(M == conversion_matrix(N));
    const FixVec v{FixBasis::Btilde, N, QVector(profile_count(N), Rational(1))};
    CHECK(to_basis(T, to_basis(T, v, FixBasis::BstarTilde), FixBasis::Btilde) == v);
  }
}

TEST_CASE("correspond suite passes through N = 4") {
  for (int N = 0; N <= 4; ++N) require_all_pass(run_suite(Suite::correspond, N, {}));
}
