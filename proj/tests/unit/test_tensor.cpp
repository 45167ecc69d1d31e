#include <doctest.h>

#include "helpers.hpp"
#include "sl4cube/suites.hpp"
#include "sl4cube/tensor.hpp"

using namespace sl4cube;

TEST_CASE("profile of a vertex triple") {
  CHECK(profile_of(3, 5, 5, 5) == Profile{3, 0, 0, 0});
  // N = 2, x = (+,+), y = z = (+,-): coordinate 1 agrees, coordinate 2 has x differing.
  CHECK(profile_of(2, 0, 2, 2) == Profile{1, 1, 0, 0});
}

TEST_CASE("B and Q vectors") {
  const TripleTensor b = b_vector(3, {3, 0, 0, 0});
  CHECK(b.terms().size() == 8);
  for (Vertex x = 0; x < 8; ++x) CHECK(b.coeff(x, x, x) == 1);
  CHECK(b_vector(1, {0, 1, 0, 0}).terms().size() == 2);
  const Hypercube c1(1);
  const TripleTensor q = q_vector(c1, {0, 0, 0});
  CHECK(inner(q, q) == 2);
  CHECK(q == bstar_vector(c1, {1, 0, 0, 0}));
  const Hypercube c2(2);
  CHECK(q_vector(c2, {1, 1, 1}).is_zero());
  CHECK(fix_membership(b));
  CHECK(fix_membership(q));
  TripleTensor single(2);
  single.add(0, 1, 2, 1);
  CHECK_FALSE(fix_membership(single));
}

TEST_CASE("actions on the fixed space") {
  const FixVec u = FixVec::unit(FixBasis::Btilde, {1, 0, 0, 0});
  CHECK(act_abstract({Kind::A, 1}, u) == FixVec::unit(FixBasis::Btilde, {0, 1, 0, 0}));
  const FixVec v = FixVec::unit(FixBasis::Btilde, {1, 1, 0, 0});
  FixVec twice = v;
  for (auto& c : twice.coords) c *= 2;
  CHECK(act_abstract({Kind::Astar, 1}, v) == twice);
}

TEST_CASE("concrete actions") {
  TripleTensor t(1);
  t.add(0, 1, 1, 1);
  TripleTensor flipped(1);
  flipped.add(1, 1, 1, 1);
  CHECK(act_concrete({Kind::A, 1}, t) == flipped);
  TripleTensor s(3);
  s.add(0, 3, 6, 1);
  // A*^(3) scales by theta*_{d(x,y)} = 3 - 2*2.
  CHECK(act_concrete({Kind::Astar, 3}, s) == Rational(-1) * s);
}

TEST_CASE("group and orbits") {
  CHECK(group_elements(3).size() == 48);
  CHECK(group_generators(3).size() == 3);
  const auto a = triple_orbits(2, false);
  const auto b = triple_orbits(2, true);
  CHECK(a.size() == 64);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) CHECK((a[i] == a[j]) == (b[i] == b[j]));
}

TEST_CASE("lift and restrict") {
  const Hypercube c2(2);
  const FixVec v{FixBasis::BstarTilde, 2, {1, 0, ratio(2, 3), 0, 0, -1, 0, 0, 4, 0}};
  const auto back = restrict_to_fix(c2, lift(c2, v), FixBasis::BstarTilde);
  REQUIRE(back.has_value());
  CHECK(*back == v);
}

TEST_CASE("tensor suite passes") {
  for (int N = 0; N <= 3; ++N) require_all_pass(run_suite(Suite::tensor, N, {}));
  const VerificationReport skipped = run_suite(Suite::tensor, 5, {});
  REQUIRE(skipped.checks().size() == 1);
  CHECK(skipped.checks()[0].status == Status::skipped);
}
