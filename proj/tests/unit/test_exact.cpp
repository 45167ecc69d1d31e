#include <doctest.h>

#include "sl4cube/linalg.hpp"
#include "sl4cube/profile.hpp"
#include "sl4cube/rational.hpp"

using namespace sl4cube;

TEST_CASE("factorial, binomial, pochhammer") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(4) == 24);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(6, 3) == 20);
  CHECK(pochhammer(-1, 0) == 1);
  CHECK(pochhammer(-1, 1) == -1);
  CHECK(pochhammer(-3, 2) == 6);
  for (int m = 0; m <= 6; ++m)
    for (int n = m + 1; n <= 8; ++n) CHECK(pochhammer(-m, n) == 0);
  for (int n = 0; n <= 10; ++n) {
    CHECK(factorial(n) == pochhammer(1, n));
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n, n - k));
  }
}

TEST_CASE("ratio is canonical") {
  const Rational q = ratio(8, 2);
  CHECK(q == 4);
  CHECK(q.get_den() == 1);
  CHECK(ratio(-6, 4) == Rational(-3, 2));
  CHECK(to_string(ratio(6, -4)) == "-3/2");
  CHECK_THROWS(ratio(1, 0));
}

TEST_CASE("rank and kernel over Q") {
  QMatrix m(3, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  m(2, 0) = 1; m(2, 1) = 0; m(2, 2) = ratio(1, 3);
  CHECK(rank(m) == 2);
  const QMatrix k = kernel(m);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK(rank(QMatrix::identity(5)) == 5);
  CHECK(rank(QMatrix(4, 2)) == 0);
}

TEST_CASE("incremental basis") {
  IncrementalBasis b(3);
  CHECK(b.add({1, 2, 3}));
  CHECK(b.add({0, 1, 1}));
  CHECK_FALSE(b.add({2, 5, 7}));
  CHECK(b.contains({1, 3, 4}));
  CHECK_FALSE(b.contains({0, 0, 1}));
  CHECK(b.size() == 2);
}

TEST_CASE("profiles and triples") {
  CHECK(enumerate_profiles(0).size() == 1);
  CHECK(enumerate_profiles(1).size() == 4);
  CHECK(enumerate_profiles(3).size() == 20);
  for (int N = 0; N <= 7; ++N) {
    const auto ps = enumerate_profiles(N);
    CHECK(Rational(static_cast<long>(ps.size())) == binomial(N + 3, 3));
    CHECK(enumerate_triples(N).size() == ps.size());
    for (std::size_t k = 0; k < ps.size(); ++k) {
      CHECK(profile_index(ps[k]) == k);
      const TripleIndex t = triple_of(ps[k]);
      CHECK(in_triple_set(N, t));
      CHECK(profile_of_triple(N, t) == ps[k]);
    }
  }
  const auto t1 = enumerate_triples(1);
  CHECK(t1 == std::vector<TripleIndex>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK_FALSE(in_triple_set(2, {1, 1, 1}));
  CHECK(triple_of({0, 1, 0, 0}) == TripleIndex{0, 1, 1});
}

TEST_CASE("weights") {
  CHECK(weight_of({1, 0, 0, 0}) == WeightTriple{1, 1, 1});
  CHECK(weight_of({1, 1, 0, 0}) == WeightTriple{2, 0, 0});
  for (int N = 0; N <= 5; ++N)
    for (const Profile& p : enumerate_profiles(N)) CHECK(profile_of_weight(N, weight_of(p)) == p);
  CHECK(profile_of_weight(3, {3, 3, 3}) == Profile{3, 0, 0, 0});
}
