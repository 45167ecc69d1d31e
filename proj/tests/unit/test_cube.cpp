#include <doctest.h>

#include "helpers.hpp"
#include "sl4cube/cube.hpp"
#include "sl4cube/suites.hpp"

using namespace sl4cube;

TEST_CASE("adjacency and distance operators") {
  const Hypercube c1(1);
  CHECK(c1.adjacency_apply({1, 0}) == QVector{0, 1});
  const Hypercube c2(2);
  // Vertex 0 is (+,+); vertices 1 and 2 each differ in one coordinate.
  CHECK(c2.adjacency_apply({1, 0, 0, 0}) == QVector{0, 1, 1, 0});
  CHECK(c2.distance_op(0) == QMatrix::identity(4));
  const QMatrix A = c2.adjacency();
  CHECK(c2.distance_op(2) == ratio(1, 2) * (A * A) - QMatrix::identity(4));
  CHECK_THROWS(Hypercube(13));
}

TEST_CASE("primitive idempotents") {
  const Hypercube c1(1);
  CHECK(c1.idempotent(0) == ratio(1, 2) * (c1.adjacency() + QMatrix::identity(2)));
  const Hypercube c3(3);
  CHECK(rank(c3.idempotent(1)) == 3);
  CHECK(c3.idempotent(2) == c3.idempotent(2).transpose());
}

TEST_CASE("dual operators") {
  const Hypercube c2(2);
  const QMatrix As = c2.dual_adjacency(0);
  for (int i = 0; i <= 2; ++i) CHECK(c2.dual_idempotent(0, i)(0, 0) == (i == 0 ? 1 : 0));
  QMatrix e00(4, 4);
  e00(0, 0) = 1;
  CHECK(c2.dual_idempotent(0, 0) == e00);
  // A*_1 = A* at the basepoint is theta*_0 = N.
  CHECK(c2.dual_distance_op(0, 1)(0, 0) == 2);
  CHECK(As(0, 0) == 2);
  CHECK(As(3, 3) == -2);
}

TEST_CASE("T algebra at N = 1") {
  const Hypercube c1(1);
  const TAlgebra T(c1, 0);
  CHECK(T.dim() == 4);
  QMatrix e00(2, 2);
  e00(0, 0) = 1;
  CHECK(T.matrix_of(T.unit({0, 0, 0})) == e00);
  const QVector y = T.unit({0, 0, 0});
  CHECK(T.calA(2, y) == T.product(T.A(), y));
  CHECK(T.calAstar(1, T.unit({1, 1, 0})) == Rational(-1) * T.unit({1, 1, 0}));
  CHECK(T.transpose(T.A()) == T.A());
  CHECK_THROWS(T.position({1, 1, 1}));
}

TEST_CASE("Wedderburn decomposition sizes") {
  const Hypercube c2(2);
  const auto p2 = wedderburn(TAlgebra(c2, 0));
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].eigenvalue == 4);
  CHECK(p2[0].ideal.size() == 9);
  CHECK(p2[1].eigenvalue == 0);
  CHECK(p2[1].ideal.size() == 1);
  const Hypercube c4(4);
  const auto p4 = wedderburn(TAlgebra(c4, 0));
  REQUIRE(p4.size() == 3);
  CHECK(p4[0].ideal.size() == 25);
  CHECK(p4[1].ideal.size() == 9);
  CHECK(p4[2].ideal.size() == 1);
  CHECK(p4[0].eigenvalue == 12);
  CHECK(p4[1].eigenvalue == 4);
  CHECK(p4[2].eigenvalue == 0);
}

TEST_CASE("generated algebra dimension") {
  for (int N = 0; N <= 4; ++N) {
    const Hypercube c(N);
    const GeneratedAlgebra g = generated_algebra(TAlgebra(c, 0));
    CHECK(g.words_in_class_span);
    CHECK(Rational(static_cast<long>(g.dimension)) == binomial(N + 3, 3));
  }
}

TEST_CASE("cube suite passes at a second basepoint") {
  for (int N = 0; N <= 3; ++N) {
    SuiteOptions o;
    o.basepoint = static_cast<Vertex>(N == 0 ? 0 : 1);
    require_all_pass(run_suite(Suite::cube, N, o));
  }
}
