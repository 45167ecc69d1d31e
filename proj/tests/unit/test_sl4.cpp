#include <doctest.h>

#include "helpers.hpp"
#include "sl4cube/sl4.hpp"

using namespace sl4cube;

namespace {

Matrix4 diag(int a, int b, int c, int d) {
  Matrix4 m(4, 4);
  m(0, 0) = a; m(1, 1) = b; m(2, 2) = c; m(3, 3) = d;
  return m;
}

}  // namespace

TEST_CASE("generator matrices") {
  CHECK(generator({Kind::Astar, 1}) == diag(1, 1, -1, -1));
  CHECK(generator({Kind::Astar, 2}) == diag(1, -1, 1, -1));
  CHECK(generator({Kind::Astar, 3}) == diag(1, -1, -1, 1));
  Matrix4 a1(4, 4);
  a1(0, 1) = a1(1, 0) = a1(2, 3) = a1(3, 2) = 1;
  CHECK(generator({Kind::A, 1}) == a1);
  CHECK(commutator(generator({Kind::A, 1}), generator({Kind::Astar, 1})).is_zero());
}

TEST_CASE("brackets") {
  const Matrix4 I = Matrix4::identity(4);
  const Matrix4 a1 = generator({Kind::A, 1});
  const Matrix4 s2 = generator({Kind::Astar, 2});
  CHECK(bracket(I, a1).is_zero());
  CHECK(bracket(a1, s2) == Rational(-1) * bracket(s2, a1));
  CHECK(bracket(a1, bracket(a1, s2)) == Rational(4) * s2);
}

TEST_CASE("presentation, inverse formulas, 15-basis, upsilon") {
  const GeneratorSet g = standard_generators();
  require_all_pass(check_presentation(g));
  const VerificationReport inv = check_inverse_formulas(g);
  require_all_pass(inv);
  CHECK(inv.checks().size() == 15);
  require_all_pass(check_basis15(g));
  require_all_pass(check_upsilon(g));
  CHECK(rank([&] {
          QMatrix flat(16, 15);
          const auto b = basis15(g);
          for (std::size_t k = 0; k < b.size(); ++k)
            for (int e = 0; e < 16; ++e) flat(static_cast<std::size_t>(e), k) = b[k](e / 4, e % 4);
          return flat;
        }()) == 15);
}

TEST_CASE("elementary matrices from generators") {
  const GeneratorSet g = standard_generators();
  CHECK(elementary_from_generators(1, 2, g) == elementary(1, 2));
  CHECK(elementary_from_generators(3, 4, g) == elementary(3, 4));
  CHECK(elementary_from_generators(1, 1, g) == diag(1, -1, 0, 0));
}

TEST_CASE("upsilon and tau") {
  const Matrix4 U = upsilon();
  CHECK(U * U == Matrix4::identity(4));
  // Row 1 holds the coefficients of y* = (x + y - z - w)/2.
  CHECK(U(1, 0) == ratio(1, 2));
  CHECK(U(1, 1) == ratio(1, 2));
  CHECK(U(1, 2) == ratio(-1, 2));
  CHECK(U(1, 3) == ratio(-1, 2));
  for (int i = 1; i <= 3; ++i) {
    CHECK(tau(generator({Kind::A, i})) == generator({Kind::Astar, i}));
    CHECK(tau(generator({Kind::Astar, i})) == generator({Kind::A, i}));
  }
  CHECK(tau(Matrix4::identity(4)) == Matrix4::identity(4));
  const Matrix4 m = bracket(generator({Kind::A, 2}), generator({Kind::Astar, 3}));
  CHECK(tau(tau(m)) == m);
}

TEST_CASE("corrupted generator is caught") {
  GeneratorSet g = standard_generators();
  g.a[0](0, 2) += 1;
  const VerificationReport rep = check_presentation(g);
  REQUIRE(rep.first_failure() != nullptr);
  CHECK_FALSE(rep.first_failure()->witness.empty());
}
