#include "sl4cube/sl4.hpp"

#include <sstream>
#include <stdexcept>

namespace sl4cube {

namespace {

const int kStarSigns[3][4] = {{1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};

std::string show(const Matrix4& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m(i, j));
  }
  os << "]";
  return os.str();
}

std::string mismatch(const Matrix4& got, const Matrix4& want) {
  return "got " + show(got) + " expected " + show(want);
}

QVector flatten(const Matrix4& m) {
  QVector v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

std::size_t rank_of(const std::vector<Matrix4>& ms) {
  std::vector<QVector> cols;
  for (const auto& m : ms) cols.push_back(flatten(m));
  return rank(QMatrix::from_columns(cols, 16));
}

}  // namespace

std::string name(GeneratorId g) {
  return std::string(g.kind == Kind::A ? "A" : "A*") + std::to_string(g.index);
}

std::array<GeneratorId, 6> all_generators() {
  return {GeneratorId{Kind::A, 1}, GeneratorId{Kind::A, 2}, GeneratorId{Kind::A, 3},
          GeneratorId{Kind::Astar, 1}, GeneratorId{Kind::Astar, 2}, GeneratorId{Kind::Astar, 3}};
}

const Matrix4& GeneratorSet::operator[](GeneratorId g) const {
  if (g.index < 1 || g.index > 3) throw std::out_of_range("generator index");
  return g.kind == Kind::A ? a[g.index - 1] : astar[g.index - 1];
}

Matrix4& GeneratorSet::operator[](GeneratorId g) {
  if (g.index < 1 || g.index > 3) throw std::out_of_range("generator index");
  return g.kind == Kind::A ? a[g.index - 1] : astar[g.index - 1];
}

Matrix4 generator(GeneratorId id) {
  if (id.index < 1 || id.index > 3) throw std::out_of_range("generator index");
  Matrix4 m(4, 4);
  if (id.kind == Kind::A) {
    // A_i swaps coordinate k with k XOR i (0-based).
    for (int k = 0; k < 4; ++k) m(k, k ^ id.index) = 1;
  } else {
    for (int k = 0; k < 4; ++k) m(k, k) = kStarSigns[id.index - 1][k];
  }
  return m;
}

GeneratorSet standard_generators() {
  GeneratorSet g;
  for (int i = 1; i <= 3; ++i) {
    g.a[i - 1] = generator({Kind::A, i});
    g.astar[i - 1] = generator({Kind::Astar, i});
  }
  return g;
}

Matrix4 bracket(const Matrix4& x, const Matrix4& y) { return commutator(x, y); }

VerificationReport check_presentation(const GeneratorSet& g) {
  VerificationReport rep;
  const auto& A = g.a;
  const auto& S = g.astar;
  const Matrix4 zero(4, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
      Matrix4 c = bracket(A[i], A[j]);
      rep.expect("sl4.rel1.A" + ij, "[A_i,A_j] = 0", std::nullopt, c == zero, [&] { return mismatch(c, zero); });
      c = bracket(S[i], S[j]);
      rep.expect("sl4.rel1.S" + ij, "[A*_i,A*_j] = 0", std::nullopt, c == zero, [&] { return mismatch(c, zero); });
    }
  for (int i = 0; i < 3; ++i) {
    Matrix4 c = bracket(A[i], S[i]);
    rep.expect("sl4.rel2." + std::to_string(i + 1), "[A_i,A*_i] = 0", std::nullopt, c == zero,
               [&] { return mismatch(c, zero); });
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
      Matrix4 lhs = bracket(A[i], bracket(A[i], S[j]));
      Matrix4 rhs = Rational(4) * S[j];
      rep.expect("sl4.rel3a." + ij, "[A_i,[A_i,A*_j]] = 4A*_j", std::nullopt, lhs == rhs,
                 [&] { return mismatch(lhs, rhs); });
      lhs = bracket(S[j], bracket(S[j], A[i]));
      rhs = Rational(4) * A[i];
      rep.expect("sl4.rel3b." + ij, "[A*_j,[A*_j,A_i]] = 4A_i", std::nullopt, lhs == rhs,
                 [&] { return mismatch(lhs, rhs); });
    }
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& p : perms) {
    const int h = p[0], i = p[1], j = p[2];
    const std::string hij = std::to_string(h + 1) + std::to_string(i + 1) + std::to_string(j + 1);
    const Matrix4 w1 = bracket(A[h], bracket(S[i], A[j]));
    const Matrix4 w2 = bracket(S[h], bracket(A[i], S[j]));
    const Matrix4 w3 = bracket(A[j], bracket(S[i], A[h]));
    const Matrix4 w4 = bracket(S[j], bracket(A[i], S[h]));
    const bool ok = w1 == w2 && w2 == w3 && w3 == w4;
    rep.expect("sl4.rel4." + hij, "[A_h,[A*_i,A_j]] = [A*_h,[A_i,A*_j]] = [A_j,[A*_i,A_h]] = [A*_j,[A_i,A*_h]]",
               std::nullopt, ok, [&] {
                 return "words " + show(w1) + " | " + show(w2) + " | " + show(w3) + " | " + show(w4);
               });
  }
  return rep;
}

std::vector<Matrix4> basis15(const GeneratorSet& g) {
  const auto& A = g.a;
  const auto& S = g.astar;
  return {A[0], A[1], A[2], S[0], S[1], S[2],
          bracket(A[0], S[1]), bracket(A[1], S[2]), bracket(A[2], S[0]),
          bracket(S[0], A[1]), bracket(S[1], A[2]), bracket(S[2], A[0]),
          bracket(S[0], bracket(S[1], A[2])), bracket(S[1], bracket(S[2], A[0])),
          bracket(S[2], bracket(S[0], A[1]))};
}

std::vector<std::string> basis15_names() {
  return {"A1", "A2", "A3", "A*1", "A*2", "A*3",
          "[A1,A*2]", "[A2,A*3]", "[A3,A*1]", "[A*1,A2]", "[A*2,A3]", "[A*3,A1]",
          "[A*1,[A*2,A3]]", "[A*2,[A*3,A1]]", "[A*3,[A*1,A2]]"};
}

Matrix4 elementary(int i, int j) {
  if (i < 1 || i > 4 || j < 1 || j > 4) throw std::out_of_range("elementary index");
  Matrix4 m(4, 4);
  m(i - 1, j - 1) = 1;
  return m;
}

Matrix4 elementary_from_generators(int i, int j, const GeneratorSet& g) {
  if (i < 1 || i > 4 || j < 1 || j > 4) throw std::out_of_range("elementary index");
  const auto& A = g.a;
  const auto& S = g.astar;
  if (i == j) {
    switch (i) {
      case 1: return Rational(1, 2) * (S[1] + S[2]);
      case 2: return Rational(1, 2) * (S[0] - S[1]);
      case 3: return Rational(1, 2) * (S[1] - S[2]);
      default: throw std::invalid_argument("diagonal difference index must be 1..3");
    }
  }
  // Each off-diagonal pair belongs to the A_k with (i-1) XOR (j-1) == k, and
  // uses the two starred generators other than A*_k, in cyclic order.
  const int k = (i - 1) ^ (j - 1);
  const int p = k % 3;        // first starred index (0-based): A*_{k+1 mod 3}
  const int q = (k + 1) % 3;  // second starred index
  const Matrix4& a = A[k - 1];
  const Matrix4 c1 = bracket(S[p], a);
  const Matrix4 c2 = bracket(S[q], a);
  const Matrix4 c12 = bracket(S[p], c2);
  // Signs are the diagonal entries of A*_p and A*_q at row i.
  const Rational sp = kStarSigns[p][i - 1];
  const Rational sq = kStarSigns[q][i - 1];
  Matrix4 m = Rational(4) * a + Rational(2) * sp * c1 + Rational(2) * sq * c2 + sp * sq * c12;
  return Rational(1, 16) * m;
}

VerificationReport check_inverse_formulas(const GeneratorSet& g) {
  VerificationReport rep;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (i == j) continue;
      const Matrix4 got = elementary_from_generators(i, j, g);
      const Matrix4 want = elementary(i, j);
      rep.expect("sl4.inverse.E" + std::to_string(i) + std::to_string(j),
                 "bracket formula for E_ij", std::nullopt, got == want, [&] { return mismatch(got, want); });
    }
  for (int i = 1; i <= 3; ++i) {
    const Matrix4 got = elementary_from_generators(i, i, g);
    const Matrix4 want = elementary(i, i) - elementary(i + 1, i + 1);
    rep.expect("sl4.inverse.D" + std::to_string(i), "formula for E_ii - E_(i+1)(i+1)", std::nullopt,
               got == want, [&] { return mismatch(got, want); });
  }
  return rep;
}

VerificationReport check_basis15(const GeneratorSet& g) {
  VerificationReport rep;
  const auto b = basis15(g);
  const std::size_t r = rank_of(b);
  rep.expect("sl4.basis15.rank", "15 bracket words have rank 15", std::nullopt, r == 15,
             [&] { return "rank " + std::to_string(r); });
  const auto names = basis15_names();
  for (std::size_t k = 0; k < b.size(); ++k) {
    const Rational t = trace(b[k]);
    rep.expect("sl4.basis15.trace." + names[k], "basis element is traceless", std::nullopt, is_zero(t),
               [&] { return "trace " + to_string(t); });
  }
  // Nested words recomputed from the elementary-matrix route.
  const GeneratorSet std_g = standard_generators();
  const Matrix4 direct = bracket(std_g.astar[0], bracket(std_g.astar[1], std_g.a[2]));
  rep.expect("sl4.basis15.recompute", "[A*1,[A*2,A3]] matches direct product", std::nullopt, b[12] == direct,
             [&] { return mismatch(b[12], direct); });
  return rep;
}

Matrix4 upsilon() {
  Matrix4 u(4, 4);
  // Row k >= 1 is the sign pattern of A*_k, halved; row 0 is all 1/2.
  const Matrix4 one = Matrix4::identity(4);
  for (int k = 0; k < 4; ++k) {
    const Matrix4 s = k == 0 ? one : generator({Kind::Astar, k});
    for (int l = 0; l < 4; ++l) u(k, l) = Rational(1, 2) * s(l, l);
  }
  return u;
}

Matrix4 tau(const Matrix4& m) {
  const Matrix4 u = upsilon();
  return u * m * u;
}

VerificationReport check_upsilon(const GeneratorSet& g) {
  VerificationReport rep;
  const Matrix4 u = upsilon();
  const Matrix4 uu = u * u;
  rep.expect("sl4.upsilon.square", "Upsilon^2 = I", std::nullopt, uu == QMatrix::identity(4),
             [&] { return show(uu); });
  for (int i = 0; i < 3; ++i) {
    const std::string s = std::to_string(i + 1);
    Matrix4 l = g.a[i] * u, r = u * g.astar[i];
    rep.expect("sl4.upsilon.AU." + s, "A_i Upsilon = Upsilon A*_i", std::nullopt, l == r,
               [&] { return mismatch(l, r); });
    l = g.astar[i] * u;
    r = u * g.a[i];
    rep.expect("sl4.upsilon.SU." + s, "A*_i Upsilon = Upsilon A_i", std::nullopt, l == r,
               [&] { return mismatch(l, r); });
    const Matrix4 t = tau(g.a[i]);
    rep.expect("sl4.tau.swap." + s, "tau(A_i) = A*_i", std::nullopt, t == g.astar[i],
               [&] { return mismatch(t, g.astar[i]); });
  }
  const auto b = basis15(g);
  bool lie = true, inv = true;
  std::string where;
  for (std::size_t p = 0; p < b.size() && lie; ++p) {
    if (tau(tau(b[p])) != b[p]) {
      inv = false;
      where = "tau^2 on basis " + std::to_string(p);
    }
    for (std::size_t q = 0; q < b.size(); ++q)
      if (tau(bracket(b[p], b[q])) != bracket(tau(b[p]), tau(b[q]))) {
        lie = false;
        where = "pair " + std::to_string(p) + "," + std::to_string(q);
        break;
      }
  }
  rep.expect("sl4.tau.involution", "tau^2 = id", std::nullopt, inv, [&] { return where; });
  rep.expect("sl4.tau.lie", "tau[X,Y] = [tau X, tau Y]", std::nullopt, lie, [&] { return where; });
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      if (j == k) continue;
      const std::vector<Matrix4> six = {g.a[j], g.a[k], g.astar[j], g.astar[k],
                                        bracket(g.a[j], g.astar[k]), bracket(g.astar[j], g.a[k])};
      const std::size_t r = rank_of(six);
      rep.expect("sl4.sl2sl2." + std::to_string(j + 1) + std::to_string(k + 1),
                 "A_j, A_k, A*_j, A*_k, [A_j,A*_k], [A*_j,A_k] independent", std::nullopt, r == 6,
                 [&] { return "rank " + std::to_string(r); });
    }
  return rep;
}

}  // namespace sl4cube
