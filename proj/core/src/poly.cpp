#include "sl4cube/poly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace sl4cube {

namespace {

const int kStarSigns[3][4] = {{1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};

// Twice the substitution matrix x*_a = sum_b H[a][b] x_b / 2; row k >= 1 is
// the sign pattern of A*_k, so bits 0 and 1 of b trade places.
int hadamard(int a, int b) {
  const unsigned swapped = ((b & 1u) << 1) | ((b >> 1) & 1u);
  return __builtin_popcount(static_cast<unsigned>(a) & swapped) % 2 ? -1 : 1;
}

bool is_starred(Var v) { return static_cast<int>(v) >= 4; }
int var_slot(Var v) { return static_cast<int>(v) % 4; }

// D and M in the vector's own basis, by variable slot.
PolyVec raw_D(int slot, const PolyVec& v) {
  PolyVec out(v.basis());
  for (const auto& [p, c] : v.terms()) {
    if (p[slot] == 0) continue;
    Profile q = p;
    q[slot] -= 1;
    out.add(q, c * p[slot]);
  }
  return out;
}

PolyVec raw_M(int slot, const PolyVec& v) {
  PolyVec out(v.basis());
  for (const auto& [p, c] : v.terms()) {
    Profile q = p;
    q[slot] += 1;
    out.add(q, c);
  }
  return out;
}

// Variable `var` expressed in the basis of `v`, then D or M applied.
PolyVec apply_var(Var var, const PolyVec& v, PolyVec (*raw)(int, const PolyVec&)) {
  const Basis native = is_starred(var) ? Basis::starred : Basis::monomial;
  const int slot = var_slot(var);
  if (v.basis() == native) return raw(slot, v);
  PolyVec out(v.basis());
  for (int b = 0; b < 4; ++b) {
    PolyVec part = raw(b, v);
    part *= Rational(hadamard(slot, b), 2);
    out += part;
  }
  return out;
}

// A_k shift rule: x^p -> sum_a p_a x^(p - e_a + e_(a xor k)).
PolyVec shift_rule(int k, const PolyVec& v) {
  PolyVec out(v.basis());
  for (const auto& [p, c] : v.terms()) {
    for (int a = 0; a < 4; ++a) {
      if (p[a] == 0) continue;
      Profile q = p;
      q[a] -= 1;
      q[a ^ k] += 1;
      out.add(q, c * p[a]);
    }
  }
  return out;
}

PolyVec diagonal_rule(int k, const PolyVec& v) {
  PolyVec out(v.basis());
  for (const auto& [p, c] : v.terms()) {
    int ev = 0;
    for (int a = 0; a < 4; ++a) ev += kStarSigns[k - 1][a] * p[a];
    out.add(p, c * ev);
  }
  return out;
}

// Second-order operator D_a D_b - D_c D_d (or with M) native in both bases.
const int kPairs[3][4] = {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};

}  // namespace

Basis other(Basis b) { return b == Basis::monomial ? Basis::starred : Basis::monomial; }

PolyVec PolyVec::term(const Profile& p, Basis b, const Rational& c) {
  PolyVec v(b);
  v.add(p, c);
  return v;
}

PolyVec PolyVec::from_dense(int N, const QVector& v, Basis b) {
  const auto profiles = enumerate_profiles(N);
  if (v.size() != profiles.size()) throw std::invalid_argument("from_dense: size mismatch");
  PolyVec out(b);
  for (std::size_t i = 0; i < v.size(); ++i) out.add(profiles[i], v[i]);
  return out;
}

void PolyVec::add(const Profile& p, const Rational& c) {
  if (!p.valid()) throw std::invalid_argument("PolyVec: negative exponent " + to_string(p));
  if (sl4cube::is_zero(c)) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
    return;
  }
  it->second += c;
  if (sl4cube::is_zero(it->second)) terms_.erase(it);
}

Rational PolyVec::coeff(const Profile& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> PolyVec::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [p, c] : terms_)
    if (p.degree() != d) return std::nullopt;
  return d;
}

bool PolyVec::homogeneous_of(int N) const {
  for (const auto& [p, c] : terms_)
    if (p.degree() != N) return false;
  return true;
}

QVector PolyVec::dense(int N) const {
  QVector out(profile_count(N));
  for (const auto& [p, c] : terms_) {
    if (p.degree() != N) throw std::invalid_argument("dense: term of degree " + std::to_string(p.degree()));
    out[profile_index(p)] = c;
  }
  return out;
}

PolyVec& PolyVec::operator+=(const PolyVec& o) {
  if (o.basis_ != basis_) throw std::invalid_argument("PolyVec: basis mismatch in +");
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

PolyVec& PolyVec::operator-=(const PolyVec& o) {
  if (o.basis_ != basis_) throw std::invalid_argument("PolyVec: basis mismatch in -");
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

PolyVec& PolyVec::operator*=(const Rational& c) {
  if (sl4cube::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

std::string PolyVec::str() const {
  static const char* names[4] = {"x", "y", "z", "w"};
  const char* star = basis_ == Basis::starred ? "*" : "";
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    for (int a = 0; a < 4; ++a) {
      if (p[a] == 0) continue;
      os << names[a] << star;
      if (p[a] > 1) os << "^" << p[a];
    }
  }
  return os.str();
}

PolyVec act_generator(GeneratorId id, const PolyVec& v) {
  if (id.index < 1 || id.index > 3) throw std::out_of_range("generator index");
  const bool shifts = (id.kind == Kind::A) == (v.basis() == Basis::monomial);
  return shifts ? shift_rule(id.index, v) : diagonal_rule(id.index, v);
}

PolyVec act_matrix(const Matrix4& m, const PolyVec& v) {
  const PolyVec mono = convert_basis(v, Basis::monomial);
  PolyVec out(Basis::monomial);
  for (int j = 0; j < 4; ++j) {
    const PolyVec d = raw_D(j, mono);
    if (d.is_zero()) continue;
    for (int i = 0; i < 4; ++i) {
      if (is_zero(m(i, j))) continue;
      PolyVec t = raw_M(i, d);
      t *= m(i, j);
      out += t;
    }
  }
  return out;
}

const QMatrix& conversion_matrix(int N) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<QMatrix>> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (int n = 0; n <= N; ++n) {
    if (cache.count(n)) continue;
    const auto profiles = enumerate_profiles(n);
    auto conv = std::make_unique<QMatrix>(profiles.size(), profiles.size());
    if (n == 0) {
      (*conv)(0, 0) = 1;
    } else {
      const QMatrix& prev = *cache.at(n - 1);
      for (const auto& p : profiles) {
        // x*^p = x*_a * x*^(p - e_a) for the first a with p_a > 0.
        int a = 0;
        while (p[a] == 0) ++a;
        Profile q = p;
        q[a] -= 1;
        const PolyVec lower = PolyVec::from_dense(n - 1, prev.column(profile_index(q)), Basis::monomial);
        PolyVec col(Basis::monomial);
        for (int b = 0; b < 4; ++b) {
          PolyVec t = raw_M(b, lower);
          t *= Rational(hadamard(a, b), 2);
          col += t;
        }
        conv->set_column(profile_index(p), col.dense(n));
      }
    }
    cache.emplace(n, std::move(conv));
  }
  return *cache.at(N);
}

PolyVec convert_basis(const PolyVec& v, Basis target) {
  if (v.basis() == target) return v;
  std::map<int, PolyVec> by_degree;
  for (const auto& [p, c] : v.terms()) {
    auto [it, inserted] = by_degree.try_emplace(p.degree(), v.basis());
    it->second.add(p, c);
  }
  PolyVec out(target);
  for (const auto& [n, part] : by_degree) {
    const QVector coords = conversion_matrix(n).apply(part.dense(n));
    out += PolyVec::from_dense(n, coords, target);
  }
  return out;
}

PolyVec sigma(const PolyVec& v) {
  PolyVec out(other(v.basis()));
  for (const auto& [p, c] : v.terms()) out.add(p, c);
  return out;
}

PolyVec apply_D(Var var, const PolyVec& v) { return apply_var(var, v, raw_D); }
PolyVec apply_M(Var var, const PolyVec& v) { return apply_var(var, v, raw_M); }

PolyVec apply_L(int i, const PolyVec& v) {
  if (i < 1 || i > 3) throw std::out_of_range("L index");
  const int* q = kPairs[i - 1];
  return raw_D(q[0], raw_D(q[1], v)) - raw_D(q[2], raw_D(q[3], v));
}

PolyVec apply_R(int i, const PolyVec& v) {
  if (i < 1 || i > 3) throw std::out_of_range("R index");
  const int* q = kPairs[i - 1];
  return raw_M(q[0], raw_M(q[1], v)) - raw_M(q[2], raw_M(q[3], v));
}

PolyVec apply_Omega(const PolyVec& v) {
  PolyVec out(v.basis());
  for (const auto& [p, c] : v.terms()) out.add(p, c * p.degree());
  return out;
}

PolyVec apply_C(int i, const PolyVec& v) {
  PolyVec shifted = apply_Omega(v) + Rational(2) * v;
  PolyVec sq = apply_Omega(shifted) + Rational(2) * shifted;
  sq *= Rational(1, 2);
  return sq - apply_L(i, apply_R(i, v)) - apply_R(i, apply_L(i, v));
}

PolyVec apply_C_bracket(int i, int variant, const PolyVec& v) {
  if (i < 1 || i > 3) throw std::out_of_range("C index");
  const int j = i % 3 + 1;
  const int k = (i + 1) % 3 + 1;
  const GeneratorId X = variant == 0 ? GeneratorId{Kind::A, j} : GeneratorId{Kind::Astar, j};
  const GeneratorId Y = variant == 0 ? GeneratorId{Kind::Astar, k} : GeneratorId{Kind::A, k};
  auto x = [&](const PolyVec& f) { return act_generator(X, f); };
  auto y = [&](const PolyVec& f) { return act_generator(Y, f); };
  auto br = [&](const PolyVec& f) { return x(y(f)) - y(x(f)); };
  PolyVec out = Rational(4) * x(x(v)) + Rational(4) * y(y(v)) - br(br(v));
  out *= Rational(1, 8);
  return out;
}

Rational hermitian(const PolyVec& a, const PolyVec& b) {
  const PolyVec ma = convert_basis(a, Basis::monomial);
  const PolyVec mb = convert_basis(b, Basis::monomial);
  Rational sum = 0;
  for (const auto& [p, c] : ma.terms()) {
    const Rational d = mb.coeff(p);
    if (!is_zero(d)) sum += c * d * profile_factorial(p);
  }
  return sum;
}

QMatrix operator_matrix(int n_in, int n_out, Basis basis, const PolyOp& op) {
  const auto in = enumerate_profiles(n_in);
  QMatrix m(profile_count(n_out), in.size());
  for (std::size_t c = 0; c < in.size(); ++c) {
    const PolyVec image = convert_basis(op(PolyVec::term(in[c], basis)), basis);
    if (image.is_zero()) continue;
    if (n_out < 0) throw std::logic_error("operator_matrix: nonzero image in negative degree");
    m.set_column(c, image.dense(n_out));
  }
  return m;
}

std::map<WeightTriple, Profile> weight_decomposition(int N) {
  std::map<WeightTriple, Profile> out;
  for (const auto& p : enumerate_profiles(N)) {
    const WeightTriple w = weight_of(p);
    if (!out.emplace(w, p).second) throw std::logic_error("weight_decomposition: repeated weight");
  }
  return out;
}

std::map<int, int> eigenspace_dims(GeneratorId id, int N) {
  const QMatrix op = operator_matrix(N, N, Basis::monomial, [&](const PolyVec& f) { return act_generator(id, f); });
  const std::size_t n = op.rows();
  std::map<int, int> out;
  for (int ev = -N; ev <= N; ++ev) {
    const QMatrix shifted = op - Rational(ev) * QMatrix::identity(n);
    const std::size_t nullity = n - rank(shifted);
    if (nullity > 0) out[ev] = static_cast<int>(nullity);
  }
  return out;
}

}  // namespace sl4cube
