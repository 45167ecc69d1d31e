#include "sl4cube/special.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace sl4cube {

namespace {

// Upper bound on k for which (-a)_k can be nonzero: a itself when a is a
// natural number, otherwise unbounded (capped by N).
int prune_bound(const Rational& a, int N) {
  if (a.get_den() == 1 && sgn(a) >= 0 && a <= N) return static_cast<int>(a.get_num().get_si());
  return N;
}

std::string tail_str(const std::array<int, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

std::string key_str(const TransitionKey& k) {
  return "N=" + std::to_string(k.N) + " " + tail_str(k.lam) + ";" + tail_str(k.mu);
}

std::array<int, 3> tail_of(const Profile& p) { return {p.s, p.t, p.u}; }

// Pochhammer of a linear polynomial: (c)_n for c in MultiPoly form.
MultiPoly pochhammer_poly(const MultiPoly& c, int n) {
  MultiPoly out = MultiPoly::constant(1);
  for (int m = 0; m < n; ++m) out = out * (c + MultiPoly::constant(m));
  return out;
}

}  // namespace

bool TransitionKey::valid() const {
  if (N < 0) return false;
  for (int k = 0; k < 3; ++k)
    if (lam[k] < 0 || mu[k] < 0) return false;
  return lam[0] + lam[1] + lam[2] <= N && mu[0] + mu[1] + mu[2] <= N;
}

TransitionKey key_of(const Profile& p, const Profile& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("key_of: degree mismatch");
  return {p.degree(), tail_of(p), tail_of(q)};
}

Rational calP_poly(int N, const std::array<Rational, 3>& lam, const std::array<Rational, 3>& mu,
                   bool flip_linear_terms) {
  // (-l1)_{a+b} (-l2)_{c+d} (-l3)_{e+f} (-m1)_{c+e} (-m2)_{a+f} (-m3)_{b+d}
  //   / (-N)_{a+..+f} * 2^{a+..+f} / (a!b!c!d!e!f!)
  const int bl1 = prune_bound(lam[0], N), bl2 = prune_bound(lam[1], N), bl3 = prune_bound(lam[2], N);
  const int bm1 = prune_bound(mu[0], N), bm2 = prune_bound(mu[1], N), bm3 = prune_bound(mu[2], N);
  Rational sum = 0;
  for (int a = 0; a <= N && a <= bl1 && a <= bm2; ++a)
    for (int b = 0; a + b <= N && a + b <= bl1 && b <= bm3; ++b)
      for (int c = 0; a + b + c <= N && c <= bl2 && c <= bm1; ++c)
        for (int d = 0; a + b + c + d <= N && c + d <= bl2 && b + d <= bm3; ++d)
          for (int e = 0; a + b + c + d + e <= N && e <= bl3 && c + e <= bm1; ++e)
            for (int f = 0; a + b + c + d + e + f <= N && e + f <= bl3 && a + f <= bm2; ++f) {
              const int n = a + b + c + d + e + f;
              Rational term = pochhammer(-lam[0], a + b) * pochhammer(-lam[1], c + d) *
                              pochhammer(-lam[2], e + f) * pochhammer(-mu[0], c + e) *
                              pochhammer(-mu[1], a + f) * pochhammer(-mu[2], b + d);
              if (is_zero(term)) continue;
              term /= pochhammer(Rational(-N), n);
              Rational pow2 = 1;
              for (int k = 0; k < n; ++k) pow2 *= 2;
              term *= pow2;
              term /= factorial(a) * factorial(b) * factorial(c) * factorial(d) * factorial(e) * factorial(f);
              if (flip_linear_terms && n == 1) term = -term;
              sum += term;
            }
  return sum;
}

Rational calP_sum(const TransitionKey& key, bool flip_linear_terms) {
  if (!key.valid()) throw std::invalid_argument("calP_sum: invalid key " + key_str(key));
  return calP_poly(key.N, {Rational(key.lam[0]), Rational(key.lam[1]), Rational(key.lam[2])},
                   {Rational(key.mu[0]), Rational(key.mu[1]), Rational(key.mu[2])}, flip_linear_terms);
}

const QMatrix& calP_sum_table(int N, bool flip_linear_terms) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::unique_ptr<QMatrix>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{N, flip_linear_terms}];
  if (!slot) {
    const auto profiles = enumerate_profiles(N);
    auto t = std::make_unique<QMatrix>(profiles.size(), profiles.size());
    for (std::size_t i = 0; i < profiles.size(); ++i)
      for (std::size_t j = 0; j < profiles.size(); ++j)
        // Symmetric in the two triples; fill both halves from one evaluation.
        if (j >= i) {
          (*t)(i, j) = calP_sum(key_of(profiles[i], profiles[j]), flip_linear_terms);
          (*t)(j, i) = (*t)(i, j);
        }
    slot = std::move(t);
  }
  return *slot;
}

const QMatrix& calP_genfunc_table(int N) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<QMatrix>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[N];
  if (!slot) {
    static const int forms[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    const auto profiles = enumerate_profiles(N);
    auto t = std::make_unique<QMatrix>(profiles.size(), profiles.size());
    const Rational nfact = factorial(N);
    for (std::size_t col = 0; col < profiles.size(); ++col) {
      const Profile& P = profiles[col];
      // Integer expansion of the product of linear forms, one factor at a time.
      std::map<Profile, Integer> poly{{Profile{}, Integer(1)}};
      for (int form = 0; form < 4; ++form)
        for (int rep = 0; rep < P[form]; ++rep) {
          std::map<Profile, Integer> next;
          for (const auto& [m, c] : poly)
            for (int v = 0; v < 4; ++v) {
              Profile q = m;
              q[v] += 1;
              next[q] += c * forms[form][v];
            }
          poly.swap(next);
        }
      for (std::size_t row = 0; row < profiles.size(); ++row) {
        auto it = poly.find(profiles[row]);
        if (it == poly.end()) continue;
        (*t)(row, col) = profile_factorial(profiles[row]) * Rational(it->second) / nfact;
      }
    }
    slot = std::move(t);
  }
  return *slot;
}

Rational calP_genfunc(const TransitionKey& key) {
  if (!key.valid()) throw std::invalid_argument("calP_genfunc: invalid key " + key_str(key));
  return calP_genfunc_table(key.N)(profile_index(key.left()), profile_index(key.right()));
}

Rational calP_vee(int N, const std::array<int, 3>& tail, const WeightTriple& w, bool flip_linear_terms) {
  const std::array<Rational, 3> mu = {ratio(N + w.lambda - w.mu - w.nu, 4),
                                      ratio(N - w.lambda + w.mu - w.nu, 4),
                                      ratio(N - w.lambda - w.mu + w.nu, 4)};
  return calP_poly(N, {Rational(tail[0]), Rational(tail[1]), Rational(tail[2])}, mu, flip_linear_terms);
}

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  p.add({0, 0, 0}, c);
  return p;
}

MultiPoly MultiPoly::variable(int k) {
  MultiPoly p;
  Exponent e{0, 0, 0};
  e.at(static_cast<std::size_t>(k)) = 1;
  p.add(e, 1);
  return p;
}

void MultiPoly::add(const Exponent& e, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (is_zero(it->second)) terms_.erase(it);
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

Rational MultiPoly::eval(const std::array<Rational, 3>& at) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < 3; ++k)
      for (int m = 0; m < e[k]; ++m) t *= at[k];
    sum += t;
  }
  return sum;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

MultiPoly calP_vee_poly(int N, const std::array<int, 3>& tail) {
  // mu-slots as linear polynomials in (m1,m2,m3): (N + m1 - m2 - m3)/4 etc.
  const MultiPoly m1 = MultiPoly::variable(0), m2 = MultiPoly::variable(1), m3 = MultiPoly::variable(2);
  const MultiPoly n = MultiPoly::constant(N);
  const Rational q(-1, 4);  // the Pochhammer arguments are -S, -T, -U
  const MultiPoly negS = q * (n + m1 + Rational(-1) * m2 + Rational(-1) * m3);
  const MultiPoly negT = q * (n + Rational(-1) * m1 + m2 + Rational(-1) * m3);
  const MultiPoly negU = q * (n + Rational(-1) * m1 + Rational(-1) * m2 + m3);
  const int s = tail[0], t = tail[1], u = tail[2];
  MultiPoly sum;
  for (int a = 0; a <= s; ++a)
    for (int b = 0; a + b <= s; ++b)
      for (int c = 0; c <= t; ++c)
        for (int d = 0; c + d <= t; ++d)
          for (int e = 0; e <= u; ++e)
            for (int f = 0; e + f <= u; ++f) {
              const int k = a + b + c + d + e + f;
              if (k > N) continue;
              Rational scal = pochhammer(Rational(-s), a + b) * pochhammer(Rational(-t), c + d) *
                              pochhammer(Rational(-u), e + f);
              if (is_zero(scal)) continue;
              scal /= pochhammer(Rational(-N), k);
              for (int m = 0; m < k; ++m) scal *= 2;
              scal /= factorial(a) * factorial(b) * factorial(c) * factorial(d) * factorial(e) * factorial(f);
              MultiPoly term = pochhammer_poly(negS, c + e) * pochhammer_poly(negT, a + f) *
                               pochhammer_poly(negU, b + d);
              sum += scal * term;
            }
  return sum;
}

PolyVec apply_multipoly(const MultiPoly& p, Kind kind, const PolyVec& v) {
  // Words X1^a X2^b X3^c v, built incrementally and memoized.
  std::map<MultiPoly::Exponent, PolyVec> words;
  words.emplace(MultiPoly::Exponent{0, 0, 0}, v);
  std::function<const PolyVec&(const MultiPoly::Exponent&)> word = [&](const MultiPoly::Exponent& e) -> const PolyVec& {
    auto it = words.find(e);
    if (it != words.end()) return it->second;
    int k = 0;
    while (e[k] == 0) ++k;
    MultiPoly::Exponent prev = e;
    prev[k] -= 1;
    PolyVec next = act_generator({kind, k + 1}, word(prev));
    return words.emplace(e, std::move(next)).first->second;
  };
  PolyVec out(v.basis());
  for (const auto& [e, c] : p.terms()) out += c * word(e);
  return out;
}

Rational KrawtchoukFamily::eval(int n, const Rational& eta) const {
  Rational acc = 0;
  const auto& q = f(n);
  for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * eta + *it;
  return acc;
}

KrawtchoukFamily krawtchouk(int N, bool corrupt) {
  if (N < 0) throw std::invalid_argument("krawtchouk: negative N");
  KrawtchoukFamily fam;
  fam.N = N;
  fam.coeffs.assign(static_cast<std::size_t>(N + 2), {});
  fam.coeffs[0] = {Rational(1)};
  for (int n = 0; n <= N; ++n) {
    // eta f_n - n f_{n-1}, divided by N - n except at the top step.
    std::vector<Rational> next(static_cast<std::size_t>(n + 2));
    const auto& fn = fam.coeffs[static_cast<std::size_t>(n)];
    for (std::size_t d = 0; d < fn.size(); ++d) next[d + 1] += fn[d];
    if (n > 0) {
      const auto& fp = fam.coeffs[static_cast<std::size_t>(n - 1)];
      for (std::size_t d = 0; d < fp.size(); ++d) next[d] -= Rational(n) * fp[d];
    }
    if (n < N)
      for (auto& c : next) c /= N - n;
    fam.coeffs[static_cast<std::size_t>(n + 1)] = std::move(next);
  }
  if (corrupt) fam.coeffs[1][0] += 1;
  return fam;
}

std::vector<Rational> krawtchouk_top_closed_form(int N) {
  std::vector<Rational> q{Rational(1)};
  for (int k = 0; k <= N; ++k) {
    // multiply by (eta - N + 2k)
    std::vector<Rational> next(q.size() + 1);
    const Rational root(N - 2 * k);
    for (std::size_t d = 0; d < q.size(); ++d) {
      next[d + 1] += q[d];
      next[d] -= root * q[d];
    }
    q.swap(next);
  }
  const Rational nf = factorial(N);
  for (auto& c : q) c /= nf;
  return q;
}

PolyVec apply_poly1(const std::vector<Rational>& q, GeneratorId gen, const PolyVec& v) {
  // Horner: (...((c_d X + c_{d-1}) X + ...) v
  PolyVec acc(v.basis());
  for (auto it = q.rbegin(); it != q.rend(); ++it) {
    acc = act_generator(gen, acc);
    acc += *it * v;
  }
  return acc;
}

PolyVec krawtchouk_vector(const KrawtchoukFamily& fam, int n, GeneratorId gen) {
  if (n < 0 || n > fam.N + 1) throw std::out_of_range("krawtchouk_vector: n");
  const Basis b = gen.kind == Kind::A ? Basis::monomial : Basis::starred;
  return apply_poly1(fam.f(n), gen, PolyVec::term({fam.N, 0, 0, 0}, b));
}

VerificationReport check_orthogonality(int N, bool flip_linear_terms) {
  VerificationReport rep;
  const auto profiles = enumerate_profiles(N);
  const QMatrix& P = calP_sum_table(N, flip_linear_terms);
  const Rational nf = factorial(N);
  Rational four_n = 1;
  for (int k = 0; k < N; ++k) four_n *= 4;
  std::vector<Rational> inv_fact;
  for (const auto& q : profiles) inv_fact.push_back(1 / profile_factorial(q));
  bool ok = true;
  std::string witness;
  for (std::size_t a = 0; a < profiles.size() && ok; ++a)
    for (std::size_t b = a; b < profiles.size() && ok; ++b) {
      Rational sum = 0;
      for (std::size_t c = 0; c < profiles.size(); ++c) sum += P(a, c) * P(b, c) * inv_fact[c];
      const Rational want = a == b ? four_n * profile_factorial(profiles[a]) / (nf * nf) : Rational(0);
      if (sum != want) {
        ok = false;
        witness = "left " + to_string(profiles[a]) + " and " + to_string(profiles[b]) + ": sum " +
                  to_string(sum) + " expected " + to_string(want);
      }
    }
  rep.expect("special.orthogonality", "sum_P calP(p;P) calP(p';P)/P! = delta 4^N p!/(N!)^2", N, ok,
             [&] { return witness; });
  return rep;
}

VerificationReport check_recurrences(int N, bool flip_linear_terms) {
  VerificationReport rep;
  const auto profiles = enumerate_profiles(N);
  const QMatrix& P = calP_sum_table(N, flip_linear_terms);

  // Shifted tails with a nonzero coefficient always complete to a profile of
  // degree N; zero-coefficient terms are dropped before any lookup.
  auto value = [&](const Profile& p, std::size_t col, int ds, int dt, int du, int coeff) -> Rational {
    if (coeff == 0) return 0;
    Profile q{p.r - ds - dt - du, p.s + ds, p.t + dt, p.u + du};
    return Rational(coeff) * P(profile_index(q), col);
  };
  using Shift = std::array<int, 3>;
  // Tail shifts paired with the coefficient slots r, s, t, u.
  const std::array<std::array<Shift, 4>, 3> shifts = {{
      {{{1, 0, 0}, {-1, 0, 0}, {0, -1, 1}, {0, 1, -1}}},
      {{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}, {1, 0, -1}}},
      {{{0, 0, 1}, {-1, 1, 0}, {1, -1, 0}, {0, 0, -1}}},
  }};

  for (int which = 0; which < 3; ++which) {
    bool ok_p = true, ok_vee = true;
    std::string wit_p, wit_vee;
    for (std::size_t row = 0; row < profiles.size(); ++row) {
      const Profile& p = profiles[row];
      for (std::size_t col = 0; col < profiles.size(); ++col) {
        const Profile& R = profiles[col];
        const WeightTriple w = weight_of(R);
        const int ev = which == 0 ? w.lambda : which == 1 ? w.mu : w.nu;
        Rational rhs = 0;
        for (int slot = 0; slot < 4; ++slot) {
          const Shift& sh = shifts[static_cast<std::size_t>(which)][static_cast<std::size_t>(slot)];
          rhs += value(p, col, sh[0], sh[1], sh[2], p[slot]);
        }
        const Rational lhs = Rational(ev) * P(row, col);
        if (ok_p && lhs != rhs) {
          ok_p = false;
          wit_p = "profiles " + to_string(p) + " / " + to_string(R) + ": lhs " + to_string(lhs) + " rhs " +
                  to_string(rhs);
        }
        // Same relation through calP-vee evaluated at the weight of R.
        Rational rhs_vee = 0;
        for (int slot = 0; slot < 4; ++slot) {
          if (p[slot] == 0) continue;
          const Shift& sh = shifts[static_cast<std::size_t>(which)][static_cast<std::size_t>(slot)];
          rhs_vee += Rational(p[slot]) * calP_vee(N, {p.s + sh[0], p.t + sh[1], p.u + sh[2]}, w, flip_linear_terms);
        }
        const Rational lhs_vee = Rational(ev) * calP_vee(N, tail_of(p), w, flip_linear_terms);
        if (ok_vee && lhs_vee != rhs_vee) {
          ok_vee = false;
          wit_vee = "profile " + to_string(p) + " weight of " + to_string(R) + ": lhs " + to_string(lhs_vee) +
                    " rhs " + to_string(rhs_vee);
        }
      }
    }
    const std::string tag = std::to_string(which + 1);
    rep.expect("special.recurrence." + tag, "four-term recurrence " + tag + " for calP", N, ok_p,
               [&] { return wit_p; });
    rep.expect("special.recurrence_vee." + tag, "four-term recurrence " + tag + " for calP-vee", N, ok_vee,
               [&] { return wit_vee; });
  }
  return rep;
}

}  // namespace sl4cube
