#pragma once

// Helpers shared by the suite implementations; not installed.

#include <cstdint>
#include <random>
#include <string>

#include "sl4cube/linalg.hpp"
#include "sl4cube/poly.hpp"
#include "sl4cube/report.hpp"
#include "sl4cube/suites.hpp"

namespace sl4cube::detail {

// Collects the first failure of an exhaustive loop.
class Probe {
 public:
  void fail(std::string witness) {
    if (ok_) {
      ok_ = false;
      witness_ = std::move(witness);
    }
  }
  template <class F>
  void require(bool cond, F&& witness) {
    if (!cond) fail(witness());
  }
  bool ok() const { return ok_; }
  void report(VerificationReport& rep, const std::string& id, const std::string& anchor, std::optional<int> n) const {
    rep.expect(id, anchor, n, ok_, [this] { return witness_; });
  }

 private:
  bool ok_ = true;
  std::string witness_;
};

// Deterministic stream per (seed, suite, N).
inline std::mt19937_64 rng_for(const SuiteOptions& opts, Suite s, int N) {
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                    static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(N)};
  return std::mt19937_64(seq);
}

inline Rational small_rational(std::mt19937_64& g) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  return ratio(num(g), den(g));
}

inline QVector random_vector(std::mt19937_64& g, std::size_t n) {
  QVector v(n);
  for (auto& x : v) x = small_rational(g);
  return v;
}

inline PolyVec random_poly(std::mt19937_64& g, int N, Basis b) {
  return PolyVec::from_dense(N, random_vector(g, profile_count(N)), b);
}

inline std::vector<PolyVec> basis_vectors(int N, Basis b) {
  std::vector<PolyVec> out;
  for (const Profile& p : enumerate_profiles(N)) out.push_back(PolyVec::term(p, b));
  return out;
}

inline std::string vec_str(const QVector& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + to_string(v[k]);
  return s + "]";
}

VerificationReport run_sl4(const SuiteOptions& opts);
VerificationReport run_poly(int N, const SuiteOptions& opts);
VerificationReport run_special(int N, const SuiteOptions& opts);
VerificationReport run_cube(int N, const SuiteOptions& opts);
VerificationReport run_tensor(int N, const SuiteOptions& opts);
VerificationReport run_correspond(int N, const SuiteOptions& opts);

}  // namespace sl4cube::detail
