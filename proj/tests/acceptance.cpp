// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "runner.hpp"

using namespace sl4cube;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Every check whose id starts with one of `prefixes` must pass; `required`
// ids must be present and passing at every N in [lo, hi].
struct Requirement {
  std::string id;
  int lo, hi;
};

struct Outcome {
  bool ok = true;
  std::string why;
  void fail(const std::string& w) {
    if (ok) why = w;
    ok = false;
  }
};

bool has_prefix(const std::string& s, const std::vector<std::string>& prefixes) {
  for (const auto& p : prefixes)
    if (s.rfind(p, 0) == 0) return true;
  return false;
}

Outcome judge(const VerificationReport& rep, const std::vector<std::string>& prefixes, const std::vector<Requirement>& required) {
  Outcome o;
  std::size_t seen = 0;
  for (const Check& c : rep.checks()) {
    if (!has_prefix(c.id, prefixes)) continue;
    ++seen;
    if (c.status == Status::fail) o.fail(c.id + (c.n ? " [N=" + std::to_string(*c.n) + "]" : "") + ": " + c.witness);
  }
  if (seen == 0) o.fail("no checks ran");
  for (const Requirement& r : required)
    for (int N = r.lo; N <= r.hi; ++N) {
      bool found = false;
      for (const Check& c : rep.checks())
        if (c.id == r.id && (r.lo < 0 ? !c.n : c.n == N)) found = found || c.status == Status::pass;
      if (!found) o.fail(r.id + " did not pass at N=" + std::to_string(N));
      if (r.lo < 0) break;
    }
  return o;
}

VerificationReport run_range(std::vector<Suite> suites, int lo, int hi, const SuiteOptions& opts = {}) {
  tool::RunConfig cfg;
  cfg.n_min = lo;
  cfg.n_max = hi;
  cfg.suites = std::move(suites);
  cfg.options = opts;
  return tool::run(cfg);
}

std::vector<Requirement> per_index(const std::string& stem, const std::string& tail, int lo, int hi) {
  std::vector<Requirement> out;
  for (int i = 1; i <= 3; ++i) out.push_back({stem + std::to_string(i) + tail, lo, hi});
  return out;
}

}  // namespace

int main() {
  int failures = 0;
  auto line = [&](int k, const std::string& what, const Outcome& o) {
    std::printf("criterion %d %s: %s%s\n", k, o.ok ? "PASS" : "FAIL", what.c_str(), o.ok ? "" : (" -- " + o.why).c_str());
    std::fflush(stdout);
    failures += !o.ok;
  };

  // Default configuration: N = 0..5, oracle cap 3. Timed as a whole.
  const auto t0 = Clock::now();
  const VerificationReport full = run_range(all_suites(), 0, 5);
  const double full_seconds = seconds_since(t0);

  {
    const auto t1 = Clock::now();
    const VerificationReport sl4 = run_range({Suite::sl4}, 0, 0);
    const double s = seconds_since(t1);
    Outcome o = judge(sl4, {"sl4."}, {{"sl4.basis15.rank", -1, -1}, {"sl4.rel4.123", -1, -1}});
    std::size_t inverse = 0;
    for (const Check& c : sl4.checks()) inverse += c.id.rfind("sl4.inverse.", 0) == 0 && c.status == Status::pass;
    if (inverse != 15) o.fail(std::to_string(inverse) + " inverse formulas passed");
    if (s >= 1.0) o.fail("took " + std::to_string(s) + " s");
    line(1, "presentation, inverse formulas, 15-basis rank (" + std::to_string(s) + " s)", o);
  }

  line(2, "polynomial module N = 0..5",
       judge(full, {"poly.dm_", "poly.tables_agree", "poly.adjoint", "poly.lr_", "poly.casimir", "poly.sigma_", "poly.normalization",
                     "poly.weyl", "poly.conversion_involution"},
             {{"poly.dm_factorization", 0, 5}, {"poly.dm_factorization_dual", 0, 5}, {"poly.tables_agree", 0, 5},
              {"poly.adjoint", 0, 5}, {"poly.lr_commutator", 0, 5}, {"poly.casimir", 0, 5}, {"poly.sigma_form", 0, 5},
              {"poly.normalization", 0, 5}}));

  {
    std::vector<Requirement> req = {{"special.dual_evaluators", 0, 5}, {"special.orthogonality", 0, 5},
                                    {"special.vee_operator", 0, 3}, {"special.vee_operator_dual", 0, 3}};
    for (int i = 1; i <= 3; ++i) {
      req.push_back({"special.recurrence." + std::to_string(i), 0, 3});
      req.push_back({"special.recurrence_vee." + std::to_string(i), 0, 3});
    }
    line(3, "transition coefficients, orthogonality, recurrences", judge(full, {"special."}, req));
  }

  const VerificationReport six = run_range({Suite::poly, Suite::cube}, 6, 6);
  VerificationReport upto6 = full;
  upto6.append(six);
  {
    std::vector<Requirement> req = {{"poly.krawtchouk_annihilation", 0, 6}};
    for (const char* t : {".dims", ".orthogonal", ".casimir"}) {
      auto r = per_index("poly.graded.", t, 0, 6);
      req.insert(req.end(), r.begin(), r.end());
    }
    auto r = per_index("poly.kernel.", ".norms", 0, 6);
    req.insert(req.end(), r.begin(), r.end());
    line(4, "graded decomposition N <= 6", judge(upto6, {"poly.graded.", "poly.kernel.", "poly.krawtchouk_annihilation"}, req));
  }

  line(5, "hypercube and T N <= 6",
       judge(upto6, {"cube."},
             {{"cube.t.dimension", 0, 6}, {"cube.t.estar_basis", 0, 6}, {"cube.t.estar_orthogonal", 0, 6},
              {"cube.dual_basis.count", 0, 6}, {"cube.t.dual_orthogonal", 0, 6}, {"cube.idempotents", 0, 6},
              {"cube.dual_ops", 0, 6}, {"cube.wedderburn", 0, 6}}));

  line(6, "fixed space N <= 4",
       judge(full, {"tensor."},
             {{"tensor.dimension", 0, 4}, {"tensor.norms", 0, 4}, {"tensor.duality", 0, 4},
              {"tensor.action_oracle", 0, 3}, {"tensor.orbits_profiles", 0, 3}}));

  line(7, "correspondences N <= 5",
       judge(full, {"correspond."},
             {{"correspond.ddag.intertwine", 0, 5}, {"correspond.eps.intertwine", 0, 5}, {"correspond.theta.intertwine", 0, 5},
              {"correspond.ddag.form", 0, 5}, {"correspond.eps.form", 0, 5}, {"correspond.theta.form", 0, 5},
              {"correspond.theta.rules", 0, 5}, {"correspond.sigma_S", 0, 5}, {"correspond.wedderburn", 0, 5}}));

  {
    Outcome o;
    auto must_fail = [&](Suite s, int N, Faults f, const std::string& label) {
      SuiteOptions opts;
      opts.faults = f;
      const VerificationReport r = run_suite(s, N, opts);
      const Check* bad = r.first_failure();
      if (!bad) o.fail(label + " went undetected");
      else if (bad->witness.empty()) o.fail(label + " failed without a witness");
    };
    must_fail(Suite::sl4, 0, {.corrupt_generator = true}, "corrupted generator");
    must_fail(Suite::special, 2, {.flip_linear_terms = true}, "corrupted calP sign");
    must_fail(Suite::special, 2, {.corrupt_krawtchouk = true}, "corrupted Krawtchouk coefficient");
    must_fail(Suite::poly, 2, {.corrupt_krawtchouk = true}, "corrupted Krawtchouk coefficient (poly)");
    line(8, "negative controls", o);
  }

  {
    Outcome o;
    if (!full.all_passed()) o.fail("default suite has failures");
    if (full_seconds >= 60.0) o.fail("took " + std::to_string(full_seconds) + " s");
    std::printf("full default suite %s: %zu passed, %zu skipped, %.1f s\n", o.ok ? "PASS" : "FAIL",
                full.count(Status::pass), full.count(Status::skipped), full_seconds);
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
