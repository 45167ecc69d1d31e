#include "runner.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace sl4cube::tool {

std::vector<Job> plan(const RunConfig& cfg) {
  std::vector<Job> out;
  for (Suite s : cfg.suites) {
    if (degree_free(s)) {
      out.push_back({s, -1});
      continue;
    }
    for (int N = cfg.n_min; N <= cfg.n_max; ++N) out.push_back({s, N});
  }
  return out;
}

VerificationReport run(const RunConfig& cfg) {
  const std::vector<Job> jobs = plan(cfg);
  std::vector<VerificationReport> results(jobs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      const Job& job = jobs[k];
      try {
        results[k] = run_suite(job.suite, job.N, cfg.options);
      } catch (const std::exception& e) {
        std::optional<int> n;
        if (job.N >= 0) n = job.N;
        results[k].expect(suite_name(job.suite) + ".error", "suite ran to completion", n, false,
                          [&] { return std::string(e.what()); });
      }
    }
  };

  unsigned threads = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  VerificationReport merged;
  for (const auto& r : results) merged.append(r);
  return merged;
}

std::string format_name(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::text: return "text";
  }
  return "?";
}

namespace {

nlohmann::ordered_json config_json(const RunConfig& cfg) {
  nlohmann::ordered_json c;
  c["n_min"] = cfg.n_min;
  c["n_max"] = cfg.n_max;
  std::vector<std::string> names;
  for (Suite s : cfg.suites) names.push_back(suite_name(s));
  c["suites"] = names;
  c["oracle_n_max"] = cfg.options.oracle_n_max;
  c["tensor_n_max"] = cfg.options.tensor_n_max;
  c["basepoint"] = cfg.options.basepoint;
  c["seed"] = cfg.options.seed;
  return c;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

}  // namespace

std::string render(const RunConfig& cfg, const VerificationReport& rep, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json: {
      nlohmann::ordered_json j;
      j["config"] = config_json(cfg);
      j["checks"] = nlohmann::ordered_json::array();
      for (const Check& c : rep.checks()) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["anchor"] = c.anchor;
        e["n"] = c.n ? nlohmann::ordered_json(*c.n) : nlohmann::ordered_json(nullptr);
        e["status"] = status_name(c.status);
        if (c.status == Status::fail) e["witness"] = c.witness;
        if (c.status == Status::skipped) e["reason"] = c.witness;
        j["checks"].push_back(std::move(e));
      }
      os << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      os << "# seed=" << cfg.options.seed << '\n';
      os << "id,anchor,n,status,witness\n";
      for (const Check& c : rep.checks())
        os << csv_field(c.id) << ',' << csv_field(c.anchor) << ',' << (c.n ? std::to_string(*c.n) : "") << ','
           << status_name(c.status) << ',' << csv_field(c.witness) << '\n';
      break;
    case Format::text:
      os << "seed " << cfg.options.seed << ", N = " << cfg.n_min << ".." << cfg.n_max
         << ", oracle_n_max " << cfg.options.oracle_n_max << ", basepoint " << cfg.options.basepoint << '\n';
      for (const Check& c : rep.checks()) {
        os << (c.status == Status::pass ? "PASS " : c.status == Status::fail ? "FAIL " : "SKIP ") << c.id;
        if (c.n) os << " [N=" << *c.n << "]";
        if (!c.witness.empty()) os << ": " << c.witness;
        os << '\n';
      }
      os << rep.count(Status::pass) << " passed, " << rep.count(Status::fail) << " failed, "
         << rep.count(Status::skipped) << " skipped\n";
      break;
  }
  return os.str();
}

}  // namespace sl4cube::tool
