#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "runner.hpp"
#include "sl4cube/cube.hpp"
#include "sl4cube/special.hpp"

using namespace sl4cube;

namespace {

constexpr int kUsage = 2;

struct TableRows {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

TableRows transition_table(int N) {
  TableRows t{{"N", "p", "P", "calP"}, {}};
  const auto profiles = enumerate_profiles(N);
  const QMatrix& G = calP_genfunc_table(N);
  const QMatrix& S = calP_sum_table(N);
  if (!(G == S)) throw std::runtime_error("transition table: the two evaluators disagree");
  for (std::size_t a = 0; a < profiles.size(); ++a)
    for (std::size_t b = 0; b < profiles.size(); ++b)
      t.rows.push_back({std::to_string(N), to_string(profiles[a]), to_string(profiles[b]), to_string(G(a, b))});
  return t;
}

TableRows krawtchouk_table(int N) {
  TableRows t{{"N", "n", "degree", "coefficient"}, {}};
  const KrawtchoukFamily fam = krawtchouk(N);
  for (int n = 0; n <= N + 1; ++n)
    for (std::size_t d = 0; d < fam.f(n).size(); ++d)
      t.rows.push_back({std::to_string(N), std::to_string(n), std::to_string(d), to_string(fam.f(n)[d])});
  return t;
}

TableRows dims_table(int n_max) {
  TableRows t{{"N", "dim"}, {}};
  for (int N = 0; N <= n_max; ++N) t.rows.push_back({std::to_string(N), to_string(binomial(N + 3, 3))});
  return t;
}

TableRows wedderburn_table(int N) {
  TableRows t{{"ell", "eigenvalue", "dim"}, {}};
  const Hypercube cube(N);
  const TAlgebra T(cube, 0);
  for (const auto& part : wedderburn(T))
    t.rows.push_back({std::to_string(part.ell), to_string(part.eigenvalue), std::to_string(part.ideal.size())});
  return t;
}

std::string render_table(const std::string& kind, const TableRows& t, bool json) {
  std::ostringstream os;
  if (json) {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
      nlohmann::ordered_json row;
      for (std::size_t k = 0; k < r.size(); ++k) row[t.header[k]] = r[k];
      j["rows"].push_back(std::move(row));
    }
    os << j.dump(2) << '\n';
  } else {
    for (std::size_t k = 0; k < t.header.size(); ++k) os << (k ? "," : "") << t.header[k];
    os << '\n';
    for (const auto& r : t.rows) {
      for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k];
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the sl4 action on P and its hypercube model"};
  app.require_subcommand(1);

  tool::RunConfig cfg;
  std::vector<std::string> suites{"all"};
  std::string output = "text";
  std::vector<std::string> inject;
  bool oracle_given = false;

  auto* verify = app.add_subcommand("verify", "Run verification suites over a range of N");
  verify->add_option("--n-min", cfg.n_min)->envname("SL4CUBE_N_MIN")->check(CLI::NonNegativeNumber);
  verify->add_option("--n-max", cfg.n_max)->envname("SL4CUBE_N_MAX")->check(CLI::NonNegativeNumber);
  verify->add_option("--suite", suites, "sl4, poly, special, cube, tensor, correspond or all")
      ->envname("SL4CUBE_SUITE")->delimiter(',');
  auto* oracle_opt = verify->add_option("--oracle-n-max", cfg.options.oracle_n_max)
                         ->envname("SL4CUBE_ORACLE_N_MAX")->check(CLI::NonNegativeNumber);
  verify->add_option("--tensor-n-max", cfg.options.tensor_n_max, "Largest N for work in V (x) V (x) V")
      ->envname("SL4CUBE_TENSOR_N_MAX")->check(CLI::NonNegativeNumber);
  verify->add_option("--basepoint", cfg.options.basepoint)->envname("SL4CUBE_BASEPOINT");
  verify->add_option("--output", output)->envname("SL4CUBE_OUTPUT")->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--seed", cfg.options.seed)->envname("SL4CUBE_SEED");
  verify->add_option("--jobs", cfg.jobs, "Worker threads (0: all cores)")->envname("SL4CUBE_JOBS");
  verify->add_option("--inject", inject)
      ->check(CLI::IsMember({"generator", "calp-sign", "krawtchouk"}))->group("");

  std::string kind;
  int table_n = 3;
  std::string out_path;
  std::string table_format = "csv";
  auto* table = app.add_subcommand("table", "Emit a table of exact values");
  table->add_option("--kind", kind)->required()->check(CLI::IsMember({"transition", "krawtchouk", "dims", "wedderburn"}));
  table->add_option("--n", table_n, "Degree (largest degree for dims)")->check(CLI::NonNegativeNumber);
  table->add_option("--out", out_path, "Output file (default stdout)");
  table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
    oracle_given = oracle_opt->count() > 0 || std::getenv("SL4CUBE_ORACLE_N_MAX");
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  if (*verify) {
    if (cfg.n_min > cfg.n_max) {
      std::cerr << "error: --n-min exceeds --n-max\n";
      return kUsage;
    }
    if (!oracle_given) cfg.options.oracle_n_max = std::min(cfg.options.oracle_n_max, cfg.n_max);
    if (cfg.options.oracle_n_max > cfg.n_max) {
      std::cerr << "error: --oracle-n-max exceeds --n-max\n";
      return kUsage;
    }
    cfg.suites.clear();
    for (const auto& s : suites) {
      if (s == "all") {
        cfg.suites = all_suites();
        break;
      }
      const auto parsed = parse_suite(s);
      if (!parsed) {
        std::cerr << "error: unknown suite '" << s << "'\n";
        return kUsage;
      }
      cfg.suites.push_back(*parsed);
    }
    for (const auto& f : inject) {
      if (f == "generator") cfg.options.faults.corrupt_generator = true;
      if (f == "calp-sign") cfg.options.faults.flip_linear_terms = true;
      if (f == "krawtchouk") cfg.options.faults.corrupt_krawtchouk = true;
    }
    cfg.output = output == "json" ? tool::Format::json : output == "csv" ? tool::Format::csv : tool::Format::text;
    const VerificationReport rep = tool::run(cfg);
    std::cout << tool::render(cfg, rep, cfg.output);
    return rep.all_passed() ? 0 : 1;
  }

  try {
    TableRows rows;
    if (kind == "transition") rows = transition_table(table_n);
    if (kind == "krawtchouk") rows = krawtchouk_table(table_n);
    if (kind == "dims") rows = dims_table(table_n);
    if (kind == "wedderburn") rows = wedderburn_table(table_n);
    const std::string text = render_table(kind, rows, table_format == "json");
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      f << text;
      f.close();
      if (!f) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return 1;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
