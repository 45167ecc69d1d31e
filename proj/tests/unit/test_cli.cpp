#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "runner.hpp"

using namespace sl4cube;

namespace {

struct Result {
  int status;
  std::string out;
};

Result run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + SL4CUBE_CLI + std::string(" ") + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_CASE("exit status contract") {
  CHECK(run_cli("verify --n-max 2").status == 0);
  CHECK(run_cli("verify --n-min 0 --n-max 0").status == 0);
  CHECK(run_cli("verify --suite sl4 --inject generator").status == 1);
  CHECK(run_cli("verify --n-max 2 --suite special --inject calp-sign").status == 1);
  CHECK(run_cli("verify --n-max 2 --suite poly --inject krawtchouk").status == 1);
  CHECK(run_cli("verify --n-min 3 --n-max 1").status == 2);
  CHECK(run_cli("verify --suite nonsense").status == 2);
  CHECK(run_cli("verify --output xml").status == 2);
  CHECK(run_cli("verify --n-max 2 --oracle-n-max 3").status == 2);
  CHECK(run_cli("").status == 2);
}

TEST_CASE("json report shape and witness on failure") {
  const Result r = run_cli("verify --suite sl4 --inject generator --output json");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("config"));
  bool saw_failure = false;
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("anchor"));
    CHECK(c.contains("status"));
    if (c["status"] == "fail") {
      saw_failure = true;
      CHECK(c.contains("witness"));
      CHECK_FALSE(c["witness"].get<std::string>().empty());
    } else {
      CHECK_FALSE(c.contains("witness"));
    }
  }
  CHECK(saw_failure);
}

TEST_CASE("environment overrides and flag precedence") {
  const auto env_only = nlohmann::json::parse(run_cli("verify --suite poly --output json", "SL4CUBE_N_MAX=1").out);
  CHECK(env_only["config"]["n_max"] == 1);
  const auto flag = nlohmann::json::parse(run_cli("verify --suite poly --n-max 2 --output json", "SL4CUBE_N_MAX=1").out);
  CHECK(flag["config"]["n_max"] == 2);
  const auto seeded = nlohmann::json::parse(run_cli("verify --suite sl4 --output json", "SL4CUBE_SEED=77").out);
  CHECK(seeded["config"]["seed"] == 77);
}

TEST_CASE("reports are deterministic across runs and thread counts") {
  const std::string a = run_cli("verify --n-max 3 --output json --jobs 1").out;
  const std::string b = run_cli("verify --n-max 3 --output json --jobs 4").out;
  const std::string c = run_cli("verify --n-max 3 --output json --jobs 4").out;
  CHECK_FALSE(a.empty());
  CHECK(a == b);
  CHECK(b == c);
  const std::string csv = run_cli("verify --n-max 1 --output csv").out;
  CHECK(csv.rfind("# seed=1\nid,anchor,n,status,witness\n", 0) == 0);
}

TEST_CASE("tables") {
  const std::string dims = run_cli("table --kind dims --n 5").out;
  CHECK(dims == "N,dim\n0,1\n1,4\n2,10\n3,20\n4,35\n5,56\n");
  const std::string tr = run_cli("table --kind transition --n 1").out;
  CHECK(std::count(tr.begin(), tr.end(), '\n') == 17);
  CHECK(run_cli("table --kind wedderburn --n 4").out == "ell,eigenvalue,dim\n0,12,25\n1,4,9\n2,0,1\n");
  const std::string kr = run_cli("table --kind krawtchouk --n 2 --format json").out;
  CHECK(nlohmann::json::parse(kr)["rows"].size() == 10);
  CHECK(run_cli("table --kind dims --n 2 --out /nonexistent/dir/x.csv").status == 1);
  CHECK(run_cli("table --kind bogus").status == 2);
}

TEST_CASE("job plan order") {
  tool::RunConfig cfg;
  cfg.n_min = 1;
  cfg.n_max = 2;
  cfg.suites = {Suite::cube, Suite::sl4, Suite::poly};
  const auto jobs = tool::plan(cfg);
  REQUIRE(jobs.size() == 5);
  CHECK(jobs[0].suite == Suite::cube);
  CHECK(jobs[1].N == 2);
  CHECK(jobs[2].suite == Suite::sl4);
  CHECK(jobs[2].N == -1);
  CHECK(jobs[4].suite == Suite::poly);
}
