#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl4cube/suites.hpp"

namespace sl4cube::tool {

enum class Format { json, csv, text };

struct RunConfig {
  int n_min = 0;
  int n_max = 5;
  std::vector<Suite> suites = all_suites();
  SuiteOptions options;
  Format output = Format::text;
  unsigned jobs = 0;  // 0: hardware concurrency
};

struct Job {
  Suite suite;
  int N;  // -1 for degree-free suites
};

// Suite x N jobs in report order.
std::vector<Job> plan(const RunConfig& cfg);

// Runs the plan on a worker pool; the merged report follows plan order.
// An exception inside a job becomes a failed "<suite>.error" check.
VerificationReport run(const RunConfig& cfg);

std::string format_name(Format f);
std::string render(const RunConfig& cfg, const VerificationReport& rep, Format f);

}  // namespace sl4cube::tool
