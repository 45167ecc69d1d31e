#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sl4cube/cube.hpp"
#include "sl4cube/report.hpp"

namespace sl4cube {

enum class Suite { sl4, poly, special, cube, tensor, correspond };

std::string suite_name(Suite s);
std::optional<Suite> parse_suite(const std::string& s);
std::vector<Suite> all_suites();

// sl4 has no degree parameter and runs once per invocation.
bool degree_free(Suite s);

// Deliberate corruptions used as negative controls.
struct Faults {
  bool corrupt_generator = false;   // perturbs one entry of A_1
  bool flip_linear_terms = false;   // negates the order-one terms of the calP sum
  bool corrupt_krawtchouk = false;  // adds 1 to the constant term of f_1
};

struct SuiteOptions {
  int oracle_n_max = 3;  // brute-force tensor and group-enumeration oracles
  int tensor_n_max = 4;  // any work in V (x) V (x) V
  Vertex basepoint = 0;
  std::uint64_t seed = 1;
  Faults faults;
};

// All checks of one suite at degree N (ignored for degree-free suites).
VerificationReport run_suite(Suite s, int N, const SuiteOptions& opts);

}  // namespace sl4cube
