#pragma once

#include <doctest.h>

#include <string>

#include "sl4cube/report.hpp"

// Prints the first failing check so a red test says what broke.
inline void require_all_pass(const sl4cube::VerificationReport& rep) {
  const sl4cube::Check* bad = rep.first_failure();
  INFO((bad ? bad->id + ": " + bad->witness : std::string()));
  CHECK(bad == nullptr);
}

inline const sl4cube::Check* find_check(const sl4cube::VerificationReport& rep, const std::string& id) {
  for (const auto& c : rep.checks())
    if (c.id == id) return &c;
  return nullptr;
}
