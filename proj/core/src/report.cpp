#include "sl4cube/report.hpp"

namespace sl4cube {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::expect(const std::string& id, const std::string& anchor,
                                std::optional<int> n, bool ok,
                                const std::function<std::string()>& witness) {
  Check c{id, anchor, n, ok ? Status::pass : Status::fail, {}};
  if (!ok) c.witness = witness ? witness() : "condition false";
  checks_.push_back(std::move(c));
  return ok;
}

void VerificationReport::skip(const std::string& id, const std::string& anchor,
                              std::optional<int> n, const std::string& reason) {
  checks_.push_back(Check{id, anchor, n, Status::skipped, reason});
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::all_passed() const { return count(Status::fail) == 0; }

std::size_t VerificationReport::count(Status s) const {
  std::size_t k = 0;
  for (const auto& c : checks_)
    if (c.status == s) ++k;
  return k;
}

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks_)
    if (c.status == Status::fail) return &c;
  return nullptr;
}

}  // namespace sl4cube
