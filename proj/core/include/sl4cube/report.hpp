#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sl4cube {

enum class Status { pass, fail, skipped };

const char* status_name(Status s);

struct Check {
  std::string id;
  std::string anchor;    // the identity being certified, in words/symbols
  std::optional<int> n;  // degree, absent for degree-free checks
  Status status = Status::pass;
  std::string witness;   // set iff status == fail (or the skip reason)
};

class VerificationReport {
 public:
  // Records a pass, or a failure with the witness produced lazily.
  bool expect(const std::string& id, const std::string& anchor, std::optional<int> n, bool ok,
              const std::function<std::string()>& witness = {});
  void skip(const std::string& id, const std::string& anchor, std::optional<int> n,
            const std::string& reason);
  void append(const VerificationReport& other);

  const std::vector<Check>& checks() const { return checks_; }
  bool all_passed() const;
  std::size_t count(Status s) const;
  const Check* first_failure() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace sl4cube
