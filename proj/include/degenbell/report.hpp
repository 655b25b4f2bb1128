#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace degenbell {

// One checked identity instance. `key` names the parameter point (stable,
// deterministic); `detail` carries both sides of a failed comparison.
struct CheckCase {
  std::string key;
  bool pass = false;
  std::string detail;
};

class CheckReport {
 public:
  CheckReport() = default;
  explicit CheckReport(std::string name) : name_(std::move(name)) {}

  void add(std::string key, bool pass, std::string detail = std::string()) {
    if (!pass) ++failures_;
    cases_.push_back(CheckCase{std::move(key), pass, std::move(detail)});
  }

  const std::string& name() const { return name_; }
  const std::vector<CheckCase>& cases() const { return cases_; }
  std::size_t size() const { return cases_.size(); }
  std::size_t failures() const { return failures_; }
  bool all_pass() const { return failures_ == 0; }

  const CheckCase* first_failure() const {
    for (const CheckCase& c : cases_)
      if (!c.pass) return &c;
    return nullptr;
  }

 private:
  std::string name_;
  std::vector<CheckCase> cases_;
  std::size_t failures_ = 0;
};

}  // namespace degenbell
