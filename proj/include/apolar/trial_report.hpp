#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace apolar {

// A failed trial, stored as text so it can be replayed later.
struct Witness {
  std::string form;
  std::size_t nvars = 0;
  std::string linear_form;  // "a0,a1,..."; empty when the check has no H
  long long observed = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// Monte Carlo evidence for a statement about general choices.
struct TrialReport {
  std::string suite;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string field;
  std::uint64_t modulus = 0;  // 0 over Q
  std::uint64_t seed = 0;
  std::vector<Witness> witnesses;

  bool passed() const noexcept { return failures == 0; }
  friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

nlohmann::ordered_json to_json(const TrialReport& report);
TrialReport trial_report_from_json(const nlohmann::json& j);

}  // namespace apolar
