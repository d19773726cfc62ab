#include <algorithm>
#include <cctype>

#include "apolar/field_spec.hpp"
#include "apolar/trial_report.hpp"

namespace apolar {

FieldSpec FieldSpec::parse(std::string_view text) {
  auto bad = [&] { return InvalidArgument("unknown field '" + std::string(text) + "'; use q or p:MOD"); };
  if (text == "q" || text == "Q") return FieldSpec{0};
  std::string_view digits;
  if (text.starts_with("p:")) {
    digits = text.substr(2);
  } else if (text.starts_with("GF(") && text.ends_with(")")) {
    digits = text.substr(3, text.size() - 4);
  } else {
    throw bad();
  }
  if (digits.empty() || digits.size() > 19 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw bad();
  }
  std::uint64_t p = std::stoull(std::string(digits));
  if (!is_prime(p)) throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
  return FieldSpec{p};
}

nlohmann::ordered_json to_json(const TrialReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["trials"] = report.trials;
  j["failures"] = report.failures;
  j["field"] = report.field;
  j["modulus"] = report.modulus;
  j["seed"] = report.seed;
  auto witnesses = nlohmann::ordered_json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"form", w.form}, {"vars", w.nvars}, {"H", w.linear_form}, {"observed", w.observed}});
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

TrialReport trial_report_from_json(const nlohmann::json& j) {
  try {
    TrialReport r;
    r.suite = j.at("suite").get<std::string>();
    r.trials = j.at("trials").get<std::size_t>();
    r.failures = j.at("failures").get<std::size_t>();
    r.field = j.at("field").get<std::string>();
    r.modulus = j.at("modulus").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& w : j.at("witnesses")) {
      r.witnesses.push_back({w.at("form").get<std::string>(), w.at("vars").get<std::size_t>(),
                             w.at("H").get<std::string>(), w.at("observed").get<long long>()});
    }
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("trial report: ") + ex.what());
  }
}

}  // namespace apolar
