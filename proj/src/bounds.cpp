#include "apolar/bounds.hpp"

#include <cmath>

#include "apolar/form_io.hpp"

namespace apolar {

std::size_t FBoundEntry::certificate_terms() const {
  if (certificate.empty() || certificate == "0") return 0;
  std::size_t n = 1;
  for (std::size_t i = 1; i < certificate.size(); ++i) {
    if ((certificate[i] == '+' || certificate[i] == '-') && certificate[i - 1] == ' ') ++n;
  }
  return n;
}

nlohmann::ordered_json to_json(const FBoundEntry& entry, bool with_timestamp) {
  nlohmann::ordered_json j;
  j["e"] = entry.e;
  j["r"] = entry.r;
  j["upper_bound"] = entry.upper;
  j["exact"] = entry.exact;
  j["field"] = entry.field.name();
  j["modulus"] = entry.field.modulus;
  j["seed"] = entry.seed;
  j["strategy"] = entry.strategy;
  j["certificate"] = entry.certificate;
  if (with_timestamp) j["timestamp"] = entry.timestamp;
  return j;
}

FBoundEntry bound_entry_from_json(const nlohmann::json& j) {
  try {
    FBoundEntry entry;
    entry.e = j.at("e").get<unsigned>();
    entry.r = j.at("r").get<std::size_t>();
    entry.upper = j.at("upper_bound").get<std::size_t>();
    entry.exact = j.at("exact").get<bool>();
    entry.field = FieldSpec::parse(j.at("field").get<std::string>());
    if (j.contains("modulus") && j.at("modulus").get<std::uint64_t>() != entry.field.modulus) {
      throw InvalidArgument("modulus does not match field");
    }
    entry.seed = j.value("seed", std::uint64_t{0});
    entry.strategy = j.value("strategy", std::string());
    entry.certificate = j.at("certificate").get<std::string>();
    entry.timestamp = j.value("timestamp", std::string());
    return entry;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("bound entry: ") + ex.what());
  }
}

std::string verify_entry(const FBoundEntry& entry) {
  if (entry.e != 4 && entry.e != 5) return "unsupported socle degree " + std::to_string(entry.e);
  if (entry.r == 0) return "codimension 0";
  try {
    return visit_field(entry.field, [&](const auto& field) -> std::string {
      auto f = parse_form(entry.certificate, entry.r, field);
      if (f.is_zero()) return "zero certificate";
      auto hf = hilbert_function(f);
      if (hf.socle_degree() != entry.e) return "certificate has degree " + std::to_string(hf.socle_degree());
      if (hf[1] != entry.r) return "certificate has h_1 = " + std::to_string(hf[1]) + ", expected r";
      if (hf[2] != entry.upper) return "certificate has h_2 = " + std::to_string(hf[2]) + ", entry claims " +
                                       std::to_string(entry.upper);
      if (entry.exact && known_f(entry.e, entry.r) != entry.upper) return "exactness flag disagrees";
      return {};
    });
  } catch (const Error& ex) {
    return ex.what();
  }
}

std::optional<std::size_t> known_f(unsigned e, std::size_t r) {
  if (r == 0) return std::nullopt;
  switch (e) {
    case 3:
      return r;
    case 4:
      if (r <= 12) return r;
      if (r == 13) return 12;
      return std::nullopt;
    case 5:
      if (r <= 16) return r;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::size_t exact_range_end(unsigned e) {
  switch (e) {
    case 4:
      return 13;
    case 5:
      return 16;
    default:
      throw UnsupportedSocleDegree("e = " + std::to_string(e));
  }
}

bool BoundTable::merge(FBoundEntry entry) {
  auto key = std::make_pair(entry.e, entry.r);
  auto it = entries_.find(key);
  if (it != entries_.end() && it->second.upper <= entry.upper) return false;
  entries_[key] = std::move(entry);
  return true;
}

const FBoundEntry* BoundTable::find(unsigned e, std::size_t r) const {
  auto it = entries_.find({e, r});
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<FBoundEntry> BoundTable::entries() const {
  std::vector<FBoundEntry> out;
  out.reserve(entries_.size());
  for (const auto& [key, entry] : entries_) out.push_back(entry);
  return out;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Gorenstein:
      return "Gorenstein";
    case Classification::NotGorenstein:
      return "NotGorenstein";
    case Classification::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

Classification classify_gorenstein_hf(unsigned e, std::size_t r, std::size_t a, const BoundTable& table) {
  if (e < 3 || e > 5) throw UnsupportedSocleDegree("e = " + std::to_string(e) + "; expected 3, 4 or 5");
  if (r == 0) throw InvalidArgument("codimension must be at least 1");
  if (e == 3) return a == r ? Classification::Gorenstein : Classification::NotGorenstein;
  if (a > monomial_count(r, 2)) return Classification::NotGorenstein;
  if (auto lower = known_f(e, r)) return a >= *lower ? Classification::Gorenstein : Classification::NotGorenstein;
  if (const auto* entry = table.find(e, r); entry && a >= entry->upper) return Classification::Gorenstein;
  return Classification::Unknown;
}

double asymptotic_reference(unsigned e, std::size_t r) {
  const double x = static_cast<double>(r);
  if (e == 4) return std::cbrt(6.0 * x * 6.0 * x);
  if (e == 5) return std::pow(24.0 * x, 0.75) / 6.0;
  throw UnsupportedSocleDegree("e = " + std::to_string(e) + "; expected 4 or 5");
}

nlohmann::ordered_json to_json(const GicReport& report) {
  nlohmann::ordered_json j;
  j["e"] = report.e;
  j["r_min"] = report.r_lo;
  j["r_max"] = report.r_hi;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json o;
    o["r"] = row.r;
    o["lower"] = row.lower ? nlohmann::ordered_json(*row.lower) : nlohmann::ordered_json(nullptr);
    o["upper"] = row.upper;
    o["strategy"] = row.strategy;
    o["descent_hf"] = row.descent ? nlohmann::ordered_json(row.descent->to_string()) : nlohmann::ordered_json(nullptr);
    o["asymptotic"] = std::round(row.asymptotic * 100.0) / 100.0;
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  j["violations"] = report.violations;
  j["nondecreasing"] = report.nondecreasing;
  return j;
}

}  // namespace apolar
