#pragma once

// Bound records for f_e(r), the least h_2 of a Gorenstein Hilbert function
// of socle degree e and codimension r, and the checks built on them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "apolar/field_spec.hpp"
#include "apolar/hilbert.hpp"

namespace apolar {

// Certified upper bound on f_e(r). The certificate is a form in exactly r
// variables, in canonical text, whose Hilbert function has h_2 = upper.
struct FBoundEntry {
  unsigned e = 4;
  std::size_t r = 0;
  std::size_t upper = 0;
  bool exact = false;
  std::string certificate;
  FieldSpec field;
  std::uint64_t seed = 0;
  std::string strategy;
  std::string timestamp;  // set when the entry is written to a cache file

  std::size_t certificate_terms() const;
};

nlohmann::ordered_json to_json(const FBoundEntry& entry, bool with_timestamp = true);
// Throws InvalidArgument on missing or mistyped fields.
FBoundEntry bound_entry_from_json(const nlohmann::json& j);

// Recomputes the certificate's Hilbert function. Returns an empty string when
// it has socle degree e, h_1 = r and h_2 = upper, else the reason it fails.
std::string verify_entry(const FBoundEntry& entry);

// Exactly known values: f_3(r) = r; f_4(r) = r for r <= 12 and f_4(13) = 12;
// f_5(r) = r for r <= 16.
std::optional<std::size_t> known_f(unsigned e, std::size_t r);

// Largest r for which known_f(e, r) is defined.
std::size_t exact_range_end(unsigned e);

// One entry per (e, r); merging keeps the smaller upper bound.
class BoundTable {
 public:
  // True when the entry was inserted or replaced an entry with larger bound.
  bool merge(FBoundEntry entry);
  const FBoundEntry* find(unsigned e, std::size_t r) const;
  std::vector<FBoundEntry> entries() const;
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::map<std::pair<unsigned, std::size_t>, FBoundEntry> entries_;
};

enum class Classification { Gorenstein, NotGorenstein, Unknown };

std::string to_string(Classification c);

// Decides whether (1, r, a, r, 1) (e = 4), (1, r, a, a, r, 1) (e = 5) or
// (1, r, a, 1) (e = 3) is a Gorenstein Hilbert function, using the interval
// f_e(r) <= a <= C(r+1, 2) with exact values where known and table bounds
// otherwise. Throws UnsupportedSocleDegree.
Classification classify_gorenstein_hf(unsigned e, std::size_t r, std::size_t a, const BoundTable& table);

// (6r)^{2/3} for e = 4, (24r)^{3/4} / 6 for e = 5. Annotation only.
double asymptotic_reference(unsigned e, std::size_t r);

struct GicRow {
  std::size_t r = 0;
  std::optional<std::size_t> lower;
  std::size_t upper = 0;
  std::string strategy;
  std::optional<HilbertFunction> descent;  // HF of the certificate restricted mod a random H
  double asymptotic = 0.0;
};

struct GicReport {
  unsigned e = 4;
  std::size_t r_lo = 0;
  std::size_t r_hi = 0;
  std::vector<GicRow> rows;
  bool nondecreasing = true;
  std::vector<std::string> violations;
};

// Flags every r < r' with U(r') < L(r), exact values with L != U, and
// certificates whose restriction by a random H (drawn from trial_rng(seed, r))
// fails to drop codimension by one or increases some h_i, or lands below a
// known f_e(r-1). Throws IncompleteTable when [r_lo, r_hi] is not covered.
GicReport gic_verify(unsigned e, std::size_t r_lo, std::size_t r_hi, const BoundTable& table, std::uint64_t seed);

nlohmann::ordered_json to_json(const GicReport& report);

}  // namespace apolar
