#include "apolar/bounds.hpp"
#include "apolar/restriction.hpp"

namespace apolar {

namespace {

// HF of the certificate restricted modulo a random linear form.
HilbertFunction descent_hf(const FBoundEntry& entry, std::uint64_t seed) {
  return visit_field(entry.field, [&](const auto& field) {
    auto f = parse_form(entry.certificate, entry.r, field);
    Rng rng = trial_rng(seed, entry.r);
    auto restricted = restrict_mod(f, random_linear_form(f.nvars(), field, rng));
    return hilbert_function(restricted);
  });
}

}  // namespace

GicReport gic_verify(unsigned e, std::size_t r_lo, std::size_t r_hi, const BoundTable& table, std::uint64_t seed) {
  if (e != 4 && e != 5) throw UnsupportedSocleDegree("e = " + std::to_string(e) + "; expected 4 or 5");
  if (r_lo == 0 || r_lo > r_hi) throw InvalidArgument("empty codimension range");
  GicReport report;
  report.e = e;
  report.r_lo = r_lo;
  report.r_hi = r_hi;

  std::vector<std::size_t> missing;
  for (std::size_t r = r_lo; r <= r_hi; ++r) {
    if (!table.find(e, r)) missing.push_back(r);
  }
  if (!missing.empty()) {
    std::string list;
    for (auto r : missing) list += (list.empty() ? "" : ",") + std::to_string(r);
    throw IncompleteTable("no entry for e = " + std::to_string(e) + ", r in {" + list + "}");
  }

  for (std::size_t r = r_lo; r <= r_hi; ++r) {
    const FBoundEntry& entry = *table.find(e, r);
    GicRow row;
    row.r = r;
    row.lower = known_f(e, r);
    row.upper = entry.upper;
    row.strategy = entry.strategy;
    row.asymptotic = asymptotic_reference(e, r);
    const std::string at = "r=" + std::to_string(r) + ": ";
    if (row.lower && *row.lower != row.upper) {
      report.violations.push_back(at + "upper bound " + std::to_string(row.upper) + " differs from exact value " +
                                  std::to_string(*row.lower));
    }
    if (r >= 3) {
      try {
        auto child = descent_hf(entry, seed);
        row.descent = child;
        if (child.size() != e + 1 || child[1] != r - 1) {
          report.violations.push_back(at + "restriction " + child.to_string() + " does not have codimension " +
                                      std::to_string(r - 1));
        } else if (child[2] > entry.upper || (e == 5 && child[3] > entry.upper)) {
          report.violations.push_back(at + "restriction " + child.to_string() + " increases some h_i");
        } else if (auto below = known_f(e, r - 1); below && child[2] < *below) {
          report.violations.push_back(at + "restriction " + child.to_string() + " has h_2 below f_" +
                                      std::to_string(e) + "(" + std::to_string(r - 1) + ") = " +
                                      std::to_string(*below));
        }
      } catch (const Error& ex) {
        report.violations.push_back(at + "descent check failed: " + ex.what());
      }
    }
    report.rows.push_back(std::move(row));
  }

  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& lo = report.rows[i];
    if (!lo.lower) continue;
    for (std::size_t k = i + 1; k < report.rows.size(); ++k) {
      const auto& hi = report.rows[k];
      if (hi.upper < *lo.lower) {
        report.violations.push_back("U(" + std::to_string(hi.r) + ") = " + std::to_string(hi.upper) + " < L(" +
                                    std::to_string(lo.r) + ") = " + std::to_string(*lo.lower));
      }
    }
  }
  report.nondecreasing = report.violations.empty();
  return report;
}

}  // namespace apolar
