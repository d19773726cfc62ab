// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "apolar/cli.hpp"
#include "apolar/search.hpp"
#include "apolar/suites.hpp"
#include "oracles.hpp"

using namespace apolar;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitPowerSums = 5.0;
constexpr double kLimitBipartite = 10.0;
constexpr double kLimitDescent = 30.0;
constexpr double kLimitCodimDrop = 120.0;
constexpr double kLimitGcdLemma = 60.0;
constexpr double kLimitDivisibility = 60.0;
constexpr double kLimitOracle = 120.0;
constexpr double kLimitRealize = 180.0;
constexpr double kLimitGic = 180.0;
constexpr double kLimitDeterminism = 180.0;

constexpr std::uint64_t kSeed = 20240611;

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

HilbertFunction flat_hf(std::size_t r, unsigned e) {
  std::vector<std::size_t> v(e + 1, r);
  v.front() = v.back() = 1;
  return HilbertFunction(v);
}

Verdict power_sums() {
  Verdict v;
  auto run = [&](const auto& field) {
    for (unsigned e = 3; e <= 5; ++e) {
      for (std::size_t r = 1; r <= 16; ++r) {
        auto hf = hilbert_function(power_sum_form(r, e, field));
        if (hf != flat_hf(r, e)) v.fail(field.name() + " r=" + std::to_string(r) + " e=" + std::to_string(e) + " gave " + hf.to_string());
      }
    }
  };
  run(RationalField());
  run(PrimeField());
  if (v.ok) v.detail = "96 power sums over Q and GF(2147483647)";
  return v;
}

Verdict bipartite() {
  Verdict v;
  const HilbertFunction expected({1, 13, 12, 13, 1});
  auto q = hilbert_function(bipartite_monomial_form(3, 4, RationalField()));
  auto p = hilbert_function(bipartite_monomial_form(3, 4, PrimeField()));
  if (q != expected) v.fail("over Q: " + q.to_string());
  if (p != expected) v.fail("over GF(p): " + p.to_string());
  if (v.ok) v.detail = "HF " + q.to_string() + " over Q and GF(2147483647)";
  return v;
}

Verdict descent() {
  Verdict v;
  PrimeField field;
  auto f = bipartite_monomial_form(3, 4, field);
  const HilbertFunction expected({1, 12, 12, 12, 1});
  for (std::size_t t = 0; t < 20; ++t) {
    Rng rng = trial_rng(kSeed, t);
    auto h = random_linear_form(f.nvars(), field, rng);
    auto g = restrict_mod(f, h);
    auto hf = g.is_zero() ? HilbertFunction() : hilbert_function(g);
    if (hf != expected) v.fail("H=" + h.to_string() + " gave " + hf.to_string());
  }
  if (v.ok) v.detail = "20/20 restrictions have HF (1,12,12,12,1)";
  return v;
}

Verdict codimension_drop() {
  Verdict v;
  auto report = theorem_n_suite(200, derive_seed(kSeed, 4), PrimeField());
  if (!report.passed()) v.fail(std::to_string(report.failures) + " failures in 200 trials");
  RationalField q;
  auto s = parse_form("y0^2 + y1^2 + y2^2", 3, q);
  auto g = restrict_mod(pow(s, 2), parse_linear_form("1,0,0", q));
  auto h1 = codimension(g);
  if (h1 != 2) v.fail("explicit case gave h_1 = " + std::to_string(h1));
  if (v.ok) v.detail = "200 trials, 0 failures; explicit case h_1 = 2";
  return v;
}

Verdict gcd_lemma() {
  Verdict v;
  auto report = gcd_lemma_suite(100, derive_seed(kSeed, 5), PrimeField());
  if (!report.passed()) v.fail(std::to_string(report.failures) + " failures in 100 trials");
  if (v.ok) v.detail = "100 trials, 0 failures";
  return v;
}

Verdict divisibility() {
  Verdict v;
  auto report = divisibility_suite(100, derive_seed(kSeed, 6), PrimeField());
  if (!report.passed()) v.fail(std::to_string(report.failures) + " failures in 100 trials");
  RationalField q;
  std::vector<Form<Rational>> cubes{parse_form("y0^3", 3, q), parse_form("y1^3", 3, q), parse_form("y2^3", 3, q)};
  auto rank = divisibility_rank<Rational>(cubes, parse_linear_form("1,0,0", q));
  if (rank != 2) v.fail("counterexample rank " + std::to_string(rank));
  if (v.ok) v.detail = "100 trials, 0 failures; counterexample rank 2";
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  std::size_t checked = 0;
  auto one = [&](const auto& f) {
    if (f.is_zero()) return;
    ++checked;
    auto hf = hilbert_function(f);
    if (!hf.is_symmetric()) v.fail("asymmetric " + hf.to_string() + " for " + to_string(f));
    auto ref = oracle::derivative_span_hf(f);
    if (hf != ref) v.fail("rank " + hf.to_string() + " vs oracle " + ref.to_string() + " for " + to_string(f));
  };
  for (std::size_t t = 0; t < 100; ++t) {
    Rng rng = trial_rng(derive_seed(kSeed, 7), t);
    std::size_t n = 1 + rng() % 6;
    unsigned d = 1 + static_cast<unsigned>(rng() % 5);
    bool sparse = rng() & 1;
    auto make = [&](const auto& field) {
      return sparse ? random_sparse_form(n, d, 1 + rng() % (2 * n + 2), field, rng) : random_dense_form(n, d, field, rng);
    };
    if (t % 2) {
      one(make(RationalField()));
    } else {
      one(make(PrimeField()));
    }
  }
  if (v.ok) v.detail = std::to_string(checked) + " forms symmetric and equal to the derivative-span oracle";
  return v;
}

Verdict realization() {
  Verdict v;
  PrimeField field;
  std::ostringstream summary;
  for (std::size_t r : {3, 4, 5, 13}) {
    auto out = realize_interval(4, r, derive_seed(kSeed, 8), field);
    const std::size_t lo = *known_f(4, r), hi = monomial_count(r, 2);
    for (std::size_t a = lo; a <= hi; ++a) {
      bool gap = std::find(out.gaps.begin(), out.gaps.end(), a) != out.gaps.end();
      auto it = out.certificates.find(a);
      if (gap == (it != out.certificates.end())) {
        v.fail("r=" + std::to_string(r) + " a=" + std::to_string(a) + " neither certified nor reported");
        continue;
      }
      if (gap) continue;
      const HilbertFunction want({1, r, a, r, 1});
      if (hilbert_function(it->second.form) != want) v.fail("r=" + std::to_string(r) + " a=" + std::to_string(a) + " failed re-verification");
      if (r <= 5 && oracle::derivative_span_hf(it->second.form) != want) {
        v.fail("r=" + std::to_string(r) + " a=" + std::to_string(a) + " disagrees with the oracle");
      }
    }
    if (r <= 5 && !out.gaps.empty()) v.fail("gaps at r=" + std::to_string(r));
    summary << " r=" << r << ":" << out.certificates.size() << "/" << (hi - lo + 1);
    if (!out.gaps.empty()) {
      summary << " (gaps";
      for (auto a : out.gaps) summary << " " << a;
      summary << ")";
    }
  }
  if (v.ok) v.detail = "certified" + summary.str();
  return v;
}

Verdict gic() {
  Verdict v;
  PrimeField field;
  std::ostringstream summary;
  for (auto [e, hi] : {std::pair<unsigned, std::size_t>{4, 13}, {5, 16}}) {
    BoundTable table;
    for (std::size_t r = 3; r <= hi; ++r) table.merge(f_upper_bound(e, r, 16, derive_seed(kSeed, r), field));
    auto report = gic_verify(e, 3, hi, table, kSeed);
    if (!report.nondecreasing) v.fail("e=" + std::to_string(e) + ": " + (report.violations.empty() ? "?" : report.violations.front()));
    for (const auto& row : report.rows) {
      if (!row.lower || *row.lower != row.upper) v.fail("e=" + std::to_string(e) + " r=" + std::to_string(row.r) + " L != U");
    }
    summary << "f_" << e << "(3.." << hi << ")=(";
    for (std::size_t i = 0; i < report.rows.size(); ++i) summary << (i ? "," : "") << report.rows[i].upper;
    summary << ") ";
  }
  summary << "U_4(14..20)=(";
  for (std::size_t r = 14; r <= 20; ++r) {
    auto entry = f_upper_bound(4, r, 16, derive_seed(kSeed, r), field);
    if (entry.upper > r - 1) v.fail("U(" + std::to_string(r) + ") = " + std::to_string(entry.upper));
    if (!verify_entry(entry).empty()) v.fail("U(" + std::to_string(r) + ") certificate rejected");
    summary << (r > 14 ? "," : "") << entry.upper;
  }
  summary << ")";
  if (v.ok) v.detail = summary.str();
  return v;
}

Verdict determinism() {
  Verdict v;
  auto dir = std::filesystem::temp_directory_path() / ("apolar_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string cache = (dir / "bounds.json").string();
  std::vector<std::vector<std::string>> commands = {
      {"hf", "--form", "y0^4+y1^4", "--vars", "2"},
      {"hf", "--form", "3*y0^2*y1 - y1^3", "--vars", "2", "--field", "q", "--format", "json"},
      {"restrict", "--form", "y0^4+y1^4+y2^4+y0*y1*y2^2", "--vars", "3", "--seed", "11"},
      {"check-lemmas", "--seed", "7", "--trials", "100"},
      {"check-lemmas", "--seed", "7", "--trials", "30", "--format", "json"},
      {"search-f", "--e", "4", "--r", "14", "--seed", "3", "--cache", cache},
      {"realize", "--e", "4", "--r", "5", "--seed", "3", "--format", "tsv"},
      {"gic", "--e", "4", "--rmin", "3", "--rmax", "13", "--seed", "3", "--cache", cache},
      {"gic", "--e", "5", "--rmin", "3", "--rmax", "8", "--seed", "3", "--cache", cache, "--format", "json"},
  };
  for (const auto& argv : commands) {
    std::ostringstream out1, err1, out2, err2;
    int c1 = cli::run(argv, out1, err1);
    int c2 = cli::run(argv, out2, err2);
    if (c1 != 0 || c2 != 0) v.fail(argv.front() + " exited " + std::to_string(c1) + "/" + std::to_string(c2) + ": " + err1.str());
    if (out1.str() != out2.str()) v.fail(argv.front() + " output differs between runs");
  }
  std::filesystem::remove_all(dir);
  if (v.ok) v.detail = std::to_string(commands.size()) + " commands byte-identical across repeated runs";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "power-sum Hilbert functions", kLimitPowerSums, power_sums},
      {2, "bipartite example (1,13,12,13,1)", kLimitBipartite, bipartite},
      {3, "restriction descent to (1,12,12,12,1)", kLimitDescent, descent},
      {4, "codimension drop under restriction", kLimitCodimDrop, codimension_drop},
      {5, "gcd of partials", kLimitGcdLemma, gcd_lemma},
      {6, "divisibility rank preservation", kLimitDivisibility, divisibility},
      {7, "symmetry and oracle equivalence", kLimitOracle, oracle_equivalence},
      {8, "interval realization", kLimitRealize, realization},
      {9, "bound table monotonicity", kLimitGic, gic},
      {10, "determinism", kLimitDeterminism, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& ex) {
      v.fail(std::string("exception: ") + ex.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit) v.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit) + " s");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << (v.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << timing << ") " << v.detail
              << std::endl;
    failed += !v.ok;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : std::string("acceptance: all criteria passed"))
            << std::endl;
  return failed ? 1 : 0;
}
