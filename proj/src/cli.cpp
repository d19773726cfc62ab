#include "apolar/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "apolar/search.hpp"
#include "apolar/suites.hpp"

namespace apolar::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "tsv") return OutputFormat::Tsv;
  return OutputFormat::Pretty;
}

Json header(const SessionConfig& cfg, const std::string& command) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["field"] = cfg.field.name();
  j["seed"] = cfg.seed;
  return j;
}

std::string header_line(const SessionConfig& cfg, const std::string& command) {
  std::ostringstream os;
  if (cfg.format == OutputFormat::Tsv) {
    os << "#\t" << kToolName << "\t" << kToolVersion << "\t" << command << "\tfield=" << cfg.field.name()
       << "\tseed=" << cfg.seed << "\n";
  } else {
    os << "# " << kToolName << " " << kToolVersion << " " << command << " field=" << cfg.field.name()
       << " seed=" << cfg.seed << "\n";
  }
  return os.str();
}

std::string fixed2(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << x;
  return os.str();
}

struct Outcome {
  std::string text;
  int code = kExitOk;
};

// hf

Outcome cmd_hf(const SessionConfig& cfg, const std::string& form_text, std::size_t nvars) {
  return visit_field(cfg.field, [&](const auto& field) {
    auto f = parse_form(form_text, nvars, field);
    auto hf = hilbert_function(f);
    Outcome out;
    if (cfg.format == OutputFormat::Json) {
      Json j = header(cfg, "hf");
      j["form"] = to_string(f);
      j["vars"] = nvars;
      j["degree"] = f.degree();
      j["hilbert_function"] = hf.values();
      j["symmetric"] = hf.is_symmetric();
      out.text = j.dump(2) + "\n";
    } else if (cfg.format == OutputFormat::Tsv) {
      out.text = header_line(cfg, "hf") + "form\tvars\thilbert_function\n" + to_string(f) + "\t" +
                 std::to_string(nvars) + "\t" + hf.to_string() + "\n";
    } else {
      out.text = header_line(cfg, "hf") + hf.to_string() + "\n";
    }
    return out;
  });
}

// restrict

Outcome cmd_restrict(const SessionConfig& cfg, const std::string& form_text, std::size_t nvars,
                     const std::string& h_text) {
  return visit_field(cfg.field, [&](const auto& field) {
    using S = typename std::decay_t<decltype(field)>::scalar_type;
    auto f = parse_form(form_text, nvars, field);
    LinearForm<S> h = [&] {
      if (!h_text.empty()) return parse_linear_form(h_text, field);
      Rng rng = trial_rng(cfg.seed, 0);
      return random_linear_form(nvars, field, rng);
    }();
    if (h.nvars() != nvars) {
      throw InvalidArgument("--H has " + std::to_string(h.nvars()) + " coefficients, expected " +
                            std::to_string(nvars));
    }
    auto hf = hilbert_function(f);
    auto g = restrict_mod(f, h);
    std::string child = g.is_zero() ? "0" : hilbert_function(g).to_string();
    std::size_t child_codim = g.is_zero() ? 0 : codimension(g);

    Outcome out;
    if (cfg.format == OutputFormat::Json) {
      Json j = header(cfg, "restrict");
      j["form"] = to_string(f);
      j["vars"] = nvars;
      j["H"] = h.to_string();
      j["pivot"] = h.pivot();
      j["hilbert_function"] = hf.to_string();
      j["restriction"] = to_string(g);
      j["restriction_hilbert_function"] = child;
      j["codimension"] = hf[1];
      j["restriction_codimension"] = child_codim;
      out.text = j.dump(2) + "\n";
    } else if (cfg.format == OutputFormat::Tsv) {
      std::ostringstream os;
      os << header_line(cfg, "restrict") << "H\tpivot\thf\trestriction\trestriction_hf\n"
         << h.to_string() << "\t" << h.pivot() << "\t" << hf.to_string() << "\t" << to_string(g) << "\t" << child
         << "\n";
      out.text = os.str();
    } else {
      std::ostringstream os;
      os << header_line(cfg, "restrict") << "H: " << h.to_string() << " (pivot y" << h.pivot() << ")\n"
         << "HF(F): " << hf.to_string() << "\n"
         << "F^H: " << to_string(g) << "\n"
         << "HF(F^H): " << child << "\n"
         << "codimension: " << hf[1] << " -> " << child_codim << "\n";
      out.text = os.str();
    }
    return out;
  });
}

// check-lemmas

Outcome cmd_check_lemmas(const SessionConfig& cfg) {
  return visit_field(cfg.field, [&](const auto& field) {
    std::vector<TrialReport> reports;
    reports.push_back(gcd_lemma_suite(cfg.trials, derive_seed(cfg.seed, 0), field));
    reports.push_back(divisibility_suite(cfg.trials, derive_seed(cfg.seed, 1), field));
    reports.push_back(theorem_n_suite(cfg.trials, derive_seed(cfg.seed, 2), field));
    bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });

    Outcome out;
    out.code = all ? kExitOk : kExitFailed;
    if (cfg.format == OutputFormat::Json) {
      Json j = header(cfg, "check-lemmas");
      j["trials"] = cfg.trials;
      auto suites = Json::array();
      for (const auto& r : reports) suites.push_back(to_json(r));
      j["suites"] = std::move(suites);
      j["passed"] = all;
      out.text = j.dump(2) + "\n";
    } else if (cfg.format == OutputFormat::Tsv) {
      std::ostringstream os;
      os << header_line(cfg, "check-lemmas") << "suite\tseed\ttrials\tfailures\n";
      for (const auto& r : reports) os << r.suite << "\t" << r.seed << "\t" << r.trials << "\t" << r.failures << "\n";
      out.text = os.str();
    } else {
      std::ostringstream os;
      os << header_line(cfg, "check-lemmas");
      for (const auto& r : reports) {
        os << r.suite << ": " << r.trials << " trials, " << r.failures << " failures (seed " << r.seed << ")\n";
        for (const auto& w : r.witnesses) {
          os << "  witness: F = " << w.form;
          if (!w.linear_form.empty()) os << "; H = " << w.linear_form;
          os << "; observed " << w.observed << "\n";
        }
      }
      os << "all passed: " << (all ? "true" : "false") << "\n";
      out.text = os.str();
    }
    return out;
  });
}

// search-f

FBoundEntry search_entry(const SessionConfig& cfg, unsigned e, std::size_t r) {
  return visit_field(cfg.field,
                     [&](const auto& field) { return f_upper_bound(e, r, cfg.budget, derive_seed(cfg.seed, r), field); });
}

Outcome cmd_search_f(const SessionConfig& cfg, unsigned e, std::size_t r, std::ostream& err) {
  FBoundEntry entry = search_entry(cfg, e, r);
  BoundTable table = cache_merge_store(cfg.cache_path, {entry}, err);
  const FBoundEntry* best = table.find(e, r);

  Outcome out;
  if (cfg.format == OutputFormat::Json) {
    Json j = header(cfg, "search-f");
    j["budget"] = cfg.budget;
    j["result"] = to_json(entry, false);
    j["cache_upper_bound"] = best ? best->upper : entry.upper;
    out.text = j.dump(2) + "\n";
  } else if (cfg.format == OutputFormat::Tsv) {
    std::ostringstream os;
    os << header_line(cfg, "search-f") << "e\tr\tupper\texact\tstrategy\tcertificate\n"
       << e << "\t" << r << "\t" << entry.upper << "\t" << (entry.exact ? "true" : "false") << "\t" << entry.strategy
       << "\t" << entry.certificate << "\n";
    out.text = os.str();
  } else {
    std::ostringstream os;
    os << header_line(cfg, "search-f") << "f_" << e << "(" << r << ") <= " << entry.upper
       << (entry.exact ? " (exact)" : "") << "\n"
       << "strategy: " << entry.strategy << "\n"
       << "certificate: " << entry.certificate << "\n"
       << "cache best: " << (best ? best->upper : entry.upper) << "\n";
    out.text = os.str();
  }
  return out;
}

// realize

Outcome cmd_realize(const SessionConfig& cfg, unsigned e, std::size_t r) {
  return visit_field(cfg.field, [&](const auto& field) {
    auto real = realize_interval(e, r, cfg.seed, field, cfg.budget);
    Outcome out;
    out.code = real.gaps.empty() ? kExitOk : kExitFailed;
    if (cfg.format == OutputFormat::Json) {
      Json j = header(cfg, "realize");
      j["e"] = e;
      j["r"] = r;
      auto certs = Json::array();
      for (const auto& [a, cert] : real.certificates) {
        Json c;
        c["a"] = a;
        c["hilbert_function"] = detail::target_hf(e, r, a).to_string();
        c["strategy"] = cert.strategy;
        c["certificate"] = to_string(cert.form);
        certs.push_back(std::move(c));
      }
      j["certificates"] = std::move(certs);
      j["gaps"] = real.gaps;
      out.text = j.dump(2) + "\n";
    } else if (cfg.format == OutputFormat::Tsv) {
      std::ostringstream os;
      os << header_line(cfg, "realize") << "a\thilbert_function\tstrategy\tcertificate\n";
      for (const auto& [a, cert] : real.certificates) {
        os << a << "\t" << detail::target_hf(e, r, a).to_string() << "\t" << cert.strategy << "\t"
           << to_string(cert.form) << "\n";
      }
      for (auto a : real.gaps) os << a << "\t\tgap\t\n";
      out.text = os.str();
    } else {
      std::ostringstream os;
      os << header_line(cfg, "realize");
      for (const auto& [a, cert] : real.certificates) {
        os << "a=" << a << " " << detail::target_hf(e, r, a).to_string() << " " << cert.strategy << "\n";
      }
      os << "gaps:";
      if (real.gaps.empty()) os << " none";
      for (auto a : real.gaps) os << " " << a;
      os << "\n";
      out.text = os.str();
    }
    return out;
  });
}

// gic

Outcome cmd_gic(const SessionConfig& cfg, unsigned e, std::size_t r_lo, std::size_t r_hi, std::ostream& err) {
  if (e != 4 && e != 5) throw UnsupportedSocleDegree("e = " + std::to_string(e) + "; expected 4 or 5");
  if (r_lo == 0 || r_lo > r_hi) throw InvalidArgument("need 1 <= rmin <= rmax");
  BoundTable table;
  if (std::filesystem::exists(cfg.cache_path)) table = cache_load(cfg.cache_path, err);
  std::vector<FBoundEntry> fresh;
  for (std::size_t r = r_lo; r <= r_hi; ++r) {
    if (!table.find(e, r)) fresh.push_back(search_entry(cfg, e, r));
  }
  if (!fresh.empty()) table = cache_merge_store(cfg.cache_path, fresh, err);
  GicReport report = gic_verify(e, r_lo, r_hi, table, cfg.seed);

  Outcome out;
  out.code = report.nondecreasing ? kExitOk : kExitFailed;
  auto lower_text = [](const GicRow& row) { return row.lower ? std::to_string(*row.lower) : std::string("-"); };
  if (cfg.format == OutputFormat::Json) {
    Json j = header(cfg, "gic");
    Json body = to_json(report);
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    out.text = j.dump(2) + "\n";
  } else if (cfg.format == OutputFormat::Tsv) {
    std::ostringstream os;
    os << header_line(cfg, "gic") << "r\tlower\tupper\tdescent_hf\tasymptotic\tstrategy\n";
    for (const auto& row : report.rows) {
      os << row.r << "\t" << lower_text(row) << "\t" << row.upper << "\t"
         << (row.descent ? row.descent->to_string() : "-") << "\t" << fixed2(row.asymptotic) << "\t" << row.strategy
         << "\n";
    }
    os << "nondecreasing\t" << (report.nondecreasing ? "true" : "false") << "\n";
    out.text = os.str();
  } else {
    std::ostringstream os;
    os << header_line(cfg, "gic") << "e=" << e << " r=" << r_lo << ".." << r_hi << "\n";
    os << std::left << std::setw(4) << "r" << std::setw(7) << "lower" << std::setw(7) << "upper" << std::setw(26)
       << "descent HF" << std::setw(12) << "asymptotic"
       << "strategy\n";
    for (const auto& row : report.rows) {
      os << std::setw(4) << row.r << std::setw(7) << lower_text(row) << std::setw(7) << row.upper << std::setw(26)
         << (row.descent ? row.descent->to_string() : "-") << std::setw(12) << fixed2(row.asymptotic) << row.strategy
         << "\n";
    }
    for (const auto& v : report.violations) os << "violation: " << v << "\n";
    if (!cfg.field.is_rational()) os << "note: certificates verified over " << cfg.field.name() << "\n";
    os << "nondecreasing: " << (report.nondecreasing ? "true" : "false") << "\n";
    out.text = os.str();
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert functions of Gorenstein algebras via inverse systems", kToolName};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::string field_text = "p:" + std::to_string(kDefaultPrime);
  std::string format_text = "pretty";
  std::string cache_path = default_cache_path();
  std::uint64_t seed = 0;
  std::size_t budget = 16;
  std::size_t trials = 100;
  app.add_option("--field", field_text, "q, or p:MOD for GF(MOD)");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--cache", cache_path, "bound-table cache file");
  app.add_option("--format", format_text, "output format")->check(CLI::IsMember({"json", "tsv", "pretty"}));

  std::string form_text, h_text;
  std::size_t nvars = 0;
  unsigned e = 4;
  std::size_t r = 0, r_lo = 0, r_hi = 0;

  auto* hf = app.add_subcommand("hf", "Hilbert function of a form");
  hf->add_option("--form", form_text, "form in y0, y1, ...")->required();
  hf->add_option("--vars", nvars, "number of variables")->required();

  auto* restrict = app.add_subcommand("restrict", "restrict a form modulo a linear form");
  restrict->add_option("--form", form_text, "form in y0, y1, ...")->required();
  restrict->add_option("--vars", nvars, "number of variables")->required();
  restrict->add_option("--H", h_text, "coefficients a0,a1,... of H (random if omitted)");

  auto* lemmas = app.add_subcommand("check-lemmas", "run the randomized lemma suites");
  lemmas->add_option("--trials", trials, "trials per suite")->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search-f", "upper bound for f_e(r)");
  search->add_option("--e", e, "socle degree")->required()->check(CLI::IsMember({4u, 5u}));
  search->add_option("--r", r, "codimension")->required()->check(CLI::PositiveNumber);
  search->add_option("--budget", budget, "random trials")->check(CLI::PositiveNumber);

  auto* realize = app.add_subcommand("realize", "certificates for every admissible h_2");
  realize->add_option("--e", e, "socle degree")->required()->check(CLI::IsMember({4u, 5u}));
  realize->add_option("--r", r, "codimension")->required()->check(CLI::PositiveNumber);
  realize->add_option("--budget", budget, "attempts per seed")->check(CLI::PositiveNumber);

  auto* gic = app.add_subcommand("gic", "check the bound table for monotonicity in r");
  gic->add_option("--e", e, "socle degree")->required()->check(CLI::IsMember({4u, 5u}));
  gic->add_option("--rmin", r_lo, "first codimension")->required()->check(CLI::PositiveNumber);
  gic->add_option("--rmax", r_hi, "last codimension")->required()->check(CLI::PositiveNumber);
  gic->add_option("--budget", budget, "random trials when searching")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  SessionConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.budget = budget;
  cfg.cache_path = cache_path;
  cfg.format = parse_format(format_text);
  try {
    cfg.field = FieldSpec::parse(field_text);
  } catch (const Error& ex) {
    err << "--field: " << ex.what() << "\n";
    return kExitUsage;
  }
  if (!cfg.field.is_rational() && cfg.field.modulus <= 5) {
    err << "--field: modulus must exceed 5\n";
    return kExitUsage;
  }

  try {
    Outcome result;
    if (*hf) {
      result = cmd_hf(cfg, form_text, nvars);
    } else if (*restrict) {
      result = cmd_restrict(cfg, form_text, nvars, h_text);
    } else if (*lemmas) {
      result = cmd_check_lemmas(cfg);
    } else if (*search) {
      result = cmd_search_f(cfg, e, r, err);
    } else if (*realize) {
      result = cmd_realize(cfg, e, r);
    } else {
      result = cmd_gic(cfg, e, r_lo, r_hi, err);
    }
    out << result.text;
    return result.code;
  } catch (const CorruptCache& ex) {
    err << "error: " << ex.what() << " (offset " << ex.offset() << ")\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace apolar::cli
