#pragma once

// Randomized suites over generated instances. Trial t of a suite seeded with
// s draws everything from trial_rng(s, t), so reports are reproducible.

#include <string>
#include <utility>
#include <vector>

#include "apolar/restriction.hpp"

namespace apolar {

namespace detail {

template <class Field>
TrialReport empty_report(std::string suite, const Field& field, std::uint64_t seed, std::size_t trials) {
  TrialReport r;
  r.suite = std::move(suite);
  r.field = field.name();
  r.modulus = field.characteristic();
  r.seed = seed;
  r.trials = trials;
  return r;
}

inline std::string join_forms(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
  return out;
}

inline std::vector<std::string> split_forms(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto at = text.find(';', start);
    out.push_back(text.substr(start, at - start));
    if (at == std::string::npos) break;
    start = at + 1;
  }
  return out;
}

}  // namespace detail

// Form of degree `degree` and codimension exactly `nvars`. The shape cycles
// with `kind`: dense, power sum plus random terms, random sparse support,
// and the structured shapes (sum c_i y_i^2)^m (times a linear form when the
// degree is odd).
template <class Field>
Form<typename Field::scalar_type> theorem_n_instance(std::size_t nvars, unsigned degree, unsigned kind,
                                                      const Field& field, Rng& rng) {
  using S = typename Field::scalar_type;
  while (true) {
    Form<S> f;
    switch (kind % 4) {
      case 0:
        f = random_dense_form(nvars, degree, field, rng);
        break;
      case 1: {
        std::uniform_int_distribution<std::size_t> extra(1, 2 * nvars);
        f = random_sparse_form(nvars, degree, extra(rng), field, rng);
        for (std::size_t i = 0; i < nvars; ++i) {
          f += Form<S>::monomial(Monomial::variable(nvars, i, degree), random_nonzero_scalar(field, rng));
        }
        break;
      }
      case 2: {
        std::uniform_int_distribution<std::size_t> support(nvars, 3 * nvars);
        f = random_sparse_form(nvars, degree, support(rng), field, rng);
        break;
      }
      default: {
        Form<S> q(nvars, 2, field);
        for (std::size_t i = 0; i < nvars; ++i) {
          q += Form<S>::monomial(Monomial::variable(nvars, i, 2), random_nonzero_scalar(field, rng));
        }
        f = pow(q, degree / 2);
        if (degree % 2) f = f * random_linear(nvars, field, rng);
        break;
      }
    }
    if (!f.is_zero() && codimension(f) == nvars) return f;
  }
}

// `trials` random (F, H) pairs with deg F in {3,4,5} and codimension 3..10.
template <class Field>
TrialReport theorem_n_suite(std::size_t trials, std::uint64_t seed, const Field& field) {
  auto report = detail::empty_report("theorem-n", field, seed, trials);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    unsigned degree = 3 + static_cast<unsigned>(t % 3);
    std::uniform_int_distribution<std::size_t> vars(3, 10);
    std::size_t nvars = vars(rng);
    auto f = theorem_n_instance(nvars, degree, static_cast<unsigned>(t / 3), field, rng);
    auto one = theorem_n_check(f, 1, rng());
    report.failures += one.failures;
    for (auto& w : one.witnesses) report.witnesses.push_back(std::move(w));
  }
  return report;
}

// Distinct linear and irreducible quadratic factors with multiplicities,
// total degree at most max_degree, in at most max_vars variables. A quadratic
// is accepted only when its coefficient matrix has rank >= 3.
template <class Field>
std::vector<std::pair<Form<typename Field::scalar_type>, unsigned>> random_factorization(
    const Field& field, Rng& rng, std::size_t max_vars = 4, unsigned max_degree = 8) {
  using S = typename Field::scalar_type;
  std::uniform_int_distribution<std::size_t> vars_dist(2, max_vars);
  const std::size_t nvars = vars_dist(rng);
  std::uniform_int_distribution<unsigned> count_dist(1, 3);
  const unsigned count = count_dist(rng);
  std::vector<std::pair<Form<S>, unsigned>> factors;
  unsigned budget = max_degree;
  for (unsigned k = 0; k < count && budget > 0; ++k) {
    bool quadratic = nvars >= 3 && budget >= 2 && (rng() & 1);
    Form<S> p;
    if (quadratic) {
      do {
        p = random_dense_form(nvars, 2, field, rng);
      } while (p.is_zero() || codimension(p) < 3);
    } else {
      p = random_linear(nvars, field, rng);
    }
    Form<S> normalized = monic(p);
    bool duplicate = false;
    for (const auto& [q, e] : factors) duplicate = duplicate || monic(q) == normalized;
    if (duplicate) continue;
    unsigned deg = p.degree();
    std::uniform_int_distribution<unsigned> mult(1, budget / deg);
    unsigned e = mult(rng);
    budget -= e * deg;
    factors.emplace_back(std::move(p), e);
  }
  return factors;
}

template <class Field>
TrialReport gcd_lemma_suite(std::size_t trials, std::uint64_t seed, const Field& field) {
  using S = typename Field::scalar_type;
  auto report = detail::empty_report("gcd-lemma", field, seed, trials);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    auto factors = random_factorization(field, rng);
    auto out = gcd_lemma_outcome<S>(factors);
    if (!out.holds) {
      ++report.failures;
      report.witnesses.push_back({to_string(out.product), out.product.nvars(), "", out.gcd.degree()});
    }
  }
  return report;
}

// Linearly independent forms f_0..f_n of degree d with gcd 1, resampled
// until the hypotheses hold.
template <class Field>
std::vector<Form<typename Field::scalar_type>> random_coprime_tuple(std::size_t nvars, unsigned degree,
                                                                    const Field& field, Rng& rng) {
  using S = typename Field::scalar_type;
  const std::size_t total = monomial_count(nvars, degree);
  while (true) {
    std::vector<Form<S>> forms;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (rng() & 1) {
        forms.push_back(random_dense_form(nvars, degree, field, rng));
      } else {
        std::uniform_int_distribution<std::size_t> support(2, total);
        forms.push_back(random_sparse_form(nvars, degree, support(rng), field, rng));
      }
    }
    bool nonzero = std::none_of(forms.begin(), forms.end(), [](const auto& f) { return f.is_zero(); });
    if (nonzero && span_rank<S>(forms) == nvars && gcd_forms<S>(forms).degree() == 0) return forms;
  }
}

template <class Field>
TrialReport divisibility_suite(std::size_t trials, std::uint64_t seed, const Field& field) {
  using S = typename Field::scalar_type;
  auto report = detail::empty_report("divisibility", field, seed, trials);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    std::size_t nvars = 3 + static_cast<std::size_t>(rng() % 2);
    unsigned degree = 2 + static_cast<unsigned>(rng() % 2);
    auto forms = random_coprime_tuple(nvars, degree, field, rng);
    auto h = random_linear_form(nvars, field, rng);
    std::size_t rank = divisibility_rank<S>(forms, h);
    if (rank != nvars) {
      std::vector<std::string> text;
      for (const auto& f : forms) text.push_back(to_string(f));
      report.failures += 1;
      report.witnesses.push_back({detail::join_forms(text), nvars, h.to_string(), static_cast<long long>(rank)});
    }
  }
  return report;
}

// Recomputes every witness; true when each reproduces its observed value.
template <class Field>
bool replay_witnesses(const TrialReport& report, const Field& field) {
  using S = typename Field::scalar_type;
  for (const auto& w : report.witnesses) {
    long long observed = -1;
    if (report.suite == "theorem-n") {
      auto f = parse_form(w.form, w.nvars, field);
      auto r = restrict_mod(f, parse_linear_form(w.linear_form, field));
      observed = r.is_zero() ? 0 : static_cast<long long>(codimension(r));
    } else if (report.suite == "gcd-lemma") {
      auto f = parse_form(w.form, w.nvars, field);
      std::vector<Form<S>> partials;
      for (std::size_t i = 0; i < f.nvars(); ++i) partials.push_back(partial(f, i));
      observed = gcd_forms<S>(partials).degree();
    } else if (report.suite == "divisibility") {
      auto h = parse_linear_form(w.linear_form, field);
      std::vector<Form<S>> restricted;
      for (const auto& text : detail::split_forms(w.form)) {
        restricted.push_back(restrict_mod(parse_form(text, w.nvars, field), h));
      }
      observed = static_cast<long long>(span_rank<S>(restricted));
    } else {
      return false;
    }
    if (observed != w.observed) return false;
  }
  return true;
}

}  // namespace apolar
