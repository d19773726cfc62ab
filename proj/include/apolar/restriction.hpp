#pragma once

// Restriction of forms modulo a linear form, F -> F^H, and randomized checks
// of the statements that drive the codimension descent.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apolar/form_io.hpp"
#include "apolar/gcd.hpp"
#include "apolar/hilbert.hpp"
#include "apolar/random_forms.hpp"
#include "apolar/trial_report.hpp"

namespace apolar {

// H = a_0 y_0 + ... + a_n y_n with a distinguished pivot a_pivot != 0.
template <FieldScalar S>
class LinearForm {
 public:
  // Pivot defaults to the last nonzero coefficient. Throws InvalidArgument
  // for an empty or all-zero vector, or a pivot with zero coefficient.
  explicit LinearForm(std::vector<S> coefficients) : coefficients_(std::move(coefficients)) {
    pivot_ = coefficients_.size();
    for (std::size_t i = coefficients_.size(); i-- > 0;) {
      if (!coefficients_[i].is_zero()) {
        pivot_ = i;
        break;
      }
    }
    if (pivot_ == coefficients_.size()) throw InvalidArgument("linear form with no nonzero coefficient");
  }

  LinearForm(std::vector<S> coefficients, std::size_t pivot) : LinearForm(std::move(coefficients)) {
    if (pivot >= coefficients_.size() || coefficients_[pivot].is_zero()) {
      throw InvalidArgument("pivot y" + std::to_string(pivot) + " has zero coefficient");
    }
    pivot_ = pivot;
  }

  std::size_t nvars() const noexcept { return coefficients_.size(); }
  std::size_t pivot() const noexcept { return pivot_; }
  const std::vector<S>& coefficients() const noexcept { return coefficients_; }
  const S& operator[](std::size_t i) const { return coefficients_.at(i); }

  Form<S> as_form() const {
    std::vector<Term<S>> terms;
    for (std::size_t i = 0; i < nvars(); ++i) terms.push_back({Monomial::variable(nvars(), i), coefficients_[i]});
    return Form<S>::from_terms(nvars(), coefficients_[pivot_].field(), std::move(terms), 1);
  }

  // "a0,a1,...,an"
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < nvars(); ++i) out += (i ? "," : "") + coefficients_[i].to_string();
    return out;
  }

 private:
  std::vector<S> coefficients_;
  std::size_t pivot_ = 0;
};

// Parses "a0,a1,...". Throws InvalidArgument.
template <class Field>
LinearForm<typename Field::scalar_type> parse_linear_form(std::string_view text, const Field& field) {
  std::vector<typename Field::scalar_type> coefficients;
  while (true) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    coefficients.push_back(parse_scalar(item, field));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return LinearForm<typename Field::scalar_type>(std::move(coefficients));
}

// Uniform coefficients, resampled until not all zero.
template <class Field>
LinearForm<typename Field::scalar_type> random_linear_form(std::size_t nvars, const Field& field, Rng& rng) {
  if (nvars == 0) throw InvalidArgument("linear form over an empty set of variables");
  while (true) {
    std::vector<typename Field::scalar_type> c;
    c.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) c.push_back(random_scalar(field, rng));
    bool nonzero = std::any_of(c.begin(), c.end(), [](const auto& x) { return !x.is_zero(); });
    if (nonzero) return LinearForm<typename Field::scalar_type>(std::move(c));
  }
}

// Image of F in S/(H): substitutes y_pivot = -a_pivot^{-1} * sum_{i != pivot} a_i y_i
// and removes y_pivot, so the result lives in one variable fewer.
template <FieldScalar S>
Form<S> restrict_mod(const Form<S>& f, const LinearForm<S>& h) {
  if (h.nvars() != f.nvars()) {
    throw MixedRings("linear form in " + std::to_string(h.nvars()) + " variables, form in " +
                     std::to_string(f.nvars()));
  }
  const std::size_t p = h.pivot();
  const S scale = -h[p].inv();
  std::vector<Term<S>> lin;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    if (i != p && !h[i].is_zero()) lin.push_back({Monomial::variable(f.nvars(), i), h[i] * scale});
  }
  const Form<S> replacement = Form<S>::from_terms(f.nvars(), f.field(), std::move(lin), 1);

  auto parts = detail::split(f, p);
  Form<S> out(f.nvars(), f.degree(), f.field());
  Form<S> power = Form<S>::constant(f.nvars(), one_of(f.field()));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) power = power * replacement;
    if (!parts[k].is_zero()) out += parts[k] * power;
  }
  Form<S> reduced = drop_variable(out, p);
  if (reduced.is_zero()) return Form<S>(f.nvars() - 1, f.degree(), f.field());
  return reduced;
}

// Dimension of the span of forms of a common degree.
template <FieldScalar S>
std::size_t span_rank(std::span<const Form<S>> forms) {
  if (forms.empty()) return 0;
  std::vector<Monomial> cols;
  for (const auto& f : forms) {
    for (const auto& t : f.terms()) cols.push_back(t.monomial);
  }
  std::sort(cols.begin(), cols.end(), std::greater<>());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  if (cols.empty()) return 0;
  DenseMatrix<S> m = DenseMatrix<S>::Constant(Eigen::Index(forms.size()), Eigen::Index(cols.size()),
                                              zero_of(forms.front().field()));
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (const auto& t : forms[i].terms()) {
      auto j = std::lower_bound(cols.begin(), cols.end(), t.monomial, std::greater<>()) - cols.begin();
      m(Eigen::Index(i), Eigen::Index(j)) = t.coefficient;
    }
  }
  return exact_rank(m);
}

// Checks h_1(F^H) = n for `trials` random H, where F has codimension n+1
// equal to its number of variables. Trial t draws H from trial_rng(seed, t).
// Throws HypothesisViolated unless codim F = nvars >= 3 and deg F >= 3.
template <FieldScalar S>
TrialReport theorem_n_check(const Form<S>& f, std::size_t trials, std::uint64_t seed) {
  if (f.is_zero() || f.degree() < 3) throw HypothesisViolated("socle degree must be at least 3");
  const std::size_t r = codimension(f);
  if (r != f.nvars() || r < 3) {
    throw HypothesisViolated("codimension " + std::to_string(r) + " in " + std::to_string(f.nvars()) +
                             " variables; need codimension = variables >= 3");
  }
  TrialReport report;
  report.suite = "theorem-n";
  report.field = f.field().name();
  report.modulus = f.field().characteristic();
  report.seed = seed;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    auto h = random_linear_form(f.nvars(), f.field(), rng);
    auto restricted = restrict_mod(f, h);
    std::size_t observed = restricted.is_zero() ? 0 : codimension(restricted);
    if (observed != r - 1) {
      ++report.failures;
      report.witnesses.push_back({to_string(f), f.nvars(), h.to_string(), static_cast<long long>(observed)});
    }
  }
  return report;
}

// Rank of {f_i^H}; full rank n+1 means no nonzero combination of the f_i is
// divisible by H. Throws PreconditionViolated naming the failed hypothesis.
template <FieldScalar S>
std::size_t divisibility_rank(std::span<const Form<S>> forms, const LinearForm<S>& h) {
  if (forms.size() < 3) throw PreconditionViolated("n < 2: need at least 3 forms");
  const auto& first = forms.front();
  if (forms.size() != first.nvars()) {
    throw PreconditionViolated("count: " + std::to_string(forms.size()) + " forms in " +
                               std::to_string(first.nvars()) + " variables");
  }
  for (const auto& f : forms) {
    Form<S>::check_same_ring(first, f);
    if (f.is_zero() || f.degree() != first.degree() || f.degree() < 2) {
      throw PreconditionViolated("degree: forms must be nonzero of one common degree d > 1");
    }
  }
  if (span_rank(forms) != forms.size()) throw PreconditionViolated("independence: forms are linearly dependent");
  if (gcd_forms(forms).degree() != 0) throw PreconditionViolated("gcd: forms have a common factor");
  std::vector<Form<S>> restricted;
  restricted.reserve(forms.size());
  for (const auto& f : forms) restricted.push_back(restrict_mod(f, h));
  return span_rank<S>(restricted);
}

template <FieldScalar S>
struct GcdLemmaOutcome {
  bool holds = false;
  Form<S> product;   // F = prod p_j^{e_j}
  Form<S> expected;  // prod p_j^{e_j - 1}, monic
  Form<S> gcd;       // gcd of all partials of F, monic
};

// Compares gcd(∂_0 F, ..., ∂_n F) with prod p_j^{e_j - 1} up to a scalar.
// Irreducibility of the p_j is the caller's responsibility.
template <FieldScalar S>
GcdLemmaOutcome<S> gcd_lemma_outcome(std::span<const std::pair<Form<S>, unsigned>> factors) {
  if (factors.empty()) throw EmptyFactorList("no factors given");
  const auto& p0 = factors.front().first;
  GcdLemmaOutcome<S> out;
  out.product = Form<S>::constant(p0.nvars(), one_of(p0.field()));
  out.expected = out.product;
  for (const auto& [p, e] : factors) {
    if (e == 0) throw InvalidArgument("multiplicity must be at least 1");
    if (p.is_zero()) throw ZeroForm("zero factor");
    out.product = out.product * pow(p, e);
    out.expected = out.expected * pow(p, e - 1);
  }
  if (out.product.degree() == 0) throw InvalidArgument("product of factors is constant");
  std::vector<Form<S>> partials;
  for (std::size_t i = 0; i < out.product.nvars(); ++i) partials.push_back(partial(out.product, i));
  out.gcd = gcd_forms<S>(partials);
  out.expected = monic(out.expected);
  out.holds = out.gcd == out.expected;
  return out;
}

template <FieldScalar S>
bool gcd_lemma_check(std::span<const std::pair<Form<S>, unsigned>> factors) {
  return gcd_lemma_outcome(factors).holds;
}

}  // namespace apolar
