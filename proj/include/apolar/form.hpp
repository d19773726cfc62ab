#pragma once

// Sparse homogeneous polynomials over an exact field.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apolar/errors.hpp"
#include "apolar/field.hpp"
#include "apolar/monomial.hpp"

namespace apolar {

template <FieldScalar S>
struct Term {
  Monomial monomial;
  S coefficient;
};

namespace detail {

inline bool is_negative(const Rational& c) { return sgn(c.value()) < 0; }
inline bool is_negative(const ModP&) { return false; }

// Sorts graded-lex descending, merges equal monomials, drops zeros.
template <FieldScalar S>
void canonicalize(std::vector<Term<S>>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term<S>& a, const Term<S>& b) { return a.monomial > b.monomial; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term<S> acc = std::move(terms[i]);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].monomial == acc.monomial; ++j) acc.coefficient += terms[j].coefficient;
    if (!acc.coefficient.is_zero()) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

}  // namespace detail

// Homogeneous form in a fixed number of ambient variables. Terms are kept
// graded-lex descending with nonzero coefficients. The zero form carries a
// conventional degree that does not constrain arithmetic.
template <FieldScalar S>
class Form {
 public:
  using scalar_type = S;
  using field_type = FieldOf<S>;
  using term_type = Term<S>;

  Form() = default;

  // Zero form.
  Form(std::size_t nvars, unsigned degree, field_type field = {})
      : nvars_(nvars), degree_(degree), field_(field) {
    if (nvars > kMaxVariables) throw InvalidArgument("at most 64 variables are supported");
  }

  // Throws NotHomogeneous if the nonzero terms have unequal degrees.
  static Form from_terms(std::size_t nvars, field_type field, std::vector<term_type> terms,
                         unsigned degree_if_zero = 0) {
    Form f(nvars, degree_if_zero, field);
    for (const auto& t : terms) {
      if (t.monomial.nvars() != nvars) throw MixedRings("term in the wrong number of variables");
    }
    detail::canonicalize(terms);
    if (!terms.empty()) {
      f.degree_ = terms.front().monomial.degree();
      for (const auto& t : terms) {
        if (t.monomial.degree() != f.degree_) throw NotHomogeneous("terms of degree " +
                                                                   std::to_string(f.degree_) + " and " +
                                                                   std::to_string(t.monomial.degree()));
      }
    }
    f.terms_ = std::move(terms);
    return f;
  }

  static Form monomial(const Monomial& m, const S& c) {
    Form f(m.nvars(), m.degree(), c.field());
    if (!c.is_zero()) f.terms_.push_back({m, c});
    return f;
  }

  static Form constant(std::size_t nvars, const S& c) { return monomial(Monomial(nvars), c); }

  static Form variable(std::size_t nvars, std::size_t i, const field_type& field) {
    return monomial(Monomial::variable(nvars, i), one_of(field));
  }

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }
  const field_type& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const term_type> terms() const noexcept { return terms_; }

  // Greatest term under graded-lex.
  const term_type& leading_term() const {
    if (terms_.empty()) throw ZeroForm("zero form has no leading term");
    return terms_.front();
  }

  S coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const term_type& t, const Monomial& key) { return t.monomial > key; });
    if (it != terms_.end() && it->monomial == m) return it->coefficient;
    return zero_of(field_);
  }

  // Variables that occur with positive exponent.
  std::vector<bool> support() const {
    std::vector<bool> used(nvars_, false);
    for (const auto& t : terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) used[i] = used[i] || t.monomial[i] > 0;
    }
    return used;
  }

  Form operator-() const {
    Form r = *this;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
  }

  Form& operator+=(const Form& o) { return *this = combine(*this, o, false); }
  Form& operator-=(const Form& o) { return *this = combine(*this, o, true); }

  Form& operator*=(const S& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.coefficient *= c;
    return *this;
  }

  friend Form operator+(const Form& a, const Form& b) { return combine(a, b, false); }
  friend Form operator-(const Form& a, const Form& b) { return combine(a, b, true); }
  friend Form operator*(Form a, const S& c) { return a *= c; }
  friend Form operator*(const S& c, Form a) { return a *= c; }

  friend Form operator*(const Form& a, const Form& b) {
    check_same_ring(a, b);
    Form r(a.nvars_, a.degree_ + b.degree_, a.field_);
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<term_type> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
    }
    detail::canonicalize(prod);
    r.terms_ = std::move(prod);
    return r;
  }

  friend bool operator==(const Form& a, const Form& b) {
    if (a.nvars_ != b.nvars_ || !(a.field_ == b.field_) || a.terms_.size() != b.terms_.size()) return false;
    if (!a.is_zero() && a.degree_ != b.degree_) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
          !(a.terms_[i].coefficient == b.terms_[i].coefficient)) {
        return false;
      }
    }
    return true;
  }

  // Throws MixedRings / MixedFields when a and b live in different rings.
  static void check_same_ring(const Form& a, const Form& b) {
    if (a.nvars_ != b.nvars_) {
      throw MixedRings(std::to_string(a.nvars_) + " vs " + std::to_string(b.nvars_) + " variables");
    }
    if (!(a.field_ == b.field_)) throw MixedFields(a.field_.name() + " vs " + b.field_.name());
  }

  // Builds a form from terms already in canonical order; no checks.
  static Form from_sorted_terms(std::size_t nvars, unsigned degree, field_type field,
                                std::vector<term_type> terms) {
    Form f(nvars, degree, field);
    f.terms_ = std::move(terms);
    return f;
  }

 private:
  static Form combine(const Form& a, const Form& b, bool subtract) {
    check_same_ring(a, b);
    if (!a.is_zero() && !b.is_zero() && a.degree_ != b.degree_) {
      throw NotHomogeneous("adding forms of degree " + std::to_string(a.degree_) + " and " +
                           std::to_string(b.degree_));
    }
    Form r(a.nvars_, a.is_zero() ? b.degree_ : a.degree_, a.field_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    auto push_b = [&](const term_type& t) {
      r.terms_.push_back(subtract ? term_type{t.monomial, -t.coefficient} : t);
    };
    while (i != a.terms_.end() && j != b.terms_.end()) {
      if (i->monomial > j->monomial) {
        r.terms_.push_back(*i++);
      } else if (j->monomial > i->monomial) {
        push_b(*j++);
      } else {
        S c = subtract ? i->coefficient - j->coefficient : i->coefficient + j->coefficient;
        if (!c.is_zero()) r.terms_.push_back({i->monomial, std::move(c)});
        ++i;
        ++j;
      }
    }
    for (; i != a.terms_.end(); ++i) r.terms_.push_back(*i);
    for (; j != b.terms_.end(); ++j) push_b(*j);
    return r;
  }

  std::size_t nvars_ = 0;
  unsigned degree_ = 0;
  field_type field_{};
  std::vector<term_type> terms_;
};

template <FieldScalar S>
Form<S> pow(const Form<S>& f, unsigned k) {
  Form<S> r = Form<S>::constant(f.nvars(), one_of(f.field()));
  Form<S> base = f;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

// Formal partial derivative with respect to y_i.
template <FieldScalar S>
Form<S> partial(const Form<S>& f, std::size_t i) {
  if (i >= f.nvars()) {
    throw IndexOutOfRange("y" + std::to_string(i) + " in a ring of " + std::to_string(f.nvars()) + " variables");
  }
  std::vector<Term<S>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    unsigned e = t.monomial[i];
    if (e == 0) continue;
    S c = t.coefficient * f.field().from_int(e);
    if (c.is_zero()) continue;
    Monomial m = t.monomial;
    m.set(i, e - 1);
    out.push_back({m, std::move(c)});
  }
  // Lowering one fixed exponent preserves graded-lex order.
  return Form<S>::from_sorted_terms(f.nvars(), f.degree() == 0 ? 0 : f.degree() - 1, f.field(), std::move(out));
}

// D ∘ F: differentiate F by the operator monomial D (x^D acts as ∂^D).
template <FieldScalar S>
Form<S> apply_operator(const Monomial& op, const Form<S>& f) {
  if (op.nvars() != f.nvars()) {
    throw MixedRings("operator in " + std::to_string(op.nvars()) + " variables, form in " +
                     std::to_string(f.nvars()));
  }
  unsigned degree = op.degree() <= f.degree() ? f.degree() - op.degree() : 0;
  std::vector<Term<S>> out;
  for (const auto& t : f.terms()) {
    if (!op.divides(t.monomial)) continue;
    S c = t.coefficient;
    for (std::size_t v = 0; v < f.nvars(); ++v) {
      for (unsigned k = 0; k < op[v]; ++k) c *= f.field().from_int(t.monomial[v] - k);
    }
    if (c.is_zero()) continue;
    out.push_back({t.monomial / op, std::move(c)});
  }
  return Form<S>::from_sorted_terms(f.nvars(), degree, f.field(), std::move(out));
}

// Exact quotient a / b, or nullopt when b does not divide a.
template <FieldScalar S>
std::optional<Form<S>> exact_divide(const Form<S>& a, const Form<S>& b) {
  Form<S>::check_same_ring(a, b);
  if (b.is_zero()) throw DivisionByZero("division by the zero form");
  if (a.is_zero()) return Form<S>(a.nvars(), a.degree() >= b.degree() ? a.degree() - b.degree() : 0, a.field());
  if (a.degree() < b.degree()) return std::nullopt;
  const auto& lead = b.leading_term();
  S lead_inv = lead.coefficient.inv();
  std::vector<Term<S>> quotient;
  Form<S> rem = a;
  while (!rem.is_zero()) {
    const auto& t = rem.leading_term();
    if (!lead.monomial.divides(t.monomial)) return std::nullopt;
    Term<S> q{t.monomial / lead.monomial, t.coefficient * lead_inv};
    rem -= Form<S>::monomial(q.monomial, q.coefficient) * b;
    quotient.push_back(std::move(q));
  }
  return Form<S>::from_sorted_terms(a.nvars(), a.degree() - b.degree(), a.field(), std::move(quotient));
}

// Scales f so its graded-lex leading coefficient is 1; zero stays zero.
template <FieldScalar S>
Form<S> monic(const Form<S>& f) {
  if (f.is_zero()) return f;
  return f * f.leading_term().coefficient.inv();
}

// Same form in nvars variables, y_i renamed to y_{offset+i}.
template <FieldScalar S>
Form<S> embed(const Form<S>& f, std::size_t nvars, std::size_t offset = 0) {
  std::vector<Term<S>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.monomial.embedded(nvars, offset), t.coefficient});
  return Form<S>::from_sorted_terms(nvars, f.degree(), f.field(), std::move(out));
}

// Removes y_i from the ring; f must not involve y_i.
template <FieldScalar S>
Form<S> drop_variable(const Form<S>& f, std::size_t i) {
  if (i >= f.nvars()) throw IndexOutOfRange("y" + std::to_string(i));
  std::vector<Term<S>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (t.monomial[i] != 0) throw InvalidArgument("form still involves y" + std::to_string(i));
    out.push_back({t.monomial.without(i), t.coefficient});
  }
  return Form<S>::from_sorted_terms(f.nvars() - 1, f.degree(), f.field(), std::move(out));
}

// Canonical text: graded-lex descending, coefficient 1 suppressed.
template <FieldScalar S>
std::string to_string(const Form<S>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool neg = detail::is_negative(t.coefficient);
    S mag = neg ? -t.coefficient : t.coefficient;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += t.monomial.to_string();
    } else {
      out += mag.to_string() + '*' + t.monomial.to_string();
    }
  }
  return out;
}

template <FieldScalar S>
std::ostream& operator<<(std::ostream& os, const Form<S>& f) {
  return os << to_string(f);
}

}  // namespace apolar
