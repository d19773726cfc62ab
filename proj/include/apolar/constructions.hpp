#pragma once

// Explicit forms with controlled Hilbert functions.

#include "apolar/form.hpp"
#include "apolar/monomial.hpp"
#include "apolar/random_forms.hpp"

namespace apolar {

// y_0^e + ... + y_{r-1}^e, Hilbert function (1, r, ..., r, 1).
template <class Field>
Form<typename Field::scalar_type> power_sum_form(std::size_t r, unsigned e, const Field& field) {
  using S = typename Field::scalar_type;
  if (r == 0) throw InvalidArgument("power sum needs r >= 1");
  if (e < 2) throw InvalidArgument("power sum needs e >= 2");
  std::vector<Term<S>> terms;
  for (std::size_t i = 0; i < r; ++i) terms.push_back({Monomial::variable(r, i, e), one_of(field)});
  return Form<S>::from_terms(r, field, std::move(terms), e);
}

// Number of variables of bipartite_monomial_form(m, e).
constexpr std::size_t bipartite_codimension(unsigned m, unsigned e) {
  return m + static_cast<std::size_t>(monomial_count(m, e - 1));
}

// F = sum_i x_i M_i where M_1, ..., M_s run over all monomials of degree e-1
// in y_0..y_{m-1}; x_i is variable y_{m+i}. For m = 3, e = 4 this has
// Hilbert function (1,13,12,13,1).
template <class Field>
Form<typename Field::scalar_type> bipartite_monomial_form(unsigned m, unsigned e, const Field& field) {
  using S = typename Field::scalar_type;
  if (m < 1) throw InvalidArgument("bipartite form needs m >= 1");
  if (e < 3) throw InvalidArgument("bipartite form needs e >= 3");
  const std::size_t nvars = bipartite_codimension(m, e);
  auto mons = monomials_of_degree(m, e - 1);
  std::vector<Term<S>> terms;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    Monomial t = mons[i].embedded(nvars, 0);
    t.set(m + i, 1);
    terms.push_back({t, one_of(field)});
  }
  return Form<S>::from_terms(nvars, field, std::move(terms), e);
}

// G + z_1^e + ... + z_extra^e in fresh variables appended after those of G;
// adds `extra` to every h_i with 0 < i < e.
template <FieldScalar S>
Form<S> padded_form(const Form<S>& g, std::size_t extra) {
  if (g.is_zero()) throw ZeroForm("padding the zero form");
  if (extra == 0) return g;
  const std::size_t nvars = g.nvars() + extra;
  Form<S> f = embed(g, nvars, 0);
  for (std::size_t j = 0; j < extra; ++j) {
    f += Form<S>::monomial(Monomial::variable(nvars, g.nvars() + j, g.degree()), one_of(g.field()));
  }
  return f;
}

// Sum of k e-th powers of random linear forms in s variables; for general
// choices and s <= k <= C(s+1,2) its h_2 equals k.
template <class Field>
Form<typename Field::scalar_type> waring_form(std::size_t s, std::size_t k, unsigned e, const Field& field,
                                              Rng& rng) {
  using S = typename Field::scalar_type;
  Form<S> f(s, e, field);
  for (std::size_t j = 0; j < k; ++j) f += pow(random_linear(s, field, rng), e);
  return f;
}

}  // namespace apolar
