#pragma once

// Seeded random generation of scalars, linear forms and forms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "apolar/form.hpp"

namespace apolar {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream for trial `index` of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

inline Rng trial_rng(std::uint64_t seed, std::uint64_t index) { return Rng(derive_seed(seed, index)); }

// Every monomial of the given degree with an independent uniform coefficient.
template <class Field>
Form<typename Field::scalar_type> random_dense_form(std::size_t nvars, unsigned degree, const Field& field, Rng& rng) {
  using S = typename Field::scalar_type;
  std::vector<Term<S>> terms;
  for (const auto& m : monomials_of_degree(nvars, degree)) terms.push_back({m, random_scalar(field, rng)});
  return Form<S>::from_terms(nvars, field, std::move(terms), degree);
}

// Random nonzero coefficients on a uniformly chosen set of `support` monomials.
template <class Field>
Form<typename Field::scalar_type> random_sparse_form(std::size_t nvars, unsigned degree, std::size_t support,
                                                     const Field& field, Rng& rng) {
  using S = typename Field::scalar_type;
  auto all = monomials_of_degree(nvars, degree);
  support = std::min(support, all.size());
  std::vector<std::size_t> idx(all.size());
  std::iota(idx.begin(), idx.end(), 0);
  // Partial Fisher-Yates; keeps the draw independent of the library's shuffle.
  for (std::size_t i = 0; i < support; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  std::vector<Term<S>> terms;
  for (std::size_t i = 0; i < support; ++i) terms.push_back({all[idx[i]], random_nonzero_scalar(field, rng)});
  return Form<S>::from_terms(nvars, field, std::move(terms), degree);
}

// Random coefficients on the first `count` monomials in graded-lex order.
template <class Field>
Form<typename Field::scalar_type> random_prefix_form(std::size_t nvars, unsigned degree, std::size_t count,
                                                     const Field& field, Rng& rng) {
  using S = typename Field::scalar_type;
  auto all = monomials_of_degree(nvars, degree);
  count = std::min(count, all.size());
  std::vector<Term<S>> terms;
  for (std::size_t i = 0; i < count; ++i) terms.push_back({all[i], random_nonzero_scalar(field, rng)});
  return Form<S>::from_terms(nvars, field, std::move(terms), degree);
}

// Linear form with uniform coefficients, resampled until nonzero.
template <class Field>
Form<typename Field::scalar_type> random_linear(std::size_t nvars, const Field& field, Rng& rng) {
  using S = typename Field::scalar_type;
  while (true) {
    std::vector<Term<S>> terms;
    for (std::size_t i = 0; i < nvars; ++i) terms.push_back({Monomial::variable(nvars, i), random_scalar(field, rng)});
    auto f = Form<S>::from_terms(nvars, field, std::move(terms), 1);
    if (!f.is_zero()) return f;
  }
}

}  // namespace apolar
