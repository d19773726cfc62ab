#pragma once

// Searches for forms realizing small or prescribed h_2.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apolar/bounds.hpp"
#include "apolar/constructions.hpp"
#include "apolar/form_io.hpp"
#include "apolar/hilbert.hpp"

namespace apolar {

namespace detail {

inline FieldSpec spec_of(const RationalField&) { return FieldSpec{0}; }
inline FieldSpec spec_of(const PrimeField& f) { return FieldSpec{f.modulus}; }

inline void check_search_degree(unsigned e) {
  if (e != 4 && e != 5) throw UnsupportedSocleDegree("e = " + std::to_string(e) + "; expected 4 or 5");
}

// (1, r, a, r, 1) for e = 4, (1, r, a, a, r, 1) for e = 5.
inline HilbertFunction target_hf(unsigned e, std::size_t r, std::size_t a) {
  if (e == 4) return HilbertFunction({1, r, a, r, 1});
  return HilbertFunction({1, r, a, a, r, 1});
}

}  // namespace detail

// Smallest verified h_2 over the portfolio: power sum, bipartite forms padded
// to codimension r (sweeping m), then `budget` random sparse forms whose
// support shrinks from dense to r terms. Ties go to the sparser certificate.
// Throws BudgetZero, UnsupportedSocleDegree.
template <class Field>
FBoundEntry f_upper_bound(unsigned e, std::size_t r, std::size_t budget, std::uint64_t seed, const Field& field) {
  using S = typename Field::scalar_type;
  detail::check_search_degree(e);
  if (r == 0) throw InvalidArgument("codimension must be at least 1");
  if (budget == 0) throw BudgetZero("search needs at least one trial");

  std::optional<Form<S>> best;
  std::size_t best_h2 = 0;
  std::string best_strategy;
  auto offer = [&](const Form<S>& f, const std::string& strategy) {
    if (f.nvars() != r || f.is_zero() || codimension(f) != r) return;
    std::size_t h2 = hilbert_entry(f, 2);
    bool better = !best || h2 < best_h2 || (h2 == best_h2 && f.size() < best->size());
    if (!better) return;
    auto hf = hilbert_function(f);
    if (hf != detail::target_hf(e, r, h2)) return;
    best = f;
    best_h2 = h2;
    best_strategy = strategy;
  };

  offer(power_sum_form(r, e, field), "power-sum");
  for (unsigned m = 1; bipartite_codimension(m, e) <= r; ++m) {
    std::size_t extra = r - bipartite_codimension(m, e);
    offer(padded_form(bipartite_monomial_form(m, e, field), extra),
          "bipartite(m=" + std::to_string(m) + ")+pad(" + std::to_string(extra) + ")");
  }
  const std::size_t total = monomial_count(r, e);
  const std::size_t widest = std::min<std::size_t>(total, 3 * monomial_count(r, 2));
  for (std::size_t t = 0; t < budget; ++t) {
    Rng rng = trial_rng(seed, t);
    std::size_t support = budget == 1 ? widest : widest - t * (widest - std::min(widest, r)) / (budget - 1);
    offer(random_sparse_form(r, e, support, field, rng), "random-sparse(" + std::to_string(support) + ")");
  }

  FBoundEntry entry;
  entry.e = e;
  entry.r = r;
  entry.upper = best_h2;
  entry.exact = known_f(e, r) == best_h2;
  entry.certificate = to_string(*best);
  entry.field = detail::spec_of(field);
  entry.seed = seed;
  entry.strategy = best_strategy;
  return entry;
}

template <FieldScalar S>
struct Certificate {
  Form<S> form;
  std::string strategy;
};

template <FieldScalar S>
struct Realization {
  unsigned e = 4;
  std::size_t r = 0;
  std::map<std::size_t, Certificate<S>> certificates;  // keyed by a = h_2
  std::vector<std::size_t> gaps;                       // values of a left unrealized
};

// For every a in [f_e(r), C(r+1,2)], a form with HF (1,r,a,r,1) (e = 4) or
// (1,r,a,a,r,1) (e = 5), each verified by exact rank. Seeds of codimension s
// (power sum, bipartite, sums of k general powers) are padded with r - s
// power-sum variables, sweeping s upward; leftover values are attempted with
// random forms on graded-lex monomial prefixes. Unrealized values land in
// `gaps`. Throws PreconditionViolated when f_e(r) is not known exactly.
template <class Field>
Realization<typename Field::scalar_type> realize_interval(unsigned e, std::size_t r, std::uint64_t seed,
                                                          const Field& field, std::size_t budget = 8) {
  using S = typename Field::scalar_type;
  detail::check_search_degree(e);
  auto lower = known_f(e, r);
  if (!lower || r == 0) {
    throw PreconditionViolated("f_" + std::to_string(e) + "(" + std::to_string(r) + ") is not known exactly");
  }
  const std::size_t hi = monomial_count(r, 2);

  Realization<S> out;
  out.e = e;
  out.r = r;

  // Bipartite seeds by codimension, with their verified h_2.
  std::map<std::size_t, std::pair<unsigned, std::size_t>> bipartite;
  for (unsigned m = 1; bipartite_codimension(m, e) <= r; ++m) {
    auto hf = hilbert_function(bipartite_monomial_form(m, e, field));
    bipartite[bipartite_codimension(m, e)] = {m, hf[2]};
  }

  auto accept = [&](std::size_t a, Form<S> f, std::string strategy) {
    if (hilbert_function(f) != detail::target_hf(e, r, a)) return false;
    out.certificates.emplace(a, Certificate<S>{std::move(f), std::move(strategy)});
    return true;
  };

  for (std::size_t a = *lower; a <= hi; ++a) {
    Rng rng = trial_rng(seed, a);
    bool done = false;
    for (std::size_t s = 1; s <= r && !done; ++s) {
      const std::size_t pad = r - s;
      if (a < pad) continue;
      const std::size_t b = a - pad;  // h_2 the seed must have
      const std::string suffix = pad ? "+pad(" + std::to_string(pad) + ")" : "";
      if (b == s) {
        done = accept(a, power_sum_form(r, e, field), "power-sum");
        continue;
      }
      if (auto it = bipartite.find(s); it != bipartite.end() && it->second.second == b) {
        done = accept(a, padded_form(bipartite_monomial_form(it->second.first, e, field), pad),
                      "bipartite(m=" + std::to_string(it->second.first) + ")" + suffix);
        if (done) continue;
      }
      if (b > s && b <= monomial_count(s, 2)) {
        for (std::size_t attempt = 0; attempt < budget && !done; ++attempt) {
          done = accept(a, padded_form(waring_form(s, b, e, field, rng), pad),
                        "waring(s=" + std::to_string(s) + ",k=" + std::to_string(b) + ")" + suffix);
        }
      }
    }
    if (!done) out.gaps.push_back(a);
  }

  if (!out.gaps.empty()) {
    const std::size_t total = monomial_count(r, e);
    for (std::size_t t = 0; t < 32 * budget && !out.gaps.empty(); ++t) {
      Rng rng = trial_rng(seed ^ 0x5bd1e995ULL, t);
      std::size_t count = 1 + (t * 37) % total;
      Form<S> f = power_sum_form(r, e, field) + random_prefix_form(r, e, count, field, rng);
      if (f.is_zero()) continue;
      auto hf = hilbert_function(f);
      if (hf[1] != r) continue;
      std::size_t a = hf[2];
      auto gap = std::find(out.gaps.begin(), out.gaps.end(), a);
      if (gap == out.gaps.end() || hf != detail::target_hf(e, r, a)) continue;
      out.certificates.emplace(a, Certificate<S>{f, "prefix(" + std::to_string(count) + ")"});
      out.gaps.erase(gap);
    }
  }
  return out;
}

}  // namespace apolar
