#pragma once

#include <unordered_map>
#include <vector>

#include "apolar/eigen_support.hpp"
#include "apolar/form.hpp"
#include "apolar/rank.hpp"

namespace apolar {

// Matrix of the pairing (degree-i operators) x (degree e-i monomials):
// entry(D, m) is the coefficient of m in D ∘ F.
template <FieldScalar S>
struct Catalecticant {
  unsigned order = 0;
  unsigned form_degree = 0;
  std::vector<Monomial> operators;
  std::vector<Monomial> monomials;
  DenseMatrix<S> entries;

  std::size_t rank() const { return exact_rank(entries); }
};

namespace detail {

inline void check_characteristic(std::uint64_t characteristic, unsigned degree) {
  if (characteristic != 0 && characteristic <= degree) {
    throw InvalidArgument("characteristic " + std::to_string(characteristic) + " does not exceed degree " +
                          std::to_string(degree));
  }
}

// Calls visit(D) for every D | m with deg D == order.
template <class Visit>
void for_each_divisor(const Monomial& m, unsigned order, Visit&& visit) {
  Monomial d(m.nvars());
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (left == 0) {
      visit(d);
      return;
    }
    if (i == m.nvars()) return;
    unsigned top = std::min(left, m[i]);
    for (unsigned e = top + 1; e-- > 0;) {
      d.set(i, e);
      self(self, i + 1, left - e);
    }
    d.set(i, 0);
  };
  rec(rec, 0, order);
}

}  // namespace detail

// Throws DegreeOutOfRange unless 0 <= order <= deg F.
template <FieldScalar S>
Catalecticant<S> catalecticant(const Form<S>& f, unsigned order) {
  if (order > f.degree()) {
    throw DegreeOutOfRange("order " + std::to_string(order) + " exceeds degree " + std::to_string(f.degree()));
  }
  detail::check_characteristic(f.field().characteristic(), f.degree());
  Catalecticant<S> cat;
  cat.order = order;
  cat.form_degree = f.degree();
  cat.operators = monomials_of_degree(f.nvars(), order);
  cat.monomials = monomials_of_degree(f.nvars(), f.degree() - order);

  std::unordered_map<Monomial, Eigen::Index, MonomialHash> row_of, col_of;
  for (std::size_t i = 0; i < cat.operators.size(); ++i) row_of.emplace(cat.operators[i], Eigen::Index(i));
  for (std::size_t j = 0; j < cat.monomials.size(); ++j) col_of.emplace(cat.monomials[j], Eigen::Index(j));

  const auto zero = zero_of(f.field());
  cat.entries = DenseMatrix<S>::Constant(Eigen::Index(cat.operators.size()), Eigen::Index(cat.monomials.size()), zero);
  for (const auto& t : f.terms()) {
    detail::for_each_divisor(t.monomial, order, [&](const Monomial& d) {
      S c = t.coefficient;
      for (std::size_t v = 0; v < d.nvars(); ++v) {
        for (unsigned k = 0; k < d[v]; ++k) c *= f.field().from_int(t.monomial[v] - k);
      }
      cat.entries(row_of.at(d), col_of.at(t.monomial / d)) += c;
    });
  }
  return cat;
}

}  // namespace apolar
