#pragma once

// Multivariate gcd of forms: recursive content / primitive part, with a
// subresultant remainder sequence in the main variable when at most two
// variables occur, and a linear-algebra step otherwise. Every intermediate
// stays homogeneous, so the whole computation runs on Form.

#include <limits>
#include <span>
#include <unordered_map>
#include <vector>

#include "apolar/form.hpp"
#include "apolar/rank.hpp"

namespace apolar {

namespace detail {

// Coefficients of f viewed in R[v], R = k[other variables]; index = power of v.
template <FieldScalar S>
using UnivariateView = std::vector<Form<S>>;

template <FieldScalar S>
UnivariateView<S> split(const Form<S>& f, std::size_t v) {
  unsigned top = 0;
  for (const auto& t : f.terms()) top = std::max(top, t.monomial[v]);
  std::vector<std::vector<Term<S>>> buckets(top + 1);
  for (const auto& t : f.terms()) {
    Monomial m = t.monomial;
    unsigned k = m[v];
    m.set(v, 0);
    buckets[k].push_back({m, t.coefficient});
  }
  UnivariateView<S> out;
  out.reserve(buckets.size());
  for (unsigned k = 0; k <= top; ++k) {
    unsigned d = f.degree() >= k ? f.degree() - k : 0;
    out.push_back(Form<S>::from_sorted_terms(f.nvars(), d, f.field(), std::move(buckets[k])));
  }
  return out;
}

template <FieldScalar S>
Form<S> join(const UnivariateView<S>& u, std::size_t v, std::size_t nvars, const FieldOf<S>& field) {
  std::vector<Term<S>> terms;
  unsigned degree = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    for (const auto& t : u[k].terms()) {
      Monomial m = t.monomial;
      m.set(v, static_cast<unsigned>(k));
      degree = m.degree();
      terms.push_back({m, t.coefficient});
    }
  }
  return Form<S>::from_terms(nvars, field, std::move(terms), degree);
}

template <FieldScalar S>
void trim(UnivariateView<S>& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

// -1 for the zero polynomial.
template <FieldScalar S>
long deg(const UnivariateView<S>& u) {
  for (std::size_t k = u.size(); k-- > 0;) {
    if (!u[k].is_zero()) return static_cast<long>(k);
  }
  return -1;
}

template <FieldScalar S>
Form<S> exact_quotient(const Form<S>& a, const Form<S>& b) {
  auto q = exact_divide(a, b);
  if (!q) throw Error("internal: inexact division in gcd (" + to_string(a) + " / " + to_string(b) + ")");
  return *q;
}

template <FieldScalar S>
UnivariateView<S> divide_coefficients(UnivariateView<S> u, const Form<S>& c) {
  for (auto& x : u) x = exact_quotient(x, c);
  return u;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b, with deg a >= deg b >= 0.
template <FieldScalar S>
UnivariateView<S> pseudo_remainder(UnivariateView<S> r, const UnivariateView<S>& b) {
  const long db = deg(b);
  const Form<S>& lb = b[db];
  long e = deg(r) - db + 1;
  trim(r);
  while (!r.empty() && deg(r) >= db) {
    long dr = deg(r);
    long shift = dr - db;
    Form<S> lr = r[dr];
    for (auto& x : r) x = lb * x;
    for (long i = 0; i <= db; ++i) r[i + shift] -= lr * b[i];
    trim(r);
    --e;
  }
  if (e > 0) {
    Form<S> scale = pow(lb, static_cast<unsigned>(e));
    for (auto& x : r) x = scale * x;
  }
  return r;
}

template <FieldScalar S>
Form<S> gcd_pair(const Form<S>& a, const Form<S>& b);

template <FieldScalar S>
Form<S> content(const UnivariateView<S>& u) {
  Form<S> g;
  bool have = false;
  for (const auto& x : u) {
    if (x.is_zero()) continue;
    g = have ? gcd_pair(g, x) : x;
    have = true;
    if (g.degree() == 0) break;
  }
  return g;
}

template <FieldScalar S>
UnivariateView<S> primitive_part(const UnivariateView<S>& u) {
  return divide_coefficients(u, content(u));
}

// gcd of two primitive polynomials in R[v] (subresultant PRS).
template <FieldScalar S>
UnivariateView<S> subresultant_gcd(UnivariateView<S> a, UnivariateView<S> b, std::size_t nvars,
                                   const FieldOf<S>& field) {
  trim(a);
  trim(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  const Form<S> one = Form<S>::constant(nvars, one_of(field));
  Form<S> g = one;
  Form<S> h = one;
  while (true) {
    long delta = deg(a) - deg(b);
    UnivariateView<S> r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (deg(r) == 0) return {one};
    a = std::move(b);
    b = divide_coefficients(std::move(r), g * pow(h, static_cast<unsigned>(delta)));
    g = a[deg(a)];
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_quotient(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
    }
  }
  return primitive_part(b);
}

// With g = gcd(a, b) of degree k, the pairs (u, v) with u a + v b = 0,
// deg u = deg b - j, deg v = deg a - j are (w b/g, -w a/g) for w of degree
// k - j. The largest j admitting a nonzero solution is k, where the solution
// is unique up to scalar and g = b / u.
template <FieldScalar S>
Form<S> kernel_gcd(const Form<S>& a, const Form<S>& b) {
  const std::size_t n = a.nvars();
  const auto& field = a.field();
  const unsigned da = a.degree(), db = b.degree();
  for (unsigned j = std::min(da, db); j >= 1; --j) {
    auto us = monomials_of_degree(n, db - j);
    auto vs = monomials_of_degree(n, da - j);
    auto rows = monomials_of_degree(n, da + db - j);
    std::unordered_map<Monomial, Eigen::Index, MonomialHash> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], static_cast<Eigen::Index>(i));
    const auto cols = static_cast<Eigen::Index>(us.size() + vs.size());
    DenseMatrix<S> m = DenseMatrix<S>::Constant(static_cast<Eigen::Index>(rows.size()), cols, zero_of(field));
    auto fill = [&](const std::vector<Monomial>& mons, const Form<S>& f, Eigen::Index offset) {
      for (std::size_t c = 0; c < mons.size(); ++c) {
        for (const auto& t : f.terms()) {
          m(row_of.at(mons[c] * t.monomial), offset + static_cast<Eigen::Index>(c)) = t.coefficient;
        }
      }
    };
    fill(us, a, 0);
    fill(vs, b, static_cast<Eigen::Index>(us.size()));
    if (exact_rank(m) == static_cast<std::size_t>(cols)) continue;
    auto x = null_vector<S>(std::move(m), field);
    std::vector<Term<S>> terms;
    for (std::size_t c = 0; c < us.size(); ++c) terms.push_back({us[c], (*x)[c]});
    Form<S> u = Form<S>::from_terms(n, field, std::move(terms), db - j);
    return exact_quotient(b, u);
  }
  return Form<S>::constant(n, one_of(field));
}

template <FieldScalar S>
Form<S> gcd_pair(const Form<S>& a, const Form<S>& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::size_t n = a.nvars();
  const Form<S> one = Form<S>::constant(n, one_of(a.field()));
  if (a.degree() == 0 || b.degree() == 0) return one;

  auto max_exponents = [n](const Form<S>& f) {
    std::vector<unsigned> e(n, 0);
    for (const auto& t : f.terms()) {
      for (std::size_t i = 0; i < n; ++i) e[i] = std::max(e[i], t.monomial[i]);
    }
    return e;
  };
  auto ea = max_exponents(a);
  auto eb = max_exponents(b);

  // A variable present in only one argument cannot occur in the gcd.
  for (std::size_t v = 0; v < n; ++v) {
    if (ea[v] > 0 && eb[v] == 0) return gcd_pair(content(split(a, v)), b);
    if (eb[v] > 0 && ea[v] == 0) return gcd_pair(a, content(split(b, v)));
  }

  std::size_t occurring = 0;
  for (std::size_t v = 0; v < n; ++v) occurring += ea[v] > 0;
  if (occurring > 2) return kernel_gcd(a, b);

  std::size_t main = n;
  unsigned best = std::numeric_limits<unsigned>::max();
  for (std::size_t v = 0; v < n; ++v) {
    if (ea[v] == 0) continue;
    unsigned cost = std::max(ea[v], eb[v]);
    if (cost < best) {
      best = cost;
      main = v;
    }
  }

  auto ua = split(a, main);
  auto ub = split(b, main);
  Form<S> ca = content(ua);
  Form<S> cb = content(ub);
  Form<S> c = gcd_pair(ca, cb);
  auto g = subresultant_gcd(divide_coefficients(std::move(ua), ca), divide_coefficients(std::move(ub), cb), n,
                            a.field());
  return c * join(g, main, n, a.field());
}

}  // namespace detail

// Greatest common divisor, normalized to graded-lex leading coefficient 1.
// Throws AllZero when every input is zero, MixedRings on differing rings.
template <FieldScalar S>
Form<S> gcd_forms(std::span<const Form<S>> forms) {
  const Form<S>* first = nullptr;
  for (const auto& f : forms) {
    if (first) Form<S>::check_same_ring(*first, f);
    if (!first || first->is_zero()) first = &f;
  }
  if (!first || first->is_zero()) throw AllZero("gcd of zero forms");
  Form<S> g = *first;
  for (const auto& f : forms) {
    if (g.degree() == 0) break;
    if (&f == first || f.is_zero()) continue;
    g = detail::gcd_pair(g, f);
  }
  if (g.degree() == 0) return Form<S>::constant(g.nvars(), one_of(g.field()));
  return monic(g);
}

template <FieldScalar S>
Form<S> gcd_forms(const Form<S>& a, const Form<S>& b) {
  const Form<S> pair[] = {a, b};
  return gcd_forms<S>(std::span<const Form<S>>(pair));
}

}  // namespace apolar
