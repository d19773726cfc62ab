#pragma once

// Exact rank of dense matrices over GF(p) and Q.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "apolar/eigen_support.hpp"

namespace apolar {

namespace detail {

// Row-major residues; destroyed in place.
inline std::size_t rank_mod_p(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols,
                              std::uint64_t p) {
  auto mul = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
  };
  auto inverse = [&](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols, a.begin() + rank * cols);
    }
    std::uint64_t* prow = a.data() + rank * cols;
    const std::uint64_t inv = inverse(prow[col]);
    for (std::size_t j = col; j < cols; ++j) prow[j] = mul(prow[j], inv);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      std::uint64_t* row = a.data() + i * cols;
      const std::uint64_t f = row[col];
      if (f == 0) continue;
      for (std::size_t j = col; j < cols; ++j) {
        if (prow[j] == 0) continue;
        std::uint64_t t = mul(f, prow[j]);
        row[j] = row[j] >= t ? row[j] - t : row[j] + p - t;
      }
    }
    ++rank;
  }
  return rank;
}

// Fraction-free (Bareiss) elimination on an integer matrix; destroyed in place.
inline std::size_t rank_bareiss(std::vector<mpz_class>& a, std::size_t rows, std::size_t cols) {
  mpz_class prev = 1;
  mpz_class t;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a[pivot * cols + col]) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) swap(a[pivot * cols + j], a[rank * cols + j]);
    }
    const mpz_class* prow = a.data() + rank * cols;
    const mpz_class& pv = prow[col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      mpz_class* row = a.data() + i * cols;
      const mpz_class f = row[col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        bool zero_row = sgn(row[j]) == 0;
        bool zero_piv = sgn(f) == 0 || sgn(prow[j]) == 0;
        if (zero_row && zero_piv) continue;
        if (zero_piv) {
          row[j] *= pv;
        } else {
          t = f * prow[j];
          row[j] *= pv;
          row[j] -= t;
        }
        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
      }
      row[col] = 0;
    }
    prev = pv;
    ++rank;
  }
  return rank;
}

inline std::size_t rank_of(const DenseMatrix<ModP>& m) {
  const auto rows = static_cast<std::size_t>(m.rows());
  const auto cols = static_cast<std::size_t>(m.cols());
  if (rows == 0 || cols == 0) return 0;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const ModP& x = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (x.modulus() != 0) {
        if (p != 0 && p != x.modulus()) throw MixedFields("matrix entries from different prime fields");
        p = x.modulus();
      }
      a[i * cols + j] = x.value();
    }
  }
  if (p == 0) return 0;
  return rank_mod_p(a, rows, cols, p);
}

inline std::size_t rank_of(const DenseMatrix<Rational>& m) {
  const auto rows = static_cast<std::size_t>(m.rows());
  const auto cols = static_cast<std::size_t>(m.cols());
  if (rows == 0 || cols == 0) return 0;
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& d = m(Eigen::Index(i), Eigen::Index(j)).value().get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& q = m(Eigen::Index(i), Eigen::Index(j)).value();
      a[i * cols + j] = q.get_num() * (lcm / q.get_den());
    }
  }
  return rank_bareiss(a, rows, cols);
}

}  // namespace detail

// Exact rank; elimination runs on whichever orientation has fewer rows.
template <class Derived>
std::size_t exact_rank(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if (m.rows() > m.cols()) return detail::rank_of(DenseMatrix<S>(m.transpose()));
  return detail::rank_of(DenseMatrix<S>(m));
}

// A nonzero vector x with m x = 0, from the first free column of the reduced
// row echelon form; nullopt when m has full column rank.
template <FieldScalar S>
std::optional<std::vector<S>> null_vector(DenseMatrix<S> m, const FieldOf<S>& field) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index rank = 0;
  std::optional<Eigen::Index> free_col;
  for (Eigen::Index col = 0; col < cols; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, col) == zero_of(field)) ++pivot;
    if (pivot == rows) {
      free_col = col;
      break;
    }
    m.row(pivot).swap(m.row(rank));
    const S inv = m(rank, col).inv();
    for (Eigen::Index j = col; j < cols; ++j) m(rank, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == rank || m(i, col) == zero_of(field)) continue;
      const S f = m(i, col);
      for (Eigen::Index j = col; j < cols; ++j) {
        if (!(m(rank, j) == zero_of(field))) m(i, j) -= f * m(rank, j);
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (!free_col) return std::nullopt;
  std::vector<S> x(static_cast<std::size_t>(cols), zero_of(field));
  x[static_cast<std::size_t>(*free_col)] = one_of(field);
  for (Eigen::Index k = 0; k < rank; ++k) x[static_cast<std::size_t>(pivot_col[k])] = -m(k, *free_col);
  return x;
}

}  // namespace apolar
