#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "apolar/errors.hpp"

namespace apolar {

inline constexpr std::size_t kMaxVariables = 64;
inline constexpr unsigned kMaxExponent = 255;

// Exponent vector over y_0..y_{n-1} with a cached total degree.
// Ordered graded-lexicographically with y_0 > y_1 > ...
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::size_t nvars) : nvars_(checked_nvars(nvars)) {}

  Monomial(std::size_t nvars, std::initializer_list<unsigned> exponents)
      : Monomial(nvars, std::span<const unsigned>(exponents.begin(), exponents.size())) {}

  Monomial(std::size_t nvars, std::span<const unsigned> exponents) : nvars_(checked_nvars(nvars)) {
    if (exponents.size() != nvars) {
      throw InvalidArgument("exponent vector of length " + std::to_string(exponents.size()) +
                            " for " + std::to_string(nvars) + " variables");
    }
    for (std::size_t i = 0; i < nvars; ++i) set(i, exponents[i]);
  }

  static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1) {
    Monomial m(nvars);
    m.set(i, power);
    return m;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }

  void set(std::size_t i, unsigned e) {
    if (i >= nvars_) throw IndexOutOfRange("variable y" + std::to_string(i));
    if (e > kMaxExponent) throw ExponentOverflow("exponent " + std::to_string(e));
    degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
    exps_[i] = static_cast<std::uint8_t>(e);
  }

  bool divides(const Monomial& m) const noexcept {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exps_[i] > m.exps_[i]) return false;
    }
    return true;
  }

  bool is_one() const noexcept { return degree_ == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      unsigned e = unsigned(a.exps_[i]) + b.exps_[i];
      if (e > kMaxExponent) throw ExponentOverflow("exponent " + std::to_string(e));
      r.exps_[i] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    return r;
  }

  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] - b.exps_[i]);
    r.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    int c = std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVariables);
    return c <=> 0;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < nvars_; ++i) h = (h ^ exps_[i]) * 1099511628211ULL;
    return h;
  }

  // Monomial in nvars variables with exponents of this one placed at offset.
  Monomial embedded(std::size_t nvars, std::size_t offset) const {
    if (offset + nvars_ > nvars) throw IndexOutOfRange("embedding does not fit");
    Monomial r(nvars);
    for (std::size_t i = 0; i < nvars_; ++i) r.exps_[offset + i] = exps_[i];
    r.degree_ = degree_;
    return r;
  }

  // Drops variable i, which must have exponent 0.
  Monomial without(std::size_t i) const {
    Monomial r(nvars_ - 1);
    for (std::size_t k = 0, j = 0; k < nvars_; ++k) {
      if (k != i) r.exps_[j++] = exps_[k];
    }
    r.degree_ = degree_;
    return r;
  }

  // "y0^2*y3", or "1".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!exps_[i]) continue;
      if (!out.empty()) out += '*';
      out += 'y' + std::to_string(i);
      if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  static std::uint8_t checked_nvars(std::size_t n) {
    if (n > kMaxVariables) throw InvalidArgument("at most 64 variables are supported");
    return static_cast<std::uint8_t>(n);
  }

  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

// All monomials of the given degree in nvars variables, graded-lex descending.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(nvars);
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      m.set(i, left);
      out.push_back(m);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set(i, e);
      fill(i + 1, left - e);
    }
    m.set(i, 0);
  };
  fill(0, degree);
  return out;
}

// C(n, k) with 64-bit intermediates; callers stay well below overflow.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Number of monomials of degree d in n variables.
constexpr std::uint64_t monomial_count(std::uint64_t nvars, std::uint64_t degree) {
  return nvars == 0 ? (degree == 0 ? 1 : 0) : binomial(nvars + degree - 1, degree);
}

}  // namespace apolar
