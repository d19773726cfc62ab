#pragma once

// Hilbert functions of apolar algebras via catalecticant ranks.

#include <string>
#include <string_view>
#include <vector>

#include "apolar/catalecticant.hpp"

namespace apolar {

// (h_0, h_1, ..., h_e).
class HilbertFunction {
 public:
  HilbertFunction() = default;
  explicit HilbertFunction(std::vector<std::size_t> values) : values_(std::move(values)) {}

  std::size_t socle_degree() const noexcept { return values_.empty() ? 0 : values_.size() - 1; }
  std::size_t operator[](std::size_t i) const { return values_.at(i); }
  const std::vector<std::size_t>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  bool is_symmetric() const;
  // "(1,13,12,13,1)"
  std::string to_string() const;
  // Inverse of to_string; throws InvalidArgument.
  static HilbertFunction parse(std::string_view text);

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;

 private:
  std::vector<std::size_t> values_;
};

std::ostream& operator<<(std::ostream& os, const HilbertFunction& h);

// h_i = rank of the i-th catalecticant, for i = 0..deg F. Throws ZeroForm.
template <FieldScalar S>
HilbertFunction hilbert_function(const Form<S>& f) {
  if (f.is_zero()) throw ZeroForm("Hilbert function of the zero form");
  std::vector<std::size_t> h;
  h.reserve(f.degree() + 1);
  for (unsigned i = 0; i <= f.degree(); ++i) h.push_back(catalecticant(f, i).rank());
  return HilbertFunction(std::move(h));
}

// Single entry h_i, for callers that only need one degree.
template <FieldScalar S>
std::size_t hilbert_entry(const Form<S>& f, unsigned i) {
  if (f.is_zero()) throw ZeroForm("Hilbert function of the zero form");
  return catalecticant(f, i).rank();
}

// Number of essential variables: dim span{∂_0 F, ..., ∂_n F}.
template <FieldScalar S>
std::size_t codimension(const Form<S>& f) {
  if (f.is_zero()) throw ZeroForm("codimension of the zero form");
  if (f.degree() == 0) return 0;
  return catalecticant(f, 1).rank();
}

}  // namespace apolar
