#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "apolar/field.hpp"

namespace apolar {

// Runtime choice of coefficient field; modulus 0 stands for Q.
struct FieldSpec {
  std::uint64_t modulus = kDefaultPrime;

  bool is_rational() const noexcept { return modulus == 0; }
  std::string name() const { return is_rational() ? "Q" : "GF(" + std::to_string(modulus) + ")"; }

  // Accepts "q", "Q", "p:MOD", "GF(MOD)". Throws InvalidArgument.
  static FieldSpec parse(std::string_view text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Calls fn(RationalField{}) or fn(PrimeField(p)).
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_rational()) return fn(RationalField{});
  return fn(PrimeField(spec.modulus));
}

}  // namespace apolar
