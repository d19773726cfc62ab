#include "apolar/hilbert.hpp"

#include <ostream>

namespace apolar {

bool HilbertFunction::is_symmetric() const {
  for (std::size_t i = 0, j = values_.size(); i < values_.size(); ++i) {
    if (values_[i] != values_[--j]) return false;
  }
  return true;
}

std::string HilbertFunction::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out + ")";
}

HilbertFunction HilbertFunction::parse(std::string_view text) {
  const std::string original(text);
  auto bad = [&] { return InvalidArgument("malformed Hilbert function '" + original + "'"); };
  auto strip = [](std::string_view s) {
    auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return std::string_view();
    return s.substr(first, s.find_last_not_of(" \t") - first + 1);
  };
  text = strip(text);
  if (text.size() < 3 || text.front() != '(' || text.back() != ')') throw bad();
  text = text.substr(1, text.size() - 2);
  std::vector<std::size_t> values;
  while (true) {
    auto comma = text.find(',');
    auto item = strip(text.substr(0, comma));
    if (item.empty() || item.find_first_not_of("0123456789") != std::string_view::npos) throw bad();
    values.push_back(std::stoull(std::string(item)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return HilbertFunction(std::move(values));
}

std::ostream& operator<<(std::ostream& os, const HilbertFunction& h) { return os << h.to_string(); }

}  // namespace apolar
