#pragma once

// Text grammar for forms:
//   form   ::= ['+'|'-'] term (('+'|'-') term)*
//   term   ::= coef ['*' factor ('*' factor)*] | factor ('*' factor)*
//   factor ::= 'y' index ['^' exponent]
//   coef   ::= integer ['/' integer]
// Whitespace between tokens is ignored. A bare coefficient is a constant term.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "apolar/form.hpp"

namespace apolar {

namespace detail {

class FormParser {
 public:
  FormParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  struct RawTerm {
    bool negative = false;
    std::string coef;  // empty means 1
    Monomial monomial;
    std::size_t position = 0;
  };

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (at_end()) throw SyntaxError("empty form", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    terms.push_back(term(negative));
    skip_ws();
    while (!at_end()) {
      char c = peek();
      if (c != '+' && c != '-') throw SyntaxError(std::string("expected '+' or '-', found '") + c + "'", pos_);
      ++pos_;
      skip_ws();
      terms.push_back(term(c == '-'));
      skip_ws();
    }
    return terms;
  }

 private:
  RawTerm term(bool negative) {
    RawTerm t;
    t.negative = negative;
    t.position = pos_;
    t.monomial = Monomial(nvars_);
    if (at_end()) throw SyntaxError("expected a term", pos_);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coef = digits();
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        t.coef += '/' + digits();
        skip_ws();
      }
      if (at_end() || peek() != '*') return t;
      ++pos_;
      skip_ws();
    }
    factor(t.monomial);
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      factor(t.monomial);
      skip_ws();
    }
    return t;
  }

  void factor(Monomial& m) {
    if (at_end() || peek() != 'y') throw SyntaxError("expected a variable 'y<index>'", pos_);
    std::size_t at = pos_;
    ++pos_;
    std::string idx = digits();
    std::size_t index = std::stoul(idx);
    if (idx.size() > 4 || index >= nvars_) {
      throw UnknownVariable("y" + idx + " at " + std::to_string(at) + " (ring has " + std::to_string(nvars_) +
                            " variables)");
    }
    unsigned exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::string e = digits();
      if (e.size() > 4) throw ExponentOverflow("exponent " + e);
      exponent = static_cast<unsigned>(std::stoul(e));
    }
    m.set(index, m[index] + exponent);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw SyntaxError("expected digits", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Throws SyntaxError, NotHomogeneous or UnknownVariable.
template <class Field>
Form<typename Field::scalar_type> parse_form(std::string_view text, std::size_t nvars, const Field& field) {
  using S = typename Field::scalar_type;
  auto raw = detail::FormParser(text, nvars).parse();
  std::vector<Term<S>> terms;
  terms.reserve(raw.size());
  for (const auto& t : raw) {
    if (t.monomial.degree() != raw.front().monomial.degree()) {
      throw NotHomogeneous("term at " + std::to_string(t.position) + " has degree " +
                           std::to_string(t.monomial.degree()) + ", expected " +
                           std::to_string(raw.front().monomial.degree()));
    }
    S c = t.coef.empty() ? one_of(field) : parse_scalar(t.coef, field);
    terms.push_back({t.monomial, t.negative ? -c : c});
  }
  return Form<S>::from_terms(nvars, field, std::move(terms), raw.front().monomial.degree());
}

}  // namespace apolar
