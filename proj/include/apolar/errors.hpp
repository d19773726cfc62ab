#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apolar {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define APOLAR_DEFINE_ERROR(Name)            \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(#Name ": " + what) {}        \
  }

APOLAR_DEFINE_ERROR(MixedFields);
APOLAR_DEFINE_ERROR(DivisionByZero);
APOLAR_DEFINE_ERROR(InvalidArgument);
APOLAR_DEFINE_ERROR(NotHomogeneous);
APOLAR_DEFINE_ERROR(UnknownVariable);
APOLAR_DEFINE_ERROR(MixedRings);
APOLAR_DEFINE_ERROR(IndexOutOfRange);
APOLAR_DEFINE_ERROR(ExponentOverflow);
APOLAR_DEFINE_ERROR(AllZero);
APOLAR_DEFINE_ERROR(DegreeOutOfRange);
APOLAR_DEFINE_ERROR(ZeroForm);
APOLAR_DEFINE_ERROR(HypothesisViolated);
APOLAR_DEFINE_ERROR(PreconditionViolated);
APOLAR_DEFINE_ERROR(EmptyFactorList);
APOLAR_DEFINE_ERROR(BudgetZero);
APOLAR_DEFINE_ERROR(UnsupportedSocleDegree);
APOLAR_DEFINE_ERROR(IncompleteTable);

#undef APOLAR_DEFINE_ERROR

// Parse failure in the form grammar; position is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error("SyntaxError at " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Unreadable bound-table file; offset is the byte offset reported by the
// JSON reader, or the index of the offending array element.
class CorruptCache : public Error {
 public:
  CorruptCache(const std::string& what, std::size_t offset)
      : Error("CorruptCache at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace apolar
