#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "darboux/continued_fraction.hpp"
#include "darboux/diffop.hpp"
#include "darboux/euler.hpp"
#include "darboux/ratfun.hpp"

// Operator text grammar.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' ['-'] integer)?
//   primary := integer | 'x' | 'D' | '(' expr ')'
//
// An expression containing D is an operator, otherwise a function of x.
// Operator * operator is composition; a product with a function operand is
// coefficient multiplication (so D*x means x*D). Division is only by
// functions. Operators take nonnegative integer powers.

namespace darboux {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses an operator; a plain function is promoted to multiplication.
DiffOp parse_operator(std::string_view text);

/// Parses a function of x; an expression containing D is rejected.
RatFun parse_function(std::string_view text);

std::string to_string(const Poly& p, std::string_view var = "x");
std::string to_string(const RatFun& f);
std::string to_string(const DiffOp& op);
/// Display only, e.g. "exp(2t)*(D_t^2 - 1/4)"; not part of the grammar.
std::string to_string(const EulerOp& op);
/// Nested display, e.g. "5/2 + x^2/(3 + x^2/(-x + 1))". Parses back to
/// the collapsed value.
std::string to_string(const ContinuedFraction& cf);

}  // namespace darboux
