#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "stec/multivector.hpp"

namespace stec {

// Parse failure with the byte offset of the offending token.
struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t at)
      : std::runtime_error(message + " at offset " + std::to_string(at)), offset(at) {}
  std::size_t offset;
};

// Multivector expression grammar. Binding, tightest first:
//   postfix ! (Hodge) and !! (inverse Hodge)
//   ^            wedge
//   _|  |_       left / right interior product
//   .            dot
//   *            scalar multiple
//   unary -
//   + -          sum / difference
// All binary operators associate left. Unicode spellings are accepted for
// the wedge, interior products and dot. Blades are written e013 (digits
// strictly below the session dimension, no repeats; out-of-order digits are
// accepted and contribute their permutation sign) or e{0,1,13} for
// dimensions above nine. Scalars are integers or fractions p/q.
struct Expression {
  enum class Op {
    literal,
    blade,
    negate,
    hodge,
    inv_hodge,
    wedge,
    dot,
    left_contraction,
    right_contraction,
    scalar_multiply,
    add,
    subtract,
  };

  Op op = Op::literal;
  Rational value;      // literal
  Blade blade_value;   // blade
  int blade_sign = 1;  // parity from reordering the written digits
  std::unique_ptr<Expression> lhs, rhs;
};

// Parses and validates against the session signature (blade indices must be
// below k+n). Throws ParseError.
Expression parse_expression(std::string_view src, const Signature& sig);

// Exact evaluation over rationals. The dot of two multivectors is returned
// as a scalar multivector. '*' requires at least one grade-0 operand.
Multivector<Rational> eval_expression(const Expression& e, const Signature& sig);

Multivector<Rational> eval(std::string_view src, const Signature& sig);

}  // namespace stec
