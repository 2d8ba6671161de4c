#pragma once

// Recursive-descent parser for algebra expressions.
//
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' exponent)?
//   exponent := ['-'] int | '(' ['-'] int ')'
//   base     := symbol | rational | '(' expr ')'
//   rational := int ('/' posint)?
//
// Symbols: a b c d q alpha beta gamma delta (and UTF-8 aliases for the
// Greek letters).  Only q may carry a negative exponent.  Products keep
// their written order.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qsl2/qalgebra.hpp"

namespace qsl2 {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct ExpressionAst {
    enum class Kind { sum, product, power, scalar, symbol };

    Kind kind = Kind::scalar;
    std::vector<ExpressionAst> children;
    std::vector<int> signs;  // sum only, one per child
    Rational value;          // scalar
    std::string symbol;      // canonical ASCII name
    long exponent = 1;       // power
    std::size_t position = 0;
};

ExpressionAst parse_expression(std::string_view text);

/// Evaluates in the quantum algebra: classical symbols are lifted to l-th
/// powers, products are straightened left to right.
QElement evaluate(const ExpressionAst& ast, const QRing& ring);

/// parse + evaluate.
QElement parse_element(std::string_view text, const QRing& ring);

}  // namespace qsl2
