#pragma once

#include <memory>
#include <string>

#include "weyllab/fd.hpp"

namespace weyl {

class ExprError : public std::runtime_error {
public:
  ExprError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// Compiles a coordinate expression in t, x1, x2, x3 into a field.
// Grammar: + - * / ^, unary minus, parentheses, numeric literals, `pi`,
// functions sin cos exp sqrt pow.
FieldFn compile_expression(const std::string& text);

} // namespace weyl
