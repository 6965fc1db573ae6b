#pragma once

#include <memory>
#include <string>

namespace dpnp {

/// Closed-form scalar expression in x and y.
///
/// Grammar: numbers, the variables x and y, the constant pi, binary + - * / ^
/// (^ is right associative), unary minus, parentheses, and the functions
/// sin(u), cos(u), exp(u) and gaussian(cx, cy, w) = exp(-((x-cx)^2 + (y-cy)^2) / (2 w^2)).
class Expression {
 public:
  /// Throws InvalidConfig with the character offset of a syntax error.
  explicit Expression(const std::string& text);
  ~Expression();
  Expression(const Expression&);
  Expression& operator=(const Expression&);
  Expression(Expression&&) noexcept;
  Expression& operator=(Expression&&) noexcept;

  double operator()(double x, double y) const;
  const std::string& text() const noexcept { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace dpnp
