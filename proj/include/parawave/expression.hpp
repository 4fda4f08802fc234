#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace parawave {

class ExpressionError : public std::runtime_error {
 public:
  ExpressionError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A closed-form expression in the variables x and t, built from numbers,
// + - * / ^ (the Unicode spellings of minus, times, and divide are accepted
// too), parentheses, and the functions exp, sin, cos. '^' binds tighter
// than unary minus and associates to the right.
class Expression {
 public:
  struct Node;

  static Expression parse(const std::string& source);

  double operator()(double x, double t) const;
  const std::string& source() const { return source_; }

  Expression(Expression&&) noexcept;
  Expression& operator=(Expression&&) noexcept;
  Expression(const Expression&);
  Expression& operator=(const Expression&);
  ~Expression();

 private:
  explicit Expression(std::unique_ptr<Node> root, std::string source);
  std::unique_ptr<Node> root_;
  std::string source_;
};

}  // namespace parawave
