#include "parawave/expression.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace parawave {

struct Expression::Node {
  enum class Op { Number, VarX, VarT, Add, Sub, Mul, Div, Pow, Neg, Exp, Sin, Cos };
  Op op;
  double number = 0.0;
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;

  double eval(double x, double t) const {
    switch (op) {
      case Op::Number: return number;
      case Op::VarX: return x;
      case Op::VarT: return t;
      case Op::Add: return lhs->eval(x, t) + rhs->eval(x, t);
      case Op::Sub: return lhs->eval(x, t) - rhs->eval(x, t);
      case Op::Mul: return lhs->eval(x, t) * rhs->eval(x, t);
      case Op::Div: return lhs->eval(x, t) / rhs->eval(x, t);
      case Op::Pow: return std::pow(lhs->eval(x, t), rhs->eval(x, t));
      case Op::Neg: return -lhs->eval(x, t);
      case Op::Exp: return std::exp(lhs->eval(x, t));
      case Op::Sin: return std::sin(lhs->eval(x, t));
      case Op::Cos: return std::cos(lhs->eval(x, t));
    }
    return 0.0;
  }

  std::unique_ptr<Node> clone() const {
    auto copy = std::make_unique<Node>();
    copy->op = op;
    copy->number = number;
    if (lhs) copy->lhs = lhs->clone();
    if (rhs) copy->rhs = rhs->clone();
    return copy;
  }
};

namespace {

using Node = Expression::Node;
using Op = Node::Op;

std::unique_ptr<Node> make_node(Op op, std::unique_ptr<Node> lhs = nullptr,
                                std::unique_ptr<Node> rhs = nullptr) {
  auto node = std::make_unique<Node>();
  node->op = op;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  std::unique_ptr<Node> parse() {
    auto node = sum();
    skip_space();
    if (pos_ != src_.size())
      throw ExpressionError("unexpected trailing input", pos_);
    return node;
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t')) {
      ++pos_;
    }
  }

  // Matches an ASCII char or one of the UTF-8 spellings of minus (U+2212),
  // times (U+00D7), and divide (U+00F7).
  bool consume(char ascii, const char* utf8 = nullptr) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == ascii) {
      ++pos_;
      return true;
    }
    if (utf8 != nullptr) {
      const std::size_t len = std::char_traits<char>::length(utf8);
      if (src_.compare(pos_, len, utf8) == 0) {
        pos_ += len;
        return true;
      }
    }
    return false;
  }

  std::unique_ptr<Node> sum() {
    auto node = term();
    for (;;) {
      if (consume('+')) {
        node = make_node(Op::Add, std::move(node), term());
      } else if (consume('-', "−")) {
        node = make_node(Op::Sub, std::move(node), term());
      } else {
        return node;
      }
    }
  }

  std::unique_ptr<Node> term() {
    auto node = unary();
    for (;;) {
      if (consume('*', "×")) {
        node = make_node(Op::Mul, std::move(node), unary());
      } else if (consume('/', "÷")) {
        node = make_node(Op::Div, std::move(node), unary());
      } else {
        return node;
      }
    }
  }

  std::unique_ptr<Node> unary() {
    if (consume('-', "−")) return make_node(Op::Neg, unary());
    if (consume('+')) return unary();
    return power();
  }

  std::unique_ptr<Node> power() {
    auto base = primary();
    if (consume('^')) {
      // right associative; the exponent may carry its own sign
      return make_node(Op::Pow, std::move(base), unary());
    }
    return base;
  }

  std::unique_ptr<Node> primary() {
    skip_space();
    if (pos_ >= src_.size())
      throw ExpressionError("unexpected end of expression", pos_);
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      auto node = sum();
      if (!consume(')'))
        throw ExpressionError("missing closing parenthesis", pos_);
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw ExpressionError(std::string("unexpected character '") + c + "'",
                          pos_);
  }

  std::unique_ptr<Node> number() {
    const char* begin = src_.c_str() + pos_;
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) throw ExpressionError("malformed number", pos_);
    pos_ += std::size_t(end - begin);
    auto node = make_node(Op::Number);
    node->number = value;
    return node;
  }

  std::unique_ptr<Node> identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    const std::string name = src_.substr(start, pos_ - start);
    if (name == "x") return make_node(Op::VarX);
    if (name == "t") return make_node(Op::VarT);
    Op op;
    if (name == "exp") {
      op = Op::Exp;
    } else if (name == "sin") {
      op = Op::Sin;
    } else if (name == "cos") {
      op = Op::Cos;
    } else {
      throw ExpressionError("unknown identifier '" + name + "'", start);
    }
    if (!consume('('))
      throw ExpressionError("expected '(' after " + name, pos_);
    auto arg = sum();
    if (!consume(')'))
      throw ExpressionError("missing closing parenthesis", pos_);
    return make_node(op, std::move(arg));
  }
};

}  // namespace

Expression Expression::parse(const std::string& source) {
  Parser parser(source);
  return Expression(parser.parse(), source);
}

Expression::Expression(std::unique_ptr<Node> root, std::string source)
    : root_(std::move(root)), source_(std::move(source)) {}

double Expression::operator()(double x, double t) const {
  return root_->eval(x, t);
}

Expression::Expression(Expression&&) noexcept = default;
Expression& Expression::operator=(Expression&&) noexcept = default;
Expression::~Expression() = default;

Expression::Expression(const Expression& other)
    : root_(other.root_->clone()), source_(other.source_) {}

Expression& Expression::operator=(const Expression& other) {
  root_ = other.root_->clone();
  source_ = other.source_;
  return *this;
}

}  // namespace parawave
