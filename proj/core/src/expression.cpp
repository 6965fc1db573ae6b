#include "dpnp/expression.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <vector>

#include "dpnp/errors.hpp"

namespace dpnp {

struct Expression::Node {
  enum class Op { Num, X, Y, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Exp, Gauss };
  Op op = Op::Num;
  double value = 0.0;
  std::vector<std::shared_ptr<const Node>> args;

  double eval(double x, double y) const {
    auto a = [&](std::size_t k) { return args[k]->eval(x, y); };
    switch (op) {
      case Op::Num: return value;
      case Op::X: return x;
      case Op::Y: return y;
      case Op::Add: return a(0) + a(1);
      case Op::Sub: return a(0) - a(1);
      case Op::Mul: return a(0) * a(1);
      case Op::Div: return a(0) / a(1);
      case Op::Pow: return std::pow(a(0), a(1));
      case Op::Neg: return -a(0);
      case Op::Sin: return std::sin(a(0));
      case Op::Cos: return std::cos(a(0));
      case Op::Exp: return std::exp(a(0));
      case Op::Gauss: {
        const double dx = x - a(0), dy = y - a(1), w = a(2);
        return std::exp(-(dx * dx + dy * dy) / (2.0 * w * w));
      }
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Op = Expression::Node::Op;

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr parse() {
    NodePtr n = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidConfig("expression '" + s_ + "': " + why + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static NodePtr make(Op op, std::vector<NodePtr> args, double v = 0.0) {
    auto n = std::make_shared<Expression::Node>();
    n->op = op;
    n->value = v;
    n->args = std::move(args);
    return n;
  }

  NodePtr sum() {
    NodePtr lhs = product();
    for (;;) {
      if (accept('+')) {
        lhs = make(Op::Add, {lhs, product()});
      } else if (accept('-')) {
        lhs = make(Op::Sub, {lhs, product()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr product() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(Op::Mul, {lhs, unary()});
      } else if (accept('/')) {
        lhs = make(Op::Div, {lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Op::Neg, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Op::Pow, {base, unary()});
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (accept('(')) {
      NodePtr n = sum();
      expect(')');
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(s_.substr(pos_), &used);
      } catch (const std::exception&) {
        fail("bad number");
      }
      pos_ += used;
      return make(Op::Num, {}, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (name == "x") return make(Op::X, {});
      if (name == "y") return make(Op::Y, {});
      if (name == "pi") return make(Op::Num, {}, std::numbers::pi);
      Op op;
      std::size_t arity = 1;
      if (name == "sin") {
        op = Op::Sin;
      } else if (name == "cos") {
        op = Op::Cos;
      } else if (name == "exp") {
        op = Op::Exp;
      } else if (name == "gaussian") {
        op = Op::Gauss;
        arity = 3;
      } else {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      expect('(');
      std::vector<NodePtr> args{sum()};
      while (args.size() < arity) {
        expect(',');
        args.push_back(sum());
      }
      expect(')');
      return make(op, std::move(args));
    }
    fail("unexpected character");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression::Expression(const std::string& text) : text_(text), root_(Parser(text_).parse()) {}
Expression::~Expression() = default;
Expression::Expression(const Expression&) = default;
Expression& Expression::operator=(const Expression&) = default;
Expression::Expression(Expression&&) noexcept = default;
Expression& Expression::operator=(Expression&&) noexcept = default;

double Expression::operator()(double x, double y) const { return root_->eval(x, y); }

}  // namespace dpnp
