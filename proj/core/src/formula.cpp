#include "orlicz/formula.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace orlicz {

struct Formula::Node {
  enum class Op { constant, variable, add, sub, mul, div, pow, neg, exp, log, sqrt };
  Op op;
  double value = 0.0;
  std::shared_ptr<const Node> lhs, rhs;

  double eval(double n) const {
    switch (op) {
      case Op::constant: return value;
      case Op::variable: return n;
      case Op::add: return lhs->eval(n) + rhs->eval(n);
      case Op::sub: return lhs->eval(n) - rhs->eval(n);
      case Op::mul: return lhs->eval(n) * rhs->eval(n);
      case Op::div: return lhs->eval(n) / rhs->eval(n);
      case Op::pow: return std::pow(lhs->eval(n), rhs->eval(n));
      case Op::neg: return -lhs->eval(n);
      case Op::exp: return std::exp(lhs->eval(n));
      case Op::log: return std::log(lhs->eval(n));
      case Op::sqrt: return std::sqrt(lhs->eval(n));
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;
using Op = Formula::Node::Op;

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr, double v = 0.0) {
  auto n = std::make_shared<Formula::Node>();
  n->op = op;
  n->value = v;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr run() {
    auto n = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return n;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("formula parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  NodePtr expr() {
    auto n = term();
    for (;;) {
      if (consume('+')) {
        n = make(Op::add, n, term());
      } else if (consume('-')) {
        n = make(Op::sub, n, term());
      } else {
        return n;
      }
    }
  }

  NodePtr term() {
    auto n = unary();
    for (;;) {
      if (consume('*')) {
        n = make(Op::mul, n, unary());
      } else if (consume('/')) {
        n = make(Op::div, n, unary());
      } else {
        return n;
      }
    }
  }

  NodePtr unary() {
    if (consume('-')) return make(Op::neg, unary());
    return power();
  }

  NodePtr power() {
    auto base = primary();
    if (consume('^')) return make(Op::pow, base, unary());  // right-assoc, allows 2^-n
    return base;
  }

  NodePtr primary() {
    skip_ws();
    if (consume('(')) {
      auto n = expr();
      if (!consume(')')) fail("expected ')'");
      return n;
    }
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t used = 0;
      const double v = std::stod(s_.substr(pos_), &used);
      pos_ += used;
      return make(Op::constant, nullptr, nullptr, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (name == "n") return make(Op::variable);
      Op op;
      if (name == "exp") {
        op = Op::exp;
      } else if (name == "log" || name == "ln") {
        op = Op::log;
      } else if (name == "sqrt") {
        op = Op::sqrt;
      } else {
        fail("unknown identifier '" + name + "'");
      }
      if (!consume('(')) fail("expected '(' after " + name);
      auto arg = expr();
      if (!consume(')')) fail("expected ')'");
      return make(op, arg);
    }
    fail("unexpected character");
  }
};

}  // namespace

Formula Formula::parse(const std::string& text) {
  Formula f;
  f.node_ = Parser(text).run();
  f.text_ = text;
  return f;
}

double Formula::operator()(double n) const {
  if (!node_) throw std::logic_error("empty formula");
  return node_->eval(n);
}

}  // namespace orlicz
