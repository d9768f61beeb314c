#ifndef ORLICZ_FORMULA_HPP
#define ORLICZ_FORMULA_HPP

#include <memory>
#include <string>

namespace orlicz {

// Small closed expression grammar in the index variable n, for parametric atom
// families: numbers, n, + - * / ^, parentheses, exp(), log(), sqrt().
// "2^-n" and "1/n^2" parse as expected; ^ is right-associative and binds
// tighter than unary minus in its exponent.
class Formula {
 public:
  static Formula parse(const std::string& text);

  double operator()(double n) const;
  const std::string& text() const { return text_; }

  Formula() = default;
  bool empty() const { return !node_; }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
  std::string text_;
};

}  // namespace orlicz

#endif
