#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qes/poly.hpp"

namespace qes {

using ParamMap = std::map<std::string, Rational>;

// Arithmetic over rationals: + - * / ^(integer), parentheses, numbers, names.
class Expr {
 public:
  struct Node;

  Expr() = default;
  static Expr parse(const std::string& text);

  const std::string& text() const { return text_; }
  bool empty() const { return !root_; }
  std::set<std::string> symbols() const;

  // Every name must be bound in env.
  Rational eval(const ParamMap& env) const;
  // Treats `var` as the polynomial indeterminate; division only by constants.
  RatPoly eval_poly(const std::string& var, const ParamMap& env) const;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

// Chained comparison such as "-1 < beta < -2*n - 2*gamma - 1".
class Inequality {
 public:
  Inequality() = default;
  static Inequality parse(const std::string& text);

  const std::string& text() const { return text_; }
  std::set<std::string> symbols() const;
  bool holds(const ParamMap& env) const;

 private:
  enum class Cmp { lt, le, gt, ge };
  std::string text_;
  std::vector<Expr> terms_;
  std::vector<Cmp> ops_;
};

}  // namespace qes
