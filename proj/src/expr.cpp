#include "qes/expr.hpp"

#include <cctype>

#include "qes/errors.hpp"

namespace qes {

struct Expr::Node {
  enum class Kind { num, sym, add, sub, mul, div, neg, pow } kind;
  Rational value;
  std::string name;
  int exponent = 0;
  std::shared_ptr<const Node> a, b;
};

namespace {

using NodeP = std::shared_ptr<const Expr::Node>;
using Kind = Expr::Node::Kind;

NodeP make(Kind k, NodeP a = nullptr, NodeP b = nullptr) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodeP parse_all() {
    NodeP n = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::parse, "expression '" + s_ + "': " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodeP sum() {
    NodeP n = product();
    while (true) {
      if (eat('+'))
        n = make(Kind::add, n, product());
      else if (eat('-'))
        n = make(Kind::sub, n, product());
      else
        return n;
    }
  }

  NodeP product() {
    NodeP n = unary();
    while (true) {
      if (eat('*'))
        n = make(Kind::mul, n, unary());
      else if (eat('/'))
        n = make(Kind::div, n, unary());
      else
        return n;
    }
  }

  NodeP unary() {
    if (eat('-')) return make(Kind::neg, unary());
    if (eat('+')) return unary();
    return power();
  }

  NodeP power() {
    NodeP base = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("integer exponent expected");
      auto n = std::make_shared<Expr::Node>();
      n->kind = Kind::pow;
      n->a = base;
      n->exponent = std::stoi(s_.substr(start, pos_ - start)) * (neg ? -1 : 1);
      return n;
    }
    return base;
  }

  NodeP atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodeP n = sum();
      if (!eat(')')) fail("missing ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      auto n = std::make_shared<Expr::Node>();
      n->kind = Kind::num;
      n->value = parse_rational(s_.substr(start, pos_ - start));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      auto n = std::make_shared<Expr::Node>();
      n->kind = Kind::sym;
      n->name = s_.substr(start, pos_ - start);
      return n;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

void collect(const NodeP& n, std::set<std::string>& out) {
  if (!n) return;
  if (n->kind == Kind::sym) out.insert(n->name);
  collect(n->a, out);
  collect(n->b, out);
}

const Rational& lookup(const ParamMap& env, const std::string& name) {
  auto it = env.find(name);
  if (it == env.end()) throw Error(ErrorKind::invalid_argument, "unbound symbol '" + name + "'");
  return it->second;
}

Rational eval_q(const NodeP& n, const ParamMap& env) {
  switch (n->kind) {
    case Kind::num: return n->value;
    case Kind::sym: return lookup(env, n->name);
    case Kind::add: return eval_q(n->a, env) + eval_q(n->b, env);
    case Kind::sub: return eval_q(n->a, env) - eval_q(n->b, env);
    case Kind::mul: return eval_q(n->a, env) * eval_q(n->b, env);
    case Kind::div: {
      Rational d = eval_q(n->b, env);
      if (d == 0) throw Error(ErrorKind::division_by_zero, "division by zero in expression");
      return eval_q(n->a, env) / d;
    }
    case Kind::neg: return -eval_q(n->a, env);
    case Kind::pow: return rpow(eval_q(n->a, env), n->exponent);
  }
  return Rational(0);
}

RatPoly eval_p(const NodeP& n, const std::string& var, const ParamMap& env) {
  switch (n->kind) {
    case Kind::num: return RatPoly::constant(n->value);
    case Kind::sym:
      if (n->name == var) return RatPoly::monomial(1, 1);
      return RatPoly::constant(lookup(env, n->name));
    case Kind::add: return eval_p(n->a, var, env) + eval_p(n->b, var, env);
    case Kind::sub: return eval_p(n->a, var, env) - eval_p(n->b, var, env);
    case Kind::mul: return eval_p(n->a, var, env) * eval_p(n->b, var, env);
    case Kind::div: {
      RatPoly d = eval_p(n->b, var, env);
      if (d.degree() != 0) throw Error(ErrorKind::invalid_argument, "polynomial expression divides by a non-constant");
      return eval_p(n->a, var, env) / d.leading();
    }
    case Kind::neg: return -eval_p(n->a, var, env);
    case Kind::pow: {
      if (n->exponent < 0) throw Error(ErrorKind::invalid_argument, "negative power in polynomial expression");
      RatPoly base = eval_p(n->a, var, env), r = RatPoly::constant(1);
      for (int i = 0; i < n->exponent; ++i) r *= base;
      return r;
    }
  }
  return {};
}

}  // namespace

Expr Expr::parse(const std::string& text) {
  Expr e;
  e.text_ = text;
  e.root_ = Parser(text).parse_all();
  return e;
}

std::set<std::string> Expr::symbols() const {
  std::set<std::string> out;
  collect(root_, out);
  return out;
}

Rational Expr::eval(const ParamMap& env) const {
  if (!root_) throw Error(ErrorKind::invalid_argument, "empty expression");
  return eval_q(root_, env);
}

RatPoly Expr::eval_poly(const std::string& var, const ParamMap& env) const {
  if (!root_) throw Error(ErrorKind::invalid_argument, "empty expression");
  return eval_p(root_, var, env);
}

Inequality Inequality::parse(const std::string& text) {
  Inequality q;
  q.text_ = text;
  size_t start = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '<' && c != '>') continue;
    bool eq = i + 1 < text.size() && text[i + 1] == '=';
    q.terms_.push_back(Expr::parse(text.substr(start, i - start)));
    q.ops_.push_back(c == '<' ? (eq ? Cmp::le : Cmp::lt) : (eq ? Cmp::ge : Cmp::gt));
    start = i + (eq ? 2 : 1);
    if (eq) ++i;
  }
  q.terms_.push_back(Expr::parse(text.substr(start)));
  if (q.ops_.empty()) throw Error(ErrorKind::parse, "inequality without comparison: '" + text + "'");
  return q;
}

std::set<std::string> Inequality::symbols() const {
  std::set<std::string> out;
  for (const auto& t : terms_) {
    auto s = t.symbols();
    out.insert(s.begin(), s.end());
  }
  return out;
}

bool Inequality::holds(const ParamMap& env) const {
  Rational prev = terms_[0].eval(env);
  for (size_t i = 0; i < ops_.size(); ++i) {
    Rational cur = terms_[i + 1].eval(env);
    bool ok = false;
    switch (ops_[i]) {
      case Cmp::lt: ok = prev < cur; break;
      case Cmp::le: ok = prev <= cur; break;
      case Cmp::gt: ok = prev > cur; break;
      case Cmp::ge: ok = prev >= cur; break;
    }
    if (!ok) return false;
    prev = cur;
  }
  return true;
}

}  // namespace qes
