#include "simplexion/expr.hpp"

#include <cctype>
#include <vector>

#include "simplexion/errors.hpp"
#include "simplexion/zmod.hpp"

namespace simplexion {

struct Expr::Node {
  enum Kind { Const, Var, Add, Sub, Mul, Div, Neg } kind;
  std::int64_t value = 0;    // Const
  std::string name;          // Var
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  std::set<std::string>& vars;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  NodePtr make(Expr::Node n) { return std::make_shared<Expr::Node>(std::move(n)); }

  // expr := term (('+'|'-') term)*
  NodePtr parse_expr() {
    NodePtr left = parse_term();
    while (true) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        NodePtr right = parse_term();
        Expr::Node n;
        n.kind = (c == '+') ? Expr::Node::Add : Expr::Node::Sub;
        n.lhs = left;
        n.rhs = right;
        left = make(std::move(n));
      } else {
        return left;
      }
    }
  }

  // term := unary (('*'|'/'|juxtaposition) unary)*
  NodePtr parse_term() {
    NodePtr left = parse_unary();
    while (true) {
      char c = peek();
      if (c == '*' || c == '/') {
        ++pos;
        NodePtr right = parse_unary();
        Expr::Node n;
        n.kind = (c == '*') ? Expr::Node::Mul : Expr::Node::Div;
        n.lhs = left;
        n.rhs = right;
        left = make(std::move(n));
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
        NodePtr right = parse_atom();
        Expr::Node n;
        n.kind = Expr::Node::Mul;
        n.lhs = left;
        n.rhs = right;
        left = make(std::move(n));
      } else {
        return left;
      }
    }
  }

  NodePtr parse_unary() {
    char c = peek();
    if (c == '-') {
      ++pos;
      Expr::Node n;
      n.kind = Expr::Node::Neg;
      n.lhs = parse_unary();
      return make(std::move(n));
    }
    if (c == '+') {
      ++pos;
      return parse_unary();
    }
    return parse_atom();
  }

  NodePtr parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      NodePtr inner = parse_expr();
      if (peek() != ')') throw ParseError("expected ')' in expression: " + s);
      ++pos;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        ++pos;
      }
      Expr::Node n;
      n.kind = Expr::Node::Const;
      n.value = v;
      return make(std::move(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // single-letter parameter names; a digit suffix is allowed (b1, b2)
      std::string name(1, s[pos++]);
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        name += s[pos++];
      }
      vars.insert(name);
      Expr::Node n;
      n.kind = Expr::Node::Var;
      n.name = name;
      return make(std::move(n));
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "' in expression: " + s);
  }
};

std::uint32_t eval_node(const Expr::Node& n, const std::map<std::string, std::uint32_t>& params,
                        std::uint32_t d) {
  switch (n.kind) {
    case Expr::Node::Const:
      return mod_reduce(n.value, d);
    case Expr::Node::Var: {
      auto it = params.find(n.name);
      if (it == params.end()) throw DomainViolationError("unbound parameter: " + n.name);
      return it->second % d;
    }
    case Expr::Node::Add:
      return mod_reduce(static_cast<std::int64_t>(eval_node(*n.lhs, params, d)) +
                        eval_node(*n.rhs, params, d), d);
    case Expr::Node::Sub:
      return mod_reduce(static_cast<std::int64_t>(eval_node(*n.lhs, params, d)) -
                        eval_node(*n.rhs, params, d), d);
    case Expr::Node::Mul:
      return mod_reduce(static_cast<std::int64_t>(eval_node(*n.lhs, params, d)) *
                        eval_node(*n.rhs, params, d), d);
    case Expr::Node::Div: {
      std::uint32_t den = eval_node(*n.rhs, params, d);
      return mod_reduce(static_cast<std::int64_t>(eval_node(*n.lhs, params, d)) *
                        inv_mod(den, d), d);
    }
    case Expr::Node::Neg:
      return mod_reduce(-static_cast<std::int64_t>(eval_node(*n.lhs, params, d)), d);
  }
  throw ParseError("corrupt expression node");
}

}  // namespace

Expr Expr::parse(const std::string& text) {
  Expr e;
  e.text_ = text;
  Parser p{text, 0, e.vars_};
  e.root_ = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) {
    throw ParseError("trailing characters in expression: " + text);
  }
  return e;
}

std::uint32_t Expr::eval(const std::map<std::string, std::uint32_t>& params,
                         std::uint32_t d) const {
  return eval_node(*root_, params, d);
}

}  // namespace simplexion
