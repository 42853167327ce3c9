#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>

namespace simplexion {

/// Parsed arithmetic expression for catalog templates: integer literals,
/// single-letter parameters, + - * /, parentheses, implicit multiplication
/// by juxtaposition ("ab", "2x", "a(bc-1)", "(b-d)/b", "1/b").
/// Division evaluates via modular inverse and throws NotAUnitError when the
/// denominator is not a unit.
class Expr {
 public:
  static Expr parse(const std::string& text);  // throws ParseError

  std::uint32_t eval(const std::map<std::string, std::uint32_t>& params,
                     std::uint32_t d) const;

  const std::set<std::string>& variables() const { return vars_; }
  const std::string& text() const { return text_; }

 private:
  struct Node;
  std::shared_ptr<const Node> root_;
  std::set<std::string> vars_;
  std::string text_;
};

}  // namespace simplexion
