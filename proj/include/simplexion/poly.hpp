#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "simplexion/matrix.hpp"

namespace simplexion {

/// Sparse multivariate polynomial with integer coefficients over a fixed,
/// ordered variable list. Exponent vectors all have length = var count.
class PolyExpr {
 public:
  using Monomial = std::vector<std::uint16_t>;

  explicit PolyExpr(std::size_t nvars) : nvars_(nvars) {}
  static PolyExpr constant(std::size_t nvars, std::int64_t c);
  static PolyExpr variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PolyExpr operator+(const PolyExpr& o) const;
  PolyExpr operator-(const PolyExpr& o) const;
  PolyExpr operator*(const PolyExpr& o) const;
  PolyExpr operator-() const;

  /// Negate if the leading (lex-largest monomial) coefficient is negative;
  /// used to merge sign-duplicates.
  PolyExpr sign_normalized() const;

  ZMod eval(const VecZd& assignment) const;

  /// Canonical text: monomials in descending lex order, "a^2*b - 3*c + 1".
  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const PolyExpr& a, const PolyExpr& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const PolyExpr& a, const PolyExpr& b) { return a.terms_ < b.terms_; }

  void add_term(Monomial m, std::int64_t c);

 private:
  std::size_t nvars_;
  std::map<Monomial, std::int64_t> terms_;
};

enum class SystemOrigin { Generated, PaperN2, PaperN2B, PaperN3 };

struct PolySystem {
  std::vector<std::string> variables;
  std::vector<PolyExpr> polys;
  SystemOrigin origin = SystemOrigin::Generated;
};

/// Regenerate the n-simplex equation system symbolically: embed a matrix of
/// formal A-entries (plus formal B-entries when inhomogeneous), expand
/// LHS - RHS over the integers and collect the nonzero entries, merging
/// duplicates up to sign. Variables: A row-major (n=2: a,b,c,d; n=3:
/// a,b,c,x,y,z,u,v,w; n=4: a11..a44), then B as x,y for n=2 or b1..bn above.
PolySystem gen_system(int n, bool homogeneous);

/// The transcribed printed systems: "n2-5eq" (five homogeneous equations),
/// "n2-B-3eq" (the three B-equations), "n3-29eq" (the 29-equation set).
PolySystem paper_system(const std::string& id);

ZMod eval_poly(const PolyExpr& p, const VecZd& assignment);

/// Exhaustive vanishing-set comparison over all Z_D^vars assignments.
/// Throws BudgetExceededError when D^vars exceeds the budget.
bool solution_sets_equal(const PolySystem& s1, const PolySystem& s2, std::uint32_t d,
                         std::uint64_t budget = 100'000'000);

/// One polynomial per line in canonical monomial order.
std::string system_to_text(const PolySystem& sys);

}  // namespace simplexion
