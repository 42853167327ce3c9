#include "simplexion/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "simplexion/errors.hpp"
#include "simplexion/simplex.hpp"

namespace simplexion {

PolyExpr PolyExpr::constant(std::size_t nvars, std::int64_t c) {
  PolyExpr p(nvars);
  if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
  return p;
}

PolyExpr PolyExpr::variable(std::size_t nvars, std::size_t index) {
  PolyExpr p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.terms_[std::move(m)] = 1;
  return p;
}

void PolyExpr::add_term(Monomial m, std::int64_t c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyExpr PolyExpr::operator+(const PolyExpr& o) const {
  PolyExpr out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

PolyExpr PolyExpr::operator-(const PolyExpr& o) const {
  PolyExpr out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

PolyExpr PolyExpr::operator-() const {
  PolyExpr out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

PolyExpr PolyExpr::operator*(const PolyExpr& o) const {
  PolyExpr out(nvars_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
      out.add_term(std::move(m), c1 * c2);
    }
  }
  return out;
}

PolyExpr PolyExpr::sign_normalized() const {
  if (terms_.empty()) return *this;
  // leading monomial under lex = last key in the map
  if (terms_.rbegin()->second < 0) return -*this;
  return *this;
}

ZMod PolyExpr::eval(const VecZd& assignment) const {
  if (assignment.size() != nvars_) {
    throw std::invalid_argument("eval_poly: assignment length != variable count");
  }
  const std::uint32_t d = assignment.modulus();
  std::uint64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    std::uint64_t t = mod_reduce(c, d);
    for (std::size_t i = 0; i < nvars_ && t != 0; ++i) {
      for (std::uint16_t e = 0; e < m[i]; ++e) t = t * assignment[i] % d;
    }
    acc = (acc + t) % d;
  }
  return ZMod(static_cast<std::int64_t>(acc), d);
}

std::string PolyExpr::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending lex over monomials
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::int64_t c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::uint64_t ac = c < 0 ? -c : c;
    bool has_var = false;
    std::ostringstream vs;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (it->first[i] == 0) continue;
      if (has_var) vs << "*";
      vs << names[i];
      if (it->first[i] > 1) vs << "^" << it->first[i];
      has_var = true;
    }
    if (!has_var) {
      os << ac;
    } else {
      if (ac != 1) os << ac << "*";
      os << vs.str();
    }
  }
  return os.str();
}

ZMod eval_poly(const PolyExpr& p, const VecZd& assignment) { return p.eval(assignment); }

namespace {

// Matrix with polynomial entries, just enough for the embedded products.
struct PolyMat {
  std::size_t n;
  std::size_t nvars;
  std::vector<PolyExpr> e;  // row-major

  PolyMat(std::size_t n_, std::size_t nvars_)
      : n(n_), nvars(nvars_), e(n_ * n_, PolyExpr(nvars_)) {}

  static PolyMat identity(std::size_t n, std::size_t nvars) {
    PolyMat m(n, nvars);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = PolyExpr::constant(nvars, 1);
    return m;
  }
  PolyExpr& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
  const PolyExpr& at(std::size_t i, std::size_t j) const { return e[i * n + j]; }

  PolyMat operator*(const PolyMat& o) const {
    PolyMat out(n, nvars);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (o.at(k, j).is_zero()) continue;
          out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
        }
      }
    return out;
  }
};

std::vector<std::string> system_variables(int n, bool homogeneous) {
  std::vector<std::string> names;
  if (n == 2) {
    names = {"a", "b", "c", "d"};
  } else if (n == 3) {
    names = {"a", "b", "c", "x", "y", "z", "u", "v", "w"};
  } else {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        names.push_back("a" + std::to_string(i) + std::to_string(j));
  }
  if (!homogeneous) {
    if (n == 2) {
      names.push_back("x");
      names.push_back("y");
    } else {
      for (int i = 1; i <= n; ++i) names.push_back("b" + std::to_string(i));
    }
  }
  return names;
}

}  // namespace

PolySystem gen_system(int n, bool homogeneous) {
  if (n < 2 || n > 4) throw std::invalid_argument("gen_system supports n in {2,3,4}");
  SimplexSystem sys = build_system(n);
  PolySystem out;
  out.variables = system_variables(n, homogeneous);
  out.origin = SystemOrigin::Generated;
  const std::size_t nvars = out.variables.size();
  const std::size_t dim = homogeneous ? sys.N : sys.N + 1;

  std::vector<PolyMat> factors;
  for (const auto& placement : sys.placements) {
    PolyMat m = PolyMat::identity(dim, nvars);
    for (int al = 0; al < n; ++al) {
      for (int be = 0; be < n; ++be) {
        m.at(placement[al] - 1, placement[be] - 1) =
            PolyExpr::variable(nvars, static_cast<std::size_t>(al) * n + be);
      }
      if (!homogeneous) {
        m.at(placement[al] - 1, sys.N) =
            PolyExpr::variable(nvars, static_cast<std::size_t>(n) * n + al);
      }
    }
    factors.push_back(std::move(m));
  }
  PolyMat lhs = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) lhs = lhs * factors[i];
  PolyMat rhs = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;) rhs = rhs * factors[i];

  std::set<PolyExpr> collected;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      PolyExpr diff = (lhs.at(i, j) - rhs.at(i, j)).sign_normalized();
      if (!diff.is_zero()) collected.insert(std::move(diff));
    }
  }
  out.polys.assign(collected.begin(), collected.end());
  return out;
}

namespace {

struct V {
  // small helper for auditable transcription of the printed systems
  std::size_t nvars;
  PolyExpr operator()(std::size_t i) const { return PolyExpr::variable(nvars, i); }
  PolyExpr k(std::int64_t c) const { return PolyExpr::constant(nvars, c); }
};

}  // namespace

PolySystem paper_system(const std::string& id) {
  PolySystem out;
  if (id == "n2-5eq") {
    out.variables = {"a", "b", "c", "d"};
    out.origin = SystemOrigin::PaperN2;
    V v{4};
    PolyExpr a = v(0), b = v(1), c = v(2), d = v(3), one = v.k(1);
    out.polys = {
        a * b * c,
        b * c * d,
        b * c * (b - c),
        b * (a * d + b - one),
        c * (a * d + c - one),
    };
  } else if (id == "n2-B-3eq") {
    out.variables = {"a", "b", "c", "d", "x", "y"};
    out.origin = SystemOrigin::PaperN2B;
    V v{6};
    PolyExpr a = v(0), b = v(1), c = v(2), d = v(3), x = v(4), y = v(5), one = v.k(1);
    out.polys = {
        b * (x + a * y),
        c * (y + d * x),
        x * (c + d - b * c - one) - y * (a + b - b * c - one),
    };
  } else if (id == "n3-29eq") {
    out.variables = {"a", "b", "c", "x", "y", "z", "u", "v", "w"};
    out.origin = SystemOrigin::PaperN3;
    V vv{9};
    PolyExpr a = vv(0), b = vv(1), c = vv(2), x = vv(3), y = vv(4), z = vv(5), u = vv(6),
             v = vv(7), w = vv(8), one = vv.k(1);
    out.polys = {
        a * b * x,
        b * x * y,
        v * y * z,
        v * w * z,
        b * x * (b - x),
        v * z * (v - z),
        y * (b * u - c * v),
        y * (-(c * x) + u * z),
        b * (a * y + b - one),
        x * (a * y + x - one),
        z * (w * y + z - one),
        v * (w * y + v - one),
        a * b * u * z + a * c * x + b * c * u,
        b * v * x * z + c * v * y + c * x * y,
        b * u * w * z + c * u * z + c * v * w,
        a * b * u + a * c * v * x + c * u * x,
        b * u * y + b * v * x * z + u * y * z,
        c * u * v + c * v * w * x + u * w * z,
        a * b * w * z + a * c * z + b * c * w + c * c,
        a * u * v + a * v * w * x + u * u + u * w * x,
        b * u * v * z + c * u * y + c * v * v - c * v * z,
        b * u * x * z - b * c * x + c * u * y + c * x * x,
        -(b * b * u) - b * c * v * x + b * u * x - c * u * y,
        -(c * u * y) - c * v * x * z + u * v * z - u * z * z,
        b * w * x * z + c * w * y + c * x * z + c * z - c,
        a * b * v * z + a * c * y + b * c * v + b * c - c,
        -(a * u * y) - a * v * x * z - u * x * z - u * x + u,
        -(b * u * v) - b * v * w * x - u * v - u * w * y + u,
        -(b * c * u) + b * u * u * z - c * c * v * x + c * u * v + c * u * x - c * u * z,
    };
  } else {
    throw std::invalid_argument("paper_system: unknown id " + id);
  }
  return out;
}

bool solution_sets_equal(const PolySystem& s1, const PolySystem& s2, std::uint32_t d,
                         std::uint64_t budget) {
  if (s1.variables != s2.variables) {
    throw std::invalid_argument("solution_sets_equal: variable lists differ");
  }
  const std::size_t nvars = s1.variables.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    total *= d;
    if (total > budget) throw BudgetExceededError("solution_sets_equal: D^vars over budget");
  }
  std::vector<std::int64_t> assign(nvars, 0);
  for (std::uint64_t idx = 0;; ++idx) {
    VecZd point(assign, d);
    auto vanishes = [&](const PolySystem& s) {
      for (const auto& p : s.polys) {
        if (p.eval(point).value() != 0) return false;
      }
      return true;
    };
    if (vanishes(s1) != vanishes(s2)) return false;
    std::size_t k = nvars;
    while (k > 0) {
      if (static_cast<std::uint32_t>(++assign[k - 1]) < d) break;
      assign[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return true;
}

std::string system_to_text(const PolySystem& sys) {
  std::ostringstream os;
  for (const auto& p : sys.polys) os << p.to_string(sys.variables) << "\n";
  return os.str();
}

}  // namespace simplexion
