#include "simplexion/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace simplexion {

namespace {

void require_same_modulus(std::uint32_t a, std::uint32_t b) {
  if (a != b) {
    throw ModulusMismatchError("modulus mismatch: " + std::to_string(a) + " vs " +
                               std::to_string(b));
  }
}

}  // namespace

VecZd::VecZd(std::size_t len, std::uint32_t modulus) : vals_(len, 0), d_(modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
}

VecZd::VecZd(std::vector<std::int64_t> entries, std::uint32_t modulus) : d_(modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  vals_.reserve(entries.size());
  for (std::int64_t e : entries) vals_.push_back(mod_reduce(e, modulus));
}

bool VecZd::is_zero() const {
  return std::all_of(vals_.begin(), vals_.end(), [](std::uint32_t v) { return v == 0; });
}

MatZd::MatZd(std::size_t rows, std::size_t cols, std::uint32_t modulus)
    : rows_(rows), cols_(cols), d_(modulus), vals_(rows * cols, 0) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
}

MatZd::MatZd(std::vector<std::vector<std::int64_t>> rows, std::uint32_t modulus)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()), d_(modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  vals_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::int64_t v : r) vals_.push_back(mod_reduce(v, modulus));
  }
}

MatZd MatZd::identity(std::size_t n, std::uint32_t modulus) {
  MatZd m(n, n, modulus);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatZd MatZd::transposed() const {
  MatZd t(cols_, rows_, d_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

std::string MatZd::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

MatZd mat_mul(const MatZd& x, const MatZd& y) {
  require_same_modulus(x.modulus(), y.modulus());
  if (x.cols() != y.rows()) throw std::invalid_argument("dimension mismatch in mat_mul");
  const std::uint32_t d = x.modulus();
  MatZd out(x.rows(), y.cols(), d);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const std::uint64_t xik = x(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) {
        std::uint64_t acc = out(i, j) + xik * y(k, j);
        out.set(i, j, static_cast<std::int64_t>(acc % d));
      }
    }
  }
  return out;
}

VecZd mat_vec(const MatZd& x, const VecZd& v) {
  require_same_modulus(x.modulus(), v.modulus());
  if (x.cols() != v.size()) throw std::invalid_argument("dimension mismatch in mat_vec");
  const std::uint32_t d = x.modulus();
  VecZd out(x.rows(), d);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < x.cols(); ++j) acc += static_cast<std::uint64_t>(x(i, j)) * v[j];
    out.set(i, static_cast<std::int64_t>(acc % d));
  }
  return out;
}

namespace {

std::int64_t det_cofactor(const std::vector<std::int64_t>& m, std::size_t n,
                          std::uint32_t d) {
  if (n == 1) return m[0] % d;
  if (n == 2) return mod_reduce(m[0] * m[3] - m[1] * m[2], d);
  std::int64_t acc = 0;
  std::vector<std::int64_t> minor((n - 1) * (n - 1));
  for (std::size_t j = 0; j < n; ++j) {
    if (m[j] != 0) {
      std::size_t t = 0;
      for (std::size_t r = 1; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) minor[t++] = m[r * n + c];
      std::int64_t sub = det_cofactor(minor, n - 1, d);
      std::int64_t term = mod_reduce(m[j] * sub, d);
      acc += (j % 2 == 0) ? term : -term;
    }
  }
  return mod_reduce(acc, d);
}

std::int64_t det_bareiss(std::vector<std::int64_t> m, std::size_t n, std::uint32_t d) {
  // Fraction-free elimination over the integers; exact divisions only.
  // Entry growth is bounded well inside int64 for the sizes used here (<= 8).
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
      }
      m[i * n + k] = 0;
    }
    prev = m[k * n + k];
  }
  return mod_reduce(sign * m[n * n - 1], d);
}

}  // namespace

ZMod det(const MatZd& x) {
  if (!x.is_square()) throw std::invalid_argument("det of non-square matrix");
  const std::size_t n = x.rows();
  if (n == 0) return ZMod(1, x.modulus());
  if (n > 8) throw std::invalid_argument("det supported up to 8x8");
  std::vector<std::int64_t> m(n * n);
  for (std::size_t i = 0; i < n * n; ++i) m[i] = x.values()[i];
  std::int64_t v = (n <= 4) ? det_cofactor(m, n, x.modulus()) : det_bareiss(m, n, x.modulus());
  return ZMod(v, x.modulus());
}

MatZd mat_inv(const MatZd& x) {
  if (!x.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = x.rows();
  const std::uint32_t d = x.modulus();
  ZMod dt = det(x);
  if (!dt.is_unit()) {
    throw SingularMatrixError("matrix determinant " + std::to_string(dt.value()) +
                              " is not a unit mod " + std::to_string(d));
  }
  const std::uint32_t di = dt.inv().value();
  MatZd out(n, n, d);
  std::vector<std::int64_t> minor((n - 1) * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t t = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          minor[t++] = x(r, c);
        }
      }
      std::int64_t cof = (n == 1) ? 1 : det_cofactor(minor, n - 1, d);
      if ((i + j) % 2 == 1) cof = -cof;
      // adjugate is the transposed cofactor matrix
      out.set(j, i, mod_reduce(cof * di, d));
    }
  }
  return out;
}

namespace {

// All solutions over a prime modulus via row echelon + free-variable sweep.
std::vector<VecZd> solve_prime(const MatZd& m, const VecZd& c) {
  const std::uint32_t d = m.modulus();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::uint32_t>> aug(rows, std::vector<std::uint32_t>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = m(i, j);
    aug[i][cols] = c[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && aug[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(aug[p], aug[r]);
    const std::uint64_t pin = inv_mod(aug[r][col], d);
    for (std::size_t j = col; j <= cols; ++j)
      aug[r][j] = static_cast<std::uint32_t>(aug[r][j] * pin % d);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug[i][col] == 0) continue;
      const std::uint64_t f = aug[i][col];
      for (std::size_t j = col; j <= cols; ++j) {
        std::uint64_t v = aug[i][j] + static_cast<std::uint64_t>(d - 1) * f % d * aug[r][j];
        aug[i][j] = static_cast<std::uint32_t>(v % d);
      }
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (aug[i][cols] != 0) return {};  // inconsistent
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t pc : pivot_col) is_pivot[pc] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < cols; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  std::vector<VecZd> out;
  std::vector<std::uint32_t> freev(free_cols.size(), 0);
  while (true) {
    VecZd x(cols, d);
    for (std::size_t k = 0; k < free_cols.size(); ++k) x.set(free_cols[k], freev[k]);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      std::int64_t v = aug[i][cols];
      for (std::size_t k = 0; k < free_cols.size(); ++k)
        v -= static_cast<std::int64_t>(aug[i][free_cols[k]]) * freev[k];
      x.set(pivot_col[i], v);
    }
    out.push_back(std::move(x));
    // next free assignment, odometer style
    std::size_t k = free_cols.size();
    while (k > 0) {
      if (++freev[k - 1] < d) break;
      freev[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VecZd> solve_exhaustive(const MatZd& m, const VecZd& c) {
  const std::uint32_t d = m.modulus();
  const std::size_t cols = m.cols();
  if (cols > 8) throw BudgetExceededError("solve_linear: exhaustive path limited to 8 unknowns");
  std::vector<VecZd> out;
  std::vector<std::int64_t> x(cols, 0);
  while (true) {
    VecZd cand(x, d);
    if (mat_vec(m, cand) == c) out.push_back(cand);
    std::size_t k = cols;
    while (k > 0) {
      if (static_cast<std::uint32_t>(++x[k - 1]) < d) break;
      x[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;  // generated in ascending lex order already
}

}  // namespace

std::vector<VecZd> solve_linear(const MatZd& m, const VecZd& c) {
  require_same_modulus(m.modulus(), c.modulus());
  if (m.rows() != c.size()) throw std::invalid_argument("solve_linear: rows != len(c)");
  if (is_prime(m.modulus())) return solve_prime(m, c);
  return solve_exhaustive(m, c);
}

}  // namespace simplexion
