#include "simplexion/simplex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace simplexion {

SimplexSystem build_system(int n) {
  if (n < 2) throw std::invalid_argument("simplex order must be >= 2, got " + std::to_string(n));
  SimplexSystem sys;
  sys.n = n;
  sys.N = n * (n + 1) / 2;
  // Space label of the pair {i,j}, pairs in lexicographic order.
  std::vector<std::vector<int>> label(n + 2, std::vector<int>(n + 2, 0));
  int next = 1;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) label[i][j] = next++;
  sys.placements.resize(n + 1);
  for (int k = 1; k <= n + 1; ++k) {
    for (int other = 1; other <= n + 1; ++other) {
      if (other == k) continue;
      sys.placements[k - 1].push_back(label[std::min(k, other)][std::max(k, other)]);
    }
    std::sort(sys.placements[k - 1].begin(), sys.placements[k - 1].end());
  }
  return sys;
}

namespace {

void check_placement(const MatZd& a, const VecZd& b, const std::vector<int>& placement, int N) {
  const std::size_t n = a.rows();
  if (!a.is_square()) throw std::invalid_argument("embed: A must be square");
  if (b.size() != n) throw std::invalid_argument("embed: B length must equal A order");
  if (placement.size() != n) throw std::invalid_argument("embed: placement arity mismatch");
  for (int k : placement) {
    if (k < 1 || k > N) throw std::invalid_argument("embed: placement label out of range");
  }
}

}  // namespace

EmbeddedFactor embed(const MatZd& a, const VecZd& b, const std::vector<int>& placement, int N) {
  check_placement(a, b, placement, N);
  const std::size_t n = a.rows();
  MatZd m = MatZd::identity(static_cast<std::size_t>(N) + 1, a.modulus());
  for (std::size_t al = 0; al < n; ++al) {
    for (std::size_t be = 0; be < n; ++be) {
      m.set(placement[al] - 1, placement[be] - 1, a(al, be));
    }
    m.set(placement[al] - 1, N, b[al]);
  }
  return EmbeddedFactor{std::move(m), placement};
}

MatZd embed_homogeneous(const MatZd& a, const std::vector<int>& placement, int N) {
  check_placement(a, VecZd(a.rows(), a.modulus()), placement, N);
  const std::size_t n = a.rows();
  MatZd m = MatZd::identity(N, a.modulus());
  for (std::size_t al = 0; al < n; ++al)
    for (std::size_t be = 0; be < n; ++be)
      m.set(placement[al] - 1, placement[be] - 1, a(al, be));
  return m;
}

std::pair<MatZd, MatZd> lhs_rhs_products(const SimplexSystem& sys, const MatZd& a,
                                         const VecZd& b) {
  std::vector<MatZd> factors;
  factors.reserve(sys.placements.size());
  for (const auto& p : sys.placements) factors.push_back(embed(a, b, p, sys.N).base);
  MatZd lhs = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) lhs = mat_mul(lhs, factors[i]);
  MatZd rhs = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;) rhs = mat_mul(rhs, factors[i]);
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace simplexion
