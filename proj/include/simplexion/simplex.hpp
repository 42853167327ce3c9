#pragma once

#include <utility>
#include <vector>

#include "simplexion/matrix.hpp"

namespace simplexion {

/// Combinatorial shape of the n-simplex equation: N = n(n+1)/2 spaces and
/// n+1 operator placements. Spaces are the 2-subsets of {1..n+1} in lex
/// order, numbered 1..N; placement k lists (ascending) the spaces whose
/// subset contains k. The left-hand side is the placements in listed
/// order, the right-hand side the reverse.
struct SimplexSystem {
  int n = 0;
  int N = 0;
  std::vector<std::vector<int>> placements;  // n+1 entries, space labels in 1..N
};

SimplexSystem build_system(int n);  // n >= 2

/// (N+1)x(N+1) matrix carrying A at the placement's rows/columns, B in the
/// last column at the placement's rows, identity elsewhere, and a final
/// [0,...,0,1] row for the fictitious index.
struct EmbeddedFactor {
  MatZd base;
  std::vector<int> placement;
};

EmbeddedFactor embed(const MatZd& a, const VecZd& b, const std::vector<int>& placement, int N);

/// N x N embedding of A alone (the homogeneous case).
MatZd embed_homogeneous(const MatZd& a, const std::vector<int>& placement, int N);

/// Ordinary matrix products of the embedded factors: first in placement
/// order, second reversed. The operator string maps to the product in the
/// same left-to-right order.
std::pair<MatZd, MatZd> lhs_rhs_products(const SimplexSystem& sys, const MatZd& a,
                                         const VecZd& b);

}  // namespace simplexion
