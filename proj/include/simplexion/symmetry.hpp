#pragma once

#include <string>
#include <vector>

#include "simplexion/affine.hpp"

namespace simplexion {

/// The discrete transformation group on (A, B): inverse (index
/// transposition of R), central reflection (index reversal), transposition
/// of A, and the B-only gauge family.
enum class SymmetryKind { Inverse, Reflect, Transpose, Gauge };

struct SymmetryOp {
  SymmetryKind kind;
  std::uint32_t u = 1;  // Gauge only; must be a unit
  std::uint32_t v = 0;  // Gauge only
};

/// (A, B) -> (A^{-1}, -A^{-1} B). Requires unit determinant.
AffineSolution inverse_transform(const AffineSolution& s);

/// Reflection across the matrix center: A'(i,j) = A(n+1-i, n+1-j),
/// B'(i) = B(n+1-i).
AffineSolution reflect_transform(const AffineSolution& s);

/// A -> A^T with B unchanged. Preserves solutionhood of the homogeneous
/// equation only; callers must re-verify when B != 0.
AffineSolution transpose_transform(const AffineSolution& s);

/// B_t(i) = u*B(i) + (1 - row_sum_i(A)) * v; A unchanged. u must be a unit.
AffineSolution gauge_transform(const AffineSolution& s, std::uint32_t u, std::uint32_t v);

/// All gauge images of B (u over units, v over Z_D), deduplicated, sorted.
std::vector<VecZd> gauge_orbit_of_b(const AffineSolution& s);

struct OrbitMember {
  AffineSolution sol;
  std::string via;  // generator chain from the seed, e.g. "R.I.Q(2,1)"
};

struct Orbit {
  std::vector<OrbitMember> members;  // sorted by (A,B)
};

/// Closure of {s} under Reflect, Inverse (when det is a unit) and all
/// Gauge(u,v). Transpose joins only when include_transpose is set; the
/// printed catalogs treat transposes as separate families.
Orbit orbit(const AffineSolution& s, bool include_transpose = false);

/// Lexicographically smallest member of orbit(s), comparing the flattened
/// (A row-major, then B) sequence.
AffineSolution canonical_form(const AffineSolution& s);

/// Canonical representative of A under {Inverse, Reflect} closure alone —
/// the grouping used when counting solution families.
MatZd canonical_a(const MatZd& a);

}  // namespace simplexion
