#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simplexion/affine.hpp"
#include "simplexion/catalog.hpp"

namespace simplexion {

struct SearchOptions {
  std::uint64_t budget = 100'000'000;  // max A-candidates / permutations
  int jobs = 1;
};

/// One permutation solution found by brute force, with its affine fit when
/// the map is affine-representable.
struct PermSolution {
  IndexMap map;
  std::optional<AffineSolution> affine;
};

/// A canonical orbit representative with its catalog matches.
struct Representative {
  AffineSolution sol;
  std::size_t orbit_size = 0;
  std::vector<FamilyMatch> families;
};

struct SearchReport {
  int n = 0;
  std::uint32_t d = 0;
  std::string mode;  // "affine" or "perm"
  std::uint64_t total_candidates = 0;

  std::vector<AffineSolution> solutions;   // every (A,B) found, sorted
  std::vector<PermSolution> perm_solutions;  // perm mode only

  // Filled by classify():
  std::uint64_t reduced_out = 0;                 // solutions dropped as reducible
  std::vector<Representative> orbit_representatives;  // canonical irreducible orbits
  std::vector<MatZd> a_classes;  // canonical homogeneous parts — the family count
  std::vector<Representative> unmatched;  // representatives with no catalog match
};

/// Enumerate all A over Z_D^{n x n} with unit determinant, keep those
/// passing the homogeneous embedded-product equation, then solve the
/// (linear in B) inhomogeneous layer for each survivor. Deterministic
/// output order regardless of job count.
SearchReport search_affine(int n, std::uint32_t d, const SearchOptions& opts = {});

/// Enumerate every permutation of the Z_D^n state set and test it at
/// tensor level. Feasible only for tiny D^n; the budget caps (D^n)!.
SearchReport brute_force_perm(int n, std::uint32_t d, const SearchOptions& opts = {});

/// Block-decomposability in the catalogued patterns: a leading or trailing
/// 1x1 block, or (n=4) the 2+2 split. Never true for n=2 — the catalog
/// keeps diagonal two-space solutions.
bool is_reducible(const AffineSolution& s);

/// Orbit-reduce (canonical forms of the reflect/inverse/gauge closure),
/// drop reducible solutions, group by the A-part class, and — when a
/// catalog is given — annotate representatives with their family matches.
SearchReport classify(SearchReport report, const Catalog* catalog = nullptr);

}  // namespace simplexion
