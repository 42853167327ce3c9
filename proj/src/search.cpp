#include "simplexion/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "simplexion/errors.hpp"
#include "simplexion/symmetry.hpp"

namespace simplexion {

namespace {

// Decode candidate index -> A, entries row-major, first entry most
// significant, so ascending index = ascending flattened lex order.
MatZd decode_candidate(std::uint64_t idx, int n, std::uint32_t d) {
  MatZd a(n, n, d);
  for (int k = n * n; k-- > 0;) {
    a.set(k / n, k % n, static_cast<std::int64_t>(idx % d));
    idx /= d;
  }
  return a;
}

bool homogeneous_ok(const SimplexSystem& sys, const MatZd& a) {
  std::vector<MatZd> fac;
  fac.reserve(sys.placements.size());
  for (const auto& p : sys.placements) fac.push_back(embed_homogeneous(a, p, sys.N));
  MatZd lhs = fac.front();
  for (std::size_t i = 1; i < fac.size(); ++i) lhs = mat_mul(lhs, fac[i]);
  MatZd rhs = fac.back();
  for (std::size_t i = fac.size() - 1; i-- > 0;) rhs = mat_mul(rhs, fac[i]);
  return lhs == rhs;
}

// The inhomogeneous layer is linear in B: column N of the LHS-RHS product
// difference, evaluated at the unit B vectors.
std::vector<VecZd> solve_b_layer(const SimplexSystem& sys, const MatZd& a) {
  const std::uint32_t d = a.modulus();
  const int n = sys.n;
  MatZd m(sys.N, n, d);
  for (int k = 0; k < n; ++k) {
    VecZd e(n, d);
    e.set(k, 1);
    auto [lhs, rhs] = lhs_rhs_products(sys, a, e);
    for (int r = 0; r < sys.N; ++r) {
      m.set(r, k, static_cast<std::int64_t>(lhs(r, sys.N)) - rhs(r, sys.N));
    }
  }
  return solve_linear(m, VecZd(sys.N, d));
}

}  // namespace

SearchReport search_affine(int n, std::uint32_t d, const SearchOptions& opts) {
  if (n < 2 || n > 5) throw std::invalid_argument("search_affine: n must be in 2..5");
  SearchReport rep;
  rep.n = n;
  rep.d = d;
  rep.mode = "affine";

  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= d;
    if (total > opts.budget) {
      throw BudgetExceededError("search_affine: " + std::to_string(n) + "x" +
                                std::to_string(n) + " candidate space over Z_" +
                                std::to_string(d) + " exceeds budget " +
                                std::to_string(opts.budget));
    }
  }
  rep.total_candidates = total;

  const SimplexSystem sys = build_system(n);
  const int jobs = std::max(1, opts.jobs);
  const std::uint64_t chunks = std::min<std::uint64_t>(total, jobs * 8);
  std::vector<std::vector<AffineSolution>> found(chunks);

  auto worker = [&](std::uint64_t chunk) {
    const std::uint64_t begin = total * chunk / chunks;
    const std::uint64_t end = total * (chunk + 1) / chunks;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      MatZd a = decode_candidate(idx, n, d);
      if (!det(a).is_unit()) continue;
      if (!homogeneous_ok(sys, a)) continue;
      for (const VecZd& b : solve_b_layer(sys, a)) {
        found[chunk].emplace_back(n, d, a, b, "search:affine");
      }
    }
  };

  if (jobs <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) worker(c);
  } else {
    std::vector<std::thread> threads;
    std::atomic<std::uint64_t> next{0};
    for (int t = 0; t < jobs; ++t) {
      threads.emplace_back([&] {
        while (true) {
          std::uint64_t c = next.fetch_add(1);
          if (c >= chunks) return;
          worker(c);
        }
      });
    }
    for (auto& th : threads) th.join();
  }
  for (auto& chunk : found) {
    for (auto& s : chunk) rep.solutions.push_back(std::move(s));
  }
  // chunk-ordered concatenation is already ascending in (A,B)
  return rep;
}

SearchReport brute_force_perm(int n, std::uint32_t d, const SearchOptions& opts) {
  SearchReport rep;
  rep.n = n;
  rep.d = d;
  rep.mode = "perm";

  std::uint64_t states = 1;
  for (int i = 0; i < n; ++i) states *= d;
  long double fact = 1;
  for (std::uint64_t k = 2; k <= states; ++k) fact *= static_cast<long double>(k);
  if (fact > static_cast<long double>(opts.budget)) {
    throw BudgetExceededError("brute_force_perm: (" + std::to_string(d) + "^" +
                              std::to_string(n) + ")! exceeds budget " +
                              std::to_string(opts.budget));
  }

  const SimplexSystem sys = build_system(n);
  std::vector<std::uint32_t> perm(states);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    ++rep.total_candidates;
    IndexMap map(n, d, perm);
    if (!verify_tensor(sys, map, d)) continue;
    PermSolution ps{map, std::nullopt};
    MatZd a(n, n, d);
    VecZd b(n, d);
    if (fit_affine(map, &a, &b)) {
      ps.affine = AffineSolution(n, d, a, b, "search:perm");
    }
    rep.perm_solutions.push_back(std::move(ps));
    if (ps.affine) {
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (const auto& ps : rep.perm_solutions) {
    if (ps.affine) rep.solutions.push_back(*ps.affine);
  }
  std::sort(rep.solutions.begin(), rep.solutions.end());
  return rep;
}

bool is_reducible(const AffineSolution& s) {
  const int n = s.n;
  if (n < 3) return false;
  auto block_split = [&](int k) {
    for (int i = 0; i < k; ++i) {
      for (int j = k; j < n; ++j) {
        if (s.A(i, j) != 0 || s.A(j, i) != 0) return false;
      }
    }
    return true;
  };
  if (block_split(1) || block_split(n - 1)) return true;
  if (n == 4 && block_split(2)) return true;
  return false;
}

SearchReport classify(SearchReport report, const Catalog* catalog) {
  using Key = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
  auto key_of = [](const AffineSolution& s) -> Key { return {s.A.values(), s.B.values()}; };

  std::vector<const AffineSolution*> irreducible;
  std::set<Key> irreducible_keys;
  for (const auto& s : report.solutions) {
    if (is_reducible(s)) {
      ++report.reduced_out;
    } else {
      irreducible.push_back(&s);
      irreducible_keys.insert(key_of(s));
    }
  }

  std::set<Key> visited;
  report.orbit_representatives.clear();
  for (const AffineSolution* s : irreducible) {
    if (visited.count(key_of(*s))) continue;
    Orbit ob = orbit(*s);
    const AffineSolution* best = nullptr;
    for (const auto& m : ob.members) {
      Key k = key_of(m.sol);
      if (irreducible_keys.count(k)) visited.insert(k);
    }
    // canonical form = lex-min orbit member; members are sorted
    Representative rep{canonical_form(*s), ob.members.size(), {}};
    rep.sol.provenance = s->provenance + ":orbit-representative";
    if (catalog) rep.families = match_family(catalog ? *catalog : Catalog{}, rep.sol);
    (void)best;
    report.orbit_representatives.push_back(std::move(rep));
  }
  std::sort(report.orbit_representatives.begin(), report.orbit_representatives.end(),
            [](const Representative& x, const Representative& y) { return x.sol < y.sol; });

  std::set<std::vector<std::uint32_t>> class_keys;
  report.a_classes.clear();
  for (const auto& r : report.orbit_representatives) {
    MatZd c = canonical_a(r.sol.A);
    if (class_keys.insert(c.values()).second) report.a_classes.push_back(std::move(c));
  }
  std::sort(report.a_classes.begin(), report.a_classes.end());

  report.unmatched.clear();
  if (catalog) {
    for (const auto& r : report.orbit_representatives) {
      if (r.families.empty()) report.unmatched.push_back(r);
    }
  }
  return report;
}

}  // namespace simplexion
