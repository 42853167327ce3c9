#include "simplexion/affine.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "simplexion/errors.hpp"

namespace simplexion {

AffineSolution make_solution(int n, std::uint32_t d, std::vector<std::vector<std::int64_t>> a,
                             std::vector<std::int64_t> b, std::string prov) {
  return AffineSolution(n, d, MatZd(std::move(a), d), VecZd(std::move(b), d), std::move(prov));
}

IndexMap::IndexMap(int n, std::uint32_t d, std::vector<std::uint32_t> table)
    : n_(n), d_(d), table_(std::move(table)) {
  std::size_t want = 1;
  for (int i = 0; i < n; ++i) want *= d;
  if (table_.size() != want) throw std::invalid_argument("IndexMap: table size != D^n");
}

bool IndexMap::is_bijective() const {
  std::vector<bool> seen(table_.size(), false);
  for (std::uint32_t v : table_) {
    if (v >= table_.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::uint32_t IndexMap::encode(const std::vector<std::uint32_t>& tuple, std::uint32_t d) {
  std::uint32_t s = 0, mult = 1;
  for (std::uint32_t t : tuple) {
    s += t * mult;
    mult *= d;
  }
  return s;
}

std::vector<std::uint32_t> IndexMap::decode(std::uint32_t s, int n, std::uint32_t d) {
  std::vector<std::uint32_t> t(n);
  for (int i = 0; i < n; ++i) {
    t[i] = s % d;
    s /= d;
  }
  return t;
}

IndexMap to_index_map(const AffineSolution& s) {
  if (!det(s.A).is_unit()) {
    throw SingularMatrixError("to_index_map: det(A) is not a unit, map would not permute");
  }
  const std::uint32_t d = s.d;
  const int n = s.n;
  std::size_t count = 1;
  for (int i = 0; i < n; ++i) count *= d;
  std::vector<std::uint32_t> table(count);
  std::vector<std::uint32_t> in(n), out(n);
  for (std::uint32_t st = 0; st < count; ++st) {
    std::uint32_t v = st;
    for (int i = 0; i < n; ++i) {
      in[i] = v % d;
      v /= d;
    }
    for (int i = 0; i < n; ++i) {
      std::uint64_t acc = s.B[i];
      for (int j = 0; j < n; ++j) acc += static_cast<std::uint64_t>(s.A(i, j)) * in[j];
      out[i] = static_cast<std::uint32_t>(acc % d);
    }
    table[st] = encode(out, d);
  }
  return IndexMap(n, d, std::move(table));
}

bool fit_affine(const IndexMap& map, MatZd* a_out, VecZd* b_out) {
  const int n = map.arity();
  const std::uint32_t d = map.modulus();
  std::vector<std::uint32_t> zero(n, 0);
  auto img0 = IndexMap::decode(map.apply_encoded(IndexMap::encode(zero, d)), n, d);
  MatZd a(n, n, d);
  for (int k = 0; k < n; ++k) {
    std::vector<std::uint32_t> e(n, 0);
    e[k] = 1;
    auto img = IndexMap::decode(map.apply_encoded(IndexMap::encode(e, d)), n, d);
    for (int r = 0; r < n; ++r)
      a.set(r, k, static_cast<std::int64_t>(img[r]) - static_cast<std::int64_t>(img0[r]));
  }
  VecZd b(n, d);
  for (int r = 0; r < n; ++r) b.set(r, img0[r]);
  AffineSolution cand(n, d, a, b);
  if (!det(a).is_unit()) return false;
  IndexMap fitted = to_index_map(cand);
  if (!(fitted == map)) return false;
  if (a_out) *a_out = a;
  if (b_out) *b_out = b;
  return true;
}

bool verify_affine(const AffineSolution& s) {
  SimplexSystem sys = build_system(s.n);
  auto [lhs, rhs] = lhs_rhs_products(sys, s.A, s.B);
  return lhs == rhs;
}

namespace {

// Apply the local map in place at the given 0-based space positions of a
// decoded global state.
inline void apply_local(const std::vector<int>& pos, const IndexMap& local,
                        std::vector<std::uint32_t>& state, std::uint32_t d) {
  std::uint32_t sub = 0, mult = 1;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    sub += state[pos[k]] * mult;
    mult *= d;
  }
  std::uint32_t out = local.apply_encoded(sub);
  for (std::size_t k = 0; k < pos.size(); ++k) {
    state[pos[k]] = out % d;
    out /= d;
  }
}

bool check_range(const SimplexSystem& sys, const IndexMap& local, std::uint32_t d,
                 std::uint64_t begin, std::uint64_t end, std::atomic<bool>& ok) {
  const int N = sys.N;
  std::vector<std::vector<int>> pos;
  for (const auto& p : sys.placements) {
    std::vector<int> q;
    for (int lbl : p) q.push_back(lbl - 1);
    pos.push_back(std::move(q));
  }
  std::vector<std::uint32_t> l(N), r(N);
  for (std::uint64_t st = begin; st < end; ++st) {
    if (!ok.load(std::memory_order_relaxed)) return false;
    std::uint64_t v = st;
    for (int i = 0; i < N; ++i) {
      l[i] = r[i] = static_cast<std::uint32_t>(v % d);
      v /= d;
    }
    // LHS string: rightmost operator (last placement) acts first.
    for (std::size_t k = pos.size(); k-- > 0;) apply_local(pos[k], local, l, d);
    // RHS string is the reverse, so the first placement acts first.
    for (std::size_t k = 0; k < pos.size(); ++k) apply_local(pos[k], local, r, d);
    if (l != r) {
      ok.store(false, std::memory_order_relaxed);
      return false;
    }
  }
  return true;
}

}  // namespace

bool verify_tensor(const SimplexSystem& sys, const IndexMap& local, std::uint32_t d, int jobs) {
  if (local.arity() != sys.n) throw std::invalid_argument("verify_tensor: arity != sys.n");
  if (local.modulus() != d) throw ModulusMismatchError("verify_tensor: map modulus != d");
  std::uint64_t count = 1;
  for (int i = 0; i < sys.N; ++i) count *= d;
  std::atomic<bool> ok{true};
  if (jobs <= 1 || count < 4096) {
    return check_range(sys, local, d, 0, count, ok);
  }
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (count + jobs - 1) / jobs;
  for (int t = 0; t < jobs; ++t) {
    std::uint64_t b = t * chunk, e = std::min(count, b + chunk);
    if (b >= e) break;
    threads.emplace_back([&, b, e] { check_range(sys, local, d, b, e, ok); });
  }
  for (auto& th : threads) th.join();
  return ok.load();
}

PermMatrix r_matrix(const IndexMap& local) {
  PermMatrix p;
  p.size = local.states();
  p.row_of_col = local.table();
  return p;
}

}  // namespace simplexion
