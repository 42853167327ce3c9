#include "simplexion/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "simplexion/errors.hpp"

namespace simplexion {

AffineSolution inverse_transform(const AffineSolution& s) {
  MatZd ai = mat_inv(s.A);
  VecZd nb = mat_vec(ai, s.B);
  VecZd b(s.B.size(), s.d);
  for (std::size_t i = 0; i < nb.size(); ++i) b.set(i, -static_cast<std::int64_t>(nb[i]));
  return AffineSolution(s.n, s.d, std::move(ai), std::move(b), s.provenance + ".I");
}

AffineSolution reflect_transform(const AffineSolution& s) {
  const std::size_t n = s.A.rows();
  MatZd a(n, n, s.d);
  VecZd b(n, s.d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.set(i, j, s.A(n - 1 - i, n - 1 - j));
    b.set(i, s.B[n - 1 - i]);
  }
  return AffineSolution(s.n, s.d, std::move(a), std::move(b), s.provenance + ".C");
}

AffineSolution transpose_transform(const AffineSolution& s) {
  return AffineSolution(s.n, s.d, s.A.transposed(), s.B, s.provenance + ".T");
}

AffineSolution gauge_transform(const AffineSolution& s, std::uint32_t u, std::uint32_t v) {
  if (!is_unit_mod(u, s.d)) {
    throw NotAUnitError("gauge scale u=" + std::to_string(u) + " is not a unit mod " +
                        std::to_string(s.d));
  }
  VecZd b(s.B.size(), s.d);
  for (std::size_t i = 0; i < s.B.size(); ++i) {
    std::int64_t row_sum = 0;
    for (std::size_t j = 0; j < s.A.cols(); ++j) row_sum += s.A(i, j);
    std::int64_t nb = static_cast<std::int64_t>(u) * s.B[i] +
                      (1 - row_sum) * static_cast<std::int64_t>(v);
    b.set(i, nb);
  }
  return AffineSolution(s.n, s.d, s.A, std::move(b),
                        s.provenance + ".Q(" + std::to_string(u) + "," + std::to_string(v) + ")");
}

std::vector<VecZd> gauge_orbit_of_b(const AffineSolution& s) {
  std::set<VecZd> out;
  for (std::uint32_t u : unit_values(s.d))
    for (std::uint32_t v = 0; v < s.d; ++v) out.insert(gauge_transform(s, u, v).B);
  return {out.begin(), out.end()};
}

namespace {

using Key = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;

Key key_of(const AffineSolution& s) { return {s.A.values(), s.B.values()}; }

}  // namespace

Orbit orbit(const AffineSolution& s, bool include_transpose) {
  const bool invertible = det(s.A).is_unit();
  std::map<Key, std::string> seen;
  AffineSolution seed(s.n, s.d, s.A, s.B, "");
  seen.emplace(key_of(seed), "");
  std::vector<AffineSolution> frontier{seed};
  while (!frontier.empty()) {
    std::vector<AffineSolution> next;
    for (const auto& cur : frontier) {
      const std::string& via = seen.at(key_of(cur));
      std::vector<std::pair<AffineSolution, std::string>> images;
      images.emplace_back(reflect_transform(cur), via + "C");
      if (invertible) images.emplace_back(inverse_transform(cur), via + "I");
      if (include_transpose) images.emplace_back(transpose_transform(cur), via + "T");
      for (std::uint32_t u : unit_values(s.d)) {
        for (std::uint32_t v = 0; v < s.d; ++v) {
          if (u == 1 && v == 0) continue;
          images.emplace_back(gauge_transform(cur, u, v),
                              via + "Q(" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
      }
      for (auto& [img, chain] : images) {
        Key k = key_of(img);
        if (seen.emplace(k, chain).second) {
          next.emplace_back(img.n, img.d, img.A, img.B, "");
        }
      }
    }
    frontier = std::move(next);
  }
  Orbit out;
  for (const auto& [k, chain] : seen) {
    MatZd a(s.A.rows(), s.A.cols(), s.d);
    for (std::size_t i = 0; i < s.A.rows(); ++i)
      for (std::size_t j = 0; j < s.A.cols(); ++j) a.set(i, j, k.first[i * s.A.cols() + j]);
    VecZd b(s.B.size(), s.d);
    for (std::size_t i = 0; i < s.B.size(); ++i) b.set(i, k.second[i]);
    out.members.push_back({AffineSolution(s.n, s.d, std::move(a), std::move(b), s.provenance),
                           chain.empty() ? "seed" : chain});
  }
  return out;  // std::map iteration gives (A,B)-sorted members
}

AffineSolution canonical_form(const AffineSolution& s) {
  Orbit ob = orbit(s);
  return ob.members.front().sol;  // members sorted; front is the lex minimum
}

MatZd canonical_a(const MatZd& a) {
  std::set<std::vector<std::uint32_t>> seen{a.values()};
  std::vector<MatZd> frontier{a};
  const std::uint32_t d = a.modulus();
  const std::size_t n = a.rows();
  auto reflect_m = [&](const MatZd& m) {
    MatZd r(n, n, d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r.set(i, j, m(n - 1 - i, n - 1 - j));
    return r;
  };
  const bool invertible = det(a).is_unit();
  while (!frontier.empty()) {
    std::vector<MatZd> next;
    for (const auto& cur : frontier) {
      std::vector<MatZd> images{reflect_m(cur)};
      if (invertible) images.push_back(mat_inv(cur));
      for (auto& img : images) {
        if (seen.insert(img.values()).second) next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  MatZd best(n, n, d);
  const auto& min_vals = *seen.begin();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) best.set(i, j, min_vals[i * n + j]);
  return best;
}

}  // namespace simplexion
