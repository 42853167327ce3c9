#include "simplexion/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "simplexion/errors.hpp"
#include "simplexion/symmetry.hpp"

namespace simplexion {

bool CatalogFamily::admits_modulus(std::uint32_t d) const {
  if (!fixed_d.empty()) {
    return std::find(fixed_d.begin(), fixed_d.end(), d) != fixed_d.end();
  }
  return is_prime(d);
}

const CatalogFamily* Catalog::find(const std::string& id) const {
  for (const auto& f : families) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

std::vector<const CatalogFamily*> Catalog::find_prefix(const std::string& id) const {
  std::vector<const CatalogFamily*> out;
  for (const auto& f : families) {
    if (f.id == id || (f.id.size() > id.size() && f.id.compare(0, id.size(), id) == 0)) {
      out.push_back(&f);
    }
  }
  return out;
}

Catalog parse_catalog(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  Catalog cat;
  for (const auto& jf : j.at("families")) {
    CatalogFamily f;
    f.id = jf.at("id").get<std::string>();
    f.n = jf.at("n").get<int>();
    f.source = jf.value("source", "");
    for (const auto& row : jf.at("A")) {
      std::vector<Expr> r;
      for (const auto& cell : row) r.push_back(Expr::parse(cell.get<std::string>()));
      f.A.push_back(std::move(r));
    }
    for (const auto& cell : jf.at("B")) f.B.push_back(Expr::parse(cell.get<std::string>()));
    if (static_cast<int>(f.A.size()) != f.n || static_cast<int>(f.B.size()) != f.n) {
      throw ParseError("catalog family " + f.id + ": template shape != n");
    }
    for (const auto& jp : jf.value("params", nlohmann::json::array())) {
      CatalogFamily::Param p;
      p.name = jp.at("name").get<std::string>();
      const std::string dom = jp.at("domain").get<std::string>();
      if (dom == "free") {
        p.domain = CatalogFamily::Param::Free;
      } else if (dom == "unit") {
        p.domain = CatalogFamily::Param::Unit;
      } else {
        throw ParseError("catalog family " + f.id + ": unknown domain " + dom);
      }
      f.params.push_back(std::move(p));
    }
    for (const auto& d : jf.value("fixed_d", nlohmann::json::array()))
      f.fixed_d.push_back(d.get<std::uint32_t>());
    for (const auto& p : jf.value("exclude_all_one", nlohmann::json::array()))
      f.exclude_all_one.push_back(p.get<std::string>());
    f.notes = jf.value("notes", "");
    f.gauge_to = jf.value("gauge_to", "");
    cat.families.push_back(std::move(f));
  }
  return cat;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

namespace {

void check_assignment(const CatalogFamily& fam, const ParamAssignment& params,
                      std::uint32_t d) {
  for (const auto& p : fam.params) {
    auto it = params.find(p.name);
    if (it == params.end()) {
      throw DomainViolationError("family " + fam.id + ": missing parameter " + p.name);
    }
    if (it->second >= d) {
      throw DomainViolationError("family " + fam.id + ": parameter " + p.name +
                                 " out of range for modulus " + std::to_string(d));
    }
    if (p.domain == CatalogFamily::Param::Unit && !is_unit_mod(it->second, d)) {
      throw DomainViolationError("family " + fam.id + ": parameter " + p.name + "=" +
                                 std::to_string(it->second) + " must be a unit mod " +
                                 std::to_string(d));
    }
  }
  if (!fam.exclude_all_one.empty()) {
    bool all_one = true;
    for (const auto& name : fam.exclude_all_one) {
      auto it = params.find(name);
      if (it == params.end() || it->second != 1) {
        all_one = false;
        break;
      }
    }
    if (all_one) {
      throw DomainViolationError("family " + fam.id + ": excluded assignment (all of " +
                                 "the constrained parameters equal 1)");
    }
  }
}

std::string assignment_text(const ParamAssignment& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ",";
    out += k + "=" + std::to_string(v);
  }
  return out;
}

}  // namespace

AffineSolution instantiate(const CatalogFamily& fam, const ParamAssignment& params,
                           std::uint32_t d) {
  if (!fam.admits_modulus(d)) {
    throw DomainViolationError("family " + fam.id + " does not admit modulus " +
                               std::to_string(d) +
                               (fam.fixed_d.empty() ? " (generic families need a prime)"
                                                    : " (fixed-modulus family)"));
  }
  check_assignment(fam, params, d);
  MatZd a(fam.n, fam.n, d);
  for (int i = 0; i < fam.n; ++i)
    for (int j = 0; j < fam.n; ++j) a.set(i, j, fam.A[i][j].eval(params, d));
  VecZd b(fam.n, d);
  for (int i = 0; i < fam.n; ++i) b.set(i, fam.B[i].eval(params, d));
  std::string prov = "catalog:" + fam.id;
  if (!params.empty()) prov += "{" + assignment_text(params) + "}";
  return AffineSolution(fam.n, d, std::move(a), std::move(b), std::move(prov));
}

std::vector<ParamAssignment> enumerate_assignments(const CatalogFamily& fam, std::uint32_t d) {
  std::vector<std::vector<std::uint32_t>> ranges;
  for (const auto& p : fam.params) {
    if (p.domain == CatalogFamily::Param::Unit) {
      ranges.push_back(unit_values(d));
    } else {
      std::vector<std::uint32_t> all(d);
      for (std::uint32_t v = 0; v < d; ++v) all[v] = v;
      ranges.push_back(std::move(all));
    }
  }
  std::vector<ParamAssignment> out;
  std::vector<std::size_t> idx(ranges.size(), 0);
  while (true) {
    ParamAssignment a;
    for (std::size_t k = 0; k < ranges.size(); ++k) a[fam.params[k].name] = ranges[k][idx[k]];
    bool excluded = false;
    if (!fam.exclude_all_one.empty()) {
      excluded = true;
      for (const auto& name : fam.exclude_all_one) {
        auto it = a.find(name);
        if (it == a.end() || it->second != 1) {
          excluded = false;
          break;
        }
      }
    }
    if (!excluded) out.push_back(std::move(a));
    std::size_t k = ranges.size();
    while (k > 0) {
      if (++idx[k - 1] < ranges[k - 1].size()) break;
      idx[k - 1] = 0;
      --k;
    }
    if (k == 0 || ranges.empty()) break;
  }
  return out;
}

ValidationReport validate_family(const CatalogFamily& fam, std::uint32_t d,
                                 const ValidateOptions& opts) {
  if (!fam.admits_modulus(d)) {
    throw DomainViolationError("family " + fam.id + " does not admit modulus " +
                               std::to_string(d));
  }
  ValidationReport rep;
  rep.family = fam.id;
  rep.d = d;

  std::vector<ParamAssignment> assignments;
  if (opts.exhaustive) {
    assignments = enumerate_assignments(fam, d);
    if (assignments.size() > opts.max_instances) {
      throw BudgetExceededError("validate_family: " + std::to_string(assignments.size()) +
                                " assignments exceed budget");
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::vector<std::vector<std::uint32_t>> ranges;
    for (const auto& p : fam.params) {
      ranges.push_back(p.domain == CatalogFamily::Param::Unit ? unit_values(d)
                                                              : std::vector<std::uint32_t>());
      if (ranges.back().empty()) {
        for (std::uint32_t v = 0; v < d; ++v) ranges.back().push_back(v);
      }
    }
    while (assignments.size() < opts.sample_count) {
      ParamAssignment a;
      for (std::size_t k = 0; k < ranges.size(); ++k) {
        a[fam.params[k].name] =
            ranges[k][static_cast<std::size_t>(rng() % ranges[k].size())];
      }
      bool excluded = !fam.exclude_all_one.empty();
      for (const auto& name : fam.exclude_all_one) {
        auto it = a.find(name);
        if (it == a.end() || it->second != 1) {
          excluded = false;
          break;
        }
      }
      if (!excluded) assignments.push_back(std::move(a));
    }
  }

  SimplexSystem sys = build_system(fam.n);
  std::uint64_t tensor_states = 1;
  bool tensor_feasible = true;
  for (int i = 0; i < sys.N; ++i) {
    tensor_states *= d;
    if (tensor_states > opts.tensor_state_budget) {
      tensor_feasible = false;
      break;
    }
  }
  const std::uint64_t stride = std::max<std::uint64_t>(1, assignments.size() / 7);

  for (std::size_t i = 0; i < assignments.size(); ++i) {
    AffineSolution sol = instantiate(fam, assignments[i], d);
    ++rep.instances_tested;
    if (!verify_affine(sol)) {
      rep.failures.push_back({assignments[i], "matrix-level verification failed"});
      continue;
    }
    if (tensor_feasible && (i % stride == 0) && det(sol.A).is_unit()) {
      ++rep.tensor_checked;
      if (!verify_tensor(sys, to_index_map(sol), d)) {
        rep.failures.push_back({assignments[i], "tensor-level verification failed"});
      }
    }
  }
  return rep;
}

std::vector<FamilyMatch> match_family(const Catalog& cat, const AffineSolution& s) {
  Orbit ob = orbit(s);
  std::set<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> members;
  for (const auto& m : ob.members) members.insert({m.sol.A.values(), m.sol.B.values()});

  std::vector<FamilyMatch> out;
  for (const auto& fam : cat.families) {
    if (fam.n != s.n || !fam.admits_modulus(s.d)) continue;
    for (const auto& assign : enumerate_assignments(fam, s.d)) {
      AffineSolution inst = instantiate(fam, assign, s.d);
      if (members.count({inst.A.values(), inst.B.values()})) {
        out.push_back({fam.id, assign});
      }
    }
  }
  return out;
}

MatZd band_matrix(int n, const std::vector<std::uint32_t>& a, std::uint32_t d) {
  if (static_cast<int>(a.size()) != n) {
    throw std::invalid_argument("band_matrix: need one parameter per row");
  }
  MatZd m(n, n, d);
  for (int i = 0; i < n; ++i) {
    m.set(i, i, a[i]);
    if (i % 2 == 0) {  // odd rows in 1-based counting carry the band
      if (i > 0) m.set(i, i - 1, 1 - static_cast<std::int64_t>(a[i - 1]) * a[i]);
      if (i + 1 < n) m.set(i, i + 1, 1 - static_cast<std::int64_t>(a[i]) * a[i + 1]);
    }
  }
  return m;
}

}  // namespace simplexion
