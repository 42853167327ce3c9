#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simplexion/affine.hpp"
#include "simplexion/expr.hpp"

namespace simplexion {

/// One printed solution family: A and B entries as expressions in named
/// parameters, with per-parameter domains. Families carrying "fixed_d" are
/// valid only at those moduli; the rest are generic and instantiate at any
/// prime D.
struct CatalogFamily {
  std::string id;
  int n = 0;
  std::string source;
  std::vector<std::vector<Expr>> A;
  std::vector<Expr> B;

  struct Param {
    std::string name;
    enum Domain { Free, Unit } domain;
  };
  std::vector<Param> params;
  std::vector<std::uint32_t> fixed_d;           // empty = generic (prime D)
  std::vector<std::string> exclude_all_one;     // skip assignments where all equal 1
  std::string notes;
  std::string gauge_to;  // id of the gauge-fixed form this family reduces to

  bool admits_modulus(std::uint32_t d) const;
};

struct Catalog {
  std::vector<CatalogFamily> families;

  const CatalogFamily* find(const std::string& id) const;
  std::vector<const CatalogFamily*> find_prefix(const std::string& id) const;
};

Catalog load_catalog(const std::string& path);
Catalog parse_catalog(const std::string& json_text);

using ParamAssignment = std::map<std::string, std::uint32_t>;

/// Evaluate the family templates mod D. Throws DomainViolationError for a
/// modulus outside the family's range, an out-of-domain or missing
/// parameter, or an excluded assignment.
AffineSolution instantiate(const CatalogFamily& fam, const ParamAssignment& params,
                           std::uint32_t d);

/// All in-domain assignments, odometer order over the declared parameters.
std::vector<ParamAssignment> enumerate_assignments(const CatalogFamily& fam, std::uint32_t d);

struct ValidationFailure {
  ParamAssignment assignment;
  std::string diagnostic;
};

struct ValidationReport {
  std::string family;
  std::uint32_t d = 0;
  std::uint64_t instances_tested = 0;
  std::uint64_t tensor_checked = 0;
  std::vector<ValidationFailure> failures;
  bool passed() const { return failures.empty(); }
};

struct ValidateOptions {
  bool exhaustive = true;
  std::uint64_t sample_count = 100;    // used when exhaustive is false
  std::uint64_t seed = 0x5eed;
  // Cross-verify roughly one in seven instances at tensor level, when the
  // state count D^N stays within this budget.
  std::uint64_t tensor_state_budget = 200'000;
  std::uint64_t max_instances = 1'000'000;
};

ValidationReport validate_family(const CatalogFamily& fam, std::uint32_t d,
                                 const ValidateOptions& opts = {});

struct FamilyMatch {
  std::string family;
  ParamAssignment assignment;
};

/// All (family, assignment) pairs over the solution's modulus whose
/// instantiation lands inside orbit(s) (reflect/inverse/gauge closure).
std::vector<FamilyMatch> match_family(const Catalog& cat, const AffineSolution& s);

/// The alternating band pattern: odd rows carry (1 - a_{i-1} a_i, a_i,
/// 1 - a_i a_{i+1}) around the diagonal, even rows the diagonal alone.
/// Reproduces the triangular families at n = 2, 3, 4.
MatZd band_matrix(int n, const std::vector<std::uint32_t>& a, std::uint32_t d);

}  // namespace simplexion
