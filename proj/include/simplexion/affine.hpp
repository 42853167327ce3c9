#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simplexion/matrix.hpp"
#include "simplexion/simplex.hpp"

namespace simplexion {

/// One candidate/solution of the affine permutation ansatz: the local map
/// sends an index tuple i to A*i + B over Z_D.
struct AffineSolution {
  int n;
  std::uint32_t d;
  MatZd A;
  VecZd B;
  std::string provenance;

  AffineSolution(int n_, std::uint32_t d_, MatZd a, VecZd b, std::string prov = "")
      : n(n_), d(d_), A(std::move(a)), B(std::move(b)), provenance(std::move(prov)) {}

  /// Flattened (A row-major, then B) comparison; provenance is not identity.
  friend bool operator==(const AffineSolution& x, const AffineSolution& y) {
    return x.n == y.n && x.d == y.d && x.A == y.A && x.B == y.B;
  }
  friend bool operator<(const AffineSolution& x, const AffineSolution& y) {
    if (x.A.values() != y.A.values()) return x.A.values() < y.A.values();
    return x.B.values() < y.B.values();
  }
};

AffineSolution make_solution(int n, std::uint32_t d, std::vector<std::vector<std::int64_t>> a,
                             std::vector<std::int64_t> b, std::string prov = "");

/// A bijection of Z_D^n index tuples, stored as a table on encoded states.
/// Encoding: tuple (i_1,...,i_n) <-> i_1 + D*i_2 + ... + D^(n-1)*i_n, i.e.
/// the first index varies fastest. That matches the printed R-matrices.
class IndexMap {
 public:
  IndexMap(int n, std::uint32_t d, std::vector<std::uint32_t> table);

  int arity() const { return n_; }
  std::uint32_t modulus() const { return d_; }
  std::size_t states() const { return table_.size(); }
  std::uint32_t apply_encoded(std::uint32_t s) const { return table_[s]; }
  const std::vector<std::uint32_t>& table() const { return table_; }

  bool is_bijective() const;

  static std::uint32_t encode(const std::vector<std::uint32_t>& tuple, std::uint32_t d);
  static std::vector<std::uint32_t> decode(std::uint32_t s, int n, std::uint32_t d);

  friend bool operator==(const IndexMap& a, const IndexMap& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.table_ == b.table_;
  }
  friend bool operator<(const IndexMap& a, const IndexMap& b) { return a.table_ < b.table_; }

 private:
  int n_;
  std::uint32_t d_;
  std::vector<std::uint32_t> table_;
};

/// The tuple map i -> A*i + B. Requires det(A) to be a unit (else the map
/// is not a permutation); throws SingularMatrixError.
IndexMap to_index_map(const AffineSolution& s);

/// If the map is affine, recover (A, B); otherwise nullopt-like empty.
/// (A is read off the images of 0 and the unit tuples, then checked.)
bool fit_affine(const IndexMap& map, MatZd* a_out, VecZd* b_out);

/// Matrix-level check: LHS product of embedded factors equals RHS product.
bool verify_affine(const AffineSolution& s);

/// Ground-truth check on Z_D^N states: applying the local map at each
/// placement (rightmost operator first on the LHS string, i.e. placements
/// in reverse listed order; forward order for the reversed RHS string)
/// gives the same image for every state.
bool verify_tensor(const SimplexSystem& sys, const IndexMap& local, std::uint32_t d,
                   int jobs = 1);

/// Dense 0/1 permutation matrix of the map: row = output state, column =
/// input state, encoded as above. Exactly one 1 per row and column.
struct PermMatrix {
  std::size_t size = 0;
  std::vector<std::uint32_t> row_of_col;  // row index of the 1 in each column
  int operator()(std::size_t r, std::size_t c) const { return row_of_col[c] == r ? 1 : 0; }
};

PermMatrix r_matrix(const IndexMap& local);

}  // namespace simplexion
