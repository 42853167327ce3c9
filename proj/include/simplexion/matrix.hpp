#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "simplexion/zmod.hpp"

namespace simplexion {

class MatZd;

/// Dense vector over Z_D. Entries are canonical residues.
class VecZd {
 public:
  VecZd(std::size_t len, std::uint32_t modulus);           // zero vector
  VecZd(std::vector<std::int64_t> entries, std::uint32_t modulus);

  std::size_t size() const { return vals_.size(); }
  std::uint32_t modulus() const { return d_; }

  std::uint32_t operator[](std::size_t i) const { return vals_[i]; }
  void set(std::size_t i, std::int64_t v) { vals_[i] = mod_reduce(v, d_); }
  ZMod at(std::size_t i) const { return ZMod(vals_[i], d_); }

  const std::vector<std::uint32_t>& values() const { return vals_; }
  bool is_zero() const;

  friend bool operator==(const VecZd& a, const VecZd& b) {
    return a.d_ == b.d_ && a.vals_ == b.vals_;
  }
  friend bool operator!=(const VecZd& a, const VecZd& b) { return !(a == b); }
  friend bool operator<(const VecZd& a, const VecZd& b) { return a.vals_ < b.vals_; }

 private:
  std::vector<std::uint32_t> vals_;
  std::uint32_t d_;
};

/// Dense row-major matrix over Z_D.
class MatZd {
 public:
  MatZd(std::size_t rows, std::size_t cols, std::uint32_t modulus);  // zero matrix
  MatZd(std::vector<std::vector<std::int64_t>> rows, std::uint32_t modulus);
  static MatZd identity(std::size_t n, std::uint32_t modulus);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return d_; }

  std::uint32_t operator()(std::size_t i, std::size_t j) const { return vals_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) { vals_[i * cols_ + j] = mod_reduce(v, d_); }
  ZMod at(std::size_t i, std::size_t j) const { return ZMod((*this)(i, j), d_); }

  const std::vector<std::uint32_t>& values() const { return vals_; }

  MatZd transposed() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const MatZd& a, const MatZd& b) {
    return a.d_ == b.d_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.vals_ == b.vals_;
  }
  friend bool operator!=(const MatZd& a, const MatZd& b) { return !(a == b); }
  friend bool operator<(const MatZd& a, const MatZd& b) { return a.vals_ < b.vals_; }

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::uint32_t d_;
  std::vector<std::uint32_t> vals_;
};

MatZd mat_mul(const MatZd& x, const MatZd& y);
VecZd mat_vec(const MatZd& x, const VecZd& v);

/// Determinant mod D. Cofactor expansion up to 4x4, fraction-free Bareiss
/// over int64 above that (sizes used here stay <= 5).
ZMod det(const MatZd& x);

/// Inverse via adjugate * inv(det); valid whenever det is a unit of Z_D,
/// composite D included. Throws SingularMatrixError otherwise.
MatZd mat_inv(const MatZd& x);

/// ALL solutions of M x = c over Z_D, sorted lexicographically.
/// Prime D: Gaussian elimination with free-variable enumeration.
/// Composite D: exhaustive over Z_D^cols (cols <= 8).
/// An empty result means the system is inconsistent.
std::vector<VecZd> solve_linear(const MatZd& m, const VecZd& c);

}  // namespace simplexion
