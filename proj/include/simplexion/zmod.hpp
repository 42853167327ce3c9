#pragma once

#include <cstdint>
#include <vector>

#include "simplexion/errors.hpp"

namespace simplexion {

/// A residue modulo D, kept canonical in [0, D). D >= 2, prime or not.
/// Mixing moduli in a binary operation throws; there is no silent coercion.
class ZMod {
 public:
  ZMod(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  bool is_unit() const;
  ZMod inv() const;  // throws NotAUnitError unless gcd(value, D) == 1

  friend ZMod operator+(ZMod a, ZMod b);
  friend ZMod operator-(ZMod a, ZMod b);
  friend ZMod operator*(ZMod a, ZMod b);
  ZMod operator-() const;

  friend bool operator==(ZMod a, ZMod b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }
  friend bool operator!=(ZMod a, ZMod b) { return !(a == b); }

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

/// All residues coprime to D, ascending. D >= 2.
std::vector<ZMod> units(std::uint32_t modulus);

bool is_prime(std::uint32_t d);

// Raw-value helpers for inner loops where the modulus is fixed by context.
std::uint32_t mod_reduce(std::int64_t v, std::uint32_t d);
bool is_unit_mod(std::uint32_t v, std::uint32_t d);
std::uint32_t inv_mod(std::uint32_t v, std::uint32_t d);  // throws NotAUnitError
std::vector<std::uint32_t> unit_values(std::uint32_t d);

}  // namespace simplexion
