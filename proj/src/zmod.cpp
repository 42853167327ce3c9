#include "simplexion/zmod.hpp"

#include <numeric>
#include <string>

namespace simplexion {

namespace {

void require_modulus(std::uint32_t d) {
  if (d < 2) throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(d));
}

void require_same(std::uint32_t da, std::uint32_t db) {
  if (da != db) {
    throw ModulusMismatchError("modulus mismatch: " + std::to_string(da) + " vs " +
                               std::to_string(db));
  }
}

}  // namespace

std::uint32_t mod_reduce(std::int64_t v, std::uint32_t d) {
  std::int64_t m = v % static_cast<std::int64_t>(d);
  if (m < 0) m += d;
  return static_cast<std::uint32_t>(m);
}

bool is_unit_mod(std::uint32_t v, std::uint32_t d) {
  return std::gcd(v % d, d) == 1;
}

std::uint32_t inv_mod(std::uint32_t v, std::uint32_t d) {
  v %= d;
  if (!is_unit_mod(v, d)) {
    throw NotAUnitError(std::to_string(v) + " is not a unit mod " + std::to_string(d));
  }
  // Extended Euclid on (v, d).
  std::int64_t t = 0, nt = 1, r = d, nr = v;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt; nt = tmp;
    tmp = r - q * nr;
    r = nr; nr = tmp;
  }
  return mod_reduce(t, d);
}

std::vector<std::uint32_t> unit_values(std::uint32_t d) {
  require_modulus(d);
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 1; v < d; ++v) {
    if (is_unit_mod(v, d)) out.push_back(v);
  }
  return out;
}

ZMod::ZMod(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  require_modulus(modulus);
  value_ = mod_reduce(value, modulus);
}

bool ZMod::is_unit() const { return is_unit_mod(value_, modulus_); }

ZMod ZMod::inv() const { return ZMod(inv_mod(value_, modulus_), modulus_); }

ZMod operator+(ZMod a, ZMod b) {
  require_same(a.modulus_, b.modulus_);
  return ZMod(static_cast<std::int64_t>(a.value_) + b.value_, a.modulus_);
}

ZMod operator-(ZMod a, ZMod b) {
  require_same(a.modulus_, b.modulus_);
  return ZMod(static_cast<std::int64_t>(a.value_) - b.value_, a.modulus_);
}

ZMod operator*(ZMod a, ZMod b) {
  require_same(a.modulus_, b.modulus_);
  return ZMod(static_cast<std::int64_t>(a.value_) * b.value_, a.modulus_);
}

ZMod ZMod::operator-() const { return ZMod(-static_cast<std::int64_t>(value_), modulus_); }

std::vector<ZMod> units(std::uint32_t modulus) {
  std::vector<ZMod> out;
  for (std::uint32_t v : unit_values(modulus)) out.emplace_back(v, modulus);
  return out;
}

bool is_prime(std::uint32_t d) {
  if (d < 2) return false;
  for (std::uint32_t p = 2; p * p <= d; ++p) {
    if (d % p == 0) return false;
  }
  return true;
}

}  // namespace simplexion
