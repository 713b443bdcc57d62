#pragma once

// Dense polynomials over Z/p for word-size primes p < 2^31. Internal to the
// factorization code.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace matchroots::detail {

class ModPoly {
 public:
  using Coeff = std::uint64_t;

  explicit ModPoly(Coeff p) : p_(p) {}
  ModPoly(Coeff p, std::vector<Coeff> coeffs);

  Coeff modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const { return c_.size() - 1; }
  const std::vector<Coeff>& coeffs() const { return c_; }
  Coeff leading() const { return c_.back(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  ModPoly operator+(const ModPoly& o) const;
  ModPoly operator-(const ModPoly& o) const;
  ModPoly operator*(const ModPoly& o) const;
  ModPoly scaled(Coeff s) const;
  ModPoly monic() const;

  /// Quotient and remainder; divisor must be nonzero.
  void divmod(const ModPoly& d, ModPoly& q, ModPoly& r) const;
  ModPoly operator%(const ModPoly& d) const;
  ModPoly operator/(const ModPoly& d) const;

  ModPoly derivative() const;

  Coeff inv(Coeff a) const;
  Coeff mulmod(Coeff a, Coeff b) const { return a * b % p_; }

 private:
  void trim();
  Coeff p_;
  std::vector<Coeff> c_;
};

/// Monic gcd (zero if both zero).
ModPoly gcd(ModPoly a, ModPoly b);

/// s, t with s*a + t*b = gcd(a, b) (monic).
ModPoly ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t);

/// base^e mod m.
ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& m);

/// Monic irreducible factors of a monic square-free polynomial (deterministic
/// for a given rng state). p must be odd.
std::vector<ModPoly> factor_squarefree_monic(const ModPoly& f, std::mt19937_64& rng);

}  // namespace matchroots::detail
