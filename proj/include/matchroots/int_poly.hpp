#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace matchroots {

using Integer = mpz_class;

/// Degree reported for the zero polynomial. Callers must test is_zero()
/// before doing arithmetic with a degree.
inline constexpr std::size_t kZeroDegree = std::numeric_limits<std::size_t>::max();

/// Univariate polynomial over the integers.
///
/// Coefficients are stored in ascending order (index i holds the coefficient
/// of x^i). The zero polynomial is the empty coefficient vector and every
/// other value has a nonzero last coefficient; every constructor normalizes.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t power);
  /// The polynomial x.
  static IntPoly x();

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const { return is_zero() ? kZeroDegree : coeffs_.size() - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const;

  /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;
  /// this / content, with the sign flipped so the leading coefficient is positive.
  IntPoly primitive_part() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  /// Orders by degree first, then coefficient sequence from x^0 upwards.
  friend std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b);

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& c, const IntPoly& p);

  /// Shorthand for the textual rendering.
  std::string str() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly derivative(const IntPoly& p);

/// q with g = f * q over the integers, or nothing when f does not divide g.
/// Throws std::invalid_argument when f is zero.
std::optional<IntPoly> divide_exact(const IntPoly& g, const IntPoly& f);

/// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient, via the subresultant
/// remainder sequence. Throws std::invalid_argument when both inputs are zero.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Renders "x^4 - 3x^2 + 1" style text; the zero polynomial renders as "0".
std::string to_string(const IntPoly& p);

/// Decimal coefficient strings, index = power of x.
std::vector<std::string> to_coeff_strings(const IntPoly& p);
IntPoly from_coeff_strings(const std::vector<std::string>& coeffs);

}  // namespace matchroots
