#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "matchroots/int_poly.hpp"

namespace matchroots {

class FactoredPoly;

/// An algebraic number together with all of its conjugates, represented by
/// its minimal polynomial: irreducible over the rationals, primitive, with
/// positive leading coefficient. RootClass(x) stands for zero.
class RootClass {
 public:
  /// Checks every invariant, including irreducibility. Throws
  /// std::invalid_argument on failure.
  explicit RootClass(IntPoly minpoly);

  static RootClass zero() { return RootClass(IntPoly::x(), Trusted{}); }

  const IntPoly& minpoly() const { return minpoly_; }
  bool is_zero_root() const { return minpoly_ == IntPoly::x(); }

  friend bool operator==(const RootClass&, const RootClass&) = default;
  friend auto operator<=>(const RootClass& a, const RootClass& b) { return a.minpoly_ <=> b.minpoly_; }

 private:
  struct Trusted {};
  RootClass(IntPoly minpoly, Trusted) : minpoly_(std::move(minpoly)) {}
  friend FactoredPoly factor(const IntPoly&);

  IntPoly minpoly_;
};

struct Factor {
  RootClass root;
  std::size_t exponent;
};

/// unit * prod(root.minpoly ^ exponent), factors sorted by (degree, coefficients).
class FactoredPoly {
 public:
  FactoredPoly(Integer unit, std::vector<Factor> factors);

  const Integer& unit() const { return unit_; }
  const std::vector<Factor>& factors() const { return factors_; }

  IntPoly expand() const;

  /// "x^2 (x^2 - 3)" style rendering; a unit other than 1 is printed first.
  std::string str() const;

 private:
  Integer unit_;
  std::vector<Factor> factors_;
};

struct SquarefreePart {
  IntPoly part;
  std::size_t multiplicity;
};

/// Yun decomposition of primitive_part(p) into pairwise coprime square-free
/// parts. Throws std::invalid_argument for the zero polynomial.
std::vector<SquarefreePart> squarefree_decomposition(const IntPoly& p);

/// Complete factorization over the rationals. Throws std::invalid_argument for
/// the zero polynomial.
FactoredPoly factor(const IntPoly& p);

bool is_irreducible(const IntPoly& p);

/// Largest k with root.minpoly^k dividing g. Throws std::invalid_argument
/// when g is zero.
std::size_t multiplicity(const RootClass& root, const IntPoly& g);

}  // namespace matchroots
