#include "matchroots/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "modp_poly.hpp"

namespace matchroots {

using detail::ModPoly;

RootClass::RootClass(IntPoly minpoly) : minpoly_(std::move(minpoly)) {
  if (minpoly_.is_zero() || minpoly_.degree() < 1) throw std::invalid_argument("root class needs a polynomial of degree >= 1");
  if (sgn(minpoly_.leading()) <= 0) throw std::invalid_argument("root class needs a positive leading coefficient");
  if (minpoly_.content() != 1) throw std::invalid_argument("root class needs a primitive polynomial");
  if (!is_irreducible(minpoly_)) throw std::invalid_argument("root class polynomial " + minpoly_.str() + " is reducible");
}

FactoredPoly::FactoredPoly(Integer unit, std::vector<Factor> factors) : unit_(std::move(unit)), factors_(std::move(factors)) {
  if (sgn(unit_) == 0) throw std::invalid_argument("factored polynomial with zero unit");
  for (const auto& f : factors_) {
    if (f.exponent == 0) throw std::invalid_argument("factor exponent must be positive");
  }
  std::sort(factors_.begin(), factors_.end(), [](const Factor& a, const Factor& b) { return a.root < b.root; });
  for (std::size_t i = 1; i < factors_.size(); ++i) {
    if (factors_[i - 1].root == factors_[i].root) throw std::invalid_argument("repeated factor in factored polynomial");
  }
}

IntPoly FactoredPoly::expand() const {
  IntPoly out = IntPoly::constant(unit_);
  for (const auto& f : factors_) {
    for (std::size_t i = 0; i < f.exponent; ++i) out = out * f.root.minpoly();
  }
  return out;
}

std::string FactoredPoly::str() const {
  std::string out;
  if (unit_ != 1 || factors_.empty()) out = unit_.get_str();
  for (const auto& f : factors_) {
    if (!out.empty()) out += ' ';
    if (f.root.is_zero_root()) {
      out += 'x';
    } else {
      out += "(" + f.root.minpoly().str() + ")";
    }
    if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

std::vector<SquarefreePart> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition of the zero polynomial");
  const IntPoly a = p.primitive_part();
  std::vector<SquarefreePart> out;
  if (a.degree() == 0) return out;

  const IntPoly b = derivative(a);
  const IntPoly c = gcd(a, b);
  IntPoly w = *divide_exact(a, c);
  IntPoly y = *divide_exact(b, c);
  IntPoly z = y - derivative(w);
  for (std::size_t i = 1; w.degree() > 0; ++i) {
    IntPoly g = gcd(w, z);
    if (g.degree() > 0) out.push_back({g, i});
    w = *divide_exact(w, g);
    y = z.is_zero() ? IntPoly{} : *divide_exact(z, g);
    z = y - derivative(w);
  }
  return out;
}

namespace {

IntPoly reduce_mod(const IntPoly& f, const Integer& m) {
  std::vector<Integer> v(f.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_fdiv_r(v[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly symmetric_mod(const IntPoly& f, const Integer& m) {
  const Integer half = m / 2;
  std::vector<Integer> v(f.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_fdiv_r(v[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), m.get_mpz_t());
    if (v[i] > half) v[i] -= m;
  }
  return IntPoly(std::move(v));
}

ModPoly to_modp(const IntPoly& f, ModPoly::Coeff p) {
  std::vector<ModPoly::Coeff> v(f.coeffs().size());
  const Integer pz(static_cast<unsigned long>(p));
  Integer r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_fdiv_r(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), pz.get_mpz_t());
    v[i] = r.get_ui();
  }
  return ModPoly(p, std::move(v));
}

IntPoly from_modp(const ModPoly& f) {
  std::vector<Integer> v(f.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<unsigned long>(f.coeffs()[i]);
  return IntPoly(std::move(v));
}

IntPoly scale_exact_down(const IntPoly& f, const Integer& d) {
  std::vector<Integer> v(f.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(v));
}

// Lifts F = g0 * h0 (mod p), with F, g0, h0 monic, to F = g * h (mod p^levels).
std::pair<IntPoly, IntPoly> hensel_lift_pair(const IntPoly& F, const ModPoly& g0, const ModPoly& h0, std::size_t levels) {
  const auto p = g0.modulus();
  ModPoly s(p), t(p);
  detail::ext_gcd(g0, h0, s, t);
  IntPoly g = from_modp(g0);
  IntPoly h = from_modp(h0);
  Integer pk = static_cast<unsigned long>(p);
  for (std::size_t k = 1; k < levels; ++k) {
    const ModPoly e = to_modp(scale_exact_down(F - g * h, pk), p);
    ModPoly q(p), r(p);
    (t * e).divmod(g0, q, r);
    const ModPoly dh = s * e + q * h0;
    g = g + pk * from_modp(r);
    h = h + pk * from_modp(dh);
    pk *= static_cast<unsigned long>(p);
  }
  return {g, h};
}

ModPoly product_mod(const std::vector<ModPoly>& fs, std::size_t lo, std::size_t hi) {
  ModPoly out(fs[lo].modulus(), {1});
  for (std::size_t i = lo; i < hi; ++i) out = out * fs[i];
  return out;
}

void hensel_lift_all(const IntPoly& F, const std::vector<ModPoly>& mod_factors, std::size_t lo, std::size_t hi,
                     std::size_t levels, const Integer& modulus, std::vector<IntPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(reduce_mod(F, modulus));
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  auto [g, h] = hensel_lift_pair(F, product_mod(mod_factors, lo, mid), product_mod(mod_factors, mid, hi), levels);
  hensel_lift_all(reduce_mod(g, modulus), mod_factors, lo, mid, levels, modulus, out);
  hensel_lift_all(reduce_mod(h, modulus), mod_factors, mid, hi, levels, modulus, out);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

const std::vector<ModPoly::Coeff>& small_odd_primes() {
  static const std::vector<ModPoly::Coeff> primes = [] {
    std::vector<ModPoly::Coeff> v;
    for (ModPoly::Coeff n = 3; v.size() < 400; n += 2) {
      bool prime = true;
      for (ModPoly::Coeff d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
          prime = false;
          break;
        }
      }
      if (prime) v.push_back(n);
    }
    return v;
  }();
  return primes;
}

// Irreducible factors of a primitive square-free f with positive leading coefficient.
std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  const std::size_t n = f.degree();
  if (n <= 1) return {f};

  constexpr std::size_t kCandidatePrimes = 5;
  std::mt19937_64 rng(0x6d61746368ULL);
  ModPoly::Coeff best_p = 0;
  std::vector<ModPoly> best_factors;
  std::size_t tried = 0;
  for (auto p : small_odd_primes()) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    ModPoly fp = to_modp(f, p);
    if (!detail::gcd(fp, fp.derivative()).is_one()) continue;
    auto fs = detail::factor_squarefree_monic(fp.monic(), rng);
    if (best_p == 0 || fs.size() < best_factors.size()) {
      best_p = p;
      best_factors = std::move(fs);
    }
    if (best_factors.size() == 1 || ++tried == kCandidatePrimes) break;
  }
  if (best_p == 0) throw std::runtime_error("no suitable prime for factoring " + f.str());
  if (best_factors.size() == 1) return {f};

  // Coefficients of lc(f) * (monic factor) are bounded by |lc| * 2^n * ||f||_2.
  Integer norm_sq = 0;
  for (const auto& c : f.coeffs()) norm_sq += c * c;
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), norm_sq.get_mpz_t());
  bound += 1;
  bound *= abs(f.leading());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);

  Integer modulus = static_cast<unsigned long>(best_p);
  std::size_t levels = 1;
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(best_p);
    ++levels;
  }

  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.leading().get_mpz_t(), modulus.get_mpz_t());
  const IntPoly F = reduce_mod(lc_inv * f, modulus);
  std::vector<IntPoly> lifted;
  hensel_lift_all(F, best_factors, 0, best_factors.size(), levels, modulus, lifted);

  std::vector<IntPoly> out;
  IntPoly G = f;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  for (std::size_t s = 1; 2 * s <= remaining.size();) {
    bool found = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    do {
      IntPoly prod = IntPoly::constant(G.leading());
      for (auto i : pick) prod = reduce_mod(prod * lifted[remaining[i]], modulus);
      IntPoly candidate = symmetric_mod(prod, modulus).primitive_part();
      if (auto q = divide_exact(G, candidate)) {
        out.push_back(std::move(candidate));
        G = std::move(*q);
        std::vector<std::size_t> rest;
        for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
          if (j < s && pick[j] == i) {
            ++j;
          } else {
            rest.push_back(remaining[i]);
          }
        }
        remaining = std::move(rest);
        found = true;
        break;
      }
    } while (next_combination(pick, remaining.size()));
    if (!found) ++s;
  }
  if (G.degree() > 0) out.push_back(G);
  return out;
}

}  // namespace

FactoredPoly factor(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor of the zero polynomial");
  Integer unit = p.content();
  if (sgn(p.leading()) < 0) unit = -unit;
  std::vector<Factor> factors;
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    for (auto& q : zassenhaus(part)) factors.push_back({RootClass(std::move(q), RootClass::Trusted{}), mult});
  }
  return FactoredPoly(std::move(unit), std::move(factors));
}

bool is_irreducible(const IntPoly& p) {
  if (p.is_zero() || p.degree() < 1) return false;
  const auto f = factor(p);
  return f.factors().size() == 1 && f.factors()[0].exponent == 1;
}

std::size_t multiplicity(const RootClass& root, const IntPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("multiplicity in the zero polynomial is undefined");
  std::size_t k = 0;
  IntPoly cur = g;
  while (auto q = divide_exact(cur, root.minpoly())) {
    cur = std::move(*q);
    ++k;
  }
  return k;
}

}  // namespace matchroots
