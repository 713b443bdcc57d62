#include "modp_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace matchroots::detail {

ModPoly::ModPoly(Coeff p, std::vector<Coeff> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
  std::vector<Coeff> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] = (v[i] + o.c_[i]) % p_;
  return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
  std::vector<Coeff> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] = (v[i] + p_ - o.c_[i]) % p_;
  return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
  if (is_zero() || o.is_zero()) return ModPoly(p_);
  std::vector<Coeff> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = (v[i + j] + c_[i] * o.c_[j]) % p_;
  }
  return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::scaled(Coeff s) const {
  std::vector<Coeff> v(c_);
  for (auto& c : v) c = mulmod(c, s % p_);
  return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(inv(leading()));
}

ModPoly::Coeff ModPoly::inv(Coeff a) const {
  // Fermat; p is prime.
  Coeff result = 1;
  Coeff base = a % p_;
  if (base == 0) throw std::domain_error("inverse of zero mod p");
  Coeff e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base);
    base = mulmod(base, base);
    e >>= 1;
  }
  return result;
}

void ModPoly::divmod(const ModPoly& d, ModPoly& q, ModPoly& r) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial mod p");
  if (is_zero() || c_.size() < d.c_.size()) {
    q = ModPoly(p_);
    r = *this;
    return;
  }
  std::vector<Coeff> rem(c_);
  std::vector<Coeff> quo(c_.size() - d.c_.size() + 1, 0);
  const Coeff lead_inv = inv(d.leading());
  const std::size_t dd = d.degree();
  for (std::size_t k = quo.size(); k-- > 0;) {
    Coeff t = mulmod(rem[k + dd], lead_inv);
    quo[k] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] = (rem[k + j] + p_ - mulmod(t, d.c_[j])) % p_;
  }
  rem.resize(dd);
  q = ModPoly(p_, std::move(quo));
  r = ModPoly(p_, std::move(rem));
}

ModPoly ModPoly::operator%(const ModPoly& d) const {
  ModPoly q(p_), r(p_);
  divmod(d, q, r);
  return r;
}

ModPoly ModPoly::operator/(const ModPoly& d) const {
  ModPoly q(p_), r(p_);
  divmod(d, q, r);
  return q;
}

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return ModPoly(p_);
  std::vector<Coeff> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = mulmod(c_[i], i % p_);
  return ModPoly(p_, std::move(v));
}

ModPoly gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ModPoly ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) {
  const auto p = a.modulus();
  ModPoly r0 = a, r1 = b;
  ModPoly s0(p, {1}), s1(p);
  ModPoly t0(p), t1(p, {1});
  while (!r1.is_zero()) {
    ModPoly q(p), r(p);
    r0.divmod(r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const auto li = r0.inv(r0.leading());
  s = s0.scaled(li);
  t = t0.scaled(li);
  return r0.scaled(li);
}

ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& m) {
  const auto p = m.modulus();
  ModPoly result = ModPoly(p, {1}) % m;
  ModPoly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

namespace {

void equal_degree_split(const ModPoly& g, std::size_t d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const auto p = g.modulus();
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<ModPoly::Coeff> coin(0, p - 1);
  while (true) {
    std::vector<ModPoly::Coeff> a(g.degree());
    for (auto& c : a) c = coin(rng);
    ModPoly ap(p, std::move(a));
    if (ap.is_zero() || ap.degree() == 0) continue;
    ModPoly c = gcd(ap, g);
    if (c.degree() > 0 && c.degree() < g.degree()) {
      equal_degree_split(c, d, rng, out);
      equal_degree_split(g / c, d, rng, out);
      return;
    }
    ModPoly b = powmod(ap, e, g) - ModPoly(p, {1});
    c = gcd(b, g);
    if (!c.is_zero() && c.degree() > 0 && c.degree() < g.degree()) {
      equal_degree_split(c, d, rng, out);
      equal_degree_split(g / c, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ModPoly> factor_squarefree_monic(const ModPoly& f_in, std::mt19937_64& rng) {
  const auto p = f_in.modulus();
  if (p % 2 == 0) throw std::invalid_argument("factor_squarefree_monic needs an odd prime");
  std::vector<ModPoly> out;
  ModPoly f = f_in;
  const ModPoly x(p, {0, 1});
  ModPoly h = x % f;
  const mpz_class pz(static_cast<unsigned long>(p));
  for (std::size_t d = 1; !f.is_zero() && f.degree() >= 2 * d; ++d) {
    h = powmod(h, pz, f);
    ModPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back(f.monic());
  std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  return out;
}

}  // namespace matchroots::detail
