#include "matchroots/int_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace matchroots {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t power) {
  std::vector<Integer> v(power + 1);
  v[power] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x() { return monomial(1, 1); }

void IntPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer c = content();
  if (sgn(leading()) < 0) c = -c;
  if (c == 1) return *this;
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(v));
}

std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

IntPoly IntPoly::operator-() const {
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const Integer& c, const IntPoly& p) {
  std::vector<Integer> v(p.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * p.coeffs_[i];
  return IntPoly(std::move(v));
}

std::string IntPoly::str() const { return to_string(*this); }

IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }
IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }

IntPoly derivative(const IntPoly& p) {
  if (p.degree() == 0 || p.is_zero()) return {};
  std::vector<Integer> v(p.degree());
  for (std::size_t i = 1; i <= p.degree(); ++i) v[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

std::optional<IntPoly> divide_exact(const IntPoly& g, const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("divide_exact: division by the zero polynomial");
  if (g.is_zero()) return IntPoly{};
  if (g.degree() < f.degree()) return std::nullopt;

  std::vector<Integer> rem = g.coeffs();
  const auto& fc = f.coeffs();
  const std::size_t df = f.degree();
  std::vector<Integer> quot(g.degree() - df + 1);
  Integer q;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + df];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), f.leading().get_mpz_t())) return std::nullopt;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), f.leading().get_mpz_t());
    for (std::size_t j = 0; j <= df; ++j) mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), fc[j].get_mpz_t());
    quot[k] = q;
  }
  for (std::size_t i = 0; i < df; ++i) {
    if (sgn(rem[i]) != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
  if (a.is_zero() || a.degree() < b.degree()) return a;
  const std::size_t db = b.degree();
  const std::size_t steps_needed = a.degree() - db + 1;
  const Integer& lb = b.leading();
  std::vector<Integer> r = a.coeffs();
  std::size_t steps = 0;
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t top = r.size() - 1;
    Integer lr = r[top];
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[top - db + j].get_mpz_t(), lr.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    ++steps;
    while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
  }
  IntPoly out(std::move(r));
  if (steps < steps_needed) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), steps_needed - steps);
    out = scale * out;
  }
  return out;
}

namespace {

IntPoly divide_coeffs_exact(const IntPoly& p, const Integer& d) {
  std::vector<Integer> v(p.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(v));
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd: both arguments are zero");
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();

  IntPoly A = a.primitive_part();
  IntPoly B = b.primitive_part();
  if (A.degree() < B.degree()) std::swap(A, B);
  Integer g = 1;
  Integer h = 1;
  while (true) {
    const std::size_t delta = A.degree() - B.degree();
    IntPoly R = pseudo_remainder(A, B);
    if (R.is_zero()) return B.primitive_part();
    if (R.degree() == 0) return IntPoly{1};
    A = std::move(B);
    Integer hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), delta);
    B = divide_coeffs_exact(R, g * hd);
    g = A.leading();
    if (delta == 0) continue;
    Integer gd;
    mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), delta);
    if (delta == 1) {
      h = g;
    } else {
      Integer hd1;
      mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), delta - 1);
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
    }
  }
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.degree() + 1; k-- > 0;) {
    const Integer& c = p.coeffs()[k];
    if (sgn(c) == 0) continue;
    if (out.empty()) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    Integer mag = abs(c);
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k == 1) out += 'x';
    if (k >= 2) out += "x^" + std::to_string(k);
  }
  return out;
}

std::vector<std::string> to_coeff_strings(const IntPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

IntPoly from_coeff_strings(const std::vector<std::string>& coeffs) {
  std::vector<Integer> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) {
    Integer c;
    if (s.empty() || c.set_str(s, 10) != 0) throw std::invalid_argument("not a decimal integer: '" + s + "'");
    v.push_back(std::move(c));
  }
  return IntPoly(std::move(v));
}

}  // namespace matchroots
