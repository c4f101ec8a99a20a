#include "galoiskit/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace galoiskit {

std::size_t Degree::value() const {
  if (!value_) throw std::domain_error("degree of the zero polynomial is minus infinity");
  return *value_;
}

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

Poly::Poly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { normalize(); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree Poly::degree() const {
  return is_zero() ? Degree::minus_infinity() : Degree::of(coeffs_.size() - 1);
}

Rational Poly::evaluate(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Rational inv = leading().inverse();
  return *this * inv;
}

Poly Poly::shifted(const Rational& shift) const {
  // Horner in the ring Q[x] with x replaced by (x + shift).
  Poly acc;
  const Poly lin({shift, 1});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin;
    acc += Poly::constant(*it);
  }
  return acc;
}

std::string Poly::to_string(char variable) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.abs();
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << '*';
    os << variable;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i].raw() * b.coeffs_[j].raw();
    }
  }
  std::vector<Rational> r;
  r.reserve(out.size());
  for (auto& x : out) r.emplace_back(x);
  return Poly(std::move(r));
}

Poly operator-(const Poly& a) { return a * Rational(-1); }

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  const std::size_t db = b.deg();
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv = b.leading().inverse();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const Rational f = rem[k] * inv;
    quot[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coefficients()[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

bool divides(const Poly& b, const Poly& a) { return (a % b).is_zero(); }

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = Poly::constant(1);
  Poly b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent > 0) b = b * b;
  }
  return result;
}

Poly formal_derivative(const Poly& p) {
  if (p.is_constant()) return Poly();
  std::vector<Rational> d(p.coefficients().size() - 1);
  for (std::size_t i = 1; i < p.coefficients().size(); ++i) {
    d[i - 1] = p.coefficients()[i] * Rational(static_cast<long>(i));
  }
  return Poly(std::move(d));
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of zero polynomials undefined");
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of zero polynomials undefined");
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Rational inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

bool is_separable(const Poly& p) {
  if (p.is_constant()) throw std::invalid_argument("separability undefined for constants");
  return poly_gcd(p, formal_derivative(p)).deg() == 0;
}

Rational resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  // Euclidean recurrence: res(a, b) = (-1)^{mn} lc(b)^{m - deg r} res(b, r), r = a mod b.
  Rational acc = 1;
  Poly x = a;
  Poly y = b;
  while (true) {
    const std::size_t m = x.deg();
    const std::size_t n = y.deg();
    if (n == 0) return acc * pow(y.leading(), static_cast<unsigned long>(m));
    Poly r = x % y;
    if (r.is_zero()) return Rational();
    if ((m * n) % 2 == 1) acc = -acc;
    acc *= pow(y.leading(), static_cast<unsigned long>(m - r.deg()));
    x = std::move(y);
    y = std::move(r);
  }
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  if (p.is_constant()) return Poly::constant(1);
  return (p / poly_gcd(p, formal_derivative(p))).monic();
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  std::vector<Poly> out;
  if (p.is_constant()) return out;
  const Poly f = p.monic();
  const Poly fp = formal_derivative(f);
  Poly a = poly_gcd(f, fp);
  Poly b = f / a;
  Poly c = fp / a;
  Poly d = c - formal_derivative(b);
  while (!b.is_constant()) {
    Poly g = poly_gcd(b, d);
    out.push_back(g);
    b = b / g;
    c = d / g;
    d = c - formal_derivative(b);
  }
  while (!out.empty() && out.back().is_constant()) out.pop_back();
  return out;
}

std::strong_ordering canonical_compare(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (auto c = ca[i] <=> cb[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Rational content(const Poly& p) {
  if (p.is_zero()) return Rational(1);
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) {
    if (c.is_zero()) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  return Rational(num_gcd, den_lcm);
}

std::vector<Integer> primitive_integer_part(const Poly& p) {
  const Rational c = content(p);
  std::vector<Integer> out;
  out.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) {
    const Rational q = x / c;
    out.push_back(q.numerator());
  }
  return out;
}

Poly from_integers(std::span<const Integer> coefficients) {
  std::vector<Rational> v;
  v.reserve(coefficients.size());
  for (const auto& z : coefficients) v.emplace_back(z);
  return Poly(std::move(v));
}

}  // namespace galoiskit
