#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "galoiskit/rational.hpp"

namespace galoiskit {

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which is a distinct state rather than a number.
class Degree {
 public:
  static Degree minus_infinity() { return Degree(); }
  static Degree of(std::size_t d) { return Degree(d); }

  [[nodiscard]] bool is_minus_infinity() const { return !value_.has_value(); }
  /// Throws std::domain_error for minus infinity.
  [[nodiscard]] std::size_t value() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.value_ && b.value_) return *a.value_ <=> *b.value_;
    return a.value_.has_value() <=> b.value_.has_value();
  }
  friend bool operator==(const Degree& a, std::size_t b) { return a.value_ == b; }

 private:
  Degree() = default;
  explicit Degree(std::size_t d) : value_(d) {}
  std::optional<std::size_t> value_;
};

/// Dense univariate polynomial over Q; coefficient i multiplies x^i.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<Rational> coefficients);

  static Poly x() { return Poly({0, 1}); }
  static Poly constant(const Rational& c) { return Poly({c}); }
  /// c * x^k
  static Poly monomial(const Rational& c, std::size_t k);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] Degree degree() const;
  /// Degree as a number; throws for the zero polynomial.
  [[nodiscard]] std::size_t deg() const { return degree().value(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

  [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }
  [[nodiscard]] Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
  /// Leading coefficient; zero for the zero polynomial.
  [[nodiscard]] Rational leading() const { return is_zero() ? Rational() : coeffs_.back(); }

  [[nodiscard]] Rational evaluate(const Rational& at) const;
  [[nodiscard]] Poly monic() const;
  /// p(x + shift)
  [[nodiscard]] Poly shifted(const Rational& shift) const;

  /// "x^4 - 10*x^2 + 1": descending powers, explicit signs, "0" for zero.
  [[nodiscard]] std::string to_string(char variable = 'x') const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(const Poly& a);
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);

  friend bool operator==(const Poly&, const Poly&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a by a nonzero b.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

/// True when b divides a exactly.
bool divides(const Poly& b, const Poly& a);

Poly pow(const Poly& base, unsigned exponent);

Poly formal_derivative(const Poly& p);

/// Monic greatest common divisor. Throws std::invalid_argument if both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Monic gcd g with s*a + t*b = g.
struct ExtendedGcd {
  Poly gcd;
  Poly s;
  Poly t;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

/// gcd(p, p') == 1. Throws std::invalid_argument for constants.
bool is_separable(const Poly& p);

/// Sylvester resultant of two nonzero polynomials.
Rational resultant(const Poly& a, const Poly& b);

/// Monic squarefree part: product of the distinct monic irreducible factors.
Poly squarefree_part(const Poly& p);

/// Yun decomposition of a monic polynomial: result[i] is the product of the
/// irreducible factors of multiplicity i + 1 (possibly 1).
std::vector<Poly> squarefree_decomposition(const Poly& p);

/// Orders polynomials by (degree, coefficient sequence from x^0 upward).
std::strong_ordering canonical_compare(const Poly& a, const Poly& b);

/// Positive rational c such that p / c has coprime integer coefficients and
/// the sign of p's leading coefficient.
Rational content(const Poly& p);

/// Integer coefficients of p / content(p).
std::vector<Integer> primitive_integer_part(const Poly& p);

Poly from_integers(std::span<const Integer> coefficients);

}  // namespace galoiskit
