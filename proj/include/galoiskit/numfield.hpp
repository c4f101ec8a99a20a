#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "galoiskit/linalg.hpp"
#include "galoiskit/poly.hpp"

namespace galoiskit {

using Coords = Vector;

class NFElement;

/// Elements of the field already known to generate it, each with its
/// minimal polynomial over Q, and the generator written as a Q-linear
/// combination of them. Homomorphisms out of a field with such a hint can be
/// found by permuting roots of the small minimal polynomials instead of
/// searching for roots of the defining polynomial.
struct GeneratorHint {
  std::vector<Coords> elements;
  std::vector<Poly> minpolys;
  /// generator = sum combination[i] * elements[i]; empty when unknown.
  Vector combination;
};

/// Absolute number field Q[t]/(m) with m monic irreducible. Cheap to copy;
/// two fields compare equal when their defining polynomials are equal.
class NumberField {
 public:
  /// Certifies that m is monic and irreducible over Q.
  explicit NumberField(const Poly& defining_poly);

  /// Q itself, presented by the polynomial x (its generator is 0).
  static NumberField rationals();
  /// For polynomials already known to be minimal polynomials: skips the
  /// irreducibility certificate.
  static NumberField from_minimal_polynomial(const Poly& m, GeneratorHint hint = {});

  /// Same field, carrying the given hint.
  [[nodiscard]] NumberField with_hint(GeneratorHint hint) const;

  [[nodiscard]] const Poly& defining_poly() const;
  [[nodiscard]] std::size_t degree() const;
  [[nodiscard]] const GeneratorHint& hint() const;
  /// Hint with a generator combination whose participating elements all have
  /// degree strictly below the field degree.
  [[nodiscard]] bool has_useful_hint() const;

  [[nodiscard]] NFElement zero() const;
  [[nodiscard]] NFElement one() const;
  [[nodiscard]] NFElement generator() const;
  [[nodiscard]] NFElement from_rational(const Rational& c) const;
  [[nodiscard]] NFElement element(Coords coords) const;
  /// Reduces an arbitrary polynomial in the generator modulo m.
  [[nodiscard]] NFElement from_poly(const Poly& p) const;

  // Coordinate kernels.
  [[nodiscard]] Coords multiply(const Coords& a, const Coords& b) const;
  [[nodiscard]] Coords inverse(const Coords& a) const;

  friend bool operator==(const NumberField& a, const NumberField& b);

 private:
  struct Data;
  explicit NumberField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static std::shared_ptr<const Data> make_data(const Poly& m, GeneratorHint hint);
  std::shared_ptr<const Data> d_;
};

/// Element of a number field, stored as coordinates in the power basis
/// 1, t, ..., t^(n-1).
class NFElement {
 public:
  NFElement(NumberField field, Coords coords);

  [[nodiscard]] const NumberField& field() const { return field_; }
  [[nodiscard]] const Coords& coords() const { return coords_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_rational() const;
  [[nodiscard]] Poly as_poly() const { return Poly(coords_); }

  [[nodiscard]] NFElement inverse() const;
  [[nodiscard]] NFElement pow(unsigned exponent) const;

  /// "c0 + c1*t + c2*t^2 + ...", zero coordinates omitted.
  [[nodiscard]] std::string to_string(char variable = 't') const;

  NFElement& operator+=(const NFElement& o);
  NFElement& operator-=(const NFElement& o);
  NFElement& operator*=(const NFElement& o);
  NFElement& operator/=(const NFElement& o);
  NFElement& operator*=(const Rational& c);

  friend NFElement operator+(NFElement a, const NFElement& b) { return a += b; }
  friend NFElement operator-(NFElement a, const NFElement& b) { return a -= b; }
  friend NFElement operator*(NFElement a, const NFElement& b) { return a *= b; }
  friend NFElement operator/(NFElement a, const NFElement& b) { return a /= b; }
  friend NFElement operator*(NFElement a, const Rational& c) { return a *= c; }
  friend NFElement operator*(const Rational& c, NFElement a) { return a *= c; }
  friend NFElement operator-(NFElement a) { return a *= Rational(-1); }

  friend bool operator==(const NFElement& a, const NFElement& b) {
    return a.coords_ == b.coords_ && a.field_ == b.field_;
  }
  friend std::ostream& operator<<(std::ostream& os, const NFElement& e) { return os << e.to_string(); }

 private:
  void require_same_field(const NFElement& o) const;
  NumberField field_;
  Coords coords_;
};

/// Canonical order on elements: lexicographic on coordinates.
bool canonical_less(const NFElement& a, const NFElement& b);

enum class NFOp { add, sub, mul, div };
/// Field operation on two elements of the same field.
NFElement nf_arithmetic(const NFElement& a, const NFElement& b, NFOp op);

/// Monic polynomial of least degree over Q vanishing at b.
Poly minimal_polynomial(const NFElement& b);

/// 1, t, ..., t^(n-1).
std::vector<NFElement> power_basis(const NumberField& K);

/// Value of p at an element.
NFElement evaluate(const Poly& p, const NFElement& at);

/// Polynomial with coefficients in a number field K.
class NFPoly {
 public:
  NFPoly(NumberField field, std::vector<NFElement> coefficients);
  static NFPoly from_rational(const NumberField& field, const Poly& p);
  static NFPoly x(const NumberField& field);
  static NFPoly constant(const NFElement& c);

  [[nodiscard]] const NumberField& field() const { return field_; }
  [[nodiscard]] const std::vector<NFElement>& coefficients() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] Degree degree() const;
  [[nodiscard]] std::size_t deg() const { return degree().value(); }
  [[nodiscard]] NFElement coeff(std::size_t i) const;
  [[nodiscard]] NFElement leading() const;
  [[nodiscard]] NFPoly monic() const;
  [[nodiscard]] NFElement evaluate(const NFElement& at) const;
  /// p(x + shift)
  [[nodiscard]] NFPoly shifted(const NFElement& shift) const;
  /// Coefficients all rational: the polynomial over Q.
  [[nodiscard]] std::optional<Poly> as_rational() const;
  [[nodiscard]] std::string to_string(char variable = 'x', char generator = 't') const;

  NFPoly& operator+=(const NFPoly& o);
  NFPoly& operator-=(const NFPoly& o);
  friend NFPoly operator+(NFPoly a, const NFPoly& b) { return a += b; }
  friend NFPoly operator-(NFPoly a, const NFPoly& b) { return a -= b; }
  friend NFPoly operator*(const NFPoly& a, const NFPoly& b);
  friend bool operator==(const NFPoly& a, const NFPoly& b) {
    return a.coeffs_ == b.coeffs_ && a.field_ == b.field_;
  }

 private:
  void normalize();
  NumberField field_;
  std::vector<NFElement> coeffs_;
};

std::pair<NFPoly, NFPoly> divrem(const NFPoly& a, const NFPoly& b);
NFPoly formal_derivative(const NFPoly& p);
/// Monic gcd over K; both zero is an error.
NFPoly poly_gcd(const NFPoly& a, const NFPoly& b);

struct NFFactorPower {
  NFPoly factor;  // monic, irreducible over K
  std::size_t multiplicity = 1;
};

struct NFFactorization {
  NFElement unit;
  std::vector<NFFactorPower> factors;

  [[nodiscard]] NFPoly expand() const;
};

/// Norm N(x) = Res_t(m(t), p(x - shift*t)) of a polynomial over K, a
/// polynomial over Q of degree [K:Q]*deg(p).
Poly shifted_norm(const NFPoly& p, long shift);

/// Factorization into monic irreducibles over K by the norm method: shift
/// p(x - s*t) until its norm is squarefree, factor the norm over Q and pull
/// each factor back with a gcd over K. Shifts tried in the order 0, 1, -1, 2, ...
NFFactorization factor_over_field(const NFPoly& p);

enum class RootStrategy {
  /// Use generator hints and known elements when they certify the answer,
  /// otherwise fall back to factoring over the field.
  automatic,
  /// Always factor over the field.
  norm_factorization,
};

/// Distinct roots of a rational polynomial in K, in canonical order.
std::vector<NFElement> roots_in_field(const Poly& p, const NumberField& K,
                                      RootStrategy strategy = RootStrategy::automatic);

/// Distinct roots in K of a polynomial over K, in canonical order.
std::vector<NFElement> roots_in_field(const NFPoly& p, RootStrategy strategy = RootStrategy::automatic);

/// Roots of p taken from the candidates, when they account for every root
/// (their number equals the degree of the squarefree part of p). Otherwise nothing.
std::optional<std::vector<NFElement>> roots_among(const NFPoly& p, std::span<const NFElement> candidates);

/// Q-algebra homomorphism between number fields, determined by the image of
/// the source generator.
class AlgHom {
 public:
  /// Throws std::invalid_argument unless the image is a root of the source's
  /// defining polynomial.
  AlgHom(NumberField source, NumberField target, NFElement generator_image);

  static AlgHom identity(const NumberField& K);

  [[nodiscard]] const NumberField& source() const { return source_; }
  [[nodiscard]] const NumberField& target() const { return target_; }
  [[nodiscard]] const NFElement& generator_image() const { return image_; }
  /// Images of 1, t, ..., t^(n-1) of the source.
  [[nodiscard]] const std::vector<NFElement>& basis_images() const { return *powers_; }
  /// Matrix (target coordinates x source coordinates) of the Q-linear map.
  [[nodiscard]] Matrix matrix() const;

  friend bool operator==(const AlgHom& a, const AlgHom& b) {
    return a.source_ == b.source_ && a.image_ == b.image_;
  }

 private:
  NumberField source_;
  NumberField target_;
  NFElement image_;
  std::shared_ptr<const std::vector<NFElement>> powers_;
};

/// All homomorphisms K -> L, one per root of K's defining polynomial in L, in
/// canonical order of the generator image.
std::vector<AlgHom> enumerate_homs(const NumberField& K, const NumberField& L,
                                   RootStrategy strategy = RootStrategy::automatic);

NFElement apply_hom(const AlgHom& f, const NFElement& a);
/// Coefficient-wise image of a polynomial over f.source().
NFPoly apply_hom(const AlgHom& f, const NFPoly& p);

/// g after f: the source generator goes to g(f(generator)).
AlgHom compose_homs(const AlgHom& f, const AlgHom& g);

}  // namespace galoiskit
