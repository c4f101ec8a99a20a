#pragma once

// Dense polynomials over Z/qZ for a word-sized prime q. Internal to the
// factorization code; coefficient i multiplies x^i, highest coefficient nonzero.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "galoiskit/rational.hpp"

namespace galoiskit::detail::modp {

using Coeff = std::uint64_t;
using Vec = std::vector<Coeff>;

struct Field {
  Coeff q;

  [[nodiscard]] Coeff add(Coeff a, Coeff b) const { return (a + b) % q; }
  [[nodiscard]] Coeff sub(Coeff a, Coeff b) const { return (a + q - b) % q; }
  [[nodiscard]] Coeff mul(Coeff a, Coeff b) const { return (a * b) % q; }
  [[nodiscard]] Coeff pow(Coeff a, std::uint64_t e) const;
  [[nodiscard]] Coeff inv(Coeff a) const { return pow(a, q - 2); }
  [[nodiscard]] Coeff reduce(const Integer& z) const;
};

void trim(Vec& v);
inline std::size_t degree(const Vec& v) { return v.empty() ? 0 : v.size() - 1; }

Vec add(const Field& F, const Vec& a, const Vec& b);
Vec sub(const Field& F, const Vec& a, const Vec& b);
Vec mul(const Field& F, const Vec& a, const Vec& b);
Vec scale(const Field& F, const Vec& a, Coeff c);
std::pair<Vec, Vec> divrem(const Field& F, const Vec& a, const Vec& b);
Vec rem(const Field& F, const Vec& a, const Vec& b);
Vec monic(const Field& F, const Vec& a);
Vec gcd(const Field& F, Vec a, Vec b);
Vec derivative(const Field& F, const Vec& a);
/// base^e mod modulus
Vec powmod(const Field& F, const Vec& base, const Integer& e, const Vec& modulus);

/// Returns (s, t) with s*a + t*b = 1 for coprime a, b.
std::pair<Vec, Vec> bezout(const Field& F, const Vec& a, const Vec& b);

Vec reduce(const Field& F, const std::vector<Integer>& f);

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<Vec, std::size_t>> distinct_degree(const Field& F, const Vec& f);

/// Splits a product of irreducibles of common degree d into monic irreducibles.
std::vector<Vec> equal_degree(const Field& F, const Vec& g, std::size_t d, std::mt19937_64& rng);

/// Full factorization of a monic squarefree polynomial into monic irreducibles.
std::vector<Vec> factor_squarefree(const Field& F, const Vec& f, std::mt19937_64& rng);

}  // namespace galoiskit::detail::modp
