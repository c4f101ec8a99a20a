#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "galoiskit/poly.hpp"

namespace galoiskit {

struct FactorPower {
  Poly factor;  // monic, irreducible over Q
  std::size_t multiplicity = 1;

  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// unit * prod(factor^multiplicity), factors sorted by (degree, coefficients).
struct Factorization {
  Rational unit;
  std::vector<FactorPower> factors;

  [[nodiscard]] Poly expand() const;
  [[nodiscard]] bool is_irreducible() const {
    return factors.size() == 1 && factors.front().multiplicity == 1;
  }
  [[nodiscard]] std::string to_string() const;
};

/// Complete factorization over Q. Throws std::invalid_argument for zero.
///
/// The squarefree parts are factored over Z: reduction modulo a small prime
/// with good reduction (the one with the fewest local factors among a few
/// candidates), Cantor-Zassenhaus splitting, multifactor Hensel lifting past
/// the Mignotte bound and exhaustive recombination of lifted factors.
Factorization factor_rationals(const Poly& p);

/// True when p (degree >= 1) is irreducible over Q.
bool is_irreducible(const Poly& p);

namespace detail {
/// Irreducible factors over Z of a primitive squarefree integer polynomial of
/// degree >= 1, each with positive leading coefficient.
std::vector<std::vector<Integer>> factor_primitive_squarefree(const std::vector<Integer>& f);
}  // namespace detail

}  // namespace galoiskit
