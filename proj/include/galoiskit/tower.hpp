#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "galoiskit/lattice.hpp"
#include "galoiskit/numfield.hpp"

namespace galoiskit {

struct TowerOptions {
  std::size_t degree_cap = 24;
};

/// Raised when an adjunction would produce a field above the degree cap.
class DegreeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AdjunctionResult {
  NumberField field;
  AlgHom embed_old;
  NFElement new_root;
};

/// Absolute field L = K[y]/(g) with the embedding K -> L and the class of y.
/// g must be irreducible over K.
AdjunctionResult adjoin_root(const NumberField& K, const NFPoly& g, const TowerOptions& options = {});

struct PrimitivePair {
  NFElement gamma;
  long c;
};

/// gamma = a + c*b generating Q(a, b), first c in 0, 1, -1, 2, -2, ...
PrimitivePair pair_primitive(const NumberField& E, const NFElement& a, const NFElement& b);

/// Left fold over S that hands each step the subfield generated by the
/// elements already visited.
template <class Acc, class Step>
Acc induction_fold(const NumberField& E, std::span<const NFElement> S, Acc base_value, Step step) {
  IntermediateField current = bottom_field(E);
  Acc acc = std::move(base_value);
  for (const auto& alpha : S) {
    acc = step(std::move(acc), static_cast<const IntermediateField&>(current), alpha);
    const NFElement one[] = {alpha};
    current = adjoin_to(current, one);
  }
  return acc;
}

/// Some gamma with Q(gamma) = Q(gens); 0 for no generators.
NFElement primitive_element_theorem(const NumberField& E, std::span<const NFElement> gens);

/// Chain Q = K_0 -> K_1 -> ... -> K_r of absolute fields.
class Tower {
 public:
  struct Level {
    NumberField field;
    AlgHom embedding;  // previous level -> this level
  };

  explicit Tower(NumberField base);

  /// Appends a level; the embedding must start at the current top.
  void push(const AdjunctionResult& step);

  [[nodiscard]] const NumberField& base() const { return base_; }
  [[nodiscard]] const NumberField& top() const;
  [[nodiscard]] const std::vector<Level>& levels() const { return levels_; }
  /// base -> top, composed as steps were pushed.
  [[nodiscard]] const AlgHom& composite() const { return composite_; }
  /// Recomposes the embeddings from every level to the top and compares with
  /// the stepwise images of that level's generator.
  [[nodiscard]] bool is_compatible() const;

 private:
  NumberField base_;
  std::vector<Level> levels_;
  AlgHom composite_;
};

struct SplittingField {
  NumberField field;
  /// Distinct roots in canonical order.
  std::vector<NFElement> roots;
  /// The roots adjoined along the way, in adjunction order.
  std::vector<NFElement> adjoined;
  Tower tower;
};

/// Splitting field of p over Q by repeated adjunction of a root of a
/// lowest-degree nonlinear factor. Throws DegreeCapExceeded beyond the cap.
SplittingField splitting_field(const Poly& p, const TowerOptions& options = {});

}  // namespace galoiskit
