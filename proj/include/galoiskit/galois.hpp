#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "galoiskit/lattice.hpp"
#include "galoiskit/linalg.hpp"
#include "galoiskit/numfield.hpp"

namespace galoiskit {

/// Raised when a group is too large to enumerate subgroups of.
class GroupCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Aut(E/Q) with its composition table. Cheap to copy.
class AutGroup {
 public:
  explicit AutGroup(const NumberField& E);

  [[nodiscard]] const NumberField& field() const { return d_->field; }
  [[nodiscard]] std::size_t order() const { return d_->elements.size(); }
  /// In canonical order of the generator image.
  [[nodiscard]] const std::vector<AlgHom>& elements() const { return d_->elements; }
  [[nodiscard]] const AlgHom& element(std::size_t i) const { return d_->elements.at(i); }
  /// Matrix of element i acting on power-basis coordinates.
  [[nodiscard]] const Matrix& matrix(std::size_t i) const { return d_->matrices.at(i); }
  /// Element i applied to coordinates.
  [[nodiscard]] Coords apply(std::size_t i, const Coords& v) const;
  [[nodiscard]] NFElement apply(std::size_t i, const NFElement& a) const;
  /// Element i fixes v.
  [[nodiscard]] bool fixes(std::size_t i, const Coords& v) const;
  /// cayley()[i][j] is the index of element i after element j.
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& cayley() const { return d_->cayley; }
  [[nodiscard]] std::size_t identity_index() const { return d_->identity; }
  /// Index of the element with the given generator image, or order() if none.
  [[nodiscard]] std::size_t index_of(const NFElement& generator_image) const;
  [[nodiscard]] bool is_abelian() const;
  /// Associativity, identity, inverses and latin-square rows/columns, read
  /// off the table. Empty when all hold.
  [[nodiscard]] std::vector<std::string> verify_group_axioms() const;

  friend bool operator==(const AutGroup& a, const AutGroup& b) { return a.d_ == b.d_; }

 private:
  struct Data {
    NumberField field;
    std::vector<AlgHom> elements;
    std::vector<Matrix> matrices;
    // matrices[i] = action_num[i] / action_den[i], row-major integers.
    std::vector<std::vector<Integer>> action_num;
    std::vector<Integer> action_den;
    std::vector<std::vector<std::size_t>> cayley;
    std::size_t identity = 0;
  };
  std::shared_ptr<const Data> d_;
};

AutGroup automorphism_group(const NumberField& E);

class Subgroup {
 public:
  /// members must be closed under the table and contain the identity;
  /// throws std::invalid_argument otherwise.
  Subgroup(AutGroup group, std::vector<std::size_t> members);

  /// Smallest subgroup containing the given elements.
  static Subgroup generated_by(const AutGroup& group, std::span<const std::size_t> generators);

  [[nodiscard]] const AutGroup& group() const { return group_; }
  [[nodiscard]] const std::vector<std::size_t>& members() const { return members_; }
  [[nodiscard]] std::size_t order() const { return members_.size(); }
  [[nodiscard]] bool contains(std::size_t index) const;
  [[nodiscard]] bool is_subgroup_of(const Subgroup& other) const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.members_ == b.members_;
  }

 private:
  AutGroup group_;
  std::vector<std::size_t> members_;
};

/// Aut(E/K): the automorphisms fixing every element of K.
Subgroup aut_fixing_subfield(const AutGroup& G, const IntermediateField& K);

/// E^H, the joint kernel of (sigma - id) over sigma in H.
IntermediateField fixed_field(const AutGroup& G, const Subgroup& H);

/// All subgroups sorted by (order, members). Throws GroupCapExceeded when
/// |G| exceeds the cap.
std::vector<Subgroup> enumerate_subgroups(const AutGroup& G, std::size_t cap = 24);

/// Subfield rendered by dimension and the minimal polynomial of a primitive element.
struct FieldSummary {
  std::size_t dimension;
  NFElement primitive;
  Poly minpoly;
};
FieldSummary summarize(const IntermediateField& K);
/// Prefers averages over Aut(E/K) of small monomials in the known generators
/// of E, which tend to have small minimal polynomials.
FieldSummary summarize(const IntermediateField& K, const AutGroup& G);

struct CorrespondenceOptions {
  Execution exec = Execution::parallel;
  std::size_t cap = 24;
  /// Extra subfields (for instance those generated by single roots) whose
  /// roundtrip K -> Aut(E/K) -> fixed field is checked when E is Galois.
  std::vector<IntermediateField> sample_fields;
};

struct CorrespondencePair {
  std::size_t subgroup;  // index into subgroups
  std::size_t field;     // index into fields
};

struct CorrespondenceReport {
  AutGroup group;
  std::vector<Subgroup> subgroups;
  /// Distinct fixed fields, in order of first appearance along the subgroups.
  std::vector<IntermediateField> fields;
  std::vector<FieldSummary> summaries;
  /// One pair per subgroup: H -> E^H.
  std::vector<CorrespondencePair> pairing;
  bool galois = false;
  bool bijective = false;
  /// [E:E^H] and |H| per subgroup.
  std::vector<std::pair<std::size_t, std::size_t>> degree_identities;
  std::vector<std::string> roundtrip_failures;
  /// Failures of Aut(E/E^H) = H, [E:E^H] = |H| and inclusion reversal.
  std::vector<std::string> theorem_failures;
};

CorrespondenceReport galois_correspondence(const NumberField& E, const CorrespondenceOptions& options = {});
/// Same, reusing an already computed group.
CorrespondenceReport galois_correspondence(const AutGroup& G, const CorrespondenceOptions& options = {});

struct Characterizations {
  bool separable_normal;
  bool fixed_field_bottom;
  bool aut_order_equals_degree;
  bool splitting_of_separable;

  [[nodiscard]] bool coherent() const {
    return separable_normal == fixed_field_bottom && fixed_field_bottom == aut_order_equals_degree &&
           aut_order_equals_degree == splitting_of_separable;
  }
};

Characterizations characterizations(const NumberField& E);
Characterizations characterizations(const AutGroup& G);

struct InequalityCheck {
  std::string description;
  std::size_t lhs;
  std::size_t rhs;
  bool equality_expected;
  bool holds;
};

struct InequalityReport {
  std::vector<InequalityCheck> checks;
  [[nodiscard]] bool ok() const;
};

/// [E:E^H] <= |H| for every subgroup, |Aut(E/K)| <= [E:K] for every field of
/// the report, with equality throughout when E is Galois.
InequalityReport check_inequalities(const CorrespondenceReport& report);
InequalityReport check_inequalities(const NumberField& E);

struct HomExtensionReport {
  /// Number of homomorphisms K(alpha) -> E.
  std::size_t lhs = 0;
  /// For each f: K -> E, the number of roots in E of f applied to the
  /// minimal polynomial of alpha over K.
  std::vector<std::size_t> per_embedding;
  std::size_t rhs = 0;
  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

/// Requires alpha in E and alpha not in K.
HomExtensionReport hom_extension_check(const AutGroup& G, const IntermediateField& K, const NFElement& alpha);
HomExtensionReport hom_extension_check(const NumberField& E, const IntermediateField& K, const NFElement& alpha);

/// Minimal polynomial of alpha over the subfield K: monic, coefficients in K.
std::vector<NFElement> relative_minimal_polynomial(const IntermediateField& K, const NFElement& alpha);

}  // namespace galoiskit
