#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "galoiskit/numfield.hpp"

namespace galoiskit {

/// Galois insertion between preorders P and Q: lower(p) <= q iff p <= upper(q),
/// and lower(upper(q)) == q.
template <class P, class Q>
struct GaloisInsertion {
  std::function<Q(const P&)> lower;
  std::function<P(const Q&)> upper;
  std::function<bool(const P&, const P&)> leq_p;
  std::function<bool(const Q&, const Q&)> leq_q;
};

struct InsertionReport {
  std::size_t adjunction_checks = 0;
  std::size_t insertion_checks = 0;
  std::vector<std::string> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Checks the adjunction law on every sampled pair and the insertion law on
/// every sampled q.
template <class P, class Q>
InsertionReport check_insertion(const GaloisInsertion<P, Q>& ins, std::span<const std::pair<P, Q>> samples) {
  InsertionReport report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& [p, q] = samples[i];
    const bool lhs = ins.leq_q(ins.lower(p), q);
    const bool rhs = ins.leq_p(p, ins.upper(q));
    ++report.adjunction_checks;
    if (lhs != rhs) {
      report.violations.push_back("sample " + std::to_string(i) + ": lower(p) <= q is " + (lhs ? "true" : "false") +
                                  " but p <= upper(q) is " + (rhs ? "true" : "false"));
    }
    const Q back = ins.lower(ins.upper(q));
    ++report.insertion_checks;
    if (!(ins.leq_q(back, q) && ins.leq_q(q, back))) {
      report.violations.push_back("sample " + std::to_string(i) + ": lower(upper(q)) != q");
    }
  }
  return report;
}

/// Join in Q pulled back along the insertion from a join on P.
template <class P, class Q, class JoinP>
Q derived_join(const GaloisInsertion<P, Q>& ins, JoinP join_p, const Q& a, const Q& b) {
  return ins.lower(join_p(ins.upper(a), ins.upper(b)));
}

/// Meet in Q pulled back along the insertion from a meet on P.
template <class P, class Q, class MeetP>
Q derived_meet(const GaloisInsertion<P, Q>& ins, MeetP meet_p, const Q& a, const Q& b) {
  return ins.lower(meet_p(ins.upper(a), ins.upper(b)));
}

/// Subfield of a fixed ambient number field E: a Q-subspace containing 1 and
/// closed under multiplication, held as a canonical reduced row-echelon basis.
class IntermediateField {
 public:
  /// Canonicalizes the span of the given vectors and checks that it is a
  /// subfield (contains 1, closed under products, dimension divides [E:Q]).
  /// Throws std::logic_error otherwise.
  IntermediateField(NumberField ambient, std::span<const Coords> spanning, std::vector<NFElement> generators);

  [[nodiscard]] const NumberField& ambient() const { return ambient_; }
  [[nodiscard]] const std::vector<Coords>& basis() const { return basis_; }
  [[nodiscard]] std::vector<NFElement> basis_elements() const;
  [[nodiscard]] const std::vector<NFElement>& generators() const { return generators_; }
  [[nodiscard]] std::size_t dimension() const { return basis_.size(); }

  [[nodiscard]] bool contains(const NFElement& a) const;
  /// Coordinates of a in the canonical basis, when a lies in the subfield.
  [[nodiscard]] std::optional<Vector> coordinates(const NFElement& a) const;

  friend bool operator==(const IntermediateField& a, const IntermediateField& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  NumberField ambient_;
  std::vector<Coords> basis_;
  std::vector<std::size_t> pivots_;
  // basis_ rows scaled to primitive integer rows, for membership tests.
  std::vector<std::vector<Integer>> integer_rows_;
  std::vector<NFElement> generators_;
};

/// Smallest subfield of E containing S.
IntermediateField adjoin_set(const NumberField& E, std::span<const NFElement> S);
/// K(S) computed from K's basis.
IntermediateField adjoin_to(const IntermediateField& K, std::span<const NFElement> S);

/// Throws std::invalid_argument("ambient mismatch") when a is not in K's ambient field.
bool membership(const IntermediateField& K, const NFElement& a);

IntermediateField top_field(const NumberField& E);
IntermediateField bottom_field(const NumberField& E);
IntermediateField meet(const IntermediateField& a, const IntermediateField& b);
IntermediateField join(const IntermediateField& a, const IntermediateField& b);
IntermediateField meet_all(const NumberField& E, std::span<const IntermediateField> family);
IntermediateField join_all(const NumberField& E, std::span<const IntermediateField> family);
/// a is a subfield of b.
bool is_subfield(const IntermediateField& a, const IntermediateField& b);

struct FieldDegree {
  std::size_t dim_over_q;
  std::size_t codim_in_ambient;
};
FieldDegree if_degree(const IntermediateField& K);

/// A subset of E: either finitely many listed elements, or the carrier of a
/// subspace spanned by the listed elements.
struct ElementSet {
  std::vector<NFElement> elements;
  bool subspace_carrier = false;
};

bool element_set_leq(const ElementSet& a, const ElementSet& b);

/// adjoin_set / underlying-set insertion for subfields of E.
GaloisInsertion<ElementSet, IntermediateField> field_insertion(const NumberField& E);

}  // namespace galoiskit
