#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

struct Biquadratic {
  NumberField E{P("x^4 - 10*x^2 + 1")};
  NFElement t = E.generator();
  NFElement sqrt2 = (t.pow(3) - Rational(9) * t) * Rational(Integer(1), Integer(2));
  NFElement sqrt3 = (Rational(11) * t - t.pow(3)) * Rational(Integer(1), Integer(2));
  IntermediateField of(std::initializer_list<NFElement> s) const {
    const std::vector<NFElement> v(s);
    return adjoin_set(E, v);
  }
};

std::vector<std::vector<NFElement>> all_subsets(const std::vector<NFElement>& roots) {
  std::vector<std::vector<NFElement>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << roots.size()); ++mask) {
    std::vector<NFElement> s;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (mask >> i & 1) s.push_back(roots[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("adjoin_set") {
  const Biquadratic b;
  CHECK(adjoin_set(b.E, std::span<const NFElement>{}) == bottom_field(b.E));
  CHECK(b.of({}).dimension() == 1);
  CHECK(b.of({b.t}) == top_field(b.E));
  const IntermediateField q2 = b.of({b.sqrt2});
  CHECK(q2.dimension() == 2);
  CHECK(membership(q2, b.sqrt2));
  CHECK(membership(q2, b.E.one()));
  CHECK_FALSE(membership(q2, b.sqrt3));
  const NumberField other(P("x^2 - 5"));
  CHECK_THROWS_WITH(membership(q2, other.generator()), "ambient mismatch");
  const NFElement foreign[] = {other.generator()};
  CHECK_THROWS(adjoin_set(b.E, foreign));
}

TEST_CASE("lattice operations in Q(sqrt 2, sqrt 3)") {
  const Biquadratic b;
  const IntermediateField q2 = b.of({b.sqrt2}), q3 = b.of({b.sqrt3});
  CHECK(join(bottom_field(b.E), q2) == q2);
  CHECK(meet(q2, q3) == bottom_field(b.E));
  CHECK(join(q2, q3) == top_field(b.E));
  CHECK(meet(q2, top_field(b.E)) == q2);
  const IntermediateField family[] = {q2, q3, b.of({b.sqrt2 * b.sqrt3})};
  CHECK(meet_all(b.E, family) == bottom_field(b.E));
  CHECK(join_all(b.E, family) == top_field(b.E));
  CHECK(join_all(b.E, std::span<const IntermediateField>{}) == bottom_field(b.E));
  CHECK(meet_all(b.E, std::span<const IntermediateField>{}) == top_field(b.E));
  CHECK_THROWS(meet(q2, bottom_field(NumberField(P("x^2 - 5")))));
}

TEST_CASE("subfield degrees") {
  const SplittingField& sf = splitting("x^3 - 2");
  const FieldDegree bot = if_degree(bottom_field(sf.field));
  CHECK(bot.dim_over_q == 1);
  CHECK(bot.codim_in_ambient == 6);
  const FieldDegree top = if_degree(top_field(sf.field));
  CHECK(top.dim_over_q == 6);
  CHECK(top.codim_in_ambient == 1);
  const Biquadratic b;
  const FieldDegree q2 = if_degree(b.of({b.sqrt2}));
  CHECK(q2.dim_over_q == 2);
  CHECK(q2.codim_in_ambient == 2);
}

TEST_CASE("subfields are closed under products and contain 1") {
  for (const char* p : {"x^3 - 2", "x^4 - 2", "x^4 + 1"}) {
    const SplittingField& sf = splitting(p);
    for (const auto& s : all_subsets(sf.roots)) {
      const IntermediateField K = adjoin_set(sf.field, s);
      CHECK(K.contains(sf.field.one()));
      CHECK(sf.field.degree() % K.dimension() == 0);
      const auto basis = K.basis_elements();
      for (const auto& u : basis) {
        for (const auto& v : basis) CHECK(K.contains(u * v));
      }
      for (const auto& r : s) CHECK(K.contains(r));
    }
  }
}

TEST_CASE("adjoin and forget form an insertion on root subsets of x^4 - 2") {
  const SplittingField& sf = splitting("x^4 - 2");
  const auto ins = field_insertion(sf.field);
  const auto subsets = all_subsets(sf.roots);
  std::vector<IntermediateField> fields;
  for (const auto& s : subsets) {
    IntermediateField K = adjoin_set(sf.field, s);
    if (std::find(fields.begin(), fields.end(), K) == fields.end()) fields.push_back(std::move(K));
  }
  std::vector<std::pair<ElementSet, IntermediateField>> samples;
  for (const auto& s : subsets) {
    for (const auto& K : fields) samples.emplace_back(ElementSet{s, false}, K);
  }
  const InsertionReport report = check_insertion<ElementSet, IntermediateField>(ins, samples);
  CHECK(report.ok());
  CHECK(report.adjunction_checks == subsets.size() * fields.size());

  // Pointwise form: adjoin_set(S) <= K iff every element of S is in K.
  for (const auto& s : subsets) {
    const IntermediateField L = adjoin_set(sf.field, s);
    for (const auto& K : fields) {
      bool all_in = true;
      for (const auto& r : s) all_in = all_in && membership(K, r);
      CHECK(is_subfield(L, K) == all_in);
    }
  }
}

TEST_CASE("identity insertion passes and a broken upper map is caught") {
  GaloisInsertion<int, int> identity{[](const int& p) { return p; }, [](const int& q) { return q; },
                                     [](const int& a, const int& b) { return a <= b; },
                                     [](const int& a, const int& b) { return a <= b; }};
  std::vector<std::pair<int, int>> samples;
  for (int p = -3; p <= 3; ++p) {
    for (int q = -3; q <= 3; ++q) samples.emplace_back(p, q);
  }
  CHECK(check_insertion<int, int>(identity, samples).ok());

  // Upper map that forgets the closure: only the listed generators.
  const Biquadratic b;
  auto broken = field_insertion(b.E);
  broken.upper = [](const IntermediateField& K) { return ElementSet{K.generators(), false}; };
  const IntermediateField q2 = b.of({b.sqrt2});
  const std::pair<ElementSet, IntermediateField> bad[] = {
      {ElementSet{{b.E.from_rational(3) * b.sqrt2}, false}, q2}};
  const InsertionReport report = check_insertion<ElementSet, IntermediateField>(broken, bad);
  CHECK_FALSE(report.ok());
}

TEST_CASE("lattice laws on the subfields of Q(zeta_8)") {
  const SplittingField& sf = splitting("x^4 + 1");
  std::vector<IntermediateField> fields;
  for (const auto& s : all_subsets(sf.roots)) {
    IntermediateField K = adjoin_set(sf.field, s);
    if (std::find(fields.begin(), fields.end(), K) == fields.end()) fields.push_back(std::move(K));
  }
  const IntermediateField top = top_field(sf.field), bot = bottom_field(sf.field);
  for (const auto& a : fields) {
    CHECK(join(a, bot) == a);
    CHECK(meet(a, top) == a);
    CHECK(join(a, top) == top);
    CHECK(meet(a, bot) == bot);
    for (const auto& b : fields) {
      CHECK(join(a, b) == join(b, a));
      CHECK(meet(a, b) == meet(b, a));
      CHECK(join(a, meet(a, b)) == a);
      CHECK(meet(a, join(a, b)) == a);
      for (const auto& c : fields) {
        CHECK(join(join(a, b), c) == join(a, join(b, c)));
        CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
      }
    }
  }
}

TEST_CASE("monotonicity of adjoin") {
  const SplittingField& sf = splitting("x^4 - 2");
  const auto subsets = all_subsets(sf.roots);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = 0; j < subsets.size(); ++j) {
      if ((i & j) != i) continue;  // subset i of subset j
      CHECK(is_subfield(adjoin_set(sf.field, subsets[i]), adjoin_set(sf.field, subsets[j])));
    }
  }
}
