#include "galoiskit/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace galoiskit {

namespace {

void remove_content(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& x : row) {
    if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

std::vector<Integer> primitive_integer_row(std::span<const Rational> v) {
  Integer den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
  std::vector<Integer> row;
  row.reserve(v.size());
  for (const auto& x : v) row.push_back(x.numerator() * (den / x.denominator()));
  remove_content(row);
  return row;
}

void require_ambient(const NumberField& E, const NFElement& a) {
  if (!(a.field() == E)) throw std::invalid_argument("ambient mismatch");
}

// Closure of span{seeds} under products: every pair of accepted vectors is
// multiplied once; stops when the span fills the ambient field.
std::vector<Coords> multiplicative_closure(const NumberField& E, std::span<const Coords> seeds) {
  const std::size_t n = E.degree();
  SpanBuilder span(n);
  std::vector<Coords> accepted;
  auto push = [&](const Coords& v) {
    if (accepted.size() < n && !span.insert(v)) accepted.push_back(v);
  };
  push(E.one().coords());
  for (const auto& s : seeds) push(s);
  for (std::size_t i = 0; i < accepted.size() && accepted.size() < n; ++i) {
    for (std::size_t j = 0; j <= i && accepted.size() < n; ++j) push(E.multiply(accepted[i], accepted[j]));
  }
  return accepted;
}

}  // namespace

IntermediateField::IntermediateField(NumberField ambient, std::span<const Coords> spanning,
                                     std::vector<NFElement> generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)) {
  const std::size_t n = ambient_.degree();
  basis_ = row_space_basis(spanning, n, Execution::serial);
  for (const auto& row : basis_) {
    std::size_t p = 0;
    while (row[p].is_zero()) ++p;
    pivots_.push_back(p);
    integer_rows_.push_back(primitive_integer_row(row));
  }
  for (const auto& g : generators_) require_ambient(ambient_, g);
  if (!contains(ambient_.one())) throw std::logic_error("intermediate field does not contain 1");
  if (n % basis_.size() != 0) throw std::logic_error("intermediate field dimension does not divide the degree");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (!contains(ambient_.element(ambient_.multiply(basis_[i], basis_[j])))) {
        throw std::logic_error("intermediate field is not closed under multiplication");
      }
    }
  }
}

std::vector<NFElement> IntermediateField::basis_elements() const {
  std::vector<NFElement> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(ambient_.element(b));
  return out;
}

std::optional<Vector> IntermediateField::coordinates(const NFElement& a) const {
  require_ambient(ambient_, a);
  Vector w = a.coords();
  Vector coeffs(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rational f = w[pivots_[k]];
    if (f.is_zero()) continue;
    coeffs[k] = f;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!basis_[k][i].is_zero()) w[i] -= f * basis_[k][i];
    }
  }
  for (const auto& x : w) {
    if (!x.is_zero()) return std::nullopt;
  }
  return coeffs;
}

bool IntermediateField::contains(const NFElement& a) const {
  require_ambient(ambient_, a);
  // Fraction-free reduction against the integer rows.
  std::vector<Integer> w = primitive_integer_row(a.coords());
  for (std::size_t k = 0; k < integer_rows_.size(); ++k) {
    const Integer f = w[pivots_[k]];
    if (sgn(f) == 0) continue;
    const auto& row = integer_rows_[k];
    const Integer& p = row[pivots_[k]];
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] *= p;
      if (sgn(row[i]) != 0) mpz_submul(w[i].get_mpz_t(), f.get_mpz_t(), row[i].get_mpz_t());
    }
    remove_content(w);
  }
  return std::all_of(w.begin(), w.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntermediateField adjoin_set(const NumberField& E, std::span<const NFElement> S) {
  std::vector<Coords> seeds;
  for (const auto& s : S) {
    if (!(s.field() == E)) throw std::invalid_argument("element not in the ambient field");
    seeds.push_back(s.coords());
  }
  return IntermediateField(E, multiplicative_closure(E, seeds), std::vector<NFElement>(S.begin(), S.end()));
}

IntermediateField adjoin_to(const IntermediateField& K, std::span<const NFElement> S) {
  std::vector<Coords> seeds = K.basis();
  std::vector<NFElement> gens = K.generators();
  for (const auto& s : S) {
    if (!(s.field() == K.ambient())) throw std::invalid_argument("element not in the ambient field");
    seeds.push_back(s.coords());
    gens.push_back(s);
  }
  return IntermediateField(K.ambient(), multiplicative_closure(K.ambient(), seeds), std::move(gens));
}

bool membership(const IntermediateField& K, const NFElement& a) { return K.contains(a); }

IntermediateField top_field(const NumberField& E) {
  const Matrix id = Matrix::identity(E.degree());
  std::vector<Coords> rows;
  for (std::size_t i = 0; i < E.degree(); ++i) rows.push_back(id.row_vector(i));
  return IntermediateField(E, rows, {E.generator()});
}

IntermediateField bottom_field(const NumberField& E) {
  const std::vector<Coords> rows{E.one().coords()};
  return IntermediateField(E, rows, {});
}

IntermediateField meet(const IntermediateField& a, const IntermediateField& b) {
  if (!(a.ambient() == b.ambient())) throw std::invalid_argument("ambient mismatch");
  const std::size_t n = a.ambient().degree();
  const std::size_t ka = a.dimension();
  const std::size_t kb = b.dimension();
  // Solve sum x_i a_i - sum y_j b_j = 0; the intersection is spanned by sum x_i a_i.
  Matrix m(n, ka + kb);
  for (std::size_t i = 0; i < ka; ++i) {
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis()[i][r];
  }
  for (std::size_t j = 0; j < kb; ++j) {
    for (std::size_t r = 0; r < n; ++r) m(r, ka + j) = -b.basis()[j][r];
  }
  std::vector<Coords> span;
  for (const auto& sol : kernel(m, Execution::serial)) {
    Coords v(n);
    for (std::size_t i = 0; i < ka; ++i) {
      if (sol[i].is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r) v[r] += sol[i] * a.basis()[i][r];
    }
    span.push_back(std::move(v));
  }
  IntermediateField tmp(a.ambient(), span, {});
  return IntermediateField(a.ambient(), span, tmp.basis_elements());
}

IntermediateField join(const IntermediateField& a, const IntermediateField& b) {
  if (!(a.ambient() == b.ambient())) throw std::invalid_argument("ambient mismatch");
  std::vector<NFElement> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  if (a.generators().empty() && a.dimension() > 1) {
    auto extra = a.basis_elements();
    gens.insert(gens.end(), extra.begin(), extra.end());
  }
  if (b.generators().empty() && b.dimension() > 1) {
    auto extra = b.basis_elements();
    gens.insert(gens.end(), extra.begin(), extra.end());
  }
  return adjoin_set(a.ambient(), gens);
}

IntermediateField meet_all(const NumberField& E, std::span<const IntermediateField> family) {
  IntermediateField acc = top_field(E);
  for (const auto& k : family) acc = meet(acc, k);
  return acc;
}

IntermediateField join_all(const NumberField& E, std::span<const IntermediateField> family) {
  IntermediateField acc = bottom_field(E);
  for (const auto& k : family) acc = join(acc, k);
  return acc;
}

bool is_subfield(const IntermediateField& a, const IntermediateField& b) {
  if (!(a.ambient() == b.ambient())) throw std::invalid_argument("ambient mismatch");
  if (a.dimension() > b.dimension()) return false;
  return std::all_of(a.basis().begin(), a.basis().end(),
                     [&](const Coords& v) { return b.contains(a.ambient().element(v)); });
}

FieldDegree if_degree(const IntermediateField& K) {
  return {K.dimension(), K.ambient().degree() / K.dimension()};
}

bool element_set_leq(const ElementSet& a, const ElementSet& b) {
  if (b.subspace_carrier) {
    if (b.elements.empty()) return a.elements.empty() && !a.subspace_carrier;
    const std::size_t n = b.elements.front().field().degree();
    SpanBuilder span(n);
    for (const auto& e : b.elements) span.insert(e.coords());
    return std::all_of(a.elements.begin(), a.elements.end(),
                       [&](const NFElement& e) { return span.express(e.coords()).has_value(); });
  }
  if (a.subspace_carrier) return false;
  return std::all_of(a.elements.begin(), a.elements.end(), [&](const NFElement& e) {
    return std::find(b.elements.begin(), b.elements.end(), e) != b.elements.end();
  });
}

GaloisInsertion<ElementSet, IntermediateField> field_insertion(const NumberField& E) {
  GaloisInsertion<ElementSet, IntermediateField> ins;
  ins.lower = [E](const ElementSet& s) { return adjoin_set(E, s.elements); };
  ins.upper = [](const IntermediateField& k) { return ElementSet{k.basis_elements(), true}; };
  ins.leq_p = element_set_leq;
  ins.leq_q = is_subfield;
  return ins;
}

}  // namespace galoiskit
