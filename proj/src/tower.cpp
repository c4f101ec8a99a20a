#include "galoiskit/tower.hpp"

#include <algorithm>
#include <functional>

#include "galoiskit/factor.hpp"

namespace galoiskit {

namespace {

// Finite-dimensional commutative Q-algebra given by coordinates.
struct Algebra {
  std::size_t dim;
  Coords one;
  std::function<Coords(const Coords&, const Coords&)> mul;
};

struct PrimitiveSearch {
  Coords gamma;
  long c;
  Poly minpoly;
  Vector a_in_gamma;  // coordinates in 1, gamma, gamma^2, ...
  Vector b_in_gamma;
};

long shift_candidate(std::size_t attempt) {
  if (attempt == 0) return 0;
  const long k = static_cast<long>((attempt + 1) / 2);
  return attempt % 2 == 1 ? k : -k;
}

PrimitiveSearch search_primitive(const Algebra& A, const Coords& a, const Coords& b) {
  for (std::size_t attempt = 0;; ++attempt) {
    const long c = shift_candidate(attempt);
    Coords gamma = a;
    for (std::size_t i = 0; i < A.dim; ++i) gamma[i] += Rational(c) * b[i];

    SpanBuilder span(A.dim);
    Coords power = A.one;
    Poly minpoly;
    for (std::size_t k = 0; k <= A.dim; ++k) {
      if (auto dep = span.insert(power)) {
        std::vector<Rational> m(k + 1);
        for (std::size_t j = 0; j < k; ++j) m[j] = -(*dep)[j];
        m[k] = 1;
        minpoly = Poly(std::move(m));
        break;
      }
      power = A.mul(power, gamma);
    }
    auto a_in = span.express(a);
    auto b_in = span.express(b);
    if (a_in && b_in) return {std::move(gamma), c, std::move(minpoly), std::move(*a_in), std::move(*b_in)};
  }
}

Algebra field_algebra(const NumberField& E) {
  return {E.degree(), E.one().coords(), [E](const Coords& x, const Coords& y) { return E.multiply(x, y); }};
}

// K[y]/(g) for monic g over K, coordinates flattened at index j*n + i for t^i y^j.
Algebra relative_algebra(const NumberField& K, const NFPoly& g) {
  const std::size_t n = K.degree();
  const std::size_t d = g.deg();
  std::vector<Coords> gc;
  for (std::size_t j = 0; j < d; ++j) gc.push_back(g.coeff(j).coords());
  Coords one(n * d);
  one[0] = 1;
  auto mul = [K, n, d, gc](const Coords& u, const Coords& v) {
    auto slot = [n](const Coords& w, std::size_t j) {
      return Coords(w.begin() + static_cast<std::ptrdiff_t>(j * n), w.begin() + static_cast<std::ptrdiff_t>((j + 1) * n));
    };
    auto nonzero = [](const Coords& w) { return std::any_of(w.begin(), w.end(), [](const Rational& r) { return !r.is_zero(); }); };
    std::vector<Coords> us, vs;
    for (std::size_t j = 0; j < d; ++j) {
      us.push_back(slot(u, j));
      vs.push_back(slot(v, j));
    }
    std::vector<Coords> prod(2 * d - 1, Coords(n));
    for (std::size_t j1 = 0; j1 < d; ++j1) {
      if (!nonzero(us[j1])) continue;
      for (std::size_t j2 = 0; j2 < d; ++j2) {
        if (!nonzero(vs[j2])) continue;
        const Coords p = K.multiply(us[j1], vs[j2]);
        for (std::size_t i = 0; i < n; ++i) prod[j1 + j2][i] += p[i];
      }
    }
    for (std::size_t k = 2 * d - 2; k >= d; --k) {
      if (!nonzero(prod[k])) continue;
      for (std::size_t j = 0; j < d; ++j) {
        const Coords p = K.multiply(prod[k], gc[j]);
        for (std::size_t i = 0; i < n; ++i) prod[k - d + j][i] -= p[i];
      }
    }
    Coords out(n * d);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < n; ++i) out[j * n + i] = prod[j][i];
    }
    return out;
  };
  return {n * d, std::move(one), mul};
}

// Adjoins a root of g (monic, irreducible over K) without re-certifying.
AdjunctionResult collapse(const NumberField& K, const NFPoly& g) {
  const std::size_t n = K.degree();
  const std::size_t d = g.deg();
  if (d == 1) return {K, AlgHom::identity(K), -g.coeff(0)};

  const Algebra R = relative_algebra(K, g);
  Coords theta(n * d);
  const Coords gen = K.generator().coords();
  std::copy(gen.begin(), gen.end(), theta.begin());
  Coords y(n * d);
  y[n] = 1;
  const PrimitiveSearch ps = search_primitive(R, theta, y);

  const NumberField bare = NumberField::from_minimal_polynomial(ps.minpoly);
  const AlgHom embed(K, bare, bare.element(ps.a_in_gamma));
  const NFElement root = bare.element(ps.b_in_gamma);

  // gamma = theta_K + c*y, with theta_K written through K's hint when known.
  GeneratorHint hint;
  const GeneratorHint& old = K.hint();
  for (std::size_t i = 0; i < old.elements.size(); ++i) {
    hint.elements.push_back(apply_hom(embed, K.element(old.elements[i])).coords());
    hint.minpolys.push_back(old.minpolys[i]);
  }
  if (!old.combination.empty()) {
    hint.combination = old.combination;
  } else {
    hint.combination.assign(old.elements.size(), Rational(0));
    if (n > 1) {
      hint.elements.push_back(embed.generator_image().coords());
      hint.minpolys.push_back(K.defining_poly());
      hint.combination.push_back(1);
    }
  }
  hint.elements.push_back(root.coords());
  hint.minpolys.push_back(n == 1 ? *g.as_rational() : minimal_polynomial(root));
  hint.combination.push_back(ps.c);

  const NumberField L = bare.with_hint(std::move(hint));
  return {L, AlgHom(K, L, L.element(embed.generator_image().coords())), L.element(root.coords())};
}

}  // namespace

AdjunctionResult adjoin_root(const NumberField& K, const NFPoly& g, const TowerOptions& options) {
  if (!(g.field() == K)) throw std::invalid_argument("polynomial is not over the given field");
  if (g.is_zero() || g.deg() < 1) throw std::invalid_argument("cannot adjoin a root of a constant");
  const NFPoly h = g.monic();
  const NFFactorization f = factor_over_field(h);
  if (f.factors.size() != 1 || f.factors[0].multiplicity != 1) {
    throw std::invalid_argument("factor first: polynomial is reducible over the field");
  }
  if (K.degree() * h.deg() > options.degree_cap) {
    throw DegreeCapExceeded("degree cap: adjunction would reach degree " + std::to_string(K.degree() * h.deg()) +
                            " above " + std::to_string(options.degree_cap));
  }
  return collapse(K, h);
}

PrimitivePair pair_primitive(const NumberField& E, const NFElement& a, const NFElement& b) {
  if (!(a.field() == E) || !(b.field() == E)) throw std::invalid_argument("field mismatch");
  const PrimitiveSearch ps = search_primitive(field_algebra(E), a.coords(), b.coords());
  return {E.element(ps.gamma), ps.c};
}

NFElement primitive_element_theorem(const NumberField& E, std::span<const NFElement> gens) {
  return induction_fold(E, gens, E.zero(), [&E](NFElement acc, const IntermediateField& current, const NFElement& alpha) {
    if (membership(current, alpha)) return acc;
    return pair_primitive(E, acc, alpha).gamma;
  });
}

Tower::Tower(NumberField base) : base_(base), composite_(AlgHom::identity(base)) {}

const NumberField& Tower::top() const { return levels_.empty() ? base_ : levels_.back().field; }

void Tower::push(const AdjunctionResult& step) {
  if (!(step.embed_old.source() == top())) throw std::invalid_argument("embedding does not start at the top of the tower");
  composite_ = compose_homs(composite_, step.embed_old);
  levels_.push_back({step.field, step.embed_old});
}

bool Tower::is_compatible() const {
  for (std::size_t i = 0; i <= levels_.size(); ++i) {
    const NumberField& start = i == 0 ? base_ : levels_[i - 1].field;
    NFElement stepwise = start.generator();
    AlgHom recorded = AlgHom::identity(start);
    for (std::size_t j = i; j < levels_.size(); ++j) {
      stepwise = apply_hom(levels_[j].embedding, stepwise);
      recorded = compose_homs(recorded, levels_[j].embedding);
    }
    if (!(apply_hom(recorded, start.generator()) == stepwise)) return false;
    if (i == 0 && !(composite_.generator_image() == stepwise)) return false;
  }
  return true;
}

SplittingField splitting_field(const Poly& p, const TowerOptions& options) {
  if (p.is_zero() || p.is_constant()) throw std::invalid_argument("splitting field needs degree >= 1");
  const Poly sq = squarefree_part(p);
  const Factorization over_q = factor_rationals(sq);

  NumberField K = NumberField::rationals();
  Tower tower(K);
  std::vector<NFElement> roots;
  std::vector<NFElement> adjoined;
  NFPoly cofactor = NFPoly::from_rational(K, sq);

  while (cofactor.deg() > 0) {
    const NFFactorization f = factor_over_field(cofactor);
    std::vector<NFPoly> nonlinear;
    for (const auto& fp : f.factors) {
      if (fp.factor.deg() == 1) {
        roots.push_back(-fp.factor.coeff(0));
      } else {
        nonlinear.push_back(fp.factor);
      }
    }
    if (nonlinear.empty()) break;
    const NFPoly& g = nonlinear.front();  // factors come sorted by degree, then coefficients
    if (K.degree() * g.deg() > options.degree_cap) {
      throw DegreeCapExceeded("splitting degree cap exceeded (bound: degree! growth)");
    }
    AdjunctionResult step = collapse(K, g);
    for (auto& r : roots) r = apply_hom(step.embed_old, r);
    for (auto& r : adjoined) r = apply_hom(step.embed_old, r);
    NFPoly rest = NFPoly::constant(step.field.one());
    for (const auto& h : nonlinear) rest = rest * apply_hom(step.embed_old, h);
    const NFPoly linear = NFPoly::x(step.field) - NFPoly::constant(step.new_root);
    auto [q, r] = divrem(rest, linear);
    if (!r.is_zero()) throw std::logic_error("adjoined root does not divide the cofactor");
    roots.push_back(step.new_root);
    adjoined.push_back(step.new_root);
    cofactor = q;
    K = step.field;
    tower.push(step);
  }

  // Hint for the final field: every root with its minimal polynomial over Q.
  GeneratorHint hint;
  hint.combination = K.hint().combination;
  for (const auto& r : adjoined) hint.elements.push_back(r.coords());
  hint.minpolys = K.hint().minpolys;
  for (const auto& r : roots) {
    if (std::find(adjoined.begin(), adjoined.end(), r) != adjoined.end()) continue;
    const auto it = std::find_if(over_q.factors.begin(), over_q.factors.end(),
                                 [&](const FactorPower& fp) { return evaluate(fp.factor, r).is_zero(); });
    if (it == over_q.factors.end()) throw std::logic_error("root of no rational factor");
    hint.elements.push_back(r.coords());
    hint.minpolys.push_back(it->factor);
    if (!hint.combination.empty()) hint.combination.push_back(0);
  }
  const NumberField E = K.with_hint(std::move(hint));
  auto rewrap = [&E](std::vector<NFElement>& v) {
    for (auto& r : v) r = E.element(r.coords());
  };
  rewrap(roots);
  rewrap(adjoined);
  std::sort(roots.begin(), roots.end(), canonical_less);

  NFPoly product = NFPoly::constant(E.one());
  for (const auto& r : roots) product = product * (NFPoly::x(E) - NFPoly::constant(r));
  if (!(product == NFPoly::from_rational(E, sq))) throw std::logic_error("roots do not split the polynomial");

  return {E, std::move(roots), std::move(adjoined), std::move(tower)};
}

}  // namespace galoiskit
