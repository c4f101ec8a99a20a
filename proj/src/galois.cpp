#include <optional>
#include "galoiskit/galois.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <sstream>

#include "galoiskit/factor.hpp"
#include "galoiskit/tower.hpp"

namespace galoiskit {

namespace {

// Runs body(i) for i in [0, count), in parallel when asked; rethrows the
// first exception after the loop.
template <class Body>
void for_each_index(std::size_t count, Execution exec, Body body) {
  std::exception_ptr error;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(galoiskit_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

// v = num / den with integer num.
std::pair<std::vector<Integer>, Integer> integer_coords(const Coords& v) {
  Integer den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
  std::vector<Integer> num;
  num.reserve(v.size());
  for (const auto& x : v) num.push_back(x.numerator() * (den / x.denominator()));
  return {std::move(num), std::move(den)};
}

std::vector<Integer> integer_product(const std::vector<Integer>& m, const std::vector<Integer>& v) {
  const std::size_t n = v.size();
  std::vector<Integer> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (sgn(m[r * n + c]) != 0 && sgn(v[c]) != 0) {
        mpz_addmul(out[r].get_mpz_t(), m[r * n + c].get_mpz_t(), v[c].get_mpz_t());
      }
    }
  }
  return out;
}

std::vector<NFElement> spanning_generators(const IntermediateField& K) {
  if (!K.generators().empty() || K.dimension() == 1) return K.generators();
  return K.basis_elements();
}

std::vector<NFElement> orbit(const AutGroup& G, const NFElement& x) {
  std::vector<NFElement> out;
  for (std::size_t i = 0; i < G.order(); ++i) out.push_back(G.apply(i, x));
  return out;
}

// Roots in E of q, a polynomial over Q vanishing at x. The orbit of x is
// tried first; when it does not account for every root, factor over E.
std::vector<NFElement> roots_via_orbit(const AutGroup& G, const Poly& q, const NFElement& x) {
  const std::vector<NFElement> candidates = orbit(G, x);
  if (auto found = roots_among(NFPoly::from_rational(G.field(), q), candidates)) return *found;
  return roots_in_field(q, G.field(), RootStrategy::automatic);
}

}  // namespace

// ---------------------------------------------------------------------------

AutGroup::AutGroup(const NumberField& E) {
  auto d = std::make_shared<Data>(Data{E, enumerate_homs(E, E), {}, {}, {}, {}, 0});
  std::sort(d->elements.begin(), d->elements.end(),
            [](const AlgHom& a, const AlgHom& b) { return canonical_less(a.generator_image(), b.generator_image()); });
  for (const auto& s : d->elements) {
    d->matrices.push_back(s.matrix());
    const Matrix& m = d->matrices.back();
    Integer den = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (const auto& x : m.row(r)) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
    }
    std::vector<Integer> num;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (const auto& x : m.row(r)) num.push_back(x.numerator() * (den / x.denominator()));
    }
    d->action_num.push_back(std::move(num));
    d->action_den.push_back(std::move(den));
  }
  d_ = d;
  const std::size_t n = d->elements.size();
  d->identity = index_of(E.generator());
  if (d->identity == n) throw std::logic_error("identity missing from the automorphism group");
  d->cayley.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const NFElement img = apply(i, d->elements[j].generator_image());
      d->cayley[i][j] = index_of(img);
      if (d->cayley[i][j] == n) throw std::logic_error("composition of automorphisms left the group");
    }
  }
#ifdef GALOISKIT_CORRUPT_CAYLEY
  // Test hook: a single wrong entry in the table.
  if (n > 1) d->cayley[n - 1][n - 1] = (d->cayley[n - 1][n - 1] + 1) % n;
#endif
}

AutGroup automorphism_group(const NumberField& E) { return AutGroup(E); }

Coords AutGroup::apply(std::size_t i, const Coords& v) const {
  const auto [num, den] = integer_coords(v);
  const std::vector<Integer> img = integer_product(d_->action_num.at(i), num);
  const Integer total = den * d_->action_den[i];
  Coords out;
  out.reserve(img.size());
  for (const auto& x : img) out.emplace_back(x, total);
  return out;
}

NFElement AutGroup::apply(std::size_t i, const NFElement& a) const { return d_->field.element(apply(i, a.coords())); }

bool AutGroup::fixes(std::size_t i, const Coords& v) const {
  auto [num, den] = integer_coords(v);
  const std::vector<Integer> img = integer_product(d_->action_num.at(i), num);
  for (auto& x : num) x *= d_->action_den[i];
  return img == num;
}

std::size_t AutGroup::index_of(const NFElement& generator_image) const {
  const auto& els = d_->elements;
  auto it = std::lower_bound(els.begin(), els.end(), generator_image, [](const AlgHom& h, const NFElement& x) {
    return canonical_less(h.generator_image(), x);
  });
  if (it != els.end() && it->generator_image() == generator_image) return static_cast<std::size_t>(it - els.begin());
  return els.size();
}

bool AutGroup::is_abelian() const {
  const auto& t = d_->cayley;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (t[i][j] != t[j][i]) return false;
    }
  }
  return true;
}

std::vector<std::string> AutGroup::verify_group_axioms() const {
  std::vector<std::string> failures;
  const auto& t = d_->cayley;
  const std::size_t n = t.size();
  const std::size_t e = d_->identity;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row(n), col(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (t[i][j] < n) row[t[i][j]] = true;
      if (t[j][i] < n) col[t[j][i]] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end()) {
      failures.push_back("row " + std::to_string(i) + " of the table is not a permutation");
    }
    if (std::find(col.begin(), col.end(), false) != col.end()) {
      failures.push_back("column " + std::to_string(i) + " of the table is not a permutation");
    }
    if (t[e][i] != i || t[i][e] != i) failures.push_back("element " + std::to_string(i) + " is moved by the identity");
    bool has_inverse = false;
    for (std::size_t j = 0; j < n; ++j) has_inverse = has_inverse || (t[i][j] == e && t[j][i] == e);
    if (!has_inverse) failures.push_back("element " + std::to_string(i) + " has no inverse");
  }
  std::size_t bad = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t[t[a][b]][c] != t[a][t[b][c]]) ++bad;
      }
    }
  }
  if (bad > 0) failures.push_back("associativity fails on " + std::to_string(bad) + " triples");
  return failures;
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(AutGroup group, std::vector<std::size_t> members)
    : group_(std::move(group)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!contains(group_.identity_index())) throw std::invalid_argument("subgroup lacks the identity");
  for (std::size_t a : members_) {
    if (a >= group_.order()) throw std::invalid_argument("subgroup member out of range");
    for (std::size_t b : members_) {
      if (!contains(group_.cayley()[a][b])) throw std::invalid_argument("subgroup not closed under composition");
    }
  }
}

Subgroup Subgroup::generated_by(const AutGroup& group, std::span<const std::size_t> generators) {
  std::set<std::size_t> members{group.identity_index()};
  members.insert(generators.begin(), generators.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::size_t> snapshot(members.begin(), members.end());
    for (std::size_t a : snapshot) {
      for (std::size_t b : snapshot) grew = members.insert(group.cayley()[a][b]).second || grew;
    }
  }
  return Subgroup(group, std::vector<std::size_t>(members.begin(), members.end()));
}

bool Subgroup::contains(std::size_t index) const { return std::binary_search(members_.begin(), members_.end(), index); }

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

std::string Subgroup::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) os << (i ? "," : "") << members_[i];
  os << '}';
  return os.str();
}

Subgroup aut_fixing_subfield(const AutGroup& G, const IntermediateField& K) {
  if (!(K.ambient() == G.field())) throw std::invalid_argument("ambient mismatch");
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < G.order(); ++i) {
    const bool all = std::all_of(K.basis().begin(), K.basis().end(), [&](const Coords& b) { return G.fixes(i, b); });
    if (all) members.push_back(i);
  }
  return Subgroup(G, std::move(members));
}

IntermediateField fixed_field(const AutGroup& G, const Subgroup& H) {
  if (!(H.group() == G)) throw std::invalid_argument("subgroup of a different group");
  const NumberField& E = G.field();
  const std::size_t n = E.degree();
  // Elements fixed by a generating set of H are fixed by all of H.
  std::vector<std::size_t> movers;
  std::vector<std::size_t> reached{G.identity_index()};
  for (std::size_t i : H.members()) {
    if (std::find(reached.begin(), reached.end(), i) != reached.end()) continue;
    movers.push_back(i);
    reached = Subgroup::generated_by(G, movers).members();
  }
  if (movers.empty()) return top_field(E);
  Matrix stacked(movers.size() * n, n);
  for (std::size_t k = 0; k < movers.size(); ++k) {
    const Matrix& m = G.matrix(movers[k]);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) stacked(k * n + r, c) = r == c ? m(r, c) - Rational(1) : m(r, c);
    }
  }
  const std::vector<Vector> fixed = kernel(stacked, Execution::serial);
  const IntermediateField shape(E, fixed, {});
  return IntermediateField(E, shape.basis(), shape.basis_elements());
}

std::vector<Subgroup> enumerate_subgroups(const AutGroup& G, std::size_t cap) {
  if (G.order() > cap) {
    throw GroupCapExceeded("group of order " + std::to_string(G.order()) + " exceeds the subgroup cap " +
                           std::to_string(cap));
  }
  // Cyclic subgroups, then joins with single elements until nothing new appears.
  std::set<std::vector<std::size_t>> seen;
  std::vector<Subgroup> found;
  std::vector<std::size_t> frontier;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.members()).second) {
      found.push_back(std::move(s));
      frontier.push_back(found.size() - 1);
    }
  };
  for (std::size_t g = 0; g < G.order(); ++g) {
    const std::size_t gen[] = {g};
    add(Subgroup::generated_by(G, gen));
  }
  while (!frontier.empty()) {
    const std::vector<std::size_t> current = std::move(frontier);
    frontier.clear();
    for (std::size_t idx : current) {
      for (std::size_t g = 0; g < G.order(); ++g) {
        if (found[idx].contains(g)) continue;
        std::vector<std::size_t> gens = found[idx].members();
        gens.push_back(g);
        add(Subgroup::generated_by(G, gens));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return found;
}

namespace {

// Total bit size of numerators and denominators.
std::size_t coefficient_height(const Poly& m) {
  std::size_t h = 0;
  for (const Rational& c : m.coefficients()) {
    h += mpz_sizeinbase(c.raw().get_num_mpz_t(), 2) + mpz_sizeinbase(c.raw().get_den_mpz_t(), 2);
  }
  return h;
}

// A quadratic element c with minpoly x^2 + b*x + e, moved to
// (c + b/2) * v / k whose minpoly is x^2 - d, d squarefree.
FieldSummary normalize_quadratic(const NumberField& E, const NFElement& c, const Poly& m) {
  const Rational b = m.coeff(1);
  const Rational half_b = b / Rational(Integer(2));
  const Rational disc = half_b * half_b - m.coeff(0);
  const Integer v = disc.denominator();
  Integer rest = disc.numerator() * v;  // disc * v^2
  Integer k = 1, d = rest < 0 ? -1 : 1;
  rest = abs(rest);
  for (unsigned long q = 2; q < 100000 && q * q <= rest; ++q) {
    while (rest % (q * q) == 0) {
      rest /= q * q;
      k *= q;
    }
    if (rest % q == 0) {
      rest /= q;
      d *= q;
    }
  }
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
    k *= root;
  } else {
    d *= rest;
  }
  const NFElement gamma = (c + E.one() * half_b) * Rational(v, k);
  Poly target{Rational(Integer(-d)), Rational(), Rational(Integer(1))};
  if (!(minimal_polynomial(gamma) == target)) throw std::logic_error("quadratic normalization failed");
  return {2, gamma, std::move(target)};
}

}  // namespace

FieldSummary summarize(const IntermediateField& K) {
  const std::vector<NFElement> gens = K.basis_elements();
  const NFElement gamma = primitive_element_theorem(K.ambient(), gens);
  return {K.dimension(), gamma, minimal_polynomial(gamma)};
}

FieldSummary summarize(const IntermediateField& K, const AutGroup& G) {
  const NumberField& E = G.field();
  if (!(K.ambient() == E)) throw std::invalid_argument("ambient mismatch");
  if (K.dimension() == 1) return {1, E.zero(), Poly::x()};
  if (K.dimension() == E.degree()) return {E.degree(), E.generator(), E.defining_poly()};
  const Subgroup H = aut_fixing_subfield(G, K);

  std::vector<NFElement> gens;
  for (const auto& e : E.hint().elements) gens.push_back(E.element(e));
  if (gens.empty()) gens.push_back(E.generator());
  std::vector<NFElement> pool = gens;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) pool.push_back(gens[i] * gens[j]);
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i != j) pool.push_back(gens[i] * gens[i] * gens[j]);
    }
  }
  NFElement vandermonde = E.one();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) vandermonde *= gens[i] - gens[j];
  }
  pool.push_back(vandermonde);

  // Candidates in K: pool elements that already lie in K, then traces over
  // H. A single one of full degree is preferred; otherwise they are folded
  // together, followed by the canonical basis, which alone generates K.
  std::vector<NFElement> candidates;
  for (const auto& beta : pool) {
    if (K.contains(beta) && !beta.is_rational()) candidates.push_back(beta);
  }
  for (const auto& beta : pool) {
    Coords trace(E.degree());
    for (std::size_t s : H.members()) {
      const Coords img = G.apply(s, beta.coords());
      for (std::size_t r = 0; r < trace.size(); ++r) trace[r] += img[r];
    }
    NFElement t = E.element(std::move(trace));
    if (!t.is_rational() && std::find(candidates.begin(), candidates.end(), t) == candidates.end()) {
      candidates.push_back(std::move(t));
    }
  }
  // In a Galois E the conjugates of c are its images, so the orbit size is
  // the degree of c.
  const bool galois = G.order() == E.degree();
  auto degree_of = [&](const NFElement& c) {
    if (!galois) return minimal_polynomial(c).deg();
    std::vector<NFElement> images = orbit(G, c);
    std::sort(images.begin(), images.end(), canonical_less);
    return static_cast<std::size_t>(std::unique(images.begin(), images.end()) - images.begin());
  };
  // Among the first few of full degree keep the smallest minimal polynomial.
  constexpr std::size_t kMaxCompared = 12;
  std::optional<FieldSummary> best;
  std::size_t best_height = 0, compared = 0;
  for (const auto& c : candidates) {
    if (compared == kMaxCompared) break;
    if (degree_of(c) != K.dimension()) continue;
    ++compared;
    Poly m = minimal_polynomial(c);
    const std::size_t h = coefficient_height(m);
    if (!best || h < best_height) {
      best = FieldSummary{K.dimension(), c, std::move(m)};
      best_height = h;
    }
  }
  if (best) return best->dimension == 2 ? normalize_quadratic(E, best->primitive, best->minpoly) : *best;
  for (const auto& b : K.basis_elements()) {
    if (!b.is_rational()) candidates.push_back(b);
  }
  NFElement acc = E.zero();
  for (const auto& c : candidates) {
    acc = pair_primitive(E, acc, c).gamma;
    if (degree_of(acc) == K.dimension()) {
      const Poly m = minimal_polynomial(acc);
      return K.dimension() == 2 ? normalize_quadratic(E, acc, m) : FieldSummary{K.dimension(), acc, m};
    }
  }
  throw std::logic_error("no primitive element found for a subfield");
}

// ---------------------------------------------------------------------------

CorrespondenceReport galois_correspondence(const NumberField& E, const CorrespondenceOptions& options) {
  if (E.degree() > options.cap) throw DegreeCapExceeded("field degree exceeds the cap");
  return galois_correspondence(AutGroup(E), options);
}

CorrespondenceReport galois_correspondence(const AutGroup& G, const CorrespondenceOptions& options) {
  const NumberField& E = G.field();
  const std::size_t n = E.degree();
  CorrespondenceReport report{G, enumerate_subgroups(G, options.cap), {}, {}, {}, G.order() == n, false, {}, {}, {}};
  const auto& subgroups = report.subgroups;

  std::vector<std::optional<IntermediateField>> fixed(subgroups.size());
  for_each_index(subgroups.size(), options.exec, [&](std::size_t i) { fixed[i] = fixed_field(G, subgroups[i]); });

  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    auto it = std::find(report.fields.begin(), report.fields.end(), *fixed[i]);
    const std::size_t f = static_cast<std::size_t>(it - report.fields.begin());
    if (it == report.fields.end()) report.fields.push_back(*fixed[i]);
    report.pairing.push_back({i, f});
  }

  std::vector<std::optional<FieldSummary>> summaries(report.fields.size());
  std::vector<std::optional<Subgroup>> field_groups(report.fields.size());
  for_each_index(report.fields.size(), options.exec, [&](std::size_t i) {
    summaries[i] = summarize(report.fields[i], G);
    field_groups[i] = aut_fixing_subfield(G, report.fields[i]);
  });
  for (auto& s : summaries) report.summaries.push_back(std::move(*s));

  // Aut(E/E^H) = H and [E:E^H] = |H| for every H.
  for (const auto& [s, f] : report.pairing) {
    const Subgroup& H = subgroups[s];
    const std::size_t codim = if_degree(report.fields[f]).codim_in_ambient;
    report.degree_identities.emplace_back(codim, H.order());
    if (!(*field_groups[f] == H)) {
      report.theorem_failures.push_back("Aut(E/E^H) differs from H for H = " + H.to_string());
    }
    if (codim != H.order()) {
      report.theorem_failures.push_back("[E:E^H] = " + std::to_string(codim) + " but |H| = " + std::to_string(H.order()) +
                                        " for H = " + H.to_string());
    }
  }

  // Inclusion reversal in both directions.
  for (const auto& [s1, f1] : report.pairing) {
    for (const auto& [s2, f2] : report.pairing) {
      if (subgroups[s1].is_subgroup_of(subgroups[s2]) && !is_subfield(report.fields[f2], report.fields[f1])) {
        report.theorem_failures.push_back("inclusion not reversed for " + subgroups[s1].to_string() + " <= " +
                                          subgroups[s2].to_string());
      }
    }
  }
  for (std::size_t a = 0; a < report.fields.size(); ++a) {
    for (std::size_t b = 0; b < report.fields.size(); ++b) {
      if (is_subfield(report.fields[a], report.fields[b]) && !field_groups[b]->is_subgroup_of(*field_groups[a])) {
        report.theorem_failures.push_back("Aut(E/K) not reversed for fields " + std::to_string(a) + " <= " +
                                          std::to_string(b));
      }
    }
  }

  bool all_samples_paired = true;
  if (report.galois) {
    auto roundtrip = [&](const IntermediateField& K, const std::string& label) {
      if (!(fixed_field(G, aut_fixing_subfield(G, K)) == K)) {
        report.roundtrip_failures.push_back(label + " of dimension " + std::to_string(K.dimension()));
      }
    };
    for (std::size_t i = 0; i < report.fields.size(); ++i) roundtrip(report.fields[i], "field " + std::to_string(i));
    for (std::size_t i = 0; i < options.sample_fields.size(); ++i) {
      const auto& K = options.sample_fields[i];
      roundtrip(K, "sample field " + std::to_string(i));
      if (std::find(report.fields.begin(), report.fields.end(), K) == report.fields.end()) all_samples_paired = false;
    }
    for (const auto& f : report.roundtrip_failures) report.theorem_failures.push_back("roundtrip failed for " + f);
  }
  report.bijective = report.fields.size() == subgroups.size() && all_samples_paired;
  if (report.galois && !report.bijective) report.theorem_failures.push_back("pairing is not a bijection");
  return report;
}

// ---------------------------------------------------------------------------

Characterizations characterizations(const NumberField& E) { return characterizations(AutGroup(E)); }

Characterizations characterizations(const AutGroup& G) {
  const NumberField& E = G.field();
  const std::size_t n = E.degree();
  const Poly& m = E.defining_poly();
  Characterizations c{};

  c.separable_normal = is_separable(m) && roots_in_field(m, E).size() == n;

  const std::vector<std::size_t> all = [&] {
    std::vector<std::size_t> v(G.order());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    return v;
  }();
  c.fixed_field_bottom = fixed_field(G, Subgroup(G, all)) == bottom_field(E);

  c.aut_order_equals_degree = G.order() == n;

  // Split a separable polynomial whose roots generate E: the product of the
  // known generators' minimal polynomials, or the defining polynomial.
  Poly target = m;
  const GeneratorHint& h = E.hint();
  if (!h.elements.empty()) {
    std::vector<NFElement> gens;
    for (const auto& e : h.elements) gens.push_back(E.element(e));
    if (adjoin_set(E, gens) == top_field(E)) {
      target = Poly::constant(1);
      std::vector<Poly> distinct;
      for (const auto& q : h.minpolys) {
        if (std::find(distinct.begin(), distinct.end(), q) == distinct.end()) distinct.push_back(q);
      }
      for (const auto& q : distinct) target = target * q;
    }
  }
  try {
    c.splitting_of_separable = is_separable(target) && splitting_field(target, {n}).field.degree() == n;
  } catch (const DegreeCapExceeded&) {
    c.splitting_of_separable = false;
  }
  return c;
}

// ---------------------------------------------------------------------------

bool InequalityReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const InequalityCheck& c) { return c.holds; });
}

InequalityReport check_inequalities(const CorrespondenceReport& report) {
  const AutGroup& G = report.group;
  const NumberField& E = G.field();
  InequalityReport out;
  for (const auto& [s, f] : report.pairing) {
    const std::size_t lhs = if_degree(report.fields[f]).codim_in_ambient;
    const std::size_t rhs = report.subgroups[s].order();
    out.checks.push_back({"[E:E^H] <= |H| for H = " + report.subgroups[s].to_string(), lhs, rhs, report.galois,
                          lhs <= rhs && (!report.galois || lhs == rhs)});
  }
  std::vector<IntermediateField> fields = report.fields;
  for (const auto& K : {bottom_field(E), top_field(E)}) {
    if (std::find(fields.begin(), fields.end(), K) == fields.end()) fields.push_back(K);
  }
  for (const auto& K : fields) {
    const std::size_t lhs = aut_fixing_subfield(G, K).order();
    const std::size_t rhs = if_degree(K).codim_in_ambient;
    out.checks.push_back({"|Aut(E/K)| <= [E:K] for K of dimension " + std::to_string(K.dimension()), lhs, rhs,
                          report.galois, lhs <= rhs && (!report.galois || lhs == rhs)});
  }
  return out;
}

InequalityReport check_inequalities(const NumberField& E) { return check_inequalities(galois_correspondence(E)); }

// ---------------------------------------------------------------------------

std::vector<NFElement> relative_minimal_polynomial(const IntermediateField& K, const NFElement& alpha) {
  const NumberField& E = K.ambient();
  if (!(alpha.field() == E)) throw std::invalid_argument("ambient mismatch");
  const std::vector<NFElement> basis = K.basis_elements();
  const std::size_t k = basis.size();
  SpanBuilder span(E.degree());
  NFElement power = E.one();
  for (std::size_t d = 1;; ++d) {
    for (const auto& b : basis) {
      if (span.insert((b * power).coords())) throw std::logic_error("relative minimal polynomial: lower relation missed");
    }
    power *= alpha;
    if (auto dep = span.express(power.coords())) {
      std::vector<NFElement> coeffs;
      for (std::size_t j = 0; j < d; ++j) {
        NFElement kj = E.zero();
        for (std::size_t i = 0; i < k; ++i) kj += basis[i] * (*dep)[j * k + i];
        coeffs.push_back(-kj);
      }
      coeffs.push_back(E.one());
      return coeffs;
    }
  }
}

HomExtensionReport hom_extension_check(const NumberField& E, const IntermediateField& K, const NFElement& alpha) {
  return hom_extension_check(AutGroup(E), K, alpha);
}

HomExtensionReport hom_extension_check(const AutGroup& G, const IntermediateField& K, const NFElement& alpha) {
  const NumberField& E = G.field();
  if (!(K.ambient() == E) || !(alpha.field() == E)) throw std::invalid_argument("ambient mismatch");
  if (K.contains(alpha)) throw std::invalid_argument("alpha already lies in K");
  HomExtensionReport report;

  // Left side: homomorphisms K(alpha) -> E, one per root of a primitive element's minimal polynomial.
  std::vector<NFElement> big_gens = spanning_generators(K);
  big_gens.push_back(alpha);
  const NFElement gamma = primitive_element_theorem(E, big_gens);
  report.lhs = roots_via_orbit(G, minimal_polynomial(gamma), gamma).size();

  // Right side: each f: K -> E is fixed by where it sends a primitive element of K.
  const std::vector<NFElement> small_gens = spanning_generators(K);
  const NFElement gamma_k = primitive_element_theorem(E, small_gens);
  const std::vector<NFElement> f_images = roots_via_orbit(G, minimal_polynomial(gamma_k), gamma_k);

  SpanBuilder powers(E.degree());
  NFElement p = E.one();
  for (std::size_t l = 0; l < K.dimension(); ++l) {
    powers.insert(p.coords());
    p *= gamma_k;
  }
  const std::vector<NFElement> rel = relative_minimal_polynomial(K, alpha);
  std::vector<Vector> rel_in_gamma;
  for (const auto& c : rel) {
    auto e = powers.express(c.coords());
    if (!e) throw std::logic_error("coefficient of the relative minimal polynomial is not in K");
    rel_in_gamma.push_back(std::move(*e));
  }
  const std::vector<NFElement> candidates = roots_via_orbit(G, minimal_polynomial(alpha), alpha);

  for (const auto& rho : f_images) {
    std::vector<NFElement> twisted;
    for (const auto& e : rel_in_gamma) {
      NFElement v = E.zero();
      NFElement rp = E.one();
      for (const auto& coeff : e) {
        v += rp * coeff;
        rp *= rho;
      }
      twisted.push_back(v);
    }
    const NFPoly q(E, twisted);
    const std::size_t count = static_cast<std::size_t>(
        std::count_if(candidates.begin(), candidates.end(), [&](const NFElement& c) { return q.evaluate(c).is_zero(); }));
    report.per_embedding.push_back(count);
    report.rhs += count;
  }
  return report;
}

}  // namespace galoiskit
