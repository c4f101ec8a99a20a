#include "galoiskit/numfield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "galoiskit/factor.hpp"

namespace galoiskit {

struct NumberField::Data {
  Poly m;
  std::size_t n = 0;
  // reduction[k] = t^(n + k) mod m
  std::vector<Coords> reduction;
  // Same table over a common denominator: reduction[k] = reduction_num[k] / reduction_den.
  std::vector<std::vector<Integer>> reduction_num;
  Integer reduction_den = 1;
  GeneratorHint hint;
};

namespace {

// v = num / den with integer num.
Integer common_denominator(std::span<const Rational> v) {
  Integer den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
  return den;
}

std::vector<Integer> scaled_numerators(std::span<const Rational> v, const Integer& den) {
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.numerator() * (den / x.denominator()));
  return out;
}

}  // namespace

std::shared_ptr<const NumberField::Data> NumberField::make_data(const Poly& m, GeneratorHint hint) {
  if (m.is_constant() || !m.is_monic()) {
    throw std::invalid_argument("defining polynomial must be monic of degree >= 1");
  }
  auto d = std::make_shared<Data>();
  d->m = m;
  d->n = m.deg();
  const std::size_t n = d->n;
  if (n >= 2) {
    Coords cur(n);
    for (std::size_t i = 0; i < n; ++i) cur[i] = -m.coeff(i);
    d->reduction.push_back(cur);
    for (std::size_t k = 1; k + 1 < n; ++k) {
      Coords next(n);
      const Rational top = cur[n - 1];
      for (std::size_t i = n - 1; i > 0; --i) next[i] = cur[i - 1];
      if (!top.is_zero()) {
        for (std::size_t i = 0; i < n; ++i) next[i] -= top * m.coeff(i);
      }
      d->reduction.push_back(next);
      cur = std::move(next);
    }
    for (const auto& row : d->reduction) {
      const Integer den = common_denominator(row);
      mpz_lcm(d->reduction_den.get_mpz_t(), d->reduction_den.get_mpz_t(), den.get_mpz_t());
    }
    for (const auto& row : d->reduction) d->reduction_num.push_back(scaled_numerators(row, d->reduction_den));
  }
  if (hint.elements.size() != hint.minpolys.size() ||
      (!hint.combination.empty() && hint.combination.size() != hint.elements.size())) {
    throw std::invalid_argument("generator hint: inconsistent sizes");
  }
  for (const auto& e : hint.elements) {
    if (e.size() != n) throw std::invalid_argument("generator hint: element of wrong dimension");
  }
  d->hint = std::move(hint);
  return d;
}

NumberField::NumberField(const Poly& defining_poly) : d_(make_data(defining_poly, {})) {
  if (defining_poly.deg() > 1 && !is_irreducible(defining_poly)) {
    throw std::invalid_argument("defining polynomial " + defining_poly.to_string() + " is reducible over Q");
  }
}

NumberField NumberField::rationals() { return NumberField(make_data(Poly::x(), {})); }

NumberField NumberField::from_minimal_polynomial(const Poly& m, GeneratorHint hint) {
  return NumberField(make_data(m, std::move(hint)));
}

NumberField NumberField::with_hint(GeneratorHint hint) const { return NumberField(make_data(d_->m, std::move(hint))); }

const Poly& NumberField::defining_poly() const { return d_->m; }
std::size_t NumberField::degree() const { return d_->n; }
const GeneratorHint& NumberField::hint() const { return d_->hint; }

bool NumberField::has_useful_hint() const {
  const auto& h = d_->hint;
  if (h.combination.empty()) return false;
  bool any = false;
  for (std::size_t i = 0; i < h.elements.size(); ++i) {
    if (h.combination[i].is_zero()) continue;
    any = true;
    if (h.minpolys[i].deg() >= d_->n) return false;
  }
  return any;
}

NFElement NumberField::zero() const { return NFElement(*this, Coords(d_->n)); }
NFElement NumberField::one() const { return from_rational(1); }

NFElement NumberField::generator() const {
  Coords c(d_->n);
  if (d_->n == 1) {
    c[0] = -d_->m.coeff(0);
  } else {
    c[1] = 1;
  }
  return NFElement(*this, std::move(c));
}

NFElement NumberField::from_rational(const Rational& c) const {
  Coords v(d_->n);
  v[0] = c;
  return NFElement(*this, std::move(v));
}

NFElement NumberField::element(Coords coords) const { return NFElement(*this, std::move(coords)); }

NFElement NumberField::from_poly(const Poly& p) const {
  const Poly r = p % d_->m;
  Coords v(d_->n);
  for (std::size_t i = 0; i < r.coefficients().size(); ++i) v[i] = r.coefficients()[i];
  return NFElement(*this, std::move(v));
}

Coords NumberField::multiply(const Coords& a, const Coords& b) const {
  // Integer products over common denominators; one canonicalization per coordinate.
  const std::size_t n = d_->n;
  const Integer da = common_denominator(a);
  const Integer db = common_denominator(b);
  const std::vector<Integer> an = scaled_numerators(a, da);
  const std::vector<Integer> bn = scaled_numerators(b, db);
  std::vector<Integer> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(an[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(bn[j]) != 0) mpz_addmul(prod[i + j].get_mpz_t(), an[i].get_mpz_t(), bn[j].get_mpz_t());
    }
  }
  const Integer& dr = d_->reduction_den;
  if (n >= 2) {
    for (std::size_t i = 0; i < n; ++i) prod[i] *= dr;
  }
  for (std::size_t k = n; k < 2 * n - 1; ++k) {
    if (sgn(prod[k]) == 0) continue;
    const auto& red = d_->reduction_num[k - n];
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(red[i]) != 0) mpz_addmul(prod[i].get_mpz_t(), prod[k].get_mpz_t(), red[i].get_mpz_t());
    }
  }
  const Integer den = n >= 2 ? Integer(da * db * dr) : Integer(da * db);
  Coords out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(prod[i], den);
  return out;
}

Coords NumberField::inverse(const Coords& a) const {
  const Poly ap(a);
  if (ap.is_zero()) throw std::domain_error("division by zero in number field");
  const auto eg = extended_gcd(ap, d_->m);
  const Poly s = eg.s % d_->m;
  Coords v(d_->n);
  for (std::size_t i = 0; i < s.coefficients().size(); ++i) v[i] = s.coefficients()[i];
  return v;
}

bool operator==(const NumberField& a, const NumberField& b) {
  return a.d_ == b.d_ || a.d_->m == b.d_->m;
}

// ---------------------------------------------------------------------------

NFElement::NFElement(NumberField field, Coords coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != field_.degree()) {
    throw std::invalid_argument("element has " + std::to_string(coords_.size()) + " coordinates, field degree is " +
                                std::to_string(field_.degree()));
  }
}

bool NFElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool NFElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& r) { return r.is_zero(); });
}

void NFElement::require_same_field(const NFElement& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("field mismatch");
}

NFElement NFElement::inverse() const { return NFElement(field_, field_.inverse(coords_)); }

NFElement NFElement::pow(unsigned exponent) const {
  NFElement result = field_.one();
  NFElement b = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::string NFElement::to_string(char variable) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const Rational& c = coords_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.abs();
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << '*';
    os << variable;
    if (k > 1) os << '^' << k;
  }
  return first ? "0" : os.str();
}

NFElement& NFElement::operator+=(const NFElement& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

NFElement& NFElement::operator-=(const NFElement& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

NFElement& NFElement::operator*=(const NFElement& o) {
  require_same_field(o);
  coords_ = field_.multiply(coords_, o.coords_);
  return *this;
}

NFElement& NFElement::operator/=(const NFElement& o) {
  require_same_field(o);
  coords_ = field_.multiply(coords_, field_.inverse(o.coords_));
  return *this;
}

NFElement& NFElement::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

bool canonical_less(const NFElement& a, const NFElement& b) {
  return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(), b.coords().end());
}

NFElement nf_arithmetic(const NFElement& a, const NFElement& b, NFOp op) {
  switch (op) {
    case NFOp::add: return a + b;
    case NFOp::sub: return a - b;
    case NFOp::mul: return a * b;
    case NFOp::div: return a / b;
  }
  throw std::invalid_argument("unknown field operation");
}

Poly minimal_polynomial(const NFElement& b) {
  const std::size_t n = b.field().degree();
  SpanBuilder span(n);
  NFElement power = b.field().one();
  for (std::size_t k = 0; k <= n; ++k) {
    if (auto dep = span.insert(power.coords())) {
      std::vector<Rational> c(k + 1);
      for (std::size_t j = 0; j < k; ++j) c[j] = -(*dep)[j];
      c[k] = 1;
      return Poly(std::move(c));
    }
    power *= b;
  }
  throw std::logic_error("minimal_polynomial: no dependence found within the field degree");
}

std::vector<NFElement> power_basis(const NumberField& K) {
  std::vector<NFElement> out;
  for (std::size_t i = 0; i < K.degree(); ++i) {
    Coords c(K.degree());
    c[i] = 1;
    out.push_back(K.element(std::move(c)));
  }
  return out;
}

NFElement evaluate(const Poly& p, const NFElement& at) {
  NFElement acc = at.field().zero();
  const auto c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc *= at;
    acc += at.field().from_rational(c[k]);
  }
  return acc;
}

// ---------------------------------------------------------------------------

NFPoly::NFPoly(NumberField field, std::vector<NFElement> coefficients)
    : field_(std::move(field)), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) throw std::invalid_argument("field mismatch");
  }
  normalize();
}

NFPoly NFPoly::from_rational(const NumberField& field, const Poly& p) {
  std::vector<NFElement> c;
  for (const auto& r : p.coefficients()) c.push_back(field.from_rational(r));
  return NFPoly(field, std::move(c));
}

NFPoly NFPoly::x(const NumberField& field) { return NFPoly(field, {field.zero(), field.one()}); }

NFPoly NFPoly::constant(const NFElement& c) { return NFPoly(c.field(), {c}); }

void NFPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree NFPoly::degree() const {
  return coeffs_.empty() ? Degree::minus_infinity() : Degree::of(coeffs_.size() - 1);
}

NFElement NFPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

NFElement NFPoly::leading() const { return coeffs_.empty() ? field_.zero() : coeffs_.back(); }

NFPoly NFPoly::monic() const {
  if (is_zero()) return *this;
  const NFElement inv = leading().inverse();
  std::vector<NFElement> c;
  c.reserve(coeffs_.size());
  for (const auto& e : coeffs_) c.push_back(e * inv);
  return NFPoly(field_, std::move(c));
}

NFElement NFPoly::evaluate(const NFElement& at) const {
  NFElement acc = field_.zero();
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc *= at;
    acc += coeffs_[k];
  }
  return acc;
}

NFPoly NFPoly::shifted(const NFElement& shift) const {
  NFPoly acc(field_, {});
  const NFPoly lin(field_, {shift, field_.one()});
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * lin;
    acc += NFPoly::constant(coeffs_[k]);
  }
  return acc;
}

std::optional<Poly> NFPoly::as_rational() const {
  std::vector<Rational> c;
  for (const auto& e : coeffs_) {
    if (!e.is_rational()) return std::nullopt;
    c.push_back(e.coords()[0]);
  }
  return Poly(std::move(c));
}

std::string NFPoly::to_string(char variable, char generator) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const NFElement& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (c.is_rational()) {
      negative = c.coords()[0].sign() < 0;
      const Rational mag = c.coords()[0].abs();
      body = (k > 0 && mag.is_one()) ? "" : mag.to_string();
    } else {
      body = "(" + c.to_string(generator) + ")";
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << body;
    if (k > 0) {
      if (!body.empty()) os << '*';
      os << variable;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

NFPoly& NFPoly::operator+=(const NFPoly& o) {
  if (!(field_ == o.field_)) throw std::invalid_argument("field mismatch");
  while (coeffs_.size() < o.coeffs_.size()) coeffs_.push_back(field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

NFPoly& NFPoly::operator-=(const NFPoly& o) {
  if (!(field_ == o.field_)) throw std::invalid_argument("field mismatch");
  while (coeffs_.size() < o.coeffs_.size()) coeffs_.push_back(field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

NFPoly operator*(const NFPoly& a, const NFPoly& b) {
  if (!(a.field_ == b.field_)) throw std::invalid_argument("field mismatch");
  if (a.is_zero() || b.is_zero()) return NFPoly(a.field_, {});
  std::vector<NFElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return NFPoly(a.field_, std::move(out));
}

std::pair<NFPoly, NFPoly> divrem(const NFPoly& a, const NFPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const NumberField& K = a.field();
  if (a.degree() < b.degree()) return {NFPoly(K, {}), a};
  const std::size_t db = b.deg();
  std::vector<NFElement> rem = a.coefficients();
  std::vector<NFElement> quot(rem.size() - db, K.zero());
  const NFElement inv = b.leading().inverse();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const NFElement f = rem[k] * inv;
    quot[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coefficients()[j];
  }
  rem.resize(db, K.zero());
  return {NFPoly(K, std::move(quot)), NFPoly(K, std::move(rem))};
}

NFPoly formal_derivative(const NFPoly& p) {
  std::vector<NFElement> d;
  for (std::size_t i = 1; i < p.coefficients().size(); ++i) {
    d.push_back(p.coefficients()[i] * Rational(static_cast<long>(i)));
  }
  return NFPoly(p.field(), std::move(d));
}

NFPoly poly_gcd(const NFPoly& a, const NFPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of zero polynomials undefined");
  NFPoly x = a;
  NFPoly y = b;
  while (!y.is_zero()) {
    NFPoly r = divrem(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

NFPoly NFFactorization::expand() const {
  NFPoly acc = NFPoly::constant(unit);
  for (const auto& fp : factors) {
    for (std::size_t i = 0; i < fp.multiplicity; ++i) acc = acc * fp.factor;
  }
  return acc;
}

// ---------------------------------------------------------------------------

Poly shifted_norm(const NFPoly& p, long shift) {
  if (p.is_zero()) throw std::invalid_argument("norm of the zero polynomial");
  const NumberField& K = p.field();
  const std::size_t n = K.degree();
  const std::size_t D = n * p.deg();
  const NFElement offset = K.generator() * Rational(shift);
  std::vector<Rational> values(D + 1);
  for (std::size_t i = 0; i <= D; ++i) {
    const NFElement at = K.from_rational(Rational(static_cast<long>(i))) - offset;
    const NFElement v = p.evaluate(at);
    values[i] = v.is_zero() ? Rational() : resultant(K.defining_poly(), v.as_poly());
  }
  // Newton divided differences on the nodes 0..D.
  for (std::size_t j = 1; j <= D; ++j) {
    const Rational inv(Rational(static_cast<long>(j)).inverse());
    for (std::size_t i = D; i >= j; --i) {
      values[i] = (values[i] - values[i - 1]) * inv;
      if (i == j) break;
    }
  }
  Poly acc = Poly::constant(values[D]);
  for (std::size_t i = D; i-- > 0;) {
    acc = acc * Poly({Rational(-static_cast<long>(i)), 1});
    acc += Poly::constant(values[i]);
  }
  return acc;
}

namespace {

// Yun's algorithm over K (characteristic zero); parts[i] collects the factors
// of multiplicity i + 1.
std::vector<NFPoly> squarefree_over_field(const NFPoly& f) {
  std::vector<NFPoly> parts_out;
  const NFPoly fp = formal_derivative(f);
  NFPoly a = poly_gcd(f, fp);
  NFPoly b = divrem(f, a).first;
  NFPoly c = divrem(fp, a).first;
  NFPoly d = c - formal_derivative(b);
  while (b.deg() > 0) {
    NFPoly g = poly_gcd(b, d);
    parts_out.push_back(g);
    b = divrem(b, g).first;
    c = divrem(d, g).first;
    d = c - formal_derivative(b);
  }
  return parts_out;
}

std::vector<NFPoly> factor_squarefree_over_field(const NFPoly& a) {
  const NumberField& K = a.field();
  if (a.deg() == 1) return {a.monic()};
  if (K.degree() == 1) {
    std::vector<NFPoly> out;
    for (const auto& fp : factor_rationals(*a.as_rational()).factors) {
      out.push_back(NFPoly::from_rational(K, fp.factor));
    }
    return out;
  }
  long shift = 0;
  Poly norm;
  for (long attempt = 0;; ++attempt) {
    shift = (attempt % 2 == 1) ? (attempt + 1) / 2 : -(attempt / 2);
    norm = shifted_norm(a, shift);
    if (poly_gcd(norm, formal_derivative(norm)).deg() == 0) break;
  }
  const Factorization nf = factor_rationals(norm);
  if (nf.factors.size() == 1) return {a.monic()};
  const NFElement offset = K.generator() * Rational(shift);
  const NFPoly a_shifted = a.shifted(-offset);
  std::vector<NFPoly> out;
  for (const auto& fp : nf.factors) {
    NFPoly g = poly_gcd(a_shifted, NFPoly::from_rational(K, fp.factor));
    out.push_back(g.shifted(offset).monic());
  }
  return out;
}

bool factor_less(const NFPoly& a, const NFPoly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (std::size_t i = 0; i <= a.deg(); ++i) {
    const auto& x = a.coefficients()[i];
    const auto& y = b.coefficients()[i];
    if (x == y) continue;
    return canonical_less(x, y);
  }
  return false;
}

void sort_unique(std::vector<NFElement>& v) {
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<NFElement> hint_images(const NumberField& K, const NumberField& L) {
  const auto& h = K.hint();
  std::vector<std::vector<NFElement>> choices;
  std::vector<Rational> weights;
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < h.elements.size(); ++i) {
    if (h.combination[i].is_zero()) continue;
    choices.push_back(roots_in_field(h.minpolys[i], L, RootStrategy::automatic));
    weights.push_back(h.combination[i]);
    used.push_back(i);
    if (choices.back().empty()) return {};
  }
  // An embedding is injective: distinct conjugates go to distinct roots.
  auto injective = [&](const std::vector<std::size_t>& idx) {
    for (std::size_t a = 0; a < used.size(); ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        if (h.minpolys[used[a]] == h.minpolys[used[b]] && h.elements[used[a]] != h.elements[used[b]] &&
            idx[a] == idx[b]) {
          return false;
        }
      }
    }
    return true;
  };
  std::vector<NFElement> images;
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    if (injective(idx)) {
      NFElement cand = L.zero();
      for (std::size_t i = 0; i < choices.size(); ++i) cand += choices[i][idx[i]] * weights[i];
      if (evaluate(K.defining_poly(), cand).is_zero()) images.push_back(cand);
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  sort_unique(images);
  return images;
}

}  // namespace

NFFactorization factor_over_field(const NFPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  NFFactorization out{p.leading(), {}};
  if (p.deg() == 0) return out;
  const NFPoly f = p.monic();
  const std::vector<NFPoly> parts = squarefree_over_field(f);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].deg() == 0) continue;
    for (auto& g : factor_squarefree_over_field(parts[i])) out.factors.push_back({std::move(g), i + 1});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const NFFactorPower& a, const NFFactorPower& b) { return factor_less(a.factor, b.factor); });
  return out;
}

std::optional<std::vector<NFElement>> roots_among(const NFPoly& p, std::span<const NFElement> candidates) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  if (p.deg() == 0) return std::vector<NFElement>{};
  const NFPoly sq = divrem(p, poly_gcd(p, formal_derivative(p))).first;
  std::vector<NFElement> found;
  for (const auto& c : candidates) {
    if (p.evaluate(c).is_zero()) found.push_back(c);
  }
  sort_unique(found);
  if (found.size() != sq.deg()) return std::nullopt;
  return found;
}

std::vector<NFElement> roots_in_field(const NFPoly& p, RootStrategy /*strategy*/) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<NFElement> roots;
  for (const auto& fp : factor_over_field(p).factors) {
    if (fp.factor.deg() == 1) roots.push_back(-fp.factor.coeff(0));
  }
  sort_unique(roots);
  return roots;
}

std::vector<NFElement> roots_in_field(const Poly& p, const NumberField& K, RootStrategy strategy) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<NFElement> roots;
  if (p.is_constant()) return roots;
  const std::size_t n = K.degree();
  for (const auto& fp : factor_rationals(p).factors) {
    const Poly& q = fp.factor;
    const std::size_t d = q.deg();
    if (n % d != 0) continue;
    if (d == 1) {
      roots.push_back(K.from_rational(-q.coeff(0)));
      continue;
    }
    const NFPoly qk = NFPoly::from_rational(K, q);
    if (strategy == RootStrategy::automatic) {
      if (q == K.defining_poly() && K.has_useful_hint()) {
        auto images = hint_images(K, K);
        roots.insert(roots.end(), images.begin(), images.end());
        continue;
      }
      std::vector<NFElement> candidates;
      const auto& h = K.hint();
      for (std::size_t i = 0; i < h.elements.size(); ++i) {
        if (h.minpolys[i] == q) candidates.push_back(K.element(h.elements[i]));
      }
      if (q == K.defining_poly()) candidates.push_back(K.generator());
      if (auto found = roots_among(qk, candidates)) {
        roots.insert(roots.end(), found->begin(), found->end());
        continue;
      }
    }
    auto found = roots_in_field(qk, RootStrategy::norm_factorization);
    roots.insert(roots.end(), found.begin(), found.end());
  }
  sort_unique(roots);
  return roots;
}

// ---------------------------------------------------------------------------

AlgHom::AlgHom(NumberField source, NumberField target, NFElement generator_image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(generator_image)) {
  if (!(image_.field() == target_)) throw std::invalid_argument("field mismatch");
  if (!evaluate(source_.defining_poly(), image_).is_zero()) {
    throw std::invalid_argument("generator image " + image_.to_string() + " is not a root of " +
                                source_.defining_poly().to_string());
  }
  auto powers = std::make_shared<std::vector<NFElement>>();
  NFElement cur = target_.one();
  for (std::size_t i = 0; i < source_.degree(); ++i) {
    powers->push_back(cur);
    if (i + 1 < source_.degree()) cur *= image_;
  }
  powers_ = std::move(powers);
}

AlgHom AlgHom::identity(const NumberField& K) { return AlgHom(K, K, K.generator()); }

Matrix AlgHom::matrix() const {
  Matrix m(target_.degree(), source_.degree());
  for (std::size_t c = 0; c < source_.degree(); ++c) {
    for (std::size_t r = 0; r < target_.degree(); ++r) m(r, c) = (*powers_)[c].coords()[r];
  }
  return m;
}

std::vector<AlgHom> enumerate_homs(const NumberField& K, const NumberField& L, RootStrategy strategy) {
  const std::vector<NFElement> images = (strategy == RootStrategy::automatic && K.has_useful_hint())
                                            ? hint_images(K, L)
                                            : roots_in_field(K.defining_poly(), L, strategy);
  std::vector<AlgHom> homs;
  homs.reserve(images.size());
  for (const auto& img : images) homs.emplace_back(K, L, img);
  return homs;
}

NFElement apply_hom(const AlgHom& f, const NFElement& a) {
  if (!(a.field() == f.source())) throw std::invalid_argument("field mismatch");
  const auto& powers = f.basis_images();
  Coords out(f.target().degree());
  for (std::size_t i = 0; i < powers.size(); ++i) {
    const Rational& c = a.coords()[i];
    if (c.is_zero()) continue;
    for (std::size_t r = 0; r < out.size(); ++r) {
      const Rational& p = powers[i].coords()[r];
      if (!p.is_zero()) out[r] += c * p;
    }
  }
  return f.target().element(std::move(out));
}

NFPoly apply_hom(const AlgHom& f, const NFPoly& p) {
  std::vector<NFElement> c;
  for (const auto& e : p.coefficients()) c.push_back(apply_hom(f, e));
  return NFPoly(f.target(), std::move(c));
}

AlgHom compose_homs(const AlgHom& f, const AlgHom& g) {
  if (!(f.target() == g.source())) throw std::invalid_argument("homomorphism composition: field mismatch");
  return AlgHom(f.source(), g.target(), apply_hom(g, f.generator_image()));
}

}  // namespace galoiskit
