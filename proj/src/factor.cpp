#include "galoiskit/factor.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <random>
#include <sstream>
#include <stdexcept>

#include "modp.hpp"

namespace galoiskit {

namespace {

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Coefficients reduced into [0, m).
void zmod(ZPoly& p, const Integer& m) {
  for (auto& c : p) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(p);
}

void zsymmetric(ZPoly& p, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : p) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(p);
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  zmod(r, m);
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zmod(r, m);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zmod(r, m);
  return r;
}

ZPoly zscale(const ZPoly& a, const Integer& c, const Integer& m) {
  ZPoly r = a;
  for (auto& x : r) x *= c;
  zmod(r, m);
  return r;
}

// Division by a monic divisor modulo m.
std::pair<ZPoly, ZPoly> zdivrem_monic(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.size() < b.size()) return {{}, a};
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  ZPoly quot(a.size() - db, 0);
  for (std::size_t k = r.size(); k-- > db;) {
    mpz_fdiv_r(r[k].get_mpz_t(), r[k].get_mpz_t(), m.get_mpz_t());
    if (r[k] == 0) continue;
    const Integer f = r[k];
    quot[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * b[j];
  }
  r.resize(db);
  zmod(r, m);
  zmod(quot, m);
  return {quot, r};
}

ZPoly from_modp(const detail::modp::Vec& v) {
  ZPoly r;
  r.reserve(v.size());
  for (auto c : v) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// One quadratic Hensel step: from f = g*h mod m to mod m2 = m^2, h monic,
// s*g + t*h = 1 mod m.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m2) {
  const ZPoly e = zsub(f, zmul(g, h, m2), m2);
  auto [q, r] = zdivrem_monic(zmul(s, e, m2), h, m2);
  ZPoly g_new = zadd(zadd(g, zmul(t, e, m2), m2), zmul(q, g, m2), m2);
  ZPoly h_new = zadd(h, r, m2);
  const ZPoly b = zsub(zadd(zmul(s, g_new, m2), zmul(t, h_new, m2), m2), ZPoly{Integer(1)}, m2);
  auto [c, d] = zdivrem_monic(zmul(s, b, m2), h_new, m2);
  ZPoly s_new = zsub(s, d, m2);
  ZPoly t_new = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, g_new, m2), m2);
  g = std::move(g_new);
  h = std::move(h_new);
  s = std::move(s_new);
  t = std::move(t_new);
}

// Lifts f = lc(f) * prod(local) mod q to the same factorization mod q^(2^steps).
std::vector<ZPoly> multifactor_lift(const ZPoly& f, std::span<const detail::modp::Vec> local,
                                    const detail::modp::Field& F, int steps, const Integer& modulus) {
  if (local.size() == 1) {
    Integer inv;
    Integer lc = f.back();
    mpz_fdiv_r(lc.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    if (mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t()) == 0) {
      throw std::logic_error("hensel: leading coefficient not invertible");
    }
    return {zscale(f, inv, modulus)};
  }
  const std::size_t mid = local.size() / 2;
  const auto left = local.subspan(0, mid);
  const auto right = local.subspan(mid);
  detail::modp::Vec g0{F.reduce(f.back())};
  for (const auto& v : left) g0 = detail::modp::mul(F, g0, v);
  detail::modp::Vec h0{1};
  for (const auto& v : right) h0 = detail::modp::mul(F, h0, v);
  auto [s0, t0] = detail::modp::bezout(F, g0, h0);

  ZPoly g = from_modp(g0), h = from_modp(h0), s = from_modp(s0), t = from_modp(t0);
  Integer m(static_cast<unsigned long>(F.q));
  for (int i = 0; i < steps; ++i) {
    m = m * m;
    ZPoly fm = f;
    zmod(fm, m);
    hensel_step(fm, g, h, s, t, m);
  }
  auto out = multifactor_lift(g, left, F, steps, modulus);
  auto rest = multifactor_lift(h, right, F, steps, modulus);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

Integer zcontent(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly zprimitive(ZPoly p) {
  const Integer g = zcontent(p);
  if (g > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  if (!p.empty() && p.back() < 0) {
    for (auto& c : p) c = -c;
  }
  return p;
}

// Exact division over Z; returns false when b does not divide a.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.size() > a.size()) return false;
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  quotient.assign(a.size() - db, 0);
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer f;
    mpz_divexact(f.get_mpz_t(), r[k].get_mpz_t(), b.back().get_mpz_t());
    quotient[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (r[i] != 0) return false;
  }
  ztrim(quotient);
  return true;
}

bool next_prime_candidate(unsigned long& q) {
  Integer z(q);
  mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
  q = z.get_ui();
  return true;
}

struct PrimeChoice {
  detail::modp::Field field;
  std::vector<detail::modp::Vec> factors;
};

// Picks the prime with the fewest local factors among the first few primes of
// good reduction.
PrimeChoice choose_prime(const ZPoly& f, std::mt19937_64& rng) {
  constexpr int kCandidates = 7;
  const std::size_t n = f.size() - 1;
  unsigned long q = 2;
  std::optional<detail::modp::Field> best;
  std::size_t best_count = 0;
  int found = 0;
  while (found < kCandidates) {
    next_prime_candidate(q);
    const detail::modp::Field F{q};
    if (F.reduce(f.back()) == 0) continue;
    const auto fq = detail::modp::reduce(F, f);
    if (q <= n) continue;  // keep the derivative test meaningful
    const auto g = detail::modp::gcd(F, fq, detail::modp::derivative(F, fq));
    if (g.size() != 1) continue;
    ++found;
    std::size_t count = 0;
    for (const auto& [part, d] : detail::modp::distinct_degree(F, detail::modp::monic(F, fq))) {
      count += detail::modp::degree(part) / d;
    }
    if (!best || count < best_count) {
      best = F;
      best_count = count;
    }
    if (count == 1) break;
  }
  PrimeChoice choice{*best, {}};
  choice.factors =
      detail::modp::factor_squarefree(choice.field, detail::modp::reduce(choice.field, f), rng);
  return choice;
}

Integer isqrt_ceil(const Integer& v) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  if (r * r < v) r += 1;
  return r;
}

}  // namespace

namespace detail {

std::vector<std::vector<Integer>> factor_primitive_squarefree(const std::vector<Integer>& input) {
  ZPoly f = zprimitive(input);
  ztrim(f);
  if (f.size() < 2) throw std::invalid_argument("factor_primitive_squarefree: degree must be >= 1");
  std::vector<ZPoly> result;
  if (f[0] == 0) {
    result.push_back(ZPoly{Integer(0), Integer(1)});
    f.erase(f.begin());
  }
  if (f.size() == 2) {
    result.push_back(f);
    return result;
  }
  if (f.size() == 1) return result;

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  PrimeChoice choice = choose_prime(f, rng);
  if (choice.factors.size() == 1) {
    result.push_back(f);
    return result;
  }

  const std::size_t n = f.size() - 1;
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer bound = abs(f.back()) * isqrt_ceil(norm2);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  const Integer target = 2 * bound + 1;

  int steps = 0;
  Integer modulus(static_cast<unsigned long>(choice.field.q));
  while (modulus <= target) {
    modulus = modulus * modulus;
    ++steps;
  }
  ZPoly fm = f;
  zmod(fm, modulus);
  std::vector<ZPoly> local = multifactor_lift(fm, choice.factors, choice.field, steps, modulus);

  // Exhaustive recombination over subsets of increasing size.
  std::vector<std::size_t> remaining(local.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> pick(s);
    std::iota(pick.begin(), pick.end(), 0);
    const Integer lc = f.back();
    const Integer lc_const = lc * f[0];
    while (true) {
      ZPoly g{lc};
      for (auto idx : pick) g = zmul(g, local[remaining[idx]], modulus);
      zsymmetric(g, modulus);
      if (!g.empty() && g[0] != 0 && mpz_divisible_p(lc_const.get_mpz_t(), g[0].get_mpz_t())) {
        ZPoly candidate = zprimitive(g);
        ZPoly quotient;
        if (candidate.size() >= 2 && zdivides(f, candidate, quotient)) {
          result.push_back(candidate);
          f = zprimitive(quotient);
          std::vector<std::size_t> rest;
          for (std::size_t i = 0, k = 0; i < remaining.size(); ++i) {
            if (k < pick.size() && pick[k] == i) {
              ++k;
            } else {
              rest.push_back(remaining[i]);
            }
          }
          remaining = std::move(rest);
          found = true;
          break;
        }
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == remaining.size() - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.size() >= 2) result.push_back(f);
  return result;
}

}  // namespace detail

Poly Factorization::expand() const {
  Poly acc = Poly::constant(unit);
  for (const auto& fp : factors) acc *= pow(fp.factor, static_cast<unsigned>(fp.multiplicity));
  return acc;
}

std::string Factorization::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (!unit.is_one() || factors.empty()) {
    os << unit;
    first = false;
  }
  for (const auto& fp : factors) {
    if (!first) os << " * ";
    first = false;
    os << '(' << fp.factor.to_string() << ')';
    if (fp.multiplicity > 1) os << '^' << fp.multiplicity;
  }
  return os.str();
}

Factorization factor_rationals(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  Factorization out{p.leading(), {}};
  const auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].is_constant()) continue;
    for (const auto& z : detail::factor_primitive_squarefree(primitive_integer_part(parts[i]))) {
      out.factors.push_back({from_integers(z).monic(), i + 1});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const FactorPower& a, const FactorPower& b) {
    return canonical_compare(a.factor, b.factor) < 0;
  });
  return out;
}

bool is_irreducible(const Poly& p) {
  if (p.is_constant()) return false;
  return factor_rationals(p).is_irreducible();
}

}  // namespace galoiskit
