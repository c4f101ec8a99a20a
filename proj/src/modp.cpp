#include "modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace galoiskit::detail::modp {

Coeff Field::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1 % q;
  a %= q;
  while (e > 0) {
    if (e & 1u) result = mul(result, a);
    a = mul(a, a);
    e >>= 1u;
  }
  return result;
}

Coeff Field::reduce(const Integer& z) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), q);
  return r.get_ui();
}

void trim(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Vec add(const Field& F, const Vec& a, const Vec& b) {
  Vec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

Vec sub(const Field& F, const Vec& a, const Vec& b) {
  Vec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

Vec mul(const Field& F, const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % F.q;
  }
  trim(r);
  return r;
}

Vec scale(const Field& F, const Vec& a, Coeff c) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

std::pair<Vec, Vec> divrem(const Field& F, const Vec& a, const Vec& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial mod q");
  if (a.size() < b.size()) return {{}, a};
  Vec r = a;
  Vec quot(a.size() - b.size() + 1, 0);
  const Coeff inv = F.inv(b.back());
  const std::size_t db = b.size() - 1;
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    const Coeff f = F.mul(r[k], inv);
    quot[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = F.sub(r[k - db + j], F.mul(f, b[j]));
  }
  r.resize(db);
  trim(r);
  trim(quot);
  return {quot, r};
}

Vec rem(const Field& F, const Vec& a, const Vec& b) { return divrem(F, a, b).second; }

Vec monic(const Field& F, const Vec& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

Vec gcd(const Field& F, Vec a, Vec b) {
  while (!b.empty()) {
    Vec r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Vec derivative(const Field& F, const Vec& a) {
  if (a.size() <= 1) return {};
  Vec d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = F.mul(a[i], i % F.q);
  trim(d);
  return d;
}

Vec powmod(const Field& F, const Vec& base, const Integer& e, const Vec& modulus) {
  Vec result{1};
  result = rem(F, result, modulus);
  Vec b = rem(F, base, modulus);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(F, mul(F, result, result), modulus);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(F, mul(F, result, b), modulus);
  }
  return result;
}

std::pair<Vec, Vec> bezout(const Field& F, const Vec& a, const Vec& b) {
  Vec r0 = a, r1 = b;
  Vec s0{1}, s1;
  Vec t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(F, r0, r1);
    Vec s2 = sub(F, s0, mul(F, q, s1));
    Vec t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw std::logic_error("bezout: inputs are not coprime mod q");
  const Coeff inv = F.inv(r0[0]);
  return {scale(F, s0, inv), scale(F, t0, inv)};
}

Vec reduce(const Field& F, const std::vector<Integer>& f) {
  Vec r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = F.reduce(f[i]);
  trim(r);
  return r;
}

std::vector<std::pair<Vec, std::size_t>> distinct_degree(const Field& F, const Vec& f) {
  std::vector<std::pair<Vec, std::size_t>> out;
  Vec rest = f;
  const Vec x{0, 1};
  Vec h = rem(F, x, rest);
  const Integer q(static_cast<unsigned long>(F.q));
  for (std::size_t d = 1; 2 * d <= degree(rest); ++d) {
    h = powmod(F, h, q, rest);
    Vec g = gcd(F, rest, sub(F, h, x));
    if (g.size() > 1) {
      rest = divrem(F, rest, g).first;
      h = rem(F, h, rest);
      out.emplace_back(std::move(g), d);
    }
  }
  if (degree(rest) >= 1) {
    const std::size_t d = degree(rest);
    out.emplace_back(monic(F, rest), d);
  }
  return out;
}

std::vector<Vec> equal_degree(const Field& F, const Vec& g, std::size_t d, std::mt19937_64& rng) {
  if (degree(g) == d) return {monic(F, g)};
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.q, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<Coeff> coeff(0, F.q - 1);
  while (true) {
    Vec a(degree(g));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (a.size() <= 1) continue;
    Vec b = sub(F, powmod(F, a, e, g), Vec{1});
    Vec h = gcd(F, g, b);
    if (h.size() > 1 && h.size() < g.size()) {
      auto left = equal_degree(F, h, d, rng);
      auto right = equal_degree(F, divrem(F, g, h).first, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<Vec> factor_squarefree(const Field& F, const Vec& f, std::mt19937_64& rng) {
  std::vector<Vec> out;
  for (const auto& [g, d] : distinct_degree(F, monic(F, f))) {
    auto parts = equal_degree(F, g, d, rng);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return out;
}

}  // namespace galoiskit::detail::modp
