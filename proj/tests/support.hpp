// Shared fixtures and independent oracles for the test binaries.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "galoiskit/analysis.hpp"
#include "galoiskit/factor.hpp"
#include "galoiskit/galois.hpp"
#include "galoiskit/lattice.hpp"
#include "galoiskit/numfield.hpp"
#include "galoiskit/poly.hpp"
#include "galoiskit/tower.hpp"

namespace testing {

using namespace galoiskit;

inline Poly P(const char* text) { return parse_polynomial(text); }

inline Poly from_ints(std::initializer_list<long> coefficients) {
  std::vector<Rational> c;
  for (long v : coefficients) c.emplace_back(v);
  return Poly(std::move(c));
}

// ---------------------------------------------------------------------------
// Corpus

struct CorpusEntry {
  std::string name;
  NumberField field;
  bool galois;
  std::vector<NFElement> roots;  // roots of the source polynomial inside field
};

inline const SplittingField& splitting(const std::string& poly) {
  static std::vector<std::pair<std::string, SplittingField>> cache;
  for (const auto& [k, v] : cache) {
    if (k == poly) return v;
  }
  cache.emplace_back(poly, splitting_field(P(poly.c_str())));
  return cache.back().second;
}

// Golden splitting fields plus the non-Galois controls.
inline std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  for (const char* p : {"x^2 - 2", "x^3 - 2", "x^4 + 1", "x^4 - 2"}) {
    const SplittingField& sf = splitting(p);
    out.push_back({std::string("split(") + p + ")", sf.field, true, sf.roots});
  }
  const NumberField cbrt2(P("x^3 - 2"));
  out.push_back({"Q(cbrt 2)", cbrt2, false, roots_in_field(P("x^3 - 2"), cbrt2)});
  const NumberField fourth2(P("x^4 - 2"));
  out.push_back({"Q(2^(1/4))", fourth2, false, roots_in_field(P("x^4 - 2"), fourth2)});
  out.push_back({"Q", NumberField::rationals(), true, {NumberField::rationals().from_rational(1)}});
  return out;
}

// ---------------------------------------------------------------------------
// Sylvester resultant by cofactor expansion (small sizes only).

inline Rational cofactor_determinant(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  if (n == 1) return m[0][0];
  Rational det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][c] * cofactor_determinant(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

inline Rational sylvester_resultant(const Poly& a, const Poly& b) {
  const std::size_t m = a.deg(), n = b.deg();
  if (m + n == 0) return Rational(1);
  std::vector<std::vector<Rational>> s(m + n, std::vector<Rational>(m + n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = a.coeff(m - i);
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = b.coeff(n - i);
  }
  return cofactor_determinant(s);
}

// ---------------------------------------------------------------------------
// Irreducibility certificate from numerical roots: every candidate factor
// b * prod(x - r) over a subset of roots and b | lc is either visibly
// non-integral or fails exact division.

inline std::vector<std::complex<long double>> numeric_roots(const Poly& f) {
  using C = std::complex<long double>;
  const std::size_t d = f.deg();
  std::vector<C> a(d + 1);
  for (std::size_t i = 0; i <= d; ++i) a[i] = C(f.coeff(i).raw().get_d() / f.leading().raw().get_d());
  std::vector<C> z(d);
  for (std::size_t i = 0; i < d; ++i) z[i] = std::pow(C(0.4L, 0.9L), static_cast<long double>(i));
  auto eval = [&](C x) {
    C v = 0;
    for (std::size_t i = d + 1; i-- > 0;) v = v * x + a[i];
    return v;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (std::size_t i = 0; i < d; ++i) {
      C den = 1;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      const C step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-17L) break;
  }
  return z;
}

inline bool certified_irreducible(const Poly& f) {
  const std::size_t d = f.deg();
  if (d <= 1) return true;
  const std::vector<Integer> ints = primitive_integer_part(f);
  const Integer lc = abs(ints.back());
  std::vector<long> lc_divisors;
  for (long b = 1; b <= lc; ++b) {
    if (lc % b == 0) lc_divisors.push_back(b);
  }
  const auto roots = numeric_roots(f);
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << d); ++mask) {
    const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (2 * k > d) continue;
    std::vector<std::complex<long double>> g{1};
    for (std::size_t i = 0; i < d; ++i) {
      if (!(mask >> i & 1)) continue;
      std::vector<std::complex<long double>> next(g.size() + 1);
      for (std::size_t j = 0; j < g.size(); ++j) {
        next[j + 1] += g[j];
        next[j] -= g[j] * roots[i];
      }
      g = std::move(next);
    }
    for (long b : lc_divisors) {
      std::vector<Rational> exact;
      bool integral = true;
      for (const auto& c : g) {
        const long double v = c.real() * b;
        if (std::abs(c.imag() * b) > 1e-6L || std::abs(v - std::round(v)) > 1e-6L) {
          integral = false;
          break;
        }
        exact.emplace_back(static_cast<long>(std::llround(v)));
      }
      if (integral && divides(Poly(exact), f)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Groups built directly from homomorphism composition, without the table.

inline std::size_t hom_index(const std::vector<AlgHom>& homs, const AlgHom& h) {
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (homs[i].generator_image() == h.generator_image()) return i;
  }
  return homs.size();
}

// compose[i][j] = index of (i after j), by composing homs.
inline std::vector<std::vector<std::size_t>> composition_table(const std::vector<AlgHom>& homs) {
  std::vector<std::vector<std::size_t>> t(homs.size(), std::vector<std::size_t>(homs.size()));
  for (std::size_t i = 0; i < homs.size(); ++i) {
    for (std::size_t j = 0; j < homs.size(); ++j) t[i][j] = hom_index(homs, compose_homs(homs[j], homs[i]));
  }
  return t;
}

// Every subset closed under composition and containing the identity.
inline std::vector<std::vector<std::size_t>> brute_force_subgroups(const std::vector<AlgHom>& homs) {
  const auto table = composition_table(homs);
  const std::size_t n = homs.size();
  std::size_t id = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (homs[i].generator_image() == homs[i].source().generator()) id = i;
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (!(mask >> id & 1)) continue;
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      for (std::size_t j = 0; j < n && closed; ++j) {
        if ((mask >> i & 1) && (mask >> j & 1) && !(mask >> table[i][j] & 1)) closed = false;
      }
    }
    if (!closed) continue;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) members.push_back(i);
    }
    out.push_back(std::move(members));
  }
  return out;
}

inline std::size_t element_order(const AlgHom& h) {
  AlgHom power = h;
  std::size_t k = 1;
  while (!(power.generator_image() == h.source().generator())) {
    power = compose_homs(power, h);
    ++k;
  }
  return k;
}

// Aut(E/K) by applying each automorphism to a basis of K.
inline std::vector<std::size_t> brute_force_fixing(const AutGroup& G, const IntermediateField& K) {
  std::vector<std::size_t> out;
  const auto basis = K.basis_elements();
  for (std::size_t i = 0; i < G.order(); ++i) {
    bool fixes_all = true;
    for (const auto& b : basis) fixes_all = fixes_all && apply_hom(G.element(i), b) == b;
    if (fixes_all) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Minimal JSON Schema check: type, required, properties,
// additionalProperties=false, items, minItems, minimum.

inline void validate_schema(const nlohmann::json& value, const nlohmann::json& schema, const std::string& path,
                            std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    const std::string type = schema["type"];
    const bool ok = (type == "object" && value.is_object()) || (type == "array" && value.is_array()) ||
                    (type == "string" && value.is_string()) || (type == "boolean" && value.is_boolean()) ||
                    (type == "integer" && value.is_number_integer()) || (type == "number" && value.is_number());
    if (!ok) {
      errors.push_back(path + ": expected " + type);
      return;
    }
  }
  if (schema.contains("minimum") && value.is_number() && value.get<double>() < schema["minimum"].get<double>()) {
    errors.push_back(path + ": below minimum");
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!value.contains(key.get<std::string>())) errors.push_back(path + ": missing " + key.get<std::string>());
      }
    }
    const auto props = schema.value("properties", nlohmann::json::object());
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (props.contains(it.key())) {
        validate_schema(it.value(), props[it.key()], path + "." + it.key(), errors);
      } else if (schema.contains("additionalProperties") && schema["additionalProperties"] == false) {
        errors.push_back(path + ": unexpected key " + it.key());
      }
    }
  }
  if (value.is_array()) {
    if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>()) {
      errors.push_back(path + ": too few items");
    }
    if (schema.contains("items")) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        validate_schema(value[i], schema["items"], path + "[" + std::to_string(i) + "]", errors);
      }
    }
  }
}

// ---------------------------------------------------------------------------

struct CommandResult {
  int exit_code;
  std::string output;
};

inline CommandResult run_command(const std::string& command) {
  CommandResult r{-1, {}};
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.output.append(buffer, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline Poly random_poly(std::mt19937& rng, std::size_t max_degree, long bound) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::uniform_int_distribution<std::size_t> degree(1, max_degree);
  const std::size_t d = degree(rng);
  std::vector<Rational> c(d + 1);
  for (auto& v : c) v = Rational(coeff(rng));
  while (c.back().is_zero()) c.back() = Rational(coeff(rng));
  return Poly(std::move(c));
}

}  // namespace testing
