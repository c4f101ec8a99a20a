// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace testing;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& line) { notes.push_back(line); }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << " s";
  return os.str();
}

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

// Fields used by criteria 2 and 3: the corpus plus a biquadratic field.
std::vector<CorpusEntry> extended_corpus() {
  auto fields = corpus();
  const SplittingField& bq = splitting("(x^2-2)*(x^2-3)");
  fields.push_back({"split((x^2-2)(x^2-3))", bq.field, true, bq.roots});
  return fields;
}

// ---------------------------------------------------------------------------

struct GoldenCase {
  const char* poly;
  std::size_t degree;
  std::size_t aut;
  std::size_t lattice;  // subgroups and fields
};

Outcome criterion1() {
  Outcome out;
  const GoldenCase cases[] = {{"x^2 - 2", 2, 2, 2}, {"x^3 - 2", 6, 6, 6}, {"x^4 + 1", 4, 4, 5}, {"x^4 - 2", 8, 8, 10}};
  const auto suite_start = std::chrono::steady_clock::now();
  for (const auto& c : cases) {
    const auto start = std::chrono::steady_clock::now();
    const SplittingField sf = splitting_field(P(c.poly));
    const AutGroup G(sf.field);
    const CorrespondenceReport r = galois_correspondence(G);
    const Characterizations ch = characterizations(G);
    const double took = seconds_since(start);
    const std::string tag = std::string(c.poly) + ": ";

    // Independent oracles: roots of the defining polynomial by norm factoring,
    // subgroups by scanning every subset against direct composition.
    const std::size_t oracle_aut =
        roots_in_field(sf.field.defining_poly(), sf.field, RootStrategy::norm_factorization).size();
    const std::size_t oracle_subgroups = brute_force_subgroups(G.elements()).size();

    out.require(sf.field.degree() == c.degree, tag + "splitting degree");
    out.require(G.order() == c.aut && oracle_aut == c.aut, tag + "|Aut|");
    out.require(r.subgroups.size() == c.lattice && oracle_subgroups == c.lattice, tag + "subgroup count");
    out.require(r.fields.size() == c.lattice && r.bijective, tag + "field count / bijection");
    out.require(r.roundtrip_failures.empty() && r.theorem_failures.empty(), tag + "roundtrip");
    out.require(ch.separable_normal && ch.fixed_field_bottom && ch.aut_order_equals_degree && ch.splitting_of_separable,
                tag + "characterizations all true");
    out.require(took < 10.0, tag + "under 10 s");
    if (std::string(c.poly) == "x^3 - 2") {
      const auto table = composition_table(G.elements());
      bool commutative = true;
      for (std::size_t i = 0; i < G.order(); ++i) {
        for (std::size_t j = 0; j < G.order(); ++j) commutative = commutative && table[i][j] == table[j][i];
      }
      out.require(!commutative && !G.is_abelian(), tag + "nonabelian");
    }
    if (std::string(c.poly) == "x^4 + 1") {
      for (const auto& h : G.elements()) out.require(element_order(h) <= 2, tag + "element order <= 2");
    }
    out.note(tag + "degree " + std::to_string(sf.field.degree()) + ", |Aut| " + std::to_string(G.order()) + ", " +
             std::to_string(r.subgroups.size()) + " <-> " + std::to_string(r.fields.size()) + ", " + fmt_seconds(took));
  }

  const auto start = std::chrono::steady_clock::now();
  const NumberField cbrt2(P("x^3 - 2"));
  const AutGroup G(cbrt2);
  const Characterizations ch = characterizations(G);
  const InequalityReport ineq = check_inequalities(cbrt2);
  const double took = seconds_since(start);
  bool strict = false;
  for (const auto& check : ineq.checks) {
    if (check.lhs == 1 && check.rhs == 3 && check.holds && !check.equality_expected) strict = true;
  }
  const std::size_t oracle_roots = roots_in_field(P("x^3 - 2"), cbrt2, RootStrategy::norm_factorization).size();
  out.require(G.order() == 1 && oracle_roots == 1 && cbrt2.degree() == 3, "Q(cbrt 2): |Aut| = 1 < 3");
  out.require(!ch.separable_normal && !ch.fixed_field_bottom && !ch.aut_order_equals_degree && !ch.splitting_of_separable,
              "Q(cbrt 2): characterizations all false");
  out.require(strict && ineq.ok(), "Q(cbrt 2): strict inequality at the bottom field");
  out.require(took < 10.0, "Q(cbrt 2): under 10 s");
  out.note("Q(cbrt 2): |Aut| 1 < 3, strict, " + fmt_seconds(took));

  const double total = seconds_since(suite_start);
  out.require(total < 120.0, "suite under 2 min");
  out.note("suite total " + fmt_seconds(total));
  return out;
}

Outcome criterion2() {
  Outcome out;
  std::size_t checked = 0;
  for (const auto& entry : extended_corpus()) {
    const AutGroup G(entry.field);
    for (const auto& H : enumerate_subgroups(G)) {
      const IntermediateField K = fixed_field(G, H);
      out.require(aut_fixing_subfield(G, K) == H, entry.name + ": Aut(E/E^H) = H for " + H.to_string());
      out.require(brute_force_fixing(G, K) == H.members(), entry.name + ": element-wise fixing oracle " + H.to_string());
      out.require(entry.field.degree() == K.dimension() * H.order(), entry.name + ": [E:E^H] = |H| for " + H.to_string());
      ++checked;
    }
  }
  out.note(std::to_string(checked) + " subgroups across " + std::to_string(extended_corpus().size()) + " fields");
  return out;
}

Outcome criterion3() {
  Outcome out;
  for (const auto& entry : extended_corpus()) {
    const Characterizations c = characterizations(entry.field);
    out.require(c.coherent(), entry.name + ": the four booleans agree");
    out.require(c.separable_normal == entry.galois, entry.name + ": expected Galois status");
    out.note(entry.name + ": " + (c.separable_normal ? "all true" : "all false"));
  }
  return out;
}

Outcome criterion4() {
  Outcome out;
  for (const char* p : {"x^2 - 2", "x^3 - 2", "x^4 + 1", "x^4 - 2", "(x^2-2)*(x^2-3)"}) {
    const SplittingField& sf = splitting(p);
    const NFElement gamma = primitive_element_theorem(sf.field, sf.roots);
    const std::size_t d = minimal_polynomial(gamma).deg();
    out.require(d == sf.field.degree(), std::string(p) + ": primitive element degree");
    out.note(std::string(p) + ": deg minpoly(gamma) = " + std::to_string(d) + " = [E:Q]");
  }
  const NumberField E(P("x^4 - 10*x^2 + 1"));
  const NFElement t = E.generator();
  const NFElement sqrt2 = (t.pow(3) - Rational(9) * t) * Rational(Integer(1), Integer(2));
  const NFElement sqrt3 = (Rational(11) * t - t.pow(3)) * Rational(Integer(1), Integer(2));
  out.require(sqrt2 * sqrt2 == E.from_rational(2) && sqrt3 * sqrt3 == E.from_rational(3), "sqrt 2, sqrt 3 oracle");
  const PrimitivePair pp = pair_primitive(E, sqrt2, sqrt3);
  const Poly m = minimal_polynomial(pp.gamma);
  out.require(m == P("x^4 - 10*x^2 + 1"), "pair_primitive(sqrt 2, sqrt 3) minimal polynomial");
  out.note("pair_primitive(sqrt 2, sqrt 3): c = " + std::to_string(pp.c) + ", minpoly " + m.to_string());
  return out;
}

Outcome criterion5() {
  Outcome out;
  const char* sources[] = {"x^2 - 2", "x^3 - 2", "x^4 + 1", "x^4 - 2", "(x^2-2)*(x^2-3)"};
  std::vector<NumberField> targets;
  for (const char* p : sources) targets.push_back(splitting(p).field);
  targets.push_back(NumberField(P("x^3 - 2")));
  targets.push_back(NumberField(P("x^2 + 1")));

  std::mt19937 rng(20240501);
  std::uniform_int_distribution<std::size_t> pick_source(0, std::size(sources) - 1), pick_target(0, targets.size() - 1);
  std::uniform_int_distribution<long> coeff(-2, 2);
  std::size_t nonzero = 0;
  for (int trial = 0; trial < 20; ++trial) {
    // K = Q(beta) for a random combination of roots of a corpus polynomial.
    const SplittingField& sf = splitting(sources[pick_source(rng)]);
    NFElement beta = sf.field.zero();
    for (const auto& r : sf.roots) beta += r * Rational(coeff(rng));
    if (beta.is_rational()) beta += sf.roots.front();
    const NumberField K(minimal_polynomial(beta));
    // Every other trial targets the field beta came from, so embeddings exist.
    const NumberField& L = trial % 2 == 0 ? sf.field : targets[pick_target(rng)];
    if (K.degree() * L.degree() > 32) {
      --trial;
      continue;
    }
    const auto homs = enumerate_homs(K, L);
    const auto roots = roots_in_field(K.defining_poly(), L, RootStrategy::norm_factorization);
    out.require(homs.size() == roots.size(), "trial " + std::to_string(trial) + ": |homs| = |roots|");
    for (const auto& h : homs) {
      out.require(evaluate(K.defining_poly(), h.generator_image()).is_zero(), "hom image is a root");
    }
    if (!homs.empty()) ++nonzero;
  }
  out.note("20 random (K, L) pairs, " + std::to_string(nonzero) + " with homomorphisms");

  std::size_t steps = 0;
  for (const char* p : sources) {
    const SplittingField& sf = splitting(p);
    const AutGroup G(sf.field);
    for (std::size_t i = 0; i < sf.adjoined.size(); ++i) {
      const std::vector<NFElement> before(sf.adjoined.begin(), sf.adjoined.begin() + static_cast<long>(i));
      const std::vector<NFElement> upto(sf.adjoined.begin(), sf.adjoined.begin() + static_cast<long>(i) + 1);
      const IntermediateField K = adjoin_set(sf.field, before);
      const HomExtensionReport r = hom_extension_check(G, K, sf.adjoined[i]);
      const std::size_t oracle_lhs = G.order() / brute_force_fixing(G, adjoin_set(sf.field, upto)).size();
      out.require(r.holds() && r.lhs == oracle_lhs, std::string(p) + ": tower step " + std::to_string(i + 1));
      ++steps;
    }
  }
  out.note("hom-extension sum identity on " + std::to_string(steps) + " tower steps");
  return out;
}

Outcome criterion6() {
  Outcome out;
  const SplittingField& sf = splitting("x^4 - 2");
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<NFElement> s, t, both;
    for (const auto& r : sf.roots) {
      const bool in_s = bit(rng) != 0, in_t = bit(rng) != 0;
      if (in_s) s.push_back(r);
      if (in_t) t.push_back(r);
      if (in_s || in_t) both.push_back(r);
    }
    out.require(adjoin_to(adjoin_set(sf.field, s), t) == adjoin_set(sf.field, both), "trial " + std::to_string(trial));
  }
  out.note("50 random (S, T) over the roots of x^4 - 2");
  return out;
}

Outcome criterion7() {
  Outcome out;
  const SplittingField& sf = splitting("x^4 + 1");
  const NumberField& E = sf.field;
  const auto subsets = all_subsets(sf.roots);
  out.require(subsets.size() == 16, "16 subsets");
  std::vector<IntermediateField> fields;
  const AutGroup G(E);
  for (const auto& H : enumerate_subgroups(G)) fields.push_back(fixed_field(G, H));
  for (const auto& s : subsets) {
    IntermediateField K = adjoin_set(E, s);
    if (std::find(fields.begin(), fields.end(), K) == fields.end()) fields.push_back(std::move(K));
  }

  const auto ins = field_insertion(E);
  std::vector<std::pair<ElementSet, IntermediateField>> samples;
  for (const auto& s : subsets) {
    for (const auto& K : fields) samples.emplace_back(ElementSet{s, false}, K);
  }
  const InsertionReport report = check_insertion<ElementSet, IntermediateField>(ins, samples);
  out.require(report.ok(), "adjunction and insertion laws");
  for (const auto& s : subsets) {
    const IntermediateField L = adjoin_set(E, s);
    for (const auto& K : fields) {
      bool all_in = true;
      for (const auto& r : s) all_in = all_in && membership(K, r);
      out.require(is_subfield(L, K) == all_in, "adjoin(S) <= K iff S in K");
    }
  }

  const IntermediateField top = top_field(E), bot = bottom_field(E);
  std::size_t triples = 0;
  for (const auto& a : fields) {
    out.require(join(a, bot) == a && meet(a, top) == a, "bounds are neutral");
    out.require(join(a, top) == top && meet(a, bot) == bot, "bounds are absorbing");
    for (const auto& b : fields) {
      out.require(join(a, b) == join(b, a) && meet(a, b) == meet(b, a), "commutativity");
      out.require(join(a, meet(a, b)) == a && meet(a, join(a, b)) == a, "absorption");
      for (const auto& c : fields) {
        out.require(join(join(a, b), c) == join(a, join(b, c)), "join associativity");
        out.require(meet(meet(a, b), c) == meet(a, meet(b, c)), "meet associativity");
        ++triples;
      }
    }
  }
  out.note(std::to_string(report.adjunction_checks) + " adjunction checks, " + std::to_string(report.insertion_checks) +
           " insertion checks, " + std::to_string(triples) + " lattice triples over " + std::to_string(fields.size()) +
           " subfields");
  return out;
}

Outcome criterion8() {
  Outcome out;
  std::mt19937 rng(8);
  std::size_t factors = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Poly p = random_poly(rng, 8, 9);
    const Factorization f = factor_rationals(p);
    out.require(f.expand() == p, "round trip for " + p.to_string());
    for (const auto& fp : f.factors) {
      out.require(fp.factor.is_monic() && is_irreducible(fp.factor), "library irreducibility of " + fp.factor.to_string());
      out.require(certified_irreducible(fp.factor), "numeric certificate for " + fp.factor.to_string());
      ++factors;
    }
  }
  out.note("200 polynomials, " + std::to_string(factors) + " factors re-certified");
  return out;
}

Outcome criterion9() {
  Outcome out;
  const CommandResult ok = run_command(std::string(GALOISKIT_CLI) + " 'x^3 - 2' --format json 2>/dev/null");
  out.require(ok.exit_code == 0, "exit code 0");
  try {
    const nlohmann::json j = nlohmann::json::parse(ok.output);
    std::ifstream in(GALOISKIT_SCHEMA);
    const nlohmann::json schema = nlohmann::json::parse(in);
    std::vector<std::string> errors;
    validate_schema(j, schema, "$", errors);
    out.require(errors.empty(), "schema validation");
    for (const auto& e : errors) out.note(e);
    out.require(j.value("aut_order", 0) == 6, "\"aut_order\": 6");
  } catch (const std::exception& e) {
    out.require(false, std::string("json parse: ") + e.what());
  }
  const CommandResult bad = run_command(std::string(GALOISKIT_CLI_CORRUPTED) + " 'x^3 - 2' --format json 2>/dev/null");
  out.require(bad.exit_code == 2, "corrupted build exits 2");
  out.note("exit " + std::to_string(ok.exit_code) + ", corrupted build exit " + std::to_string(bad.exit_code));
  return out;
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"golden corpus", criterion1},
      {"fixed field of every subgroup", criterion2},
      {"characterizations agree", criterion3},
      {"primitive element", criterion4},
      {"hom counts", criterion5},
      {"adjoin S then T", criterion6},
      {"insertion and lattice laws", criterion7},
      {"factorization round trip", criterion8},
      {"command line contract", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << (i + 1) << " [" << (o.pass ? "PASS" : "FAIL") << "] " << criteria[i].first << " ("
              << fmt_seconds(seconds_since(start)) << ")\n";
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';
    if (!o.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
