#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "galoiskit/analysis.hpp"
#include "galoiskit/lattice.hpp"
#include "galoiskit/tower.hpp"

namespace galoiskit {

namespace {

// Covering pairs (a, b): a < b with nothing strictly between.
template <class Less>
std::vector<std::pair<std::size_t, std::size_t>> covers(std::size_t count, Less strictly_less) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (!strictly_less(a, b)) continue;
      bool between = false;
      for (std::size_t c = 0; c < count && !between; ++c) between = strictly_less(a, c) && strictly_less(c, b);
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

void verify_extras(const SplittingField& sf, const AutGroup& G, const CorrespondenceReport& corr,
                   AnalysisReport& report) {
  const NumberField& E = sf.field;

  const InequalityReport ineq = check_inequalities(corr);
  for (const auto& c : ineq.checks) {
    if (!c.holds) {
      report.theorem_failures.push_back("inequality violated: " + c.description + " (" + std::to_string(c.lhs) +
                                        " vs " + std::to_string(c.rhs) + ")");
    }
  }
  report.verification.push_back("inequalities: " + std::to_string(ineq.checks.size()) + " checked");

  for (std::size_t i = 0; i < sf.adjoined.size(); ++i) {
    const std::vector<NFElement> prev(sf.adjoined.begin(), sf.adjoined.begin() + static_cast<std::ptrdiff_t>(i));
    const IntermediateField K = adjoin_set(E, prev);
    const HomExtensionReport h = hom_extension_check(G, K, sf.adjoined[i]);
    report.verification.push_back("hom extension, tower step " + std::to_string(i + 1) + ": " + std::to_string(h.lhs) +
                                  " = " + std::to_string(h.rhs));
    if (!h.holds()) {
      report.theorem_failures.push_back("hom extension count differs at tower step " + std::to_string(i + 1));
    }
  }

  // Insertion laws on subsets of the roots against the fields of the correspondence.
  const auto ins = field_insertion(E);
  const std::size_t r = sf.roots.size();
  std::vector<std::vector<NFElement>> subsets;
  if (r <= 5) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
      std::vector<NFElement> s;
      for (std::size_t i = 0; i < r; ++i) {
        if (mask >> i & 1) s.push_back(sf.roots[i]);
      }
      subsets.push_back(std::move(s));
    }
  } else {
    subsets.emplace_back();
    for (std::size_t i = 0; i < r; ++i) {
      subsets.push_back({sf.roots[i]});
      for (std::size_t j = i + 1; j < r; ++j) subsets.push_back({sf.roots[i], sf.roots[j]});
    }
  }
  std::vector<std::pair<ElementSet, IntermediateField>> samples;
  const std::size_t nf = corr.fields.size();
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    samples.emplace_back(ElementSet{subsets[s], false}, corr.fields[s % nf]);
    samples.emplace_back(ElementSet{subsets[s], false}, corr.fields[(7 * s + 3) % nf]);
  }
  for (const auto& K : corr.fields) samples.emplace_back(ins.upper(K), K);
  const InsertionReport ir = check_insertion<ElementSet, IntermediateField>(ins, samples);
  for (const auto& v : ir.violations) report.theorem_failures.push_back("insertion law: " + v);
  report.verification.push_back("insertion laws: " + std::to_string(ir.adjunction_checks) + " adjunction and " +
                                std::to_string(ir.insertion_checks) + " insertion checks");
}

}  // namespace

AnalysisReport analyze(const Poly& p, const AnalysisOptions& options) {
  if (p.is_zero() || p.is_constant()) throw std::invalid_argument("the polynomial must have degree at least 1");
  AnalysisReport report;
  report.input = p.to_string();
  report.factorization = factor_rationals(p);
  for (const auto& f : report.factorization.factors) {
    if (f.factor.deg() > 1 && !is_irreducible(f.factor)) {
      report.theorem_failures.push_back("factor " + f.factor.to_string() + " is not irreducible");
    }
  }
  if (!(report.factorization.expand() == p)) report.theorem_failures.push_back("factorization does not multiply back");

  const SplittingField sf = splitting_field(p, {options.max_degree});
  const NumberField& E = sf.field;
  report.splitting_degree = E.degree();
  report.defining_poly = E.defining_poly();
  if (!sf.tower.is_compatible()) report.theorem_failures.push_back("tower embeddings are not compatible");

  const AutGroup G(E);
  report.aut_order = G.order();
  report.abelian = G.is_abelian();
  const std::vector<std::string> axioms = G.verify_group_axioms();
  for (const auto& a : axioms) report.theorem_failures.push_back("group table: " + a);
  if (!axioms.empty()) return report;

  CorrespondenceOptions copts;
  copts.exec = options.exec;
  copts.cap = options.max_degree;
  for (const auto& r : sf.roots) {
    const NFElement one[] = {r};
    copts.sample_fields.push_back(adjoin_set(E, one));
  }
  const CorrespondenceReport corr = galois_correspondence(G, copts);
  report.subgroup_count = corr.subgroups.size();
  report.field_count = corr.fields.size();
  report.roundtrip_failures = corr.roundtrip_failures;
  for (const auto& f : corr.theorem_failures) report.theorem_failures.push_back(f);
  if (!corr.galois) report.theorem_failures.push_back("splitting field is not Galois");

  for (const auto& [s, f] : corr.pairing) {
    const Subgroup& H = corr.subgroups[s];
    if (G.order() % H.order() != 0) report.theorem_failures.push_back("subgroup order does not divide the group order");
    report.pairs.push_back({H.members(), H.order(), corr.summaries[f].dimension, corr.summaries[f].minpoly, f});
  }
  report.subgroup_edges = covers(corr.subgroups.size(), [&](std::size_t a, std::size_t b) {
    return corr.subgroups[a].order() < corr.subgroups[b].order() && corr.subgroups[a].is_subgroup_of(corr.subgroups[b]);
  });
  report.field_edges = covers(corr.fields.size(), [&](std::size_t a, std::size_t b) {
    return corr.fields[a].dimension() < corr.fields[b].dimension() && is_subfield(corr.fields[a], corr.fields[b]);
  });

  report.characterizations = characterizations(G);
  const Characterizations& c = report.characterizations;
  if (!c.coherent()) report.theorem_failures.push_back("the four characterizations disagree");
  if (!c.separable_normal) report.theorem_failures.push_back("splitting field fails a characterization");

  if (options.verify) verify_extras(sf, G, corr, report);
  return report;
}

// ---------------------------------------------------------------------------

namespace {

std::string factorization_text(const Factorization& f) {
  std::ostringstream os;
  bool first = true;
  if (!f.unit.is_one() || f.factors.empty()) {
    os << f.unit.to_string();
    first = false;
  }
  for (const auto& fp : f.factors) {
    os << (first ? "" : " * ") << '(' << fp.factor.to_string() << ')';
    if (fp.multiplicity > 1) os << '^' << fp.multiplicity;
    first = false;
  }
  return os.str();
}

std::string emit_text(const AnalysisReport& r) {
  std::ostringstream os;
  const auto& c = r.characterizations;
  os << "input:               " << r.input << '\n';
  os << "factorization:       " << factorization_text(r.factorization) << '\n';
  os << "splitting field:     degree " << r.splitting_degree << ", generator with minimal polynomial "
     << r.defining_poly.to_string() << '\n';
  os << "automorphism group:  order " << r.aut_order << ", " << (r.abelian ? "abelian" : "nonabelian") << '\n';
  os << "characterizations:\n";
  const std::pair<const char*, bool> lines[] = {
      {"separable and normal", c.separable_normal},
      {"fixed field of Aut is Q", c.fixed_field_bottom},
      {"|Aut| equals degree", c.aut_order_equals_degree},
      {"splits a separable poly", c.splitting_of_separable},
  };
  for (const auto& [label, value] : lines) os << "  " << std::left << std::setw(26) << label << (value ? "true" : "false") << '\n';
  os << "correspondence:      " << r.subgroup_count << " subgroups <-> " << r.field_count << " intermediate fields\n";
  for (const auto& p : r.pairs) {
    os << "  |H| = " << std::left << std::setw(4) << p.subgroup_order << "[E^H:Q] = " << std::setw(4) << p.field_dimension
       << p.field_minpoly.to_string() << '\n';
  }
  os << "roundtrip failures:  " << (r.roundtrip_failures.empty() ? "none" : std::to_string(r.roundtrip_failures.size()))
     << '\n';
  for (const auto& f : r.roundtrip_failures) os << "  " << f << '\n';
  if (!r.verification.empty()) {
    os << "verification:\n";
    for (const auto& v : r.verification) os << "  " << v << '\n';
  }
  if (!r.theorem_failures.empty()) {
    os << "THEOREM CHECK FAILURES:\n";
    for (const auto& f : r.theorem_failures) os << "  " << f << '\n';
  }
  return os.str();
}

std::string emit_json(const AnalysisReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["input"] = r.input;
  ordered_json factors = ordered_json::array();
  if (!r.factorization.unit.is_one()) {
    factors.push_back({{"poly", r.factorization.unit.to_string()}, {"multiplicity", 1}});
  }
  for (const auto& fp : r.factorization.factors) {
    factors.push_back({{"poly", fp.factor.to_string()}, {"multiplicity", fp.multiplicity}});
  }
  j["factors"] = factors;
  j["splitting_degree"] = r.splitting_degree;
  j["defining_poly"] = r.defining_poly.to_string();
  j["aut_order"] = r.aut_order;
  j["abelian"] = r.abelian;
  const auto& c = r.characterizations;
  j["characterizations"] = {{"separable_normal", c.separable_normal},
                            {"fixed_field_bottom", c.fixed_field_bottom},
                            {"aut_order_equals_degree", c.aut_order_equals_degree},
                            {"splitting_of_separable", c.splitting_of_separable}};
  j["subgroup_count"] = r.subgroup_count;
  j["field_count"] = r.field_count;
  ordered_json pairs = ordered_json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"subgroup_order", p.subgroup_order},
                     {"field_dimension", p.field_dimension},
                     {"field_minpoly", p.field_minpoly.to_string()}});
  }
  j["pairs"] = pairs;
  j["roundtrip_failures"] = r.roundtrip_failures;
  return j.dump(2) + "\n";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

std::string emit_dot(const AnalysisReport& r) {
  std::ostringstream os;
  os << "digraph galois_correspondence {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"Helvetica\"];\n";
  os << "  subgraph cluster_subgroups {\n";
  os << "    label=\"subgroups of Aut(E/Q)\";\n";
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    std::string members;
    for (std::size_t k = 0; k < r.pairs[i].subgroup.size(); ++k) {
      members += (k ? "," : "") + std::to_string(r.pairs[i].subgroup[k]);
    }
    os << "    h" << i << " [label=\"order " << r.pairs[i].subgroup_order << "\\n{" << members << "}\"];\n";
  }
  for (const auto& [a, b] : r.subgroup_edges) os << "    h" << a << " -> h" << b << ";\n";
  os << "  }\n";
  os << "  subgraph cluster_fields {\n";
  os << "    label=\"intermediate fields\";\n";
  std::vector<bool> drawn(r.field_count, false);
  for (const auto& p : r.pairs) {
    if (drawn[p.field_index]) continue;
    drawn[p.field_index] = true;
    os << "    k" << p.field_index << " [shape=ellipse, label=\"degree " << p.field_dimension << "\\n"
       << dot_escape(p.field_minpoly.to_string()) << "\"];\n";
  }
  for (const auto& [a, b] : r.field_edges) os << "    k" << a << " -> k" << b << ";\n";
  os << "  }\n";
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    os << "  h" << i << " -> k" << r.pairs[i].field_index << " [style=dashed, dir=none, constraint=false];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string emit(const AnalysisReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return emit_json(report);
    case OutputFormat::dot:
      return emit_dot(report);
    case OutputFormat::text:
      break;
  }
  return emit_text(report);
}

}  // namespace galoiskit
