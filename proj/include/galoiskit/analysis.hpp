#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galoiskit/factor.hpp"
#include "galoiskit/galois.hpp"
#include "galoiskit/linalg.hpp"
#include "galoiskit/poly.hpp"

namespace galoiskit {

/// Syntax error in a polynomial expression; position is a 0-based column.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message);
  [[nodiscard]] std::size_t position() const { return position_; }
  [[nodiscard]] const std::string& message() const { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

/// Grammar, whitespace ignored:
///   expr   := sign? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := integer ('/' integer)? | 'x' | '(' expr ')'
Poly parse_polynomial(std::string_view text);

struct AnalysisOptions {
  std::size_t max_degree = 24;
  /// Also run the inequality, hom-extension and insertion-law checks.
  bool verify = false;
  Execution exec = Execution::parallel;
};

struct AnalysisReport {
  struct Pair {
    std::vector<std::size_t> subgroup;  // member indices into the automorphism list
    std::size_t subgroup_order;
    std::size_t field_dimension;
    Poly field_minpoly;
    std::size_t field_index;  // distinct fixed fields are numbered 0 .. field_count-1
  };

  std::string input;
  Factorization factorization;
  std::size_t splitting_degree = 0;
  Poly defining_poly;
  std::size_t aut_order = 0;
  bool abelian = false;
  Characterizations characterizations{};
  std::size_t subgroup_count = 0;
  std::size_t field_count = 0;
  /// One per subgroup, sorted by (order, members).
  std::vector<Pair> pairs;
  std::vector<std::string> roundtrip_failures;
  /// Covering relations, smaller to larger, as indices into pairs.
  std::vector<std::pair<std::size_t, std::size_t>> subgroup_edges;
  /// Covering relations between distinct fields (by field_index), smaller to larger.
  std::vector<std::pair<std::size_t, std::size_t>> field_edges;
  /// Everything that contradicts a theorem; nonempty means a bug.
  std::vector<std::string> theorem_failures;
  /// Summary lines of the optional verification pass.
  std::vector<std::string> verification;
};

/// Full pipeline: factor, split, group, correspondence, characterizations.
/// Throws std::invalid_argument for constant input and DegreeCapExceeded or
/// GroupCapExceeded beyond the cap.
AnalysisReport analyze(const Poly& p, const AnalysisOptions& options = {});

enum class OutputFormat { text, json, dot };

std::string emit(const AnalysisReport& report, OutputFormat format);

}  // namespace galoiskit
