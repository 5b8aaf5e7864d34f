#pragma once

// Front end: polynomial parsing, the end-to-end analysis pipeline, and the
// text and JSON renderings of its report.
//
// Input grammar (LL(1), whitespace allowed between tokens):
//   poly   := sign? term (sign term)*
//   sign   := '+' | '-'
//   term   := number ('/' number)? ('*'? power)? | power
//   power  := letter ('^' number)?
//   number := digit+
// Exactly one variable letter may appear.

#include <optional>
#include <string>
#include <vector>

#include "galois/correspondence.hpp"

namespace galois {

/// Throws DomainError with a 0-based character position on bad input.
UniPoly parse_poly(const std::string& text);

struct AnalysisConfig {
  long precision_bits = 128;
  long norm_bound = 8;
  bool emit_array = false;
  std::optional<std::vector<long>> spec;  // explicit weights instead of the search
};

struct ArrayRow {
  Arrangement arrangement;
  Permutation element;  // sigma with row = sigma . base
  NfElem value;         // V evaluated at the row's ordering of the roots
};

struct ArrayBlock {
  Permutation representative;
  std::vector<ArrayRow> rows;
  PermGroup substitutions;  // transitions within the block
};

struct SubgroupArray {
  PermGroup subgroup;
  std::vector<ArrayBlock> blocks;
};

struct AnalysisReport {
  UniPoly input;                  // as parsed
  UniPoly polynomial;             // monic with integer coefficients
  std::optional<std::string> substitution;
  SplittingField field;
  CorrespondenceReport lattice;
  std::vector<SubgroupArray> arrays;  // filled when emit_array is set
  std::vector<Check> checks;          // pipeline certificates then lattice checks

  bool all_pass() const;
};

/// Monic integer polynomial g and the text of the substitution used, if any:
/// g(x) = c^n f(x/c) / lc(f).
std::pair<UniPoly, std::optional<std::string>> normalize_polynomial(const UniPoly& f);

/// Throws DomainError for bad input (degree outside 2..4, not squarefree),
/// CertificationError when a numeric certificate cannot be completed.
AnalysisReport analyze(const std::string& text, const AnalysisConfig& cfg);

std::string render_text(const AnalysisReport& r);
std::string render_json(const AnalysisReport& r);

/// Weights written "a1,a2,...". Throws DomainError.
std::vector<long> parse_weights(const std::string& text);

}  // namespace galois
