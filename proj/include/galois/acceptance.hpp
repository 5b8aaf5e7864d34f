#pragma once

#include <functional>
#include <string>
#include <vector>

#include "galois/correspondence.hpp"

namespace galois {

/// One polynomial of the reference corpus carried through the whole pipeline.
struct CorpusEntry {
  std::string text;
  UniPoly f;
  RootSystem roots;
  SplittingField field;
  CorrespondenceReport lattice;
};

/// Fixed reference corpus with its expected subgroup counts.
struct CorpusCase {
  std::string text;
  std::size_t subgroups;
};
const std::vector<CorpusCase>& reference_corpus();

CorpusEntry run_pipeline(const std::string& text, long precision_bits = 128);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0 means untimed
};

/// Runs all eight criteria in order. The corpus is built once during
/// criterion 2 and shared with the later corpus criteria. The callback
/// receives each result as soon as it is known.
class AcceptanceSuite {
 public:
  std::vector<CriterionResult> run(const std::function<void(const CriterionResult&)>& on_result = {});
  const std::vector<CorpusEntry>& corpus() const { return corpus_; }

 private:
  std::vector<CorpusEntry> corpus_;
};

std::string format_result(const CriterionResult& r);

}  // namespace galois
