// The built-in polytope corpus and the per-vertex identity table.

#ifndef GROWTHLAB_CORPUS_HPP
#define GROWTHLAB_CORPUS_HPP

#include "growthlab/io.hpp"
#include "growthlab/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace growthlab {

struct CorpusEntry {
  std::string name;
  std::optional<Polytope> polytope;
  /// Set when the entry could not be loaded.
  std::string load_error;
};

/// Sigma in dimensions 1-3, [0,2], [0,3], [0,2]^2, [0,2]^3 and the
/// trapezoid conv{(0,0),(3,0),(1,1),(0,1)}.
std::vector<CorpusEntry> builtin_corpus();

/// Every *.json file of `dir` in name order; unreadable files become
/// entries with load_error set.
std::vector<CorpusEntry> directory_corpus(const std::string& dir);

struct CorpusRow {
  std::string name;
  std::size_t dim = 0;
  std::optional<RatVec> vertex;
  bool flagged = false;
  std::string error;  // error code name when flagged
  std::string message;
  Rational volume_polytope;
  Rational volume_MA;
  Rational seshadri_lp;
  Rational seshadri_domination;
  Rational seshadri_from_body;
  bool okounkov_body_equal = false;  // body = polytope at every k <= 3
  bool okounkov_volume_identity = false;
  Rational gromov;
  double upper_bound = 0;  // (n! vol)^(1/n)
  double slack = 0;
};

/// One row per (entry, vertex), computed in parallel per entry and returned
/// in entry order. A failing entry yields a single flagged row.
std::vector<CorpusRow> run_corpus(const std::vector<CorpusEntry>& entries);

Json to_json(const CorpusRow& row);
std::string corpus_csv(const std::vector<CorpusRow>& rows);

}  // namespace growthlab

#endif  // GROWTHLAB_CORPUS_HPP
