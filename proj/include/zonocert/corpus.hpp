#pragma once

#include "zonocert/dicing.hpp"
#include "zonocert/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zonocert {

/// Expected outcome of certifying one corpus entry. Unset fields are not
/// compared. When `error` is set the entry must fail with that error kind
/// (and `stage`, if given).
struct CorpusExpectation {
  std::optional<std::size_t> edges;
  std::optional<std::size_t> facet_pairs;
  std::optional<Rational> det;
  std::optional<std::string> error;
  std::optional<std::string> stage;
};

struct CorpusEntry {
  std::string name;
  NormalSet normal_set;
  std::optional<CorpusExpectation> expected;
};

struct CorpusResult {
  std::string name;
  bool passed = false;
  std::string outcome; // "certified" or the error kind
  std::string detail;  // diff against the expectation, or a summary
};

struct CorpusReport {
  std::vector<CorpusResult> results;
  bool all_passed() const;
};

/// JSON array of {"name", "normal_set", "expected"?}. Throws SchemaError,
/// including for duplicate names.
std::vector<CorpusEntry> corpus_from_json(const Json& j);

CorpusReport run_corpus(const std::vector<CorpusEntry>& entries);

std::string format_table(const CorpusReport& report);

} // namespace zonocert
