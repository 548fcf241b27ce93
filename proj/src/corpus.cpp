#include "zonocert/corpus.hpp"
#include "zonocert/parallelohedron.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace zonocert {

bool CorpusReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const CorpusResult& r) { return r.passed; });
}

namespace {

CorpusExpectation expectation_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  CorpusExpectation e;
  auto count = [&](const char* key) -> std::optional<std::size_t> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_number_integer() || j[key].get<long long>() < 0)
      throw SchemaError(where + "." + key, "expected a non-negative integer");
    return j[key].get<std::size_t>();
  };
  auto text = [&](const char* key) -> std::optional<std::string> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_string()) throw SchemaError(where + "." + key, "expected a string");
    return j[key].get<std::string>();
  };
  e.edges = count("edges");
  e.facet_pairs = count("facet_pairs");
  if (j.contains("det")) e.det = rational_from_json(j["det"], where + ".det");
  e.error = text("error");
  e.stage = text("stage");
  return e;
}

} // namespace

std::vector<CorpusEntry> corpus_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("$", "corpus must be an array of entries");
  std::vector<CorpusEntry> out;
  std::set<std::string> names;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "$[" + std::to_string(i) + "]";
    const Json& e = j[i];
    if (!e.is_object() || !e.contains("name") || !e["name"].is_string())
      throw SchemaError(where, "entry needs a string \"name\"");
    std::string name = e["name"].get<std::string>();
    if (!names.insert(name).second) throw SchemaError(where + ".name", "duplicate entry name \"" + name + "\"");
    if (!e.contains("normal_set")) throw SchemaError(where, "missing field \"normal_set\"");
    NormalSet ns = normal_set_from_json(e["normal_set"], where + ".normal_set");
    std::optional<CorpusExpectation> expected;
    if (e.contains("expected")) expected = expectation_from_json(e["expected"], where + ".expected");
    out.push_back({std::move(name), std::move(ns), std::move(expected)});
  }
  return out;
}

CorpusReport run_corpus(const std::vector<CorpusEntry>& entries) {
  CorpusReport report;
  for (const auto& entry : entries) {
    CorpusResult r;
    r.name = entry.name;
    const CorpusExpectation want = entry.expected.value_or(CorpusExpectation{});
    std::vector<std::string> diffs;
    try {
      VoronoiCertificate cert = certify_second_voronoi(entry.normal_set);
      r.outcome = "certified";
      const std::size_t edges = cert.edge_set.edges.size();
      const std::size_t facets = cert.facet_vectors.vectors.size();
      const Rational& det = cert.basis.lattice_coordinate_det;
      if (want.error) diffs.push_back("expected error " + *want.error + ", got a certificate");
      if (want.edges && *want.edges != edges)
        diffs.push_back("edges: expected " + std::to_string(*want.edges) + ", got " + std::to_string(edges));
      if (want.facet_pairs && *want.facet_pairs != facets)
        diffs.push_back("facet_pairs: expected " + std::to_string(*want.facet_pairs) + ", got " + std::to_string(facets));
      if (want.det && *want.det != det)
        diffs.push_back("det: expected " + to_string(*want.det) + ", got " + to_string(det));
      if (diffs.empty())
        r.detail = std::to_string(edges) + " edges, " + std::to_string(facets) + " facet pairs, det " + to_string(det);
    } catch (const Error& e) {
      r.outcome = std::string(to_string(e.kind()));
      if (!want.error) {
        diffs.push_back(std::string("unexpected error: ") + e.what());
      } else if (*want.error != r.outcome) {
        diffs.push_back("expected error " + *want.error + ", got " + r.outcome);
      } else if (want.stage && *want.stage != e.stage()) {
        diffs.push_back("expected stage " + *want.stage + ", got " + e.stage());
      }
      if (diffs.empty()) r.detail = "expected failure at stage " + e.stage();
    }
    r.passed = diffs.empty();
    if (!r.passed) {
      for (std::size_t i = 0; i < diffs.size(); ++i) r.detail += (i ? "; " : "") + diffs[i];
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

std::string format_table(const CorpusReport& report) {
  std::size_t width = 4;
  for (const auto& r : report.results) width = std::max(width, r.name.size());
  std::ostringstream out;
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  out << pad("name", width) << "  status  " << pad("outcome", 10) << "  detail\n";
  std::size_t passed = 0;
  for (const auto& r : report.results) {
    passed += r.passed;
    out << pad(r.name, width) << "  " << (r.passed ? "PASS  " : "FAIL  ") << "  " << pad(r.outcome, 10) << "  " << r.detail << '\n';
  }
  out << passed << "/" << report.results.size() << " entries passed\n";
  return out.str();
}

} // namespace zonocert
