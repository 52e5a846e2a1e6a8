#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "qtwo/graph.hpp"
#include "qtwo/obstructions.hpp"
#include "qtwo/search.hpp"
#include "qtwo/witnesses.hpp"

namespace qtwo {

struct ClassifyConfig {
  bool run_search = false;  // numeric search when nothing else decides
  bool exact_round = false; // try snapping a numeric witness to exact form
  SearchConfig search;
};

struct WitnessRecord {
  SymMatrix matrix;     // pattern equals the input graph, input labels
  std::string source;
  bool exact = false;   // verified in exact arithmetic
  double residual = 0;  // numeric residual (0 when exact)
};

// One verdict. Status invariants: "q=2" carries a verified witness, "q>2"
// carries a re-verifiable certificate, "asserted" carries a citation for a
// value taken from prior work, "unknown" carries nothing.
struct ClassificationRecord {
  std::string id;
  std::string graph6;
  int n = 0;
  int regularity = -1;  // -1 when the graph is not regular
  int diameter = -1;
  std::string status;   // "q=2", "q>2", "asserted", "unknown"
  std::string matched;  // recognized name (build_named grammar), or empty
  std::vector<int> match_perm;  // matched-name labels -> input labels
  FilterReport filters;
  std::optional<WitnessRecord> witness;
  std::optional<Certificate> certificate;
  std::string citation;  // nonempty exactly when status == "asserted"
  std::string note;      // extra detail, e.g. a verified q <= 3 bound
  std::uint64_t seed = 0;  // search seed when a search ran
};

nlohmann::json record_to_json(const ClassificationRecord& rec);

// Re-checks a serialized record's evidence from the record alone: the
// witness must fit the graph and pass the involution check, the certificate
// must re-verify against the graph, an asserted status must cite a source.
bool verify_record(const nlohmann::json& rec, std::string* why = nullptr);

// Full decision procedure for one connected graph: recognition against the
// known two-eigenvalue list, then the obstruction filter chain, then
// (optionally) numeric search. Throws std::domain_error on disconnected
// input.
ClassificationRecord classify(const Graph& g, const ClassifyConfig& cfg = {});

struct CensusCounts {
  int n = 0;
  int generated = 0;  // connected 4-regular isomorphism classes
  int diameter2 = 0;  // with diameter exactly 2
  int survivors = 0;  // also passing the unique-shortest-path filter
};

struct CensusReport {
  std::vector<CensusCounts> counts;           // n = 6..10
  std::vector<ClassificationRecord> records;  // classified survivors
};

// Enumerates connected 4-regular graphs for n = 6..10, keeps those of
// diameter 2 with no uniquely-connected non-adjacent pair, and classifies
// each survivor.
CensusReport run_diameter2_census();

nlohmann::json census_to_json(const CensusReport& report);
std::string census_to_csv(const CensusReport& report);

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  bool pass = true;
  std::vector<CheckLine> lines;

  void add(const std::string& name, bool ok, const std::string& detail = "");
};

// Rebuilds every graph in the degree <= 4 two-eigenvalue classification,
// checks the claimed order/regularity, verifies a witness for each, and
// confirms the stated isomorphisms.
VerificationReport verify_theorem_list();

// Loads and re-verifies every stored catalog matrix, including the strong
// spectral property of the edge-deleted witness and the pattern identities
// tying catalog matrices to their named graphs.
VerificationReport verify_catalog();

}  // namespace qtwo
