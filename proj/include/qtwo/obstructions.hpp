#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qtwo/graph.hpp"

namespace qtwo {

// Each certificate is self-contained evidence that no symmetric involution
// fits the graph's pattern; verify_certificate re-checks the evidence
// directly against the graph, independent of how it was found.

// Too few edges: a pattern with two distinct eigenvalues on n >= 6 vertices
// needs at least 2n-4 edges (2n-3 when n is odd).
struct EdgeBoundCertificate {
  int n = 0;
  int edges = 0;
  int required = 0;
};

// Non-adjacent u, v with w as their only common neighbor: M^2 = I forces
// the single length-2 path product to vanish, but both factors sit on edges.
struct UniquePathCertificate {
  int u = -1, v = -1, w = -1;
};

// An independent set larger than floor(n/2): both eigenspaces of an
// involution would need dimension >= the set size.
struct IndependenceCertificate {
  int bound = 0;
  std::vector<int> witness_set;
};

// Diagonal parity contradiction. Every triangle-free edge ab forces
// m_aa = -m_bb. If for an edge {u,v} with unique common neighbor w the sum
// m_uu + m_vv is forced to zero, then (M^2)_{uv} = 0 forces m_uw * m_wv = 0,
// impossible on edges. The forcing evidence is either one odd-length walk
// u -> v through triangle-free edges ("opposite-sign"), or odd closed walks
// at u and at v separately ("both-zero", each diagonal forced to 0).
struct ParityCertificate {
  int u = -1, v = -1, w = -1;
  std::string kind;  // "opposite-sign" | "both-zero"
  std::vector<std::vector<int>> walks;
};

// Bipartite twin-row contradiction (equal parts): u, v in the same part
// with N(u) = N(v) = S. Every same-part w with exactly two neighbors
// {s1, s2} in S forces, via orthogonality of cross-block rows, a fixed
// ratio between columns s1 and s2 of both row u and row v. If these pair
// constraints connect all of S, rows u and v are proportional, which
// contradicts their orthogonality.
struct TwinCertificate {
  int u = -1, v = -1;
  std::vector<int> s;                      // common neighborhood, sorted
  std::vector<std::array<int, 3>> links;   // (w, s1, s2)
};

using Certificate = std::variant<EdgeBoundCertificate, UniquePathCertificate,
                                 IndependenceCertificate, ParityCertificate,
                                 TwinCertificate>;

std::string certificate_type(const Certificate& c);
nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

// Re-checks a certificate against the graph from scratch.
bool verify_certificate(const Graph& g, const Certificate& c);

// Detection. Each returns the first certificate found (deterministic order)
// or nullopt when the check does not apply or finds nothing.
std::optional<EdgeBoundCertificate> check_edge_bound(const Graph& g);
std::optional<UniquePathCertificate> check_unique_path(const Graph& g);
std::optional<IndependenceCertificate> check_independence(const Graph& g);
std::optional<ParityCertificate> check_parity(const Graph& g);
std::optional<TwinCertificate> check_bipartite_twin(const Graph& g);

enum class StageStatus { pass, fatal, not_applicable };

struct StageResult {
  std::string name;
  StageStatus status = StageStatus::pass;
  std::optional<Certificate> certificate;
};

struct FilterReport {
  bool ruled_out = false;            // some stage is fatal
  std::vector<StageResult> stages;   // stages run, in order
  std::optional<Certificate> certificate;  // the fatal certificate, if any
};

// Runs the stages in order (edge-count, unique-path, independence,
// diagonal-parity, bipartite-twin) and stops at the first fatal one.
FilterReport run_filter_chain(const Graph& g);

nlohmann::json filter_report_to_json(const FilterReport& r);

}  // namespace qtwo
