// census.hpp - classify every graph of a class and count the
// conduction-isomorphic ones, with sharded, resumable, deterministic output.
#pragma once

#include "condgraph/graph.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace condgraph {

struct CensusRecord {
  std::string graph6;  // canonical labelling
  int n = 0;
  int nullity = 0;
  bool conduction_isomorphic = false;
  bool bipartite = false;
  bool chemical = false;
  bool nut = false;
  bool ipso_omni_insulator = false;
  std::string class_code;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct CensusCounts {
  long long total = 0;
  long long conduction_isomorphic = 0;
  long long conduction_isomorphic_non_bipartite = 0;

  CensusCounts& operator+=(const CensusCounts& o) {
    total += o.total;
    conduction_isomorphic += o.conduction_isomorphic;
    conduction_isomorphic_non_bipartite += o.conduction_isomorphic_non_bipartite;
    return *this;
  }
  friend bool operator==(const CensusCounts&, const CensusCounts&) = default;
};

/// Keyed by order.
using CensusSummary = std::map<int, CensusCounts>;

/// Full classification of one connected simple graph.
CensusRecord census_record(const Graph& g);

enum class CensusMode { kConnected, kChemical, kCubic };

struct CensusOptions {
  CensusMode mode = CensusMode::kConnected;
  int n = 1;
  /// Worker threads; results do not depend on it.
  int jobs = 1;
  /// Fixed partition of the work; results do not depend on it either.
  int shards = 64;
  /// Keep a record for every graph, not only the conduction-isomorphic ones.
  bool all_records = false;
  /// When set, graphs come from this graph6 file instead of the generator.
  std::optional<std::filesystem::path> ingest;
  /// Drop repeated isomorphism classes from ingested input.
  bool dedupe = false;
  /// When set: per-shard files, a manifest of finished shards (a rerun skips
  /// them), and the merged CSV and graph6 sidecar.
  std::optional<std::filesystem::path> output_dir;
  /// Progress and diagnostics; called from worker threads under a lock.
  std::function<void(const std::string&)> log;
};

struct CensusResult {
  CensusSummary summary;
  /// Sorted by (n, graph6).
  std::vector<CensusRecord> records;
  std::vector<std::string> diagnostics;
};

CensusResult run_census(const CensusOptions& options);

/// Classify an explicit list of graphs (single-threaded). Disconnected or
/// non-simple graphs are skipped with a diagnostic.
CensusResult run_census(const std::vector<Graph>& graphs, bool all_records = false);

struct IngestResult {
  std::vector<Graph> graphs;
  std::vector<std::string> diagnostics;  // "line N: ..."
};

/// One graph6 string per line; blank lines are ignored, bad lines reported
/// and skipped.
IngestResult ingest_graph6(std::istream& in, bool dedupe = false);
IngestResult ingest_graph6(const std::filesystem::path& path, bool dedupe = false);

inline constexpr const char* kCensusCsvHeader =
    "n,graph6,nullity,cond_iso,bipartite,chemical,nut,ipso_omni_ins,class_code";

std::string to_csv_row(const CensusRecord& r);
CensusRecord from_csv_row(const std::string& line);

void write_census_csv(std::ostream& out, const std::vector<CensusRecord>& records);
/// Conduction-isomorphic records only, one canonical graph6 per line.
void write_positives_graph6(std::ostream& out, const std::vector<CensusRecord>& records);
void write_summary(std::ostream& out, const CensusSummary& summary);

struct CoverageEntry {
  std::string graph6;
  int n = 0;
  /// Family that produced an isomorphic member, empty for a residual.
  std::string family;
};

struct CoverageReport {
  std::vector<CoverageEntry> entries;
  std::vector<CoverageEntry> residuals() const;
};

/// Match conduction-isomorphic records of order <= n_max against chemical
/// members of the generated families: combs, radialenes, min_deg2,
/// large_min_deg, appendix, and double covers of the non-bipartite graphs
/// among those and among the records.
CoverageReport verify_family_coverage(const std::vector<CensusRecord>& records, int n_max);

}  // namespace condgraph
