#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "condgraph/census.hpp"
#include "condgraph/enumerate.hpp"
#include "condgraph/errors.hpp"
#include "condgraph/fixtures.hpp"
#include "condgraph/graph6.hpp"
#include "condgraph/isomorphism.hpp"
#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace condgraph;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("condgraph_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

CensusCounts counts(CensusMode mode, int n, int jobs = 1) {
  CensusOptions opt;
  opt.mode = mode;
  opt.n = n;
  opt.jobs = jobs;
  return run_census(opt).summary.at(n);
}

}  // namespace

TEST_CASE("enumeration counts") {
  const std::size_t connected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_connected(n).size() == connected[n - 1]);
  const std::size_t chemical[] = {1, 1, 2, 6, 10, 29, 64, 194, 531, 1733};
  for (int n = 1; n <= 10; ++n) CHECK(enumerate_chemical(n).size() == chemical[n - 1]);
  const std::size_t cubic[] = {1, 2, 5, 19};
  for (int n = 4; n <= 10; n += 2) CHECK(enumerate_cubic(n).size() == cubic[n / 2 - 2]);
  CHECK_THROWS_AS(enumerate_connected(11), DomainError);
  CHECK_THROWS_AS(enumerate_cubic(7), DomainError);
}

TEST_CASE("enumeration emits pairwise non-isomorphic connected graphs") {
  for (int n = 1; n <= 7; ++n) {
    std::set<CanonicalForm> forms;
    for (const Graph& g : enumerate_connected(n)) {
      REQUIRE(is_connected(g));
      REQUIRE(forms.insert(canonical_form(g)).second);
    }
  }
  // Brute-force class count over all labelled graphs on 5 vertices.
  std::vector<Graph> reps;
  for (const Graph& g : testsupport::all_labelled(5)) {
    if (!testsupport::connected_bfs(g)) continue;
    bool seen = false;
    for (const Graph& r : reps) seen = seen || testsupport::isomorphic_brute(g, r);
    if (!seen) reps.push_back(g);
  }
  CHECK(reps.size() == 21);
}

TEST_CASE("sharding partitions the search") {
  std::set<CanonicalForm> all;
  std::size_t total = 0;
  for (int shard = 0; shard < 5; ++shard) {
    GenerationOptions opt;
    opt.split_order = 5;
    opt.shard_count = 5;
    opt.shard_index = shard;
    generate_connected(7, opt, [&](const Graph& g) {
      all.insert(canonical_form(g));
      ++total;
    });
  }
  CHECK(total == 853);
  CHECK(all.size() == 853);
}

TEST_CASE("census rows") {
  CHECK(counts(CensusMode::kConnected, 5) == CensusCounts{21, 0, 0});
  CHECK(counts(CensusMode::kConnected, 6) == CensusCounts{112, 4, 2});
  CHECK(counts(CensusMode::kConnected, 7, 3) == CensusCounts{853, 0, 0});
  CHECK(counts(CensusMode::kChemical, 8) == CensusCounts{194, 5, 0});
  CHECK(counts(CensusMode::kCubic, 8) == CensusCounts{5, 0, 0});
  CensusOptions bad;
  bad.n = 11;
  CHECK_THROWS_AS(run_census(bad), DomainError);
}

TEST_CASE("results do not depend on thread count or shard count") {
  CensusOptions opt;
  opt.mode = CensusMode::kChemical;
  opt.n = 9;
  opt.all_records = true;
  const CensusResult one = run_census(opt);
  opt.jobs = 4;
  const CensusResult four = run_census(opt);
  opt.shards = 7;
  const CensusResult seven = run_census(opt);
  CHECK(one.records.size() == 531);
  CHECK(one.records == four.records);
  CHECK(one.records == seven.records);
  CHECK(one.summary == seven.summary);
}

TEST_CASE("csv rows round trip") {
  for (const Graph& g : enumerate_connected(5)) {
    const CensusRecord r = census_record(g);
    CHECK(from_csv_row(to_csv_row(r)) == r);
  }
  const CensusRecord p4 = census_record(path_graph(4));
  CHECK(p4.conduction_isomorphic);
  CHECK(p4.bipartite);
  CHECK(p4.chemical);
  CHECK(p4.ipso_omni_insulator);
  CHECK(p4.graph6 == canonical_form(path_graph(4)).graph6);
  CHECK_THROWS(from_csv_row("1,2,3"));
}

TEST_CASE("graph6 ingest") {
  std::ostringstream six;
  for (const Graph& g : enumerate_connected(4)) six << to_graph6(g) << '\n';
  std::istringstream in(six.str());
  CHECK(ingest_graph6(in).graphs.size() == 6);

  std::istringstream empty("");
  const IngestResult none = ingest_graph6(empty);
  CHECK(none.graphs.empty());
  CHECK(none.diagnostics.empty());

  std::ostringstream hundred;
  for (int i = 0; i < 100; ++i) hundred << (i == 41 ? "C~~x" : to_graph6(cycle_graph(5 + i % 3))) << '\n';
  std::istringstream bad(hundred.str());
  const IngestResult r = ingest_graph6(bad);
  CHECK(r.graphs.size() == 99);
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].rfind("line 42", 0) == 0);

  std::istringstream again(hundred.str());
  CHECK(ingest_graph6(again, true).graphs.size() == 3);
}

TEST_CASE("census over explicit graphs skips disconnected input") {
  const CensusResult r =
      run_census({path_graph(4), disjoint_union(path_graph(2), path_graph(2)), fixture("radialene3")});
  CHECK(r.summary.at(4) == CensusCounts{1, 1, 0});
  CHECK(r.summary.at(6) == CensusCounts{1, 1, 1});
  CHECK(r.diagnostics.size() == 1);
  CHECK(r.records.size() == 2);
}

TEST_CASE("output directory is resumable and deterministic") {
  const fs::path dir = scratch_dir("resume");
  CensusOptions opt;
  opt.n = 6;
  opt.shards = 8;
  opt.all_records = true;
  opt.output_dir = dir;
  const CensusResult first = run_census(opt);
  const std::string csv = slurp(dir / "connected_n6.csv");
  const std::string g6 = slurp(dir / "connected_n6.g6");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 113);
  CHECK(std::count(g6.begin(), g6.end(), '\n') == 4);

  // Drop the last finished shard from the manifest; the rerun redoes it.
  const fs::path manifest = dir / "connected_n6.manifest";
  std::string m = slurp(manifest);
  CHECK(std::count(m.begin(), m.end(), '\n') == 10);
  m.erase(m.rfind('\n', m.size() - 2) + 1);
  std::ofstream(manifest, std::ios::binary) << m;
  opt.jobs = 2;
  const CensusResult second = run_census(opt);
  CHECK(second.records == first.records);
  CHECK(slurp(dir / "connected_n6.csv") == csv);

  opt.all_records = false;
  CHECK_THROWS_AS(run_census(opt), DomainError);
  fs::remove_all(dir);
}

TEST_CASE("family coverage of small chemical positives") {
  std::vector<CensusRecord> records;
  for (int n = 1; n <= 10; ++n) {
    CensusOptions opt;
    opt.mode = CensusMode::kChemical;
    opt.n = n;
    const CensusResult r = run_census(opt);
    records.insert(records.end(), r.records.begin(), r.records.end());
  }
  const CoverageReport cov = verify_family_coverage(records, 10);
  CHECK(cov.entries.size() == 1 + 1 + 3 + 5 + 3);
  std::set<std::string> residual;
  for (const auto& e : cov.residuals()) residual.insert(e.graph6);
  const std::set<std::string> drawn{canonical_form(fixture("ladder_l3")).graph6,
                                    canonical_form(fixture("e8")).graph6,
                                    canonical_form(fixture("ladder5_partial")).graph6};
  CHECK(residual == drawn);
}
