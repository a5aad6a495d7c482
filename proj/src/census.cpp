#include "condgraph/census.hpp"

#include "condgraph/classify.hpp"
#include "condgraph/enumerate.hpp"
#include "condgraph/errors.hpp"
#include "condgraph/families.hpp"
#include "condgraph/graph6.hpp"
#include "condgraph/isomorphism.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace condgraph {

namespace fs = std::filesystem;

namespace {

struct ShardOutput {
  long long count = 0;
  std::vector<CensusRecord> records;
  std::vector<std::string> diagnostics;
};

bool record_less(const CensusRecord& a, const CensusRecord& b) {
  return std::tie(a.n, a.graph6) < std::tie(b.n, b.graph6);
}

void classify_into(const Graph& g, bool all_records, ShardOutput& out) {
  if (!g.is_simple() || !is_connected(g)) {
    out.diagnostics.push_back("skipped disconnected graph " + to_graph6(g));
    return;
  }
  ++out.count;
  const bool positive = conduction_isomorphism(g).has_value();
  if (!positive && !all_records) return;
  CensusRecord r = census_record(g);
  if (r.conduction_isomorphic != positive) {
    throw ConsistencyError("filter chain and full classification disagree on " + r.graph6);
  }
  if (positive && (r.nullity != 0 || !r.ipso_omni_insulator)) {
    throw ConsistencyError("conduction-isomorphic graph that is singular or has loops: " + r.graph6);
  }
  out.records.push_back(std::move(r));
}

std::string hex64(std::uint64_t x) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string mode_name(CensusMode m) {
  switch (m) {
    case CensusMode::kConnected: return "connected";
    case CensusMode::kChemical: return "chemical";
    case CensusMode::kCubic: return "cubic";
  }
  return "?";
}

std::string run_stem(const CensusOptions& opt) {
  if (opt.ingest) return "ingest_" + opt.ingest->stem().string();
  return mode_name(opt.mode) + "_n" + std::to_string(opt.n);
}

std::string run_fingerprint(const CensusOptions& opt) {
  std::string s = "# source=" + (opt.ingest ? opt.ingest->filename().string() : mode_name(opt.mode)) +
                  " n=" + std::to_string(opt.ingest ? 0 : opt.n) + " shards=" + std::to_string(opt.shards) +
                  " all_records=" + (opt.all_records ? "1" : "0") + " dedupe=" + (opt.dedupe ? "1" : "0");
  return s;
}

GenerationOptions generation_options(const CensusOptions& opt, int shard) {
  GenerationOptions g;
  switch (opt.mode) {
    case CensusMode::kConnected:
      g.split_order = std::min(opt.n, 6);
      break;
    case CensusMode::kChemical:
      g.max_degree = 3;
      g.split_order = std::min(opt.n, 8);
      break;
    case CensusMode::kCubic:
      g.regular_degree = 3;
      g.split_order = std::min(opt.n, 8);
      break;
  }
  g.shard_count = opt.shards;
  g.shard_index = shard;
  return g;
}

void check_range(const CensusOptions& opt) {
  if (opt.ingest) return;
  const int limit = opt.mode == CensusMode::kConnected ? 10 : 16;
  if (opt.n < 1 || opt.n > limit) {
    throw DomainError("built-in " + mode_name(opt.mode) + " generation covers 1 <= n <= " +
                      std::to_string(limit) + "; use ingest for larger orders");
  }
}

class ShardStore {
 public:
  explicit ShardStore(const CensusOptions& opt) {
    if (!opt.output_dir) return;
    dir_ = *opt.output_dir;
    fs::create_directories(dir_);
    stem_ = run_stem(opt);
    manifest_ = dir_ / (stem_ + ".manifest");
    const std::string fingerprint = run_fingerprint(opt);
    if (fs::exists(manifest_)) {
      std::ifstream in(manifest_);
      std::string line;
      std::getline(in, line);
      if (line != fingerprint) {
        throw DomainError("manifest " + manifest_.string() + " belongs to a different run");
      }
      std::getline(in, line);  // column header
      while (std::getline(in, line)) {
        int id = 0;
        long long count = 0;
        char sum[32] = {0};
        if (std::sscanf(line.c_str(), "%d,%lld,%31s", &id, &count, sum) != 3) continue;
        done_[id] = {count, sum};
      }
    } else {
      std::ofstream out(manifest_, std::ios::binary);
      out << fingerprint << "\nshard_id,count,checksum\n";
    }
  }

  bool enabled() const { return !dir_.empty(); }

  // A finished shard whose file still matches its checksum.
  std::optional<ShardOutput> load(int shard) const {
    if (!enabled()) return std::nullopt;
    auto it = done_.find(shard);
    if (it == done_.end()) return std::nullopt;
    const fs::path p = shard_path(shard);
    if (!fs::exists(p)) return std::nullopt;
    const std::string body = slurp(p);
    if (hex64(fnv1a(body)) != it->second.second) return std::nullopt;
    ShardOutput out;
    out.count = it->second.first;
    std::istringstream in(body);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      if (!line.empty()) out.records.push_back(from_csv_row(line));
    }
    return out;
  }

  void save(int shard, const ShardOutput& out) {
    if (!enabled()) return;
    std::ostringstream body;
    write_census_csv(body, out.records);
    const std::string text = body.str();
    const fs::path p = shard_path(shard);
    const fs::path tmp = p.string() + ".tmp";
    {
      std::ofstream f(tmp, std::ios::binary);
      f << text;
    }
    fs::rename(tmp, p);
    std::lock_guard lock(mutex_);
    std::ofstream m(manifest_, std::ios::binary | std::ios::app);
    m << shard << ',' << out.count << ',' << hex64(fnv1a(text)) << '\n';
  }

  void finish(const CensusResult& result) const {
    if (!enabled()) return;
    {
      std::ofstream f(dir_ / (stem_ + ".csv"), std::ios::binary);
      write_census_csv(f, result.records);
    }
    std::ofstream g(dir_ / (stem_ + ".g6"), std::ios::binary);
    write_positives_graph6(g, result.records);
  }

 private:
  fs::path shard_path(int shard) const {
    return dir_ / (stem_ + ".shard-" + std::to_string(shard) + ".csv");
  }

  fs::path dir_;
  std::string stem_;
  fs::path manifest_;
  std::map<int, std::pair<long long, std::string>> done_;
  std::mutex mutex_;
};

CensusResult merge(std::vector<ShardOutput>& shards, const CensusOptions& opt) {
  CensusResult result;
  if (!opt.ingest) result.summary[opt.n];
  for (auto& s : shards) {
    if (!opt.ingest) result.summary[opt.n].total += s.count;
    for (auto& r : s.records) {
      if (r.conduction_isomorphic) {
        ++result.summary[r.n].conduction_isomorphic;
        if (!r.bipartite) ++result.summary[r.n].conduction_isomorphic_non_bipartite;
      }
      result.records.push_back(std::move(r));
    }
    for (auto& d : s.diagnostics) result.diagnostics.push_back(std::move(d));
  }
  std::sort(result.records.begin(), result.records.end(), record_less);
  return result;
}

}  // namespace

CensusRecord census_record(const Graph& g) {
  const ClassificationReport report = classify(g);
  CensusRecord r;
  r.graph6 = canonical_form(g).graph6;
  r.n = g.order();
  r.nullity = report.nullity;
  r.conduction_isomorphic = report.conduction_isomorphic;
  r.bipartite = is_bipartite(g);
  r.chemical = is_chemical(g);
  r.nut = report.nut;
  r.ipso_omni_insulator = report.ipso_omni_insulator;
  r.class_code = report.code.three_letter();
  return r;
}

CensusResult run_census(const CensusOptions& options) {
  check_range(options);
  if (options.jobs < 1) throw DomainError("--jobs must be at least 1");
  if (options.shards < 1) throw DomainError("shard count must be at least 1");

  std::vector<std::vector<Graph>> ingested;
  std::vector<std::string> ingest_diagnostics;
  std::map<int, long long> ingest_totals;
  if (options.ingest) {
    IngestResult in = ingest_graph6(*options.ingest, options.dedupe);
    ingest_diagnostics = std::move(in.diagnostics);
    ingested.resize(static_cast<std::size_t>(options.shards));
    for (Graph& g : in.graphs) {
      if (g.is_simple() && is_connected(g)) ++ingest_totals[g.order()];
      const auto h = fnv1a(canonical_form(g).graph6) % static_cast<std::uint64_t>(options.shards);
      ingested[h].push_back(std::move(g));
    }
  }

  ShardStore store(options);
  std::vector<ShardOutput> outputs(static_cast<std::size_t>(options.shards));
  std::atomic<int> next{0};
  std::mutex log_mutex;
  std::exception_ptr failure;
  auto log = [&](const std::string& msg) {
    if (!options.log) return;
    std::lock_guard lock(log_mutex);
    options.log(msg);
  };

  auto worker = [&]() {
    try {
      for (int shard = next++; shard < options.shards; shard = next++) {
        if (auto cached = store.load(shard)) {
          outputs[shard] = std::move(*cached);
          log("shard " + std::to_string(shard) + " reused");
          continue;
        }
        ShardOutput out;
        if (options.ingest) {
          for (const Graph& g : ingested[shard]) classify_into(g, options.all_records, out);
        } else {
          generate_connected(options.n, generation_options(options, shard),
                             [&](const Graph& g) { classify_into(g, options.all_records, out); });
        }
        std::sort(out.records.begin(), out.records.end(), record_less);
        store.save(shard, out);
        log("shard " + std::to_string(shard) + ": " + std::to_string(out.count) + " graphs");
        outputs[shard] = std::move(out);
      }
    } catch (...) {
      std::lock_guard lock(log_mutex);
      if (!failure) failure = std::current_exception();
      next = options.shards;
    }
  };

  const int workers = std::min(options.jobs, options.shards);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  CensusResult result = merge(outputs, options);
  if (options.ingest) {
    for (auto [n, total] : ingest_totals) result.summary[n].total = total;
    result.diagnostics.insert(result.diagnostics.begin(), ingest_diagnostics.begin(),
                              ingest_diagnostics.end());
  }
  store.finish(result);
  return result;
}

CensusResult run_census(const std::vector<Graph>& graphs, bool all_records) {
  ShardOutput out;
  std::map<int, long long> totals;
  for (const Graph& g : graphs) {
    const long long before = out.count;
    classify_into(g, all_records, out);
    if (out.count != before) ++totals[g.order()];
  }
  std::vector<ShardOutput> one(1);
  one[0] = std::move(out);
  CensusOptions opt;
  opt.ingest = fs::path("list");
  CensusResult result = merge(one, opt);
  for (auto [n, total] : totals) result.summary[n].total = total;
  return result;
}

IngestResult ingest_graph6(std::istream& in, bool dedupe) {
  IngestResult out;
  std::unordered_set<std::string> seen;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      Graph g = from_graph6(line);
      if (dedupe && !seen.insert(canonical_form(g).graph6).second) continue;
      out.graphs.push_back(std::move(g));
    } catch (const Graph6Error& e) {
      out.diagnostics.push_back("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

IngestResult ingest_graph6(const fs::path& path, bool dedupe) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path.string());
  return ingest_graph6(in, dedupe);
}

std::string to_csv_row(const CensusRecord& r) {
  // graph6 never contains commas or quotes (bytes 63..126 exclude both).
  std::string s = std::to_string(r.n) + ',' + r.graph6 + ',' + std::to_string(r.nullity);
  for (bool b : {r.conduction_isomorphic, r.bipartite, r.chemical, r.nut, r.ipso_omni_insulator}) {
    s += b ? ",1" : ",0";
  }
  return s + ',' + r.class_code;
}

CensusRecord from_csv_row(const std::string& line) {
  std::vector<std::string> f;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      f.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  f.push_back(cur);
  if (f.size() != 9) throw DomainError("census row needs 9 fields: " + line);
  CensusRecord r;
  r.n = std::stoi(f[0]);
  r.graph6 = f[1];
  r.nullity = std::stoi(f[2]);
  r.conduction_isomorphic = f[3] == "1";
  r.bipartite = f[4] == "1";
  r.chemical = f[5] == "1";
  r.nut = f[6] == "1";
  r.ipso_omni_insulator = f[7] == "1";
  r.class_code = f[8];
  return r;
}

void write_census_csv(std::ostream& out, const std::vector<CensusRecord>& records) {
  out << kCensusCsvHeader << '\n';
  for (const auto& r : records) out << to_csv_row(r) << '\n';
}

void write_positives_graph6(std::ostream& out, const std::vector<CensusRecord>& records) {
  for (const auto& r : records) {
    if (r.conduction_isomorphic) out << r.graph6 << '\n';
  }
}

void write_summary(std::ostream& out, const CensusSummary& summary) {
  out << "n,total,cond_iso,cond_iso_non_bipartite\n";
  for (const auto& [n, c] : summary) {
    out << n << ',' << c.total << ',' << c.conduction_isomorphic << ','
        << c.conduction_isomorphic_non_bipartite << '\n';
  }
}

std::vector<CoverageEntry> CoverageReport::residuals() const {
  std::vector<CoverageEntry> out;
  for (const auto& e : entries) {
    if (e.family.empty()) out.push_back(e);
  }
  return out;
}

CoverageReport verify_family_coverage(const std::vector<CensusRecord>& records, int n_max) {
  std::map<std::string, std::string> known;  // canonical graph6 -> family
  std::vector<Graph> non_bipartite;
  auto add = [&](const Graph& g, const std::string& family) {
    if (g.order() > n_max || !is_chemical(g)) return;
    known.emplace(canonical_form(g).graph6, family);
    if (!is_bipartite(g)) non_bipartite.push_back(g);
  };
  for (int m = 1; 2 * m <= n_max; ++m) add(corona(path_graph(m)), "comb");
  for (int m = 3; 2 * m <= n_max; ++m) add(corona(cycle_graph(m)), "radialene");
  for (int k = 2; 4 * k <= n_max; ++k) add(min_deg2_graph(k), "min_deg2");
  for (int k = 3; 2 * k <= n_max; ++k) add(large_min_deg_graph(k), "large_min_deg");
  for (int k = 3; 4 * k - 4 <= n_max; ++k) add(appendix_family_graph(k), "appendix");
  for (const auto& r : records) {
    if (!r.conduction_isomorphic || r.bipartite || r.n > n_max) continue;
    non_bipartite.push_back(from_graph6(r.graph6));
  }
  std::set<std::string> covered_bases;
  for (std::size_t i = 0; i < non_bipartite.size(); ++i) {
    const Graph base = non_bipartite[i];
    if (2 * base.order() > n_max) continue;
    if (!covered_bases.insert(canonical_form(base).graph6).second) continue;
    add(canonical_double_cover(base), "cdc");
  }

  CoverageReport report;
  for (const auto& r : records) {
    if (!r.conduction_isomorphic || r.n > n_max) continue;
    CoverageEntry e{r.graph6, r.n, ""};
    if (auto it = known.find(canonical_form(from_graph6(r.graph6)).graph6); it != known.end()) {
      e.family = it->second;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace condgraph
