// condgraph - command-line front end.
//
// Exit status: 0 success, 1 internal error, 2 bad input, 3 a --verify check
// failed.

#include "condgraph/census.hpp"
#include "condgraph/classify.hpp"
#include "condgraph/conduction.hpp"
#include "condgraph/families.hpp"
#include "condgraph/fixtures.hpp"
#include "condgraph/graph6.hpp"
#include "condgraph/isomorphism.hpp"
#include "condgraph/transmission.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace condgraph;

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;

struct Common {
  std::string in = "-";
  std::string out;
  std::string format = "text";
  int jobs = 1;
  bool verbose = false;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Loops travel as "graph6;loops=0,3".
std::string with_loops(const Graph& g) {
  Graph simple(g.order());
  for (auto [u, v] : g.edges()) simple.add_edge(u, v);
  std::string s = to_graph6(simple);
  if (g.loop_count() == 0) return s;
  s += ";loops=";
  bool first = true;
  for_each_vertex(g.loops(), [&](int v) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  });
  return s;
}

Graph parse_with_loops(const std::string& text) {
  const auto cut = text.find(";loops=");
  Graph g = from_graph6(std::string_view(text).substr(0, cut));
  if (cut == std::string::npos) return g;
  std::stringstream list(text.substr(cut + 7));
  std::string item;
  while (std::getline(list, item, ',')) {
    if (item.empty()) continue;
    const int v = std::stoi(item);
    if (v < 0 || v >= g.order()) throw InputError("loop vertex out of range: " + item);
    g.add_loop(v);
  }
  return g;
}

std::vector<std::string> read_lines(const std::string& in, const std::vector<std::string>& inline_graphs) {
  if (!inline_graphs.empty()) return inline_graphs;
  std::vector<std::string> lines;
  std::ifstream file;
  std::istream* src = &std::cin;
  if (in != "-") {
    file.open(in);
    if (!file) throw InputError("cannot open " + in);
    src = &file;
  }
  std::string line;
  while (std::getline(*src, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InputError("cannot write " + path);
    }
  }
  std::ostream& operator()() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string vertex_list(VertexSet s) {
  if (s == 0) return "none";
  std::string out;
  for_each_vertex(s, [&](int v) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  });
  return out;
}

// Name of a connected graph when it is a familiar one.
std::string shape_name(const Graph& g) {
  const int n = g.order();
  const Graph simple = [&] {
    Graph s(n);
    for (auto [u, v] : g.edges()) s.add_edge(u, v);
    return s;
  }();
  std::string base;
  if (n == 1) {
    base = "K1";
  } else if (are_isomorphic(simple, complete_graph(n))) {
    base = "K" + std::to_string(n);
  } else if (are_isomorphic(simple, path_graph(n))) {
    base = "P" + std::to_string(n);
  } else if (n >= 3 && are_isomorphic(simple, cycle_graph(n))) {
    base = "C" + std::to_string(n);
  } else if (are_isomorphic(simple, star_graph(n - 1))) {
    base = "K1," + std::to_string(n - 1);
  } else {
    base = to_graph6(simple);
  }
  if (g.loop_count() == n) return base + "^loop";
  if (g.loop_count() == 0) return base;
  return base + "^loops{" + vertex_list(g.loops()) + "}";
}

std::string describe_components(const Graph& g) {
  std::vector<std::string> order;
  std::map<std::string, int> count;
  for (VertexSet c : components(g)) {
    const std::string name = shape_name(g.induced(c));
    if (count[name]++ == 0) order.push_back(name);
  }
  std::string out;
  for (const auto& name : order) {
    if (!out.empty()) out += " + ";
    out += std::to_string(count[name]) + " × " + name;
  }
  return out;
}

std::string describe_graph(const Graph& g) {
  if (component_count(g) == 1) return shape_name(g);
  return describe_components(g);
}

int cmd_conduct(const Common& c, const std::vector<std::string>& graphs, bool show_verdicts) {
  Output out(c.out);
  int status = 0;
  if (c.format == "csv") out() << "graph6,conduction_graph,components,loops\n";
  for (const std::string& line : read_lines(c.in, graphs)) {
    try {
      const Graph g = from_graph6(line);
      if (!is_connected(g)) throw InputError("disconnected graph");
      const ConductionGraph gc = conduction_graph(g);
      if (c.format == "graph6") {
        out() << with_loops(gc.graph) << '\n';
      } else if (c.format == "csv") {
        out() << line << ',' << with_loops(gc.graph) << ',' << component_count(gc.graph) << ','
              << gc.graph.loop_count() << '\n';
      } else {
        out() << "graph: " << line << '\n';
        out() << "conduction graph: " << with_loops(gc.graph) << '\n';
        out() << "G^C ≅ " << describe_graph(gc.graph) << "; loops: " << vertex_list(gc.graph.loops()) << '\n';
        out() << "components: " << describe_components(gc.graph) << '\n';
      }
      if (show_verdicts) {
        for (int u = 0; u < g.order(); ++u) {
          for (int v = u; v < g.order(); ++v) {
            const DeviceVerdict& d = gc.verdict(u, v);
            out() << "  " << u << ' ' << v << ' ' << (d.conducts ? "conducts" : "insulates") << ' '
                  << to_string(d.rule) << " (" << d.signature.eta_g << ',' << d.signature.eta_gu
                  << ',' << d.signature.eta_gv;
            if (d.signature.eta_guv) out() << ',' << *d.signature.eta_guv;
            out() << ")\n";
          }
        }
      }
    } catch (const std::exception& e) {
      if (dynamic_cast<const ConsistencyError*>(&e)) throw;
      std::cerr << "error: " << line << ": " << e.what() << '\n';
      status = kExitInput;
    }
  }
  return status;
}

int cmd_classify(const Common& c, const std::vector<std::string>& graphs) {
  Output out(c.out);
  int status = 0;
  if (c.format == "csv") out() << kCensusCsvHeader << '\n';
  for (const std::string& line : read_lines(c.in, graphs)) {
    try {
      const Graph g = from_graph6(line);
      if (!is_connected(g)) throw InputError("disconnected graph");
      const CensusRecord rec = census_record(g);
      if (c.format == "csv") {
        out() << to_csv_row(rec) << '\n';
        continue;
      }
      if (c.format == "graph6") {
        out() << rec.graph6 << '\n';
        continue;
      }
      const ClassificationReport r = classify(g);
      out() << "graph: " << line << '\n'
            << "nullity: " << r.nullity << '\n'
            << "class: " << r.code.two_letter() << ' ' << r.code.three_letter()
            << (r.code.bipartite_reading ? " (inter/intra/ipso)" : " (odd/even/ipso)") << '\n'
            << "ipso omni-insulator: " << (r.ipso_omni_insulator ? "yes" : "no") << '\n'
            << "nut: " << (r.nut ? "yes" : "no") << '\n'
            << "uniform core graph: " << (r.uniform_core ? "yes" : "no") << '\n'
            << "conduction-isomorphic: " << (r.conduction_isomorphic ? "yes" : "no") << '\n'
            << "conduction graph: " << r.conduction_components << " component(s), "
            << r.conduction_loops << " loop(s)\n";
    } catch (const std::exception& e) {
      if (dynamic_cast<const ConsistencyError*>(&e)) throw;
      std::cerr << "error: " << line << ": " << e.what() << '\n';
      status = kExitInput;
    }
  }
  return status;
}

struct CensusArgs {
  std::string mode = "connected";
  int n = 0;
  std::string ingest;
  std::string dir;
  bool all = false;
  bool dedupe = false;
  bool coverage = false;
  int shards = 64;
};

int cmd_census(const Common& c, const CensusArgs& a) {
  CensusOptions opt;
  if (a.mode == "connected") {
    opt.mode = CensusMode::kConnected;
  } else if (a.mode == "chemical") {
    opt.mode = CensusMode::kChemical;
  } else if (a.mode == "cubic") {
    opt.mode = CensusMode::kCubic;
  } else {
    throw InputError("unknown census mode " + a.mode);
  }
  if (a.ingest.empty() && a.n <= 0) throw InputError("census needs --n or --ingest");
  opt.n = a.n;
  opt.jobs = c.jobs;
  opt.shards = a.shards;
  opt.all_records = a.all;
  opt.dedupe = a.dedupe;
  if (!a.ingest.empty()) opt.ingest = a.ingest;
  if (!a.dir.empty()) opt.output_dir = a.dir;
  if (c.verbose) opt.log = [](const std::string& msg) { std::cerr << msg << '\n'; };

  const CensusResult result = run_census(opt);
  for (const auto& d : result.diagnostics) std::cerr << "warning: " << d << '\n';
  Output out(c.out);
  if (c.format == "csv") {
    write_census_csv(out(), result.records);
  } else if (c.format == "graph6") {
    write_positives_graph6(out(), result.records);
  } else {
    out() << "n: total, conduction-isomorphic, non-bipartite\n";
    for (const auto& [n, cnt] : result.summary) {
      out() << n << ": " << cnt.total << ", " << cnt.conduction_isomorphic << ", "
            << cnt.conduction_isomorphic_non_bipartite << '\n';
    }
  }
  if (a.coverage) {
    int n_max = a.n;
    for (const auto& r : result.records) n_max = std::max(n_max, r.n);
    const CoverageReport cov = verify_family_coverage(result.records, n_max);
    for (const auto& e : cov.entries) {
      std::cerr << "coverage: " << e.graph6 << " n=" << e.n << ' '
                << (e.family.empty() ? "residual" : e.family) << '\n';
    }
  }
  return 0;
}

int cmd_family(const Common& c, const std::string& name, int k, const std::string& base, bool verify) {
  FamilySpec spec;
  spec.family = family_from_string(name);
  spec.k = k;
  if (!base.empty()) spec.base = parse_with_loops(base);
  if (spec.family == Family::kCorona && spec.k == 0) spec.k = 1;
  const Graph g = generate(spec);
  Output out(c.out);
  out() << to_graph6(g) << '\n';
  if (!verify) return 0;
  bool ok = is_conduction_isomorphic(g);
  if (ok) {
    const Graph gc = conduction_graph(g).graph;
    ok = is_isomorphism(g, gc, witness_isomorphism(spec));
  }
  out() << (ok ? "verified" : "verification FAILED") << '\n';
  return ok ? 0 : kExitVerify;
}

int cmd_iso(const Common& c, const std::vector<std::string>& graphs) {
  const std::vector<std::string> lines = read_lines(c.in, graphs);
  if (lines.size() != 2) throw InputError("iso needs exactly two graphs");
  const Graph a = parse_with_loops(lines[0]);
  const Graph b = parse_with_loops(lines[1]);
  Output out(c.out);
  const auto h = find_isomorphism(a, b);
  out() << "isomorphic: " << (h ? "yes" : "no") << '\n';
  if (h) {
    out() << "witness:";
    for (int v = 0; v < a.order(); ++v) out() << ' ' << v << "->" << (*h)[v];
    out() << '\n';
  }
  return 0;
}

struct TransmitArgs {
  std::string graph;
  int l = -1;
  int r = -1;
  double beta_sq = 1.0;
  double e_min = -3.0;
  double e_max = 3.0;
  int steps = 601;
};

int cmd_transmit(const Common& c, const TransmitArgs& a) {
  const std::vector<std::string> lines = read_lines(c.in, a.graph.empty() ? std::vector<std::string>{}
                                                                           : std::vector{a.graph});
  if (lines.size() != 1) throw InputError("transmit needs exactly one graph");
  const Graph g = from_graph6(lines[0]);
  if (!is_connected(g)) throw InputError("disconnected graph");
  const DevicePolynomials dp = device_polynomials(g, a.l, a.r);
  const TransmissionCurve curve = sweep(dp, a.beta_sq, a.e_min, a.e_max, a.steps);
  Output out(c.out);
  write_csv(out(), curve);
  return 0;
}

int cmd_fixture(const Common& c, const std::string& name, bool list) {
  Output out(c.out);
  if (list) {
    for (auto n : fixture_names()) out() << n << '\n';
    return 0;
  }
  out() << to_graph6(fixture(name)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conduction graphs of molecular graphs: exact device verdicts, classes, families, census."};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--in", common.in, "graph6 input file, one graph per line, or - for stdin");
  app.add_option("--out", common.out, "write output here instead of stdout");
  app.add_option("--format", common.format,
                 "text, csv or graph6. Graphs with loops print as graph6;loops=v1,v2,...")
      ->check(CLI::IsMember({"text", "csv", "graph6"}));
  app.add_option("--jobs", common.jobs, "worker threads for census")->check(CLI::PositiveNumber);
  app.add_flag("--verbose", common.verbose, "progress on stderr");

  std::vector<std::string> graphs;
  bool show_verdicts = false;
  auto* conduct = app.add_subcommand("conduct", "conduction graph of each input graph");
  conduct->add_option("graphs", graphs, "graph6 strings (instead of --in)");
  conduct->add_flag("--show-verdicts", show_verdicts, "list every device with its rule and signature");

  auto* classify_cmd = app.add_subcommand("classify", "conduction class report of each input graph");
  classify_cmd->add_option("graphs", graphs, "graph6 strings (instead of --in)");

  CensusArgs census_args;
  auto* census = app.add_subcommand("census", "enumerate or ingest graphs and count conduction-isomorphic ones");
  census->add_option("--mode", census_args.mode, "connected, chemical or cubic")
      ->check(CLI::IsMember({"connected", "chemical", "cubic"}));
  census->add_option("--n", census_args.n, "order for built-in generation");
  census->add_option("--ingest", census_args.ingest, "graph6 file to classify instead of generating");
  census->add_option("--dir", census_args.dir, "directory for shard files, manifest, CSV and sidecar (resumable)");
  census->add_option("--shards", census_args.shards, "number of shards")->check(CLI::PositiveNumber);
  census->add_flag("--all", census_args.all, "keep a record for every graph");
  census->add_flag("--dedupe", census_args.dedupe, "drop repeated isomorphism classes from ingested input");
  census->add_flag("--coverage", census_args.coverage, "match positives against the infinite families");

  std::string family_name;
  int family_k = 0;
  std::string family_base;
  bool verify = false;
  auto* family = app.add_subcommand("family", "emit a member of a conduction-isomorphic family");
  family->add_option("--name", family_name, "corona, comb, radialene, min_deg2, large_min_deg, cdc, appendix")
      ->required();
  family->add_option("--k", family_k, "family parameter (corona: iterations)");
  family->add_option("--base", family_base, "graph6 base graph for corona and cdc");
  family->add_flag("--verify", verify, "check conduction-isomorphism and the closed-form witness");

  auto* iso = app.add_subcommand("iso", "isomorphism test with witness (loops as graph6;loops=...)");
  iso->add_option("graphs", graphs, "two graphs (instead of --in)");

  TransmitArgs transmit_args;
  auto* transmit = app.add_subcommand("transmit", "transmission curve T(E) of a device as CSV");
  transmit->add_option("--graph", transmit_args.graph, "graph6 (instead of --in)");
  transmit->add_option("--l", transmit_args.l, "source vertex")->required();
  transmit->add_option("--r", transmit_args.r, "sink vertex")->required();
  transmit->add_option("--beta-sq", transmit_args.beta_sq, "lead coupling beta~^2")->check(CLI::PositiveNumber);
  transmit->add_option("--e-min", transmit_args.e_min, "lowest energy");
  transmit->add_option("--e-max", transmit_args.e_max, "highest energy");
  transmit->add_option("--steps", transmit_args.steps, "number of energies")->check(CLI::Range(2, 10000000));

  std::string fixture_name;
  bool list = false;
  auto* fixture_cmd = app.add_subcommand("fixture", "graph6 of a named graph");
  fixture_cmd->add_option("name", fixture_name, "fixture name");
  fixture_cmd->add_flag("--list", list, "list fixture names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*conduct) return cmd_conduct(common, graphs, show_verdicts);
    if (*classify_cmd) return cmd_classify(common, graphs);
    if (*census) return cmd_census(common, census_args);
    if (*family) return cmd_family(common, family_name, family_k, family_base, verify);
    if (*iso) return cmd_iso(common, graphs);
    if (*transmit) return cmd_transmit(common, transmit_args);
    if (*fixture_cmd) return cmd_fixture(common, fixture_name, list);
  } catch (const ConsistencyError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Graph6Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
