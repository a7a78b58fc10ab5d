// Command-line front end: analysis, census, lemma scan, constructions,
// generation and fixture verification over graph6 streams.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mlcubic/census.hpp"
#include "mlcubic/constructions.hpp"
#include "mlcubic/exact.hpp"
#include "mlcubic/fixtures.hpp"
#include "mlcubic/generate.hpp"
#include "mlcubic/graph6.hpp"
#include "mlcubic/hamsearch.hpp"
#include "mlcubic/properties.hpp"

using namespace mlcubic;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<StreamLine> read_source(const std::string& path) {
  if (path == "-") return read_graph6_lines(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read_graph6_lines(in);
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SearchBudget budget_from(std::uint64_t max_nodes) {
  return max_nodes == 0 ? SearchBudget::unlimited() : SearchBudget::nodes(max_nodes);
}

json verdict_json(Verdict v) {
  if (v == Verdict::Indeterminate) return "indeterminate";
  return v == Verdict::Yes;
}

// Base graphs accepted by construct: a few names or a graph6 string.
Graph base_graph(const std::string& name) {
  if (name == "k4") return complete_graph(4);
  if (name == "k33") return complete_bipartite(3, 3);
  if (name == "petersen") return petersen_graph();
  if (name == "cube") {
    std::vector<Edge> es;
    for (int v = 0; v < 8; ++v)
      for (int b = 1; b < 8; b <<= 1)
        if (v < (v ^ b)) es.emplace_back(v, v ^ b);
    return Graph::from_edges(8, es);
  }
  try {
    return parse_graph6(name);
  } catch (const Graph6Error& e) {
    throw UsageError("unknown base graph '" + name + "': " + e.what());
  }
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: " + s);
  }
  if (used != s.size()) throw UsageError("not an integer: " + s);
  return v;
}

VertexSet parse_vertex_list(const std::string& s) {
  VertexSet out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.insert(parse_int(item));
  return out;
}

Graph construct(const std::string& family, const std::vector<std::string>& params) {
  auto need = [&](std::size_t k, const char* usage) {
    if (params.size() != k) throw UsageError(std::string("usage: construct ") + family + " " + usage);
  };
  if (family == "petersen-cycle") {
    need(1, "<k>");
    return cycle_of_edge_deleted_petersen(parse_int(params[0]));
  }
  if (family == "jcell-ring") {
    need(1, "<m>");
    return jcell_ring(parse_int(params[0]));
  }
  if (family == "p-star") {
    need(2, "<base> <v1,v2,...>");
    return substitute_p_star(base_graph(params[0]), parse_vertex_list(params[1]));
  }
  if (family == "expansion") {
    need(2, "<base|theta> <gadget>");
    MultiGraph h = params[0] == "theta" ? theta_multigraph() : MultiGraph::from_graph(base_graph(params[0]));
    return edge_expansion(h, named_graph(params[1]).name);
  }
  if (family == "gadget") {
    need(1, "<name>");
    return named_graph(params[0]).graph;
  }
  throw UsageError("unknown family '" + family + "' (petersen-cycle, jcell-ring, p-star, expansion, gadget)");
}

int run_analyze(const std::string& source, bool want_ml, bool want_mu, std::uint64_t max_nodes) {
  SearchBudget budget = budget_from(max_nodes);
  int status = kOk;
  for (const StreamLine& l : read_source(source)) {
    json rec{{"id", l.line}};
    Graph g(0);
    try {
      g = parse_graph6(l.text);
    } catch (const Graph6Error& e) {
      rec["error"] = e.what();
      emit(rec);
      status = kUsage;
      continue;
    }
    auto t0 = std::chrono::steady_clock::now();
    rec["n"] = g.order();
    rec["connectivity"] = vertex_connectivity_capped(g, 3);
    auto path = has_ham_path(g, budget);
    rec["traceable"] = verdict_json(path.verdict);
    json timings{{"traceable", since(t0)}};
    if (want_ml) {
      auto t = std::chrono::steady_clock::now();
      if (g.order() >= 2 && is_connected(g)) {
        MlOptions opts;
        opts.budget = budget;
        auto r = min_leaf_number(g, opts);
        rec["ml"] = r.verdict == Verdict::Yes ? json(r.ml) : json("indeterminate");
      } else {
        rec["ml"] = nullptr;
      }
      timings["ml"] = since(t);
    }
    if (want_mu) {
      auto t = std::chrono::steady_clock::now();
      auto r = path_cover_number(g, budget);
      rec["mu"] = r.verdict == Verdict::Yes ? json(r.mu) : json("indeterminate");
      timings["mu"] = since(t);
    }
    rec["timings"] = timings;
    emit(rec);
  }
  return status;
}

json census_json(const CensusRecord& r) {
  return {{"n", r.n},         {"conn1", r.conn1},     {"conn2", r.conn2},
          {"conn3", r.conn3}, {"scanned", r.scanned}, {"indeterminate", r.indeterminate},
          {"certified", r.certified()}};
}

int run_census(const std::string& source, int jobs, std::uint64_t max_nodes) {
  auto out = nontraceable_census(read_source(source), jobs, budget_from(max_nodes));
  for (const auto& d : out.diagnostics) emit({{"line", d.line}, {"error", d.message}});
  for (std::size_t line : out.nontraceable_lines) emit({{"nontraceable", line}});
  for (const auto& r : out.records) emit(census_json(r));
  return out.diagnostics.empty() ? kOk : kUsage;
}

int run_census_generated(int nmax, int jobs) {
  for (int n = 4; n <= nmax; n += 2) emit(census_json(census_generated(n, jobs)));
  return kOk;
}

int run_lemma_short(const std::string& source, int nmax, int jobs, std::uint64_t max_nodes) {
  SearchBudget budget = budget_from(max_nodes);
  LemmaScanResult r;
  if (!source.empty()) {
    LemmaScanner scanner(budget);
    int status = kOk;
    for (const StreamLine& l : read_source(source)) {
      try {
        scanner.add(parse_graph6(l.text));
      } catch (const Graph6Error& e) {
        emit({{"line", l.line}, {"error", e.what()}});
        status = kUsage;
      }
    }
    if (status != kOk) return status;
    r = scanner.take();
  } else {
    r = lemma_short_scan_generated(nmax, jobs, budget);
  }
  for (const Graph& g : r.counterexamples) emit({{"counterexample", write_graph6(g)}, {"n", g.order()}});
  for (const Graph& g : r.indeterminate) emit({{"indeterminate", write_graph6(g)}, {"n", g.order()}});
  emit({{"scanned", r.scanned},
        {"passed_hypotheses", r.passed_hypotheses},
        {"counterexamples", r.counterexamples.size()},
        {"indeterminate", r.indeterminate.size()}});
  return r.counterexamples.empty() && r.indeterminate.empty() ? kOk : kMismatch;
}

int run_verify(const std::string& data_dir, std::uint64_t max_nodes) {
  auto report = verify_paper_artifacts(data_dir, budget_from(max_nodes));
  for (const auto& c : report.checks)
    emit({{"subject", c.subject},
          {"property", c.property},
          {"expected", c.expected},
          {"actual", c.actual},
          {"passed", c.passed},
          {"seconds", c.seconds}});
  emit({{"checks", report.checks.size()}, {"failures", report.failures()}});
  return report.ok() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum leaf spanning trees and path covers of cubic graphs"};
  app.require_subcommand(1);

  std::string source = "-";
  bool want_ml = false, want_mu = false;
  std::uint64_t max_nodes = 0;
  auto* analyze = app.add_subcommand("analyze", "connectivity, traceability, ml and mu per graph6 line");
  analyze->add_option("input", source, "graph6 file or - for stdin");
  analyze->add_flag("--ml", want_ml, "compute the minimum leaf number");
  analyze->add_flag("--mu", want_mu, "compute the path covering number");
  analyze->add_option("--max-nodes", max_nodes, "search node cap per query (0 = none)");

  int jobs = 1;
  int census_nmax = 0;
  auto* census = app.add_subcommand("census", "count non-traceable connected cubic graphs per order");
  census->add_option("input", source, "graph6 file or - for stdin");
  census->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  census->add_option("--generate", census_nmax, "use the in-repo generator for all even n up to this order")
      ->check(CLI::Range(4, 20));
  census->add_option("--max-nodes", max_nodes, "search node cap per graph (0 = none)");

  int lemma_nmax = 0;
  std::string lemma_source;
  auto* lemma = app.add_subcommand("lemma-short", "scan for graphs with no hamiltonian path from a degree-2 vertex");
  auto* nmax_opt = lemma->add_option("--nmax", lemma_nmax, "exhaustive scan up to this order")->check(CLI::Range(3, 13));
  auto* file_opt = lemma->add_option("input", lemma_source, "graph6 file or - for stdin");
  nmax_opt->excludes(file_opt);
  lemma->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  lemma->add_option("--max-nodes", max_nodes, "search node cap per query (0 = none)");

  std::string family, out_path;
  std::vector<std::string> params;
  auto* constr = app.add_subcommand("construct", "build a named construction and print it as graph6");
  constr->add_option("family", family, "petersen-cycle | jcell-ring | p-star | expansion | gadget")->required();
  constr->add_option("params", params, "family parameters");
  constr->add_option("-o,--output", out_path, "write to a file instead of stdout");

  int gen_n = 0, min_conn = 1, residue = 0, modulus = 1;
  bool degree23 = false;
  auto* gen = app.add_subcommand("generate", "print every connected cubic graph of order n as graph6");
  gen->add_option("n", gen_n, "order")->required();
  gen->add_option("--min-conn", min_conn, "minimum vertex connectivity")->check(CLI::Range(1, 3));
  gen->add_flag("--degree23", degree23, "all graphs with degrees in {2,3} instead");
  gen->add_option("--res", residue, "shard residue");
  gen->add_option("--mod", modulus, "shard modulus");

  std::string data_dir = default_data_dir();
  auto* verify = app.add_subcommand("verify-paper", "check every embedded fixture and construction");
  verify->add_option("--data", data_dir, "data directory holding fixtures/");
  verify->add_option("--max-nodes", max_nodes, "search node cap per query (0 = none)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return run_analyze(source, want_ml, want_mu, max_nodes);
    if (*census) return census_nmax > 0 ? run_census_generated(census_nmax, jobs) : run_census(source, jobs, max_nodes);
    if (*lemma) {
      if (lemma_source.empty() && lemma_nmax == 0) throw UsageError("lemma-short needs --nmax N or an input file");
      return run_lemma_short(lemma_source, lemma_nmax, jobs, max_nodes);
    }
    if (*constr) {
      std::string g6 = write_graph6(construct(family, params));
      if (out_path.empty()) {
        std::cout << g6 << '\n';
      } else {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot write " + out_path);
        out << g6 << '\n';
      }
      return kOk;
    }
    if (*gen) {
      auto print = [](const Graph& g) { std::cout << write_graph6(g) << '\n'; };
      Shard shard{residue, modulus};
      if (degree23)
        generate_degree23(gen_n, print, shard);
      else
        generate_cubic(gen_n, min_conn, print, shard);
      return kOk;
    }
    if (*verify) return run_verify(data_dir, max_nodes);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
