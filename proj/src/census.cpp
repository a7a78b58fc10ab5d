#include "mlcubic/census.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>

#include "mlcubic/generate.hpp"
#include "mlcubic/graph6.hpp"
#include "mlcubic/properties.hpp"

namespace mlcubic {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int clamp_jobs(int jobs) { return std::max(1, jobs); }

// Runs fn(0..jobs-1) on separate threads and rethrows the first failure.
template <class Fn>
void run_parallel(int jobs, Fn fn) {
  std::vector<std::exception_ptr> errors(jobs);
  auto guarded = [&](int j) {
    try {
      fn(j);
    } catch (...) {
      errors[j] = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> workers;
    for (int j = 1; j < jobs; ++j) workers.emplace_back(guarded, j);
    guarded(0);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<StreamLine> read_graph6_lines(std::istream& in) {
  std::vector<StreamLine> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    while (!text.empty() && (text.back() == '\r' || text.back() == '\n')) text.pop_back();
    std::string_view body = text;
    if (body.starts_with(kHeader)) body.remove_prefix(kHeader.size());
    if (body.empty()) continue;
    out.push_back({line, std::string(body)});
  }
  return out;
}

// ---------------------------------------------------------------------------

const char* to_string(LemmaClause c) {
  switch (c) {
    case LemmaClause::None: return "none";
    case LemmaClause::Disconnected: return "disconnected";
    case LemmaClause::DegreeOutOfRange: return "degree-out-of-range";
    case LemmaClause::TooFewDegreeTwo: return "too-few-degree-2";
    case LemmaClause::CutVertex: return "cut-vertex";
    case LemmaClause::NotTraceable: return "not-traceable";
    case LemmaClause::Undetermined: return "undetermined";
  }
  return "?";
}

LemmaCheck lemma_short_hypotheses(const Graph& g, SearchBudget budget) {
  LemmaCheck out;
  auto fail = [&](LemmaClause c, std::string detail) {
    out.failed = c;
    out.detail = std::move(detail);
    return out;
  };
  if (!is_connected(g)) return fail(LemmaClause::Disconnected, "graph is not connected");
  VertexSet twos;
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    if (d < 2 || d > 3) return fail(LemmaClause::DegreeOutOfRange, "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
    if (d == 2) twos.insert(v);
  }
  if (twos.size() < 2) return fail(LemmaClause::TooFewDegreeTwo, std::to_string(twos.size()) + " vertices of degree 2");
  for (int v : articulation_points(g)) {
    VertexSet rest = g.vertices();
    rest.erase(v);
    for (const VertexSet& comp : components_within(g, rest))
      if ((comp & twos).empty())
        return fail(LemmaClause::CutVertex, "a component of G - " + std::to_string(v) + " has no degree-2 vertex");
  }
  auto path = has_ham_path(g, budget);
  if (path.verdict == Verdict::Indeterminate) return fail(LemmaClause::Undetermined, "traceability search budget exhausted");
  if (!path.yes()) return fail(LemmaClause::NotTraceable, "no hamiltonian path");
  out.holds = true;
  return out;
}

void LemmaScanner::add(const Graph& g) {
  ++result_.scanned;
  LemmaCheck check = lemma_short_hypotheses(g, budget_);
  if (check.failed == LemmaClause::Undetermined) {
    result_.indeterminate.push_back(g);
    return;
  }
  if (!check.holds) return;
  ++result_.passed_hypotheses;
  bool open = false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) continue;
    auto r = has_ham_path_from(g, v, budget_);
    if (r.yes()) return;
    if (r.verdict == Verdict::Indeterminate) open = true;
  }
  (open ? result_.indeterminate : result_.counterexamples).push_back(g);
}

void LemmaScanner::merge(LemmaScanResult&& other) {
  result_.scanned += other.scanned;
  result_.passed_hypotheses += other.passed_hypotheses;
  for (auto& g : other.counterexamples) result_.counterexamples.push_back(std::move(g));
  for (auto& g : other.indeterminate) result_.indeterminate.push_back(std::move(g));
}

LemmaScanResult lemma_short_scan(const std::vector<Graph>& graphs, SearchBudget budget) {
  LemmaScanner scanner(budget);
  for (const Graph& g : graphs) scanner.add(g);
  return scanner.take();
}

LemmaScanResult lemma_short_scan_generated(int nmax, int jobs, SearchBudget budget) {
  if (nmax > 13) throw std::invalid_argument("in-repo degree-{2,3} generation stops at 13 vertices");
  jobs = clamp_jobs(jobs);
  std::vector<LemmaScanner> parts(jobs, LemmaScanner(budget));
  run_parallel(jobs, [&](int j) {
    for (int n = 3; n <= nmax; ++n)
      generate_degree23(n, [&](const Graph& g) { parts[j].add(g); }, Shard{j, jobs});
  });
  LemmaScanner total(budget);
  for (auto& p : parts) total.merge(p.take());
  return total.take();
}

// ---------------------------------------------------------------------------

CensusRecord& CensusRecord::operator+=(const CensusRecord& o) {
  conn1 += o.conn1;
  conn2 += o.conn2;
  conn3 += o.conn3;
  scanned += o.scanned;
  indeterminate += o.indeterminate;
  return *this;
}

namespace {

// Caller guarantees g is connected and cubic. Returns true when g is a
// confirmed non-traceable graph.
bool tally(const Graph& g, CensusRecord& rec, SearchBudget budget) {
  rec.n = g.order();
  ++rec.scanned;
  auto r = has_ham_path(g, budget);
  if (r.verdict == Verdict::Indeterminate) {
    ++rec.indeterminate;
    return false;
  }
  if (r.yes()) return false;
  int k = vertex_connectivity_capped(g, 3);
  (k >= 3 ? rec.conn3 : k == 2 ? rec.conn2 : rec.conn1) += 1;
  return true;
}

std::string cubic_violation(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3) return "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + ", not cubic";
  if (!is_connected(g)) return "graph is not connected";
  return {};
}

std::vector<CensusRecord> flatten(const std::map<int, CensusRecord>& m) {
  std::vector<CensusRecord> out;
  for (const auto& [n, rec] : m) out.push_back(rec);
  return out;
}

}  // namespace

CensusOutput nontraceable_census(const std::vector<StreamLine>& lines, int jobs, SearchBudget budget) {
  jobs = clamp_jobs(jobs);
  struct Part {
    std::map<int, CensusRecord> records;
    std::vector<StreamDiagnostic> diagnostics;
    std::vector<std::size_t> nontraceable;
  };
  std::vector<Part> parts(jobs);
  const std::size_t total = lines.size();
  run_parallel(jobs, [&](int j) {
    std::size_t lo = total * j / jobs, hi = total * (j + 1) / jobs;
    Part& part = parts[j];
    for (std::size_t i = lo; i < hi; ++i) {
      const StreamLine& l = lines[i];
      Graph g(0);
      try {
        g = parse_graph6(l.text);
      } catch (const std::exception& e) {
        part.diagnostics.push_back({l.line, e.what()});
        continue;
      }
      if (auto why = cubic_violation(g); !why.empty()) {
        part.diagnostics.push_back({l.line, why});
        continue;
      }
      CensusRecord& rec = part.records[g.order()];
      if (tally(g, rec, budget)) part.nontraceable.push_back(l.line);
    }
  });
  std::map<int, CensusRecord> merged;
  CensusOutput out;
  for (Part& p : parts) {
    for (const auto& [n, rec] : p.records) {
      merged[n].n = n;
      merged[n] += rec;
    }
    out.diagnostics.insert(out.diagnostics.end(), p.diagnostics.begin(), p.diagnostics.end());
    out.nontraceable_lines.insert(out.nontraceable_lines.end(), p.nontraceable.begin(), p.nontraceable.end());
  }
  out.records = flatten(merged);
  return out;
}

std::vector<CensusRecord> nontraceable_census(const std::vector<Graph>& graphs, SearchBudget budget) {
  std::map<int, CensusRecord> records;
  for (const Graph& g : graphs) {
    if (auto why = cubic_violation(g); !why.empty()) throw std::invalid_argument(why);
    tally(g, records[g.order()], budget);
  }
  return flatten(records);
}

CensusRecord census_generated(int n, int jobs, SearchBudget budget) {
  jobs = clamp_jobs(jobs);
  std::vector<CensusRecord> parts(jobs);
  run_parallel(jobs, [&](int j) {
    generate_cubic(n, 1, [&](const Graph& g) { tally(g, parts[j], budget); }, Shard{j, jobs});
  });
  CensusRecord total;
  total.n = n;
  for (const auto& p : parts) total += p;
  return total;
}

}  // namespace mlcubic
