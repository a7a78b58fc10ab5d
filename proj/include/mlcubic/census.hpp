#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "mlcubic/graph.hpp"
#include "mlcubic/hamsearch.hpp"

namespace mlcubic {

/// One non-empty line of a graph6 stream, 1-based line number.
struct StreamLine {
  std::size_t line = 0;
  std::string text;
};

struct StreamDiagnostic {
  std::size_t line = 0;
  std::string message;
};

/// Reads graph6 lines. Blank lines are skipped and a ">>graph6<<" header is
/// accepted on any line, so headered and bare streams both work.
std::vector<StreamLine> read_graph6_lines(std::istream& in);

// ---------------------------------------------------------------------------
// Short-path lemma

enum class LemmaClause {
  None,
  Disconnected,
  DegreeOutOfRange,
  TooFewDegreeTwo,
  CutVertex,
  NotTraceable,
  Undetermined,  ///< the traceability search ran out of budget
};

const char* to_string(LemmaClause c);

struct LemmaCheck {
  bool holds = false;
  LemmaClause failed = LemmaClause::None;
  std::string detail;
};

/// Connected, degrees in {2, 3}, at least two vertices of degree 2, every
/// component of G - v contains a degree-2 vertex for each cut vertex v, and
/// G has a hamiltonian path.
LemmaCheck lemma_short_hypotheses(const Graph& g, SearchBudget budget = {});

struct LemmaScanResult {
  std::vector<Graph> counterexamples;  ///< hypotheses hold, no path from any degree-2 vertex
  std::vector<Graph> indeterminate;    ///< some search ran out of budget
  std::uint64_t scanned = 0;
  std::uint64_t passed_hypotheses = 0;
};

/// Folds graphs into a scan result one at a time.
class LemmaScanner {
 public:
  explicit LemmaScanner(SearchBudget budget = {}) : budget_(budget) {}
  void add(const Graph& g);
  void merge(LemmaScanResult&& other);
  [[nodiscard]] const LemmaScanResult& result() const { return result_; }
  LemmaScanResult take() { return std::move(result_); }

 private:
  SearchBudget budget_;
  LemmaScanResult result_;
};

LemmaScanResult lemma_short_scan(const std::vector<Graph>& graphs, SearchBudget budget = {});

/// Exhaustive scan of every degree-{2,3} graph with 3 <= n <= nmax (nmax <= 13),
/// split across `jobs` threads.
LemmaScanResult lemma_short_scan_generated(int nmax, int jobs = 1, SearchBudget budget = {});

// ---------------------------------------------------------------------------
// Non-traceable census

struct CensusRecord {
  int n = 0;
  std::uint64_t conn1 = 0;  ///< non-traceable with a cut vertex; outside the 2-connected counts
  std::uint64_t conn2 = 0;
  std::uint64_t conn3 = 0;
  std::uint64_t scanned = 0;
  std::uint64_t indeterminate = 0;

  [[nodiscard]] bool certified() const { return indeterminate == 0; }
  CensusRecord& operator+=(const CensusRecord& o);
  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct CensusOutput {
  std::vector<CensusRecord> records;  ///< ascending n
  std::vector<StreamDiagnostic> diagnostics;
  std::vector<std::size_t> nontraceable_lines;  ///< ascending
};

/// Per-order counts over a stream of connected cubic graphs. Non-cubic or
/// disconnected entries and parse failures become diagnostics. Lines are
/// split into `jobs` contiguous shards processed independently.
CensusOutput nontraceable_census(const std::vector<StreamLine>& lines, int jobs = 1,
                                 SearchBudget budget = {});

/// Same counts for graphs already in memory.
std::vector<CensusRecord> nontraceable_census(const std::vector<Graph>& graphs, SearchBudget budget = {});

/// Census of every connected cubic graph on n vertices from the in-repo
/// generator, sharded across `jobs` threads.
CensusRecord census_generated(int n, int jobs = 1, SearchBudget budget = {});

}  // namespace mlcubic
