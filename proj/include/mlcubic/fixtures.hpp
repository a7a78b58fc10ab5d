#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlcubic/graph.hpp"
#include "mlcubic/hamsearch.hpp"

namespace mlcubic {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Fixture {
  std::string id;
  std::string family;
  std::string file;  ///< relative to the fixture directory
  int order = 0;
  std::optional<int> connectivity;
  bool traceable = false;
  int ml = 0;
  Graph graph{0};
};

/// Directory holding fixtures/ and gadgets/, fixed at build time.
std::string default_data_dir();

/// Reads data_dir/fixtures/manifest.json and every graph it lists. Missing or
/// unreadable files and a graph whose order disagrees with the manifest
/// throw FixtureError.
std::vector<Fixture> load_fixtures(const std::string& data_dir = default_data_dir());

struct ArtifactCheck {
  std::string subject;   ///< fixture id or construction name
  std::string property;  ///< "order", "connectivity", "traceable", "ml", ...
  std::string expected;
  std::string actual;
  bool passed = false;
  double seconds = 0;
};

struct ArtifactReport {
  std::vector<ArtifactCheck> checks;
  [[nodiscard]] bool ok() const;
  [[nodiscard]] std::size_t failures() const;
};

/// Order, connectivity, traceability and ml of one fixture; the families of
/// traceable graphs are also checked for the short-path lemma hypotheses and
/// for having no hamiltonian path from a degree-2 vertex.
std::vector<ArtifactCheck> verify_fixture(const Fixture& f, SearchBudget budget = {});

/// Every fixture check, the P*(K4) construction against the order-28
/// connectivity-3 fixture, pairwise non-isomorphism within each family, and
/// the K4 and theta edge expansions. A missing fixture file is reported as
/// a failed check rather than thrown.
ArtifactReport verify_paper_artifacts(const std::string& data_dir = default_data_dir(),
                                      SearchBudget budget = {});

}  // namespace mlcubic
