#include "mlcubic/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "mlcubic/census.hpp"
#include "mlcubic/constructions.hpp"
#include "mlcubic/exact.hpp"
#include "mlcubic/isomorphism.hpp"
#include "mlcubic/properties.hpp"

namespace mlcubic {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ArtifactCheck check(std::string subject, std::string property, std::string expected, std::string actual,
                    const Timer& t) {
  bool ok = expected == actual;
  return {std::move(subject), std::move(property), std::move(expected), std::move(actual), ok, t.seconds()};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string verdict_text(Verdict v) {
  return v == Verdict::Yes ? "true" : v == Verdict::No ? "false" : "indeterminate";
}

std::string ml_text(const MlResult& r) {
  return r.verdict == Verdict::Yes ? std::to_string(r.ml) : "indeterminate";
}

}  // namespace

std::string default_data_dir() { return MLCUBIC_DATA_DIR; }

std::vector<Fixture> load_fixtures(const std::string& data_dir) {
  const std::string dir = data_dir + "/fixtures/";
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(slurp(dir + "manifest.json"));
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError("manifest.json: " + std::string(e.what()));
  }
  std::vector<Fixture> out;
  for (const auto& entry : manifest.at("fixtures")) {
    Fixture f;
    f.id = entry.at("id").get<std::string>();
    f.family = entry.at("family").get<std::string>();
    f.file = entry.at("file").get<std::string>();
    f.order = entry.at("order").get<int>();
    if (entry.contains("connectivity")) f.connectivity = entry.at("connectivity").get<int>();
    f.traceable = entry.at("traceable").get<bool>();
    f.ml = entry.at("ml").get<int>();
    try {
      f.graph = parse_edge_list_text(slurp(dir + f.file));
    } catch (const FixtureError&) {
      throw;
    } catch (const std::exception& e) {
      throw FixtureError(f.file + ": " + e.what());
    }
    if (f.graph.order() != f.order)
      throw FixtureError(f.file + ": order " + std::to_string(f.graph.order()) + ", manifest says " +
                         std::to_string(f.order));
    out.push_back(std::move(f));
  }
  return out;
}

bool ArtifactReport::ok() const { return failures() == 0; }

std::size_t ArtifactReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

std::vector<ArtifactCheck> verify_fixture(const Fixture& f, SearchBudget budget) {
  std::vector<ArtifactCheck> out;
  const Graph& g = f.graph;
  {
    Timer t;
    out.push_back(check(f.id, "order", std::to_string(f.order), std::to_string(g.order()), t));
  }
  if (f.connectivity) {
    Timer t;
    int k = vertex_connectivity_capped(g, 3);
    out.push_back(check(f.id, "connectivity", std::to_string(*f.connectivity), std::to_string(k), t));
  }
  {
    Timer t;
    out.push_back(check(f.id, "traceable", yes_no(f.traceable), verdict_text(has_ham_path(g, budget).verdict), t));
  }
  {
    Timer t;
    MlOptions opts;
    opts.budget = budget;
    out.push_back(check(f.id, "ml", std::to_string(f.ml), ml_text(min_leaf_number(g, opts)), t));
  }
  bool has_degree_two = false;
  for (int v = 0; v < g.order(); ++v) has_degree_two |= g.degree(v) == 2;
  if (f.traceable && has_degree_two) {
    Timer t;
    LemmaCheck hyp = lemma_short_hypotheses(g, budget);
    out.push_back(check(f.id, "lemma-hypotheses", "true", hyp.holds ? "true" : to_string(hyp.failed), t));
    Timer t2;
    std::string from_degree_two = "false";
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 2) continue;
      Verdict r = has_ham_path_from(g, v, budget).verdict;
      if (r == Verdict::Yes) {
        from_degree_two = "true from " + std::to_string(v);
        break;
      }
      if (r == Verdict::Indeterminate) from_degree_two = "indeterminate";
    }
    out.push_back(check(f.id, "path-from-degree-2", "false", from_degree_two, t2));
  }
  return out;
}

ArtifactReport verify_paper_artifacts(const std::string& data_dir, SearchBudget budget) {
  ArtifactReport report;
  auto& checks = report.checks;
  std::vector<Fixture> fixtures;
  try {
    fixtures = load_fixtures(data_dir);
  } catch (const FixtureError& e) {
    checks.push_back({"fixtures", "load", "ok", e.what(), false, 0});
    return report;
  }
  for (const Fixture& f : fixtures) {
    auto c = verify_fixture(f, budget);
    checks.insert(checks.end(), c.begin(), c.end());
  }

  std::map<std::string, std::vector<const Fixture*>> families;
  for (const Fixture& f : fixtures) families[f.family].push_back(&f);
  for (const auto& [family, members] : families) {
    Timer t;
    std::string clash = "none";
    for (std::size_t i = 0; i < members.size() && clash == "none"; ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (are_isomorphic(members[i]->graph, members[j]->graph)) {
          clash = members[i]->id + " ~ " + members[j]->id;
          break;
        }
    checks.push_back(check(family, "pairwise-isomorphic", "none", clash, t));
  }

  const Fixture* unique28 = nullptr;
  for (const Fixture& f : fixtures)
    if (f.order == 28 && f.connectivity == 3) unique28 = &f;
  {
    Timer t;
    Graph built = substitute_p_star(complete_graph(4), VertexSet{0, 1, 2});
    std::string actual = unique28 == nullptr ? "fixture missing"
                                             : yes_no(are_isomorphic(built, unique28->graph));
    checks.push_back(check("p-star-k4", "isomorphic-to-order-28-conn-3", "true", actual, t));
    if (unique28 != nullptr) {
      Timer t2;
      std::string clash = "none";
      for (const Fixture& f : fixtures)
        if (&f != unique28 && f.order == 28 && are_isomorphic(f.graph, unique28->graph)) clash = f.id;
      checks.push_back(check(unique28->id, "isomorphic-to-other-order-28", "none", clash, t2));
    }
  }

  MlOptions opts;
  opts.budget = budget;
  {
    Timer t;
    Graph g = edge_expansion(MultiGraph::from_graph(complete_graph(4)), NamedGadget::K4MinusEdge);
    checks.push_back(check("k4-expansion", "order", "28", std::to_string(g.order()), t));
    checks.push_back(check("k4-expansion", "ml", "3", ml_text(min_leaf_number(g, opts)), t));
  }
  {
    Timer t;
    Graph g = edge_expansion(theta_multigraph(), NamedGadget::K4MinusEdge);
    checks.push_back(check("theta-expansion", "order", "14", std::to_string(g.order()), t));
    checks.push_back(check("theta-expansion", "ml", "2", ml_text(min_leaf_number(g, opts)), t));
  }
  return report;
}

}  // namespace mlcubic
