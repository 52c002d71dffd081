#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "g3trr/ansatz.hpp"
#include "g3trr/tautograph.hpp"

using namespace g3trr;

namespace {

std::array<Rational, kUnknownCount> solved_coefficients() {
  static auto coeffs =
      solve_default_coefficients(Oracles::with_builtin_seeds());
  return coeffs;
}

DualGraph relabeled(const DualGraph& g, const std::vector<int>& perm) {
  DualGraph out;
  out.vertex_genus.resize(g.vertex_count());
  for (size_t v = 0; v < g.vertex_count(); ++v)
    out.vertex_genus[perm[v]] = g.vertex_genus[v];
  for (auto& [a, b] : g.edges) out.edges.emplace_back(perm[a], perm[b]);
  out.leg_vertex = perm[g.leg_vertex];
  for (const PsiMark& p : g.psi)
    out.psi.push_back({perm[p.vertex], p.item});
  return out;
}

}  // namespace

TEST_CASE("pinned automorphism orders") {
  DualGraph lone;
  lone.vertex_genus = {3};
  lone.leg_vertex = 0;
  CHECK(automorphism_order(lone) == 1);

  const auto& rel = builtin_graph_relation();
  CHECK(automorphism_order(rel[0].graph) == 2);    // genus-2 + looped vertex
  CHECK(automorphism_order(rel[2].graph) == 1);    // psi breaks the edge swap
  CHECK(automorphism_order(rel[16].graph) == 4);   // satellite swap times loop
  CHECK(automorphism_order(rel[19].graph) == 6);   // triple edge
  CHECK(automorphism_order(rel[28].graph) == 48);  // three loops on one vertex
}

TEST_CASE("every shipped stratum is a stable genus-3 graph") {
  for (const GraphRelationEntry& e : builtin_graph_relation()) {
    CHECK_NOTHROW(e.graph.validate());
    CHECK(e.graph.total_genus() == 3);
  }
  CHECK(builtin_graph_relation().size() == 29);
}

TEST_CASE("automorphism order is invariant under relabeling") {
  std::mt19937 rng(31);
  for (const GraphRelationEntry& e : builtin_graph_relation()) {
    unsigned expected = automorphism_order(e.graph);
    std::vector<int> perm(e.graph.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(automorphism_order(relabeled(e.graph, perm)) == expected);
    }
  }
}

TEST_CASE("unstable graphs are rejected") {
  DualGraph low_valence;
  low_valence.vertex_genus = {3, 0};
  low_valence.edges = {{0, 1}};
  low_valence.leg_vertex = 1;  // genus-0 vertex with valence 2
  CHECK_THROWS_AS(low_valence.validate(), UnstableGraph);
  CHECK_THROWS_AS(automorphism_order(low_valence), UnstableGraph);

  DualGraph wrong_genus;
  wrong_genus.vertex_genus = {2};
  wrong_genus.leg_vertex = 0;
  CHECK_THROWS_AS(wrong_genus.validate(), UnstableGraph);

  DualGraph disconnected;
  disconnected.vertex_genus = {2, 1};
  disconnected.leg_vertex = 0;
  CHECK_THROWS_AS(disconnected.validate(), UnstableGraph);

  DualGraph bare_genus1;
  bare_genus1.vertex_genus = {2, 1};
  bare_genus1.edges = {{0, 0}};
  bare_genus1.leg_vertex = 0;
  CHECK_THROWS_AS(bare_genus1.validate(), UnstableGraph);
}

TEST_CASE("translation matches the solved coefficients as a multiset") {
  auto coeffs = solved_coefficients();
  TranslationReport report =
      translate_and_match(builtin_graph_relation(), coeffs, std::nullopt);
  CHECK(report.multiset_ok);
  CHECK_FALSE(report.used_pairing);
  for (const TranslationRow& row : report.rows) {
    CHECK(row.ok);
    CHECK(row.matched_unknown.has_value());
  }
}

TEST_CASE("translation matches pair by pair under the shipped bijection") {
  auto coeffs = solved_coefficients();
  TranslationReport report = translate_and_match(
      builtin_graph_relation(), coeffs, builtin_graph_pairing());
  CHECK(report.multiset_ok);
  CHECK(report.pairing_ok);

  // a wrong pairing is reported, not silently accepted
  std::vector<int> wrong = builtin_graph_pairing();
  std::swap(wrong[0], wrong[3]);
  TranslationReport bad =
      translate_and_match(builtin_graph_relation(), coeffs, wrong);
  CHECK(bad.multiset_ok);
  CHECK_FALSE(bad.pairing_ok);
}

TEST_CASE("the shipped graph file mirrors the builtin relation") {
  auto from_file = load_graph_relation(std::string(G3TRR_SOURCE_DIR) +
                                       "/data/graphs_m31.json");
  const auto& builtin = builtin_graph_relation();
  REQUIRE(from_file.size() == builtin.size());
  for (size_t i = 0; i < builtin.size(); ++i) {
    CHECK(from_file[i].coefficient == builtin[i].coefficient);
    CHECK(from_file[i].graph.vertex_genus == builtin[i].graph.vertex_genus);
    CHECK(from_file[i].graph.edges == builtin[i].graph.edges);
    CHECK(from_file[i].graph.leg_vertex == builtin[i].graph.leg_vertex);
    CHECK(from_file[i].graph.psi == builtin[i].graph.psi);
  }
  auto pairing = load_graph_pairing(std::string(G3TRR_SOURCE_DIR) +
                                    "/data/pairing_default.json");
  CHECK(pairing == builtin_graph_pairing());
}
