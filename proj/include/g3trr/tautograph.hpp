#ifndef G3TRR_TAUTOGRAPH_HPP
#define G3TRR_TAUTOGRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "g3trr/rational.hpp"

namespace g3trr {

// psi decoration on a flag: the end of edge `item` at `vertex`, or the leg
// when item == kLegItem.
struct PsiMark {
  static constexpr int kLegItem = -1;
  int vertex = 0;
  int item = kLegItem;

  auto operator<=>(const PsiMark&) const = default;
};

// Decorated stable dual graph for a boundary stratum of Mbar_{3,1}:
// genus-labelled vertices, edges (self-loops allowed), one leg carrying the
// marked point, psi arrowheads on flags.
struct DualGraph {
  std::vector<int> vertex_genus;
  std::vector<std::pair<int, int>> edges;
  int leg_vertex = 0;
  std::vector<PsiMark> psi;

  size_t vertex_count() const { return vertex_genus.size(); }
  // edge ends at the vertex plus the leg
  int valence(int v) const;
  int total_genus() const;  // vertex genera plus first Betti number

  // total genus 3, connected, genus-0 vertices at valence >= 3, genus-1 at
  // valence >= 1; throws UnstableGraph otherwise
  void validate() const;
};

// Order of the automorphism group preserving vertex genera, the leg and the
// psi decorations; half-edge level, so each symmetric self-loop flip and
// parallel-edge swap counts. Throws UnstableGraph on an invalid graph.
unsigned automorphism_order(const DualGraph& g);

struct GraphRelationEntry {
  DualGraph graph;
  Rational coefficient;
};

// The 29 decorated strata with their coefficients, in printed order.
const std::vector<GraphRelationEntry>& builtin_graph_relation();

// Printed-order bijection graph index -> ansatz unknown index, recovered by
// exact coefficient ratios; shipped as the default pairing.
const std::vector<int>& builtin_graph_pairing();

std::vector<GraphRelationEntry> load_graph_relation(const std::string& path);
std::vector<int> load_graph_pairing(const std::string& path);

struct TranslationRow {
  size_t graph_index = 0;
  unsigned aut_order = 0;
  Rational translated;          // c_i / |Aut(G_i)|
  std::optional<int> matched_unknown;
  bool ok = false;
};

struct TranslationReport {
  std::vector<TranslationRow> rows;
  bool multiset_ok = false;    // {c_i/|Aut|} equals {a_2..a_30}
  bool pairing_ok = false;     // per-pair equality when a pairing was given
  bool used_pairing = false;
};

// coeffs30 holds a_1..a_30 (a_1 ignored); with a pairing, each graph is
// checked against its paired unknown, otherwise the multisets are compared
// and rows get a greedy value-based attribution.
TranslationReport translate_and_match(
    const std::vector<GraphRelationEntry>& relation,
    std::span<const Rational> coeffs30,
    const std::optional<std::vector<int>>& pairing);

}  // namespace g3trr

#endif
