#include "g3trr/tautograph.hpp"

namespace g3trr {

namespace {

struct Spec {
  std::vector<int> genera;
  std::vector<std::pair<int, int>> edges;
  int leg;
  std::vector<PsiMark> psi;
  long num, den;
};

GraphRelationEntry make(Spec s) {
  GraphRelationEntry e;
  e.graph.vertex_genus = std::move(s.genera);
  e.graph.edges = std::move(s.edges);
  e.graph.leg_vertex = s.leg;
  e.graph.psi = std::move(s.psi);
  e.coefficient = Rational(s.num, s.den);
  e.graph.validate();
  return e;
}

}  // namespace

// The 29 decorated boundary strata of Mbar_{3,1} with their relation
// coefficients, in printed order. An arrowhead on an edge end is a PsiMark
// on that flag.
const std::vector<GraphRelationEntry>& builtin_graph_relation() {
  static const std::vector<GraphRelationEntry> rel = [] {
    std::vector<GraphRelationEntry> r;
    // genus-2 vertex, psi-edge to a genus-0 vertex with a self-loop; leg on
    // the genus-2 side
    r.push_back(make({{2, 0}, {{0, 1}, {1, 1}}, 0, {{0, 0}}, -1, 126}));
    // same underlying graph, leg on the genus-0 side
    r.push_back(make({{2, 0}, {{0, 1}, {1, 1}}, 1, {{0, 0}}, 13, 84}));
    // genus-2 and genus-0 vertices joined by two edges, one psi-marked
    r.push_back(make({{2, 0}, {{0, 1}, {0, 1}}, 1, {{0, 0}}, 5, 42}));
    // chain 2 - 0 - 1 with psi at the genus-2 end and leg in the middle
    r.push_back(make({{2, 0, 1}, {{0, 1}, {1, 2}}, 1, {{0, 0}}, 41, 21}));
    // chain 2 - 0 - 0 with a self-loop on the far end
    r.push_back(make({{2, 0, 0}, {{0, 1}, {1, 2}, {2, 2}}, 1, {}, -13, 84}));
    // chain 1 - 1 - 0 with a self-loop at the genus-0 end, leg varying
    r.push_back(make({{1, 1, 0}, {{0, 1}, {1, 2}, {2, 2}}, 0, {}, 1, 140}));
    r.push_back(make({{1, 1, 0}, {{0, 1}, {1, 2}, {2, 2}}, 1, {}, -23, 2520}));
    r.push_back(make({{1, 1, 0}, {{0, 1}, {1, 2}, {2, 2}}, 2, {}, -47, 2520}));
    // 1 - 1 = 0 (double edge to the legged genus-0 vertex)
    r.push_back(make({{1, 1, 0}, {{0, 1}, {1, 2}, {1, 2}}, 2, {}, -1, 105}));
    // triangle 1, 0, 1 with the leg at the genus-0 corner
    r.push_back(make({{1, 0, 1}, {{0, 1}, {1, 2}, {0, 2}}, 1, {}, 11, 70}));
    // chain 1 - 1 - 0 - 1 with the leg on the genus-0 vertex
    r.push_back(
        make({{1, 1, 0, 1}, {{0, 1}, {1, 2}, {2, 3}}, 2, {}, -4, 35}));
    // chain 1 - 0 - 1 with a self-loop at the far genus-1 vertex
    r.push_back(make({{1, 0, 1}, {{0, 1}, {1, 2}, {2, 2}}, 1, {}, -1, 105}));
    // 1 = 0 - 1 (double edge at the genus-1 end), leg varying
    r.push_back(make({{1, 0, 1}, {{0, 1}, {0, 1}, {1, 2}}, 0, {}, 1, 70}));
    r.push_back(make({{1, 0, 1}, {{0, 1}, {0, 1}, {1, 2}}, 1, {}, 23, 70}));
    r.push_back(make({{1, 0, 1}, {{0, 1}, {0, 1}, {1, 2}}, 2, {}, -3, 70}));
    // chain 1 - 0 - 1 with a self-loop on the middle genus-0 vertex
    r.push_back(make({{1, 0, 1}, {{0, 1}, {1, 1}, {1, 2}}, 0, {}, -5, 504}));
    r.push_back(make({{1, 0, 1}, {{0, 1}, {1, 1}, {1, 2}}, 1, {}, 23, 126}));
    // genus-0 vertex with three genus-1 satellites
    r.push_back(
        make({{1, 0, 1, 1}, {{0, 1}, {1, 2}, {1, 3}}, 0, {}, 4, 105}));
    r.push_back(
        make({{1, 0, 1, 1}, {{0, 1}, {1, 2}, {1, 3}}, 1, {}, 89, 35}));
    // genus-1 and genus-0 vertices joined by three edges
    r.push_back(make({{1, 0}, {{0, 1}, {0, 1}, {0, 1}}, 0, {}, 1, 630}));
    r.push_back(make({{1, 0}, {{0, 1}, {0, 1}, {0, 1}}, 1, {}, 1, 42}));
    // self-loop on the genus-1 vertex, double edge to the legged genus-0
    r.push_back(make({{1, 0}, {{0, 0}, {0, 1}, {0, 1}}, 1, {}, -1, 1260}));
    // self-loop on the genus-0 vertex, double edge to genus-1; leg varying
    r.push_back(make({{0, 1}, {{0, 0}, {0, 1}, {0, 1}}, 1, {}, -1, 560}));
    r.push_back(make({{0, 1}, {{0, 0}, {0, 1}, {0, 1}}, 0, {}, 41, 1680}));
    // self-loops on both ends of a single edge
    r.push_back(make({{1, 0}, {{0, 0}, {0, 1}, {1, 1}}, 0, {}, -1, 1440}));
    r.push_back(make({{1, 0}, {{0, 0}, {0, 1}, {1, 1}}, 1, {}, -1, 672}));
    // genus-0 vertex with two self-loops hanging off a genus-1 vertex
    r.push_back(make({{1, 0}, {{0, 1}, {1, 1}, {1, 1}}, 0, {}, -1, 560}));
    r.push_back(make({{1, 0}, {{0, 1}, {1, 1}, {1, 1}}, 1, {}, 13, 1008}));
    // one genus-0 vertex carrying the leg and three self-loops
    r.push_back(make({{0}, {{0, 0}, {0, 0}, {0, 0}}, 0, {}, 1, 1120}));
    return r;
  }();
  return rel;
}

const std::vector<int>& builtin_graph_pairing() {
  // graph index (printed order) -> ansatz unknown index, fixed by the exact
  // ratios c_i / a_i
  static const std::vector<int> pairing = {
      2,  3,  28, 4,  5,  6,  7,  8,  15, 11, 12, 24, 16, 17, 18,
      9,  10, 13, 14, 29, 30, 27, 21, 22, 25, 26, 19, 20, 23};
  return pairing;
}

}  // namespace g3trr
