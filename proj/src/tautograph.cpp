#include "g3trr/tautograph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <span>

#include <nlohmann/json.hpp>

#include "g3trr/errors.hpp"

namespace g3trr {

int DualGraph::valence(int v) const {
  int n = 0;
  for (auto& [a, b] : edges) n += (a == v) + (b == v);
  if (leg_vertex == v) n += 1;
  return n;
}

int DualGraph::total_genus() const {
  int g = 0;
  for (int vg : vertex_genus) g += vg;
  // connected graph: b1 = E - V + 1
  return g + static_cast<int>(edges.size()) -
         static_cast<int>(vertex_count()) + 1;
}

void DualGraph::validate() const {
  const int n = static_cast<int>(vertex_count());
  if (n == 0) throw UnstableGraph("graph has no vertices");
  if (leg_vertex < 0 || leg_vertex >= n)
    throw UnstableGraph("leg attached to missing vertex");
  for (auto& [a, b] : edges)
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw UnstableGraph("edge endpoint out of range");
  for (int g : vertex_genus)
    if (g < 0) throw UnstableGraph("negative vertex genus");
  for (const PsiMark& p : psi) {
    if (p.vertex < 0 || p.vertex >= n)
      throw UnstableGraph("psi mark on missing vertex");
    if (p.item == PsiMark::kLegItem) {
      if (p.vertex != leg_vertex)
        throw UnstableGraph("psi-on-leg must sit at the leg vertex");
    } else {
      if (p.item < 0 || p.item >= static_cast<int>(edges.size()))
        throw UnstableGraph("psi mark on missing edge");
      auto& [a, b] = edges[p.item];
      if (a != p.vertex && b != p.vertex)
        throw UnstableGraph("psi mark on non-incident edge");
    }
  }

  // connectivity
  std::vector<int> comp(n, -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto& [a, b] : edges) {
      int w = -1;
      if (a == v) w = b;
      else if (b == v) w = a;
      if (w >= 0 && comp[w] < 0) {
        comp[w] = 0;
        stack.push_back(w);
      }
    }
  }
  for (int c : comp)
    if (c < 0) throw UnstableGraph("graph is not connected");

  if (total_genus() != 3)
    throw UnstableGraph("total genus is " + std::to_string(total_genus()) +
                        ", expected 3");
  for (int v = 0; v < n; ++v) {
    if (vertex_genus[v] == 0 && valence(v) < 3)
      throw UnstableGraph("genus-0 vertex of valence < 3");
    if (vertex_genus[v] == 1 && valence(v) < 1)
      throw UnstableGraph("genus-1 vertex of valence < 1");
  }
}

namespace {

bool is_loop(const std::pair<int, int>& e) { return e.first == e.second; }

// psi marks as flag sets: (edge, vertex) for edge ends, edge-level for
// self-loops (none of the shipped strata decorate a single loop end).
struct PsiSets {
  std::set<std::pair<int, int>> edge_flags;  // (edge index, vertex)
  std::set<int> loop_edges;
  bool leg_marked = false;
};

PsiSets psi_sets(const DualGraph& g) {
  PsiSets s;
  for (const PsiMark& p : g.psi) {
    if (p.item == PsiMark::kLegItem)
      s.leg_marked = true;
    else if (is_loop(g.edges[p.item]))
      s.loop_edges.insert(p.item);
    else
      s.edge_flags.insert({p.item, p.vertex});
  }
  return s;
}

}  // namespace

unsigned automorphism_order(const DualGraph& g) {
  g.validate();
  const int n = static_cast<int>(g.vertex_count());
  const int ne = static_cast<int>(g.edges.size());
  const PsiSets marks = psi_sets(g);

  std::vector<int> vperm(n);
  std::iota(vperm.begin(), vperm.end(), 0);
  unsigned count = 0;

  do {
    bool vertex_ok = vperm[g.leg_vertex] == g.leg_vertex;
    for (int v = 0; vertex_ok && v < n; ++v)
      vertex_ok = g.vertex_genus[vperm[v]] == g.vertex_genus[v];
    if (!vertex_ok) continue;

    std::vector<int> eperm(ne);
    std::iota(eperm.begin(), eperm.end(), 0);
    do {
      bool ok = true;
      unsigned loop_flips = 1;
      for (int e = 0; ok && e < ne; ++e) {
        auto [a, b] = g.edges[e];
        auto [ia, ib] = g.edges[eperm[e]];
        int pa = vperm[a], pb = vperm[b];
        if (!((ia == pa && ib == pb) || (ia == pb && ib == pa))) {
          ok = false;
          break;
        }
        if (is_loop(g.edges[e])) loop_flips *= 2;
        // psi flags must land on psi flags
        if (is_loop(g.edges[e])) {
          if (marks.loop_edges.contains(e) !=
              marks.loop_edges.contains(eperm[e]))
            ok = false;
        } else {
          for (int v : {a, b}) {
            bool src = marks.edge_flags.contains({e, v});
            bool dst = marks.edge_flags.contains({eperm[e], vperm[v]});
            if (src != dst) ok = false;
          }
        }
      }
      if (ok) count += loop_flips;
    } while (std::next_permutation(eperm.begin(), eperm.end()));
  } while (std::next_permutation(vperm.begin(), vperm.end()));

  return count;
}

TranslationReport translate_and_match(
    const std::vector<GraphRelationEntry>& relation,
    std::span<const Rational> coeffs30,
    const std::optional<std::vector<int>>& pairing) {
  TranslationReport report;
  report.used_pairing = pairing.has_value();
  if (pairing && pairing->size() != relation.size())
    throw std::invalid_argument("pairing size must match relation size");

  std::vector<Rational> translated;
  for (size_t i = 0; i < relation.size(); ++i) {
    TranslationRow row;
    row.graph_index = i;
    row.aut_order = automorphism_order(relation[i].graph);
    row.translated = relation[i].coefficient / Rational(long(row.aut_order));
    translated.push_back(row.translated);
    report.rows.push_back(std::move(row));
  }

  // multiset {c_i/|Aut|} vs {a_2..a_30}
  std::vector<Rational> lhs = translated;
  std::vector<Rational> rhs;
  for (size_t i = 1; i < coeffs30.size(); ++i) rhs.push_back(coeffs30[i]);
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  report.multiset_ok = lhs == rhs && relation.size() == rhs.size();

  if (pairing) {
    report.pairing_ok = true;
    for (size_t i = 0; i < relation.size(); ++i) {
      int unknown = (*pairing)[i];
      TranslationRow& row = report.rows[i];
      row.matched_unknown = unknown;
      row.ok = unknown >= 2 && unknown <= static_cast<int>(coeffs30.size()) &&
               row.translated == coeffs30[unknown - 1];
      if (!row.ok) report.pairing_ok = false;
    }
  } else {
    // greedy value attribution for the report; equal values (a_15 and a_24
    // share one) are assigned in index order
    std::vector<bool> taken(coeffs30.size() + 1, false);
    for (TranslationRow& row : report.rows) {
      for (size_t u = 2; u <= coeffs30.size(); ++u) {
        if (taken[u] || !(coeffs30[u - 1] == row.translated)) continue;
        row.matched_unknown = static_cast<int>(u);
        row.ok = true;
        taken[u] = true;
        break;
      }
      if (!row.matched_unknown) row.ok = false;
    }
  }
  return report;
}

std::vector<GraphRelationEntry> load_graph_relation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("graph file " + path + ": " + e.what());
  }
  if (!doc.is_array()) throw ParseError("graph file: expected an array");
  std::vector<GraphRelationEntry> out;
  for (const auto& rec : doc) {
    try {
      GraphRelationEntry entry;
      for (const auto& g : rec.at("vertices"))
        entry.graph.vertex_genus.push_back(g.get<int>());
      for (const auto& e : rec.at("edges"))
        entry.graph.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      entry.graph.leg_vertex = rec.at("leg").get<int>();
      if (rec.contains("psi")) {
        for (const auto& p : rec.at("psi")) {
          PsiMark mark;
          mark.vertex = p.at("vertex").get<int>();
          if (p.contains("edge_index") && !p.at("edge_index").is_string())
            mark.item = p.at("edge_index").get<int>();
          else
            mark.item = PsiMark::kLegItem;
          entry.graph.psi.push_back(mark);
        }
      }
      entry.coefficient =
          Rational::parse(rec.at("coefficient").get<std::string>());
      entry.graph.validate();
      out.push_back(std::move(entry));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("graph record: ") + e.what());
    }
  }
  return out;
}

std::vector<int> load_graph_pairing(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open pairing file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("pairing file " + path + ": " + e.what());
  }
  if (!doc.is_array()) throw ParseError("pairing file: expected an array");
  std::vector<int> out;
  for (const auto& v : doc) out.push_back(v.get<int>());
  return out;
}

}  // namespace g3trr
