#include "g3trr/report.hpp"

#include <sstream>

namespace g3trr {

json evalform_json(const EvalForm& ef) {
  json out = json::array();
  for (int degree : ef.degrees()) {
    json entry;
    entry["degree"] = degree;
    auto c = ef.constant.find(degree);
    entry["constant"] = (c == ef.constant.end() ? Rational(0) : c->second).str();
    json unknowns = json::object();
    for (const auto& [key, value] : ef.coeffs) {
      if (key.second != degree) continue;
      unknowns["a_" + std::to_string(key.first)] = value.str();
    }
    entry["unknowns"] = std::move(unknowns);
    out.push_back(std::move(entry));
  }
  return out;
}

std::string evalform_dump(const EvalForm& ef) { return evalform_json(ef).dump(); }

json relation_json(const Relation& rel) {
  json out;
  out["theory"] = theory_name(rel.entry.theory);
  json dirs = json::array();
  for (const Insertion& d : rel.entry.directions)
    dirs.push_back(json::array({d.level, d.cls}));
  out["directions"] = std::move(dirs);
  out["argument"] = json::array({rel.entry.argument.level, rel.entry.argument.cls});
  out["q_degree"] = rel.entry.q_degree;
  out["constant"] = rel.constant.str();
  json coeffs = json::object();
  for (const auto& [i, c] : rel.coeffs)
    coeffs["a_" + std::to_string(i)] = c.str();
  out["coefficients"] = std::move(coeffs);
  return out;
}

std::string relation_text(const Relation& rel) {
  std::ostringstream os;
  os << rel.entry.str() << ":\n";
  os << "0 = " << rel.constant.str();
  for (const auto& [i, c] : rel.coeffs) {
    if (c.sign() < 0)
      os << " - " << (-c).str();
    else
      os << " + " << c.str();
    os << "*a_" << i;
  }
  os << "\n";
  return os.str();
}

json system_json(const LinearSystem& sys,
                 const std::array<Rational, kUnknownCount>& solved) {
  json out;
  out["relations"] = json::array();
  for (const Relation& rel : sys.relations)
    out["relations"].push_back(relation_json(rel));
  json coeffs = json::object();
  for (int i = 2; i <= kUnknownCount; ++i)
    coeffs["a_" + std::to_string(i)] = solved[i - 1].str();
  out["solution"] = std::move(coeffs);
  return out;
}

std::string system_text(const std::array<Rational, kUnknownCount>& solved) {
  std::ostringstream os;
  for (int i = 2; i <= kUnknownCount; ++i)
    os << "a_" << i << " = " << solved[i - 1].str() << "\n";
  return os.str();
}

namespace {

json combo_json(const Theory theory, const ComboResult& res) {
  json out;
  json dirs = json::array();
  for (const Insertion& d : res.directions)
    dirs.push_back(json::array({d.level, d.cls}));
  out["directions"] = std::move(dirs);
  out["argument"] = json::array({res.argument.level, res.argument.cls});
  out["q_degree"] = res.q_degree;
  switch (res.status) {
    case ComboResult::Status::Zero:
      out["status"] = "zero";
      break;
    case ComboResult::Status::NonZero:
      out["status"] = "nonzero";
      out["residual"] = res.residual.str();
      break;
    case ComboResult::Status::Skipped:
      out["status"] = "skipped";
      out["irreducible"] = res.irreducible_key;
      break;
  }
  (void)theory;
  return out;
}

}  // namespace

json verify_json(const VerifyReport& report) {
  json out;
  out["theory"] = theory_name(report.theory);
  out["checked"] = report.checked;
  out["skipped"] = report.skipped;
  out["failures"] = report.failures;
  out["problems"] = json::array();
  for (const ComboResult& res : report.problems)
    out["problems"].push_back(combo_json(report.theory, res));
  return out;
}

std::string verify_text(const std::string& label, const VerifyReport& report) {
  std::ostringstream os;
  os << label << ": checked " << report.checked << ", skipped "
     << report.skipped << ", failures " << report.failures << "\n";
  for (const ComboResult& res : report.problems) {
    os << "  ";
    for (const Insertion& d : res.directions)
      os << insertion_str(report.theory, d) << " ";
    os << "Phi(" << insertion_str(report.theory, res.argument) << ") deg "
       << res.q_degree;
    if (res.status == ComboResult::Status::NonZero)
      os << " RESIDUAL " << res.residual.str();
    else
      os << " skipped (" << res.irreducible_key << ")";
    os << "\n";
  }
  return os.str();
}

json rspin_json(const SpinSpec& spec, int genus, int points) {
  json out;
  out["r"] = spec.r;
  out["genus"] = genus;
  out["points"] = points;
  auto admissible = admissible_insertions(spec, genus, points);
  auto reference = proposition_table(spec.r);
  out["admissible"] = json::array();
  for (const AdmissibleEntry& e : admissible) {
    json rec;
    json ins = json::array();
    for (const Insertion& i : e.id.insertions)
      ins.push_back(json::array({i.level, i.cls}));
    rec["insertions"] = std::move(ins);
    rec["virtual_degree"] = e.virtual_degree;
    for (const PropositionEntry& p : reference) {
      if (p.id == e.id) {
        rec["value"] = p.value ? json(p.value->str()) : json("unknown");
        break;
      }
    }
    out["admissible"].push_back(std::move(rec));
  }
  return out;
}

std::string rspin_text(const SpinSpec& spec, int genus, int points) {
  std::ostringstream os;
  os << "r=" << spec.r << " genus=" << genus << " points=" << points << "\n";
  auto admissible = admissible_insertions(spec, genus, points);
  auto reference = proposition_table(spec.r);
  if (admissible.empty()) {
    os << "  (empty: every such correlator vanishes for dimensional "
          "reasons)\n";
    return os.str();
  }
  for (const AdmissibleEntry& e : admissible) {
    os << "  " << e.id.str() << "  D=" << e.virtual_degree;
    for (const PropositionEntry& p : reference) {
      if (p.id == e.id) {
        os << "  value=" << (p.value ? p.value->str() : "unknown");
        break;
      }
    }
    os << "\n";
  }
  return os.str();
}

json graphs_json(const std::vector<GraphRelationEntry>& relation,
                 const TranslationReport& report) {
  json out;
  out["graphs"] = json::array();
  for (const TranslationRow& row : report.rows) {
    json rec;
    rec["index"] = row.graph_index;
    rec["coefficient"] = relation[row.graph_index].coefficient.str();
    rec["aut_order"] = row.aut_order;
    rec["translated"] = row.translated.str();
    if (row.matched_unknown)
      rec["unknown"] = "a_" + std::to_string(*row.matched_unknown);
    rec["ok"] = row.ok;
    out["graphs"].push_back(std::move(rec));
  }
  out["multiset_match"] = report.multiset_ok;
  if (report.used_pairing) out["pairing_match"] = report.pairing_ok;
  return out;
}

std::string graphs_text(const std::vector<GraphRelationEntry>& relation,
                        const TranslationReport& report) {
  std::ostringstream os;
  for (const TranslationRow& row : report.rows) {
    os << "G" << (row.graph_index < 9 ? "0" : "")
       << row.graph_index + 1 << "  |Aut|=" << row.aut_order
       << "  c=" << relation[row.graph_index].coefficient.str()
       << "  c/|Aut|=" << row.translated.str();
    if (row.matched_unknown) os << "  -> a_" << *row.matched_unknown;
    os << (row.ok ? "  ok" : "  MISMATCH") << "\n";
  }
  os << "multiset match: " << (report.multiset_ok ? "yes" : "NO") << "\n";
  if (report.used_pairing)
    os << "pairing match: " << (report.pairing_ok ? "yes" : "NO") << "\n";
  return os.str();
}

}  // namespace g3trr
