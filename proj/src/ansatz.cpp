#include "g3trr/ansatz.hpp"

#include <fstream>
#include <functional>

#include <nlohmann/json.hpp>

#include "g3trr/errors.hpp"

namespace g3trr {

Oracles Oracles::with_builtin_seeds() {
  return Oracles{Oracle(TheorySpec::point(), builtin_point_seeds()),
                 Oracle(TheorySpec::cp1(), builtin_cp1_seeds())};
}

Oracles Oracles::from_tables(SeedTable point_seeds, SeedTable cp1_seeds) {
  return Oracles{Oracle(TheorySpec::point(), std::move(point_seeds)),
                 Oracle(TheorySpec::cp1(), std::move(cp1_seeds))};
}

namespace {

// index variable ids local to one term
constexpr int A = 0, B = 1, M = 2;

FieldPtr lo(int v) { return ibasis(v, false); }
FieldPtr hi(int v) { return ibasis(v, true); }

ScalarPtr c0(std::vector<FieldPtr> fs) { return corr(0, std::move(fs)); }
ScalarPtr c1(std::vector<FieldPtr> fs) { return corr(1, std::move(fs)); }
ScalarPtr c2(std::vector<FieldPtr> fs) { return corr(2, std::move(fs)); }

ScalarPtr wrap(std::initializer_list<int> vars, ScalarPtr s) {
  std::vector<int> vs(vars);
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) s = contract(*it, s);
  return s;
}

using TermBuilder = std::function<ScalarPtr(const FieldPtr&)>;

// The 30 candidate terms, transcribed one-to-one from the ansatz. Greek
// contraction indices become A, B, M; gamma_x is lo(x), gamma^x is hi(x).
const std::array<TermBuilder, 30>& term_builders() {
  static const std::array<TermBuilder, 30> builders = {
      // a1: <<T(W) {g_a o g^a}>>_2
      [](const FieldPtr& w) {
        return wrap({A}, c2({op_t(w), qprod(lo(A), hi(A))}));
      },
      // a2: <<W T(g_a o g^a)>>_2
      [](const FieldPtr& w) {
        return wrap({A}, c2({w, op_t(qprod(lo(A), hi(A)))}));
      },
      // a3: <<T(g^a)>>_2 <<g_a W g^b g_b>>_0
      [](const FieldPtr& w) {
        return wrap({A, B}, product({c2({op_t(hi(A))}),
                                     c0({lo(A), w, hi(B), lo(B)})}));
      },
      // a4: <<T(g^a)>>_2 <<{g_a o W}>>_1
      [](const FieldPtr& w) {
        return wrap({A},
                    product({c2({op_t(hi(A))}), c1({qprod(lo(A), w)})}));
      },
      // a5: <<{W o g_a o g^a}>>_2
      [](const FieldPtr& w) {
        return wrap({A}, c2({qprod(qprod(w, lo(A)), hi(A))}));
      },
      // a6: <<W g^a>>_1 <<g_a {g^b o g_b}>>_1
      [](const FieldPtr& w) {
        return wrap({A, B}, product({c1({w, hi(A)}),
                                     c1({lo(A), qprod(hi(B), lo(B))})}));
      },
      // a7: <<g^a>>_1 <<g_a W {g^b o g_b}>>_1
      [](const FieldPtr& w) {
        return wrap({A, B}, product({c1({hi(A)}),
                                     c1({lo(A), w, qprod(hi(B), lo(B))})}));
      },
      // a8: <<g^a>>_1 <<g_a g^b>>_1 <<g_b W g^m g_m>>_0
      [](const FieldPtr& w) {
        return wrap({A, B, M},
                    product({c1({hi(A)}), c1({lo(A), hi(B)}),
                             c0({lo(B), w, hi(M), lo(M)})}));
      },
      // a9: <<W g^a>>_1 <<g_a g^b g_b g^m>>_0 <<g_m>>_1
      [](const FieldPtr& w) {
        return wrap({A, B, M},
                    product({c1({w, hi(A)}),
                             c0({lo(A), hi(B), lo(B), hi(M)}), c1({lo(M)})}));
      },
      // a10: <<g^a>>_1 <<g_a W g^b g_b g^m>>_0 <<g_m>>_1
      [](const FieldPtr& w) {
        return wrap({A, B, M},
                    product({c1({hi(A)}),
                             c0({lo(A), w, hi(B), lo(B), hi(M)}),
                             c1({lo(M)})}));
      },
      // a11: <<g^a g^b>>_1 <<g_a {g_b o W}>>_1
      [](const FieldPtr& w) {
        return wrap({A, B}, product({c1({hi(A), hi(B)}),
                                     c1({lo(A), qprod(lo(B), w)})}));
      },
      // a12: <<g^a>>_1 <<g_a g^b>>_1 <<{g_b o W}>>_1
      [](const FieldPtr& w) {
        return wrap({A, B}, product({c1({hi(A)}), c1({lo(A), hi(B)}),
                                     c1({qprod(lo(B), w)})}));
      },
      // a13: <<W g^a>>_1 <<{g_a o g_b}>>_1 <<g^b>>_1
      [](const FieldPtr& w) {
        return wrap({A, B}, product({c1({w, hi(A)}),
                                     c1({qprod(lo(A), lo(B))}), c1({hi(B)})}));
      },
      // a14: <<g^a>>_1 <<g_a W g^b g^m>>_0 <<g_b>>_1 <<g_m>>_1
      [](const FieldPtr& w) {
        return wrap({A, B, M},
                    product({c1({hi(A)}), c0({lo(A), w, hi(B), hi(M)}),
                             c1({lo(B)}), c1({lo(M)})}));
      },
      // a15: <<g^a>>_1 <<g_a g^b {g_b o W}>>_1
      [](const FieldPtr& w) {
        return wrap({A, B}, product({c1({hi(A)}),
                                     c1({lo(A), hi(B), qprod(lo(B), w)})}));
      },
      // a16: <<W g^a g^b>>_1 <<{g_a o g_b}>>_1
      [](const FieldPtr& w) {
        return wrap({A, B}, product({c1({w, hi(A), hi(B)}),
                                     c1({qprod(lo(A), lo(B))})}));
      },
      // a17: <<g^a g^b>>_1 <<g_a g_b W g^m>>_0 <<g_m>>_1
      [](const FieldPtr& w) {
        return wrap({A, B, M},
                    product({c1({hi(A), hi(B)}),
                             c0({lo(A), lo(B), w, hi(M)}), c1({lo(M)})}));
      },
      // a18: <<g^a g^b>>_1 <<{g_a o g_b} W>>_1
      [](const FieldPtr& w) {
        return wrap({A, B}, product({c1({hi(A), hi(B)}),
                                     c1({qprod(lo(A), lo(B)), w})}));
      },
      // a19: <<W g^a>>_1 <<g_a g_b g^b g_m g^m>>_0
      [](const FieldPtr& w) {
        return wrap({A, B, M},
                    product({c1({w, hi(A)}),
                             c0({lo(A), lo(B), hi(B), lo(M), hi(M)})}));
      },
      // a20: <<g^a>>_1 <<g_a W g^b g_b g^m g_m>>_0
      [](const FieldPtr& w) {
        return wrap({A, B, M},
                    product({c1({hi(A)}),
                             c0({lo(A), w, hi(B), lo(B), hi(M), lo(M)})}));
      },
      // a21: <<W g^a g^b>>_1 <<g_a g_b g^m g_m>>_0
      [](const FieldPtr& w) {
        return wrap({A, B, M},
                    product({c1({w, hi(A), hi(B)}),
                             c0({lo(A), lo(B), hi(M), lo(M)})}));
      },
      // a22: <<g^a g^b>>_1 <<g_a g_b W g^m g_m>>_0
      [](const FieldPtr& w) {
        return wrap({A, B, M},
                    product({c1({hi(A), hi(B)}),
                             c0({lo(A), lo(B), w, hi(M), lo(M)})}));
      },
      // a23: <<W g^a g_a g^b g_b g^m g_m>>_0
      [](const FieldPtr& w) {
        return wrap({A, B, M},
                    c0({w, hi(A), lo(A), hi(B), lo(B), hi(M), lo(M)}));
      },
      // a24: <<{W o g^a}>>_1 <<g_a g^b g_b>>_1
      [](const FieldPtr& w) {
        return wrap({A, B}, product({c1({qprod(w, hi(A))}),
                                     c1({lo(A), hi(B), lo(B)})}));
      },
      // a25: <<W g^a g_a {g^b o g_b}>>_1
      [](const FieldPtr& w) {
        return wrap({A, B}, c1({w, hi(A), lo(A), qprod(hi(B), lo(B))}));
      },
      // a26: <<g^a g_a g^b>>_1 <<g_b W g^m g_m>>_0
      [](const FieldPtr& w) {
        return wrap({A, B, M}, product({c1({hi(A), lo(A), hi(B)}),
                                        c0({lo(B), w, hi(M), lo(M)})}));
      },
      // a27: <<g^a g_a g^b {g_b o W}>>_1
      [](const FieldPtr& w) {
        return wrap({A, B}, c1({hi(A), lo(A), hi(B), qprod(lo(B), w)}));
      },
      // a28: <<T(g_a) {W o g^a}>>_2
      [](const FieldPtr& w) {
        return wrap({A}, c2({op_t(lo(A)), qprod(w, hi(A))}));
      },
      // a29: <<W g_a g_b g_m>>_1 <<g^a g^b g^m>>_0
      [](const FieldPtr& w) {
        return wrap({A, B, M}, product({c1({w, lo(A), lo(B), lo(M)}),
                                        c0({hi(A), hi(B), hi(M)})}));
      },
      // a30: <<g_a g_b g_m>>_1 <<W g^a g^b g^m>>_0
      [](const FieldPtr& w) {
        return wrap({A, B, M}, product({c1({lo(A), lo(B), lo(M)}),
                                        c0({w, hi(A), hi(B), hi(M)})}));
      },
  };
  return builders;
}

ScalarPtr lead_term(const FieldPtr& w) {
  return corr(3, {op_t(op_t(op_t(w)))});
}

}  // namespace

int phi_term_count() { return 1 + static_cast<int>(term_builders().size()); }

ScalarPtr phi_term(int i, const FieldPtr& argument) {
  if (i == 0) return lead_term(argument);
  if (i < 1 || i > kUnknownCount)
    throw std::invalid_argument("phi_term: index out of range");
  return term_builders()[i - 1](argument);
}

ScalarPtr build_phi_symbolic(const FieldPtr& argument) {
  std::vector<ScalarPtr> terms;
  terms.push_back(product({konst(Rational(-1)), lead_term(argument)}));
  for (int i = 2; i <= kUnknownCount; ++i)
    terms.push_back(product({unknown(i), term_builders()[i - 1](argument)}));
  return scalar_sum(std::move(terms));
}

ScalarPtr build_phi_fixed(const FieldPtr& argument,
                          std::span<const Rational> coeffs30) {
  if (coeffs30.size() != kUnknownCount)
    throw std::invalid_argument("build_phi_fixed: need 30 coefficients");
  std::vector<ScalarPtr> terms;
  terms.push_back(product({konst(Rational(-1)), lead_term(argument)}));
  for (int i = 1; i <= kUnknownCount; ++i)
    terms.push_back(
        product({konst(coeffs30[i - 1]), term_builders()[i - 1](argument)}));
  return scalar_sum(std::move(terms));
}

std::string ManifestEntry::str() const {
  std::string s;
  if (theory == Theory::CP1) s += "deg " + std::to_string(q_degree) + " of ";
  for (const Insertion& d : directions) s += insertion_str(theory, d) + " ";
  s += "Phi(" + insertion_str(theory, argument) + ")";
  return s;
}

std::vector<ManifestEntry> default_manifest() {
  std::vector<ManifestEntry> m;
  auto point = [&](std::vector<int> dirs, int arg) {
    ManifestEntry e;
    e.theory = Theory::Point;
    for (int n : dirs) e.directions.push_back({n, 0});
    e.argument = {arg, 0};
    e.q_degree = 0;
    m.push_back(std::move(e));
  };
  auto cp1 = [&](std::vector<std::pair<int, int>> dirs, std::pair<int, int> arg,
                 int deg) {
    ManifestEntry e;
    e.theory = Theory::CP1;
    for (auto [n, a] : dirs) e.directions.push_back({n, a});
    e.argument = {arg.first, arg.second};
    e.q_degree = deg;
    m.push_back(std::move(e));
  };

  point({}, 4);
  point({5}, 0);
  point({4}, 1);
  point({3}, 2);
  point({2}, 3);
  point({3, 3}, 0);
  point({2, 4}, 0);
  point({2, 3}, 1);
  point({2, 2}, 2);
  point({2, 2, 3}, 0);
  point({2, 2, 2}, 1);
  point({2, 2, 2, 2}, 0);

  cp1({}, {1, 1}, 0);
  cp1({}, {2, 0}, 0);
  cp1({}, {3, 1}, 1);
  cp1({{2, 1}}, {0, 0}, 0);
  cp1({{3, 0}}, {0, 0}, 0);
  cp1({{2, 0}}, {1, 0}, 0);
  cp1({{3, 1}}, {0, 1}, 1);
  cp1({{4, 0}}, {0, 1}, 1);
  cp1({{3, 1}}, {1, 0}, 1);
  cp1({{2, 1}}, {1, 1}, 1);
  cp1({{3, 0}}, {1, 1}, 1);
  cp1({{2, 1}}, {2, 0}, 1);
  cp1({{1, 1}}, {2, 1}, 1);
  cp1({{2, 0}}, {2, 1}, 1);
  cp1({{1, 1}}, {3, 0}, 1);
  cp1({{1, 1}, {2, 1}}, {1, 0}, 1);
  cp1({{2, 0}, {2, 0}}, {1, 1}, 1);
  return m;
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open manifest " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("manifest " + path + ": " + e.what());
  }
  if (!doc.is_array()) throw ParseError("manifest: expected an array");
  std::vector<ManifestEntry> m;
  for (const auto& rec : doc) {
    try {
      ManifestEntry e;
      std::string th = rec.at("theory").get<std::string>();
      if (th == "point")
        e.theory = Theory::Point;
      else if (th == "cp1")
        e.theory = Theory::CP1;
      else
        throw ParseError("manifest: unknown theory " + th);
      for (const auto& d : rec.at("directions"))
        e.directions.push_back(
            {d.at(0).get<int>(), d.size() > 1 ? d.at(1).get<int>() : 0});
      const auto& a = rec.at("argument");
      e.argument = {a.at(0).get<int>(), a.size() > 1 ? a.at(1).get<int>() : 0};
      e.q_degree = rec.value("q_degree", 0);
      m.push_back(std::move(e));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("manifest record: ") + e.what());
    }
  }
  return m;
}

std::string Relation::str() const {
  std::string s = "0 = " + constant.str();
  for (const auto& [i, c] : coeffs) {
    if (c.sign() < 0)
      s += " - " + (-c).str();
    else
      s += " + " + c.str();
    s += " a" + std::to_string(i);
  }
  return s;
}

namespace {

Relation relation_from_evalform(const ManifestEntry& entry, const EvalForm& ef) {
  Relation rel;
  rel.entry = entry;
  auto it = ef.constant.find(entry.q_degree);
  rel.constant = it == ef.constant.end() ? Rational(0) : it->second;
  for (const auto& [key, value] : ef.coeffs) {
    if (key.second != entry.q_degree) continue;
    rel.coeffs[key.first] = value;
  }
  return rel;
}

}  // namespace

Relation derive_relation(const ManifestEntry& entry, const Oracles& oracles) {
  const TheorySpec& spec = TheorySpec::get(entry.theory);
  ScalarPtr s = build_phi_symbolic(basis(entry.argument));
  for (const Insertion& dir : entry.directions)
    s = directional_derivative(s, dir);
  PrimitiveForm pf = expand(s, spec);
  EvalForm ef =
      evaluate_at_origin(pf, oracles.get(entry.theory), entry.q_degree);
  return relation_from_evalform(entry, ef);
}

Relation derive_relation_expanded(const ManifestEntry& entry,
                                  const Oracles& oracles) {
  const TheorySpec& spec = TheorySpec::get(entry.theory);
  PrimitiveForm pf = expand(build_phi_symbolic(basis(entry.argument)), spec);
  for (const Insertion& dir : entry.directions) pf = differentiate(pf, dir);
  EvalForm ef =
      evaluate_at_origin(pf, oracles.get(entry.theory), entry.q_degree);
  return relation_from_evalform(entry, ef);
}

LinearSystem assemble_system(const std::vector<ManifestEntry>& manifest,
                             const Oracles& oracles) {
  LinearSystem sys;
  for (int i = 2; i <= kUnknownCount; ++i) sys.unknown_order.push_back(i);
  for (const ManifestEntry& e : manifest)
    sys.relations.push_back(derive_relation(e, oracles));

  const size_t n = sys.unknown_order.size();
  sys.coeffs = QMatrix(sys.relations.size(), n);
  sys.rhs.resize(sys.relations.size());
  for (size_t r = 0; r < sys.relations.size(); ++r) {
    const Relation& rel = sys.relations[r];
    for (size_t j = 0; j < n; ++j) {
      auto it = rel.coeffs.find(sys.unknown_order[j]);
      if (it != rel.coeffs.end()) sys.coeffs.at(r, j) = it->second;
    }
    sys.rhs[r] = -rel.constant;
    if (rel.coeffs.contains(1))
      throw std::logic_error("a1 must not appear in derived relations");
  }
  return sys;
}

std::array<Rational, kUnknownCount> solve_coefficients(
    const LinearSystem& system) {
  std::vector<Rational> x = solve_unique(system.coeffs, system.rhs);
  std::array<Rational, kUnknownCount> out;
  for (size_t j = 0; j < system.unknown_order.size(); ++j)
    out[system.unknown_order[j] - 1] = x[j];
  return out;
}

std::array<Rational, kUnknownCount> solve_default_coefficients(
    const Oracles& oracles) {
  return solve_coefficients(assemble_system(default_manifest(), oracles));
}

SweepSpec default_point_sweep() {
  SweepSpec s;
  s.max_derivatives = 5;
  for (int n = 0; n <= 3; ++n) s.direction_pool.push_back({n, 0});
  for (int n = 0; n <= 4; ++n) s.argument_pool.push_back({n, 0});
  return s;
}

SweepSpec default_cp1_sweep() {
  SweepSpec s;
  s.max_derivatives = 2;
  for (int n = 0; n <= 2; ++n)
    for (int a = 0; a <= 1; ++a) s.direction_pool.push_back({n, a});
  for (int n = 0; n <= 3; ++n)
    for (int a = 0; a <= 1; ++a) s.argument_pool.push_back({n, a});
  return s;
}

namespace {

// evaluates one degree slice of a fixed-coefficient Phi expansion
void record_combo(VerifyReport& report, const PrimitiveForm& pf,
                  const Oracle& oracle, const std::vector<Insertion>& dirs,
                  const Insertion& argument, int degree) {
  ComboResult res;
  res.directions = dirs;
  res.argument = argument;
  res.q_degree = degree;
  try {
    EvalForm ef = evaluate_at_origin(pf, oracle, degree);
    if (!ef.coeffs.empty())
      throw std::logic_error("fixed-coefficient form still has unknowns");
    if (ef.constant.empty()) {
      res.status = ComboResult::Status::Zero;
      report.checked += 1;
    } else {
      res.status = ComboResult::Status::NonZero;
      res.residual = ef.constant.begin()->second;
      report.failures += 1;
      report.problems.push_back(std::move(res));
      return;
    }
  } catch (const IrreducibleCorrelator& e) {
    res.status = ComboResult::Status::Skipped;
    res.irreducible_key = e.key_description;
    report.skipped += 1;
    report.problems.push_back(std::move(res));
    return;
  }
}

// Novikov degrees reachable by gate-passing monomials
std::vector<int> reachable_degrees(const PrimitiveForm& pf,
                                   const TheorySpec& spec) {
  std::vector<int> degrees;
  for (const Monomial& m : pf.monomials()) {
    int total = 0;
    bool dead = false;
    for (const CorrAtom& atom : m.atoms) {
      auto d = spec.determine_degree(atom.genus, atom.ins);
      if (!d) {
        dead = true;
        break;
      }
      total += *d;
    }
    if (!dead) degrees.push_back(total);
  }
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  return degrees;
}

void sweep_node(VerifyReport& report, const PrimitiveForm& pf,
                const TheorySpec& spec, const Oracle& oracle,
                const SweepSpec& sweep, std::vector<Insertion>& dirs,
                const Insertion& argument, size_t pool_from) {
  for (int degree : reachable_degrees(pf, spec))
    record_combo(report, pf, oracle, dirs, argument, degree);
  if (dirs.size() == static_cast<size_t>(sweep.max_derivatives)) return;
  for (size_t i = pool_from; i < sweep.direction_pool.size(); ++i) {
    dirs.push_back(sweep.direction_pool[i]);
    PrimitiveForm child = differentiate(pf, sweep.direction_pool[i]);
    sweep_node(report, child, spec, oracle, sweep, dirs, argument, i);
    dirs.pop_back();
  }
}

}  // namespace

VerifyReport verify_identity(Theory theory, const SweepSpec& sweep,
                             std::span<const Rational> coeffs30,
                             const Oracles& oracles) {
  const TheorySpec& spec = TheorySpec::get(theory);
  const Oracle& oracle = oracles.get(theory);
  VerifyReport report;
  report.theory = theory;
  for (const Insertion& argument : sweep.argument_pool) {
    PrimitiveForm pf = expand(build_phi_fixed(basis(argument), coeffs30), spec);
    std::vector<Insertion> dirs;
    sweep_node(report, pf, spec, oracle, sweep, dirs, argument, 0);
  }
  return report;
}

VerifyReport verify_manifest(const std::vector<ManifestEntry>& manifest,
                             std::span<const Rational> coeffs30,
                             const Oracles& oracles) {
  VerifyReport report;
  report.theory = Theory::Point;
  for (const ManifestEntry& e : manifest) {
    const TheorySpec& spec = TheorySpec::get(e.theory);
    PrimitiveForm pf = expand(build_phi_fixed(basis(e.argument), coeffs30), spec);
    for (const Insertion& dir : e.directions) pf = differentiate(pf, dir);
    record_combo(report, pf, oracles.get(e.theory), e.directions, e.argument,
                 e.q_degree);
  }
  return report;
}

}  // namespace g3trr
