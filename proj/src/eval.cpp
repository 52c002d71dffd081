#include "g3trr/eval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "g3trr/errors.hpp"

namespace g3trr {

PrimitiveForm PrimitiveForm::constant(const Rational& r) {
  PrimitiveForm pf;
  if (!r.is_zero()) pf.monos_.push_back(Monomial{r, 0, {}});
  return pf;
}

PrimitiveForm PrimitiveForm::single(Monomial m) {
  PrimitiveForm pf;
  if (!m.coeff.is_zero()) pf.monos_.push_back(std::move(m));
  return pf;
}

namespace {

using MonoKey = std::pair<int, std::vector<CorrAtom>>;

MonoKey key_of(const Monomial& m) { return {m.unknown, m.atoms}; }

}  // namespace

PrimitiveForm PrimitiveForm::merge(std::vector<Monomial> monos) {
  std::map<MonoKey, Rational> acc;
  for (Monomial& m : monos) {
    if (m.coeff.is_zero()) continue;
    acc[key_of(m)] += m.coeff;
  }
  PrimitiveForm pf;
  for (auto& [key, coeff] : acc) {
    if (coeff.is_zero()) continue;
    pf.monos_.push_back(Monomial{coeff, key.first, key.second});
  }
  return pf;
}

PrimitiveForm& PrimitiveForm::operator+=(const PrimitiveForm& o) {
  if (o.monos_.empty()) return *this;
  std::vector<Monomial> all = monos_;
  all.insert(all.end(), o.monos_.begin(), o.monos_.end());
  *this = merge(std::move(all));
  return *this;
}

PrimitiveForm operator*(const PrimitiveForm& a, const PrimitiveForm& b) {
  std::vector<Monomial> out;
  out.reserve(a.monos_.size() * b.monos_.size());
  for (const Monomial& x : a.monos_) {
    for (const Monomial& y : b.monos_) {
      Monomial m;
      m.coeff = x.coeff * y.coeff;
      if (x.unknown != 0 && y.unknown != 0)
        throw std::logic_error("primitive form is not affine in the unknowns");
      m.unknown = x.unknown + y.unknown;
      m.atoms.reserve(x.atoms.size() + y.atoms.size());
      std::merge(x.atoms.begin(), x.atoms.end(), y.atoms.begin(),
                 y.atoms.end(), std::back_inserter(m.atoms));
      out.push_back(std::move(m));
    }
  }
  return PrimitiveForm::merge(std::move(out));
}

PrimitiveForm PrimitiveForm::scaled_by(const Rational& r) const {
  if (r.is_zero()) return PrimitiveForm();
  PrimitiveForm pf;
  pf.monos_ = monos_;
  for (Monomial& m : pf.monos_) m.coeff *= r;
  return pf;
}

namespace {

// one additive term of an expanded field: (scalar coefficient) * basis(ins)
struct FieldTerm {
  PrimitiveForm coeff;
  Insertion ins;
};

std::vector<FieldTerm> expand_field(const FieldPtr& f, const TheorySpec& spec);

PrimitiveForm expand_scalar(const ScalarPtr& s, const TheorySpec& spec) {
  switch (s->kind) {
    case ScalarExpr::Kind::Const:
      return PrimitiveForm::constant(s->value);
    case ScalarExpr::Kind::Unknown:
      return PrimitiveForm::single(Monomial{Rational(1), s->unknown, {}});
    case ScalarExpr::Kind::Sum: {
      std::vector<Monomial> acc;
      for (const ScalarPtr& a : s->args) {
        PrimitiveForm part = expand_scalar(a, spec);
        acc.insert(acc.end(), part.monomials().begin(),
                   part.monomials().end());
      }
      return PrimitiveForm::merge(std::move(acc));
    }
    case ScalarExpr::Kind::Product: {
      PrimitiveForm pf = PrimitiveForm::one();
      for (const ScalarPtr& a : s->args) pf = pf * expand_scalar(a, spec);
      return pf;
    }
    case ScalarExpr::Kind::Contract: {
      std::vector<Monomial> acc;
      for (int cls = 0; cls < spec.class_count(); ++cls) {
        PrimitiveForm part = expand_scalar(
            substitute_index(s->body, s->index_var, cls, spec), spec);
        acc.insert(acc.end(), part.monomials().begin(),
                   part.monomials().end());
      }
      return PrimitiveForm::merge(std::move(acc));
    }
    case ScalarExpr::Kind::Corr: {
      // distribute the correlator over each slot's expansion
      std::vector<std::vector<FieldTerm>> slots;
      slots.reserve(s->fields.size());
      for (const FieldPtr& f : s->fields) {
        slots.push_back(expand_field(f, spec));
        if (slots.back().empty()) return PrimitiveForm();
      }
      std::vector<Monomial> acc;
      std::vector<size_t> choice(slots.size(), 0);
      for (;;) {
        PrimitiveForm coeff = PrimitiveForm::one();
        CorrAtom atom;
        atom.genus = s->genus;
        for (size_t i = 0; i < slots.size(); ++i) {
          const FieldTerm& term = slots[i][choice[i]];
          coeff = coeff * term.coeff;
          atom.ins.push_back(term.ins);
        }
        std::sort(atom.ins.begin(), atom.ins.end());
        for (const Monomial& c : coeff.monomials()) {
          Monomial m = c;
          m.atoms.insert(std::upper_bound(m.atoms.begin(), m.atoms.end(), atom),
                         atom);
          acc.push_back(std::move(m));
        }
        size_t i = 0;
        while (i < slots.size() && ++choice[i] == slots[i].size()) {
          choice[i] = 0;
          ++i;
        }
        if (i == slots.size()) break;
      }
      return PrimitiveForm::merge(std::move(acc));
    }
  }
  return PrimitiveForm();
}

std::vector<FieldTerm> expand_field(const FieldPtr& f, const TheorySpec& spec) {
  switch (f->kind) {
    case FieldExpr::Kind::Basis:
      return {FieldTerm{PrimitiveForm::one(), f->ins}};
    case FieldExpr::Kind::IndexedBasis:
      throw UnboundIndex("free basis index in expansion");
    case FieldExpr::Kind::TauPlus: {
      std::vector<FieldTerm> terms = expand_field(f->args[0], spec);
      for (FieldTerm& t : terms) t.ins.level += 1;
      return terms;
    }
    case FieldExpr::Kind::TauMinus: {
      std::vector<FieldTerm> terms = expand_field(f->args[0], spec);
      std::vector<FieldTerm> keep;
      for (FieldTerm& t : terms) {
        t.ins.level -= 1;
        if (t.ins.level >= 0) keep.push_back(std::move(t));
      }
      return keep;
    }
    case FieldExpr::Kind::T: {
      // T(V) = tau_+(V) - <<V gamma^a>> gamma_a
      FieldPtr rewritten =
          field_sum({tau_plus(f->args[0]),
                     field_negate(qprod_multi({f->args[0]}))});
      return expand_field(rewritten, spec);
    }
    case FieldExpr::Kind::QProd: {
      // <<V1..Vm gamma^c>> gamma_c summed over the basis
      std::vector<FieldTerm> terms;
      for (int cls = 0; cls < spec.class_count(); ++cls) {
        std::vector<FieldPtr> corr_args = f->args;
        std::vector<FieldPtr> raised;
        for (auto& [beta, coef] : spec.metric_raise(cls)) {
          FieldPtr b = basis(0, beta);
          raised.push_back(coef == Rational(1) ? b : scaled(konst(coef), b));
        }
        corr_args.push_back(field_sum(std::move(raised)));
        PrimitiveForm coeff = expand_scalar(corr(0, std::move(corr_args)), spec);
        if (coeff.empty()) continue;
        terms.push_back(FieldTerm{std::move(coeff), Insertion{0, cls}});
      }
      return terms;
    }
    case FieldExpr::Kind::Scaled: {
      PrimitiveForm scale = expand_scalar(f->scale, spec);
      if (scale.empty()) return {};
      std::vector<FieldTerm> terms = expand_field(f->args[0], spec);
      for (FieldTerm& t : terms) t.coeff = t.coeff * scale;
      return terms;
    }
    case FieldExpr::Kind::Sum: {
      std::vector<FieldTerm> terms;
      for (const FieldPtr& a : f->args) {
        std::vector<FieldTerm> sub = expand_field(a, spec);
        terms.insert(terms.end(), std::make_move_iterator(sub.begin()),
                     std::make_move_iterator(sub.end()));
      }
      return terms;
    }
  }
  return {};
}

}  // namespace

PrimitiveForm expand(const ScalarPtr& s, const TheorySpec& spec) {
  return expand_scalar(s, spec);
}

PrimitiveForm differentiate(const PrimitiveForm& pf, const Insertion& dir) {
  std::vector<Monomial> out;
  for (const Monomial& m : pf.monomials()) {
    for (size_t i = 0; i < m.atoms.size(); ++i) {
      Monomial d = m;
      auto& ins = d.atoms[i].ins;
      ins.insert(std::upper_bound(ins.begin(), ins.end(), dir), dir);
      // the grown atom may have to move to keep the monomial canonical
      std::sort(d.atoms.begin(), d.atoms.end());
      out.push_back(std::move(d));
    }
  }
  return PrimitiveForm::merge(std::move(out));
}

void EvalForm::add(int degree, int unknown, const Rational& value) {
  if (value.is_zero()) return;
  if (unknown == 0) {
    Rational& slot = constant[degree];
    slot += value;
    if (slot.is_zero()) constant.erase(degree);
  } else {
    Rational& slot = coeffs[{unknown, degree}];
    slot += value;
    if (slot.is_zero()) coeffs.erase({unknown, degree});
  }
}

std::vector<int> EvalForm::degrees() const {
  std::vector<int> ds;
  for (auto& [d, v] : constant) ds.push_back(d);
  for (auto& [k, v] : coeffs)
    ds.push_back(k.second);
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  return ds;
}

EvalForm evaluate_at_origin(const PrimitiveForm& pf, const Oracle& oracle,
                            std::optional<int> target_degree) {
  const TheorySpec& spec = oracle.spec();
  const Theory theory = spec.theory();
  EvalForm out;

  for (const Monomial& m : pf.monomials()) {
    // dimension gate and total Novikov degree, before any oracle query
    int total_degree = 0;
    bool dead = false;
    std::vector<int> atom_degrees(m.atoms.size(), 0);
    for (size_t i = 0; i < m.atoms.size(); ++i) {
      auto d = spec.determine_degree(m.atoms[i].genus, m.atoms[i].ins);
      if (!d) {
        dead = true;
        break;
      }
      atom_degrees[i] = *d;
      total_degree += *d;
    }
    if (dead) continue;
    if (target_degree && total_degree != *target_degree) continue;

    // a single zero atom kills the monomial even when another atom is
    // outside the seed closure
    Rational value = m.coeff;
    std::optional<IrreducibleCorrelator> pending;
    for (size_t i = 0; i < m.atoms.size() && !value.is_zero(); ++i) {
      CorrelatorKey key(theory, m.atoms[i].genus, m.atoms[i].ins,
                        atom_degrees[i]);
      try {
        value *= oracle.evaluate(key);
      } catch (const IrreducibleCorrelator& e) {
        if (!pending) pending = e;
      }
    }
    if (value.is_zero()) continue;
    if (pending) throw *pending;
    out.add(total_degree, m.unknown, value);
  }
  return out;
}

}  // namespace g3trr
