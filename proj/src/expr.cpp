#include "g3trr/expr.hpp"

#include <utility>

#include "g3trr/errors.hpp"

namespace g3trr {

namespace {

std::shared_ptr<FieldExpr> make_field(FieldExpr::Kind k) {
  auto f = std::make_shared<FieldExpr>();
  f->kind = k;
  return f;
}

std::shared_ptr<ScalarExpr> make_scalar(ScalarExpr::Kind k) {
  auto s = std::make_shared<ScalarExpr>();
  s->kind = k;
  return s;
}

}  // namespace

FieldPtr basis(const Insertion& ins) {
  auto f = make_field(FieldExpr::Kind::Basis);
  f->ins = ins;
  return f;
}

FieldPtr basis(int level, int cls) { return basis(Insertion{level, cls}); }

FieldPtr ibasis(int var, bool raised) {
  auto f = make_field(FieldExpr::Kind::IndexedBasis);
  f->index_var = var;
  f->raised = raised;
  return f;
}

bool field_is_zero(const FieldPtr& f) {
  return f->kind == FieldExpr::Kind::Sum && f->args.empty();
}

FieldPtr field_zero() { return make_field(FieldExpr::Kind::Sum); }

FieldPtr tau_plus(FieldPtr f) {
  if (field_is_zero(f)) return f;
  auto r = make_field(FieldExpr::Kind::TauPlus);
  r->args = {std::move(f)};
  return r;
}

FieldPtr tau_minus(FieldPtr f) {
  if (field_is_zero(f)) return f;
  auto r = make_field(FieldExpr::Kind::TauMinus);
  r->args = {std::move(f)};
  return r;
}

FieldPtr op_t(FieldPtr f) {
  if (field_is_zero(f)) return f;
  auto r = make_field(FieldExpr::Kind::T);
  r->args = {std::move(f)};
  return r;
}

FieldPtr qprod_multi(std::vector<FieldPtr> fs) {
  for (const FieldPtr& f : fs)
    if (field_is_zero(f)) return field_zero();
  auto r = make_field(FieldExpr::Kind::QProd);
  r->args = std::move(fs);
  return r;
}

FieldPtr qprod(FieldPtr a, FieldPtr b) {
  return qprod_multi({std::move(a), std::move(b)});
}

FieldPtr scaled(ScalarPtr s, FieldPtr f) {
  if (scalar_is_zero(s) || field_is_zero(f)) return field_zero();
  auto r = make_field(FieldExpr::Kind::Scaled);
  r->scale = std::move(s);
  r->args = {std::move(f)};
  return r;
}

FieldPtr field_sum(std::vector<FieldPtr> fs) {
  std::vector<FieldPtr> keep;
  for (FieldPtr& f : fs)
    if (!field_is_zero(f)) keep.push_back(std::move(f));
  if (keep.size() == 1) return keep[0];
  auto r = make_field(FieldExpr::Kind::Sum);
  r->args = std::move(keep);
  return r;
}

FieldPtr field_negate(FieldPtr f) { return scaled(konst(Rational(-1)), std::move(f)); }

ScalarPtr konst(const Rational& r) {
  auto s = make_scalar(ScalarExpr::Kind::Const);
  s->value = r;
  return s;
}

ScalarPtr scalar_zero() { return konst(Rational(0)); }

bool scalar_is_zero(const ScalarPtr& s) {
  if (s->kind == ScalarExpr::Kind::Const && s->value.is_zero()) return true;
  return s->kind == ScalarExpr::Kind::Sum && s->args.empty();
}

ScalarPtr unknown(int i) {
  auto s = make_scalar(ScalarExpr::Kind::Unknown);
  s->unknown = i;
  return s;
}

ScalarPtr corr(int genus, std::vector<FieldPtr> fields) {
  for (const FieldPtr& f : fields)
    if (field_is_zero(f)) return scalar_zero();
  auto s = make_scalar(ScalarExpr::Kind::Corr);
  s->genus = genus;
  s->fields = std::move(fields);
  return s;
}

ScalarPtr product(std::vector<ScalarPtr> ss) {
  for (const ScalarPtr& s : ss)
    if (scalar_is_zero(s)) return scalar_zero();
  if (ss.size() == 1) return ss[0];
  auto s = make_scalar(ScalarExpr::Kind::Product);
  s->args = std::move(ss);
  return s;
}

ScalarPtr scalar_sum(std::vector<ScalarPtr> ss) {
  std::vector<ScalarPtr> keep;
  for (ScalarPtr& s : ss)
    if (!scalar_is_zero(s)) keep.push_back(std::move(s));
  if (keep.size() == 1) return keep[0];
  auto s = make_scalar(ScalarExpr::Kind::Sum);
  s->args = std::move(keep);
  return s;
}

ScalarPtr contract(int var, ScalarPtr body) {
  if (scalar_is_zero(body)) return body;
  auto s = make_scalar(ScalarExpr::Kind::Contract);
  s->index_var = var;
  s->body = std::move(body);
  return s;
}

FieldPtr covariant_derivative(const FieldPtr& f, const Insertion& dir) {
  switch (f->kind) {
    case FieldExpr::Kind::Basis:
    case FieldExpr::Kind::IndexedBasis:
      return field_zero();
    case FieldExpr::Kind::TauPlus:
      return tau_plus(covariant_derivative(f->args[0], dir));
    case FieldExpr::Kind::TauMinus:
      return tau_minus(covariant_derivative(f->args[0], dir));
    case FieldExpr::Kind::T:
      // nabla_X T(V) = T(nabla_X V) - X o V
      return field_sum({op_t(covariant_derivative(f->args[0], dir)),
                        field_negate(qprod(basis(dir), f->args[0]))});
    case FieldExpr::Kind::QProd: {
      std::vector<FieldPtr> terms;
      for (size_t i = 0; i < f->args.size(); ++i) {
        std::vector<FieldPtr> args = f->args;
        args[i] = covariant_derivative(f->args[i], dir);
        terms.push_back(qprod_multi(std::move(args)));
      }
      std::vector<FieldPtr> extended = f->args;
      extended.push_back(basis(dir));
      terms.push_back(qprod_multi(std::move(extended)));
      return field_sum(std::move(terms));
    }
    case FieldExpr::Kind::Scaled:
      return field_sum(
          {scaled(directional_derivative(f->scale, dir), f->args[0]),
           scaled(f->scale, covariant_derivative(f->args[0], dir))});
    case FieldExpr::Kind::Sum: {
      std::vector<FieldPtr> terms;
      for (const FieldPtr& a : f->args)
        terms.push_back(covariant_derivative(a, dir));
      return field_sum(std::move(terms));
    }
  }
  return field_zero();
}

ScalarPtr directional_derivative(const ScalarPtr& s, const Insertion& dir) {
  switch (s->kind) {
    case ScalarExpr::Kind::Const:
    case ScalarExpr::Kind::Unknown:
      return scalar_zero();
    case ScalarExpr::Kind::Corr: {
      std::vector<ScalarPtr> terms;
      std::vector<FieldPtr> extended = s->fields;
      extended.push_back(basis(dir));
      terms.push_back(corr(s->genus, std::move(extended)));
      for (size_t i = 0; i < s->fields.size(); ++i) {
        FieldPtr df = covariant_derivative(s->fields[i], dir);
        if (field_is_zero(df)) continue;
        std::vector<FieldPtr> fields = s->fields;
        fields[i] = std::move(df);
        terms.push_back(corr(s->genus, std::move(fields)));
      }
      return scalar_sum(std::move(terms));
    }
    case ScalarExpr::Kind::Product: {
      std::vector<ScalarPtr> terms;
      for (size_t i = 0; i < s->args.size(); ++i) {
        std::vector<ScalarPtr> args = s->args;
        args[i] = directional_derivative(s->args[i], dir);
        terms.push_back(product(std::move(args)));
      }
      return scalar_sum(std::move(terms));
    }
    case ScalarExpr::Kind::Sum: {
      std::vector<ScalarPtr> terms;
      for (const ScalarPtr& a : s->args)
        terms.push_back(directional_derivative(a, dir));
      return scalar_sum(std::move(terms));
    }
    case ScalarExpr::Kind::Contract:
      return contract(s->index_var, directional_derivative(s->body, dir));
  }
  return scalar_zero();
}

namespace {

FieldPtr substitute_index_field(const FieldPtr& f, int var, int cls,
                                const TheorySpec& spec) {
  switch (f->kind) {
    case FieldExpr::Kind::Basis:
      return f;
    case FieldExpr::Kind::IndexedBasis: {
      if (f->index_var != var) return f;
      if (!f->raised) return basis(0, cls);
      std::vector<FieldPtr> terms;
      for (auto& [beta, coef] : spec.metric_raise(cls)) {
        FieldPtr b = basis(0, beta);
        terms.push_back(coef == Rational(1) ? b : scaled(konst(coef), b));
      }
      return field_sum(std::move(terms));
    }
    case FieldExpr::Kind::TauPlus:
      return tau_plus(substitute_index_field(f->args[0], var, cls, spec));
    case FieldExpr::Kind::TauMinus:
      return tau_minus(substitute_index_field(f->args[0], var, cls, spec));
    case FieldExpr::Kind::T:
      return op_t(substitute_index_field(f->args[0], var, cls, spec));
    case FieldExpr::Kind::QProd: {
      std::vector<FieldPtr> args;
      for (const FieldPtr& a : f->args)
        args.push_back(substitute_index_field(a, var, cls, spec));
      return qprod_multi(std::move(args));
    }
    case FieldExpr::Kind::Scaled:
      return scaled(substitute_index(f->scale, var, cls, spec),
                    substitute_index_field(f->args[0], var, cls, spec));
    case FieldExpr::Kind::Sum: {
      std::vector<FieldPtr> args;
      for (const FieldPtr& a : f->args)
        args.push_back(substitute_index_field(a, var, cls, spec));
      return field_sum(std::move(args));
    }
  }
  return f;
}

}  // namespace

ScalarPtr substitute_index(const ScalarPtr& s, int var, int cls,
                           const TheorySpec& spec) {
  switch (s->kind) {
    case ScalarExpr::Kind::Const:
    case ScalarExpr::Kind::Unknown:
      return s;
    case ScalarExpr::Kind::Corr: {
      std::vector<FieldPtr> fields;
      for (const FieldPtr& f : s->fields)
        fields.push_back(substitute_index_field(f, var, cls, spec));
      return corr(s->genus, std::move(fields));
    }
    case ScalarExpr::Kind::Product: {
      std::vector<ScalarPtr> args;
      for (const ScalarPtr& a : s->args)
        args.push_back(substitute_index(a, var, cls, spec));
      return product(std::move(args));
    }
    case ScalarExpr::Kind::Sum: {
      std::vector<ScalarPtr> args;
      for (const ScalarPtr& a : s->args)
        args.push_back(substitute_index(a, var, cls, spec));
      return scalar_sum(std::move(args));
    }
    case ScalarExpr::Kind::Contract:
      return contract(s->index_var, substitute_index(s->body, var, cls, spec));
  }
  return s;
}

}  // namespace g3trr
