#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "g3trr/ansatz.hpp"
#include "g3trr/eval.hpp"
#include "g3trr/report.hpp"

using namespace g3trr;

namespace {

Oracle point_oracle() {
  return Oracle(TheorySpec::point(), builtin_point_seeds());
}
Oracle cp1_oracle() { return Oracle(TheorySpec::cp1(), builtin_cp1_seeds()); }

bool same_pf(const PrimitiveForm& a, const PrimitiveForm& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    const Monomial &x = a.monomials()[i], &y = b.monomials()[i];
    if (!(x.coeff == y.coeff) || x.unknown != y.unknown || x.atoms != y.atoms)
      return false;
  }
  return true;
}

// random small scalar expressions over constant fields, for derivation laws
ScalarPtr random_scalar(std::mt19937& rng, int depth) {
  if (depth == 0 || rng() % 3 == 0) {
    int k = 1 + int(rng() % 3);
    std::vector<FieldPtr> fields;
    for (int i = 0; i < k; ++i) {
      FieldPtr f = basis(int(rng() % 3), 0);
      if (rng() % 4 == 0) f = op_t(f);
      if (rng() % 4 == 0) f = tau_plus(f);
      fields.push_back(f);
    }
    return corr(int(rng() % 4), std::move(fields));
  }
  ScalarPtr a = random_scalar(rng, depth - 1);
  ScalarPtr b = random_scalar(rng, depth - 1);
  return rng() % 2 ? product({a, b}) : scalar_sum({a, b});
}

}  // namespace

TEST_CASE("derivative of a correlator of constant fields appends the direction") {
  ScalarPtr s = corr(3, {basis(7, 0)});
  ScalarPtr ds = directional_derivative(s, {0, 0});
  PrimitiveForm expected = expand(corr(3, {basis(7, 0), basis(0, 0)}),
                                  TheorySpec::point());
  CHECK(same_pf(expand(ds, TheorySpec::point()), expected));
}

TEST_CASE("covariant derivative of T against the defining rule") {
  // nabla_{t2} T(t0) = -(t2 o t0) since basis fields are parallel
  FieldPtr lhs = covariant_derivative(op_t(basis(0, 0)), {2, 0});
  FieldPtr rhs = field_negate(qprod(basis(2, 0), basis(0, 0)));
  PrimitiveForm l = expand(corr(1, {lhs}), TheorySpec::point());
  PrimitiveForm r = expand(corr(1, {rhs}), TheorySpec::point());
  CHECK(same_pf(l, r));
}

TEST_CASE("expansion of T inside a genus-1 correlator") {
  PrimitiveForm pf = expand(corr(1, {op_t(basis(0, 0))}), TheorySpec::point());
  // <<t1>>_1 - <<t0 t0>>_0 <<t0>>_1
  REQUIRE(pf.size() == 2);
  const Monomial* lead = nullptr;
  const Monomial* correction = nullptr;
  for (const Monomial& m : pf.monomials())
    (m.atoms.size() == 1 ? lead : correction) = &m;
  REQUIRE(lead);
  REQUIRE(correction);
  CHECK(lead->coeff == Rational(1));
  CHECK(lead->atoms[0].genus == 1);
  CHECK(lead->atoms[0].ins == std::vector<Insertion>{{1, 0}});
  CHECK(correction->coeff == Rational(-1));
  CHECK(correction->atoms.size() == 2);
  CHECK(correction->atoms[0].genus == 0);
  CHECK(correction->atoms[0].ins ==
        std::vector<Insertion>{{0, 0}, {0, 0}});
  CHECK(correction->atoms[1].genus == 1);
  CHECK(correction->atoms[1].ins == std::vector<Insertion>{{0, 0}});
}

TEST_CASE("index contractions over the CP1 basis") {
  // the all-genus-0 7-point term with three contracted pairs: all eight
  // index assignments produce the same atom
  ScalarPtr term = phi_term(23, basis(1, 1));
  PrimitiveForm pf = expand(term, TheorySpec::cp1());
  REQUIRE(pf.size() == 1);
  CHECK(pf.monomials()[0].coeff == Rational(8));
  std::vector<Insertion> expected = {{0, 0}, {0, 0}, {0, 0},
                                     {0, 1}, {0, 1}, {0, 1}, {1, 1}};
  CHECK(pf.monomials()[0].atoms[0].ins == expected);
}

TEST_CASE("triple T expansion keeps the top atom and two-point corrections") {
  PrimitiveForm pf =
      expand(corr(3, {op_t(op_t(op_t(basis(4, 0))))}), TheorySpec::point());
  bool found_top = false;
  for (const Monomial& m : pf.monomials()) {
    if (m.atoms.size() == 1 && m.atoms[0].genus == 3 &&
        m.atoms[0].ins == std::vector<Insertion>{{7, 0}}) {
      found_top = true;
      CHECK(m.coeff == Rational(1));
    } else {
      bool has_genus0_pair = false;
      for (const CorrAtom& atom : m.atoms)
        if (atom.genus == 0 && atom.ins.size() == 2) has_genus0_pair = true;
      CHECK(has_genus0_pair);
    }
  }
  CHECK(found_top);
}

TEST_CASE("tau_minus drops below level zero") {
  PrimitiveForm a = expand(corr(1, {tau_minus(tau_plus(basis(1, 0)))}),
                           TheorySpec::point());
  PrimitiveForm b = expand(corr(1, {basis(1, 0)}), TheorySpec::point());
  CHECK(same_pf(a, b));
  CHECK(expand(corr(1, {tau_minus(basis(0, 0))}), TheorySpec::point()).empty());
}

TEST_CASE("free indices are rejected") {
  ScalarPtr bad = corr(1, {ibasis(0, true)});
  CHECK_THROWS_AS(expand(bad, TheorySpec::point()), UnboundIndex);
}

TEST_CASE("expansion and differentiation commute") {
  std::mt19937 rng(5);
  for (Theory t : {Theory::Point, Theory::CP1}) {
    const TheorySpec& spec = TheorySpec::get(t);
    for (int trial = 0; trial < 40; ++trial) {
      ScalarPtr s = random_scalar(rng, 2);
      Insertion dir{int(rng() % 3), t == Theory::CP1 ? int(rng() % 2) : 0};
      PrimitiveForm slow = expand(directional_derivative(s, dir), spec);
      PrimitiveForm fast = differentiate(expand(s, spec), dir);
      CHECK(same_pf(slow, fast));
    }
  }
}

TEST_CASE("derivation is linear and Leibniz over products") {
  std::mt19937 rng(17);
  const TheorySpec& spec = TheorySpec::point();
  for (int trial = 0; trial < 25; ++trial) {
    ScalarPtr a = random_scalar(rng, 1);
    ScalarPtr b = random_scalar(rng, 1);
    Insertion dir{int(rng() % 3), 0};
    PrimitiveForm d_sum = expand(directional_derivative(scalar_sum({a, b}), dir), spec);
    PrimitiveForm sum_d = expand(
        scalar_sum({directional_derivative(a, dir), directional_derivative(b, dir)}),
        spec);
    CHECK(same_pf(d_sum, sum_d));
    PrimitiveForm d_prod = expand(directional_derivative(product({a, b}), dir), spec);
    PrimitiveForm leibniz = expand(
        scalar_sum({product({directional_derivative(a, dir), b}),
                    product({a, directional_derivative(b, dir)})}),
        spec);
    CHECK(same_pf(d_prod, leibniz));
  }
}

TEST_CASE("mixed partial derivatives commute on the ansatz") {
  Oracle point = point_oracle();
  ScalarPtr phi = build_phi_symbolic(basis(2, 0));
  for (auto [x, y] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {0, 2}}) {
    ScalarPtr xy = directional_derivative(
        directional_derivative(phi, {x, 0}), {y, 0});
    ScalarPtr yx = directional_derivative(
        directional_derivative(phi, {y, 0}), {x, 0});
    EvalForm a = evaluate_at_origin(expand(xy, TheorySpec::point()), point, 0);
    EvalForm b = evaluate_at_origin(expand(yx, TheorySpec::point()), point, 0);
    CHECK(a == b);
  }
}

TEST_CASE("genus-1 recursion sanity instance") {
  Oracle point = point_oracle();
  EvalForm lhs = evaluate_at_origin(
      expand(corr(1, {op_t(basis(0, 0))}), TheorySpec::point()), point);
  REQUIRE(lhs.constant.size() == 1);
  CHECK(lhs.constant.at(0) == Rational(1, 24));
  EvalForm rhs = evaluate_at_origin(
      expand(contract(0, corr(0, {basis(0, 0), ibasis(0, false), ibasis(0, true)})),
             TheorySpec::point()),
      point);
  CHECK(lhs.constant.at(0) == Rational(1, 24) * rhs.constant.at(0));

  Oracle cp1 = cp1_oracle();
  EvalForm lhs_p1 = evaluate_at_origin(
      expand(corr(1, {op_t(basis(0, 0))}), TheorySpec::cp1()), cp1);
  EvalForm rhs_p1 = evaluate_at_origin(
      expand(contract(0, corr(0, {basis(0, 0), ibasis(0, false), ibasis(0, true)})),
             TheorySpec::cp1()),
      cp1);
  REQUIRE(lhs_p1.constant.size() == 1);
  CHECK(lhs_p1.constant.at(0) == Rational(1, 12));
  CHECK(lhs_p1.constant.at(0) == Rational(1, 24) * rhs_p1.constant.at(0));
}

TEST_CASE("evaluation pins") {
  Oracle point = point_oracle();
  EvalForm top = evaluate_at_origin(
      expand(corr(3, {basis(7, 0)}), TheorySpec::point()), point);
  CHECK(top.constant.at(0) == Rational(1, 82944));
  EvalForm unstable = evaluate_at_origin(
      expand(corr(0, {basis(0, 0), basis(0, 0)}), TheorySpec::point()), point);
  CHECK(unstable.is_zero());
}

TEST_CASE("evaluation forms dump as structured text") {
  EvalForm ef;
  ef.add(0, 0, Rational(-1, 82944));
  ef.add(0, 2, Rational(1, 384));
  ef.add(1, 23, Rational(8));
  CHECK(evaluate_at_origin(PrimitiveForm(), point_oracle()).degrees().empty());
  CHECK(ef.degrees() == std::vector<int>{0, 1});
  CHECK(evalform_dump(ef) ==
        R"([{"degree":0,"constant":"-1/82944","unknowns":{"a_2":"1/384"}},)"
        R"({"degree":1,"constant":"0","unknowns":{"a_23":"8"}}])");
}
