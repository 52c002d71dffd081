#ifndef G3TRR_EVAL_HPP
#define G3TRR_EVAL_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g3trr/expr.hpp"
#include "g3trr/oracle.hpp"

namespace g3trr {

// One fully concrete correlation function <<tau ... tau>>_g as a function on
// the big phase space (arguments are constant basis fields, kept sorted).
struct CorrAtom {
  int genus = 0;
  std::vector<Insertion> ins;
  auto operator<=>(const CorrAtom&) const = default;
};

// coeff * a_unknown * product(atoms); unknown 0 means no unknown factor.
struct Monomial {
  Rational coeff;
  int unknown = 0;
  std::vector<CorrAtom> atoms;  // sorted
};

// Canonical sum of monomials: unique (unknown, atoms) keys, nonzero
// coefficients, deterministic order.
class PrimitiveForm {
 public:
  PrimitiveForm() = default;

  static PrimitiveForm constant(const Rational& r);
  static PrimitiveForm one() { return constant(Rational(1)); }
  static PrimitiveForm single(Monomial m);

  const std::vector<Monomial>& monomials() const { return monos_; }
  bool empty() const { return monos_.empty(); }
  size_t size() const { return monos_.size(); }

  PrimitiveForm& operator+=(const PrimitiveForm& o);
  // Throws std::logic_error if two unknown-bearing monomials multiply: every
  // expression here is affine in the unknowns.
  friend PrimitiveForm operator*(const PrimitiveForm& a,
                                 const PrimitiveForm& b);
  PrimitiveForm scaled_by(const Rational& r) const;

  static PrimitiveForm merge(std::vector<Monomial> monos);

 private:
  std::vector<Monomial> monos_;
};

// Rewrites T and quantum products through their defining formulas,
// instantiates index contractions over the theory basis and distributes all
// products, yielding a primitive form. Throws UnboundIndex on a free index.
PrimitiveForm expand(const ScalarPtr& s, const TheorySpec& spec);

// Derivative of an expanded form: each atom in turn gains the direction as
// one more argument (constant fields are parallel).
PrimitiveForm differentiate(const PrimitiveForm& pf, const Insertion& dir);

// Affine function of the unknowns with per-Novikov-degree rational
// coefficients.
struct EvalForm {
  std::map<int, Rational> constant;                 // degree -> value
  std::map<std::pair<int, int>, Rational> coeffs;   // (unknown, degree) -> value

  bool operator==(const EvalForm&) const = default;
  bool is_zero() const { return constant.empty() && coeffs.empty(); }
  void add(int degree, int unknown, const Rational& value);
  // degrees with any entry present
  std::vector<int> degrees() const;
};

// Evaluates every monomial at the origin through the oracle. A monomial dies
// if any atom fails the dimension gate or evaluates to zero; otherwise an
// atom outside the seed closure propagates IrreducibleCorrelator. With
// target_degree set, only monomials whose total Novikov degree matches are
// evaluated (the degree is known from dimension counts before any oracle
// query).
EvalForm evaluate_at_origin(const PrimitiveForm& pf, const Oracle& oracle,
                            std::optional<int> target_degree = std::nullopt);

}  // namespace g3trr

#endif
