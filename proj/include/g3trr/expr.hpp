#ifndef G3TRR_EXPR_HPP
#define G3TRR_EXPR_HPP

#include <memory>
#include <vector>

#include "g3trr/theory.hpp"

namespace g3trr {

struct FieldExpr;
struct ScalarExpr;
using FieldPtr = std::shared_ptr<const FieldExpr>;
using ScalarPtr = std::shared_ptr<const ScalarExpr>;

// A vector field on the big phase space: constant basis generators closed
// under tau shifts, the operator T, quantum products, scalar-function
// multiples and sums. The zero field is the empty Sum.
//
// QProd is n-ary: QProd(V1..Vm) stands for <<V1...Vm gamma^a>>_0 gamma_a,
// so the binary case is the quantum product and covariant derivatives stay
// inside the closure.
struct FieldExpr {
  enum class Kind { Basis, IndexedBasis, TauPlus, TauMinus, T, QProd, Scaled, Sum };

  Kind kind;
  Insertion ins{};             // Basis
  int index_var = -1;          // IndexedBasis: bound by an enclosing Contract
  bool raised = false;         // IndexedBasis: gamma^a vs gamma_a
  ScalarPtr scale;             // Scaled
  std::vector<FieldPtr> args;  // children
};

// Scalar functions on the big phase space: correlation tensors of fields,
// rational constants, the ansatz unknowns, products, sums and index
// contractions.
struct ScalarExpr {
  enum class Kind { Const, Unknown, Corr, Product, Sum, Contract };

  Kind kind;
  Rational value{};              // Const
  int unknown = 0;               // Unknown: index i of a_i
  int genus = 0;                 // Corr
  std::vector<FieldPtr> fields;  // Corr arguments
  std::vector<ScalarPtr> args;   // Product / Sum
  int index_var = -1;            // Contract
  ScalarPtr body;                // Contract
};

// field builders (normalize zeroes away)
FieldPtr basis(const Insertion& ins);
FieldPtr basis(int level, int cls = 0);
FieldPtr ibasis(int var, bool raised);
FieldPtr tau_plus(FieldPtr f);
FieldPtr tau_minus(FieldPtr f);
FieldPtr op_t(FieldPtr f);
FieldPtr qprod(FieldPtr a, FieldPtr b);
FieldPtr qprod_multi(std::vector<FieldPtr> fs);
FieldPtr scaled(ScalarPtr s, FieldPtr f);
FieldPtr field_sum(std::vector<FieldPtr> fs);
FieldPtr field_zero();
FieldPtr field_negate(FieldPtr f);
bool field_is_zero(const FieldPtr& f);

// scalar builders
ScalarPtr konst(const Rational& r);
ScalarPtr unknown(int i);
ScalarPtr corr(int genus, std::vector<FieldPtr> fields);
ScalarPtr product(std::vector<ScalarPtr> ss);
ScalarPtr scalar_sum(std::vector<ScalarPtr> ss);
ScalarPtr contract(int var, ScalarPtr body);
ScalarPtr scalar_zero();
bool scalar_is_zero(const ScalarPtr& s);

// Covariant derivative along a constant basis direction (the trivial flat
// connection): basis fields are parallel, nabla commutes with tau shifts,
// nabla_X T(V) = T(nabla_X V) - X o V, and the quantum product picks up the
// extra genus-0 term <<V W X gamma^a>> gamma_a.
FieldPtr covariant_derivative(const FieldPtr& f, const Insertion& dir);

// Directional derivative of a scalar: correlators gain the direction as an
// extra argument plus one term per differentiated field slot; derivation
// over products and sums.
ScalarPtr directional_derivative(const ScalarPtr& s, const Insertion& dir);

// Replaces IndexedBasis leaves bound to var: the lowered copy becomes
// gamma_cls, the raised copy expands through the inverse pairing.
ScalarPtr substitute_index(const ScalarPtr& s, int var, int cls,
                           const TheorySpec& spec);

}  // namespace g3trr

#endif
