#ifndef G3TRR_ANSATZ_HPP
#define G3TRR_ANSATZ_HPP

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "g3trr/eval.hpp"

namespace g3trr {

inline constexpr int kUnknownCount = 30;

// Both theory oracles bundled; relation derivation and verification sweeps
// pick by theory.
struct Oracles {
  Oracle point;
  Oracle cp1;

  static Oracles with_builtin_seeds();
  static Oracles from_tables(SeedTable point_seeds, SeedTable cp1_seeds);
  const Oracle& get(Theory t) const {
    return t == Theory::Point ? point : cp1;
  }
};

// The universal genus-3 ansatz 0 = Phi(W): the lead term -<<T^3(W)>>_3 plus
// 30 candidate lower-genus terms with coefficients a_1..a_30. a_1 is fixed
// to zero in symbolic mode (its term is expressible through the others).
ScalarPtr build_phi_symbolic(const FieldPtr& argument);
ScalarPtr build_phi_fixed(const FieldPtr& argument,
                          std::span<const Rational> coeffs30);

// Total number of transcribed terms (lead + 30).
int phi_term_count();
// The i-th term body: i = 0 the lead correlator <<T^3(W)>>_3 (unsigned),
// i = 1..30 the a_i term.
ScalarPtr phi_term(int i, const FieldPtr& argument);

struct ManifestEntry {
  Theory theory = Theory::Point;
  std::vector<Insertion> directions;
  Insertion argument;
  int q_degree = 0;

  std::string str() const;
};

// The 12 point rows and 17 CP1 rows, in printed order.
std::vector<ManifestEntry> default_manifest();
std::vector<ManifestEntry> load_manifest(const std::string& path);

// One derived linear relation 0 = constant + sum_i coeffs[i] * a_i.
struct Relation {
  ManifestEntry entry;
  Rational constant;
  std::map<int, Rational> coeffs;

  std::string str() const;
  bool operator==(const Relation&) const = default;
};

// Applies the derivative directions to symbolic Phi(argument), expands,
// evaluates at the origin and extracts the stated q-degree. Propagates
// IrreducibleCorrelator (a hard failure for manifest entries).
Relation derive_relation(const ManifestEntry& entry, const Oracles& oracles);
// Same relation through the other route: expand Phi first, then
// differentiate the primitive form.
Relation derive_relation_expanded(const ManifestEntry& entry,
                                  const Oracles& oracles);

struct LinearSystem {
  std::vector<int> unknown_order;  // a_2 .. a_30
  QMatrix coeffs;
  std::vector<Rational> rhs;
  std::vector<Relation> relations;
};

LinearSystem assemble_system(const std::vector<ManifestEntry>& manifest,
                             const Oracles& oracles);

// Solves the assembled system; returns the full 30-vector a_1..a_30 with
// a_1 = 0. Throws SingularSystem / InconsistentSystem.
std::array<Rational, kUnknownCount> solve_coefficients(
    const LinearSystem& system);
std::array<Rational, kUnknownCount> solve_default_coefficients(
    const Oracles& oracles);

struct SweepSpec {
  int max_derivatives = 0;
  std::vector<Insertion> direction_pool;
  std::vector<Insertion> argument_pool;
};

SweepSpec default_point_sweep();
SweepSpec default_cp1_sweep();

// One (directions, argument, q-degree) unit of a verification run.
struct ComboResult {
  std::vector<Insertion> directions;
  Insertion argument;
  int q_degree = 0;
  enum class Status { Zero, NonZero, Skipped } status = Status::Zero;
  Rational residual;            // nonzero residual when Status::NonZero
  std::string irreducible_key;  // offending atom when Status::Skipped
};

struct VerifyReport {
  Theory theory = Theory::Point;
  size_t checked = 0;
  size_t skipped = 0;
  size_t failures = 0;
  std::vector<ComboResult> problems;  // non-zero and skipped units
};

// Evaluates fixed-coefficient Phi over every direction multiset of size up
// to max_derivatives, every argument, and every Novikov degree the expansion
// reaches. Every evaluable unit must be exactly zero.
VerifyReport verify_identity(Theory theory, const SweepSpec& sweep,
                             std::span<const Rational> coeffs30,
                             const Oracles& oracles);

// Evaluates exactly the manifest units at their stated degrees.
VerifyReport verify_manifest(const std::vector<ManifestEntry>& manifest,
                             std::span<const Rational> coeffs30,
                             const Oracles& oracles);

}  // namespace g3trr

#endif
