#ifndef G3TRR_RSPIN_HPP
#define G3TRR_RSPIN_HPP

#include <optional>
#include <string>
#include <vector>

#include "g3trr/oracle.hpp"
#include "g3trr/theory.hpp"

namespace g3trr {

// r-spin theory metadata: classes 0..r-2 with the antidiagonal pairing
// eta_{ab} = delta_{a+b, r-2}.
struct SpinSpec {
  int r;

  explicit SpinSpec(int r_);
  int class_count() const { return r - 1; }
  Rational pairing(int a, int b) const;
  // single partner under eta^{-1}
  int raise_class(int a) const;
};

struct SpinCorrelatorId {
  int genus = 0;
  std::vector<Insertion> insertions;  // sorted; cls in [0, r-2]

  SpinCorrelatorId() = default;
  SpinCorrelatorId(int g, std::vector<Insertion> ins);
  std::string str() const;
  auto operator<=>(const SpinCorrelatorId&) const = default;
};

struct AdmissibleEntry {
  SpinCorrelatorId id;
  int virtual_degree = 0;  // D = ((r-2)(g-1) + sum a_i) / r

  bool operator==(const AdmissibleEntry&) const = default;
};

// All insertion tuples passing the selection rules: D a non-negative
// integer with (2 - 2g + sum a_i) divisible by r, and psi-levels filling
// sum n_i + D = 3g - 3 + k.
std::vector<AdmissibleEntry> admissible_insertions(const SpinSpec& spec,
                                                   int genus, int points);

struct PropositionEntry {
  SpinCorrelatorId id;
  // nullopt for the r >= 7 one-point correlator: reducible to genus-0
  // 5-point values that are not tabulated here
  std::optional<Rational> value;
};

// Reference values of the possible nontrivial genus-3 correlators per r.
std::vector<PropositionEntry> proposition_table(int r);

struct SpinCrossCheck {
  Rational spin_value;
  Rational point_value;
  bool admissible_set_ok = false;
  bool ok = false;
};

// r = 2 reduces to the point theory: the lone admissible 1-point genus-3
// correlator must equal the point oracle's value.
SpinCrossCheck cross_check_r2(const Oracle& point_oracle);

}  // namespace g3trr

#endif
