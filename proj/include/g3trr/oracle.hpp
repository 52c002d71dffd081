#ifndef G3TRR_ORACLE_HPP
#define G3TRR_ORACLE_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "g3trr/theory.hpp"

namespace g3trr {

// Seed values for primitive correlators that the string/dilaton/divisor
// reductions bottom out in.
class SeedTable {
 public:
  explicit SeedTable(Theory t) : theory_(t) {}

  Theory theory() const { return theory_; }
  const std::map<CorrelatorKey, Rational>& entries() const { return map_; }

  std::optional<Rational> find(const CorrelatorKey& key) const;
  // Inserts or, when the key exists with a different value, throws
  // ConflictingSeed unless replace is set.
  void insert(const CorrelatorKey& key, const Rational& value,
              bool replace = false);

 private:
  Theory theory_;
  std::map<CorrelatorKey, Rational> map_;
};

SeedTable builtin_point_seeds();
SeedTable builtin_cp1_seeds();

// Built-in table for the theory, with records from the optional override
// file replacing/extending built-ins. Conflicting overrides must be marked
// explicitly in the file; silent contradictions throw ConflictingSeed.
SeedTable load_seed_table(Theory t,
                          const std::optional<std::string>& override_path);

// Exact evaluation of primitive correlators at the origin: dimension gate,
// then repeated elimination of the leftmost removable insertion via the
// string / dilaton / (CP1) divisor equation, then seed lookup.
class Oracle {
 public:
  Oracle(const TheorySpec& spec, SeedTable seeds);

  const TheorySpec& spec() const { return spec_; }
  const SeedTable& seeds() const { return seeds_; }

  // Throws IrreducibleCorrelator when the reduction leaves the seed closure
  // and InvalidKey on malformed input. Pure in key; memoized internally.
  Rational evaluate(const CorrelatorKey& key) const;

  // True for the insertion a reduction equation can eliminate.
  static bool removable(Theory t, const Insertion& ins);

 private:
  Rational reduce(const CorrelatorKey& key) const;

  const TheorySpec& spec_;
  SeedTable seeds_;
  mutable std::mutex mu_;
  mutable std::map<CorrelatorKey, Rational> memo_;
};

}  // namespace g3trr

#endif
