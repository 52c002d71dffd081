#ifndef G3TRR_THEORY_HPP
#define G3TRR_THEORY_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "g3trr/qmatrix.hpp"
#include "g3trr/rational.hpp"

namespace g3trr {

enum class Theory { Point, CP1 };

std::string theory_name(Theory t);

// Descendant insertion tau_n(gamma_alpha): level n plus a class index.
// Canonical order is (level, class).
struct Insertion {
  int level = 0;
  int cls = 0;
  auto operator<=>(const Insertion&) const = default;
};

std::string insertion_str(Theory t, const Insertion& ins);

// A primitive correlator <tau_{n1,a1} ... tau_{nk,ak}>_{g,d}. Insertions are
// kept sorted so equal multisets compare equal. Point keys carry degree 0.
struct CorrelatorKey {
  Theory theory = Theory::Point;
  int genus = 0;
  std::vector<Insertion> insertions;  // sorted
  int degree = 0;

  CorrelatorKey() = default;
  CorrelatorKey(Theory t, int g, std::vector<Insertion> ins, int d = 0);

  std::string str() const;
  auto operator<=>(const CorrelatorKey&) const = default;
};

// Static description of one cohomological field theory: basis, pairing,
// grading and dimension bookkeeping.
class TheorySpec {
 public:
  static const TheorySpec& get(Theory t);
  static const TheorySpec& point();
  static const TheorySpec& cp1();

  Theory theory() const { return theory_; }
  // number of classes N+1
  int class_count() const { return static_cast<int>(class_degrees_.size()); }
  bool tracks_degree() const { return tracks_degree_; }
  int class_degree(int alpha) const { return class_degrees_[alpha]; }
  const QMatrix& pairing() const { return pairing_; }
  const QMatrix& pairing_inverse() const { return pairing_inv_; }

  // Expansion of gamma^alpha in the basis: list of (beta, eta^{alpha beta}).
  std::vector<std::pair<int, Rational>> metric_raise(int alpha) const;

  // The unique degree at which the correlator can be nonzero, or nullopt on
  // dimension mismatch. Point: 0 iff sum(n_i) = 3g-3+k. CP1: the d >= 0 with
  // sum(n_i + deg a_i) = 2g-2+2d+k, when it exists as an integer.
  std::optional<int> determine_degree(int genus,
                                      std::span<const Insertion> ins) const;

  bool valid_insertion(const Insertion& ins) const {
    return ins.level >= 0 && ins.cls >= 0 && ins.cls < class_count();
  }

 private:
  TheorySpec(Theory t, std::vector<int> class_degrees, QMatrix pairing,
             bool tracks_degree);

  Theory theory_;
  std::vector<int> class_degrees_;
  QMatrix pairing_;
  QMatrix pairing_inv_;
  bool tracks_degree_;
};

}  // namespace g3trr

#endif
