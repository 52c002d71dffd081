#include "g3trr/theory.hpp"

#include <algorithm>

#include "g3trr/errors.hpp"

namespace g3trr {

std::string theory_name(Theory t) {
  return t == Theory::Point ? "point" : "cp1";
}

std::string insertion_str(Theory t, const Insertion& ins) {
  std::string s = "t" + std::to_string(ins.level);
  if (t == Theory::CP1) s += "," + std::to_string(ins.cls);
  return s;
}

CorrelatorKey::CorrelatorKey(Theory t, int g, std::vector<Insertion> ins, int d)
    : theory(t), genus(g), insertions(std::move(ins)), degree(d) {
  std::sort(insertions.begin(), insertions.end());
}

std::string CorrelatorKey::str() const {
  std::string s = "<";
  for (size_t i = 0; i < insertions.size(); ++i) {
    if (i) s += " ";
    s += insertion_str(theory, insertions[i]);
  }
  s += ">_{" + std::to_string(genus);
  if (theory == Theory::CP1) s += "," + std::to_string(degree);
  s += "}";
  return s;
}

TheorySpec::TheorySpec(Theory t, std::vector<int> class_degrees,
                       QMatrix pairing, bool tracks_degree)
    : theory_(t),
      class_degrees_(std::move(class_degrees)),
      pairing_(std::move(pairing)),
      tracks_degree_(tracks_degree) {
  // invert the pairing (tiny and exact)
  const size_t n = pairing_.rows();
  QMatrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = pairing_.at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  RrefResult r = rref(aug);
  if (r.rank != n) throw std::invalid_argument("pairing not invertible");
  pairing_inv_ = QMatrix(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      pairing_inv_.at(i, j) = r.reduced.at(i, n + j);
}

const TheorySpec& TheorySpec::point() {
  static const TheorySpec spec = [] {
    QMatrix eta(1, 1);
    eta.at(0, 0) = Rational(1);
    return TheorySpec(Theory::Point, {0}, eta, false);
  }();
  return spec;
}

const TheorySpec& TheorySpec::cp1() {
  static const TheorySpec spec = [] {
    QMatrix eta(2, 2);
    eta.at(0, 1) = Rational(1);
    eta.at(1, 0) = Rational(1);
    return TheorySpec(Theory::CP1, {0, 1}, eta, true);
  }();
  return spec;
}

const TheorySpec& TheorySpec::get(Theory t) {
  return t == Theory::Point ? point() : cp1();
}

std::vector<std::pair<int, Rational>> TheorySpec::metric_raise(int alpha) const {
  if (alpha < 0 || alpha >= class_count())
    throw InvalidKey("metric_raise: class index out of range");
  std::vector<std::pair<int, Rational>> out;
  for (int beta = 0; beta < class_count(); ++beta) {
    const Rational& c = pairing_inv_.at(alpha, beta);
    if (!c.is_zero()) out.emplace_back(beta, c);
  }
  return out;
}

std::optional<int> TheorySpec::determine_degree(
    int genus, std::span<const Insertion> ins) const {
  const int k = static_cast<int>(ins.size());
  long total = 0;
  for (const Insertion& i : ins) total += i.level + class_degree(i.cls);
  if (!tracks_degree_) {
    // point: dimension of Mbar_{g,k} must be filled exactly
    return total == 3L * genus - 3 + k ? std::optional<int>(0) : std::nullopt;
  }
  // CP1 virtual dimension: sum(n_i + deg a_i) = 2g - 2 + 2d + k
  long twice_d = total - (2L * genus - 2 + k);
  if (twice_d < 0 || twice_d % 2 != 0) return std::nullopt;
  return static_cast<int>(twice_d / 2);
}

}  // namespace g3trr
