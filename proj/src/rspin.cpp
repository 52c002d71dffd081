#include "g3trr/rspin.hpp"

#include <algorithm>
#include <functional>

#include "g3trr/errors.hpp"

namespace g3trr {

SpinSpec::SpinSpec(int r_) : r(r_) {
  if (r < 2) throw std::invalid_argument("spin theory needs r >= 2");
}

Rational SpinSpec::pairing(int a, int b) const {
  return a + b == r - 2 ? Rational(1) : Rational(0);
}

int SpinSpec::raise_class(int a) const {
  if (a < 0 || a > r - 2) throw InvalidKey("spin class out of range");
  return r - 2 - a;
}

SpinCorrelatorId::SpinCorrelatorId(int g, std::vector<Insertion> ins)
    : genus(g), insertions(std::move(ins)) {
  std::sort(insertions.begin(), insertions.end());
}

std::string SpinCorrelatorId::str() const {
  std::string s = "<";
  for (size_t i = 0; i < insertions.size(); ++i) {
    if (i) s += " ";
    s += "t" + std::to_string(insertions[i].level) + "," +
         std::to_string(insertions[i].cls);
  }
  return s + ">_" + std::to_string(genus);
}

std::vector<AdmissibleEntry> admissible_insertions(const SpinSpec& spec,
                                                   int genus, int points) {
  std::vector<AdmissibleEntry> out;
  const int dim = 3 * genus - 3 + points;
  if (points < 0 || dim < 0) return out;

  // non-decreasing sequences of (level, class) enumerate the multisets
  std::vector<Insertion> current(points);
  auto emit = [&]() {
    long class_sum = 0, level_sum = 0;
    for (const Insertion& i : current) {
      class_sum += i.cls;
      level_sum += i.level;
    }
    long num = (2 - 2 * genus + class_sum);
    if (num % spec.r != 0) return;
    long d_num = (spec.r - 2) * (genus - 1) + class_sum;
    if (d_num % spec.r != 0) return;
    long D = d_num / spec.r;
    if (D < 0) return;
    if (level_sum + D != dim) return;
    out.push_back(
        {SpinCorrelatorId(genus, current), static_cast<int>(D)});
  };

  std::function<void(int, Insertion)> rec = [&](int slot, Insertion min_ins) {
    if (slot == points) {
      emit();
      return;
    }
    for (int n = min_ins.level; n <= dim; ++n) {
      int a0 = n == min_ins.level ? min_ins.cls : 0;
      for (int a = a0; a <= spec.r - 2; ++a) {
        current[slot] = {n, a};
        rec(slot + 1, {n, a});
      }
    }
  };
  rec(0, {0, 0});

  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.id < y.id;
  });
  return out;
}

std::vector<PropositionEntry> proposition_table(int r) {
  auto id1 = [&](int n, int a) {
    return SpinCorrelatorId(3, {Insertion{n, a}});
  };
  auto id2 = [&](int n1, int a1, int n2, int a2) {
    return SpinCorrelatorId(3, {Insertion{n1, a1}, Insertion{n2, a2}});
  };
  std::vector<PropositionEntry> out;
  switch (r) {
    case 2:
      out.push_back({id1(7, 0), Rational(1, 82944)});
      break;
    case 3:
      out.push_back({id1(6, 1), Rational(1, 31104)});
      out.push_back({id2(7, 0, 0, 1), Rational(1, 15552)});
      out.push_back({id2(6, 0, 1, 1), Rational(19, 77760)});
      out.push_back({id2(5, 0, 2, 1), Rational(47, 77760)});
      out.push_back({id2(4, 0, 3, 1), Rational(67, 77760)});
      out.push_back({id2(3, 0, 4, 1), Rational(443, 77760)});
      out.push_back({id2(2, 0, 5, 1), Rational(103, 217728)});
      out.push_back({id2(1, 0, 6, 1), Rational(5, 31104)});
      out.push_back({id2(0, 0, 7, 1), Rational(1, 31104)});
      break;
    case 4:
      out.push_back({id1(6, 0), Rational(3, 20480)});
      break;
    case 5:
      break;  // all 1-point genus-3 correlators vanish for dimensional reasons
    case 6:
      out.push_back({id1(5, 4), Rational(2561, 20901888)});
      break;
    default:
      if (r >= 7) out.push_back({id1(5, 4), std::nullopt});
      break;
  }
  return out;
}

SpinCrossCheck cross_check_r2(const Oracle& point_oracle) {
  SpinCrossCheck check;
  check.spin_value = proposition_table(2).at(0).value.value();
  check.point_value = point_oracle.evaluate(
      CorrelatorKey(Theory::Point, 3, {Insertion{7, 0}}, 0));

  auto admissible = admissible_insertions(SpinSpec(2), 3, 1);
  check.admissible_set_ok =
      admissible.size() == 1 && admissible[0].virtual_degree == 0 &&
      admissible[0].id == SpinCorrelatorId(3, {Insertion{7, 0}});
  check.ok = check.admissible_set_ok && check.spin_value == check.point_value;
  return check;
}

}  // namespace g3trr
