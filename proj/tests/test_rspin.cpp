#include <catch2/catch_amalgamated.hpp>

#include "g3trr/rspin.hpp"

using namespace g3trr;

namespace {

SpinCorrelatorId one(int n, int a) {
  return SpinCorrelatorId(3, {Insertion{n, a}});
}
SpinCorrelatorId two(int n1, int a1, int n2, int a2) {
  return SpinCorrelatorId(3, {Insertion{n1, a1}, Insertion{n2, a2}});
}

}  // namespace

TEST_CASE("one-point genus-3 admissible sets per r") {
  CHECK(admissible_insertions(SpinSpec(2), 3, 1) ==
        std::vector<AdmissibleEntry>{{one(7, 0), 0}});
  CHECK(admissible_insertions(SpinSpec(3), 3, 1) ==
        std::vector<AdmissibleEntry>{{one(6, 1), 1}});
  CHECK(admissible_insertions(SpinSpec(4), 3, 1) ==
        std::vector<AdmissibleEntry>{{one(6, 0), 1}});
  CHECK(admissible_insertions(SpinSpec(5), 3, 1).empty());
  CHECK(admissible_insertions(SpinSpec(6), 3, 1) ==
        std::vector<AdmissibleEntry>{{one(5, 4), 2}});
  CHECK(admissible_insertions(SpinSpec(7), 3, 1) ==
        std::vector<AdmissibleEntry>{{one(5, 4), 2}});
}

TEST_CASE("two-point genus-3 admissible set at r = 3") {
  auto got = admissible_insertions(SpinSpec(3), 3, 2);
  std::vector<AdmissibleEntry> expected = {
      {two(0, 0, 7, 1), 1}, {two(0, 1, 7, 0), 1}, {two(1, 0, 6, 1), 1},
      {two(1, 1, 6, 0), 1}, {two(2, 0, 5, 1), 1}, {two(2, 1, 5, 0), 1},
      {two(3, 0, 4, 1), 1}, {two(3, 1, 4, 0), 1}};
  std::sort(expected.begin(), expected.end(),
            [](const auto& x, const auto& y) { return x.id < y.id; });
  CHECK(got == expected);
}

TEST_CASE("reference table values") {
  auto r3 = proposition_table(3);
  auto find = [&](const SpinCorrelatorId& id) -> std::optional<Rational> {
    for (auto& e : r3)
      if (e.id == id) return e.value;
    return std::nullopt;
  };
  CHECK(find(one(6, 1)) == Rational(1, 31104));
  CHECK(find(two(2, 0, 5, 1)) == Rational(103, 217728));
  CHECK(find(two(0, 0, 7, 1)) == Rational(1, 31104));

  auto r4 = proposition_table(4);
  REQUIRE(r4.size() == 1);
  CHECK(r4[0].id == one(6, 0));
  CHECK(r4[0].value == Rational(3, 20480));

  auto r6 = proposition_table(6);
  REQUIRE(r6.size() == 1);
  CHECK(r6[0].value == Rational(2561, 20901888));

  CHECK(proposition_table(5).empty());
  auto r7 = proposition_table(7);
  REQUIRE(r7.size() == 1);
  CHECK(r7[0].id == one(5, 4));
  CHECK_FALSE(r7[0].value.has_value());
}

TEST_CASE("admissible sets contain every reference entry") {
  for (int r : {2, 3, 4, 5, 6, 7}) {
    auto table = proposition_table(r);
    for (int k : {1, 2}) {
      auto admissible = admissible_insertions(SpinSpec(r), 3, k);
      for (const PropositionEntry& e : table) {
        if (e.id.insertions.size() != size_t(k)) continue;
        bool found = false;
        for (const AdmissibleEntry& a : admissible) found |= a.id == e.id;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("spin pairing is symmetric and involutive") {
  for (int r : {2, 3, 4, 5, 6, 7}) {
    SpinSpec spec(r);
    for (int a = 0; a <= r - 2; ++a) {
      CHECK(spec.raise_class(spec.raise_class(a)) == a);
      for (int b = 0; b <= r - 2; ++b) {
        CHECK(spec.pairing(a, b) == spec.pairing(b, a));
        CHECK(spec.pairing(a, b) ==
              (b == spec.raise_class(a) ? Rational(1) : Rational(0)));
      }
    }
  }
  // r = 3 matches the CP1 pairing shape
  SpinSpec r3(3);
  const QMatrix& eta = TheorySpec::cp1().pairing();
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      CHECK(r3.pairing(a, b) == eta.at(a, b));
}

TEST_CASE("r = 2 reduces to the point theory") {
  Oracle point(TheorySpec::point(), builtin_point_seeds());
  SpinCrossCheck check = cross_check_r2(point);
  CHECK(check.admissible_set_ok);
  CHECK(check.spin_value == Rational(1, 82944));
  CHECK(check.point_value == Rational(1, 82944));
  CHECK(check.ok);
}

TEST_CASE("r below 2 is rejected") {
  CHECK_THROWS_AS(SpinSpec(1), std::invalid_argument);
}
