#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "g3trr/oracle.hpp"
#include "g3trr/theory.hpp"

using namespace g3trr;

TEST_CASE("pairings are symmetric and inverse to themselves") {
  for (Theory t : {Theory::Point, Theory::CP1}) {
    const TheorySpec& spec = TheorySpec::get(t);
    const QMatrix& eta = spec.pairing();
    for (int a = 0; a < spec.class_count(); ++a)
      for (int b = 0; b < spec.class_count(); ++b)
        CHECK(eta.at(a, b) == eta.at(b, a));
    CHECK(matmul(eta, spec.pairing_inverse()) ==
          QMatrix::identity(spec.class_count()));
  }
}

TEST_CASE("metric raise expansions") {
  using P = std::vector<std::pair<int, Rational>>;
  CHECK(TheorySpec::point().metric_raise(0) == P{{0, Rational(1)}});
  CHECK(TheorySpec::cp1().metric_raise(0) == P{{1, Rational(1)}});
  CHECK(TheorySpec::cp1().metric_raise(1) == P{{0, Rational(1)}});
}

TEST_CASE("raise followed by lower is the identity on basis indices") {
  for (Theory t : {Theory::Point, Theory::CP1}) {
    const TheorySpec& spec = TheorySpec::get(t);
    for (int a = 0; a < spec.class_count(); ++a) {
      // gamma^a = sum eta^{ab} gamma_b, then lower with eta
      std::vector<Rational> lowered(spec.class_count());
      for (auto& [b, coef] : spec.metric_raise(a))
        for (int c = 0; c < spec.class_count(); ++c)
          lowered[c] += coef * spec.pairing().at(b, c);
      for (int c = 0; c < spec.class_count(); ++c)
        CHECK(lowered[c] == (c == a ? Rational(1) : Rational(0)));
    }
  }
}

TEST_CASE("determine_degree on pinned examples") {
  const TheorySpec& point = TheorySpec::point();
  const TheorySpec& cp1 = TheorySpec::cp1();
  std::vector<Insertion> t7 = {{7, 0}};
  CHECK(point.determine_degree(3, t7) == 0);
  std::vector<Insertion> t21 = {{2, 1}};
  CHECK(cp1.determine_degree(1, t21) == 1);
  std::vector<Insertion> t2 = {{2, 0}};
  CHECK_FALSE(point.determine_degree(2, t2).has_value());
}

TEST_CASE("determine_degree is permutation invariant") {
  std::mt19937 rng(3);
  const TheorySpec& cp1 = TheorySpec::cp1();
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Insertion> ins;
    int k = 1 + int(rng() % 5);
    for (int i = 0; i < k; ++i)
      ins.push_back({int(rng() % 6), int(rng() % 2)});
    auto expected = cp1.determine_degree(2, ins);
    std::shuffle(ins.begin(), ins.end(), rng);
    CHECK(cp1.determine_degree(2, ins) == expected);
  }
}

TEST_CASE("every seed key sits at its stated degree") {
  for (Theory t : {Theory::Point, Theory::CP1}) {
    const TheorySpec& spec = TheorySpec::get(t);
    SeedTable seeds = load_seed_table(t, std::nullopt);
    for (auto& [key, value] : seeds.entries()) {
      auto d = spec.determine_degree(key.genus, key.insertions);
      REQUIRE(d.has_value());
      CHECK(*d == key.degree);
    }
  }
}

TEST_CASE("correlator keys canonicalize the insertion multiset") {
  CorrelatorKey a(Theory::CP1, 2, {{3, 0}, {1, 1}, {2, 0}}, 1);
  CorrelatorKey b(Theory::CP1, 2, {{2, 0}, {3, 0}, {1, 1}}, 1);
  CHECK(a == b);
  CHECK(a.str() == "<t1,1 t2,0 t3,0>_{2,1}");
  CorrelatorKey p(Theory::Point, 3, {{7, 0}}, 0);
  CHECK(p.str() == "<t7>_{3}");
}
