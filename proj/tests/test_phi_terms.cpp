// Transcription guard for the 30 candidate terms: each term's expansion over
// the one-class theory with argument tau_9 is pinned against a hand-derived
// list of monomials. A typo in any builder shifts an atom shape or level and
// breaks its row.

#include <catch2/catch_amalgamated.hpp>

#include "g3trr/ansatz.hpp"

using namespace g3trr;

namespace {

struct ExpectedAtom {
  int genus;
  std::vector<int> levels;
};

struct ExpectedMonomial {
  long coeff;
  std::vector<ExpectedAtom> atoms;
};

PrimitiveForm build_expected(const std::vector<ExpectedMonomial>& monos) {
  std::vector<Monomial> out;
  for (const ExpectedMonomial& em : monos) {
    Monomial m;
    m.coeff = Rational(em.coeff);
    for (const ExpectedAtom& ea : em.atoms) {
      CorrAtom atom;
      atom.genus = ea.genus;
      for (int level : ea.levels) atom.ins.push_back({level, 0});
      std::sort(atom.ins.begin(), atom.ins.end());
      m.atoms.push_back(std::move(atom));
    }
    std::sort(m.atoms.begin(), m.atoms.end());
    out.push_back(std::move(m));
  }
  return PrimitiveForm::merge(std::move(out));
}

bool matches(int term, const std::vector<ExpectedMonomial>& monos) {
  PrimitiveForm got = expand(phi_term(term, basis(9, 0)), TheorySpec::point());
  PrimitiveForm expected = build_expected(monos);
  if (got.size() != expected.size()) return false;
  for (size_t i = 0; i < got.size(); ++i) {
    const Monomial &a = got.monomials()[i], &b = expected.monomials()[i];
    if (!(a.coeff == b.coeff) || a.unknown != b.unknown || a.atoms != b.atoms)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("each candidate term expands to its hand-derived signature") {
  // lead term handled in test_expr; terms use W = tau_9, gamma = tau_0
  CHECK(matches(1, {{1, {{0, {0, 0, 0}}, {2, {10, 0}}}},
                    {-1, {{0, {0, 0, 0}}, {0, {9, 0}}, {2, {0, 0}}}}}));
  CHECK(matches(2, {{1, {{0, {0, 0, 0}}, {2, {9, 1}}}},
                    {-1, {{0, {0, 0, 0}}, {0, {0, 0}}, {2, {9, 0}}}}}));
  CHECK(matches(3, {{1, {{2, {1}}, {0, {0, 9, 0, 0}}}},
                    {-1, {{0, {0, 0}}, {2, {0}}, {0, {0, 9, 0, 0}}}}}));
  CHECK(matches(4, {{1, {{0, {0, 0, 9}}, {1, {0}}, {2, {1}}}},
                    {-1, {{0, {0, 0, 9}}, {0, {0, 0}}, {1, {0}}, {2, {0}}}}}));
  CHECK(matches(5, {{1, {{0, {9, 0, 0}}, {0, {0, 0, 0}}, {2, {0}}}}}));
  CHECK(matches(6, {{1, {{1, {9, 0}}, {0, {0, 0, 0}}, {1, {0, 0}}}}}));
  CHECK(matches(7, {{1, {{1, {0}}, {0, {0, 0, 0}}, {1, {0, 9, 0}}}}}));
  CHECK(matches(8, {{1, {{1, {0}}, {1, {0, 0}}, {0, {0, 9, 0, 0}}}}}));
  CHECK(matches(9, {{1, {{1, {9, 0}}, {0, {0, 0, 0, 0}}, {1, {0}}}}}));
  CHECK(matches(10, {{1, {{1, {0}}, {0, {0, 9, 0, 0, 0}}, {1, {0}}}}}));
  CHECK(matches(11, {{1, {{1, {0, 0}}, {0, {0, 9, 0}}, {1, {0, 0}}}}}));
  CHECK(matches(12, {{1, {{1, {0}}, {1, {0, 0}}, {0, {0, 9, 0}}, {1, {0}}}}}));
  CHECK(matches(13, {{1, {{1, {9, 0}}, {0, {0, 0, 0}}, {1, {0}}, {1, {0}}}}}));
  CHECK(matches(14, {{1, {{1, {0}}, {0, {0, 9, 0, 0}}, {1, {0}}, {1, {0}}}}}));
  CHECK(matches(15, {{1, {{1, {0}}, {0, {0, 9, 0}}, {1, {0, 0, 0}}}}}));
  CHECK(matches(16, {{1, {{1, {9, 0, 0}}, {0, {0, 0, 0}}, {1, {0}}}}}));
  CHECK(matches(17, {{1, {{1, {0, 0}}, {0, {0, 0, 9, 0}}, {1, {0}}}}}));
  CHECK(matches(18, {{1, {{1, {0, 0}}, {0, {0, 0, 0}}, {1, {0, 9}}}}}));
  CHECK(matches(19, {{1, {{1, {9, 0}}, {0, {0, 0, 0, 0, 0}}}}}));
  CHECK(matches(20, {{1, {{1, {0}}, {0, {0, 9, 0, 0, 0, 0}}}}}));
  CHECK(matches(21, {{1, {{1, {9, 0, 0}}, {0, {0, 0, 0, 0}}}}}));
  CHECK(matches(22, {{1, {{1, {0, 0}}, {0, {0, 0, 9, 0, 0}}}}}));
  CHECK(matches(23, {{1, {{0, {9, 0, 0, 0, 0, 0, 0}}}}}));
  CHECK(matches(24, {{1, {{0, {9, 0, 0}}, {1, {0}}, {1, {0, 0, 0}}}}}));
  CHECK(matches(25, {{1, {{0, {0, 0, 0}}, {1, {9, 0, 0, 0}}}}}));
  CHECK(matches(26, {{1, {{1, {0, 0, 0}}, {0, {0, 9, 0, 0}}}}}));
  CHECK(matches(27, {{1, {{0, {0, 9, 0}}, {1, {0, 0, 0, 0}}}}}));
  CHECK(matches(28, {{1, {{0, {9, 0, 0}}, {2, {1, 0}}}},
                     {-1, {{0, {9, 0, 0}}, {0, {0, 0}}, {2, {0, 0}}}}}));
  CHECK(matches(29, {{1, {{1, {9, 0, 0, 0}}, {0, {0, 0, 0}}}}}));
  CHECK(matches(30, {{1, {{1, {0, 0, 0}}, {0, {9, 0, 0, 0}}}}}));
}
