#include "g3trr/oracle.hpp"

#include "g3trr/errors.hpp"

namespace g3trr {

Oracle::Oracle(const TheorySpec& spec, SeedTable seeds)
    : spec_(spec), seeds_(std::move(seeds)) {
  if (seeds_.theory() != spec_.theory())
    throw std::invalid_argument("oracle: seed table theory mismatch");
}

bool Oracle::removable(Theory t, const Insertion& ins) {
  if (t == Theory::Point) return ins.cls == 0 && ins.level <= 1;
  // CP1: string t_{0,0}, divisor t_{0,1}, dilaton t_{1,0}
  return (ins.level == 0 && ins.cls <= 1) || (ins.level == 1 && ins.cls == 0);
}

namespace {

bool unstable(int genus, size_t k, int degree) {
  if (degree != 0) return false;
  return (genus == 0 && k <= 2) || (genus == 1 && k == 0);
}

std::vector<Insertion> erase_at(const std::vector<Insertion>& v, size_t idx) {
  std::vector<Insertion> out;
  out.reserve(v.size() - 1);
  for (size_t i = 0; i < v.size(); ++i)
    if (i != idx) out.push_back(v[i]);
  return out;
}

}  // namespace

Rational Oracle::evaluate(const CorrelatorKey& key) const {
  if (key.theory != spec_.theory())
    throw InvalidKey("oracle: theory mismatch for " + key.str());
  if (key.genus < 0 || key.degree < 0)
    throw InvalidKey("oracle: negative genus or degree in " + key.str());
  if (spec_.theory() == Theory::Point && key.degree != 0)
    throw InvalidKey("oracle: point key must carry degree 0");
  for (const Insertion& ins : key.insertions)
    if (!spec_.valid_insertion(ins))
      throw InvalidKey("oracle: invalid insertion in " + key.str());

  auto admissible = spec_.determine_degree(key.genus, key.insertions);
  if (!admissible || *admissible != key.degree) return Rational(0);

  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Rational value = reduce(key);
  {
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(key, value);
  }
  return value;
}

Rational Oracle::reduce(const CorrelatorKey& key) const {
  const Theory t = spec_.theory();
  const int g = key.genus;
  const int d = key.degree;

  // leftmost removable insertion in canonical order
  size_t idx = key.insertions.size();
  for (size_t i = 0; i < key.insertions.size(); ++i) {
    if (removable(t, key.insertions[i])) {
      idx = i;
      break;
    }
  }

  if (idx == key.insertions.size()) {
    if (auto v = seeds_.find(key)) return *v;
    if (unstable(g, key.insertions.size(), d)) return Rational(0);
    throw IrreducibleCorrelator(key.str());
  }

  const Insertion removed = key.insertions[idx];
  std::vector<Insertion> rest = erase_at(key.insertions, idx);
  const int k = static_cast<int>(rest.size());
  Rational value;

  auto eval_rest = [&](std::vector<Insertion> ins) {
    return evaluate(CorrelatorKey(t, g, std::move(ins), d));
  };

  if (removed.level == 0 && removed.cls == 0) {
    // string equation
    for (int j = 0; j < k; ++j) {
      if (rest[j].level == 0) continue;  // negative level is the zero field
      std::vector<Insertion> child = rest;
      child[j].level -= 1;
      value += eval_rest(std::move(child));
    }
    if (g == 0 && k == 2 && rest[0].level == 0 && rest[1].level == 0) {
      if (t == Theory::Point)
        value += Rational(1);
      else if (d == 0 && rest[0].cls + rest[1].cls == 1)
        value += Rational(1);
    }
  } else if (removed.level == 1 && removed.cls == 0) {
    // dilaton equation
    value = Rational(2 * g - 2 + k) * eval_rest(rest);
    if (g == 1 && k == 0) {
      if (t == Theory::Point)
        value += Rational(1, 24);
      else if (d == 0)
        value += Rational(1, 12);
    }
  } else {
    // CP1 divisor equation for t_{0,1}
    value = Rational(d) * eval_rest(rest);
    for (int j = 0; j < k; ++j) {
      if (rest[j].cls != 0 || rest[j].level == 0) continue;
      std::vector<Insertion> child = rest;
      child[j].level -= 1;
      child[j].cls = 1;
      value += eval_rest(std::move(child));
    }
    // tau_{0,0} partners also shift to level -1 and vanish, so only the
    // delta terms remain of them
    if (g == 0 && d == 0 && k == 2 && rest[0].level == 0 &&
        rest[1].level == 0 && rest[0].cls == 0 && rest[1].cls == 0)
      value += Rational(1);
    if (g == 1 && d == 0 && k == 0) value -= Rational(1, 24);
  }
  return value;
}

}  // namespace g3trr
